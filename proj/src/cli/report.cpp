#include "acsum/cli/report.hpp"

#include "acsum/cli/lexer.hpp"

#include <json.hpp>

#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

namespace acsum::cli {

namespace {

using nlohmann::json;

json to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out;
}

std::string check_line(const CheckResult& c) {
  std::string out = to_string(c.outcome);
  if (c.outcome == CheckResult::Outcome::not_applicable) return out + " (" + c.note + ")";
  out += " lhs=" + c.lhs.str() + " rhs=" + c.rhs.str() + " (" + c.relation + ")";
  return out;
}

json check_json(const CheckResult& c) {
  json j{{"name", c.name}, {"outcome", to_string(c.outcome)}};
  if (c.outcome == CheckResult::Outcome::not_applicable) {
    j["note"] = c.note;
  } else {
    j["lhs"] = to_json(c.lhs);
    j["rhs"] = to_json(c.rhs);
    j["relation"] = c.relation;
  }
  return j;
}

std::string modulus_text(const ObstructionCoefficient& c) { return c.modulus() ? c.modulus()->str() : "none"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int exit_code_for(Status status) {
  switch (status) {
    case Status::admits: return kAdmits;
    case Status::not_admits: return kNotAdmits;
    case Status::unknown: return kUnknown;
  }
  return kInputError;
}

Report make_report(const ResolvedQuery& query, Verdict verdict) {
  Report r;
  r.query = print(query.expression);
  for (const auto& s : query.summands) r.summand_labels.push_back(s.label);
  r.verdict = std::move(verdict);
  return r;
}

std::string Report::text() const {
  const auto& f = verdict.formal;
  std::ostringstream os;
  os << "query = " << query << "\n";
  os << "summands = " << summand_labels.size() << "\n";
  os << "dimension = " << f.dimension << "\n";
  os << "euler_characteristic = " << f.euler_characteristic.str() << "\n";
  os << "signature = " << f.signature.str() << "\n";
  for (const auto& [label, value] : f.pontrjagin_numbers) os << "pontrjagin_number." << label << " = " << value.str() << "\n";
  os << "connectivity = " << (f.connectivity ? std::to_string(*f.connectivity) : "unknown") << "\n";
  for (const auto& c : verdict.checks) os << "check." << c.name << " = " << check_line(c) << "\n";
  os << "verdict = " << to_string(verdict.status) << "\n";

  switch (verdict.status) {
    case Status::admits: {
      const auto& cert = *verdict.admits;
      std::vector<std::string> ks;
      for (const auto& p : cert.parts) ks.push_back(p.k().str());
      os << "certificate.assignment = " << join(cert.structures) << "\n";
      os << "certificate.coefficients = " << join(ks) << "\n";
      os << "certificate.correction = -" << (cert.parts.size() - 1) << "\n";
      os << "certificate.total = " << cert.total.k().str() << "\n";
      os << "certificate.modulus = " << modulus_text(cert.total) << "\n";
      os << "certificate.external = " << (cert.uses_external ? "true" : "false") << "\n";
      break;
    }
    case Status::not_admits: {
      const auto& c = *verdict.failed_check;
      os << "certificate.failed_check = " << c.name << "\n";
      os << "certificate.lhs = " << c.lhs.str() << "\n";
      os << "certificate.rhs = " << c.rhs.str() << "\n";
      os << "certificate.relation = " << c.relation << "\n";
      break;
    }
    case Status::unknown: {
      std::vector<std::string> ks;
      for (const auto& k : verdict.coefficients_examined) ks.push_back(k.str());
      os << "certificate.coefficients_examined = " << join(ks) << "\n";
      os << "certificate.assignments_explored = " << verdict.assignments_explored << "\n";
      os << "certificate.bound_reached = " << (verdict.bound_reached ? "true" : "false") << "\n";
      break;
    }
  }
  for (const auto& note : verdict.notes) os << "note = " << note << "\n";
  os << "exit_code = " << exit_code() << "\n";
  return os.str();
}

std::string Report::machine() const {
  const auto& f = verdict.formal;
  json numbers = json::object();
  for (const auto& [label, value] : f.pontrjagin_numbers) numbers[label] = to_json(value);
  json checks = json::array();
  for (const auto& c : verdict.checks) checks.push_back(check_json(c));

  json cert = json::object();
  switch (verdict.status) {
    case Status::admits: {
      const auto& a = *verdict.admits;
      json ks = json::array();
      for (const auto& p : a.parts) ks.push_back(to_json(p.k()));
      cert = {{"assignment", a.structures},
              {"coefficients", ks},
              {"total", to_json(a.total.k())},
              {"modulus", a.total.modulus() ? to_json(*a.total.modulus()) : json(nullptr)},
              {"external", a.uses_external}};
      break;
    }
    case Status::not_admits:
      cert = {{"failed_check", check_json(*verdict.failed_check)}};
      break;
    case Status::unknown: {
      json ks = json::array();
      for (const auto& k : verdict.coefficients_examined) ks.push_back(to_json(k));
      cert = {{"coefficients_examined", ks},
              {"assignments_explored", verdict.assignments_explored},
              {"bound_reached", verdict.bound_reached}};
      break;
    }
  }

  json j{{"query", query},
         {"summands", summand_labels},
         {"formal_invariants",
          {{"dimension", f.dimension},
           {"euler_characteristic", to_json(f.euler_characteristic)},
           {"signature", to_json(f.signature)},
           {"pontrjagin_numbers", numbers},
           {"connectivity", f.connectivity ? json(*f.connectivity) : json(nullptr)}}},
         {"checks", checks},
         {"verdict", {{"status", to_string(verdict.status)}, {"certificate", cert}}},
         {"notes", verdict.notes},
         {"exit_code", exit_code()}};
  return j.dump();
}

int run(const Options& options, std::ostream& out, std::ostream& err) {
  try {
    if (options.search_bound < 1) {
      err << "error: --search-bound must be at least 1\n";
      return kUsageError;
    }
    InputSet inputs;
    for (const auto& path : options.manifold_files) load_definitions(read_file(path), path, inputs);
    if (options.structures_file) load_definitions(read_file(*options.structures_file), *options.structures_file, inputs);
    if (options.modulus_file) load_modulus_table(read_file(*options.modulus_file), *options.modulus_file, inputs);

    const Catalog catalog(std::move(inputs));
    const Expression expr = parse(options.query);
    const ResolvedQuery resolved = catalog.resolve(expr, options.search_bound);
    Report report = make_report(resolved, decide(resolved.summands, resolved.space, catalog.moduli()));
    out << (options.machine ? report.machine() + "\n" : report.text());
    return report.exit_code();
  } catch (const ParseError& e) {
    err << "error: query: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kInputError;
}

}  // namespace acsum::cli
