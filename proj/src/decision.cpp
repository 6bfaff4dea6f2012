#include "acsum/decision.hpp"

#include <stdexcept>

namespace acsum {

std::string to_string(CheckResult::Outcome outcome) {
  switch (outcome) {
    case CheckResult::Outcome::pass: return "pass";
    case CheckResult::Outcome::fail: return "fail";
    case CheckResult::Outcome::not_applicable: return "not_applicable";
  }
  return "?";
}

std::string to_string(Status status) {
  switch (status) {
    case Status::admits: return "ADMITS";
    case Status::not_admits: return "NOT_ADMITS";
    case Status::unknown: return "UNKNOWN";
  }
  return "?";
}

CheckResult hirzebruch_check(const ManifoldDescriptor& m) {
  CheckResult r;
  r.name = "hirzebruch";
  r.relation = "mod 4";
  if (m.dimension % 4 != 0) {
    r.note = "dimension " + std::to_string(m.dimension) + " is not divisible by 4";
    return r;
  }
  const int n = m.dimension / 4;
  r.lhs = m.euler_characteristic;
  r.rhs = (n % 2 == 0) ? m.signature : Integer(-m.signature);
  r.outcome = floor_mod(r.lhs - r.rhs, 4) == 0 ? CheckResult::Outcome::pass : CheckResult::Outcome::fail;
  return r;
}

CheckResult yang_8m_check(const ManifoldDescriptor& m, int half_quarter) {
  CheckResult r;
  r.name = "yang_8m";
  r.relation = "equal";
  if (half_quarter < 1 || m.dimension != 8 * half_quarter) {
    r.note = "dimension " + std::to_string(m.dimension) + " is not 8m";
    return r;
  }
  const int required = 4 * half_quarter - 1;
  if (!m.connectivity || *m.connectivity < required) {
    r.note = "needs asserted connectivity >= " + std::to_string(required);
    return r;
  }
  const auto numbers = pontrjagin_numbers_of(m);
  auto number = [&numbers](const std::string& key) {
    auto it = numbers.find(key);
    return it == numbers.end() ? Integer(0) : it->second;
  };
  const Integer top = number(partition_label({2 * half_quarter}));
  const Integer square = number(partition_label({half_quarter, half_quarter}));
  r.lhs = 4 * top - square;
  r.rhs = 8 * m.euler_characteristic;
  r.outcome = r.lhs == r.rhs ? CheckResult::Outcome::pass : CheckResult::Outcome::fail;
  return r;
}

namespace {

std::vector<CheckResult> necessary_checks(const ManifoldDescriptor& formal) {
  std::vector<CheckResult> checks{hirzebruch_check(formal)};
  checks.push_back(yang_8m_check(formal, formal.dimension % 8 == 0 ? formal.dimension / 8 : 0));
  return checks;
}

// Per-summand obstruction of every candidate, computed once.
std::vector<std::vector<ObstructionCoefficient>> obstruction_table(const std::vector<ManifoldDescriptor>& summands,
                                                                   const SearchSpace& space,
                                                                   const ModulusTable& moduli) {
  std::vector<std::vector<ObstructionCoefficient>> table(summands.size());
  for (std::size_t i = 0; i < summands.size(); ++i) {
    const auto modulus = modulus_for(moduli, summands[i].half_dimension());
    for (const auto& c : space.candidates[i]) {
      try {
        table[i].push_back(obstruction_from_stable(summands[i], c.structure, modulus));
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("candidate '" + c.name + "' on summand " + std::to_string(i + 1) + ": " +
                                    e.what());
      }
    }
  }
  return table;
}

AdmitsCertificate make_certificate(const std::vector<std::size_t>& choice, const SearchSpace& space,
                                   const std::vector<std::vector<ObstructionCoefficient>>& table) {
  AdmitsCertificate cert;
  cert.choice = choice;
  for (std::size_t i = 0; i < choice.size(); ++i) {
    const auto& c = space.candidates[i][choice[i]];
    cert.structures.push_back(c.name);
    cert.parts.push_back(table[i][choice[i]]);
    cert.uses_external = cert.uses_external || c.external;
  }
  cert.total = sum_obstruction(cert.parts);
  return cert;
}

}  // namespace

Verdict decide(const std::vector<ManifoldDescriptor>& summands, const SearchSpace& space,
               const ModulusTable& moduli) {
  if (summands.empty()) throw std::invalid_argument("decide: empty connected sum");
  if (space.candidates.size() != summands.size())
    throw std::invalid_argument("decide: search space has " + std::to_string(space.candidates.size()) +
                                " candidate lists for " + std::to_string(summands.size()) + " summands");
  if (space.bound < 1) throw std::invalid_argument("decide: search bound must be >= 1");

  Verdict v;
  v.formal = connected_sum(summands);
  v.checks = necessary_checks(v.formal);
  for (const auto& check : v.checks) {
    if (check.failed()) {
      v.status = Status::not_admits;
      v.failed_check = check;
      return v;
    }
  }

  const auto table = obstruction_table(summands, space, moduli);
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i].empty()) {
      v.notes.push_back("summand " + std::to_string(i + 1) + " (" + summands[i].label + ") has no candidate structures");
      return v;
    }
  }

  // Odometer over candidate indices; the last summand varies fastest.
  std::vector<std::size_t> choice(summands.size(), 0);
  std::vector<ObstructionCoefficient> parts;
  parts.reserve(summands.size());
  while (true) {
    if (v.assignments_explored == space.bound) {
      v.bound_reached = true;
      break;
    }
    ++v.assignments_explored;
    parts.clear();
    for (std::size_t i = 0; i < choice.size(); ++i) parts.push_back(table[i][choice[i]]);
    const auto total = sum_obstruction(parts);
    if (vanishes(total)) {
      v.status = Status::admits;
      v.admits = make_certificate(choice, space, table);
      return v;
    }
    v.coefficients_examined.insert(total.k());

    std::size_t pos = choice.size();
    while (pos > 0) {
      --pos;
      if (++choice[pos] < table[pos].size()) break;
      choice[pos] = 0;
      if (pos == 0) return v;
    }
  }
  return v;
}

bool replay(const Verdict& verdict, const std::vector<ManifoldDescriptor>& summands, const SearchSpace& space,
            const ModulusTable& moduli) {
  const auto formal = connected_sum(summands);
  switch (verdict.status) {
    case Status::not_admits: {
      if (!verdict.failed_check) return false;
      for (const auto& check : necessary_checks(formal))
        if (check.name == verdict.failed_check->name)
          return check.failed() && check.lhs == verdict.failed_check->lhs && check.rhs == verdict.failed_check->rhs;
      return false;
    }
    case Status::admits: {
      if (!verdict.admits || verdict.admits->choice.size() != summands.size()) return false;
      std::vector<ObstructionCoefficient> parts;
      for (std::size_t i = 0; i < summands.size(); ++i) {
        const auto& list = space.candidates.at(i);
        const auto idx = verdict.admits->choice[i];
        if (idx >= list.size() || list[idx].name != verdict.admits->structures[i]) return false;
        parts.push_back(
            obstruction_from_stable(summands[i], list[idx].structure, modulus_for(moduli, summands[i].half_dimension())));
      }
      const auto total = sum_obstruction(parts);
      return vanishes(total) && total == verdict.admits->total;
    }
    case Status::unknown:
      return !verdict.admits && !verdict.failed_check;
  }
  return false;
}

}  // namespace acsum
