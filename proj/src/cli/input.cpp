#include "acsum/cli/input.hpp"

#include "acsum/cli/lexer.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>

namespace acsum::cli {

// ---------------------------------------------------------------------------
// Polynomials

namespace {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, const RingPtr& ring, int line, int column)
      : lex_(text, line, column), ring_(ring) {}

  RingElement run() {
    RingElement e = expr();
    lex_.expect_end();
    return e;
  }

 private:
  RingElement expr() {
    bool negate = false;
    if (lex_.accept('-'))
      negate = true;
    else
      lex_.accept('+');
    RingElement acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (lex_.accept('+'))
        acc = acc + term();
      else if (lex_.accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  RingElement term() {
    RingElement acc = factor();
    while (lex_.accept('*')) acc = acc * factor();
    return acc;
  }

  RingElement factor() {
    RingElement base = primary();
    if (lex_.accept('^')) {
      const Token t = lex_.peek();
      if (t.kind != Token::Kind::integer) lex_.fail("expected exponent, found " + describe(t));
      lex_.next();
      if (t.text.size() > 6) lex_.fail_at(t, "exponent too large");
      base = power(base, static_cast<unsigned>(std::stoul(t.text)));
    }
    return base;
  }

  RingElement primary() {
    const Token t = lex_.peek();
    if (t.kind == Token::Kind::integer) {
      lex_.next();
      return RingElement::constant(ring_, Integer(t.text));
    }
    if (t.kind == Token::Kind::identifier) {
      lex_.next();
      if (!ring_ || ring_->find(t.text) < 0) lex_.fail_at(t, "unknown generator '" + t.text + "'");
      return RingElement::generator(ring_, t.text);
    }
    if (lex_.accept('(')) {
      RingElement e = expr();
      lex_.expect(')');
      return e;
    }
    lex_.fail("expected integer, generator or '(', found " + describe(t));
  }

  Lexer lex_;
  const RingPtr& ring_;
};

// Integer literal or parenthesized integer arithmetic, used for multiplicities.
class IntegerExpr {
 public:
  explicit IntegerExpr(Lexer& lex) : lex_(lex) {}

  long long expr() {
    long long acc = 0;
    bool negate = lex_.accept('-');
    acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (lex_.accept('+'))
        acc += term();
      else if (lex_.accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  long long atom() {
    const Token t = lex_.peek();
    if (t.kind == Token::Kind::integer) {
      lex_.next();
      if (t.text.size() > 9) lex_.fail_at(t, "integer too large");
      return std::stoll(t.text);
    }
    if (lex_.accept('(')) {
      const long long v = expr();
      lex_.expect(')');
      return v;
    }
    lex_.fail("expected integer, found " + describe(t));
  }

 private:
  long long term() {
    long long acc = atom();
    while (lex_.accept('*')) {
      acc *= atom();
      if (acc > 1'000'000'000 || acc < -1'000'000'000) lex_.fail("integer expression too large");
    }
    return acc;
  }

  Lexer& lex_;
};

LineBundleSummand bundle_ref(Lexer& lex, const RingPtr& ring, const LineBindings& lines, int multiplicity) {
  bool conjugated = false;
  Token name = lex.peek();
  if (name.is_word("conj")) {
    lex.next();
    lex.expect('(');
    conjugated = true;
    name = lex.peek();
  }
  if (name.kind != Token::Kind::identifier) lex.fail("expected line bundle name, found " + describe(name));
  lex.next();
  if (conjugated) lex.expect(')');

  if (auto it = lines.find(name.text); it != lines.end()) return {it->second, multiplicity, conjugated};
  if (ring && ring->find(name.text) >= 0) {
    RingElement c1 = RingElement::generator(ring, name.text);
    if (!c1.is_homogeneous(2)) lex.fail_at(name, "generator '" + name.text + "' does not have degree 2");
    return {c1, multiplicity, conjugated};
  }
  lex.fail_at(name, "unknown line bundle '" + name.text + "'");
}

}  // namespace

RingElement parse_polynomial(std::string_view text, const RingPtr& ring, int line, int column) {
  if (!ring) throw ParseError("no generators declared", line, column);
  return PolynomialParser(text, ring, line, column).run();
}

StableStructure parse_structure(std::string_view text, const RingPtr& ring, const LineBindings& lines, int line,
                                int column) {
  Lexer lex(text, line, column);
  const Token head = lex.peek();
  if (head.is_word("std")) {
    lex.next();
    lex.expect_end();
    return HonestAcs{};
  }
  if (head.is_word("trivial")) {
    lex.next();
    if (lex.peek().kind == Token::Kind::end) {
      if (!ring) return TrivialWithChern{0};
      return LineBundleAggregate{ring, {}, "trivial"};
    }
    lex.expect('(');
    const Token key = lex.peek();
    if (!key.is_word("c_n")) lex.fail("expected 'c_n', found " + describe(key));
    lex.next();
    lex.expect('=');
    const bool negative = lex.accept('-');
    const Token value = lex.peek();
    if (value.kind != Token::Kind::integer) lex.fail("expected integer, found " + describe(value));
    lex.next();
    lex.expect(')');
    lex.expect_end();
    Integer cn(value.text);
    return TrivialWithChern{negative ? Integer(-cn) : cn};
  }

  if (!ring) lex.fail("line bundle expressions need a cohomology presentation");
  std::string label(text);
  while (!label.empty() && std::isspace(static_cast<unsigned char>(label.back()))) label.pop_back();
  while (!label.empty() && std::isspace(static_cast<unsigned char>(label.front()))) label.erase(label.begin());

  LineBundleAggregate agg{ring, {}, label};
  do {
    long long multiplicity = 1;
    const Token t = lex.peek();
    if (t.kind == Token::Kind::integer || t.is('(')) {
      multiplicity = IntegerExpr(lex).atom();
      lex.expect('*');
    }
    if (multiplicity < 0) lex.fail_at(t, "multiplicity must be non-negative");
    auto summand = bundle_ref(lex, ring, lines, static_cast<int>(multiplicity));
    if (multiplicity > 0) agg.summands.push_back(std::move(summand));
  } while (lex.accept('+'));
  lex.expect_end();
  try {
    agg.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), line, column);
  }
  return agg;
}

std::vector<Candidate> StructureBlock::compile(const ManifoldDescriptor& base) const {
  LineBindings bindings;
  auto where = [this](int line) { return source + ":" + std::to_string(line) + ": "; };
  try {
    for (const auto& b : lines) {
      RingElement c1 = parse_polynomial(b.text, base.cohomology, b.line, b.column);
      if (!c1.is_homogeneous(2))
        throw InputError(where(b.line) + "line bundle '" + b.name + "' needs a degree-2 class on " + base.label);
      bindings.insert_or_assign(b.name, std::move(c1));
    }
    std::vector<Candidate> out;
    for (const auto& c : candidates)
      out.push_back({c.name, parse_structure(c.text, base.cohomology, bindings, c.line, c.column), c.external});
    return out;
  } catch (const ParseError& e) {
    throw InputError(source + ":" + std::to_string(e.line()) + ": " + e.what() + " (structures for " + base.label +
                     ")");
  }
}

// ---------------------------------------------------------------------------
// Files

namespace {

struct Entry {
  std::vector<std::string> key;  // key words, e.g. {"line", "gamma"}
  std::string value;
  int line = 0;
  int value_column = 1;
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

class FileReader {
 public:
  FileReader(std::string_view text, std::string source) : source_(std::move(source)) {
    std::size_t start = 0;
    int number = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string raw(text.substr(start, end - start));
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      lines_.push_back(std::move(raw));
      ++number;
      start = end + 1;
    }
  }

  [[noreturn]] void fail(int line, const std::string& message) const {
    throw InputError(source_ + ":" + std::to_string(line) + ": " + message);
  }

  // Calls on_section(name, line) for "[name]" and on_entry(entry) for "key = value".
  template <class OnSection, class OnEntry>
  void scan(OnSection on_section, OnEntry on_entry) const {
    for (std::size_t i = 0; i < lines_.size(); ++i) {
      const int number = static_cast<int>(i + 1);
      std::string line = lines_[i];
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      const std::string body = trim(line);
      if (body.empty()) continue;
      if (body.front() == '[') {
        if (body.back() != ']') fail(number, "unterminated section header");
        on_section(trim(std::string_view(body).substr(1, body.size() - 2)), number);
        continue;
      }
      const auto eq = line.find('=');
      if (eq == std::string::npos) fail(number, "expected 'key = value'");
      Entry e;
      e.line = number;
      std::istringstream words(line.substr(0, eq));
      for (std::string w; words >> w;) e.key.push_back(w);
      if (e.key.empty()) fail(number, "missing key");
      std::size_t vstart = eq + 1;
      while (vstart < line.size() && std::isspace(static_cast<unsigned char>(line[vstart]))) ++vstart;
      e.value = trim(std::string_view(line).substr(eq + 1));
      e.value_column = static_cast<int>(vstart) + 1;
      on_entry(e);
    }
  }

  const std::string& source() const { return source_; }

 private:
  std::string source_;
  std::vector<std::string> lines_;
};

Integer parse_integer(const FileReader& r, const Entry& e) {
  std::string v = e.value;
  std::size_t i = (!v.empty() && (v[0] == '-' || v[0] == '+')) ? 1 : 0;
  if (i == v.size()) r.fail(e.line, "expected an integer for '" + e.key[0] + "'");
  for (std::size_t j = i; j < v.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(v[j]))) r.fail(e.line, "expected an integer, found '" + v + "'");
  if (v[0] == '+') v.erase(0, 1);
  return Integer(v);
}

int parse_small(const FileReader& r, const Entry& e) {
  const Integer v = parse_integer(r, e);
  if (v > 1'000'000'000 || v < -1'000'000'000) r.fail(e.line, "value out of range");
  return v.convert_to<int>();
}

// "obstruction_modulus[n]" -> n
std::optional<int> modulus_key(const std::string& key) {
  const std::string prefix = "obstruction_modulus[";
  if (key.size() <= prefix.size() + 1 || key.compare(0, prefix.size(), prefix) != 0 || key.back() != ']')
    return std::nullopt;
  const std::string digits = key.substr(prefix.size(), key.size() - prefix.size() - 1);
  if (digits.empty() || digits.size() > 6) return std::nullopt;
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  return std::stoi(digits);
}

void add_modulus(const FileReader& r, const Entry& e, int n, InputSet& into) {
  if (n < 1) r.fail(e.line, "obstruction modulus index must be positive");
  const Integer d = parse_integer(r, e);
  if (d < 1) r.fail(e.line, "obstruction modulus must be positive");
  into.moduli[n] = d;
}

// Parses "p1^2" into a canonical partition label; empty optional on bad syntax.
std::optional<Partition> parse_partition(const std::string& s) {
  Partition p;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != 'p') return std::nullopt;
    ++i;
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i || j - i > 4) return std::nullopt;
    const int part = std::stoi(s.substr(i, j - i));
    int count = 1;
    i = j;
    if (i < s.size() && s[i] == '^') {
      ++i;
      j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i || j - i > 4) return std::nullopt;
      count = std::stoi(s.substr(i, j - i));
      i = j;
    }
    if (part < 1 || count < 1) return std::nullopt;
    for (int c = 0; c < count; ++c) p.push_back(part);
  }
  if (p.empty()) return std::nullopt;
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  if (trim(value).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = value.find(',', start);
    out.push_back(trim(std::string_view(value).substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// Column (1-based) of the i-th comma separated item inside an entry value.
int item_column(const Entry& e, std::size_t index) {
  std::size_t pos = 0;
  for (std::size_t k = 0; k < index; ++k) pos = e.value.find(',', pos) + 1;
  while (pos < e.value.size() && std::isspace(static_cast<unsigned char>(e.value[pos]))) ++pos;
  return e.value_column + static_cast<int>(pos);
}

class ManifoldSection {
 public:
  ManifoldSection(const FileReader& reader, int header_line) : reader_(reader), header_line_(header_line) {
    block_.source = reader.source();
  }

  void add(const Entry& e) {
    const std::string& k = e.key[0];
    if (k == "line" || k == "candidate" || k == "external_candidate") {
      if (e.key.size() != 2 || !is_identifier(e.key[1])) reader_.fail(e.line, "expected '" + k + " <name> = ...'");
      if (k == "line")
        block_.lines.push_back({e.key[1], e.value, e.line, e.value_column});
      else
        block_.candidates.push_back({e.key[1], e.value, k == "external_candidate", e.line, e.value_column});
      return;
    }
    if (e.key.size() != 1) reader_.fail(e.line, "unexpected key '" + k + " ...'");
    static const std::set<std::string> known{"name",       "dimension",          "chi",
                                             "tau",        "generators",         "top_monomial",
                                             "orientation_sign", "pontrjagin_classes", "pontrjagin_numbers",
                                             "connectivity"};
    if (!known.count(k)) reader_.fail(e.line, "unknown key '" + k + "'");
    if (!fields_.emplace(k, e).second) reader_.fail(e.line, "duplicate key '" + k + "'");
  }

  RegistryEntry build() const {
    auto require = [this](const std::string& k) -> const Entry& {
      auto it = fields_.find(k);
      if (it == fields_.end()) reader_.fail(header_line_, "manifold section is missing '" + k + "'");
      return it->second;
    };
    auto find = [this](const std::string& k) -> const Entry* {
      auto it = fields_.find(k);
      return it == fields_.end() ? nullptr : &it->second;
    };

    const Entry& name_entry = require("name");
    if (!is_identifier(name_entry.value)) reader_.fail(name_entry.line, "manifold name must be an identifier");
    if (name_entry.value == "conj" || is_builtin_name(name_entry.value))
      reader_.fail(name_entry.line, "manifold name '" + name_entry.value + "' is reserved");

    ManifoldDescriptor m;
    m.label = name_entry.value;
    m.dimension = parse_small(reader_, require("dimension"));
    m.euler_characteristic = parse_integer(reader_, require("chi"));
    if (const Entry* tau = find("tau")) m.signature = parse_integer(reader_, *tau);
    if (const Entry* sign = find("orientation_sign")) m.orientation_sign = parse_small(reader_, *sign);
    if (const Entry* conn = find("connectivity")) m.connectivity = parse_small(reader_, *conn);
    if (m.dimension < 2 || m.dimension % 2 != 0)
      reader_.fail(require("dimension").line, "dimension must be even and >= 2");

    if (const Entry* gens = find("generators")) {
      std::vector<RingPresentation::Generator> generators;
      for (const auto& item : split_list(gens->value)) {
        const auto a = item.find(':');
        const auto b = a == std::string::npos ? a : item.find(':', a + 1);
        if (b == std::string::npos) reader_.fail(gens->line, "generator '" + item + "' is not name:degree:truncation");
        RingPresentation::Generator g;
        g.name = trim(std::string_view(item).substr(0, a));
        try {
          g.degree = std::stoi(item.substr(a + 1, b - a - 1));
          g.truncation = std::stoi(item.substr(b + 1));
        } catch (const std::exception&) {
          reader_.fail(gens->line, "generator '" + item + "' is not name:degree:truncation");
        }
        if (!is_identifier(g.name)) reader_.fail(gens->line, "generator name '" + g.name + "' is not an identifier");
        generators.push_back(std::move(g));
      }
      const Entry& top = require("top_monomial");
      Monomial exponents(generators.size(), 0);
      try {
        Lexer lex(top.value, top.line, top.value_column);
        do {
          const Token t = lex.peek();
          if (t.kind != Token::Kind::identifier) lex.fail("expected generator, found " + describe(t));
          lex.next();
          auto it = std::find_if(generators.begin(), generators.end(),
                                 [&t](const RingPresentation::Generator& g) { return g.name == t.text; });
          if (it == generators.end()) lex.fail_at(t, "unknown generator '" + t.text + "'");
          int exponent = 1;
          if (lex.accept('^')) {
            const Token e = lex.peek();
            if (e.kind != Token::Kind::integer || e.text.size() > 6) lex.fail("expected exponent");
            lex.next();
            exponent = std::stoi(e.text);
          }
          exponents[static_cast<std::size_t>(it - generators.begin())] += exponent;
        } while (lex.accept('*'));
        lex.expect_end();
      } catch (const ParseError& e) {
        reader_.fail(e.line(), e.what());
      }
      try {
        m.cohomology = RingPresentation::create(std::move(generators), m.dimension, std::move(exponents));
      } catch (const std::invalid_argument& e) {
        reader_.fail(gens->line, e.what());
      }
    } else if (find("top_monomial")) {
      reader_.fail(find("top_monomial")->line, "top_monomial needs generators");
    }

    if (const Entry* classes = find("pontrjagin_classes")) {
      if (!m.cohomology) reader_.fail(classes->line, "pontrjagin_classes need generators");
      std::vector<RingElement> ps;
      const auto items = split_list(classes->value);
      for (std::size_t i = 0; i < items.size(); ++i) {
        try {
          ps.push_back(parse_polynomial(items[i], m.cohomology, classes->line, item_column(*classes, i)));
        } catch (const ParseError& e) {
          reader_.fail(e.line(), e.what());
        }
      }
      m.pontrjagin_classes = std::move(ps);
    }

    try {
      m.validate();
    } catch (const std::invalid_argument& e) {
      reader_.fail(header_line_, e.what());
    }

    if (m.dimension % 4 == 0) {
      PontrjaginNumbers stated;
      if (const Entry* numbers = find("pontrjagin_numbers")) {
        for (const auto& partition : partitions_of(m.dimension / 4)) stated[partition_label(partition)] = 0;
        for (const auto& item : split_list(numbers->value)) {
          const auto colon = item.find(':');
          if (colon == std::string::npos) reader_.fail(numbers->line, "expected 'label:value', found '" + item + "'");
          const auto partition = parse_partition(trim(std::string_view(item).substr(0, colon)));
          const std::string digits = trim(std::string_view(item).substr(colon + 1));
          int sum = 0;
          if (partition)
            for (int part : *partition) sum += part;
          if (!partition || sum != m.dimension / 4)
            reader_.fail(numbers->line, "'" + item.substr(0, colon) + "' is not a partition of " +
                                            std::to_string(m.dimension / 4));
          Entry value = *numbers;
          value.value = digits;
          stated[partition_label(*partition)] = parse_integer(reader_, value);
        }
      }
      if (m.pontrjagin_classes) {
        m.pontrjagin_numbers = pontrjagin_numbers_of(m);
        if (find("pontrjagin_numbers") && stated != m.pontrjagin_numbers)
          reader_.fail(find("pontrjagin_numbers")->line, "pontrjagin_numbers disagree with pontrjagin_classes");
      } else if (find("pontrjagin_numbers")) {
        m.pontrjagin_numbers = std::move(stated);
      } else {
        reader_.fail(header_line_, "dimension " + std::to_string(m.dimension) +
                                       " needs pontrjagin_classes or pontrjagin_numbers");
      }
    } else if (const Entry* numbers = find("pontrjagin_numbers"); numbers && !split_list(numbers->value).empty()) {
      reader_.fail(numbers->line, "Pontrjagin numbers only exist in dimensions divisible by 4");
    }

    RegistryEntry entry;
    entry.descriptor = std::move(m);
    entry.canonical_structures = block_.compile(entry.descriptor);
    entry.notes.push_back("user-defined in " + reader_.source());
    return entry;
  }

 private:
  const FileReader& reader_;
  int header_line_;
  std::map<std::string, Entry> fields_;
  StructureBlock block_;
};

class StructuresSection {
 public:
  StructuresSection(const FileReader& reader, int header_line) : reader_(reader), header_line_(header_line) {
    block_.source = reader.source();
  }

  void add(const Entry& e) {
    const std::string& k = e.key[0];
    if (k == "target" && e.key.size() == 1) {
      if (target_) reader_.fail(e.line, "duplicate key 'target'");
      try {
        target_ = parse_manifold(e.value);
      } catch (const ParseError& err) {
        reader_.fail(e.line, std::string("target: ") + err.what());
      }
      return;
    }
    if ((k == "line" || k == "candidate" || k == "external_candidate") && e.key.size() == 2 && is_identifier(e.key[1])) {
      if (k == "line")
        block_.lines.push_back({e.key[1], e.value, e.line, e.value_column});
      else
        block_.candidates.push_back({e.key[1], e.value, k == "external_candidate", e.line, e.value_column});
      return;
    }
    reader_.fail(e.line, "unexpected key '" + k + "' in [structures]");
  }

  StructureOverride build() const {
    if (!target_) reader_.fail(header_line_, "structures section is missing 'target'");
    return {*target_, block_};
  }

 private:
  const FileReader& reader_;
  int header_line_;
  std::optional<ManifoldRef> target_;
  StructureBlock block_;
};

}  // namespace

void load_definitions(std::string_view text, const std::string& source, InputSet& into) {
  FileReader reader(text, source);
  std::optional<ManifoldSection> manifold;
  std::optional<StructuresSection> structures;

  auto flush = [&]() {
    if (manifold) {
      RegistryEntry entry = manifold->build();
      const std::string name = entry.descriptor.label;
      if (into.manifolds.count(name)) throw InputError(source + ": manifold '" + name + "' is defined twice");
      into.manifolds.emplace(name, std::move(entry));
      manifold.reset();
    }
    if (structures) {
      into.overrides.push_back(structures->build());
      structures.reset();
    }
  };

  reader.scan(
      [&](const std::string& section, int line) {
        flush();
        if (section == "manifold")
          manifold.emplace(reader, line);
        else if (section == "structures")
          structures.emplace(reader, line);
        else
          reader.fail(line, "unknown section [" + section + "]");
      },
      [&](const Entry& e) {
        if (manifold) return manifold->add(e);
        if (structures) return structures->add(e);
        if (e.key.size() == 1) {
          if (auto n = modulus_key(e.key[0])) return add_modulus(reader, e, *n, into);
        }
        reader.fail(e.line, "unexpected top-level key '" + e.key[0] + "'");
      });
  flush();
}

void load_modulus_table(std::string_view text, const std::string& source, InputSet& into) {
  FileReader reader(text, source);
  reader.scan([&](const std::string&, int line) { reader.fail(line, "sections are not allowed in a modulus table"); },
              [&](const Entry& e) {
                if (e.key.size() != 1) reader.fail(e.line, "expected 'n = d'");
                if (auto n = modulus_key(e.key[0])) return add_modulus(reader, e, *n, into);
                const std::string& k = e.key[0];
                if (k.empty() || k.size() > 6 || !std::all_of(k.begin(), k.end(), [](char c) {
                      return std::isdigit(static_cast<unsigned char>(c));
                    }))
                  reader.fail(e.line, "expected 'n = d' with integer n");
                add_modulus(reader, e, std::stoi(k), into);
              });
}

}  // namespace acsum::cli
