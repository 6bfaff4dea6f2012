#include "acsum/registry.hpp"

#include <algorithm>
#include <stdexcept>

namespace acsum {

namespace {

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string param_label(const std::string& name, const std::vector<int>& params) {
  std::string out = name + "(";
  for (std::size_t i = 0; i < params.size(); ++i) out += (i ? "," : "") + std::to_string(params[i]);
  return out + ")";
}

void expect_params(const std::string& name, const std::vector<int>& params, std::size_t count) {
  if (params.size() != count)
    throw std::invalid_argument("builtin " + name + " takes " + std::to_string(count) + " parameter(s), got " +
                                std::to_string(params.size()));
  for (int p : params)
    if (p < 1) throw std::invalid_argument("builtin " + name + ": parameters must be positive");
}

Candidate trivial_candidate(const Integer& cn, bool external) {
  return {"trivial(c_n=" + cn.str() + ")", TrivialWithChern{cn}, external};
}

bool s2_or_s6(int half) { return half == 1 || half == 3; }

// Line bundle sum a*gamma + b*conj(gamma) over CP^n, gamma with c_1 = x.
LineBundleAggregate gamma_sum(const RingPtr& ring, int plain, int conjugated, std::string label) {
  LineBundleAggregate agg{ring, {}, std::move(label)};
  const auto x = RingElement::generator(ring, "x");
  if (plain > 0) agg.summands.push_back({x, plain, false});
  if (conjugated > 0) agg.summands.push_back({x, conjugated, true});
  return agg;
}

RegistryEntry projective(int n) {
  auto ring = RingPresentation::create({{"x", 2, n}}, 2 * n, {n});
  const auto x = RingElement::generator(ring, "x");
  // p(TCP^n) = (1 + x^2)^{n+1}
  std::vector<RingElement> classes;
  for (int i = 1; 4 * i <= 2 * n; ++i) classes.push_back(binomial(n + 1, i) * power(x, 2 * static_cast<unsigned>(i)));

  RegistryEntry e;
  e.descriptor = make_atomic(param_label("CP", {n}), 2 * n, n + 1, n % 2 == 0 ? 1 : 0, ring, 1, std::move(classes), 1);
  e.canonical_structures.push_back({"std", HonestAcs{}, false});
  e.canonical_structures.push_back(
      {"eta", gamma_sum(ring, n - 1, 2, std::to_string(n - 1) + "*gamma + 2*conj(gamma)"), false});
  e.notes.push_back("complex manifold: the standard structure is honest");
  e.notes.push_back("Pontrjagin classes from p(TCP^n) = (1+x^2)^(n+1)");
  e.builtin_name = "CP";
  e.builtin_params = {n};
  return e;
}

RegistryEntry conjugate_projective(int n) {
  RegistryEntry base = projective(n);
  RegistryEntry e;
  e.descriptor = reverse_orientation(base.descriptor);
  e.canonical_structures.push_back(
      {"eta", gamma_sum(base.descriptor.cohomology, n, 1, std::to_string(n) + "*gamma + conj(gamma)"), false});
  e.notes.push_back("tangent bundle stably isomorphic to that of CP^n");
  e.builtin_name = "conjCP";
  e.builtin_params = {n};
  return e;
}

RegistryEntry sphere(int k) {
  auto ring = RingPresentation::create({{"s", 2 * k, 1}}, 2 * k, {1});
  RegistryEntry e;
  e.descriptor = make_atomic(param_label("Sphere", {k}), 2 * k, 2, 0, ring, 1, {}, 2 * k - 1);
  if (s2_or_s6(k)) {
    e.canonical_structures.push_back({"std", HonestAcs{}, true});
    e.notes.push_back("S^2 and S^6 admit almost complex structures");
  }
  e.canonical_structures.push_back(trivial_candidate(0, false));
  e.notes.push_back("stably parallelizable: p = 1");
  e.builtin_name = "Sphere";
  e.builtin_params = {k};
  return e;
}

RegistryEntry sphere_product(int a, int b) {
  auto ring = RingPresentation::create({{"x", 2 * a, 1}, {"y", 2 * b, 1}}, 2 * (a + b), {1, 1});
  RegistryEntry e;
  e.descriptor = make_atomic(param_label("SphereProduct", {a, b}), 2 * (a + b), 4, 0, ring, 1, {},
                             2 * std::min(a, b) - 1);
  if (s2_or_s6(a) && s2_or_s6(b)) {
    e.canonical_structures.push_back({"std", HonestAcs{}, true});
    e.notes.push_back("product of almost complex spheres");
  }
  e.canonical_structures.push_back(trivial_candidate(0, false));
  if (a == 2 && b == 2) {
    e.canonical_structures.push_back(trivial_candidate(4, true));
    e.notes.push_back("c_4 = 4 is attained by a stable structure (external; replays the S4xS4 # conj(CP4) structure)");
  }
  e.notes.push_back("stably parallelizable: p = 1");
  e.builtin_name = "SphereProduct";
  e.builtin_params = {a, b};
  return e;
}

RegistryEntry quaternionic_plane() {
  auto ring = RingPresentation::create({{"u", 4, 2}}, 8, {2});
  const auto u = RingElement::generator(ring, "u");
  RegistryEntry e;
  e.descriptor = make_atomic("HP2", 8, 3, 1, ring, 1, {2 * u, 7 * (u * u)}, 3);
  e.notes.push_back("p1 = 2u, p2 = 7u^2 (standard reference data)");
  e.builtin_name = "HP2";
  return e;
}

}  // namespace

bool RegistryEntry::has_honest_acs() const {
  return std::any_of(canonical_structures.begin(), canonical_structures.end(),
                     [](const Candidate& c) { return std::holds_alternative<HonestAcs>(c.structure); });
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"CP", "conjCP", "Sphere", "SphereProduct", "HP2"};
  return names;
}

bool is_builtin_name(const std::string& name) {
  const auto& names = builtin_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

RegistryEntry builtin(const std::string& name, const std::vector<int>& params) {
  if (name == "CP") {
    expect_params(name, params, 1);
    return projective(params[0]);
  }
  if (name == "conjCP") {
    expect_params(name, params, 1);
    return conjugate_projective(params[0]);
  }
  if (name == "Sphere") {
    expect_params(name, params, 1);
    return sphere(params[0]);
  }
  if (name == "SphereProduct") {
    expect_params(name, params, 2);
    return sphere_product(params[0], params[1]);
  }
  if (name == "HP2") {
    expect_params(name, params, 0);
    return quaternionic_plane();
  }
  throw std::invalid_argument("unknown manifold '" + name + "'");
}

RegistryEntry conjugate_entry(const RegistryEntry& entry) {
  if (entry.builtin_name == "CP") return conjugate_projective(entry.builtin_params.at(0));
  if (entry.builtin_name == "conjCP") return projective(entry.builtin_params.at(0));

  RegistryEntry out;
  out.descriptor = reverse_orientation(entry.descriptor);
  for (const auto& c : entry.canonical_structures) {
    if (std::holds_alternative<HonestAcs>(c.structure)) continue;
    if (const auto* t = std::get_if<TrivialWithChern>(&c.structure)) {
      out.canonical_structures.push_back(trivial_candidate(-t->top_chern_number, c.external));
      continue;
    }
    out.canonical_structures.push_back(c);
  }
  out.notes = entry.notes;
  out.notes.push_back("orientation reversed: honest structures are not carried over");
  return out;
}

std::vector<RegistryEntry> almost_complex_catalog(int dimension) {
  std::vector<RegistryEntry> out;
  if (dimension < 2 || dimension % 2 != 0) return out;
  const int half = dimension / 2;
  out.push_back(projective(half));
  if (s2_or_s6(half)) out.push_back(sphere(half));
  for (int a = 1; a <= half - a; ++a)
    if (s2_or_s6(a) && s2_or_s6(half - a)) out.push_back(sphere_product(a, half - a));
  return out;
}

}  // namespace acsum
