#pragma once

#include "acsum/cli/expression.hpp"
#include "acsum/decision.hpp"
#include "acsum/graded_ring.hpp"
#include "acsum/obstruction.hpp"
#include "acsum/registry.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace acsum::cli {

/// Error in an input file, prefixed with "source:line: ".
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Polynomial in the generators of `ring`: integers, generator names, + - * ^
/// and parentheses. Example: "5*x^2 - 2*x*y + 1".
RingElement parse_polynomial(std::string_view text, const RingPtr& ring, int line = 1, int column = 1);

/// Named degree-2 classes a bundle expression may refer to.
using LineBindings = std::map<std::string, RingElement>;

/// One of
///   std                          honest almost complex structure
///   trivial                      trivial bundle (all Chern classes zero)
///   trivial(c_n=K)               stub with top Chern number K
///   3*gamma + 2*conj(gamma)      sum of line bundles
/// A bare generator name of degree 2 may stand in for its line bundle.
StableStructure parse_structure(std::string_view text, const RingPtr& ring, const LineBindings& lines,
                                int line = 1, int column = 1);

struct CandidateSpec {
  std::string name;
  std::string text;
  bool external = false;
  int line = 0;
  int column = 1;
};

struct BindingSpec {
  std::string name;
  std::string text;
  int line = 0;
  int column = 1;
};

/// Candidate structures declared for one manifold, compiled lazily against
/// the manifold's ring.
struct StructureBlock {
  std::string source;
  std::vector<BindingSpec> lines;
  std::vector<CandidateSpec> candidates;

  std::vector<Candidate> compile(const ManifoldDescriptor& base) const;
};

struct StructureOverride {
  ManifoldRef target;
  StructureBlock block;
};

/// Everything loaded from --manifolds, --structures and --modulus-table.
struct InputSet {
  std::map<std::string, RegistryEntry> manifolds;  // user-defined atomic manifolds by name
  std::vector<StructureOverride> overrides;
  ModulusTable moduli;
};

/// Line-oriented key/value file with [manifold] and [structures] sections and
/// top-level obstruction_modulus[n] = d entries. `source` names the file in errors.
void load_definitions(std::string_view text, const std::string& source, InputSet& into);

/// Lines "n = d" or "obstruction_modulus[n] = d".
void load_modulus_table(std::string_view text, const std::string& source, InputSet& into);

}  // namespace acsum::cli
