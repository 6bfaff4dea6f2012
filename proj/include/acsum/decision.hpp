#pragma once

#include "acsum/integer.hpp"
#include "acsum/manifold.hpp"
#include "acsum/obstruction.hpp"
#include "acsum/stable_structure.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace acsum {

/// Outcome of a structure-independent necessary condition.
struct CheckResult {
  enum class Outcome { pass, fail, not_applicable };

  std::string name;
  Outcome outcome = Outcome::not_applicable;
  Integer lhs = 0;
  Integer rhs = 0;
  std::string relation;  // how lhs and rhs are compared, e.g. "mod 4"
  std::string note;      // why the check did not apply

  bool passed() const { return outcome == Outcome::pass; }
  bool failed() const { return outcome == Outcome::fail; }
};

std::string to_string(CheckResult::Outcome outcome);

/// chi(M) = (-1)^n tau(M) mod 4 for a 4n-manifold; not applicable in
/// dimension 2 mod 4. lhs is chi, rhs is (-1)^n tau.
CheckResult hirzebruch_check(const ManifoldDescriptor& m);

/// 4 p_{2m}[M] - p_m^2[M] = 8 chi(M) for a (4m-1)-connected 8m-manifold.
/// Not applicable unless the dimension is 8m and that connectivity is asserted.
CheckResult yang_8m_check(const ManifoldDescriptor& m, int half_quarter);

/// One named stable structure offered for a summand.
struct Candidate {
  std::string name;
  StableStructure structure;
  bool external = false;  // attainability taken on outside authority
};

struct SearchSpace {
  std::vector<std::vector<Candidate>> candidates;  // one list per summand
  std::uint64_t bound = 1'000'000;
};

enum class Status { admits, not_admits, unknown };

std::string to_string(Status status);

/// Zero-obstruction witness for ADMITS.
struct AdmitsCertificate {
  std::vector<std::size_t> choice;      // index into each summand's candidate list
  std::vector<std::string> structures;  // candidate names in summand order
  std::vector<ObstructionCoefficient> parts;
  ObstructionCoefficient total{0, 1};
  bool uses_external = false;
};

struct Verdict {
  Status status = Status::unknown;
  ManifoldDescriptor formal;  // the connected sum the checks ran on
  std::vector<CheckResult> checks;

  std::optional<AdmitsCertificate> admits;
  std::optional<CheckResult> failed_check;  // NOT_ADMITS

  // UNKNOWN: every total coefficient met during the search.
  std::set<Integer> coefficients_examined;
  std::uint64_t assignments_explored = 0;
  bool bound_reached = false;
  std::vector<std::string> notes;
};

/// Runs the necessary conditions on the formal sum, then searches structure
/// assignments in lexicographic order (last summand varies fastest) for the
/// first vanishing total obstruction.
Verdict decide(const std::vector<ManifoldDescriptor>& summands, const SearchSpace& space,
               const ModulusTable& moduli = {});

/// Recomputes a verdict's certificate from scratch; true iff it reproduces.
bool replay(const Verdict& verdict, const std::vector<ManifoldDescriptor>& summands, const SearchSpace& space,
            const ModulusTable& moduli = {});

}  // namespace acsum
