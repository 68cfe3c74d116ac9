#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphjac/corpus.hpp"

// The invariant suite run by `graphjac self-check` and by the acceptance
// binary. Each check returns counts rather than throwing, so one broken
// invariant does not hide the others.
namespace graphjac::selfcheck {

struct CheckResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;  // empty when nothing failed
  bool passed() const { return cases > 0 && failures == 0; }
};

struct Options {
  std::size_t pairs_per_graph = 200;
  std::uint64_t full_enumeration_bound = 60;  // kappa limit for all-pairs
  std::size_t dlp_instances = 100;             // per family
  std::uint64_t seed = 1;
};

/// Bilinearity, symmetry and well-definedness on random degree-0 pairs.
CheckResult pairing_axioms(const std::vector<NamedGraph>& corpus,
                           const Options& opt);
/// Only the zero class pairs trivially with every class.
CheckResult non_degeneracy(const std::vector<NamedGraph>& corpus,
                           const Options& opt);
/// Every L_(i) and the Moore-Penrose inverse give identical pairings.
CheckResult inverse_independence(const std::vector<NamedGraph>& corpus,
                                 const Options& opt);
/// Matrix formula against the integer-solving definition on all class pairs.
CheckResult oracle_equivalence(const std::vector<NamedGraph>& corpus,
                               const Options& opt);
/// Cyclic groups: denominator of <h, g> equals the brute-force order of h.
CheckResult order_law(const std::vector<NamedGraph>& corpus,
                      const Options& opt);
/// Invariant-factor product, matrix-tree determinant, spanning-tree
/// enumeration and q-reduced count agree; kappa(K4) = 16, kappa(K5) = 125.
CheckResult group_order(const std::vector<NamedGraph>& corpus);
/// Seeded instances for the cycle, banana, wheel and random families solved
/// by both algorithms, plus K4 instances against brute force.
CheckResult dlp_correctness(const Options& opt);
/// Fixed pairing and DLP values on C3 and B2..B6.
CheckResult golden_values();
/// Random equivalent lifts of base and target leave the solution unchanged.
CheckResult lift_independence(const Options& opt);

/// All of the above on `corpus`.
std::vector<CheckResult> run_all(const std::vector<NamedGraph>& corpus,
                                 const Options& opt);

}  // namespace graphjac::selfcheck
