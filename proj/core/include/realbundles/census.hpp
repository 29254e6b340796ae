#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "realbundles/curve.hpp"

namespace rbp {

// Lower bounds on the number of connected components of the fixed-point
// locus of the real involution on the complex moduli space: one component
// per topological type at the given degree.

struct CensusResult {
  GroupSpec group;
  RealCurve curve;
  long degree = 0;
  std::optional<CentralLabel> c_filter;  // restrict to one class sector

  unsigned long long count = 0;
  std::vector<std::pair<std::string, unsigned long long>> breakdown;
  bool is_lower_bound = true;
  bool exact_when_coprime = false;  // gcd(rank, degree) = 1 for gl
};

// Closed-form counts. Conjugation gl: 2^(r-1) Stiefel-Whitney vectors with
// the degree parity, plus the quaternionic space when admissible.
// Compact-type gl: (n+1)^r signature tuples for even degree, none for odd.
// Other families raise UnsupportedFamily.
CensusResult count_components(const GroupSpec& g, const RealCurve& curve, long degree,
                              std::optional<CentralLabel> c = std::nullopt);

// Independent oracle: walks every per-circle tuple explicitly and applies
// check_constraints. Materializes through enumerate_types on small domains;
// larger domains (up to r = 12) use a counting walk over the same
// constraint evaluation, split across threads. Throws TooLarge beyond r = 12.
CensusResult brute_force_census(const GroupSpec& g, const RealCurve& curve, long degree,
                                std::optional<CentralLabel> c = std::nullopt);

}  // namespace rbp
