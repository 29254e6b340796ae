#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "realbundles/census.hpp"
#include "realbundles/tables.hpp"

namespace rbp {

struct SuiteResult {
  std::string name;
  int checks = 0;
  int failures = 0;
  std::vector<std::string> details;  // one entry per failure, capped

  bool passed() const { return failures == 0; }
};

// Every supported (family, structure) pair with matrix size <= max_n.
std::vector<GroupSpec> supported_groups(int max_n);

// normalize(sample_orbit(...)) recovers the class for `samples` seeded
// coboundary samples per (G, c, class); witness residual <= witness_tol.
SuiteResult orbit_recovery_suite(int max_n, int samples, std::uint64_t seed,
                                 double witness_tol = 1e-6);

// image(T') = kernel(T) and the rank bounds for every canonical representative.
SuiteResult discreteness_suite(int max_n, double tol = kDefaultTol);

// dim_R Lie(Stab(h)) = dim_C g for every canonical representative.
SuiteResult stabilizer_dimension_suite(int max_n, double tol = kDefaultTol);

// Exactness of the four-term sequence for every group with a modeled adjoint.
SuiteResult sequence_suite(int max_n);

// count_components == brute_force_census over gl families.
SuiteResult census_suite(int max_n, int max_r);

// make_curve acceptance matches the Euler-characteristic search oracle and
// quotient_data doubles consistently.
SuiteResult curve_suite(int max_genus);

struct VerifyReport {
  std::vector<SuiteResult> suites;
  bool all_passed() const {
    for (const auto& s : suites)
      if (!s.passed()) return false;
    return true;
  }
};

VerifyReport run_verification(int samples, std::uint64_t seed);

}  // namespace rbp
