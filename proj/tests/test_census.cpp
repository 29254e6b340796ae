#include <doctest.h>

#include "oracles.hpp"
#include "realbundles/census.hpp"

using namespace rbp;

TEST_CASE("census closed forms on the worked examples") {
  GroupSpec gl3 = make_group(Family::GL, 3, RealStructure::Conjugation);
  RealCurve r3 = make_curve(4, CurveKind::TypeI, 3);
  CHECK(count_components(gl3, r3, 1).count == 4);  // r odd, rank odd, degree odd

  GroupSpec gl2 = make_group(Family::GL, 2, RealStructure::Conjugation);
  CHECK(count_components(gl2, r3, 0).count == 5);  // 2^(r-1) + quaternionic

  GroupSpec gl2c = make_group(Family::GL, 2, RealStructure::CompactType);
  RealCurve r2 = make_curve(3, CurveKind::TypeI, 2);
  CHECK(count_components(gl2c, r2, 0).count == 9);  // (n+1)^r
  CHECK(count_components(gl2c, r2, 1).count == 0);  // odd degree
}

TEST_CASE("brute force on the worked examples") {
  RealCurve r3 = make_curve(4, CurveKind::TypeI, 3);
  CHECK(brute_force_census(make_group(Family::GL, 3, RealStructure::Conjugation), r3, 1).count ==
        4);
  RealCurve r1 = make_curve(2, CurveKind::TypeI, 1);
  CHECK(brute_force_census(make_group(Family::GL, 2, RealStructure::Conjugation), r1, 0).count ==
        2);  // SW vector (0) plus the quaternionic space
  CHECK(brute_force_census(make_group(Family::GL, 4, RealStructure::CompactType), r3, 0).count ==
        125);  // 5^3 tuples
}

TEST_CASE("closed form equals brute force and the SW oracle, r <= 8") {
  for (RealStructure st : {RealStructure::Conjugation, RealStructure::CompactType}) {
    for (int n = 2; n <= 4; ++n) {
      GroupSpec g = make_group(Family::GL, n, st);
      for (int r = 1; r <= 8; ++r) {
        RealCurve curve = make_curve(r + 1, CurveKind::TypeI, r);
        for (long d : {0L, 1L}) {
          CensusResult closed = count_components(g, curve, d);
          CensusResult brute = brute_force_census(g, curve, d);
          CAPTURE(g.name());
          CAPTURE(r);
          CAPTURE(d);
          CHECK(closed.count == brute.count);
          if (st == RealStructure::Conjugation) {
            // independent bitmask oracle for the real sector
            unsigned long long sw = oracle::sw_vector_count(r, d);
            CHECK(closed.breakdown[0].second == sw);
          }
        }
      }
    }
  }
}

TEST_CASE("parity duality: even and odd real sectors sum to 2^r") {
  GroupSpec g = make_group(Family::GL, 3, RealStructure::Conjugation);
  for (int r = 1; r <= 10; ++r) {
    RealCurve curve = make_curve(r + 1, CurveKind::TypeI, r);
    auto even = count_components(g, curve, 0, CentralLabel::Trivial);
    auto odd = count_components(g, curve, 1, CentralLabel::Trivial);
    CHECK(even.count + odd.count == (1ULL << r));
  }
}

TEST_CASE("type 0 curves count through the degree parity alone") {
  GroupSpec gl2 = make_group(Family::GL, 2, RealStructure::Conjugation);
  RealCurve t0 = make_curve(3, CurveKind::Type0, 0);
  CHECK(count_components(gl2, t0, 0).count == brute_force_census(gl2, t0, 0).count);
  CHECK(count_components(gl2, t0, 1).count == brute_force_census(gl2, t0, 1).count);
  // odd rank: the quaternionic sector survives on fixed-circle-free curves
  GroupSpec gl3 = make_group(Family::GL, 3, RealStructure::Conjugation);
  for (long d : {0L, 1L})
    CHECK(count_components(gl3, t0, d).count == brute_force_census(gl3, t0, d).count);
}

TEST_CASE("census flags and errors") {
  GroupSpec gl2 = make_group(Family::GL, 2, RealStructure::Conjugation);
  RealCurve curve = make_curve(4, CurveKind::TypeI, 3);
  CensusResult res = count_components(gl2, curve, 3);
  CHECK(res.is_lower_bound);
  CHECK(res.exact_when_coprime);  // gcd(2, 3) = 1
  CHECK(!count_components(gl2, curve, 4).exact_when_coprime);

  RealCurve big = make_curve(14, CurveKind::TypeI, 13);
  CHECK_THROWS_AS(brute_force_census(gl2, big, 0), Error);
  GroupSpec sl4 = make_group(Family::SL, 4, RealStructure::CompactType);
  CHECK_THROWS_AS(count_components(sl4, curve, 0), Error);
}
