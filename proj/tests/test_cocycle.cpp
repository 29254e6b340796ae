#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "realbundles/cocycle.hpp"
#include "realbundles/verify.hpp"

using namespace rbp;

namespace {

CMat block_j2() {
  CMat j = CMat::Zero(2, 2);
  j(0, 1) = -1.0;
  j(1, 0) = 1.0;
  return j;
}

CentralClass minus_one(const GroupSpec& g) { return central_class(g, CentralLabel::MinusOne); }

}  // namespace

TEST_CASE("validate_cocycle on the worked examples") {
  GroupSpec gl3 = make_group(Family::GL, 3, RealStructure::CompactType);
  CMat d = CMat::Identity(3, 3);
  d(2, 2) = -1.0;
  CHECK(validate_cocycle(gl3, trivial_central_class(), d));

  GroupSpec gl2 = make_group(Family::GL, 2, RealStructure::Conjugation);
  CHECK(validate_cocycle(gl2, minus_one(gl2), block_j2()));
  CHECK(!validate_cocycle(gl2, trivial_central_class(), block_j2()));

  GroupSpec cstar = make_group(Family::CStar, 1, RealStructure::Conjugation);
  CMat z(1, 1);
  z(0, 0) = cdouble(0.3, 1.2);
  CHECK(!validate_cocycle(cstar, minus_one(cstar), z));

  CHECK_THROWS_AS(validate_cocycle(gl3, trivial_central_class(), CMat::Identity(2, 2)), Error);
}

TEST_CASE("class counts match the worked enumerations") {
  GroupSpec gl4c = make_group(Family::GL, 4, RealStructure::CompactType);
  CHECK(enumerate_classes(gl4c, trivial_central_class()).size() == 5);

  GroupSpec cstar = make_group(Family::CStar, 1, RealStructure::CompactType);
  CHECK(enumerate_classes(cstar, trivial_central_class()).size() == 2);

  GroupSpec gl4j = make_group(Family::GL, 4, RealStructure::Conjugation);
  auto quat = enumerate_classes(gl4j, minus_one(gl4j));
  REQUIRE(quat.size() == 1);
  CHECK(quat[0].label.kind == ClassKind::QuaternionicJ);
  GroupSpec gl5j = make_group(Family::GL, 5, RealStructure::Conjugation);
  CHECK(enumerate_classes(gl5j, minus_one(gl5j)).empty());

  GroupSpec so6 = make_group(Family::SO, 6, RealStructure::Conjugation);
  auto diag = enumerate_classes(so6, trivial_central_class());
  REQUIRE(diag.size() == 4);
  for (std::size_t i = 0; i < diag.size(); ++i) {
    CHECK(diag[i].label.kind == ClassKind::DiagPattern);
    CHECK(diag[i].label.k == 2 * static_cast<int>(i));
  }

  // empty set is a value, not an error
  GroupSpec cstar_conj = make_group(Family::CStar, 1, RealStructure::Conjugation);
  CHECK(enumerate_classes(cstar_conj, minus_one(cstar_conj)).empty());
}

TEST_CASE("canonical representatives satisfy the cocycle equation exactly") {
  for (const GroupSpec& g : supported_groups(6)) {
    for (const CentralClass& c : central_parameters(g)) {
      for (const CohomologyClass& cls : enumerate_classes(g, c)) {
        CAPTURE(g.name());
        CAPTURE(cls.label.str());
        CMat s = sigma_raw(g, cls.canonical) * cls.canonical;
        if (g.family == Family::PGL) {
          cdouble lambda = s.trace() / double(g.dim());
          CHECK((s - lambda * CMat::Identity(g.dim(), g.dim())).norm() < 1e-14);
        } else {
          CHECK((s - c.representative(g.dim())).norm() < 1e-14);
        }
        CHECK(in_group(g, cls.canonical, 1e-12));
      }
    }
  }
}

TEST_CASE("normalize recovers the signature of a conjugated hermitian cocycle") {
  GroupSpec gl3 = make_group(Family::GL, 3, RealStructure::CompactType);
  CMat d = CMat::Identity(3, 3);
  d(1, 1) = -1.0;
  d(2, 2) = -1.0;
  Rng rng(42);
  CMat b = random_element(gl3, rng);
  CMat h = (b.adjoint()).inverse() * d * b.inverse();
  // oracle: the sign count of the hermitian matrix h itself
  int neg = oracle::negative_eigenvalue_count(h);
  CHECK(neg == 2);
  NormalizeResult nr = normalize(gl3, trivial_central_class(), h);
  CHECK(nr.cls.label.kind == ClassKind::Signature);
  CHECK(nr.cls.label.p == 1);
  CHECK(nr.cls.label.q == 2);
  CHECK(nr.residual < 1e-8);
}

TEST_CASE("normalize recovers the quaternionic class with a T^2 = -1 oracle") {
  GroupSpec gl4 = make_group(Family::GL, 4, RealStructure::Conjugation);
  CentralClass c = minus_one(gl4);
  auto quat = enumerate_classes(gl4, c);
  REQUIRE(quat.size() == 1);
  Cocycle sample = sample_orbit(gl4, c, quat[0], 1234);
  // oracle: T(a) = h conj(a) squares to -1
  Rng rng(55);
  for (int i = 0; i < 10; ++i) {
    CVec v(4);
    for (int k = 0; k < 4; ++k) v(k) = rng.gauss_complex();
    CVec tt = sample.h * (sample.h * v.conjugate()).conjugate();
    CHECK((tt + v).norm() < 1e-8 * v.norm());
  }
  NormalizeResult nr = normalize(gl4, c, sample.h);
  CHECK(nr.cls.label.kind == ClassKind::QuaternionicJ);
  CHECK(nr.residual < 1e-8);
}

TEST_CASE("identity cocycle normalizes to the base class") {
  for (const GroupSpec& g : supported_groups(4)) {
    if (g.so_outer_twist) continue;  // identity is not a base label under the twist
    NormalizeResult nr = normalize(g, trivial_central_class(), CMat::Identity(g.dim(), g.dim()));
    CAPTURE(g.name());
    bool base = nr.cls.label.kind == ClassKind::PlusOne ||
                (nr.cls.label.kind == ClassKind::Signature && nr.cls.label.q == 0) ||
                (nr.cls.label.kind == ClassKind::DiagPattern && nr.cls.label.k == 0);
    CHECK(base);
    CHECK(nr.residual < 1e-10);
  }
}

TEST_CASE("normalize errors: NotACocycle and NoClassExists") {
  GroupSpec gl3 = make_group(Family::GL, 3, RealStructure::CompactType);
  CMat bad = CMat::Identity(3, 3);
  bad(0, 1) = 0.5;  // not hermitian, sigma(h) h != 1
  CHECK_THROWS_WITH_AS(normalize(gl3, trivial_central_class(), bad),
                       doctest::Contains("NotACocycle"), Error);

  GroupSpec cstar = make_group(Family::CStar, 1, RealStructure::Conjugation);
  CMat u(1, 1);
  u(0, 0) = 1.0;
  CHECK_THROWS_AS(normalize(cstar, minus_one(cstar), u), Error);
}

TEST_CASE("orbit samples validate and normalize back: seeded spot checks") {
  GroupSpec gl3 = make_group(Family::GL, 3, RealStructure::CompactType);
  ClassLabel sig21{ClassKind::Signature, 2, 1};
  CohomologyClass cls{gl3, trivial_central_class(), sig21,
                      canonical_matrix(gl3, trivial_central_class(), sig21)};
  Cocycle sample = sample_orbit(gl3, trivial_central_class(), cls, 7);
  CHECK(validate_cocycle(gl3, trivial_central_class(), sample.h));
  CHECK(oracle::negative_eigenvalue_count(sample.h) == 1);
  CHECK(normalize(gl3, trivial_central_class(), sample.h).cls.label == sig21);

  GroupSpec so4 = make_group(Family::SO, 4, RealStructure::Conjugation);
  ClassLabel d2{ClassKind::DiagPattern};
  d2.k = 2;
  CohomologyClass so_cls{so4, trivial_central_class(), d2,
                         canonical_matrix(so4, trivial_central_class(), d2)};
  Cocycle so_sample = sample_orbit(so4, trivial_central_class(), so_cls, 11);
  CHECK(validate_cocycle(so4, trivial_central_class(), so_sample.h));
  CHECK(normalize(so4, trivial_central_class(), so_sample.h).cls.label == d2);
}

TEST_CASE("both coboundary conventions land in the same class") {
  Rng seeds(808);
  for (const GroupSpec& g : supported_groups(4)) {
    for (const CentralClass& c : central_parameters(g)) {
      for (const CohomologyClass& cls : enumerate_classes(g, c)) {
        Cocycle real_conv = sample_orbit_real_convention(g, c, cls, seeds.engine()());
        CAPTURE(g.name());
        CAPTURE(cls.label.str());
        NormalizeResult nr = normalize(g, c, real_conv.h, 1e-6);
        CHECK(nr.cls.label == cls.label);
      }
    }
  }
}

TEST_CASE("compact-type cocycles are hermitian exactly when c = +1") {
  Rng seeds(909);
  for (int n : {2, 3, 4, 5}) {
    GroupSpec g = make_group(Family::GL, n, RealStructure::CompactType);
    for (const CentralClass& c : central_parameters(g)) {
      for (const CohomologyClass& cls : enumerate_classes(g, c)) {
        Cocycle s = sample_orbit(g, c, cls, seeds.engine()());
        bool hermitian = (s.h - s.h.adjoint()).norm() < 1e-8 * s.h.norm();
        CHECK(hermitian == (c.label == CentralLabel::Trivial));
      }
    }
  }
}

TEST_CASE("distinct classes have separating invariants") {
  for (const GroupSpec& g : supported_groups(6)) {
    for (const CentralClass& c : central_parameters(g)) {
      auto classes = enumerate_classes(g, c);
      std::set<std::string> seen;
      for (const auto& cls : classes) seen.insert(cls.label.str());
      CHECK(seen.size() == classes.size());
    }
  }
}

TEST_CASE("discreteness certificate on the worked examples") {
  GroupSpec gl2 = make_group(Family::GL, 2, RealStructure::CompactType);
  DiscretenessReport rep = verify_discreteness(gl2, CMat::Identity(2, 2));
  CHECK(rep.complex_dim == 4);
  CHECK(rep.dim_kernel_T == 4);
  CHECK(rep.dim_image_Tprime == 4);
  CHECK(rep.containment_ok);
  CHECK(rep.equality_ok);
  CHECK(rep.bounds_ok);

  GroupSpec gl3 = make_group(Family::GL, 3, RealStructure::CompactType);
  CMat d = CMat::Identity(3, 3);
  d(2, 2) = -1.0;
  CHECK(verify_discreteness(gl3, d).containment_ok);

  CMat bad = CMat::Identity(3, 3);
  bad(0, 1) = 0.25;
  CHECK_THROWS_AS(verify_discreteness(gl3, bad), Error);
}

TEST_CASE("orbit recovery fuzz, small scale") {
  SuiteResult suite = orbit_recovery_suite(4, 25, 0xfeedface, 1e-6);
  CHECK(suite.failures == 0);
  CHECK(suite.checks > 0);
}

TEST_CASE("discreteness bounds hold along orbits, not only at canonicals") {
  Rng seeds(616);
  for (const GroupSpec& g : supported_groups(4)) {
    for (const CentralClass& c : central_parameters(g)) {
      for (const CohomologyClass& cls : enumerate_classes(g, c)) {
        Cocycle s = sample_orbit(g, c, cls, seeds.engine()());
        CAPTURE(g.name());
        CAPTURE(cls.label.str());
        DiscretenessReport rep = verify_discreteness(g, s.h, 1e-6);
        CHECK(rep.containment_ok);
        CHECK(rep.equality_ok);
        CHECK(rep.dim_kernel_T <= rep.complex_dim);
        CHECK(rep.dim_image_Tprime >= rep.complex_dim);
      }
    }
  }
}

TEST_CASE("gl(2) compact: iJ is the split signature class") {
  GroupSpec gl2 = make_group(Family::GL, 2, RealStructure::CompactType);
  CMat ij = cdouble(0, 1) * block_j2();
  CHECK(validate_cocycle(gl2, trivial_central_class(), ij));
  NormalizeResult nr = normalize(gl2, trivial_central_class(), ij);
  CHECK(nr.cls.label.kind == ClassKind::Signature);
  CHECK(nr.cls.label.p == 1);
  CHECK(nr.cls.label.q == 1);
}

TEST_CASE("so outer twist folds into the diagonal path") {
  GroupSpec so4o = make_group(Family::SO, 4, RealStructure::Conjugation, true);
  auto classes = enumerate_classes(so4o, trivial_central_class());
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].label.k == 1);
  CHECK(classes[1].label.k == 3);
  for (const auto& cls : classes) {
    Cocycle s = sample_orbit(so4o, trivial_central_class(), cls, 99);
    CHECK(validate_cocycle(so4o, trivial_central_class(), s.h));
    CHECK(normalize(so4o, trivial_central_class(), s.h).cls.label == cls.label);
  }
  CHECK(enumerate_classes(so4o, central_class(so4o, CentralLabel::MinusOne)).empty());
}
