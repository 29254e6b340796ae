#include <doctest.h>

#include "realbundles/json_io.hpp"
#include "realbundles/tables.hpp"
#include "realbundles/verify.hpp"

using namespace rbp;

TEST_CASE("json round-trips for the result types") {
  GroupSpec g = parse_group("gl4-conj");
  CentralClass m1 = central_class(g, CentralLabel::MinusOne);
  auto classes = enumerate_classes(g, m1);
  REQUIRE(!classes.empty());

  SUBCASE("cohomology class") {
    json j = classes[0];
    auto back = j.get<CohomologyClass>();
    CHECK(back.group == classes[0].group);
    CHECK(back.label == classes[0].label);
    CHECK((back.canonical - classes[0].canonical).norm() == 0.0);
  }
  SUBCASE("real form descriptor") {
    RealFormDescriptor d = stabilizer_form(g, classes[0]);
    json j = d;
    CHECK(j.get<RealFormDescriptor>() == d);
  }
  SUBCASE("curve and quotient") {
    RealCurve curve = make_curve(5, CurveKind::TypeII, 2);
    json j = curve;
    CHECK(j.get<RealCurve>() == curve);
    QuotientData q = quotient_data(curve);
    json jq = q;
    auto qb = jq.get<QuotientData>();
    CHECK(qb.genus0 == q.genus0);
    CHECK(qb.boundaries == q.boundaries);
  }
  SUBCASE("types") {
    auto types = enumerate_types(g, make_curve(2, CurveKind::TypeI, 1),
                                 trivial_central_class(), {-2, 2});
    json j = types;
    auto back = j.get<std::vector<TopologicalType>>();
    CHECK(back == types);
  }
  SUBCASE("census") {
    CensusResult res =
        count_components(g, make_curve(4, CurveKind::TypeI, 3), 0, CentralLabel::Trivial);
    json j = res;
    auto back = j.get<CensusResult>();
    CHECK(back.count == res.count);
    CHECK(back.breakdown == res.breakdown);
    CHECK(back.c_filter == res.c_filter);
    CHECK(back.degree == res.degree);
  }
  SUBCASE("sequence report") {
    SequenceReport rep = verify_exact_sequence(parse_group("gl4-compact"));
    json j = rep;
    auto back = j.get<SequenceReport>();
    CHECK(back.display == rep.display);
    CHECK(back.h1_g == rep.h1_g);
    CHECK(back.fiber_sizes == rep.fiber_sizes);
    CHECK(back.exactness_ok == rep.exactness_ok);
  }
  SUBCASE("discreteness report") {
    DiscretenessReport rep = verify_discreteness(parse_group("gl2-compact"), identity(2));
    json j = rep;
    auto back = j.get<DiscretenessReport>();
    CHECK(back.dim_kernel_T == rep.dim_kernel_T);
    CHECK(back.dim_image_Tprime == rep.dim_image_Tprime);
  }
}

TEST_CASE("tables are byte-stable across builds") {
  auto groups = default_table_groups();
  std::string a = render_point_table(build_point_table(groups)) +
                  render_pi0_table(build_pi0_table(groups));
  std::string b = render_point_table(build_point_table(groups)) +
                  render_pi0_table(build_pi0_table(groups));
  CHECK(a == b);
  CHECK(!a.empty());
}

TEST_CASE("verification failure aggregation trips the report") {
  VerifyReport report;
  report.suites.push_back(SuiteResult{"stub-pass", 3, 0, {}});
  CHECK(report.all_passed());
  report.suites.push_back(SuiteResult{"stub-fail", 3, 1, {"broken normalizer stand-in"}});
  CHECK(!report.all_passed());
}
