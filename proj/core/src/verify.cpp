#include "realbundles/verify.hpp"

#include <sstream>

namespace rbp {

namespace {

void record_failure(SuiteResult& suite, const std::string& detail) {
  ++suite.failures;
  if (suite.details.size() < 25) suite.details.push_back(detail);
}

bool chi_search_accepts(int g, CurveKind kind, int r) {
  // Search for quotient data (genus0, delta count) whose double has Euler
  // characteristic 2 - 2g. The delta menu follows the boundary structure:
  // type 0 and type II close up through one invariant circle or an
  // interchanged pair; type I has fixed circles only.
  std::vector<int> delta_menu;
  switch (kind) {
    case CurveKind::Type0:
      if (r != 0) return false;
      delta_menu = {1, 2};
      break;
    case CurveKind::TypeI:
      if (r < 1) return false;
      delta_menu = {0};
      break;
    case CurveKind::TypeII:
      if (r < 1) return false;
      delta_menu = {2};
      break;
  }
  for (int deltas : delta_menu)
    for (int h = 0; h <= g + 2; ++h)
      if (2 * (2 - 2 * h - (r + deltas)) == 2 - 2 * g) return true;
  return false;
}

}  // namespace

std::vector<GroupSpec> supported_groups(int max_n) {
  std::vector<GroupSpec> out;
  out.push_back(make_group(Family::CStar, 1, RealStructure::CompactType));
  out.push_back(make_group(Family::CStar, 1, RealStructure::Conjugation));
  for (int n = 2; n <= max_n; ++n) {
    out.push_back(make_group(Family::GL, n, RealStructure::CompactType));
    out.push_back(make_group(Family::GL, n, RealStructure::Conjugation));
    out.push_back(make_group(Family::SL, n, RealStructure::CompactType));
    if (n >= 3) out.push_back(make_group(Family::SO, n, RealStructure::Conjugation));
    if (n >= 4 && n % 2 == 0)
      out.push_back(make_group(Family::SO, n, RealStructure::Conjugation, true));
    out.push_back(make_group(Family::PGL, n, RealStructure::CompactType));
    out.push_back(make_group(Family::PGL, n, RealStructure::Conjugation));
  }
  return out;
}

SuiteResult orbit_recovery_suite(int max_n, int samples, std::uint64_t seed, double witness_tol) {
  SuiteResult suite{"orbit-recovery"};
  for (const GroupSpec& g : supported_groups(max_n)) {
    for (const CentralClass& c : central_parameters(g)) {
      for (const CohomologyClass& cls : enumerate_classes(g, c)) {
        for (int s = 0; s < samples; ++s) {
          ++suite.checks;
          std::uint64_t sample_seed = seed + 1315423911ULL * suite.checks;
          Cocycle sample = sample_orbit(g, c, cls, sample_seed);
          try {
            NormalizeResult nr = normalize(g, c, sample.h, 1e-6);
            if (!(nr.cls.label == cls.label)) {
              std::ostringstream os;
              os << g.name() << " c=" << central_label_name(c.label) << " " << cls.label.str()
                 << " seed=" << sample_seed << ": recovered " << nr.cls.label.str();
              record_failure(suite, os.str());
            } else if (nr.residual > witness_tol) {
              std::ostringstream os;
              os << g.name() << " " << cls.label.str() << " seed=" << sample_seed
                 << ": witness residual " << nr.residual;
              record_failure(suite, os.str());
            }
          } catch (const Error& e) {
            record_failure(suite, g.name() + " " + cls.label.str() + ": " + e.what());
          }
        }
      }
    }
  }
  return suite;
}

SuiteResult discreteness_suite(int max_n, double tol) {
  SuiteResult suite{"discreteness"};
  for (const GroupSpec& g : supported_groups(max_n)) {
    for (const CohomologyClass& cls : enumerate_all_classes(g)) {
      ++suite.checks;
      try {
        DiscretenessReport rep = verify_discreteness(g, cls.canonical, tol);
        if (!rep.containment_ok || !rep.equality_ok || !rep.bounds_ok) {
          std::ostringstream os;
          os << g.name() << " " << cls.label.str() << ": ker(T)=" << rep.dim_kernel_T
             << " im(T')=" << rep.dim_image_Tprime << " dim_C=" << rep.complex_dim
             << (rep.containment_ok ? "" : " containment-failed");
          record_failure(suite, os.str());
        }
      } catch (const Error& e) {
        record_failure(suite, g.name() + " " + cls.label.str() + ": " + e.what());
      }
    }
  }
  return suite;
}

SuiteResult stabilizer_dimension_suite(int max_n, double tol) {
  SuiteResult suite{"stabilizer-dimension"};
  for (const GroupSpec& g : supported_groups(max_n)) {
    for (const CohomologyClass& cls : enumerate_all_classes(g)) {
      ++suite.checks;
      try {
        if (!stabilizer_dimension_check(g, cls.canonical, tol))
          record_failure(suite, g.name() + " " + cls.label.str() + ": fixed-space dimension");
      } catch (const Error& e) {
        record_failure(suite, g.name() + " " + cls.label.str() + ": " + e.what());
      }
    }
  }
  return suite;
}

SuiteResult sequence_suite(int max_n) {
  SuiteResult suite{"exact-sequence"};
  for (const GroupSpec& g : supported_groups(max_n)) {
    if (g.family == Family::SO) continue;
    ++suite.checks;
    try {
      SequenceReport rep = verify_exact_sequence(g);
      if (!rep.exactness_ok || !rep.lifts_ok)
        record_failure(suite, g.name() + ": " + rep.display +
                                  (rep.lifts_ok ? "" : " (lift failure)"));
      for (std::size_t i = 0; i < rep.fiber_sizes.size(); ++i)
        if (rep.fiber_sizes[i] > rep.h1_center_size)
          record_failure(suite, g.name() + ": fiber exceeds |H^1(Z)|");
    } catch (const Error& e) {
      record_failure(suite, g.name() + std::string(": ") + e.what());
    }
  }
  return suite;
}

SuiteResult census_suite(int max_n, int max_r) {
  SuiteResult suite{"census"};
  for (RealStructure structure : {RealStructure::Conjugation, RealStructure::CompactType}) {
    for (int n = 2; n <= max_n; ++n) {
      GroupSpec g = make_group(Family::GL, n, structure);
      for (int r = 1; r <= max_r; ++r) {
        RealCurve curve = make_curve(r + 1, CurveKind::TypeI, r);
        for (long d : {0L, 1L}) {
          ++suite.checks;
          try {
            CensusResult closed = count_components(g, curve, d);
            CensusResult brute = brute_force_census(g, curve, d);
            if (closed.count != brute.count) {
              std::ostringstream os;
              os << g.name() << " r=" << r << " d=" << d << ": closed " << closed.count
                 << " vs brute " << brute.count;
              record_failure(suite, os.str());
            }
          } catch (const Error& e) {
            record_failure(suite, g.name() + std::string(": ") + e.what());
          }
        }
      }
    }
  }
  return suite;
}

SuiteResult curve_suite(int max_genus) {
  SuiteResult suite{"curve-topology"};
  for (int g = 0; g <= max_genus; ++g) {
    for (CurveKind kind : {CurveKind::Type0, CurveKind::TypeI, CurveKind::TypeII}) {
      for (int r = 0; r <= g + 3; ++r) {
        ++suite.checks;
        bool accepted = true;
        try {
          RealCurve curve = make_curve(g, kind, r);
          QuotientData q = quotient_data(curve);
          if (!q.doubling_consistent(g)) {
            std::ostringstream os;
            os << curve.str() << ": doubling chi mismatch";
            record_failure(suite, os.str());
          }
        } catch (const Error& e) {
          if (e.code() != Errc::InvalidTopology) throw;
          accepted = false;
        }
        if (accepted != chi_search_accepts(g, kind, r)) {
          std::ostringstream os;
          os << "(g=" << g << ", " << curve_kind_name(kind) << ", r=" << r
             << "): acceptance disagrees with the chi oracle";
          record_failure(suite, os.str());
        }
      }
    }
  }
  return suite;
}

VerifyReport run_verification(int samples, std::uint64_t seed) {
  VerifyReport report;
  report.suites.push_back(orbit_recovery_suite(5, samples, seed));
  report.suites.push_back(discreteness_suite(4));
  report.suites.push_back(stabilizer_dimension_suite(4));
  report.suites.push_back(sequence_suite(6));
  report.suites.push_back(census_suite(5, 8));
  report.suites.push_back(curve_suite(10));
  return report;
}

}  // namespace rbp
