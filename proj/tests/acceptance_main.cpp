// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Expected values are frozen from the classical tables, with the
// two documented corrections (the sl(2n) n-even H^2 row and pi_0 of odd
// GL(n,R)) asserted together with their discrepancy flags.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "realbundles/json_io.hpp"
#include "realbundles/verify.hpp"

using namespace rbp;

namespace {

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<bool(std::string&)> body;
};

using LabelSet = std::multiset<std::string>;

LabelSet labels_of(const std::vector<CohomologyClass>& classes) {
  LabelSet out;
  for (const auto& c : classes) out.insert(c.label.str());
  return out;
}

std::string sig(int p, int q, bool unordered = false) {
  ClassLabel l{ClassKind::Signature, p, q};
  l.unordered = unordered;
  return l.str();
}
std::string isig(int p, int q) { return ClassLabel{ClassKind::ImaginarySignature, p, q}.str(); }
std::string diag(int k) {
  ClassLabel l{ClassKind::DiagPattern};
  l.k = k;
  return l.str();
}

struct ExpectedRow {
  LabelSet h1_center, h1, h1_minus, adjoint, h2;
  bool minus_available = false;
  bool adjoint_modeled = true;
  bool needs_flag = false;
};

ExpectedRow expected_point_row(const GroupSpec& g) {
  ExpectedRow row;
  const int n = g.n;
  auto fill_signatures = [&](LabelSet& out, int parity_start, int step) {
    for (int q = parity_start; q <= n; q += step) out.insert(sig(n - q, q));
  };
  switch (g.family) {
    case Family::CStar:
      if (g.structure == RealStructure::CompactType) {
        row.h1_center = {"+1", "-1"};
        row.h1 = {"+1", "-1"};
        row.h1_minus = {isig(1, 0), isig(0, 1)};
        row.minus_available = true;
        row.adjoint = {sig(1, 0, true)};
        row.h2 = {"+1"};
      } else {
        row.h1_center = {"+1"};
        row.h1 = {"+1"};
        row.h1_minus = {};
        row.minus_available = true;
        row.adjoint = {"+1"};
        row.h2 = {"+1", "-1"};
      }
      break;
    case Family::GL:
      if (g.structure == RealStructure::CompactType) {
        row.h1_center = {"+1", "-1"};
        fill_signatures(row.h1, 0, 1);
        for (int q = 0; q <= n; ++q) row.h1_minus.insert(isig(n - q, q));
        row.minus_available = true;
        for (int q = 0; 2 * q <= n; ++q) row.adjoint.insert(sig(n - q, q, true));
        row.h2 = {"+1"};
      } else {
        row.h1_center = {"+1"};
        row.h1 = {"+1"};
        if (n % 2 == 0) row.h1_minus = {"J"};
        row.minus_available = true;
        row.adjoint = n % 2 == 0 ? LabelSet{"+1", "J"} : LabelSet{"+1"};
        row.h2 = {"+1", "-1"};
        row.needs_flag = n % 2 == 1;  // pi_0 of GL(odd, R) differs from the printed table
      }
      break;
    case Family::SL: {
      fill_signatures(row.h1, 0, 2);
      for (int q = 0; 2 * q <= n; ++q) row.adjoint.insert(sig(n - q, q, true));
      if (n % 2 == 1) {
        row.h1_center = {"+1"};
        row.h2 = {"+1"};
      } else {
        row.h1_center = {"+1", "-1"};
        row.minus_available = true;
        int start = (n / 2) % 2;
        for (int q = start; q <= n; q += 2) row.h1_minus.insert(isig(n - q, q));
        if ((n / 2) % 2 == 0) {
          row.h2 = {"+1", "order-4"};  // literal evaluation; printed table says {+1,-1}
          row.needs_flag = true;
        } else {
          row.h2 = {"+1", "-1"};
        }
      }
      break;
    }
    case Family::SO:
      row.h1_center = n % 2 == 0 ? LabelSet{"+1", "-1"} : LabelSet{"+1"};
      for (int k = 0; k <= n; k += 2) row.h1.insert(diag(k));
      if (n % 2 == 0) {
        row.h1_minus = {"J"};
        row.minus_available = true;
        row.h2 = {"+1", "-1"};
      } else {
        row.h2 = {"+1"};
      }
      row.adjoint_modeled = false;
      break;
    case Family::PGL:
      row.h1_center = {"+1"};
      row.h2 = {"+1"};
      if (g.structure == RealStructure::CompactType) {
        for (int q = 0; 2 * q <= n; ++q) row.h1.insert(sig(n - q, q, true));
      } else {
        row.h1 = n % 2 == 0 ? LabelSet{"+1", "J"} : LabelSet{"+1"};
      }
      row.adjoint = row.h1;
      break;
  }
  return row;
}

struct ExpectedPi0 {
  std::string form;
  int pi0 = 1;
  bool needs_flag = false;
};

ExpectedPi0 expected_pi0(const GroupSpec& g, const CohomologyClass& cls) {
  const int n = g.dim();
  const ClassLabel& l = cls.label;
  std::ostringstream os;
  switch (g.family) {
    case Family::CStar:
      return g.structure == RealStructure::CompactType ? ExpectedPi0{"S^1", 1}
                                                       : ExpectedPi0{"R^*", 2};
    case Family::GL:
      if (g.structure == RealStructure::CompactType) {
        os << "U(" << l.p << "," << l.q << ")";
        return {os.str(), 1};
      }
      if (l.kind == ClassKind::QuaternionicJ) {
        os << "GL(" << n / 2 << ",H)";
        return {os.str(), 1};
      }
      os << "GL(" << n << ",R)";
      // the printed table says {1} for odd n; the engine corrects to Z/2
      return {os.str(), 2, n % 2 == 1};
    case Family::SL:
      os << "SU(" << l.p << "," << l.q << ")";
      return {os.str(), 1};
    case Family::SO:
      if (l.kind == ClassKind::QuaternionicJ) {
        os << "SU*(" << n / 2 << ")";
        return {os.str(), 1};
      }
      if (l.k == 0 || l.k == n) {
        os << "SO(" << n << ")";
        // for odd n the printed row says SO(n-1); corrected to the compact SO(n)
        return {os.str(), 1, n % 2 == 1};
      }
      os << "SO(" << n - l.k << "," << l.k << ")";
      return {os.str(), 2};
    case Family::PGL:
      return {"", 1};
  }
  return {"", 1};
}

std::string set_to_string(const LabelSet& s) {
  std::string out = "{";
  for (auto it = s.begin(); it != s.end(); ++it) {
    if (it != s.begin()) out += ",";
    out += *it;
  }
  return out + "}";
}

// --- criteria ---------------------------------------------------------------

bool criterion_point_table(std::string& detail) {
  int bad = 0;
  std::ostringstream log;
  for (const PointTableRow& row : build_point_table(default_table_groups())) {
    ExpectedRow exp = expected_point_row(row.group);
    LabelSet h1c(row.h1_center.begin(), row.h1_center.end());
    LabelSet h1(row.h1_classes.begin(), row.h1_classes.end());
    LabelSet h1m(row.h1_minus_classes.begin(), row.h1_minus_classes.end());
    LabelSet adj(row.h1_adjoint.begin(), row.h1_adjoint.end());
    LabelSet h2(row.h2.begin(), row.h2.end());
    bool ok = h1c == exp.h1_center && h1 == exp.h1 && h1m == exp.h1_minus &&
              row.minus_param_available == exp.minus_available &&
              row.adjoint_modeled == exp.adjoint_modeled &&
              (!exp.adjoint_modeled || adj == exp.adjoint) && h2 == exp.h2 &&
              (!exp.needs_flag || !row.flags.empty());
    if (!ok) {
      ++bad;
      log << " " << row.group.name() << " got " << set_to_string(h1) << "/"
          << set_to_string(h2) << " want " << set_to_string(exp.h1) << "/"
          << set_to_string(exp.h2) << ";";
    }
  }
  detail = bad ? "mismatched rows:" + log.str() : "all rows match";
  return bad == 0;
}

bool criterion_pi0_table(std::string& detail) {
  int rows = 0, bad = 0;
  std::ostringstream log;
  for (const GroupSpec& g : default_table_groups()) {
    if (g.family == Family::PGL) continue;
    for (const CentralClass& c : central_parameters(g)) {
      for (const CohomologyClass& cls : enumerate_classes(g, c)) {
        ++rows;
        RealFormDescriptor got = stabilizer_form(g, cls);
        ExpectedPi0 exp = expected_pi0(g, cls);
        bool flag_ok = !exp.needs_flag || !group_flags(g).empty();
        if (got.str() != exp.form || got.pi0_size != exp.pi0 || !flag_ok) {
          ++bad;
          log << " " << g.name() << ":" << cls.label.str() << " got " << got.str() << "/"
              << got.pi0_size << " want " << exp.form << "/" << exp.pi0 << ";";
        }
      }
    }
  }
  std::ostringstream d;
  d << rows << " rows";
  if (bad) d << ", mismatches:" << log.str();
  detail = d.str();
  return bad == 0;
}

bool criterion_orbit_fuzz(std::string& detail) {
  SuiteResult suite = orbit_recovery_suite(6, 200, 0xacce97, 1e-6);
  std::ostringstream d;
  d << suite.checks << " samples, " << suite.failures << " failures";
  if (!suite.details.empty()) d << "; first: " << suite.details[0];
  detail = d.str();
  return suite.failures == 0;
}

bool criterion_discreteness(std::string& detail) {
  SuiteResult suite = discreteness_suite(5, 1e-8);
  std::ostringstream d;
  d << suite.checks << " canonical representatives, " << suite.failures << " failures";
  if (!suite.details.empty()) d << "; first: " << suite.details[0];
  detail = d.str();
  return suite.failures == 0;
}

bool criterion_sequences(std::string& detail) {
  int bad = 0;
  std::ostringstream log;
  auto expect = [&](const GroupSpec& g, const std::string& display) {
    SequenceReport rep = verify_exact_sequence(g);
    bool ok = rep.exactness_ok && rep.lifts_ok && (display.empty() || rep.display == display);
    if (!ok) {
      ++bad;
      log << " " << g.name() << " -> '" << rep.display << "';";
    }
  };
  for (int n = 2; n <= 6; ++n) {
    expect(make_group(Family::GL, n, RealStructure::CompactType), "");
    expect(make_group(Family::GL, n, RealStructure::Conjugation),
           n % 2 ? "0 -> 0 -> 0 -> {±1}" : "0 -> 0 -> {±1} -> {±1}");
  }
  expect(make_group(Family::CStar, 1, RealStructure::CompactType), "");
  expect(make_group(Family::CStar, 1, RealStructure::Conjugation), "");
  detail = bad ? "failures:" + log.str() : "exact, displayed sequences verbatim";
  return bad == 0;
}

bool criterion_census(std::string& detail) {
  int bad = 0;
  long long checks = 0;
  for (RealStructure st : {RealStructure::Conjugation, RealStructure::CompactType}) {
    for (int n = 2; n <= 5; ++n) {
      GroupSpec g = make_group(Family::GL, n, st);
      for (int r = 1; r <= 12; ++r) {
        RealCurve curve = make_curve(r + 1, CurveKind::TypeI, r);
        for (long d : {0L, 1L}) {
          ++checks;
          if (count_components(g, curve, d).count != brute_force_census(g, curve, d).count)
            ++bad;
        }
      }
    }
  }
  // the four classical component-count cases at r in {1,3,5,7}
  for (int r : {1, 3, 5, 7}) {
    RealCurve curve = make_curve(r + 1, CurveKind::TypeI, r);
    unsigned long long half = 1ULL << (r - 1);
    GroupSpec odd_rank = make_group(Family::GL, 3, RealStructure::Conjugation);
    GroupSpec even_rank = make_group(Family::GL, 2, RealStructure::Conjugation);
    ++checks;
    if (count_components(odd_rank, curve, 1).count != half) ++bad;
    ++checks;
    if (count_components(odd_rank, curve, 0).count != half) ++bad;
    ++checks;
    if (count_components(even_rank, curve, 1).count != half) ++bad;
    ++checks;
    if (count_components(even_rank, curve, 0).count != half + 1) ++bad;
  }
  std::ostringstream d;
  d << checks << " identities, " << bad << " failures";
  detail = d.str();
  return bad == 0;
}

bool criterion_stabilizer_dims(std::string& detail) {
  SuiteResult suite = stabilizer_dimension_suite(5, 1e-8);
  std::ostringstream d;
  d << suite.checks << " canonical representatives, " << suite.failures << " failures";
  detail = d.str();
  return suite.failures == 0;
}

bool criterion_curves(std::string& detail) {
  int bad = 0, checks = 0;
  for (int g = 0; g <= 10; ++g) {
    for (int kind = 0; kind <= 2; ++kind) {
      CurveKind ck = kind == 0 ? CurveKind::Type0 : (kind == 1 ? CurveKind::TypeI : CurveKind::TypeII);
      for (int r = 0; r <= g + 3; ++r) {
        ++checks;
        bool accepted = true;
        bool doubling = true;
        try {
          RealCurve curve = make_curve(g, ck, r);
          doubling = quotient_data(curve).doubling_consistent(g);
        } catch (const Error&) {
          accepted = false;
        }
        if (accepted != oracle::chi_accepts(g, kind, r) || !doubling) ++bad;
      }
    }
  }
  std::ostringstream d;
  d << checks << " triples, " << bad << " failures";
  detail = d.str();
  return bad == 0;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"1 point-class table reproduction", 5.0, criterion_point_table},
      {"2 pi_0 table reproduction", 1.0, criterion_pi0_table},
      {"3 orbit-recovery fuzz (200 samples/class, n <= 6)", 60.0, criterion_orbit_fuzz},
      {"4 discreteness certificates (n <= 5)", 30.0, criterion_discreteness},
      {"5 exact sequences and displayed forms", 5.0, criterion_sequences},
      {"6 census identity (r <= 12) and the classical component-count cases", 10.0, criterion_census},
      {"7 stabilizer dimensions (n <= 5)", 30.0, criterion_stabilizer_dims},
      {"8 curve topology vs the Euler-characteristic oracle", 1.0, criterion_curves},
  };
  int failures = 0;
  for (Criterion& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = secs < c.budget_seconds;
    if (!ok || !in_budget) ++failures;
    std::printf("[%s] criterion %s: %s (%.2f s, budget %.0f s)\n",
                ok && in_budget ? "PASS" : "FAIL", c.name.c_str(), detail.c_str(), secs,
                c.budget_seconds);
  }
  return failures == 0 ? 0 : 1;
}
