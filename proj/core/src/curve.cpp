#include "realbundles/curve.hpp"

#include <algorithm>
#include <sstream>

namespace rbp {

const char* curve_kind_name(CurveKind k) {
  switch (k) {
    case CurveKind::Type0: return "0";
    case CurveKind::TypeI: return "I";
    case CurveKind::TypeII: return "II";
  }
  return "?";
}

CurveKind parse_curve_kind(const std::string& s) {
  if (s == "0") return CurveKind::Type0;
  if (s == "I" || s == "i" || s == "1") return CurveKind::TypeI;
  if (s == "II" || s == "ii" || s == "2") return CurveKind::TypeII;
  fail(Errc::BadArgument, "curve kind must be 0, I or II");
}

std::string RealCurve::str() const {
  std::ostringstream os;
  os << "(g=" << genus << ", type " << curve_kind_name(kind) << ", r=" << r << ")";
  return os.str();
}

RealCurve make_curve(int genus, CurveKind kind, int r) {
  if (genus < 0) fail(Errc::InvalidTopology, "genus must be non-negative");
  switch (kind) {
    case CurveKind::Type0:
      if (r != 0) fail(Errc::InvalidTopology, "type 0 means no fixed circles");
      break;
    case CurveKind::TypeI:
      if (r < 1 || r > genus + 1)
        fail(Errc::InvalidTopology, "type I requires 1 <= r <= g+1");
      if ((genus + 1 - r) % 2 != 0)
        fail(Errc::InvalidTopology, "type I requires r = g+1 (mod 2): the quotient genus "
                                    "(g+1-r)/2 must be an integer");
      break;
    case CurveKind::TypeII:
      if (r < 1) fail(Errc::InvalidTopology, "type II requires at least one fixed circle");
      if (genus - r - 1 < 0 || (genus - r - 1) % 2 != 0)
        fail(Errc::InvalidTopology,
             "type II requires (g-r-1)/2 to be a non-negative integer");
      break;
  }
  return RealCurve{genus, kind, r};
}

const char* boundary_tag_name(BoundaryTag t) {
  switch (t) {
    case BoundaryTag::FixedCircle: return "gamma";
    case BoundaryTag::InvariantCircle: return "delta";
    case BoundaryTag::InterchangedPair: return "delta-pair";
  }
  return "?";
}

QuotientData quotient_data(const RealCurve& curve) {
  QuotientData out;
  const int g = curve.genus;
  switch (curve.kind) {
    case CurveKind::Type0:
      if (g % 2 == 0) {
        out.genus0 = g / 2;
        out.boundaries = {BoundaryTag::InvariantCircle};
      } else {
        out.genus0 = (g - 1) / 2;
        out.boundaries = {BoundaryTag::InterchangedPair, BoundaryTag::InterchangedPair};
      }
      break;
    case CurveKind::TypeI:
      out.genus0 = (g + 1 - curve.r) / 2;
      out.boundaries.assign(curve.r, BoundaryTag::FixedCircle);
      break;
    case CurveKind::TypeII:
      out.genus0 = (g - curve.r - 1) / 2;
      out.boundaries.assign(curve.r, BoundaryTag::FixedCircle);
      // (g-r-1)/2 leaves the Euler characteristic one delta circle short of
      // doubling; the invariant boundary is an interchanged pair.
      out.boundaries.push_back(BoundaryTag::InterchangedPair);
      out.boundaries.push_back(BoundaryTag::InterchangedPair);
      break;
  }
  return out;
}

bool operator==(const TopologicalType& a, const TopologicalType& b) {
  return a.c.label == b.c.label && a.alphas == b.alphas && a.betas == b.betas &&
         a.degree == b.degree;
}

bool type_less(const TopologicalType& a, const TopologicalType& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  if (a.alphas != b.alphas)
    return std::lexicographical_compare(a.alphas.begin(), a.alphas.end(), b.alphas.begin(),
                                        b.alphas.end());
  for (std::size_t i = 0; i < a.betas.size() && i < b.betas.size(); ++i)
    if (a.betas[i].index != b.betas[i].index) return a.betas[i].index < b.betas[i].index;
  return a.betas.size() < b.betas.size();
}

int beta_range(const GroupSpec& g, const CohomologyClass& alpha, bool& known) {
  if (g.family == Family::PGL) {
    known = false;  // pi_0 table has no projective rows; never guessed
    return 1;
  }
  known = true;
  return stabilizer_form(g, alpha).pi0_size;
}

namespace {

std::vector<long> degree_domain(const GroupSpec& g, const DegreeWindow& window) {
  FundamentalGroupDescriptor pi1 = fundamental_group(g);
  std::vector<long> out;
  switch (pi1.kind) {
    case Pi1Kind::Trivial: out.push_back(0); break;
    case Pi1Kind::ZmodK:
      for (int d = 0; d < pi1.k; ++d) out.push_back(d);
      break;
    case Pi1Kind::Z:
      if (window.lo > window.hi) fail(Errc::BadArgument, "empty degree window");
      for (long d = window.lo; d <= window.hi; ++d) out.push_back(d);
      break;
  }
  return out;
}

bool conjugation_like(const GroupSpec& g) {
  return (g.family == Family::GL || g.family == Family::CStar) &&
         g.structure == RealStructure::Conjugation;
}

bool compact_like(const GroupSpec& g) {
  return (g.family == Family::GL || g.family == Family::CStar) &&
         g.structure == RealStructure::CompactType;
}

}  // namespace

namespace {

// The family-specific arithmetic constraint; per-circle validity is checked
// separately.
bool degree_constraint(const GroupSpec& g, const RealCurve& curve, const CentralClass& c,
                       long degree, long sw_sum) {
  if (conjugation_like(g)) {
    if (c.label == CentralLabel::Trivial) return ((degree - sw_sum) % 2 + 2) % 2 == 0;
    // quaternionic: degree = rank * (genus - 1) mod 2
    long target = static_cast<long>(g.dim()) * (curve.genus - 1);
    return ((degree - target) % 2 + 2) % 2 == 0;
  }
  if (compact_like(g)) return degree % 2 == 0;
  return true;
}

}  // namespace

bool check_constraints(const GroupSpec& g, const RealCurve& curve, const TopologicalType& t) {
  if (t.alphas.size() != static_cast<std::size_t>(curve.r)) return false;
  if (t.betas.size() != t.alphas.size()) return false;
  long sw_sum = 0;
  for (std::size_t i = 0; i < t.alphas.size(); ++i) {
    CohomologyClass cls{g, t.c, t.alphas[i], canonical_matrix(g, t.c, t.alphas[i])};
    bool known = true;
    int range = beta_range(g, cls, known);
    if (t.betas[i].known != known) return false;
    if (t.betas[i].index < 0 || t.betas[i].index >= range) return false;
    sw_sum += t.betas[i].index;
  }
  return degree_constraint(g, curve, t.c, t.degree, sw_sum);
}

std::vector<TopologicalType> enumerate_types(const GroupSpec& g, const RealCurve& curve,
                                             const CentralClass& c, const DegreeWindow& window) {
  // reject invalid curves up front
  make_curve(curve.genus, curve.kind, curve.r);

  std::vector<CohomologyClass> classes = enumerate_classes(g, c);
  std::vector<long> degrees = degree_domain(g, window);
  const int r = curve.r;

  std::vector<TopologicalType> out;
  if (r > 0 && classes.empty()) return out;

  // per-class beta ranges
  std::vector<int> ranges(classes.size());
  std::vector<bool> knowns(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    bool known = true;
    ranges[i] = beta_range(g, classes[i], known);
    knowns[i] = known;
  }

  double total = static_cast<double>(degrees.size());
  if (r > 0) {
    double per_circle = 0;
    for (std::size_t i = 0; i < classes.size(); ++i) per_circle += ranges[i];
    for (int i = 0; i < r; ++i) total *= per_circle;
    if (total > 5e6) fail(Errc::TooLarge, "type enumeration would exceed the materialization cap");
  }

  std::vector<std::size_t> alpha_idx(r, 0);
  std::vector<int> beta_idx(r, 0);
  for (long d : degrees) {
    if (r == 0) {
      TopologicalType t{c, {}, {}, d};
      if (degree_constraint(g, curve, c, d, 0)) out.push_back(t);
      continue;
    }
    std::fill(alpha_idx.begin(), alpha_idx.end(), 0);
    std::fill(beta_idx.begin(), beta_idx.end(), 0);
    long sw_sum = 0;
    for (;;) {
      if (degree_constraint(g, curve, c, d, sw_sum)) {
        TopologicalType t;
        t.c = c;
        t.degree = d;
        t.alphas.reserve(r);
        t.betas.reserve(r);
        for (int i = 0; i < r; ++i) {
          t.alphas.push_back(classes[alpha_idx[i]].label);
          t.betas.push_back({beta_idx[i], knowns[alpha_idx[i]]});
        }
        out.push_back(std::move(t));
      }
      // odometer over (alpha, beta) pairs, last circle fastest
      int pos = r - 1;
      while (pos >= 0) {
        sw_sum -= beta_idx[pos];
        if (++beta_idx[pos] < ranges[alpha_idx[pos]]) {
          sw_sum += beta_idx[pos];
          break;
        }
        beta_idx[pos] = 0;  // the reset beta contributes 0
        if (++alpha_idx[pos] < classes.size()) break;
        alpha_idx[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  std::sort(out.begin(), out.end(), type_less);
  return out;
}

}  // namespace rbp
