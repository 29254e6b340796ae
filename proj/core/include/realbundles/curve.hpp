#pragma once

#include <string>
#include <vector>

#include "realbundles/cocycle.hpp"
#include "realbundles/sequence.hpp"

namespace rbp {

// Topological types of real curves (X, sigma_X) and of (pseudo-)real
// principal bundles over them.

enum class CurveKind { Type0, TypeI, TypeII };

const char* curve_kind_name(CurveKind k);
CurveKind parse_curve_kind(const std::string& s);

struct RealCurve {
  int genus = 0;
  CurveKind kind = CurveKind::TypeI;
  int r = 0;  // fixed circles of sigma_X

  std::string str() const;
  friend bool operator==(const RealCurve&, const RealCurve&) = default;
};

// Validates the (g, kind, r) triple:
//   Type0:  r = 0
//   TypeI:  1 <= r <= g+1 and r = g+1 (mod 2); quotient genus (g+1-r)/2
//   TypeII: r >= 1 and (g-r-1)/2 a non-negative integer
// Throws InvalidTopology otherwise.
RealCurve make_curve(int genus, CurveKind kind, int r);

enum class BoundaryTag {
  FixedCircle,       // gamma_i, fixed pointwise
  InvariantCircle,   // delta split into I_0 and sigma(I_0)
  InterchangedPair,  // one of a pair delta, sigma(delta)
};

const char* boundary_tag_name(BoundaryTag t);

struct QuotientData {
  int genus0 = 0;
  std::vector<BoundaryTag> boundaries;

  int euler_characteristic() const {
    return 2 - 2 * genus0 - static_cast<int>(boundaries.size());
  }
  // The double X_0 u sigma(X_0) glued along all boundary circles.
  bool doubling_consistent(int genus) const {
    return 2 * euler_characteristic() == 2 - 2 * genus;
  }
};

QuotientData quotient_data(const RealCurve& curve);

// --- bundle types ------------------------------------------------------------

struct BetaChoice {
  int index = 0;      // index into the pi_0 labels of Stab(h_alpha)
  bool known = true;  // false when the pi_0 table is silent (projective groups)

  friend bool operator==(const BetaChoice&, const BetaChoice&) = default;
};

struct TopologicalType {
  CentralClass c;
  std::vector<ClassLabel> alphas;  // one class per fixed circle
  std::vector<BetaChoice> betas;   // one generalized Stiefel-Whitney class per circle
  long degree = 0;                 // element of pi_1(G)

  friend bool operator==(const TopologicalType&, const TopologicalType&);
};

bool type_less(const TopologicalType& a, const TopologicalType& b);

struct DegreeWindow {
  long lo = -4;
  long hi = 4;
};

// All admissible types with the given parameter c, filtered by
// check_constraints and sorted lexicographically in (degree, alphas, betas).
// The window applies only when pi_1(G) = Z; finite pi_1 enumerates residues.
std::vector<TopologicalType> enumerate_types(const GroupSpec& g, const RealCurve& curve,
                                             const CentralClass& c, const DegreeWindow& window);

// Family-specific constraints:
//   conjugation GL / C*:  c=+1: degree = sum of beta_i (mod 2)
//                         c=-1: degree = n (genus - 1)   (mod 2)
//   compact-type GL / C*: degree even
// plus well-formedness of the per-circle data.
bool check_constraints(const GroupSpec& g, const RealCurve& curve, const TopologicalType& t);

// Number of beta choices over a circle with class label `alpha` (1 when the
// table is silent; such betas are emitted as unknown).
int beta_range(const GroupSpec& g, const CohomologyClass& alpha, bool& known);

}  // namespace rbp
