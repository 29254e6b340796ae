#pragma once

#include <optional>
#include <string>
#include <vector>

#include "realbundles/cocycle.hpp"

namespace rbp {

// --- stabilizer real forms Stab(h) = G_{R,h} and their pi_0 ----------------

enum class RealFormName {
  U_pq,        // U(p,q)
  SU_pq,       // SU(p,q)
  GL_R,        // GL(n,R)
  GL_H,        // GL(n,H)
  SO_pq,       // SO(p,q)
  SO_compact,  // SO(m)
  SU_star,     // SU*(n)
  Circle,      // S^1
  RStar,       // R^*
};

struct RealFormDescriptor {
  RealFormName name = RealFormName::Circle;
  int p = 0;
  int q = 0;
  int n = 0;
  int pi0_size = 1;
  std::vector<std::string> pi0_labels;

  std::string str() const;

  friend bool operator==(const RealFormDescriptor&, const RealFormDescriptor&) = default;
};

// pi_0 data is table-driven; PGL stabilizers are not tabulated and raise
// NotTabulated.
RealFormDescriptor stabilizer_form(const GroupSpec& g, const CohomologyClass& cls);

// Fixed subspace of w -> Ad(h^{-1}) dsigma(w) has real dimension dim_C g.
bool stabilizer_dimension_check(const GroupSpec& g, const CMat& h, double tol = kDefaultTol);

// --- exact sequence of pointed sets ----------------------------------------

// Adjoint group model: PGL(n) for gl/sl/pgl, PGL(1) (trivial) for cstar.
// SO has no modeled adjoint quotient and raises NoAdjointModel.
GroupSpec adjoint_group(const GroupSpec& g);

CohomologyClass project_adjoint(const GroupSpec& g, const CohomologyClass& cls);

// The class c in H^2(Z/2Z, Z) obstructing the lift of an adjoint class to G,
// computed by lifting the canonical representative and evaluating sigma(h~) h~.
CentralClass obstruction(const GroupSpec& g, const CohomologyClass& adjoint_class);

// H^1(Z/2Z, Z) represented by central scalars.
std::vector<cdouble> h1_center(const GroupSpec& g);

struct SequenceReport {
  GroupSpec group;
  GroupSpec adjoint;

  std::vector<std::string> h1_center_labels;  // A = H^1(Z)
  std::vector<ClassLabel> h1_g;               // B = H^1(G), base point first entry of map image
  std::vector<ClassLabel> h1_gad;             // C = H^1(G_ad)
  std::vector<std::string> h2_labels;         // D = H^2(Z), literal classes

  std::vector<int> map_center_to_g;        // A -> B, indices into h1_g
  std::vector<int> map_g_to_gad;           // B -> C, indices into h1_gad
  std::vector<CentralClass> obstructions;  // C -> D

  bool exact_at_g = false;    // image(A->B) = preimage of base point of C
  bool exact_at_gad = false;  // image(B->C) = preimage of trivial class of D
  bool exactness_ok = false;

  bool lifts_ok = false;            // every adjoint class lifts with exactly c = delta
  std::vector<int> fiber_sizes;     // per C element: lifts inside H^1_{delta}
  int h1_center_size = 0;
  std::vector<int> fiber_equalities;  // 1 if fiber == |H^1(Z)|, else 0 (reported, not fatal)

  std::string display;  // arrow-format summary, e.g. "0 -> 0 -> {±1} -> {±1}"
};

SequenceReport verify_exact_sequence(const GroupSpec& g);

// --- inner twists -----------------------------------------------------------

struct TwistedClassPair {
  ClassLabel source;
  CMat twisted;      // h k^{-1}, a cocycle for sigma^k = Ad_k o sigma
  bool twisted_valid = false;
  ClassLabel roundtrip;  // label recovered by pulling back and normalizing
  bool roundtrip_ok = false;
};

struct InnerTwistSector {
  CentralClass source_c;
  cdouble target_scalar;  // c' c^{-1}
  std::vector<TwistedClassPair> pairs;
  bool bijective = false;
};

struct InnerTwistReport {
  CMat k;
  cdouble twist_scalar;  // sigma(k) k = twist_scalar * I
  std::vector<InnerTwistSector> sectors;
  bool ok = false;
};

// The bijection H^1_{c'}(sigma) -> H^1_{c' c^{-1}}(sigma^k), h -> h k^{-1}.
InnerTwistReport inner_twist(const GroupSpec& g, const CMat& k, double tol = kDefaultTol);

}  // namespace rbp
