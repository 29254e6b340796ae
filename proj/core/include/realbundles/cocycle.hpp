#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "realbundles/group.hpp"
#include "realbundles/numeric.hpp"

namespace rbp {

// Shifted cocycles: h in G with sigma_G(h) h = c, classified up to the
// coboundary equivalence h ~ b^{-1} h sigma_G(b).

struct Cocycle {
  GroupSpec group;
  CentralClass c;
  CMat h;
};

enum class ClassKind {
  PlusOne,
  MinusOne,
  Signature,           // diag(1..1,-1..-1), invariant (p, q)
  QuaternionicJ,       // [[0,-I],[I,0]], even size only
  DiagPattern,         // SO normal form, k = number of -1 eigenvalues
  ImaginarySignature,  // diag(i..i,-i..-i), invariant (p, q)
};

const char* class_kind_name(ClassKind k);

struct ClassLabel {
  ClassKind kind = ClassKind::PlusOne;
  int p = 0;               // Signature / ImaginarySignature
  int q = 0;
  int k = 0;               // DiagPattern
  bool unordered = false;  // adjoint classes identify (p,q) with (q,p)

  std::string str() const;

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
  friend bool operator<(const ClassLabel& a, const ClassLabel& b);
};

struct CohomologyClass {
  GroupSpec group;
  CentralClass c;
  ClassLabel label;
  CMat canonical;  // exact entries in {0, +-1, +-i}
};

// True iff h is a valid c-shifted cocycle at tolerance tol. Throws only
// DimensionMismatch; membership or equation failures return false.
bool validate_cocycle(const GroupSpec& g, const CentralClass& c, const CMat& h,
                      double tol = kDefaultTol);

// True iff sigma(h) h is central (a shifted cocycle for some c).
bool validate_cocycle_any(const GroupSpec& g, const CMat& h, double tol = kDefaultTol);

// The complete finite list of classes of H^1_c(Z/2Z, G); may be empty.
// c must be an order-<=2 parameter from central_parameters(g).
std::vector<CohomologyClass> enumerate_classes(const GroupSpec& g, const CentralClass& c);

// Convenience: classes for every parameter c of the group.
std::vector<CohomologyClass> enumerate_all_classes(const GroupSpec& g);

struct NormalizeResult {
  CohomologyClass cls;
  CMat witness;     // b with b^{-1} h sigma_G(b) = canonical (mod scalar for PGL)
  double residual;  // relative witness residual
};

NormalizeResult normalize(const GroupSpec& g, const CentralClass& c, const CMat& h,
                          double tol = kDefaultTol);

// A seeded coboundary sample b^{-1} (canonical) sigma_G(b).
Cocycle sample_orbit(const GroupSpec& g, const CentralClass& c, const CohomologyClass& cls,
                     std::uint64_t seed);

// Same orbit sampled with the real-case convention sigma_G(b) h b^{-1}.
Cocycle sample_orbit_real_convention(const GroupSpec& g, const CentralClass& c,
                                     const CohomologyClass& cls, std::uint64_t seed);

struct DiscretenessReport {
  int complex_dim = 0;       // dim_C of the Lie algebra
  int dim_kernel_T = 0;      // real dimension
  int dim_image_Tprime = 0;  // real dimension
  bool containment_ok = false;   // image(T') inside kernel(T)
  bool equality_ok = false;      // image(T') = kernel(T)
  bool bounds_ok = false;        // dim kernel(T) <= dim_C g <= dim image(T')
};

// Builds T(v) = Ad(h^{-1}) v + dsigma(v) and T'(w) = -Ad(h) w + dsigma(w)
// on the realified Lie algebra and checks image(T') = kernel(T).
DiscretenessReport verify_discreteness(const GroupSpec& g, const CMat& h,
                                       double tol = kDefaultTol);

// Canonical matrix of a label within (group, c).
CMat canonical_matrix(const GroupSpec& g, const CentralClass& c, const ClassLabel& label);

}  // namespace rbp
