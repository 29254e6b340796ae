#pragma once

#include <string>
#include <vector>

#include "realbundles/errors.hpp"
#include "realbundles/matrix.hpp"

namespace rbp {

enum class Family { CStar, GL, SL, SO, PGL };
enum class RealStructure { Conjugation, CompactType };

const char* family_name(Family f);
const char* structure_name(RealStructure s);

// A classical complex reductive group together with an antiholomorphic
// involution sigma_G. Conjugation is sigma(g) = conj(g) entrywise,
// CompactType is sigma(g) = (g^*)^(-1). For SO(2n) the optional outer twist
// replaces conjugation by sigma(g) = D conj(g) D with D = diag(1,..,1,-1);
// it is routed through the plain conjugation code path.
struct GroupSpec {
  Family family = Family::GL;
  int n = 1;  // matrix size; 1 for CStar
  RealStructure structure = RealStructure::Conjugation;
  bool so_outer_twist = false;

  int dim() const { return family == Family::CStar ? 1 : n; }
  std::string name() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

GroupSpec make_group(Family family, int n, RealStructure structure,
                     bool so_outer_twist = false);

// Parse a CLI-style name such as "gl3-compact", "cstar-conj", "so6-conj-outer".
GroupSpec parse_group(const std::string& name);

// sigma_G applied to a group element. Throws NotInGroup when M fails the
// membership test at tolerance tol.
CMat apply_sigma(const GroupSpec& g, const CMat& m, double tol = kDefaultTol);

// sigma_G without the membership check (for internal use on candidates).
CMat sigma_raw(const GroupSpec& g, const CMat& m);

// Induced involution on the Lie algebra: d sigma.
CMat dsigma(const GroupSpec& g, const CMat& v);

bool in_group(const GroupSpec& g, const CMat& m, double tol = kDefaultTol);

// Canonical projective representative: unit Frobenius norm, first significant
// entry rotated to the positive real axis.
CMat pgl_normalize(const CMat& m, double tol = kDefaultTol);
bool equal_mod_scalar(const CMat& a, const CMat& b, double tol = kDefaultTol);

// --- H^2(Z/2Z, Z) ------------------------------------------------------

enum class CentralLabel { Trivial, MinusOne, NonInvolutive };

const char* central_label_name(CentralLabel l);

// A class of H^2(Z/2Z, Z) = Z_R / { sigma(a) a }, carried around with a
// concrete central representative c = scalar * I. `trivial_class` marks
// representatives that literal evaluation of the quotient sends to the
// trivial class (the parameter is still usable for shifted cocycles).
// NonInvolutive marks a quotient class with no representative of order <= 2;
// it occurs only for SL(2n) with n even and is surfaced, never enumerated.
struct CentralClass {
  CentralLabel label = CentralLabel::Trivial;
  cdouble scalar = 1.0;
  bool trivial_class = true;

  CMat representative(int n) const { return scalar * CMat::Identity(n, n); }

  friend bool operator==(const CentralClass&, const CentralClass&);
};

CentralClass trivial_central_class();
CentralClass central_class(const GroupSpec& g, CentralLabel label);

// Literal evaluation of H^2(Z/2Z, Z): the full list of quotient classes.
std::vector<CentralClass> center_real_classes(const GroupSpec& g);

// Real central elements of order <= 2 usable as pseudo-real parameters c.
// Includes parameters whose class is trivial (e.g. -1 for compact-type
// structures); these still label distinct shifted-cocycle normal forms.
std::vector<CentralClass> central_parameters(const GroupSpec& g);

// Classify a central scalar in the literal quotient.
CentralClass classify_central(const GroupSpec& g, cdouble scalar);

struct H2Info {
  int literal_size = 1;
  bool minus_one_collapses = false;    // -1 lies in {sigma(a) a}
  bool has_order4_class = false;       // a class with no order-2 representative
};
H2Info h2_info(const GroupSpec& g);

// --- pi_1(G) ------------------------------------------------------------

enum class Pi1Kind { Z, ZmodK, Trivial };

struct FundamentalGroupDescriptor {
  Pi1Kind kind = Pi1Kind::Trivial;
  int k = 0;  // modulus for ZmodK, k >= 2

  friend bool operator==(const FundamentalGroupDescriptor&,
                         const FundamentalGroupDescriptor&) = default;
};

FundamentalGroupDescriptor fundamental_group(const GroupSpec& g);

// --- sampling and Lie algebra -------------------------------------------

// Random element of G, seeded. Entries are O(1); condition numbers stay
// moderate for the desk sizes used here.
CMat random_element(const GroupSpec& g, Rng& rng);

// Complex orthonormal basis of Lie(G) under <A,B> = tr(A^* B).
// gl(n): all matrices; sl(n) and pgl(n): traceless; so(m): antisymmetric.
std::vector<CMat> lie_algebra_basis(const GroupSpec& g);

// Structured warnings attached to table output (e.g. the SL(2n), n even,
// H^2 row). Empty for groups with no known discrepancy.
std::vector<std::string> group_flags(const GroupSpec& g);

}  // namespace rbp
