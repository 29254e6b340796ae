#pragma once

#include <functional>
#include <vector>

#include "realbundles/errors.hpp"
#include "realbundles/matrix.hpp"

namespace rbp {

// Dense complex linear-algebra primitives for the normalization algorithms.
// All inputs are small (n <= ~20); the implementations favour clarity and
// verified residuals over speed.

struct PolarResult {
  CMat unitary;   // U
  CMat positive;  // P hermitian positive definite, M = U P
};

// M = U P with U unitary, P = sqrt(M^* M). Throws Singular.
PolarResult polar_decompose(const CMat& m, double tol = kDefaultTol);

struct HermitianEigen {
  RVec values;   // descending
  CMat vectors;  // unitary, columns match values
};

// Throws NotHermitian when ||H - H^*|| exceeds tol * max(1, ||H||).
HermitianEigen hermitian_eigen(const CMat& h, double tol = kDefaultTol);

// Hermitian positive-definite square root. Throws NotPositiveDefinite.
CMat sqrt_posdef(const CMat& p, double tol = kDefaultTol);

// Numeric rank with the project-wide cutoff: singular values below
// max_sv * tol * dimension count as zero.
int numeric_rank(const RMat& m, double tol = kDefaultTol);

// An R-linear operator on the realification of a d-dimensional complex
// space, stored as a 2d x 2d real matrix. Coordinates are taken with
// respect to a complex orthonormal basis B_1..B_d: the real basis is
// { B_1..B_d, i B_1..i B_d }.
struct RealLinearMap {
  RMat mat;

  int real_dim() const { return static_cast<int>(mat.rows()); }
};

// Build the realification of an operator given by its action on basis
// elements. `apply` must be R-linear on coordinates.
RealLinearMap realify(const std::vector<CMat>& basis,
                      const std::function<CMat(const CMat&)>& apply);

// Expand coordinates back to a matrix / project a matrix to coordinates.
CMat from_coords(const std::vector<CMat>& basis, const RVec& coords);
RVec to_coords(const std::vector<CMat>& basis, const CMat& value);

struct SubspaceReport {
  int rank_a = 0;
  int rank_b = 0;
  bool image_b_in_kernel_a = false;
  bool image_b_equals_kernel_a = false;
};

// Ranks of A and B plus the containment tests image(B) subset kernel(A)
// and image(B) = kernel(A), all at the stated rank tolerance.
SubspaceReport subspace_rank_and_equal(const RealLinearMap& a, const RealLinearMap& b,
                                       double tol = kDefaultTol);

}  // namespace rbp
