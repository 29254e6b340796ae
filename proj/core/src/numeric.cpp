#include "realbundles/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace rbp {

HermitianEigen hermitian_eigen(const CMat& h, double tol) {
  if (h.rows() != h.cols()) fail(Errc::DimensionMismatch, "hermitian_eigen needs a square matrix");
  if ((h - h.adjoint()).norm() > tol * std::max(1.0, h.norm()))
    fail(Errc::NotHermitian, "input is not hermitian at the given tolerance");
  Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (h + h.adjoint()));
  if (es.info() != Eigen::Success) fail(Errc::NotHermitian, "eigensolver did not converge");
  const int n = static_cast<int>(h.rows());
  HermitianEigen out;
  out.values = RVec(n);
  out.vectors = CMat(n, n);
  // Eigen returns ascending order; flip to descending.
  for (int i = 0; i < n; ++i) {
    out.values(i) = es.eigenvalues()(n - 1 - i);
    out.vectors.col(i) = es.eigenvectors().col(n - 1 - i);
  }
  return out;
}

CMat sqrt_posdef(const CMat& p, double tol) {
  HermitianEigen eig = hermitian_eigen(p, tol);
  double lmax = eig.values(0);
  double lmin = eig.values(eig.values.size() - 1);
  if (lmin <= tol * std::max(1.0, lmax))
    fail(Errc::NotPositiveDefinite, "matrix has a nonpositive eigenvalue");
  CMat d = CMat::Zero(p.rows(), p.cols());
  for (int i = 0; i < eig.values.size(); ++i) d(i, i) = std::sqrt(eig.values(i));
  return eig.vectors * d * eig.vectors.adjoint();
}

PolarResult polar_decompose(const CMat& m, double tol) {
  if (m.rows() != m.cols()) fail(Errc::DimensionMismatch, "polar_decompose needs a square matrix");
  Eigen::JacobiSVD<CMat> svd(m);
  const int n = static_cast<int>(m.rows());
  if (svd.singularValues()(n - 1) <= tol * std::max(1.0, svd.singularValues()(0)))
    fail(Errc::Singular, "matrix is singular at the given tolerance");
  CMat p = sqrt_posdef(m.adjoint() * m, tol);
  CMat u = m * p.inverse();
  return {u, p};
}

int numeric_rank(const RMat& m, double tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<RMat> svd(m);
  double smax = svd.singularValues()(0);
  if (smax == 0.0) return 0;
  double cut = smax * tol * std::max(m.rows(), m.cols());
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > cut) ++rank;
  return rank;
}

RealLinearMap realify(const std::vector<CMat>& basis,
                      const std::function<CMat(const CMat&)>& apply) {
  const int d = static_cast<int>(basis.size());
  RMat mat(2 * d, 2 * d);
  for (int j = 0; j < d; ++j) {
    RVec col_re = to_coords(basis, apply(basis[j]));
    RVec col_im = to_coords(basis, apply(cdouble(0, 1) * basis[j]));
    mat.col(j) = col_re;
    mat.col(d + j) = col_im;
  }
  return {mat};
}

RVec to_coords(const std::vector<CMat>& basis, const CMat& value) {
  const int d = static_cast<int>(basis.size());
  RVec out(2 * d);
  for (int i = 0; i < d; ++i) {
    cdouble c = (basis[i].adjoint() * value).trace();
    out(i) = c.real();
    out(d + i) = c.imag();
  }
  return out;
}

CMat from_coords(const std::vector<CMat>& basis, const RVec& coords) {
  const int d = static_cast<int>(basis.size());
  CMat out = CMat::Zero(basis[0].rows(), basis[0].cols());
  for (int i = 0; i < d; ++i) out += cdouble(coords(i), coords(d + i)) * basis[i];
  return out;
}

SubspaceReport subspace_rank_and_equal(const RealLinearMap& a, const RealLinearMap& b,
                                       double tol) {
  SubspaceReport rep;
  rep.rank_a = numeric_rank(a.mat, tol);
  rep.rank_b = numeric_rank(b.mat, tol);
  const int dim = a.real_dim();
  // image(B) subset kernel(A)  <=>  A * B = 0
  double scale = std::max(1.0, a.mat.norm() * b.mat.norm());
  rep.image_b_in_kernel_a = (a.mat * b.mat).norm() <= tol * dim * scale;
  int kernel_a = dim - rep.rank_a;
  rep.image_b_equals_kernel_a = rep.image_b_in_kernel_a && (rep.rank_b == kernel_a);
  return rep;
}

}  // namespace rbp
