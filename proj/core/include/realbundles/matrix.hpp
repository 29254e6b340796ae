#pragma once

#include <complex>
#include <random>
#include <Eigen/Dense>

namespace rbp {

using cdouble = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

// Default relative tolerance for membership, involution and cocycle checks.
inline constexpr double kDefaultTol = 1e-8;

inline bool approx_equal(const CMat& a, const CMat& b, double tol = kDefaultTol) {
  return (a - b).norm() <= tol * std::max(1.0, b.norm());
}

inline bool approx_zero(const CMat& a, double tol = kDefaultTol) {
  return a.norm() <= tol;
}

inline CMat identity(int n) { return CMat::Identity(n, n); }

inline bool is_finite(const CMat& m) {
  return m.allFinite();
}

// Deterministic RNG used by every sampling routine. Seeds are part of test
// names so runs are reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double gauss() { return normal_(gen_); }
  cdouble gauss_complex() { return {normal_(gen_), normal_(gen_)}; }

  CMat gaussian_matrix(int rows, int cols) {
    CMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = gauss_complex();
    return m;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace rbp
