#include "realbundles/cocycle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

namespace rbp {

namespace {

const cdouble kI(0.0, 1.0);

CMat block_j(int n) {
  // [[0, -I],[I, 0]] with n/2 blocks
  CMat j = CMat::Zero(n, n);
  int m = n / 2;
  for (int i = 0; i < m; ++i) {
    j(i, m + i) = -1.0;
    j(m + i, i) = 1.0;
  }
  return j;
}

CMat so_twist(int n) {
  CMat d = CMat::Identity(n, n);
  d(n - 1, n - 1) = -1.0;
  return d;
}

CMat diag_signature(int n, int q, cdouble plus, cdouble minus) {
  CMat d = CMat::Zero(n, n);
  for (int i = 0; i < n; ++i) d(i, i) = (i < n - q) ? plus : minus;
  return d;
}

int label_rank(ClassKind k) {
  switch (k) {
    case ClassKind::PlusOne: return 0;
    case ClassKind::MinusOne: return 1;
    case ClassKind::Signature: return 2;
    case ClassKind::QuaternionicJ: return 3;
    case ClassKind::DiagPattern: return 4;
    case ClassKind::ImaginarySignature: return 5;
  }
  return 9;
}

// Scalar correction pushing a GL witness into SL. The GL witness of an SL
// cocycle automatically has |det b| = 1, so the correction is a phase and
// leaves the canonical form untouched.
CMat project_witness_sl(const CMat& b) {
  cdouble det = b.determinant();
  return b * std::pow(det, -1.0 / double(b.rows()));
}

struct FixedBasisResult {
  CMat basis;
  bool ok = false;
};

// Columns spanning the +1 eigenspace of the antilinear map T(a) = h conj(a),
// picked greedily from {v + T v} with re-sampling when rank-deficient.
FixedBasisResult plus_one_fixed_basis(const CMat& h, Rng& rng) {
  const int n = static_cast<int>(h.rows());
  auto t_apply = [&](const CVec& v) -> CVec { return h * v.conjugate(); };

  CMat basis(n, n);
  RMat real_span(2 * n, n);
  int have = 0;
  double separation = 0.25;
  auto try_candidate = [&](const CVec& v) {
    CVec w = v + t_apply(v);
    double wn = w.norm();
    if (wn < 1e-8) return;
    RVec wr(2 * n);
    wr << w.real(), w.imag();
    wr /= wn;
    // Gram-Schmidt against accepted columns; keep only well-separated ones.
    RVec res = wr;
    for (int j = 0; j < have; ++j) res -= real_span.col(j).dot(res) * real_span.col(j);
    if (res.norm() < separation) return;
    real_span.col(have) = res / res.norm();
    basis.col(have) = w / wn;
    ++have;
  };

  for (int j = 0; j < n && have < n; ++j) try_candidate(CVec::Unit(n, j));
  for (int j = 0; j < n && have < n; ++j) try_candidate(kI * CVec::Unit(n, j));
  int guard = 0;
  while (have < n && guard++ < 300) {
    if (guard == 150) separation = 1e-3;
    CVec v(n);
    for (int i = 0; i < n; ++i) v(i) = rng.gauss_complex();
    try_candidate(v);
  }
  return {basis, have == n};
}

// Basis adapted to an antilinear T with T^2 = -1: columns
// [v_1..v_m, T v_1..T v_m], complex-independent.
FixedBasisResult quaternionic_basis(const CMat& h, Rng& rng) {
  const int n = static_cast<int>(h.rows());
  const int m = n / 2;
  auto t_apply = [&](const CVec& v) -> CVec { return h * v.conjugate(); };

  CMat basis = CMat::Zero(n, n);
  int have = 0;
  auto rank_ok = [&](const CVec& v) {
    CMat probe(n, 2 * (have + 1));
    for (int j = 0; j < have; ++j) {
      probe.col(2 * j) = basis.col(j);
      probe.col(2 * j + 1) = basis.col(m + j);
    }
    probe.col(2 * have) = v;
    probe.col(2 * have + 1) = t_apply(v);
    Eigen::JacobiSVD<CMat> svd(probe);
    auto sv = svd.singularValues();
    return sv(sv.size() - 1) > 1e-4 * sv(0);
  };

  int guard = 0;
  while (have < m && guard++ < 400) {
    CVec v;
    if (guard <= n) {
      v = CVec::Unit(n, guard - 1);
    } else {
      v = CVec(n);
      for (int i = 0; i < n; ++i) v(i) = rng.gauss_complex();
    }
    v /= v.norm();
    if (!rank_ok(v)) continue;
    basis.col(have) = v;
    basis.col(m + have) = t_apply(v);
    ++have;
  }
  return {basis, have == m};
}

// Basis for SO(2m) quaternionic cocycles: adapted to T and orthonormal for
// the symmetric bilinear form B(x,y) = x^T y, so the witness lands in SO.
FixedBasisResult so_quaternionic_basis(const CMat& h, Rng& rng) {
  const int n = static_cast<int>(h.rows());
  const int m = n / 2;
  auto t_apply = [&](const CVec& v) -> CVec { return h * v.conjugate(); };
  auto b_form = [](const CVec& x, const CVec& y) -> cdouble {
    return (x.transpose() * y)(0, 0);
  };

  CMat basis = CMat::Zero(n, n);
  int have = 0;
  int guard = 0;
  while (have < m && guard++ < 500) {
    CVec v(n);
    for (int i = 0; i < n; ++i) v(i) = rng.gauss_complex();
    // project to the B-orthocomplement of the chosen pairs
    for (int j = 0; j < have; ++j) {
      v -= b_form(basis.col(j), v) * basis.col(j);
      v -= b_form(basis.col(m + j), v) * basis.col(m + j);
    }
    if (v.norm() < 1e-6) continue;
    cdouble alpha = b_form(v, v);
    if (std::abs(alpha) < 0.05 * v.squaredNorm()) continue;  // near isotropic
    v /= std::sqrt(alpha);
    // B(v, Tv) is purely imaginary; kill it with v -> v + i s Tv.
    cdouble btv = b_form(v, t_apply(v));
    double mu = btv.imag();
    double s = 0.0;
    if (std::abs(mu) > 1e-14) s = (1.0 - std::sqrt(1.0 + mu * mu)) / mu;
    CVec vp = v + kI * s * t_apply(v);
    double beta = 1.0 - 2.0 * s * mu - s * s;
    if (std::abs(beta) < 1e-6) continue;
    vp /= std::sqrt(cdouble(beta));
    basis.col(have) = vp;
    basis.col(m + have) = t_apply(vp);
    ++have;
  }
  return {basis, have == m};
}

// Real special-orthogonal diagonalizer of a real symmetric involution.
// Returns R in SO(n,R) with R^T S R = diag(1,..,1,-1,..,-1).
CMat rotation_diagonalizing(const CMat& s, int& negatives, double tol) {
  const int n = static_cast<int>(s.rows());
  if (s.imag().norm() > 1e-6 * std::max(1.0, s.norm()))
    fail(Errc::NormalizationFailed, "expected a real symmetric sign matrix");
  RMat sr = s.real();
  Eigen::SelfAdjointEigenSolver<RMat> es(0.5 * (sr + sr.transpose()));
  if (es.info() != Eigen::Success) fail(Errc::NormalizationFailed, "eigensolver failed");
  RMat r(n, n);
  negatives = 0;
  for (int i = 0; i < n; ++i) {
    // ascending -> descending
    r.col(i) = es.eigenvectors().col(n - 1 - i);
    if (es.eigenvalues()(n - 1 - i) < 0) ++negatives;
  }
  if (r.determinant() < 0) r.col(0) *= -1.0;
  (void)tol;
  return r.cast<cdouble>();
}

double witness_residual(const GroupSpec& g, const CMat& h, const CMat& witness,
                        const CMat& canonical) {
  CMat lhs = witness.inverse() * h * sigma_raw(g, witness);
  if (g.family == Family::PGL)
    return (pgl_normalize(lhs) - pgl_normalize(canonical)).norm();
  return (lhs - canonical).norm() / std::max(1.0, canonical.norm());
}

NormalizeResult finish(const GroupSpec& g, const CentralClass& c, const ClassLabel& label,
                       const CMat& h, CMat witness) {
  if (g.family == Family::SL) witness = project_witness_sl(witness);
  CohomologyClass cls{g, c, label, canonical_matrix(g, c, label)};
  double res = witness_residual(g, h, witness, cls.canonical);
  return {cls, witness, res};
}

// --- per-family normalizers ------------------------------------------------

NormalizeResult normalize_cstar(const GroupSpec& g, const CentralClass& c, const CMat& h) {
  cdouble z = h(0, 0);
  CMat w(1, 1);
  if (g.structure == RealStructure::CompactType) {
    if (c.label == CentralLabel::Trivial) {
      w(0, 0) = std::sqrt(std::abs(z.real()));
      ClassLabel l{z.real() > 0 ? ClassKind::PlusOne : ClassKind::MinusOne};
      return finish(g, c, l, h, w);
    }
    w(0, 0) = std::sqrt(std::abs(z.imag()));
    ClassLabel l{ClassKind::ImaginarySignature};
    l.p = z.imag() > 0 ? 1 : 0;
    l.q = 1 - l.p;
    return finish(g, c, l, h, w);
  }
  // conjugation: the unit circle is one orbit
  w(0, 0) = std::sqrt(z);
  return finish(g, c, ClassLabel{ClassKind::PlusOne}, h, w);
}

NormalizeResult normalize_compact(const GroupSpec& g, const CentralClass& c, const CMat& h,
                                  double tol) {
  const int n = g.dim();
  bool minus = c.label == CentralLabel::MinusOne;
  CMat herm = minus ? CMat(-kI * h) : h;  // c=-1 cocycles are i * hermitian
  HermitianEigen eig = hermitian_eigen(herm, 1000 * tol);
  int p = 0;
  for (int i = 0; i < n; ++i)
    if (eig.values(i) > 0) ++p;
  CMat scale = CMat::Zero(n, n);
  for (int i = 0; i < n; ++i) scale(i, i) = std::sqrt(std::abs(eig.values(i)));
  CMat witness = eig.vectors * scale;
  ClassLabel l{minus ? ClassKind::ImaginarySignature : ClassKind::Signature};
  l.p = p;
  l.q = n - p;
  return finish(g, c, l, h, witness);
}

NormalizeResult normalize_pgl_compact(const GroupSpec& g, const CentralClass& c, const CMat& h,
                                      double tol) {
  const int n = g.dim();
  CMat s = sigma_raw(g, h) * h;
  cdouble lambda = s.trace() / double(n);
  lambda /= std::abs(lambda);
  // sigma(h) h = lambda I forces h = lambda h^*, so lambda^{-1/2} h is hermitian.
  CMat herm = h * std::pow(lambda, -0.5);
  HermitianEigen eig = hermitian_eigen(herm, 1000 * tol);
  int p = 0;
  for (int i = 0; i < n; ++i)
    if (eig.values(i) > 0) ++p;
  if (2 * p < n) {  // canonical representative has p >= q
    herm = -herm;
    eig = hermitian_eigen(herm, 1000 * tol);
    p = n - p;
  }
  CMat scale = CMat::Zero(n, n);
  for (int i = 0; i < n; ++i) scale(i, i) = std::sqrt(std::abs(eig.values(i)));
  CMat witness = eig.vectors * scale;
  ClassLabel l{ClassKind::Signature};
  l.p = p;
  l.q = n - p;
  l.unordered = true;
  return finish(g, c, l, h, witness);
}

NormalizeResult normalize_gl_conj(const GroupSpec& g, const CentralClass& c, const CMat& h,
                                  Rng& rng) {
  const int n = g.dim();
  if (c.label == CentralLabel::Trivial) {
    FixedBasisResult fb = plus_one_fixed_basis(h, rng);
    if (!fb.ok) fail(Errc::NormalizationFailed, "could not span the +1 eigenspace of T");
    return finish(g, c, ClassLabel{ClassKind::PlusOne}, h, fb.basis);
  }
  FixedBasisResult fb = quaternionic_basis(h, rng);
  if (!fb.ok) fail(Errc::NormalizationFailed, "could not build a quaternionic basis");
  return finish(g, c, ClassLabel{ClassKind::QuaternionicJ}, h, fb.basis);
}

NormalizeResult normalize_pgl_conj(const GroupSpec& g, const CentralClass& c, const CMat& h,
                                   Rng& rng, double tol) {
  const int n = g.dim();
  CMat s = sigma_raw(g, h) * h;
  cdouble lambda = s.trace() / double(n);
  CMat scaled = h / std::sqrt(std::abs(lambda));
  if (lambda.real() > 0) {
    FixedBasisResult fb = plus_one_fixed_basis(scaled, rng);
    if (!fb.ok) fail(Errc::NormalizationFailed, "could not span the +1 eigenspace of T");
    return finish(g, c, ClassLabel{ClassKind::PlusOne}, h, fb.basis);
  }
  if (n % 2 != 0) fail(Errc::NotACocycle, "negative multiplier is impossible in odd size");
  (void)tol;
  FixedBasisResult fb = quaternionic_basis(scaled, rng);
  if (!fb.ok) fail(Errc::NormalizationFailed, "could not build a quaternionic basis");
  return finish(g, c, ClassLabel{ClassKind::QuaternionicJ}, h, fb.basis);
}

NormalizeResult normalize_so(const GroupSpec& g, const CentralClass& c, const CMat& h, Rng& rng,
                             double tol) {
  const int n = g.dim();
  if (c.label == CentralLabel::MinusOne) {
    FixedBasisResult fb = so_quaternionic_basis(h, rng);
    if (!fb.ok) fail(Errc::NormalizationFailed, "could not build an adapted basis");
    cdouble det = fb.basis.determinant();
    if (std::abs(det - 1.0) > 1e-6)
      fail(Errc::NormalizationFailed, "adapted basis has determinant -1; cocycle outside the J orbit");
    return finish(g, c, ClassLabel{ClassKind::QuaternionicJ}, h, fb.basis);
  }
  // h (or D h for the outer twist) is hermitian with unimodular determinant;
  // the number of negative eigenvalues is the complete invariant.
  CMat u = g.so_outer_twist ? CMat(so_twist(n) * h) : h;
  HermitianEigen eig = hermitian_eigen(u, 1000 * tol);
  CMat sign = CMat::Zero(n, n), absr = CMat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    sign(i, i) = eig.values(i) > 0 ? 1.0 : -1.0;
    absr(i, i) = std::sqrt(std::abs(eig.values(i)));
  }
  CMat s = eig.vectors * sign * eig.vectors.adjoint();
  CMat a = eig.vectors * absr * eig.vectors.adjoint();
  int k = 0;
  CMat r = rotation_diagonalizing(s, k, tol);
  CMat witness = a * r;
  ClassLabel l{ClassKind::DiagPattern};
  l.k = k;
  if (g.so_outer_twist) witness = so_twist(n) * witness * so_twist(n);
  return finish(g, c, l, h, witness);
}

}  // namespace

const char* class_kind_name(ClassKind k) {
  switch (k) {
    case ClassKind::PlusOne: return "+1";
    case ClassKind::MinusOne: return "-1";
    case ClassKind::Signature: return "signature";
    case ClassKind::QuaternionicJ: return "J";
    case ClassKind::DiagPattern: return "diag";
    case ClassKind::ImaginarySignature: return "i-signature";
  }
  return "?";
}

std::string ClassLabel::str() const {
  std::ostringstream os;
  switch (kind) {
    case ClassKind::PlusOne: return "+1";
    case ClassKind::MinusOne: return "-1";
    case ClassKind::QuaternionicJ: return "J";
    case ClassKind::Signature:
      os << (unordered ? "sig{" : "sig(") << p << "," << q << (unordered ? "}" : ")");
      return os.str();
    case ClassKind::ImaginarySignature:
      os << "isig(" << p << "," << q << ")";
      return os.str();
    case ClassKind::DiagPattern:
      os << "diag[" << k << "]";
      return os.str();
  }
  return "?";
}

bool operator<(const ClassLabel& a, const ClassLabel& b) {
  return std::tuple(label_rank(a.kind), a.q, a.k, a.p) <
         std::tuple(label_rank(b.kind), b.q, b.k, b.p);
}

CMat canonical_matrix(const GroupSpec& g, const CentralClass& c, const ClassLabel& label) {
  const int n = g.dim();
  switch (label.kind) {
    case ClassKind::PlusOne: return CMat::Identity(n, n);
    case ClassKind::MinusOne: return -CMat::Identity(n, n);
    case ClassKind::Signature: return diag_signature(n, label.q, 1.0, -1.0);
    case ClassKind::ImaginarySignature: return diag_signature(n, label.q, kI, -kI);
    case ClassKind::QuaternionicJ: return block_j(n);
    case ClassKind::DiagPattern: {
      CMat d = diag_signature(n, label.k, 1.0, -1.0);
      if (g.so_outer_twist) d = so_twist(n) * d;
      return d;
    }
  }
  (void)c;
  fail(Errc::BadArgument, "unknown label");
}

bool validate_cocycle(const GroupSpec& g, const CentralClass& c, const CMat& h, double tol) {
  const int n = g.dim();
  if (h.rows() != n || h.cols() != n)
    fail(Errc::DimensionMismatch, "cocycle has the wrong size for " + g.name());
  if (!is_finite(h) || !in_group(g, h, tol)) return false;
  CMat s = sigma_raw(g, h) * h;
  double scale = std::max(1.0, h.norm() * h.norm());
  if (g.family == Family::PGL) {
    // condition is central modulo scalars
    cdouble lambda = s.trace() / double(n);
    return (s - lambda * CMat::Identity(n, n)).norm() <= tol * scale;
  }
  return (s - c.representative(n)).norm() <= tol * scale;
}

bool validate_cocycle_any(const GroupSpec& g, const CMat& h, double tol) {
  const int n = g.dim();
  if (h.rows() != n || h.cols() != n)
    fail(Errc::DimensionMismatch, "cocycle has the wrong size for " + g.name());
  if (!is_finite(h) || !in_group(g, h, tol)) return false;
  CMat s = sigma_raw(g, h) * h;
  cdouble lambda = s.trace() / double(n);
  return (s - lambda * CMat::Identity(n, n)).norm() <= tol * std::max(1.0, h.norm() * h.norm());
}

std::vector<CohomologyClass> enumerate_classes(const GroupSpec& g, const CentralClass& c) {
  if (c.label == CentralLabel::NonInvolutive)
    fail(Errc::UnsupportedCentralClass,
         "H^1_c enumeration is modeled for order-2 parameters only (see group flags)");
  if (g.family == Family::PGL && c.label != CentralLabel::Trivial)
    fail(Errc::UnsupportedCentralClass, "pgl has a trivial center");
  bool minus = c.label == CentralLabel::MinusOne;
  if (minus) {
    bool available = false;
    for (const CentralClass& p : central_parameters(g))
      if (p.label == CentralLabel::MinusOne) available = true;
    if (!available)
      fail(Errc::UnsupportedCentralClass, "-1 is not a real central element of " + g.name());
  }

  const int n = g.dim();
  std::vector<ClassLabel> labels;
  switch (g.family) {
    case Family::CStar:
      if (g.structure == RealStructure::CompactType) {
        if (!minus) {
          labels.push_back({ClassKind::PlusOne});
          labels.push_back({ClassKind::MinusOne});
        } else {
          labels.push_back({ClassKind::ImaginarySignature, 1, 0});
          labels.push_back({ClassKind::ImaginarySignature, 0, 1});
        }
      } else {
        if (!minus) labels.push_back({ClassKind::PlusOne});
        // c=-1: conj(h) h = -1 has no solutions
      }
      break;
    case Family::GL:
      if (g.structure == RealStructure::CompactType) {
        for (int q = 0; q <= n; ++q)
          labels.push_back({minus ? ClassKind::ImaginarySignature : ClassKind::Signature,
                            n - q, q});
      } else {
        if (!minus) labels.push_back({ClassKind::PlusOne});
        else if (n % 2 == 0) labels.push_back({ClassKind::QuaternionicJ});
      }
      break;
    case Family::SL:
      if (!minus) {
        for (int q = 0; q <= n; q += 2) labels.push_back({ClassKind::Signature, n - q, q});
      } else {
        // determinant forces the number of -i entries to match n/2 mod 2
        int start = (n / 2) % 2;
        for (int q = start; q <= n; q += 2)
          labels.push_back({ClassKind::ImaginarySignature, n - q, q});
      }
      break;
    case Family::SO:
      if (!minus) {
        int start = g.so_outer_twist ? 1 : 0;
        for (int k = start; k <= n; k += 2) {
          ClassLabel l{ClassKind::DiagPattern};
          l.k = k;
          labels.push_back(l);
        }
      } else {
        if (!g.so_outer_twist && n % 2 == 0) labels.push_back({ClassKind::QuaternionicJ});
        // outer twist: determinant obstruction, empty set
      }
      break;
    case Family::PGL:
      if (g.structure == RealStructure::CompactType) {
        for (int q = 0; 2 * q <= n; ++q) {
          ClassLabel l{ClassKind::Signature, n - q, q};
          l.unordered = true;
          labels.push_back(l);
        }
      } else {
        labels.push_back({ClassKind::PlusOne});
        if (n % 2 == 0) labels.push_back({ClassKind::QuaternionicJ});
      }
      break;
  }
  std::sort(labels.begin(), labels.end());
  std::vector<CohomologyClass> out;
  out.reserve(labels.size());
  for (const ClassLabel& l : labels) out.push_back({g, c, l, canonical_matrix(g, c, l)});
  return out;
}

std::vector<CohomologyClass> enumerate_all_classes(const GroupSpec& g) {
  std::vector<CohomologyClass> out;
  for (const CentralClass& c : central_parameters(g)) {
    auto classes = enumerate_classes(g, c);
    out.insert(out.end(), classes.begin(), classes.end());
  }
  return out;
}

NormalizeResult normalize(const GroupSpec& g, const CentralClass& c, const CMat& h, double tol) {
  if (!validate_cocycle(g, c, h, tol))
    fail(Errc::NotACocycle, "h is not a valid c-shifted cocycle for " + g.name());
  if (enumerate_classes(g, c).empty())
    fail(Errc::NoClassExists, "H^1_c is empty for " + g.name());
  Rng rng(0x5eedbeef);  // internal re-sampling only; result is deterministic in h
  switch (g.family) {
    case Family::CStar: return normalize_cstar(g, c, h);
    case Family::GL:
    case Family::SL:
      if (g.structure == RealStructure::CompactType) return normalize_compact(g, c, h, tol);
      return normalize_gl_conj(g, c, h, rng);
    case Family::SO: return normalize_so(g, c, h, rng, tol);
    case Family::PGL:
      if (g.structure == RealStructure::CompactType) return normalize_pgl_compact(g, c, h, tol);
      return normalize_pgl_conj(g, c, h, rng, tol);
  }
  fail(Errc::BadArgument, "unreachable");
}

Cocycle sample_orbit(const GroupSpec& g, const CentralClass& c, const CohomologyClass& cls,
                     std::uint64_t seed) {
  Rng rng(seed);
  CMat b = random_element(g, rng);
  CMat h = b.inverse() * cls.canonical * sigma_raw(g, b);
  return {g, c, h};
}

Cocycle sample_orbit_real_convention(const GroupSpec& g, const CentralClass& c,
                                     const CohomologyClass& cls, std::uint64_t seed) {
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  CMat b = random_element(g, rng);
  CMat h = sigma_raw(g, b) * cls.canonical * b.inverse();
  return {g, c, h};
}

DiscretenessReport verify_discreteness(const GroupSpec& g, const CMat& h, double tol) {
  const int n = g.dim();
  if (h.rows() != n || h.cols() != n) fail(Errc::DimensionMismatch, "wrong size");
  // infer c = sigma(h) h and insist it is real central
  CMat s = sigma_raw(g, h) * h;
  cdouble lambda = s.trace() / double(n);
  double scale = std::max(1.0, h.norm() * h.norm());
  if (!in_group(g, h, tol) || (s - lambda * CMat::Identity(n, n)).norm() > tol * scale)
    fail(Errc::NotACocycle, "sigma(h) h is not central");

  std::vector<CMat> basis = lie_algebra_basis(g);
  CMat hinv = h.inverse();
  auto t_op = [&](const CMat& v) -> CMat { return hinv * v * h + dsigma(g, v); };
  auto tprime_op = [&](const CMat& v) -> CMat { return -(h * v * hinv) + dsigma(g, v); };
  RealLinearMap t = realify(basis, t_op);
  RealLinearMap tp = realify(basis, tprime_op);
  SubspaceReport sub = subspace_rank_and_equal(t, tp, tol);

  DiscretenessReport rep;
  rep.complex_dim = static_cast<int>(basis.size());
  rep.dim_kernel_T = 2 * rep.complex_dim - sub.rank_a;
  rep.dim_image_Tprime = sub.rank_b;
  rep.containment_ok = sub.image_b_in_kernel_a;
  rep.equality_ok = sub.image_b_equals_kernel_a;
  rep.bounds_ok =
      rep.dim_kernel_T <= rep.complex_dim && rep.complex_dim <= rep.dim_image_Tprime;
  return rep;
}

}  // namespace rbp
