#include "realbundles/group.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

namespace rbp {

namespace {

constexpr double kPi = std::numbers::pi;

CMat so_twist_matrix(int n) {
  CMat d = CMat::Identity(n, n);
  d(n - 1, n - 1) = -1.0;
  return d;
}

bool is_unit(cdouble z, double tol = 1e-12) { return std::abs(std::abs(z) - 1.0) <= tol; }

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::CStar: return "cstar";
    case Family::GL: return "gl";
    case Family::SL: return "sl";
    case Family::SO: return "so";
    case Family::PGL: return "pgl";
  }
  return "?";
}

const char* structure_name(RealStructure s) {
  return s == RealStructure::Conjugation ? "conj" : "compact";
}

const char* central_label_name(CentralLabel l) {
  switch (l) {
    case CentralLabel::Trivial: return "+1";
    case CentralLabel::MinusOne: return "-1";
    case CentralLabel::NonInvolutive: return "order-4";
  }
  return "?";
}

std::string GroupSpec::name() const {
  std::ostringstream os;
  os << family_name(family);
  if (family != Family::CStar) os << n;
  os << '-' << structure_name(structure);
  if (so_outer_twist) os << "-outer";
  return os.str();
}

GroupSpec make_group(Family family, int n, RealStructure structure, bool so_outer_twist) {
  switch (family) {
    case Family::CStar:
      if (n != 1) fail(Errc::UnsupportedCombination, "cstar requires n = 1");
      break;
    case Family::GL:
      if (n < 1) fail(Errc::UnsupportedCombination, "gl requires n >= 1");
      break;
    case Family::SL:
      if (structure != RealStructure::CompactType)
        fail(Errc::UnsupportedCombination, "sl is only supported with the compact-type structure");
      if (n < 2) fail(Errc::UnsupportedCombination, "sl requires n >= 2");
      break;
    case Family::SO:
      if (structure != RealStructure::Conjugation)
        fail(Errc::UnsupportedCombination,
             "so carries the conjugation structure only ((g^*)^{-1} coincides with it)");
      if (n < 3) fail(Errc::UnsupportedCombination, "so requires n >= 3");
      break;
    case Family::PGL:
      // pgl(1) is the trivial group; it appears as the adjoint of cstar
      if (n < 1) fail(Errc::UnsupportedCombination, "pgl requires n >= 1");
      break;
  }
  if (so_outer_twist) {
    if (family != Family::SO || n % 2 != 0)
      fail(Errc::UnsupportedCombination, "the outer twist applies to so(2n) only");
  }
  return GroupSpec{family, family == Family::CStar ? 1 : n, structure, so_outer_twist};
}

GroupSpec parse_group(const std::string& name) {
  std::string s = name;
  bool outer = false;
  if (s.size() > 6 && s.substr(s.size() - 6) == "-outer") {
    outer = true;
    s = s.substr(0, s.size() - 6);
  }
  auto dash = s.rfind('-');
  if (dash == std::string::npos) fail(Errc::BadArgument, "group name must look like gl3-compact");
  std::string head = s.substr(0, dash), tail = s.substr(dash + 1);
  RealStructure structure;
  if (tail == "conj") structure = RealStructure::Conjugation;
  else if (tail == "compact") structure = RealStructure::CompactType;
  else fail(Errc::BadArgument, "unknown structure suffix '" + tail + "'");

  Family family;
  std::size_t digits = 0;
  if (head == "cstar") {
    family = Family::CStar;
  } else {
    while (digits < head.size() && !std::isdigit(static_cast<unsigned char>(head[digits]))) ++digits;
    std::string fam = head.substr(0, digits);
    if (fam == "gl") family = Family::GL;
    else if (fam == "sl") family = Family::SL;
    else if (fam == "so") family = Family::SO;
    else if (fam == "pgl") family = Family::PGL;
    else fail(Errc::BadArgument, "unknown family '" + fam + "'");
    if (digits == head.size()) fail(Errc::BadArgument, "missing matrix size in '" + name + "'");
  }
  int n = 1;
  if (family != Family::CStar) n = std::stoi(head.substr(digits));
  return make_group(family, n, structure, outer);
}

CMat sigma_raw(const GroupSpec& g, const CMat& m) {
  if (g.structure == RealStructure::CompactType) return m.adjoint().inverse();
  if (g.so_outer_twist) {
    CMat d = so_twist_matrix(g.n);
    return d * m.conjugate() * d;
  }
  return m.conjugate();
}

CMat dsigma(const GroupSpec& g, const CMat& v) {
  if (g.structure == RealStructure::CompactType) return -v.adjoint();
  if (g.so_outer_twist) {
    CMat d = so_twist_matrix(g.n);
    return d * v.conjugate() * d;
  }
  return v.conjugate();
}

bool in_group(const GroupSpec& g, const CMat& m, double tol) {
  const int n = g.dim();
  if (m.rows() != n || m.cols() != n) return false;
  if (!is_finite(m)) return false;
  Eigen::JacobiSVD<CMat> svd(m);
  double smin = svd.singularValues()(n - 1);
  double smax = svd.singularValues()(0);
  if (smin <= tol * std::max(1.0, smax)) return false;  // not invertible
  switch (g.family) {
    case Family::CStar:
    case Family::GL:
    case Family::PGL:
      return true;
    case Family::SL:
      return std::abs(m.determinant() - 1.0) <= tol * std::max(1.0, smax);
    case Family::SO: {
      bool orth = approx_zero(m.transpose() * m - identity(n), tol * std::max(1.0, smax * smax));
      return orth && std::abs(m.determinant() - 1.0) <= 100 * tol;
    }
  }
  return false;
}

CMat apply_sigma(const GroupSpec& g, const CMat& m, double tol) {
  if (m.rows() != g.dim() || m.cols() != g.dim())
    fail(Errc::DimensionMismatch, "matrix size does not match the group");
  if (!in_group(g, m, tol)) fail(Errc::NotInGroup, "element fails the membership test");
  return sigma_raw(g, m);
}

CMat pgl_normalize(const CMat& m, double tol) {
  CMat out = m / m.norm();
  double maxmag = out.cwiseAbs().maxCoeff();
  for (int i = 0; i < out.rows(); ++i) {
    for (int j = 0; j < out.cols(); ++j) {
      cdouble e = out(i, j);
      if (std::abs(e) > tol * maxmag) {
        out *= std::abs(e) / e;
        return out;
      }
    }
  }
  return out;
}

bool equal_mod_scalar(const CMat& a, const CMat& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return approx_equal(pgl_normalize(a, tol), pgl_normalize(b, tol), 50 * tol);
}

// --- central classes ------------------------------------------------------

bool operator==(const CentralClass& a, const CentralClass& b) {
  return a.label == b.label && std::abs(a.scalar - b.scalar) < 1e-12 &&
         a.trivial_class == b.trivial_class;
}

CentralClass trivial_central_class() { return CentralClass{CentralLabel::Trivial, 1.0, true}; }

H2Info h2_info(const GroupSpec& g) {
  H2Info info;
  switch (g.family) {
    case Family::CStar:
    case Family::GL:
      if (g.structure == RealStructure::CompactType) {
        // Z_R = U(1), coboundaries = U(1).
        info.literal_size = 1;
        info.minus_one_collapses = true;
      } else {
        // Z_R = R^*, coboundaries = R_{>0}.
        info.literal_size = 2;
      }
      break;
    case Family::SL: {
      // Z = mu_n, sigma fixes the center; coboundaries are the squares mu_n^2.
      const int n = g.n;
      if (n % 2 == 1) {
        info.literal_size = 1;
        info.minus_one_collapses = true;  // -1 not central at all; treated as absent
      } else {
        info.literal_size = 2;
        if ((n / 2) % 2 == 0) {
          // -1 is a square of a central element, so its class is trivial and
          // the nontrivial class has no order-2 representative.
          info.minus_one_collapses = true;
          info.has_order4_class = true;
        }
      }
      break;
    }
    case Family::SO:
      info.literal_size = (g.n % 2 == 0) ? 2 : 1;
      break;
    case Family::PGL:
      info.literal_size = 1;
      break;
  }
  return info;
}

CentralClass classify_central(const GroupSpec& g, cdouble scalar) {
  if (!is_unit(scalar) && g.family != Family::CStar && g.family != Family::GL)
    fail(Errc::BadArgument, "central scalar must have modulus one for this group");
  H2Info info = h2_info(g);
  switch (g.family) {
    case Family::CStar:
    case Family::GL:
      if (g.structure == RealStructure::CompactType) {
        // every unit scalar is a coboundary
        return CentralClass{CentralLabel::Trivial, scalar, true};
      } else {
        if (std::abs(scalar.imag()) > 1e-9) fail(Errc::BadArgument, "central element must be real");
        bool neg = scalar.real() < 0;
        return neg ? CentralClass{CentralLabel::MinusOne, scalar, false}
                   : CentralClass{CentralLabel::Trivial, scalar, true};
      }
    case Family::SO: {
      bool neg = scalar.real() < 0;
      if (g.n % 2 == 1 && neg) fail(Errc::BadArgument, "-1 is not central in so(odd)");
      return neg ? CentralClass{CentralLabel::MinusOne, scalar, false}
                 : CentralClass{CentralLabel::Trivial, scalar, true};
    }
    case Family::PGL:
      return CentralClass{CentralLabel::Trivial, 1.0, true};
    case Family::SL: {
      const int n = g.n;
      // scalar must be an n-th root of unity; decide membership in the
      // coboundary subgroup mu_n^2 = { z^2 : z^n = 1 }.
      double arg = std::arg(scalar);
      long j = std::lround(arg * n / (2 * kPi));
      long jj = ((j % n) + n) % n;
      cdouble snapped = std::polar(1.0, 2 * kPi * double(jj) / n);
      if (std::abs(snapped - scalar) > 1e-6)
        fail(Errc::BadArgument, "central scalar is not an n-th root of unity");
      bool coboundary = (n % 2 == 1) ? true : (jj % 2 == 0);
      if (coboundary) return CentralClass{CentralLabel::Trivial, scalar, true};
      bool is_minus_one = std::abs(snapped + 1.0) < 1e-9;
      if (is_minus_one) return CentralClass{CentralLabel::MinusOne, scalar, false};
      if (info.has_order4_class) return CentralClass{CentralLabel::NonInvolutive, scalar, false};
      // n/2 odd: the nontrivial class contains -1, use it as the label.
      return CentralClass{CentralLabel::MinusOne, scalar, false};
    }
  }
  fail(Errc::BadArgument, "unreachable");
}

CentralClass central_class(const GroupSpec& g, CentralLabel label) {
  if (label == CentralLabel::Trivial) return trivial_central_class();
  if (label == CentralLabel::NonInvolutive)
    fail(Errc::UnsupportedCentralClass, "no canonical representative of order <= 2");
  for (const CentralClass& c : central_parameters(g))
    if (c.label == CentralLabel::MinusOne) return c;
  fail(Errc::UnsupportedCentralClass, "-1 is not a real central element of " + g.name());
}

std::vector<CentralClass> central_parameters(const GroupSpec& g) {
  std::vector<CentralClass> out{trivial_central_class()};
  bool minus_one_central = false;
  switch (g.family) {
    case Family::CStar:
    case Family::GL: minus_one_central = true; break;
    case Family::SL:
    case Family::SO: minus_one_central = (g.n % 2 == 0); break;
    case Family::PGL: minus_one_central = false; break;
  }
  if (minus_one_central) {
    CentralClass c = classify_central(g, -1.0);
    c.label = CentralLabel::MinusOne;  // keep the parameter name even if the class collapses
    out.push_back(c);
  }
  return out;
}

std::vector<CentralClass> center_real_classes(const GroupSpec& g) {
  H2Info info = h2_info(g);
  std::vector<CentralClass> out{trivial_central_class()};
  if (info.literal_size == 1) return out;
  if (info.has_order4_class) {
    // SL(2n), n even: the nontrivial class is represented by a primitive
    // 2n-th root of unity; -1 itself is a coboundary.
    out.push_back(CentralClass{CentralLabel::NonInvolutive,
                               std::polar(1.0, kPi / double(g.n / 2)), false});
  } else {
    out.push_back(CentralClass{CentralLabel::MinusOne, -1.0, false});
  }
  return out;
}

// --- pi_1 ---------------------------------------------------------------

FundamentalGroupDescriptor fundamental_group(const GroupSpec& g) {
  switch (g.family) {
    case Family::CStar:
    case Family::GL: return {Pi1Kind::Z, 0};
    case Family::SL: return {Pi1Kind::Trivial, 0};
    case Family::SO: return {Pi1Kind::ZmodK, 2};
    case Family::PGL: return {Pi1Kind::ZmodK, g.n};
  }
  return {};
}

// --- sampling -------------------------------------------------------------

CMat random_element(const GroupSpec& g, Rng& rng) {
  const int n = g.dim();
  switch (g.family) {
    case Family::CStar: {
      CMat m(1, 1);
      cdouble z = rng.gauss_complex();
      while (std::abs(z) < 0.1) z = rng.gauss_complex();
      m(0, 0) = z;
      return m;
    }
    case Family::GL:
    case Family::PGL: {
      for (;;) {
        CMat m = rng.gaussian_matrix(n, n);
        Eigen::JacobiSVD<CMat> svd(m);
        if (svd.singularValues()(n - 1) > 0.05 * svd.singularValues()(0)) return m;
      }
    }
    case Family::SL: {
      for (;;) {
        CMat m = rng.gaussian_matrix(n, n);
        Eigen::JacobiSVD<CMat> svd(m);
        if (svd.singularValues()(n - 1) <= 0.05 * svd.singularValues()(0)) continue;
        cdouble det = m.determinant();
        return m * std::pow(det, -1.0 / n);
      }
    }
    case Family::SO: {
      CMat a = rng.gaussian_matrix(n, n);
      CMat anti = 0.5 * (a - a.transpose());
      anti *= 0.8 / std::max(0.8, anti.norm());
      return anti.exp();
    }
  }
  fail(Errc::BadArgument, "unreachable");
}

std::vector<CMat> lie_algebra_basis(const GroupSpec& g) {
  const int n = g.dim();
  std::vector<CMat> basis;
  auto unit = [n](int i, int j) {
    CMat e = CMat::Zero(n, n);
    e(i, j) = 1.0;
    return e;
  };
  switch (g.family) {
    case Family::CStar: basis.push_back(CMat::Identity(1, 1)); break;
    case Family::GL:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) basis.push_back(unit(i, j));
      break;
    case Family::SL:
    case Family::PGL: {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) basis.push_back(unit(i, j));
      for (int k = 1; k < n; ++k) {
        CMat d = CMat::Zero(n, n);
        for (int i = 0; i < k; ++i) d(i, i) = 1.0;
        d(k, k) = -double(k);
        basis.push_back(d / std::sqrt(double(k) * (k + 1)));
      }
      break;
    }
    case Family::SO:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          basis.push_back((unit(i, j) - unit(j, i)) / std::sqrt(2.0));
      break;
  }
  return basis;
}

std::vector<std::string> group_flags(const GroupSpec& g) {
  std::vector<std::string> flags;
  if (g.family == Family::SL && g.n % 2 == 0 && (g.n / 2) % 2 == 0) {
    flags.push_back(
        "H^2 discrepancy: literal evaluation of Z_R/{sigma(a)a} makes the class of -1 "
        "trivial for sl(" + std::to_string(g.n) + ") (n/2 even); the nontrivial class has no "
        "order-2 representative; the classical table lists {+1,-1}.");
    flags.push_back(
        "c=-1 normal forms for sl(" + std::to_string(g.n) + ") carry an even number of -i "
        "entries (determinant constraint); the classical table says odd.");
  }
  if (g.family == Family::GL && g.structure == RealStructure::Conjugation && g.n % 2 == 1) {
    flags.push_back(
        "pi_0(GL(" + std::to_string(g.n) + ",R)) = Z/2Z (determinant sign); the classical "
        "pi_0 table prints {1} for odd sizes, inconsistent with the component census.");
  }
  if (g.family == Family::SO && g.n % 2 == 1) {
    flags.push_back(
        "stabilizer of the identity cocycle is the compact SO(" + std::to_string(g.n) +
        "); -identity is excluded in odd size (determinant).");
  }
  return flags;
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::UnsupportedCombination: return "UnsupportedCombination";
    case Errc::NotInGroup: return "NotInGroup";
    case Errc::Singular: return "Singular";
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::NotPositiveDefinite: return "NotPositiveDefinite";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::UnsupportedGroup: return "UnsupportedGroup";
    case Errc::UnsupportedCentralClass: return "UnsupportedCentralClass";
    case Errc::NotACocycle: return "NotACocycle";
    case Errc::NoClassExists: return "NoClassExists";
    case Errc::NormalizationFailed: return "NormalizationFailed";
    case Errc::NoAdjointModel: return "NoAdjointModel";
    case Errc::NotATwist: return "NotATwist";
    case Errc::InvalidTopology: return "InvalidTopology";
    case Errc::UnsupportedFamily: return "UnsupportedFamily";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotTabulated: return "NotTabulated";
    case Errc::BadArgument: return "BadArgument";
  }
  return "Error";
}

}  // namespace rbp
