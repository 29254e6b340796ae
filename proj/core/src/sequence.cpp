#include "realbundles/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace rbp {

namespace {

constexpr double kPi = std::numbers::pi;

int index_of(const std::vector<ClassLabel>& labels, const ClassLabel& l) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == l) return static_cast<int>(i);
  return -1;
}

ClassLabel base_label(const GroupSpec& g) {
  if (g.structure == RealStructure::CompactType && g.family != Family::CStar) {
    ClassLabel l{ClassKind::Signature, g.dim(), 0};
    l.unordered = g.family == Family::PGL;
    return l;
  }
  return ClassLabel{ClassKind::PlusOne};
}

// Lift of an adjoint canonical representative into G, with the scalar
// correction needed to satisfy the determinant constraint of SL.
CMat adjoint_lift(const GroupSpec& g, const CohomologyClass& adj) {
  CMat lift = adj.canonical;
  if (g.family == Family::SL) {
    cdouble det = lift.determinant();
    if (std::abs(det - 1.0) > 1e-12) {
      // det = -1 for an odd signature; scale by a 2n-th root of -1
      cdouble lambda = std::polar(1.0, kPi / double(g.n));
      lift = lambda * lift;
    }
  }
  return lift;
}

std::string render_scalar_set(std::size_t size) {
  if (size <= 1) return "0";
  if (size == 2) return "{±1}";
  return "{" + std::to_string(size) + " elements}";
}

std::string render_display(const SequenceReport& rep) {
  const GroupSpec& g = rep.group;
  std::ostringstream os;
  auto compact_range = [](int n) {
    return "{0,1,...," + std::to_string(n) + "}";
  };
  os << render_scalar_set(rep.h1_center_labels.size()) << " -> ";
  if (g.structure == RealStructure::CompactType && g.family != Family::CStar) {
    os << compact_range(g.n) << " -> " << compact_range(g.n) << "/(k~n-k)";
  } else {
    os << render_scalar_set(rep.h1_g.size()) << " -> " << render_scalar_set(rep.h1_gad.size());
  }
  os << " -> " << render_scalar_set(rep.h2_labels.size());
  return os.str();
}

}  // namespace

std::string RealFormDescriptor::str() const {
  std::ostringstream os;
  switch (name) {
    case RealFormName::U_pq: os << "U(" << p << "," << q << ")"; break;
    case RealFormName::SU_pq: os << "SU(" << p << "," << q << ")"; break;
    case RealFormName::GL_R: os << "GL(" << n << ",R)"; break;
    case RealFormName::GL_H: os << "GL(" << n << ",H)"; break;
    case RealFormName::SO_pq: os << "SO(" << p << "," << q << ")"; break;
    case RealFormName::SO_compact: os << "SO(" << n << ")"; break;
    case RealFormName::SU_star: os << "SU*(" << n << ")"; break;
    case RealFormName::Circle: os << "S^1"; break;
    case RealFormName::RStar: os << "R^*"; break;
  }
  return os.str();
}

RealFormDescriptor stabilizer_form(const GroupSpec& g, const CohomologyClass& cls) {
  const int n = g.dim();
  auto connected = [](RealFormDescriptor d) {
    d.pi0_size = 1;
    d.pi0_labels = {"1"};
    return d;
  };
  auto two_components = [](RealFormDescriptor d) {
    d.pi0_size = 2;
    d.pi0_labels = {"+", "-"};
    return d;
  };
  switch (g.family) {
    case Family::CStar:
      if (g.structure == RealStructure::CompactType)
        return connected({RealFormName::Circle, 0, 0, 1});
      return two_components({RealFormName::RStar, 0, 0, 1});
    case Family::GL:
      if (g.structure == RealStructure::CompactType) {
        // signature (p,q) of h, hermitian up to the i factor for c = -1
        return connected({RealFormName::U_pq, cls.label.p, cls.label.q, n});
      }
      if (cls.label.kind == ClassKind::QuaternionicJ)
        return connected({RealFormName::GL_H, 0, 0, n / 2});
      return two_components({RealFormName::GL_R, 0, 0, n});
    case Family::SL:
      return connected({RealFormName::SU_pq, cls.label.p, cls.label.q, n});
    case Family::SO: {
      if (cls.label.kind == ClassKind::QuaternionicJ)
        return connected({RealFormName::SU_star, 0, 0, n / 2});
      int k = cls.label.k;
      if (k == 0 || k == n) return connected({RealFormName::SO_compact, 0, 0, n});
      return two_components({RealFormName::SO_pq, n - k, k, n});
    }
    case Family::PGL:
      fail(Errc::NotTabulated, "pi_0 of projective stabilizers is not tabulated");
  }
  fail(Errc::BadArgument, "unreachable");
}

bool stabilizer_dimension_check(const GroupSpec& g, const CMat& h, double tol) {
  if (!validate_cocycle_any(g, h, tol)) fail(Errc::NotACocycle, "not a cocycle");
  std::vector<CMat> basis = lie_algebra_basis(g);
  CMat hinv = h.inverse();
  auto phi = [&](const CMat& w) -> CMat { return hinv * dsigma(g, w) * h; };
  RealLinearMap m = realify(basis, phi);
  const int dim2 = m.real_dim();
  RMat shifted = m.mat - RMat::Identity(dim2, dim2);
  int fixed_dim = dim2 - numeric_rank(shifted, tol);
  return fixed_dim == static_cast<int>(basis.size());
}

GroupSpec adjoint_group(const GroupSpec& g) {
  switch (g.family) {
    case Family::CStar: return GroupSpec{Family::PGL, 1, g.structure, false};
    case Family::GL:
    case Family::SL:
    case Family::PGL: return GroupSpec{Family::PGL, g.n, g.structure, false};
    case Family::SO:
      fail(Errc::NoAdjointModel, "the adjoint quotient of so is not modeled");
  }
  fail(Errc::BadArgument, "unreachable");
}

CohomologyClass project_adjoint(const GroupSpec& g, const CohomologyClass& cls) {
  GroupSpec ad = adjoint_group(g);
  CentralClass triv = trivial_central_class();
  if (g.family == Family::PGL) return cls;
  if (g.family == Family::CStar) {
    ClassLabel l = ad.structure == RealStructure::CompactType
                       ? ClassLabel{ClassKind::Signature, 1, 0, 0, true}
                       : ClassLabel{ClassKind::PlusOne};
    return {ad, triv, l, canonical_matrix(ad, triv, l)};
  }
  if (g.structure == RealStructure::CompactType) {
    // Signature and i-signature both project to the unordered signature.
    int p = cls.label.p, q = cls.label.q;
    if (p < q) std::swap(p, q);
    ClassLabel l{ClassKind::Signature, p, q};
    l.unordered = true;
    return {ad, triv, l, canonical_matrix(ad, triv, l)};
  }
  // conjugation on gl
  ClassLabel l = cls.label.kind == ClassKind::QuaternionicJ
                     ? ClassLabel{ClassKind::QuaternionicJ}
                     : ClassLabel{ClassKind::PlusOne};
  return {ad, triv, l, canonical_matrix(ad, triv, l)};
}

CentralClass obstruction(const GroupSpec& g, const CohomologyClass& adjoint_class) {
  if (g.family == Family::SO) fail(Errc::NoAdjointModel, "so has no modeled adjoint quotient");
  if (g.family == Family::PGL || g.family == Family::CStar) {
    if (g.family == Family::CStar) {
      // any unit lifts; sigma(h) h lands on the coboundary side
      return trivial_central_class();
    }
    return trivial_central_class();
  }
  CMat lift = adjoint_lift(g, adjoint_class);
  CMat s = sigma_raw(g, lift) * lift;
  cdouble lambda = s.trace() / double(g.dim());
  return classify_central(g, lambda);
}

std::vector<cdouble> h1_center(const GroupSpec& g) {
  switch (g.family) {
    case Family::CStar:
    case Family::GL:
      return g.structure == RealStructure::CompactType ? std::vector<cdouble>{1.0, -1.0}
                                                       : std::vector<cdouble>{1.0};
    case Family::SL:
    case Family::SO:
      return g.n % 2 == 0 ? std::vector<cdouble>{1.0, -1.0} : std::vector<cdouble>{1.0};
    case Family::PGL: return {1.0};
  }
  return {1.0};
}

SequenceReport verify_exact_sequence(const GroupSpec& g) {
  SequenceReport rep;
  rep.group = g;
  rep.adjoint = adjoint_group(g);
  CentralClass triv = trivial_central_class();

  std::vector<cdouble> a = h1_center(g);
  for (cdouble z : a) rep.h1_center_labels.push_back(z.real() > 0 ? "+1" : "-1");
  rep.h1_center_size = static_cast<int>(a.size());

  std::vector<CohomologyClass> b = enumerate_classes(g, triv);
  std::vector<CohomologyClass> c = enumerate_classes(rep.adjoint, triv);
  for (const auto& x : b) rep.h1_g.push_back(x.label);
  for (const auto& x : c) rep.h1_gad.push_back(x.label);
  for (const CentralClass& d : center_real_classes(g))
    rep.h2_labels.push_back(central_label_name(d.label));

  // A -> B: the class of the central cocycle z * I
  for (cdouble z : a) {
    CMat zi = z * CMat::Identity(g.dim(), g.dim());
    NormalizeResult nr = normalize(g, triv, zi);
    rep.map_center_to_g.push_back(index_of(rep.h1_g, nr.cls.label));
  }
  // B -> C
  for (const auto& x : b)
    rep.map_g_to_gad.push_back(index_of(rep.h1_gad, project_adjoint(g, x).label));
  // C -> D plus lifting data
  rep.lifts_ok = true;
  for (const auto& x : c) {
    CentralClass delta = obstruction(g, x);
    rep.obstructions.push_back(delta);
    int fiber = 0;
    if (delta.label == CentralLabel::NonInvolutive) {
      // not enumerable; check the lift directly
      CMat lift = g.family == Family::SL ? CMat(std::polar(1.0, kPi / double(g.n)) * x.canonical)
                                         : x.canonical;
      bool valid = validate_cocycle(g, delta, lift, 1e-6);
      if (!valid) rep.lifts_ok = false;
      fiber = -1;
    } else {
      CentralClass param = delta.label == CentralLabel::MinusOne
                               ? central_class(g, CentralLabel::MinusOne)
                               : triv;
      for (const auto& y : enumerate_classes(g, param))
        if (project_adjoint(g, y).label == x.label) ++fiber;
      if (fiber == 0) rep.lifts_ok = false;
    }
    rep.fiber_sizes.push_back(fiber);
    rep.fiber_equalities.push_back(fiber == rep.h1_center_size ? 1 : 0);
  }

  // exactness at B: image(A->B) = p^{-1}(base of C)
  ClassLabel base_c = base_label(rep.adjoint);
  {
    std::vector<int> image_a = rep.map_center_to_g;
    std::sort(image_a.begin(), image_a.end());
    image_a.erase(std::unique(image_a.begin(), image_a.end()), image_a.end());
    std::vector<int> preimage;
    int base_idx = index_of(rep.h1_gad, base_c);
    for (std::size_t i = 0; i < b.size(); ++i)
      if (rep.map_g_to_gad[i] == base_idx) preimage.push_back(static_cast<int>(i));
    rep.exact_at_g = image_a == preimage;
  }
  // exactness at C: image(B->C) = delta^{-1}(trivial)
  {
    std::vector<int> image_b = rep.map_g_to_gad;
    std::sort(image_b.begin(), image_b.end());
    image_b.erase(std::unique(image_b.begin(), image_b.end()), image_b.end());
    std::vector<int> kernel_delta;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (rep.obstructions[i].trivial_class) kernel_delta.push_back(static_cast<int>(i));
    rep.exact_at_gad = image_b == kernel_delta;
  }
  rep.exactness_ok = rep.exact_at_g && rep.exact_at_gad;
  rep.display = render_display(rep);
  return rep;
}

InnerTwistReport inner_twist(const GroupSpec& g, const CMat& k, double tol) {
  const int n = g.dim();
  if (k.rows() != n || k.cols() != n) fail(Errc::DimensionMismatch, "twist has the wrong size");
  if (!in_group(g, k, tol)) fail(Errc::NotATwist, "k is not in the group");
  CMat s = sigma_raw(g, k) * k;
  cdouble lambda = s.trace() / double(n);
  if ((s - lambda * CMat::Identity(n, n)).norm() > tol * std::max(1.0, k.norm() * k.norm()))
    fail(Errc::NotATwist, "sigma(k) k is not central");

  InnerTwistReport rep;
  rep.k = k;
  rep.twist_scalar = lambda;
  CMat kinv = k.inverse();
  auto sigma_twisted = [&](const CMat& m) -> CMat { return k * sigma_raw(g, m) * kinv; };

  rep.ok = true;
  for (const CentralClass& cp : central_parameters(g)) {
    InnerTwistSector sector;
    sector.source_c = cp;
    sector.target_scalar = cp.scalar / lambda;
    std::vector<ClassLabel> seen;
    bool all_ok = true;
    std::uint64_t seed = 0x7157ed00u;
    for (const CohomologyClass& cls : enumerate_classes(g, cp)) {
      TwistedClassPair pair;
      pair.source = cls.label;
      pair.twisted = cls.canonical * kinv;
      CMat target = sector.target_scalar * CMat::Identity(n, n);
      CMat cond = sigma_twisted(pair.twisted) * pair.twisted;
      pair.twisted_valid = (cond - target).norm() <= 100 * tol * std::max(1.0, cond.norm());
      // walk along the twisted orbit, pull back with k, normalize untwisted;
      // pulling back a sigma^k-cocycle for c'c^{-1} gives a sigma-cocycle for c'
      Rng rng(seed++);
      CMat b = random_element(g, rng);
      CMat along_orbit = b.inverse() * pair.twisted * sigma_twisted(b);
      NormalizeResult nr = normalize(g, cp, along_orbit * k, 1e-6);
      pair.roundtrip = nr.cls.label;
      pair.roundtrip_ok = pair.roundtrip == cls.label;
      all_ok = all_ok && pair.twisted_valid && pair.roundtrip_ok;
      seen.push_back(pair.roundtrip);
      sector.pairs.push_back(pair);
    }
    std::sort(seen.begin(), seen.end());
    sector.bijective = all_ok && std::adjacent_find(seen.begin(), seen.end()) == seen.end();
    rep.ok = rep.ok && sector.bijective;
    rep.sectors.push_back(std::move(sector));
  }
  return rep;
}

}  // namespace rbp
