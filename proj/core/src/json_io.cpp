#include "realbundles/json_io.hpp"

namespace rbp {

namespace {

const char* real_form_name_str(RealFormName n) {
  switch (n) {
    case RealFormName::U_pq: return "U(p,q)";
    case RealFormName::SU_pq: return "SU(p,q)";
    case RealFormName::GL_R: return "GL(n,R)";
    case RealFormName::GL_H: return "GL(n,H)";
    case RealFormName::SO_pq: return "SO(p,q)";
    case RealFormName::SO_compact: return "SO(m)";
    case RealFormName::SU_star: return "SU*(n)";
    case RealFormName::Circle: return "S^1";
    case RealFormName::RStar: return "R^*";
  }
  return "?";
}

RealFormName real_form_name_parse(const std::string& s) {
  for (RealFormName n : {RealFormName::U_pq, RealFormName::SU_pq, RealFormName::GL_R,
                         RealFormName::GL_H, RealFormName::SO_pq, RealFormName::SO_compact,
                         RealFormName::SU_star, RealFormName::Circle, RealFormName::RStar})
    if (s == real_form_name_str(n)) return n;
  fail(Errc::BadArgument, "unknown real form name " + s);
}

const char* class_kind_str(ClassKind k) {
  switch (k) {
    case ClassKind::PlusOne: return "plus-one";
    case ClassKind::MinusOne: return "minus-one";
    case ClassKind::Signature: return "signature";
    case ClassKind::QuaternionicJ: return "quaternionic-j";
    case ClassKind::DiagPattern: return "diag-pattern";
    case ClassKind::ImaginarySignature: return "imaginary-signature";
  }
  return "?";
}

ClassKind class_kind_parse(const std::string& s) {
  for (ClassKind k : {ClassKind::PlusOne, ClassKind::MinusOne, ClassKind::Signature,
                      ClassKind::QuaternionicJ, ClassKind::DiagPattern,
                      ClassKind::ImaginarySignature})
    if (s == class_kind_str(k)) return k;
  fail(Errc::BadArgument, "unknown class kind " + s);
}

const char* central_label_str(CentralLabel l) {
  switch (l) {
    case CentralLabel::Trivial: return "trivial";
    case CentralLabel::MinusOne: return "minus-one";
    case CentralLabel::NonInvolutive: return "non-involutive";
  }
  return "?";
}

CentralLabel central_label_parse(const std::string& s) {
  for (CentralLabel l :
       {CentralLabel::Trivial, CentralLabel::MinusOne, CentralLabel::NonInvolutive})
    if (s == central_label_str(l)) return l;
  fail(Errc::BadArgument, "unknown central label " + s);
}

const char* curve_kind_str(CurveKind k) {
  switch (k) {
    case CurveKind::Type0: return "0";
    case CurveKind::TypeI: return "I";
    case CurveKind::TypeII: return "II";
  }
  return "?";
}

const char* boundary_tag_str(BoundaryTag t) {
  switch (t) {
    case BoundaryTag::FixedCircle: return "fixed";
    case BoundaryTag::InvariantCircle: return "invariant";
    case BoundaryTag::InterchangedPair: return "interchanged";
  }
  return "?";
}

BoundaryTag boundary_tag_parse(const std::string& s) {
  for (BoundaryTag t : {BoundaryTag::FixedCircle, BoundaryTag::InvariantCircle,
                        BoundaryTag::InterchangedPair})
    if (s == boundary_tag_str(t)) return t;
  fail(Errc::BadArgument, "unknown boundary tag " + s);
}

}  // namespace

json matrix_to_json(const CMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j)
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMat matrix_from_json(const json& j) {
  const int rows = static_cast<int>(j.size());
  const int cols = rows ? static_cast<int>(j.at(0).size()) : 0;
  CMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k)
      m(i, k) = cdouble(j.at(i).at(k).at(0).get<double>(), j.at(i).at(k).at(1).get<double>());
  return m;
}

void to_json(json& j, const GroupSpec& g) { j = g.name(); }

void from_json(const json& j, GroupSpec& g) { g = parse_group(j.get<std::string>()); }

void to_json(json& j, const CentralClass& c) {
  j = json{{"label", central_label_str(c.label)},
           {"scalar", {c.scalar.real(), c.scalar.imag()}},
           {"trivial_class", c.trivial_class}};
}

void from_json(const json& j, CentralClass& c) {
  c.label = central_label_parse(j.at("label").get<std::string>());
  c.scalar = cdouble(j.at("scalar").at(0).get<double>(), j.at("scalar").at(1).get<double>());
  c.trivial_class = j.at("trivial_class").get<bool>();
}

void to_json(json& j, const ClassLabel& l) {
  j = json{{"kind", class_kind_str(l.kind)}, {"display", l.str()}};
  if (l.kind == ClassKind::Signature || l.kind == ClassKind::ImaginarySignature) {
    j["p"] = l.p;
    j["q"] = l.q;
    if (l.unordered) j["unordered"] = true;
  }
  if (l.kind == ClassKind::DiagPattern) j["k"] = l.k;
}

void from_json(const json& j, ClassLabel& l) {
  l = ClassLabel{};
  l.kind = class_kind_parse(j.at("kind").get<std::string>());
  l.p = j.value("p", 0);
  l.q = j.value("q", 0);
  l.k = j.value("k", 0);
  l.unordered = j.value("unordered", false);
}

void to_json(json& j, const CohomologyClass& c) {
  j = json{{"group", c.group},
           {"c", c.c},
           {"label", c.label},
           {"canonical", matrix_to_json(c.canonical)}};
}

void from_json(const json& j, CohomologyClass& c) {
  c.group = j.at("group").get<GroupSpec>();
  c.c = j.at("c").get<CentralClass>();
  c.label = j.at("label").get<ClassLabel>();
  c.canonical = matrix_from_json(j.at("canonical"));
}

void to_json(json& j, const RealFormDescriptor& d) {
  j = json{{"name", real_form_name_str(d.name)}, {"display", d.str()},
           {"p", d.p},
           {"q", d.q},
           {"n", d.n},
           {"pi0_size", d.pi0_size},
           {"pi0_labels", d.pi0_labels}};
}

void from_json(const json& j, RealFormDescriptor& d) {
  d.name = real_form_name_parse(j.at("name").get<std::string>());
  d.p = j.at("p").get<int>();
  d.q = j.at("q").get<int>();
  d.n = j.at("n").get<int>();
  d.pi0_size = j.at("pi0_size").get<int>();
  d.pi0_labels = j.at("pi0_labels").get<std::vector<std::string>>();
}

void to_json(json& j, const RealCurve& c) {
  j = json{{"genus", c.genus}, {"kind", curve_kind_str(c.kind)}, {"r", c.r}};
}

void from_json(const json& j, RealCurve& c) {
  c.genus = j.at("genus").get<int>();
  c.kind = parse_curve_kind(j.at("kind").get<std::string>());
  c.r = j.at("r").get<int>();
}

void to_json(json& j, const QuotientData& q) {
  std::vector<std::string> tags;
  for (BoundaryTag t : q.boundaries) tags.emplace_back(boundary_tag_str(t));
  j = json{{"genus0", q.genus0}, {"boundaries", tags}};
}

void from_json(const json& j, QuotientData& q) {
  q.genus0 = j.at("genus0").get<int>();
  q.boundaries.clear();
  for (const auto& t : j.at("boundaries")) q.boundaries.push_back(boundary_tag_parse(t));
}

void to_json(json& j, const BetaChoice& b) {
  j = json{{"index", b.index}, {"known", b.known}};
}

void from_json(const json& j, BetaChoice& b) {
  b.index = j.at("index").get<int>();
  b.known = j.at("known").get<bool>();
}

void to_json(json& j, const TopologicalType& t) {
  j = json{{"c", t.c}, {"alphas", t.alphas}, {"betas", t.betas}, {"degree", t.degree}};
}

void from_json(const json& j, TopologicalType& t) {
  t.c = j.at("c").get<CentralClass>();
  t.alphas = j.at("alphas").get<std::vector<ClassLabel>>();
  t.betas = j.at("betas").get<std::vector<BetaChoice>>();
  t.degree = j.at("degree").get<long>();
}

void to_json(json& j, const CensusResult& r) {
  j = json{{"group", r.group},
           {"curve", r.curve},
           {"degree", r.degree},
           {"count", r.count},
           {"is_lower_bound", r.is_lower_bound},
           {"exact_when_coprime", r.exact_when_coprime}};
  if (r.c_filter) j["c"] = central_label_str(*r.c_filter);
  json breakdown = json::array();
  for (const auto& [name, n] : r.breakdown) breakdown.push_back(json{{"sector", name}, {"count", n}});
  j["breakdown"] = breakdown;
}

void from_json(const json& j, CensusResult& r) {
  r.group = j.at("group").get<GroupSpec>();
  r.curve = j.at("curve").get<RealCurve>();
  r.degree = j.at("degree").get<long>();
  r.count = j.at("count").get<unsigned long long>();
  r.is_lower_bound = j.at("is_lower_bound").get<bool>();
  r.exact_when_coprime = j.at("exact_when_coprime").get<bool>();
  r.c_filter.reset();
  if (j.contains("c")) r.c_filter = central_label_parse(j.at("c").get<std::string>());
  r.breakdown.clear();
  for (const auto& item : j.at("breakdown"))
    r.breakdown.emplace_back(item.at("sector").get<std::string>(),
                             item.at("count").get<unsigned long long>());
}

void to_json(json& j, const DiscretenessReport& r) {
  j = json{{"complex_dim", r.complex_dim},
           {"dim_kernel_T", r.dim_kernel_T},
           {"dim_image_Tprime", r.dim_image_Tprime},
           {"containment_ok", r.containment_ok},
           {"equality_ok", r.equality_ok},
           {"bounds_ok", r.bounds_ok}};
}

void from_json(const json& j, DiscretenessReport& r) {
  r.complex_dim = j.at("complex_dim").get<int>();
  r.dim_kernel_T = j.at("dim_kernel_T").get<int>();
  r.dim_image_Tprime = j.at("dim_image_Tprime").get<int>();
  r.containment_ok = j.at("containment_ok").get<bool>();
  r.equality_ok = j.at("equality_ok").get<bool>();
  r.bounds_ok = j.at("bounds_ok").get<bool>();
}

void to_json(json& j, const SequenceReport& r) {
  j = json{{"group", r.group},
           {"adjoint", r.adjoint},
           {"h1_center", r.h1_center_labels},
           {"h1_g", r.h1_g},
           {"h1_gad", r.h1_gad},
           {"h2", r.h2_labels},
           {"map_center_to_g", r.map_center_to_g},
           {"map_g_to_gad", r.map_g_to_gad},
           {"obstructions", r.obstructions},
           {"exact_at_g", r.exact_at_g},
           {"exact_at_gad", r.exact_at_gad},
           {"exactness_ok", r.exactness_ok},
           {"lifts_ok", r.lifts_ok},
           {"fiber_sizes", r.fiber_sizes},
           {"h1_center_size", r.h1_center_size},
           {"fiber_equalities", r.fiber_equalities},
           {"display", r.display}};
}

void from_json(const json& j, SequenceReport& r) {
  r.group = j.at("group").get<GroupSpec>();
  r.adjoint = j.at("adjoint").get<GroupSpec>();
  r.h1_center_labels = j.at("h1_center").get<std::vector<std::string>>();
  r.h1_g = j.at("h1_g").get<std::vector<ClassLabel>>();
  r.h1_gad = j.at("h1_gad").get<std::vector<ClassLabel>>();
  r.h2_labels = j.at("h2").get<std::vector<std::string>>();
  r.map_center_to_g = j.at("map_center_to_g").get<std::vector<int>>();
  r.map_g_to_gad = j.at("map_g_to_gad").get<std::vector<int>>();
  r.obstructions = j.at("obstructions").get<std::vector<CentralClass>>();
  r.exact_at_g = j.at("exact_at_g").get<bool>();
  r.exact_at_gad = j.at("exact_at_gad").get<bool>();
  r.exactness_ok = j.at("exactness_ok").get<bool>();
  r.lifts_ok = j.at("lifts_ok").get<bool>();
  r.fiber_sizes = j.at("fiber_sizes").get<std::vector<int>>();
  r.h1_center_size = j.at("h1_center_size").get<int>();
  r.fiber_equalities = j.at("fiber_equalities").get<std::vector<int>>();
  r.display = j.at("display").get<std::string>();
}

}  // namespace rbp
