#include "realbundles/tables.hpp"

#include <sstream>

namespace rbp {

namespace {

std::vector<std::string> label_strings(const std::vector<CohomologyClass>& classes) {
  std::vector<std::string> out;
  out.reserve(classes.size());
  for (const auto& c : classes) out.push_back(c.label.str());
  return out;
}

std::string join(const std::vector<std::string>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out + "}";
}

}  // namespace

std::vector<GroupSpec> default_table_groups() {
  std::vector<GroupSpec> groups;
  groups.push_back(make_group(Family::CStar, 1, RealStructure::CompactType));
  groups.push_back(make_group(Family::CStar, 1, RealStructure::Conjugation));
  for (int n = 2; n <= 6; ++n) groups.push_back(make_group(Family::GL, n, RealStructure::CompactType));
  for (int n = 2; n <= 6; ++n) groups.push_back(make_group(Family::GL, n, RealStructure::Conjugation));
  for (int n = 3; n <= 6; ++n) groups.push_back(make_group(Family::SL, n, RealStructure::CompactType));
  for (int m = 4; m <= 7; ++m) groups.push_back(make_group(Family::SO, m, RealStructure::Conjugation));
  for (int n = 2; n <= 5; ++n) groups.push_back(make_group(Family::PGL, n, RealStructure::CompactType));
  for (int n = 2; n <= 5; ++n) groups.push_back(make_group(Family::PGL, n, RealStructure::Conjugation));
  return groups;
}

std::vector<PointTableRow> build_point_table(const std::vector<GroupSpec>& groups) {
  std::vector<PointTableRow> rows;
  for (const GroupSpec& g : groups) {
    PointTableRow row;
    row.group = g;
    for (cdouble z : h1_center(g)) row.h1_center.push_back(z.real() > 0 ? "+1" : "-1");
    row.h1_classes = label_strings(enumerate_classes(g, trivial_central_class()));
    for (const CentralClass& c : central_parameters(g)) {
      if (c.label != CentralLabel::MinusOne) continue;
      row.minus_param_available = true;
      row.h1_minus_classes = label_strings(enumerate_classes(g, c));
    }
    try {
      GroupSpec ad = adjoint_group(g);
      row.adjoint_modeled = true;
      row.h1_adjoint = label_strings(enumerate_classes(ad, trivial_central_class()));
    } catch (const Error& e) {
      if (e.code() != Errc::NoAdjointModel) throw;
      row.adjoint_modeled = false;
    }
    for (const CentralClass& c : center_real_classes(g))
      row.h2.push_back(central_label_name(c.label));
    row.flags = group_flags(g);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Pi0TableRow> build_pi0_table(const std::vector<GroupSpec>& groups) {
  std::vector<Pi0TableRow> rows;
  for (const GroupSpec& g : groups) {
    if (g.family == Family::PGL) continue;  // not tabulated
    std::vector<std::string> flags = group_flags(g);
    for (const CentralClass& c : central_parameters(g)) {
      for (const CohomologyClass& cls : enumerate_classes(g, c)) {
        RealFormDescriptor d = stabilizer_form(g, cls);
        Pi0TableRow row;
        row.group = g;
        row.class_label = cls.label.str();
        row.pseudo_real = c.label == CentralLabel::MinusOne;
        row.stabilizer = d.str();
        row.pi0_size = d.pi0_size;
        row.flags = flags;
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::string render_point_table(const std::vector<PointTableRow>& rows) {
  std::ostringstream os;
  os << "point classes: H^1(Z/2Z, Z) | H^1(Z/2Z, G) [H^1_c, c=-1] | H^1(Z/2Z, G_ad) | H^2(Z/2Z, Z)\n";
  for (const PointTableRow& row : rows) {
    os << row.group.name() << ": " << join(row.h1_center) << " | " << join(row.h1_classes);
    if (row.minus_param_available) os << " [" << join(row.h1_minus_classes) << "]";
    os << " | " << (row.adjoint_modeled ? join(row.h1_adjoint) : std::string("(not modeled)"));
    os << " | " << join(row.h2) << "\n";
    for (const std::string& f : row.flags) os << "  !! " << f << "\n";
  }
  return os.str();
}

std::string render_pi0_table(const std::vector<Pi0TableRow>& rows) {
  std::ostringstream os;
  os << "pi_0 of stabilizers: group | class | Stab(h) | pi_0\n";
  const GroupSpec* last = nullptr;
  for (const Pi0TableRow& row : rows) {
    os << row.group.name() << " | " << (row.pseudo_real ? "[c=-1] " : "") << row.class_label
       << " | " << row.stabilizer << " | " << (row.pi0_size == 1 ? "{1}" : "Z/2Z") << "\n";
    if (!last || !(*last == row.group))
      for (const std::string& f : row.flags) os << "  !! " << f << "\n";
    last = &row.group;
  }
  return os.str();
}

}  // namespace rbp
