#pragma once

#include <string>
#include <vector>

#include "realbundles/sequence.hpp"

namespace rbp {

// The two summary tables: point classes per group and pi_0 of the
// stabilizer real forms. Rows are generated from the engine; structured
// warnings mark the places where literal computation disagrees with the
// classical versions.

struct PointTableRow {
  GroupSpec group;
  std::vector<std::string> h1_center;
  std::vector<std::string> h1_classes;        // c = +1
  std::vector<std::string> h1_minus_classes;  // c = -1 (empty when unavailable)
  bool minus_param_available = false;
  std::vector<std::string> h1_adjoint;
  bool adjoint_modeled = false;
  std::vector<std::string> h2;
  std::vector<std::string> flags;
};

struct Pi0TableRow {
  GroupSpec group;
  std::string class_label;
  bool pseudo_real = false;  // c = -1 entry
  std::string stabilizer;
  int pi0_size = 1;
  std::vector<std::string> flags;
};

// The concrete row set: cstar (both structures), gl(2..6) (both),
// sl(3..6) compact, so(4..7) conjugation, pgl(2..5) (both).
std::vector<GroupSpec> default_table_groups();

std::vector<PointTableRow> build_point_table(const std::vector<GroupSpec>& groups);
std::vector<Pi0TableRow> build_pi0_table(const std::vector<GroupSpec>& groups);

std::string render_point_table(const std::vector<PointTableRow>& rows);
std::string render_pi0_table(const std::vector<Pi0TableRow>& rows);

}  // namespace rbp
