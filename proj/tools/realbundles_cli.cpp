// Command-line front end: classify point cocycles, print stabilizer forms,
// exact sequences, curve topology, bundle types and component censuses, and
// run the verification suites.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "realbundles/json_io.hpp"
#include "realbundles/verify.hpp"

namespace {

using namespace rbp;

enum class Format { Table, Json, Tsv };

struct CliConfig {
  double tolerance = kDefaultTol;
  std::uint64_t seed = 20240711;
  Format format = Format::Table;
  long degree_lo = -4;
  long degree_hi = 4;
};

Format parse_format(const std::string& s) {
  if (s == "table") return Format::Table;
  if (s == "json") return Format::Json;
  if (s == "tsv") return Format::Tsv;
  fail(Errc::BadArgument, "format must be table, json or tsv");
}

RealCurve parse_curve_arg(const std::string& s) {
  // "g,kind,r" e.g. "3,I,2"
  auto first = s.find(',');
  auto second = s.find(',', first + 1);
  if (first == std::string::npos || second == std::string::npos)
    fail(Errc::BadArgument, "curve must be given as g,kind,r (e.g. 3,I,2)");
  int g = std::stoi(s.substr(0, first));
  CurveKind kind = parse_curve_kind(s.substr(first + 1, second - first - 1));
  int r = std::stoi(s.substr(second + 1));
  return make_curve(g, kind, r);
}

std::optional<CentralLabel> parse_c_option(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s == "trivial" || s == "+1" || s == "1") return CentralLabel::Trivial;
  if (s == "minus-one" || s == "-1") return CentralLabel::MinusOne;
  fail(Errc::BadArgument, "central class must be trivial or minus-one");
}

CentralClass central_param(const GroupSpec& g, std::optional<CentralLabel> label) {
  if (!label || *label == CentralLabel::Trivial) return trivial_central_class();
  return central_class(g, CentralLabel::MinusOne);
}

CohomologyClass find_class(const GroupSpec& g, const std::string& label_str) {
  for (const CohomologyClass& cls : enumerate_all_classes(g))
    if (cls.label.str() == label_str) return cls;
  fail(Errc::BadArgument, "unknown class '" + label_str + "' for " + g.name() +
                              " (try the point-classes command)");
}

void parse_degree_window(const std::string& s, CliConfig& cfg) {
  auto dots = s.find("..");
  if (dots == std::string::npos) fail(Errc::BadArgument, "degree window must be a..b");
  cfg.degree_lo = std::stol(s.substr(0, dots));
  cfg.degree_hi = std::stol(s.substr(dots + 2));
  if (cfg.degree_lo > cfg.degree_hi) fail(Errc::BadArgument, "empty degree window");
}

// --- command bodies ---------------------------------------------------------

int cmd_point_classes(const CliConfig& cfg, const std::string& group_name,
                      const std::string& c_str) {
  GroupSpec g = parse_group(group_name);
  std::optional<CentralLabel> c_label = parse_c_option(c_str);
  json out = json::array();
  for (const CentralClass& c : central_parameters(g)) {
    if (c_label && c.label != *c_label) continue;
    auto classes = enumerate_classes(g, c);
    if (cfg.format == Format::Table) {
      std::cout << g.name() << "  c=" << central_label_name(c.label)
                << (c.trivial_class && c.label != CentralLabel::Trivial
                        ? " (class is trivial)"
                        : "")
                << "  " << classes.size() << (classes.size() == 1 ? " class" : " classes")
                << "\n";
      for (const auto& cls : classes) std::cout << "  " << cls.label.str() << "\n";
    } else if (cfg.format == Format::Tsv) {
      for (const auto& cls : classes)
        std::cout << g.name() << "\t" << central_label_name(c.label) << "\t" << cls.label.str()
                  << "\n";
    } else {
      json sector{{"group", g}, {"c", c}, {"classes", json::array()}};
      for (const auto& cls : classes) sector["classes"].push_back(cls.label);
      out.push_back(sector);
    }
  }
  for (const std::string& f : group_flags(g)) {
    if (cfg.format == Format::Table) std::cout << "  !! " << f << "\n";
  }
  if (cfg.format == Format::Json) std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_pi0(const CliConfig& cfg, const std::string& group_name, const std::string& class_str) {
  GroupSpec g = parse_group(group_name);
  CohomologyClass cls = find_class(g, class_str);
  RealFormDescriptor d = stabilizer_form(g, cls);
  if (cfg.format == Format::Json) {
    json j = d;
    j["class"] = cls.label;
    std::cout << j.dump(2) << "\n";
  } else if (cfg.format == Format::Tsv) {
    std::cout << g.name() << "\t" << cls.label.str() << "\t" << d.str() << "\t" << d.pi0_size
              << "\n";
  } else {
    std::cout << g.name() << "  " << cls.label.str() << "  Stab(h) = " << d.str()
              << "  pi_0 = " << (d.pi0_size == 1 ? "{1}" : "Z/2Z") << "\n";
  }
  return 0;
}

int cmd_sequence(const CliConfig& cfg, const std::string& group_name) {
  GroupSpec g = parse_group(group_name);
  SequenceReport rep = verify_exact_sequence(g);
  if (cfg.format == Format::Json) {
    std::cout << json(rep).dump(2) << "\n";
  } else {
    std::cout << g.name() << ": " << rep.display << "\n";
    std::cout << "  exact: " << (rep.exactness_ok ? "yes" : "NO")
              << "  lifts: " << (rep.lifts_ok ? "yes" : "NO") << "  fibers:";
    for (std::size_t i = 0; i < rep.fiber_sizes.size(); ++i)
      std::cout << " " << rep.h1_gad[i].str() << ":"
                << (rep.fiber_sizes[i] < 0 ? std::string("n/a")
                                           : std::to_string(rep.fiber_sizes[i]));
    std::cout << "\n";
  }
  return rep.exactness_ok && rep.lifts_ok ? 0 : 1;
}

int cmd_curve(const CliConfig& cfg, int g, const std::string& kind_str, int r) {
  RealCurve curve = make_curve(g, parse_curve_kind(kind_str), r);
  QuotientData q = quotient_data(curve);
  if (cfg.format == Format::Json) {
    json j{{"curve", curve}, {"quotient", q}};
    std::cout << j.dump(2) << "\n";
  } else if (cfg.format == Format::Tsv) {
    std::cout << g << "\t" << kind_str << "\t" << r << "\t" << q.genus0;
    for (BoundaryTag t : q.boundaries) std::cout << "\t" << boundary_tag_name(t);
    std::cout << "\n";
  } else {
    std::cout << curve.str() << ": X0 genus " << q.genus0 << ", boundaries";
    for (BoundaryTag t : q.boundaries) std::cout << " " << boundary_tag_name(t);
    std::cout << "  (doubling " << (q.doubling_consistent(g) ? "ok" : "FAILS") << ")\n";
  }
  return 0;
}

int cmd_types(const CliConfig& cfg, const std::string& group_name, const std::string& curve_str,
              const std::string& c_str) {
  GroupSpec g = parse_group(group_name);
  RealCurve curve = parse_curve_arg(curve_str);
  CentralClass c = central_param(g, parse_c_option(c_str));
  DegreeWindow window{cfg.degree_lo, cfg.degree_hi};
  auto types = enumerate_types(g, curve, c, window);
  if (cfg.format == Format::Json) {
    json j{{"group", g}, {"curve", curve}, {"types", types}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  const char* sep = cfg.format == Format::Tsv ? "\t" : "  ";
  for (const TopologicalType& t : types) {
    std::cout << (cfg.format == Format::Tsv ? "" : "d=") << t.degree << sep << "alpha=(";
    for (std::size_t i = 0; i < t.alphas.size(); ++i)
      std::cout << (i ? "," : "") << t.alphas[i].str();
    std::cout << ")" << sep << "beta=(";
    for (std::size_t i = 0; i < t.betas.size(); ++i)
      std::cout << (i ? "," : "")
                << (t.betas[i].known ? std::to_string(t.betas[i].index) : std::string("?"));
    std::cout << ")\n";
  }
  if (cfg.format == Format::Table)
    std::cout << types.size() << " types (degrees " << cfg.degree_lo << ".." << cfg.degree_hi
              << ")\n";
  return 0;
}

int cmd_census(const CliConfig& cfg, const std::string& group_name, const std::string& curve_str,
               long degree, const std::string& c_str) {
  GroupSpec g = parse_group(group_name);
  RealCurve curve = parse_curve_arg(curve_str);
  std::optional<CentralLabel> c = parse_c_option(c_str);
  CensusResult closed = count_components(g, curve, degree, c);
  CensusResult brute = brute_force_census(g, curve, degree, c);
  if (cfg.format == Format::Json) {
    json j{{"closed_form", closed}, {"brute_force", brute},
           {"agree", closed.count == brute.count}};
    std::cout << j.dump(2) << "\n";
  } else if (cfg.format == Format::Tsv) {
    std::cout << g.name() << "\t" << curve.str() << "\t" << degree << "\t" << closed.count
              << "\t" << brute.count << "\n";
  } else {
    std::cout << g.name() << " over " << curve.str() << " degree " << degree << ":\n";
    std::cout << "  closed form: " << closed.count << "  (";
    for (std::size_t i = 0; i < closed.breakdown.size(); ++i)
      std::cout << (i ? ", " : "") << closed.breakdown[i].first << " "
                << closed.breakdown[i].second;
    std::cout << ")\n  brute force: " << brute.count << "\n";
    std::cout << "  lower bound on fixed-locus components"
              << (closed.exact_when_coprime ? "; exact (rank and degree coprime)" : "") << "\n";
  }
  return closed.count == brute.count ? 0 : 1;
}

int cmd_verify(const CliConfig& cfg, int samples) {
  VerifyReport report = run_verification(samples, cfg.seed);
  for (const SuiteResult& s : report.suites) {
    std::cout << (s.passed() ? "[PASS] " : "[FAIL] ") << s.name << " (" << s.checks
              << " checks";
    if (s.failures) std::cout << ", " << s.failures << " failures";
    std::cout << ")\n";
    for (const std::string& d : s.details) std::cout << "   - " << d << "\n";
  }
  return report.all_passed() ? 0 : 1;
}

int cmd_tables(const CliConfig& cfg) {
  auto groups = default_table_groups();
  auto point = build_point_table(groups);
  auto pi0 = build_pi0_table(groups);
  if (cfg.format == Format::Json) {
    json j{{"point_classes", json::array()}, {"pi0", json::array()}};
    for (const auto& row : point)
      j["point_classes"].push_back(json{{"group", row.group},
                                        {"h1_center", row.h1_center},
                                        {"h1", row.h1_classes},
                                        {"h1_minus", row.h1_minus_classes},
                                        {"h1_adjoint", row.h1_adjoint},
                                        {"adjoint_modeled", row.adjoint_modeled},
                                        {"h2", row.h2},
                                        {"flags", row.flags}});
    for (const auto& row : pi0)
      j["pi0"].push_back(json{{"group", row.group},
                              {"class", row.class_label},
                              {"pseudo_real", row.pseudo_real},
                              {"stabilizer", row.stabilizer},
                              {"pi0_size", row.pi0_size},
                              {"flags", row.flags}});
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << render_point_table(point) << "\n" << render_pi0_table(pi0);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"topological classification of real and pseudo-real principal bundles"};
  app.require_subcommand(1);

  CliConfig cfg;
  if (const char* env_seed = std::getenv("REAL_BUNDLE_SEED"))
    cfg.seed = std::strtoull(env_seed, nullptr, 10);
  std::string format_str = "table", degrees_str;
  app.add_option("--format", format_str, "output format: table, json or tsv");
  app.add_option("--tolerance", cfg.tolerance, "numeric tolerance (default 1e-8)");
  app.add_option("--seed", cfg.seed, "RNG seed (overrides REAL_BUNDLE_SEED)");

  std::string group_name, class_str, c_str, curve_str, kind_str;
  int samples = 50, curve_g = 0, curve_r = 0;
  long degree = 0;

  auto* p_classes = app.add_subcommand("point-classes", "classes of H^1_c(Z/2Z, G)");
  p_classes->add_option("group", group_name)->required();
  p_classes->add_option("--c", c_str, "restrict to one central parameter");

  auto* p_pi0 = app.add_subcommand("pi0", "stabilizer real form and its pi_0");
  p_pi0->add_option("group", group_name)->required();
  p_pi0->add_option("class", class_str)->required();

  auto* p_seq = app.add_subcommand("sequence", "exact sequence of pointed sets");
  p_seq->add_option("group", group_name)->required();

  auto* p_curve = app.add_subcommand("curve", "quotient surface data of a real curve");
  p_curve->add_option("genus", curve_g)->required();
  p_curve->add_option("kind", kind_str)->required();
  p_curve->add_option("r", curve_r)->required();

  auto* p_types = app.add_subcommand("types", "topological types of (pseudo-)real bundles");
  p_types->add_option("group", group_name)->required();
  p_types->add_option("curve", curve_str, "curve as g,kind,r")->required();
  p_types->add_option("--c", c_str);
  p_types->add_option("--degrees", degrees_str, "degree window a..b (default -4..4)");

  auto* p_census = app.add_subcommand("census", "component count, closed form and brute force");
  p_census->add_option("group", group_name)->required();
  p_census->add_option("--curve", curve_str, "curve as g,kind,r")->required();
  p_census->add_option("--degree", degree)->required();
  p_census->add_option("--c", c_str);

  auto* p_verify = app.add_subcommand("verify", "run the verification suites");
  p_verify->add_option("--samples", samples, "orbit samples per class (default 50)");

  app.add_subcommand("tables", "emit both summary tables with discrepancy flags");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cfg.format = parse_format(format_str);
    if (!degrees_str.empty()) parse_degree_window(degrees_str, cfg);
    if (p_classes->parsed()) return cmd_point_classes(cfg, group_name, c_str);
    if (p_pi0->parsed()) return cmd_pi0(cfg, group_name, class_str);
    if (p_seq->parsed()) return cmd_sequence(cfg, group_name);
    if (p_curve->parsed()) return cmd_curve(cfg, curve_g, kind_str, curve_r);
    if (p_types->parsed()) return cmd_types(cfg, group_name, curve_str, c_str);
    if (p_census->parsed()) return cmd_census(cfg, group_name, curve_str, degree, c_str);
    if (p_verify->parsed()) return cmd_verify(cfg, samples);
    return cmd_tables(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
