#include "gsgp/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gsgp/constructors.hpp"
#include "gsgp/enumerate.hpp"
#include "gsgp/format.hpp"
#include "gsgp/green.hpp"
#include "gsgp/ideals.hpp"
#include "gsgp/regularity.hpp"
#include "gsgp/structure.hpp"
#include "gsgp/theoremcheck.hpp"

namespace gsgp {

namespace {

const char* bool_str(bool b) { return b ? "true" : "false"; }

int env_workers() {
  const char* raw = std::getenv("GSGP_WORKERS");
  if (!raw) return 0;
  int w = std::atoi(raw);
  return w >= 1 ? w : 0;
}

GammaSemigroup load_validated(const std::string& path) {
  GsgpDocument doc = load_file(path);
  ValidationResult res = validate(doc.table);
  if (!res.ok()) {
    std::ostringstream os;
    os << "invalid structure in " << path << ":";
    for (const Violation& v : res.violations) os << "\n  " << to_string(v);
    throw std::runtime_error(os.str());
  }
  return *std::move(res.value);
}

std::string blocks_str(const GammaSemigroup& M, const Partition& p) {
  std::ostringstream os;
  for (int i = 0; i < p.block_count(); ++i) {
    if (i) os << " ";
    os << "{";
    const auto& blk = p.block(i);
    for (size_t k = 0; k < blk.size(); ++k) {
      if (k) os << ",";
      os << M.element_name(blk[k]);
    }
    os << "}";
  }
  return os.str();
}

}  // namespace

PropertyReport analyze(const GammaSemigroup& M) {
  PropertyReport rep;
  auto add = [&](std::string name, std::string value, std::string witness = "") {
    rep.entries.push_back({std::move(name), std::move(value), std::move(witness)});
  };

  add("m", std::to_string(M.size()));
  add("g", std::to_string(M.operator_count()));
  add("zero", M.has_zero() ? M.element_name(*M.zero()) : "none");
  add("idempotent-pairs", std::to_string(idempotent_pairs(M).size()));

  ElementSet irregular = irregular_elements(M);
  add("regular", bool_str(irregular.empty()),
      irregular.empty() ? "" : "irregular=" + to_string(M, irregular));

  StrongRegularityReport strong = strongly_regular_report(M);
  add("left-strongly-regular", bool_str(is_left_strongly_regular(M)));
  add("right-strongly-regular", bool_str(is_right_strongly_regular(M)));
  add("strongly-regular", bool_str(strong.verdict()));
  if (strong.anomaly())
    add("strongly-regular-route-disagreement",
        std::string("left-right=") + bool_str(strong.left_right) + " derived=" +
            bool_str(strong.derived) + " mixed=" + bool_str(strong.mixed));

  add("left-0-strongly-regular", bool_str(is_left_0_strongly_regular(M)));
  add("right-0-strongly-regular", bool_str(is_right_0_strongly_regular(M)));

  if (M.has_zero()) {
    TwoZeroReport tz = two_zero_strongly_regular_report(M);
    add("2-0-strongly-regular", bool_str(tz.verdict()));
    if (tz.anomaly())
      add("2-0-route-disagreement", std::string("definitional=") + bool_str(tz.definitional) +
                                        " squares-in-h-class=" + bool_str(tz.via_green));
    add("intra-0-strongly-regular", bool_str(is_intra_0_strongly_regular(M)));
    if (M.size() >= 2) {
      add("0-simple", bool_str(is_0_simple(M)));
      add("completely-0-simple", bool_str(is_completely_0_simple(M)));
    } else {
      add("0-simple", "inapplicable");
      add("completely-0-simple", "inapplicable");
    }
  } else {
    add("2-0-strongly-regular", "inapplicable");
    add("intra-0-strongly-regular", "inapplicable");
    add("0-simple", "inapplicable");
    add("completely-0-simple", "inapplicable");
  }

  if (auto dec = gamma_group_decomposition(M)) {
    std::ostringstream os;
    for (size_t i = 0; i < dec->components.size(); ++i) {
      if (i) os << " ";
      os << to_string(M, dec->components[i]);
    }
    add("gamma-group-decomposition", "true", os.str());
  } else {
    add("gamma-group-decomposition", "false");
  }

  add("l-classes", std::to_string(l_partition(M).block_count()));
  add("r-classes", std::to_string(r_partition(M).block_count()));
  add("h-classes", std::to_string(h_partition(M).block_count()));
  add("d-classes", std::to_string(d_partition(M).block_count()));
  add("j-classes", std::to_string(j_partition(M).block_count()));
  return rep;
}

std::string render_text(const PropertyReport& report) {
  std::ostringstream os;
  for (const PropertyEntry& e : report.entries) {
    os << e.name << " = " << e.value;
    if (!e.witness.empty()) os << "  " << e.witness;
    os << "\n";
  }
  return os.str();
}

std::string render_json(const PropertyReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const PropertyEntry& e : report.entries) {
    nlohmann::json j{{"name", e.name}, {"value", e.value}};
    if (!e.witness.empty()) j["witness"] = e.witness;
    entries.push_back(std::move(j));
  }
  return nlohmann::json{{"properties", entries}}.dump(2) + "\n";
}

namespace {

int cmd_validate(const std::string& file, std::ostream& out) {
  GsgpDocument doc = load_file(file);
  ValidationResult res = validate(doc.table);
  if (!res.ok()) {
    out << "invalid: " << res.violations.size() << " violation(s)\n";
    for (const Violation& v : res.violations) out << to_string(v) << "\n";
    return 1;
  }
  const GammaSemigroup& M = *res.value;
  out << "valid: m=" << M.size() << " g=" << M.operator_count() << " zero="
      << (M.has_zero() ? M.element_name(*M.zero()) : "none") << "\n";
  return 0;
}

int cmd_analyze(const std::string& file, bool json, std::ostream& out) {
  GammaSemigroup M = load_validated(file);
  PropertyReport rep = analyze(M);
  out << (json ? render_json(rep) : render_text(rep));
  return 0;
}

int cmd_green(const std::string& file, bool show_eggbox, std::ostream& out) {
  GammaSemigroup M = load_validated(file);
  out << "L: " << blocks_str(M, l_partition(M)) << "\n";
  out << "R: " << blocks_str(M, r_partition(M)) << "\n";
  out << "H: " << blocks_str(M, h_partition(M)) << "\n";
  out << "D: " << blocks_str(M, d_partition(M)) << "\n";
  out << "J: " << blocks_str(M, j_partition(M)) << "\n";
  if (show_eggbox) {
    out << "\n";
    out << render_eggboxes(M);
  }
  return 0;
}

int cmd_check(const std::string& file, const std::string& statement, std::ostream& out) {
  GammaSemigroup M = load_validated(file);
  std::vector<CheckReport> reports;
  if (statement.empty()) {
    reports = check_all(M);
  } else {
    reports.push_back(check(M, statement_id(statement)));
  }
  bool any_violated = false;
  for (const CheckReport& r : reports) {
    out << to_line(r) << "\n";
    any_violated = any_violated || r.verdict == Verdict::violated;
  }
  return any_violated ? 1 : 0;
}

int cmd_enumerate(int m, int g, bool up_to_iso, bool require_zero, bool do_census,
                  const std::string& out_dir, std::ostream& out) {
  int workers = env_workers();
  if (do_census) {
    CensusOptions opts;
    opts.up_to_iso = up_to_iso;
    opts.require_zero = require_zero;
    for (const CensusEntry& e : census(m, g, opts, workers))
      out << e.m << " " << e.g << " " << e.count << "\n";
    return 0;
  }

  EnumSpec spec;
  spec.m = m;
  spec.g = g;
  spec.up_to_iso = up_to_iso;
  spec.require_zero = require_zero;

  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    uint64_t n = 0;
    enumerate(
        spec,
        [&](const GammaSemigroup& M) {
          std::ostringstream name;
          name << "inst_" << std::setfill('0') << std::setw(6) << n << ".gsgp";
          save_file((std::filesystem::path(out_dir) / name.str()).string(), document_for(M));
          ++n;
          return true;
        },
        workers);
    out << "wrote " << n << " instances to " << out_dir << "\n";
    return 0;
  }

  bool first = true;
  enumerate(
      spec,
      [&](const GammaSemigroup& M) {
        if (!first) out << "\n";
        first = false;
        out << serialize(M);
        return true;
      },
      workers);
  return 0;
}

int cmd_search(int problem, int max_m, int max_g, std::optional<uint64_t> budget,
               std::ostream& out) {
  SearchOutcome outcome = search_counterexample(problem, max_m, max_g, budget, env_workers());
  out << "problem: " << outcome.problem << "\n";
  out << "bounds: m <= " << outcome.max_m << ", g <= " << outcome.max_g << "\n";
  out << "instances: " << outcome.instances << "\n";
  out << "nodes: " << outcome.nodes << "\n";
  if (outcome.counterexample) {
    out << "outcome: counterexample\n";
    out << to_line(outcome.counterexample->report) << "\n";
    out << serialize(outcome.counterexample->instance);
    return 1;
  }
  out << (outcome.budget_exhausted ? "outcome: budget-exhausted\n" : "outcome: exhausted-bounds\n");
  return 0;
}

int cmd_construct_group_zero(int order, const std::string& gamma_list, std::ostream& out) {
  std::vector<Elem> gamma;
  std::stringstream ss(gamma_list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    gamma.push_back(std::stoi(tok));
  }
  PlainSemigroup group = cyclic_group(order);
  group.names.push_back("e");
  for (int i = 1; i < order; ++i)
    group.names.push_back(std::string(1, static_cast<char>('a' + i - 1)));
  out << serialize(group_with_zero(group, gamma));
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite Gamma-semigroup toolkit", "gsgp"};
  app.require_subcommand(1);

  std::string file;
  bool json = false, show_eggbox = false;
  std::string statement;

  CLI::App* validate_cmd = app.add_subcommand("validate", "check a GSGP file");
  validate_cmd->add_option("file", file, "GSGP file")->required();

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "property report for a structure");
  analyze_cmd->add_option("file", file, "GSGP file")->required();
  analyze_cmd->add_flag("--json", json, "emit JSON");

  CLI::App* green_cmd = app.add_subcommand("green", "Green's relation partitions");
  green_cmd->add_option("file", file, "GSGP file")->required();
  green_cmd->add_flag("--eggbox", show_eggbox, "also render eggbox diagrams");

  CLI::App* check_cmd = app.add_subcommand("check", "evaluate catalog statements");
  check_cmd->add_option("file", file, "GSGP file")->required();
  check_cmd->add_option("--statement", statement, "single statement id (default: all)");

  int em = 1, eg = 1;
  bool up_to_iso = false, require_zero = false, do_census = false;
  std::string out_dir;
  CLI::App* enum_cmd = app.add_subcommand("enumerate", "enumerate structures");
  enum_cmd->add_option("--m", em, "carrier size")->required();
  enum_cmd->add_option("--g", eg, "operator count")->required();
  enum_cmd->add_flag("--up-to-iso", up_to_iso, "emit canonical representatives only");
  enum_cmd->add_flag("--require-zero", require_zero, "only structures with a zero");
  enum_cmd->add_flag("--census", do_census, "print counts up to (m, g) instead of tables");
  enum_cmd->add_option("--out", out_dir, "write instances to this directory");

  int problem = 1, max_m = 1, max_g = 1;
  std::optional<uint64_t> budget;
  uint64_t budget_raw = 0;
  CLI::App* search_cmd = app.add_subcommand("search", "hunt for Problem counterexamples");
  search_cmd->add_option("--problem", problem, "problem id (1, 2 or 3)")
      ->required()
      ->check(CLI::Range(1, 3));
  search_cmd->add_option("--max-m", max_m, "carrier bound")->required();
  search_cmd->add_option("--max-g", max_g, "operator bound")->required();
  CLI::Option* budget_opt = search_cmd->add_option("--budget", budget_raw, "node budget");

  CLI::App* construct_cmd = app.add_subcommand("construct", "build a structure");
  int order = 1;
  std::string gamma_list, fixture_name_arg;
  CLI::App* gz_cmd = construct_cmd->add_subcommand("group-zero", "cyclic group with zero");
  gz_cmd->add_option("--order", order, "group order")->required();
  gz_cmd->add_option("--gamma", gamma_list, "comma-separated group element indices")->required();
  CLI::App* fx_cmd = construct_cmd->add_subcommand("fixture", "one of the stock fixtures");
  fx_cmd->add_option("id", fixture_name_arg, "fixture id (T1 N2 LZ2 RZ2 SL2 GZ3 B5)")->required();
  construct_cmd->require_subcommand(1);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(file, out);
    if (analyze_cmd->parsed()) return cmd_analyze(file, json, out);
    if (green_cmd->parsed()) return cmd_green(file, show_eggbox, out);
    if (check_cmd->parsed()) return cmd_check(file, statement, out);
    if (enum_cmd->parsed()) {
      if (do_census && !out_dir.empty()) {
        err << "enumerate: --census and --out are mutually exclusive\n";
        return 2;
      }
      return cmd_enumerate(em, eg, up_to_iso, require_zero, do_census, out_dir, out);
    }
    if (search_cmd->parsed()) {
      if (*budget_opt) budget = budget_raw;
      return cmd_search(problem, max_m, max_g, budget, out);
    }
    if (construct_cmd->parsed()) {
      if (gz_cmd->parsed()) return cmd_construct_group_zero(order, gamma_list, out);
      if (fx_cmd->parsed()) {
        out << serialize(fixture(fixture_id(fixture_name_arg)));
        return 0;
      }
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << app.help();
  return 2;
}

}  // namespace gsgp
