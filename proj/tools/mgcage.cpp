#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mgcage/bounds.hpp"
#include "mgcage/construct.hpp"
#include "mgcage/graph.hpp"
#include "mgcage/io.hpp"
#include "mgcage/metrics.hpp"
#include "mgcage/search.hpp"

namespace {

using namespace mgcage;

// 0 = success, 1 = a verification or search came out negative/inconclusive,
// 2 = unusable input (bad flags, bad files, bad parameters).
int exit_code_for(const Error& e) {
  switch (e.code()) {
    case errc::internal:
    case errc::budget_exceeded:
      return 1;
    default:
      return 2;
  }
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

void print_regularity(std::ostream& out, const RegularityReport& reg) {
  if (reg.is_regular) {
    out << "regular: yes z=" << *reg.z << " r=" << *reg.r << "\n";
  } else {
    out << "regular: no (vertex " << *reg.offending_vertex << ")\n";
  }
}

void print_girth(std::ostream& out, const GirthReport& report) {
  if (!report.girth) {
    out << "girth: none\n";
    return;
  }
  out << "girth: " << *report.girth << "\n";
  out << "witness: " << report.cycle.back().vertex;
  for (const auto& step : report.cycle) {
    out << " " << (step.via.is_edge() ? "e" : "a") << " " << step.vertex;
  }
  out << "\n";
}

void print_verification(std::ostream& out, const MixedGraph& g, const Verification& v) {
  out << "order: " << g.order() << "\n";
  out << "edges: " << g.edge_count() << "\n";
  out << "arcs: " << g.arc_count() << "\n";
  print_regularity(out, v.regularity);
  print_girth(out, v.girth);
  out << "strongly_connected: " << yesno(v.strongly_connected) << "\n";
  out << "underlying_2connected: " << yesno(v.underlying_2connected) << "\n";
}

Verification verify_now(const MixedGraph& g) {
  Verification v;
  v.regularity = regularity(g);
  v.girth = girth(g);
  v.strongly_connected = is_strongly_connected(g);
  v.underlying_2connected = underlying_is_2connected(g);
  return v;
}

void print_recipe(std::ostream& out, const Recipe& recipe) {
  out << "family: " << recipe.family << "\n";
  std::ostringstream params;
  if (recipe.p) params << " p=" << recipe.p;
  if (recipe.q) params << " q=" << recipe.q;
  if (recipe.gamma) params << " gamma=" << recipe.gamma;
  if (recipe.z) params << " z=" << recipe.z;
  if (recipe.g) params << " g=" << recipe.g;
  if (!recipe.base.empty()) params << " base=" << recipe.base;
  if (!recipe.shifts.empty()) {
    params << " shifts=";
    for (std::size_t i = 0; i < recipe.shifts.size(); ++i) {
      if (i) params << ",";
      params << recipe.shifts[i];
    }
  }
  if (!params.str().empty()) out << "recipe:" << params.str() << "\n";
}

struct Options {
  std::optional<int> z, r, g, n, q, p;
  int gamma = 0;
  std::uint64_t budget = 10'000'000;
  std::string out_path;
  std::string format = "dot";
  std::string family;
  std::string path;
};

int need(const std::optional<int>& opt, const char* flag) {
  if (!opt) {
    throw CLI::ValidationError("construct", std::string("missing required flag ") + flag);
  }
  return *opt;
}

void write_if_requested(const MixedGraph& g, const std::string& path) {
  if (!path.empty()) save_mg(g, path);
}

int cmd_construct(const Options& opt) {
  ConstructionReport report;
  if (opt.family == "g5") {
    report = construct_g5(need(opt.z, "--z"), need(opt.r, "--r"));
  } else if (opt.family == "gcopies") {
    const int g = need(opt.g, "--g");
    report = construct_gcopies(cage_catalog(need(opt.r, "--r"), g), g,
                               need(opt.z, "--z"));
  } else if (opt.family == "cage1035") {
    report = construct_cage_10_3_5();
  } else if (opt.family == "biaffine") {
    BiaffinePlane plane = biaffine_incidence(need(opt.q, "--q"));
    if (opt.gamma > 0) {
      report = reduce_blocks(plane, opt.gamma);
    } else {
      report.graph = plane.graph;
      report.recipe.family = "biaffine";
      report.recipe.q = plane.q;
      report.verification = verify_now(report.graph);
    }
  } else if (opt.family == "circulant") {
    report.graph = circulant(need(opt.p, "--p"), need(opt.z, "--z"));
    report.recipe.family = "circulant";
    report.recipe.p = *opt.p;
    report.recipe.z = *opt.z;
    for (int s = 1; s <= *opt.z; ++s) report.recipe.shifts.push_back(s);
    report.verification = verify_now(report.graph);
  } else {
    std::cerr << "error: unknown family '" << opt.family
              << "' (expected g5, gcopies, cage1035, biaffine, circulant)\n";
    return 2;
  }
  print_recipe(std::cout, report.recipe);
  print_verification(std::cout, report.graph, report.verification);
  write_if_requested(report.graph, opt.out_path);
  return 0;
}

int cmd_verify(const Options& opt) {
  const MixedGraph g = load_mg(opt.path);
  const Verification v = verify_now(g);
  print_verification(std::cout, g, v);

  bool predicate_known = true;
  if (v.girth.girth) {
    try {
      std::cout << "nonalternating_girth_cycle: "
                << yesno(has_nonalternating_girth_cycle(g, opt.budget)) << "\n";
    } catch (const Error& e) {
      if (e.code() != errc::budget_exceeded) throw;
      std::cout << "nonalternating_girth_cycle: unknown\n";
      predicate_known = false;
    }
  } else {
    std::cout << "nonalternating_girth_cycle: n/a\n";
  }

  int failures = 0;
  auto expect = [&](const char* what, std::optional<int> want, std::optional<int> got) {
    if (!want) return;
    if (got != want) {
      std::cout << "expectation failed: " << what << " "
                << (got ? std::to_string(*got) : std::string("none")) << " != " << *want << "\n";
      ++failures;
    }
  };
  expect("z", opt.z, v.regularity.z);
  expect("r", opt.r, v.regularity.r);
  expect("girth", opt.g, v.girth.girth);
  if (failures > 0 || !predicate_known) return 1;
  return 0;
}

int cmd_bounds(const Options& opt) {
  const BoundsTable table = bounds_table(need(opt.z, "--z"), need(opt.r, "--r"), need(opt.g, "--g"));
  std::cout << "bounds n[" << table.z << "," << table.r << ";" << table.g << "]\n";
  auto row = [](const std::string& kind, int value, const std::string& method) {
    std::ostringstream line;
    line << std::left << std::setw(10) << kind << " " << std::right << std::setw(6) << value;
    if (!method.empty()) line << "  " << method;
    std::cout << line.str() << "\n";
  };
  for (const auto& e : table.lower_bounds) row("lower", e.value, e.method);
  for (const auto& e : table.upper_bounds) row("upper", e.value, e.method);
  if (table.best_lower) row("best_lower", *table.best_lower, "");
  if (table.best_upper) row("best_upper", *table.best_upper, "");
  return 0;
}

int cmd_search(const Options& opt) {
  const SearchOutcome outcome =
      search(need(opt.z, "--z"), need(opt.r, "--r"), need(opt.g, "--g"), need(opt.n, "--n"),
             opt.budget);
  std::cout << "status: " << search_status_name(outcome.status) << "\n";
  std::cout << "nodes: " << outcome.nodes_expanded << "\n";
  if (outcome.witness) write_if_requested(*outcome.witness, opt.out_path);
  std::cerr << "search_seconds=" << outcome.elapsed_seconds << "\n";
  return outcome.status == SearchStatus::budget_exceeded ? 1 : 0;
}

int cmd_export(const Options& opt) {
  const MixedGraph g = load_mg(opt.path);
  const std::string payload = opt.format == "mg" ? serialize_mg(g) : export_dot(g);
  if (opt.out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(opt.out_path);
    if (!out) fail(errc::syntax, "cannot open " + opt.out_path + " for writing");
    out << payload;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mixed-graph cage toolkit: construct, verify, bound, and search "
               "[z,r;g]-mixed graphs"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--z", opt.z, "arc degree");
    sub->add_option("--r", opt.r, "edge degree");
    sub->add_option("--g", opt.g, "girth");
  };

  CLI::App* construct = app.add_subcommand("construct", "build a graph family instance");
  construct->add_option("family", opt.family, "g5 | gcopies | cage1035 | biaffine | circulant")
      ->required();
  add_common(construct);
  construct->add_option("--q", opt.q, "field order for biaffine");
  construct->add_option("--gamma", opt.gamma, "blocks to delete from the plane");
  construct->add_option("--p", opt.p, "circulant modulus");
  construct->add_option("-o,--out", opt.out_path, "write the graph in mg format");

  CLI::App* verify = app.add_subcommand("verify", "run the verification suite on an mg file");
  verify->add_option("path", opt.path, "mg file")->required();
  add_common(verify);
  verify->add_option("--budget", opt.budget, "cycle enumeration budget")
      ->envname("MG_BUDGET");

  CLI::App* bounds = app.add_subcommand("bounds", "bounds on the minimum order n[z,r;g]");
  add_common(bounds);

  CLI::App* search_cmd = app.add_subcommand("search", "exhaustive search at a fixed order");
  add_common(search_cmd);
  search_cmd->add_option("--n", opt.n, "target order");
  search_cmd->add_option("--budget", opt.budget, "node expansion budget")
      ->envname("MG_BUDGET");
  search_cmd->add_option("-o,--out", opt.out_path, "write the witness in mg format");

  CLI::App* export_cmd = app.add_subcommand("export", "re-emit an mg file in another format");
  export_cmd->add_option("path", opt.path, "mg file")->required();
  export_cmd->add_option("--format", opt.format, "dot | mg")
      ->check(CLI::IsMember({"dot", "mg"}));
  export_cmd->add_option("-o,--out", opt.out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = 2;
  try {
    if (construct->parsed()) code = cmd_construct(opt);
    else if (verify->parsed()) code = cmd_verify(opt);
    else if (bounds->parsed()) code = cmd_bounds(opt);
    else if (search_cmd->parsed()) code = cmd_search(opt);
    else if (export_cmd->parsed()) code = cmd_export(opt);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cerr << "elapsed_ms=" << static_cast<long long>(elapsed * 1000) << "\n";
  return code;
}
