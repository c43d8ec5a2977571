#include "fbsel/cli.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <fstream>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "fbsel/dot.hpp"
#include "fbsel/generators.hpp"
#include "fbsel/io.hpp"
#include "fbsel/report.hpp"

namespace fbsel {

namespace {

struct ReportOptions {
  std::string format = "text";
  bool timing = false;
};

void add_report_options(CLI::App* cmd, ReportOptions& opts) {
  cmd->add_option("--format", opts.format, "Report format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  cmd->add_flag("--timing", opts.timing, "Include the solver wall time in the report");
}

void print_report(const RunReport& report, const ReportOptions& opts, std::ostream& out) {
  out << (opts.format == "structured" ? format_structured(report) : format_text(report));
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot write '" + path + "'");
  file << text;
}

Instance load_with_warnings(const std::string& path, std::ostream& err) {
  std::vector<std::string> warnings;
  Instance inst = load_system(path, &warnings);
  for (const std::string& w : warnings) err << "warning: " << path << ": " << w << '\n';
  return inst;
}

int solve_command(const std::string& name, const std::string& path, const ReportOptions& opts,
                  const std::function<Solution(const Instance&)>& solver, std::ostream& out, std::ostream& err) {
  const Instance inst = load_with_warnings(path, err);
  const auto start = std::chrono::steady_clock::now();
  const Solution solution = solver(inst);
  const auto stop = std::chrono::steady_clock::now();
  RunReport report = make_report(name, inst, solution);
  if (opts.timing) report.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  print_report(report, opts, out);
  return report.feasible() ? kExitOk : kExitInfeasible;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum-cost output feedback selection for structured systems", "fbsel"};
  app.require_subcommand(1);

  // check-sfm
  std::string check_path, check_links;
  ReportOptions check_opts;
  auto* check = app.add_subcommand("check-sfm", "Check a feedback pattern for structurally fixed modes");
  check->add_option("system", check_path, "System file")->required();
  check->add_option("--feedback", check_links, "Links as input:output pairs, e.g. 1:1,2:3")->required();
  add_report_options(check, check_opts);

  // solvers
  struct SolveCommand {
    const char* name;
    const char* help;
    std::string path;
    ReportOptions opts;
    CLI::App* app = nullptr;
  };
  std::vector<SolveCommand> solvers = {
      {"solve-dp", "Stage-wise DP for line condensations (optimal with a perfect matching in B(A))", {}, {}},
      {"solve-two-stage", "DP plus min-cost matching; within twice the optimum", {}, {}},
      {"solve-greedy", "Greedy set cover for single-input systems", {}, {}},
      {"solve-exact", "Exhaustive search over finite-cost links", {}, {}},
  };
  int budget = 20;
  for (SolveCommand& s : solvers) {
    s.app = app.add_subcommand(s.name, s.help);
    s.app->add_option("system", s.path, "System file")->required();
    add_report_options(s.app, s.opts);
  }
  solvers[3].app->add_option("--budget", budget, "Refuse instances with more finite-cost links")
      ->check(CLI::Range(0, 62))
      ->capture_default_str();

  // gen-setcover
  std::string cover_path, cover_out;
  bool unit_weights = false;
  auto* gen_cover = app.add_subcommand("gen-setcover", "Reduce a weighted set cover instance to a system file");
  gen_cover->add_option("instance", cover_path, "Set cover file")->required();
  gen_cover->add_flag("--unit-weights", unit_weights, "Replace every weight by 1");
  gen_cover->add_option("-o,--output", cover_out, "Write here instead of standard output");

  // gen-line
  LineParams line;
  std::string pm = "on", line_out;
  auto* gen_line = app.add_subcommand("gen-line", "Generate a random system with a line condensation");
  gen_line->add_option("--seed", line.seed, "Generator seed")->required();
  gen_line->add_option("--sccs", line.scc_count, "Number of SCCs")->capture_default_str();
  gen_line->add_option("--scc-size-min", line.scc_size_min, "Smallest SCC")->capture_default_str();
  gen_line->add_option("--scc-size-max", line.scc_size_max, "Largest SCC")->capture_default_str();
  gen_line->add_option("--inputs", line.inputs, "Number of inputs")->capture_default_str();
  gen_line->add_option("--outputs", line.outputs, "Number of outputs")->capture_default_str();
  gen_line->add_option("--input-density", line.input_density, "Probability of each input-state edge")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  gen_line->add_option("--output-density", line.output_density, "Probability of each state-output edge")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  gen_line->add_option("--cost-min", line.cost_min, "Smallest link cost")->capture_default_str();
  gen_line->add_option("--cost-max", line.cost_max, "Largest link cost")->capture_default_str();
  gen_line->add_option("--pm", pm, "Perfect matching in B(A)")
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();
  gen_line->add_option("--shortcut-density", line.shortcut_density, "Probability of each skipping DAG edge")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  gen_line->add_option("--forbidden-density", line.forbidden_density, "Probability of each forbidden link")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  gen_line->add_option("-o,--output", line_out, "Write here instead of standard output");

  // export-dot
  std::string dot_path, dot_links, dot_out;
  bool condensation = false;
  auto* dot = app.add_subcommand("export-dot", "Render the closed-loop digraph or its condensation as DOT");
  dot->add_option("system", dot_path, "System file")->required();
  dot->add_option("--feedback", dot_links, "Links to draw as input:output pairs");
  dot->add_flag("--condensation", condensation, "Render the SCC condensation of the state digraph");
  dot->add_option("-o,--output", dot_out, "Write here instead of standard output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) {
      const Instance inst = load_with_warnings(check_path, err);
      const FeedbackPattern k = parse_links(check_links);
      RunReport report = make_check_report(inst, k);
      print_report(report, check_opts, out);
      return report.feasible() ? kExitOk : kExitInfeasible;
    }
    const std::array<std::function<Solution(const Instance&)>, 4> fns = {
        [](const Instance& i) { return solve_dp(i.sys, i.costs); },
        [](const Instance& i) { return two_stage(i.sys, i.costs); },
        [](const Instance& i) { return greedy_single_input(i.sys, i.costs); },
        [&budget](const Instance& i) { return exact_oracle(i.sys, i.costs, budget); },
    };
    for (std::size_t s = 0; s < solvers.size(); ++s) {
      if (solvers[s].app->parsed()) return solve_command(solvers[s].name, solvers[s].path, solvers[s].opts, fns[s], out, err);
    }
    if (gen_cover->parsed()) {
      SetCoverInstance inst = load_set_cover(cover_path);
      if (unit_weights) std::fill(inst.weights.begin(), inst.weights.end(), Cost(1.0));
      write_output(emit_system(reduce_set_cover(inst)), cover_out, out);
      return kExitOk;
    }
    if (gen_line->parsed()) {
      line.perfect_matching = pm == "on";
      write_output(emit_system(generate_line(line)), line_out, out);
      return kExitOk;
    }
    if (dot->parsed()) {
      const Instance inst = load_with_warnings(dot_path, err);
      std::string text;
      if (condensation) {
        text = to_dot(condense(inst.sys));
      } else {
        const FeedbackPattern k = parse_links(dot_links);
        check_pattern(k, inst.sys.m, inst.sys.p);
        text = to_dot(closed_loop_digraph(inst.sys, k));
      }
      write_output(text, dot_out, out);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fbsel
