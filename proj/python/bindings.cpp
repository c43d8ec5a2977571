#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>
#include <sstream>

#include "fbsel/cli.hpp"
#include "fbsel/dot.hpp"
#include "fbsel/generators.hpp"
#include "fbsel/io.hpp"
#include "fbsel/report.hpp"
#include "fbsel/sfm.hpp"
#include "fbsel/solvers.hpp"

namespace py = pybind11;
using namespace fbsel;

namespace {

using Pairs = std::vector<std::pair<int, int>>;

std::vector<Entry> to_entries(const Pairs& pairs) {
  std::vector<Entry> out;
  for (auto [r, c] : pairs) out.push_back({r - 1, c - 1});
  return out;
}

Pairs to_pairs(const std::vector<Entry>& entries) {
  Pairs out;
  for (const Entry& e : entries) out.emplace_back(e.row + 1, e.col + 1);
  return out;
}

FeedbackPattern to_pattern(const Pairs& links) {
  std::vector<Link> out;
  for (auto [i, j] : links) {
    if (i < 1 || j < 1) throw DimensionError("feedback links are 1-based (input, output) pairs");
    out.push_back({i - 1, j - 1});
  }
  return FeedbackPattern(std::move(out));
}

Pairs from_pattern(const FeedbackPattern& k) {
  Pairs out;
  for (const Link& l : k.links()) out.emplace_back(l.input + 1, l.output + 1);
  return out;
}

double to_float(Cost c) { return c.value(); }

Instance make_instance(int n, int m, int p, const Pairs& a, const Pairs& b, const Pairs& c,
                       const std::vector<std::vector<double>>& cost) {
  StructuredSystem sys{n, m, p, to_entries(a), to_entries(b), to_entries(c)};
  std::vector<std::vector<Cost>> rows;
  for (const auto& row : cost) {
    std::vector<Cost> r;
    for (double v : row) r.push_back(v == std::numeric_limits<double>::infinity() ? Cost::infinite() : Cost(v));
    rows.push_back(std::move(r));
  }
  Instance inst{make_system(std::move(sys)), CostMatrix::from_rows(rows, p)};
  check_dimensions(inst.sys, inst.costs);
  return inst;
}

RunReport solve_report(const char* name, const Instance& inst, const Solution& s) {
  return make_report(name, inst, s);
}

}  // namespace

PYBIND11_MODULE(_fbsel, m) {
  m.doc() = "Minimum-cost output feedback selection for structured systems";

  auto base = py::register_exception<Error>(m, "FbselError");
  py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
  auto precondition = py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", precondition.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<Instance>(m, "Instance")
      .def(py::init(&make_instance), py::arg("n"), py::arg("m"), py::arg("p"), py::arg("a_edges"),
           py::arg("b_edges"), py::arg("c_edges"), py::arg("cost"))
      .def_property_readonly("n", [](const Instance& i) { return i.sys.n; })
      .def_property_readonly("m", [](const Instance& i) { return i.sys.m; })
      .def_property_readonly("p", [](const Instance& i) { return i.sys.p; })
      .def_property_readonly("a_edges", [](const Instance& i) { return to_pairs(i.sys.a_edges); })
      .def_property_readonly("b_edges", [](const Instance& i) { return to_pairs(i.sys.b_edges); })
      .def_property_readonly("c_edges", [](const Instance& i) { return to_pairs(i.sys.c_edges); })
      .def_property_readonly("cost",
                             [](const Instance& i) {
                               std::vector<std::vector<double>> rows(i.costs.rows());
                               for (int r = 0; r < i.costs.rows(); ++r)
                                 for (int c = 0; c < i.costs.cols(); ++c) rows[r].push_back(to_float(i.costs.at(r, c)));
                               return rows;
                             })
      .def("to_json", &emit_system)
      .def("__eq__", [](const Instance& a, const Instance& b) { return a == b; })
      .def("__repr__", [](const Instance& i) {
        std::ostringstream os;
        os << "Instance(n=" << i.sys.n << ", m=" << i.sys.m << ", p=" << i.sys.p << ")";
        return os.str();
      });

  py::class_<RunReport>(m, "Report")
      .def_property_readonly("method",
                             [](const RunReport& r) -> py::object {
                               if (!r.method) return py::none();
                               return py::str(std::string(to_string(*r.method)));
                             })
      .def_property_readonly("solved", [](const RunReport& r) { return r.solved; })
      .def_property_readonly("feasible", &RunReport::feasible)
      .def_property_readonly("links", [](const RunReport& r) { return from_pattern(r.links); })
      .def_property_readonly("cost", [](const RunReport& r) { return to_float(r.cost); })
      .def_property_readonly("condition_a", [](const RunReport& r) { return r.verdict.condition_a(); })
      .def_property_readonly("condition_b", [](const RunReport& r) { return r.verdict.condition_b; })
      .def_property_readonly("uncovered_states",
                             [](const RunReport& r) {
                               std::vector<int> out;
                               for (int x : r.verdict.uncovered_states) out.push_back(x + 1);
                               return out;
                             })
      .def_property_readonly("note", [](const RunReport& r) { return r.note; })
      .def_property_readonly("dp_w",
                             [](const RunReport& r) -> py::object {
                               if (!r.dp) return py::none();
                               std::vector<double> w;
                               for (Cost c : r.dp->w) w.push_back(to_float(c));
                               return py::cast(w);
                             })
      .def("to_json", &format_structured)
      .def("__str__", &format_text);

  m.def("parse_system", [](const std::string& text) { return parse_system(text); }, py::arg("text"));
  m.def("load_system", [](const std::string& path) { return load_system(path); }, py::arg("path"));

  m.def("check_sfm",
        [](const Instance& inst, const Pairs& links) { return make_check_report(inst, to_pattern(links)); },
        py::arg("instance"), py::arg("links"), "Check a 1-based feedback pattern for structurally fixed modes.");
  m.def("solve_dp", [](const Instance& i) { return solve_report("solve-dp", i, solve_dp(i.sys, i.costs)); },
        py::arg("instance"));
  m.def("solve_two_stage",
        [](const Instance& i) { return solve_report("solve-two-stage", i, two_stage(i.sys, i.costs)); },
        py::arg("instance"));
  m.def("solve_greedy",
        [](const Instance& i) { return solve_report("solve-greedy", i, greedy_single_input(i.sys, i.costs)); },
        py::arg("instance"));
  m.def("solve_exact",
        [](const Instance& i, int budget) {
          return solve_report("solve-exact", i, exact_oracle(i.sys, i.costs, budget));
        },
        py::arg("instance"), py::arg("budget") = 20);

  m.def("reduce_set_cover",
        [](int universe_size, const std::vector<std::vector<int>>& sets, const std::vector<double>& weights) {
          SetCoverInstance sc;
          sc.universe_size = universe_size;
          for (const auto& s : sets) {
            std::vector<int> members;
            for (int e : s) members.push_back(e - 1);
            sc.sets.push_back(std::move(members));
          }
          for (double w : weights) sc.weights.push_back(Cost(w));
          validate(sc);
          return reduce_set_cover(sc);
        },
        py::arg("universe_size"), py::arg("sets"), py::arg("weights"));

  m.def("generate_line",
        [](std::uint64_t seed, int sccs, int scc_size_min, int scc_size_max, int inputs, int outputs,
           double input_density, double output_density, int cost_min, int cost_max, bool perfect_matching) {
          LineParams p;
          p.seed = seed;
          p.scc_count = sccs;
          p.scc_size_min = scc_size_min;
          p.scc_size_max = scc_size_max;
          p.inputs = inputs;
          p.outputs = outputs;
          p.input_density = input_density;
          p.output_density = output_density;
          p.cost_min = cost_min;
          p.cost_max = cost_max;
          p.perfect_matching = perfect_matching;
          return generate_line(p);
        },
        py::arg("seed"), py::arg("sccs") = 4, py::arg("scc_size_min") = 1, py::arg("scc_size_max") = 3,
        py::arg("inputs") = 2, py::arg("outputs") = 2, py::arg("input_density") = 0.3,
        py::arg("output_density") = 0.3, py::arg("cost_min") = 1, py::arg("cost_max") = 100,
        py::arg("perfect_matching") = true);

  m.def("condense",
        [](const Instance& i) {
          std::vector<std::vector<int>> out;
          for (const auto& scc : condense(i.sys).sccs) {
            std::vector<int> states;
            for (int x : scc) states.push_back(x + 1);
            out.push_back(std::move(states));
          }
          return out;
        },
        py::arg("instance"), "SCCs of the state digraph in topological order, 1-based.");

  m.def("to_dot",
        [](const Instance& i, const Pairs& links, bool condensation) {
          if (condensation) return to_dot(condense(i.sys));
          const FeedbackPattern k = to_pattern(links);
          check_pattern(k, i.sys.m, i.sys.p);
          return to_dot(closed_loop_digraph(i.sys, k));
        },
        py::arg("instance"), py::arg("links") = Pairs{}, py::arg("condensation") = false);

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int code = run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run a CLI command in-process; returns (exit_code, stdout, stderr).");
}
