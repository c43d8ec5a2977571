#include "fbsel/dot.hpp"

#include <sstream>

namespace fbsel {

std::string to_dot(const Digraph& d) {
  std::ostringstream os;
  os << "digraph closed_loop {\n  rankdir=LR;\n";
  for (int v = 0; v < d.num_vertices(); ++v) {
    const char* shape = "circle";
    const char* fill = "\"#f0ddcc\"";
    switch (d.kind(v)) {
      case NodeKind::State: break;
      case NodeKind::Input: shape = "box"; fill = "\"#fcc2cc\""; break;
      case NodeKind::Output: shape = "diamond"; fill = "\"#9cdeff\""; break;
    }
    os << "  " << d.name(v) << " [shape=" << shape << ", style=filled, fillcolor=" << fill << "];\n";
  }
  for (const DiEdge& e : d.edges()) {
    os << "  " << d.name(e.from) << " -> " << d.name(e.to);
    if (e.kind == EdgeKind::Feedback) os << " [style=dashed, color=red]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const Condensation& c) {
  std::ostringstream os;
  os << "digraph condensation {\n  rankdir=LR;\n";
  for (int k = 0; k < c.size(); ++k) {
    os << "  C" << k + 1 << " [shape=ellipse, label=\"C" << k + 1 << "\\n{";
    for (std::size_t s = 0; s < c.sccs[k].size(); ++s) os << (s ? "," : "") << 'x' << c.sccs[k][s] + 1;
    os << '}';
    if (!c.input_incidence[k].empty()) {
      os << "\\nU:";
      for (int i : c.input_incidence[k]) os << " u" << i + 1;
    }
    if (!c.output_incidence[k].empty()) {
      os << "\\nY:";
      for (int j : c.output_incidence[k]) os << " y" << j + 1;
    }
    os << "\"];\n";
  }
  for (auto [from, to] : c.dag_edges) os << "  C" << from + 1 << " -> C" << to + 1 << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace fbsel
