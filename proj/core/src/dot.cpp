#include "mnseq/dot.hpp"

#include "mnseq/label.hpp"

namespace mnseq {

std::string to_dot(const AssemblyGraph& graph, const Hpp* hpp) {
    std::string out = "digraph assembly {\n";
    out += "  rankdir=LR;\n";
    const int n = graph.vertex_count();
    out += "  v0 [shape=point];\n";
    for (int v = 1; v <= n; ++v) {
        out += "  v" + std::to_string(v) + " [shape=circle];\n";
    }
    out += "  v" + std::to_string(n + 1) + " [shape=point];\n";

    SegmentLayout layout;
    std::vector<char> dashed(static_cast<size_t>(graph.edge_count()), 0);
    if (hpp) {
        layout = layout_segments(graph, *hpp);
        for (const DirectedEdge& e : hpp->middle) {
            dashed[static_cast<size_t>(e.edge)] = 1;
        }
    }
    for (int e = 0; e < graph.edge_count(); ++e) {
        std::string label = "e" + std::to_string(e);
        if (hpp) {
            label += ":";
            for (const Segment& s : layout.edges[static_cast<size_t>(e)]) {
                label += ' ';
                if (s.ies) {
                    label += 'I';
                } else {
                    if (s.inverted) label += '-';
                    label += "M" + std::to_string(s.gene);
                }
            }
        }
        out += "  v" + std::to_string(graph.tail_vertex(e)) + " -> v" +
               std::to_string(graph.head_vertex(e)) + " [label=\"" + label +
               "\"";
        if (dashed[static_cast<size_t>(e)]) out += ", style=dashed";
        out += "];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace mnseq
