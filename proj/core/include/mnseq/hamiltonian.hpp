#pragma once

#include <string>
#include <vector>

#include "mnseq/graph.hpp"

namespace mnseq {

/// A full edge traversed by a path; forward means along the transversal
/// orientation of the edge.
struct DirectedEdge {
    int edge = -1;
    bool forward = true;

    friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

/// The full-edge spine of a Hamiltonian polygonal path: n-1 edges covering
/// every 4-valent vertex once, switching passes at interior vertices.
/// Directed so the first vertex is the one the transversal visits earliest.
struct MiddlePath {
    std::vector<DirectedEdge> edges;  // empty when n == 1
    std::vector<int> vertices;        // visit order, length n

    std::vector<int> edge_indices() const;
};

enum class EndLabel : unsigned char { A, B };  // A = incoming, B = outgoing

inline char to_char(EndLabel l) { return l == EndLabel::A ? 'A' : 'B'; }

/// An ending segment: the partial edge adjacent to the chosen slot.
struct EndChoice {
    HalfEdge slot;
    EndLabel label = EndLabel::A;

    friend auto operator<=>(const EndChoice&, const EndChoice&) = default;
};

/// A Hamiltonian polygonal path with both end-segment choices resolved.
struct Hpp {
    std::vector<DirectedEdge> middle;
    std::vector<int> vertex_order;
    EndChoice start;   // 1A or 1B at vertex_order.front()
    EndChoice finish;  // 2A or 2B at vertex_order.back()

    friend bool operator==(const Hpp&, const Hpp&) = default;
};

/// All middle paths of the graph, one per undirected path, sorted by edge
/// index sequence. n == 1 yields the single empty path; n == 0 none.
std::vector<MiddlePath> enumerate_middle_paths(const AssemblyGraph& graph);

/// The four end-label combinations of every middle path, sorted by
/// (middle path, 1-label, 2-label). Always a multiple of four.
std::vector<Hpp> enumerate_hpps(const AssemblyGraph& graph);

/// Printed form, e.g. "e2(1A, 2A)"; an empty middle renders as the vertex
/// name, e.g. "v1(1A, 2B)".
std::string hpp_name(const Hpp& hpp);

/// Looks an HPP up by its printed name; throws usage error when absent.
Hpp find_hpp(const AssemblyGraph& graph, const std::string& name);

/// Slot of the k-th middle edge at the vertex it leaves (arriving = false)
/// or arrives at (arriving = true).
HalfEdge middle_slot(const DirectedEdge& e, bool arriving);

}  // namespace mnseq
