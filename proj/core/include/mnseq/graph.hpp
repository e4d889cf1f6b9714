#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "mnseq/word.hpp"

namespace mnseq {

enum class EdgeEnd : unsigned char { tail, head };

/// One of the two ends of a directed edge. An edge incident twice to the
/// same vertex (a loop) contributes two distinct HalfEdge values.
struct HalfEdge {
    int edge = -1;
    EdgeEnd end = EdgeEnd::tail;

    friend auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
};

std::string to_string(HalfEdge h);

/// An (in, out) slot pair crossed by one visit of the transversal.
struct Pass {
    HalfEdge in;
    HalfEdge out;
};

/// Rigid 4-valent vertex. The cyclic slot order is
/// (pass1.in, pass2.in, pass1.out, pass2.out): straight-through partners sit
/// opposite each other, so the two slots of the other pass are the
/// neighbors of any slot.
struct FourValentVertex {
    int id = 0;  // 1..n
    Pass pass1;  // first transversal visit
    Pass pass2;  // second transversal visit

    const Pass& pass(int k) const { return k == 1 ? pass1 : pass2; }
};

/// The rigid-vertex assembly graph of a double-occurrence word.
///
/// Edges e_0..e_2n are enumerated and directed by the transversal walk
/// v0, w_1, ..., w_2n, v_{n+1}; vertex 0 and vertex n+1 are the open strand
/// termini, not 4-valent vertices. Immutable after construction.
class AssemblyGraph {
public:
    explicit AssemblyGraph(const Word& word);

    const Word& word() const { return word_; }
    int vertex_count() const { return n_; }
    int edge_count() const { return 2 * n_ + 1; }

    /// Vertex id at the given end of an edge: 0 = source terminus,
    /// n+1 = sink terminus, otherwise a 4-valent vertex id.
    int tail_vertex(int edge) const;
    int head_vertex(int edge) const;
    int vertex_of(HalfEdge h) const;

    const FourValentVertex& vertex(int id) const;

    /// Station index (0..2n+1) of the first transversal visit to a vertex.
    int first_visit(int id) const;

    /// True for the two strand termini e_0.tail and e_2n.head.
    bool is_terminus(HalfEdge h) const;

    bool incoming(HalfEdge h) const { return h.end == EdgeEnd::head; }

    /// Which pass (1 or 2) of its vertex the slot belongs to.
    int pass_of(HalfEdge h) const;

    /// The two slots of the other pass at h's vertex; a polygonal path
    /// turns onto one of these. Throws not_four_valent at a terminus.
    std::array<HalfEdge, 2> neighbors(HalfEdge h) const;

    /// The other slot of the same pass; the transversal crosses here.
    /// Involution, never a neighbor of h.
    HalfEdge straight_partner(HalfEdge h) const;

private:
    const FourValentVertex& vertex_of_slot(HalfEdge h) const;

    Word word_;
    int n_ = 0;
    std::vector<int> station_;  // vertex id per station, length 2n+2
    std::vector<FourValentVertex> vertices_;
};

}  // namespace mnseq
