#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "mnseq/graph.hpp"
#include "mnseq/hamiltonian.hpp"
#include "mnseq/label.hpp"
#include "mnseq/seq.hpp"

namespace mnseq {

enum class SmoothKind : unsigned char { P, N };

inline char to_char(SmoothKind k) { return k == SmoothKind::P ? 'P' : 'N'; }

/// Two slots fused when their vertex is removed.
struct Joint {
    HalfEdge a;
    HalfEdge b;
};

/// One step of a traced strand: a whole edge, read forward or backward
/// relative to its transversal direction.
struct Step {
    int edge = -1;
    bool forward = true;

    friend bool operator==(const Step&, const Step&) = default;
};

struct Strand {
    bool cyclic = false;
    std::vector<Step> steps;
};

struct SmoothingOutcome {
    int vertex = 0;
    SmoothKind kind = SmoothKind::N;
    std::array<Joint, 2> joints;
    std::vector<Strand> components;  // open strand first, then cycles
    MicronuclearSequence sequence;
    std::vector<std::string> diagnostics;  // e.g. mixed-sign merges
};

/// The slot by which the HPP reaches the vertex and the slot by which it
/// leaves it; ending segments contribute their vertex-adjacent slot. The
/// two slots always lie in different passes.
std::pair<HalfEdge, HalfEdge> hpp_half_edges_at(const AssemblyGraph& graph,
                                                const Hpp& hpp, int vertex);

/// N when the HPP's two slots are both incoming or both outgoing w.r.t. the
/// transversal, P otherwise: the unique kind whose joints keep the HPP
/// connected.
SmoothKind classify_smoothing(const AssemblyGraph& graph, const Hpp& hpp,
                              int vertex);

/// Removes the vertex, fuses its slots pairwise per the classified kind,
/// retraces the strands and reads off the merged sequence. The input graph
/// is unchanged.
SmoothingOutcome apply_smoothing(const AssemblyGraph& graph, const Hpp& hpp,
                                 int vertex);

/// Strand structure after rewiring: the open strand traced from the v0
/// terminus, then unvisited edges traced as cycles in their inherited
/// orientation, ordered by smallest contained edge index.
std::vector<Strand> trace_components(const AssemblyGraph& graph, int vertex,
                                     const std::array<Joint, 2>& joints);

MicronuclearSequence smoothed_sequence(const AssemblyGraph& graph,
                                       const Hpp& hpp, int vertex);

/// Segment readout of one traced strand: backward steps reverse their
/// edge's segment list and flip MDS orientations.
std::vector<Segment> strand_pieces(const SegmentLayout& layout,
                                   const Strand& strand);

}  // namespace mnseq
