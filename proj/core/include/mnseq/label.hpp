#pragma once

#include <vector>

#include "mnseq/graph.hpp"
#include "mnseq/hamiltonian.hpp"
#include "mnseq/seq.hpp"

namespace mnseq {

/// One labeled portion of an edge, listed along the edge's transversal
/// direction. MDS segments carry the gene index (position along the HPP)
/// and whether the HPP runs against the transversal there.
struct Segment {
    bool ies = true;
    int gene = 0;
    bool inverted = false;

    friend bool operator==(const Segment&, const Segment&) = default;
};

inline Segment ies_segment() { return {}; }
inline Segment mds_segment(int gene, bool inverted) {
    return {false, gene, inverted};
}

/// MDS/IES layout of every edge for one HPP. A full middle edge carries
/// exactly one MDS segment; an edge holding one ending segment carries
/// [IES, MDS] or [MDS, IES] with the MDS adjacent to the HPP's end vertex;
/// an edge holding both ending segments carries [MDS, IES, MDS]; every
/// other edge is a single IES.
struct SegmentLayout {
    std::vector<std::vector<Segment>> edges;
};

SegmentLayout layout_segments(const AssemblyGraph& graph, const Hpp& hpp);

/// Γ: the segment labels read along the transversal e_0..e_2n. One linear
/// component, n+1 MDS tokens and n+2 IES tokens, IES at both ends.
MicronuclearSequence micronuclear_sequence(const AssemblyGraph& graph,
                                           const Hpp& hpp);

}  // namespace mnseq
