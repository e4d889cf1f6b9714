#include "mnseq/label.hpp"

#include "mnseq/errors.hpp"

namespace mnseq {

namespace {

struct EndPlacement {
    bool present = false;
    int gene = 0;
    bool inverted = false;
};

}  // namespace

SegmentLayout layout_segments(const AssemblyGraph& graph, const Hpp& hpp) {
    const int n = graph.vertex_count();
    SegmentLayout layout;
    layout.edges.assign(static_cast<size_t>(graph.edge_count()), {});

    std::vector<char> middle(static_cast<size_t>(graph.edge_count()), 0);
    for (size_t k = 0; k < hpp.middle.size(); ++k) {
        const DirectedEdge& e = hpp.middle[k];
        middle[static_cast<size_t>(e.edge)] = 1;
        layout.edges[static_cast<size_t>(e.edge)] = {
            mds_segment(static_cast<int>(k) + 2, !e.forward)};
    }

    // ending segments: gene 1 starts the path (traversed toward the vertex,
    // so label B means against the transversal), gene n+1 finishes it
    // (traversed away, so label A means against the transversal)
    std::vector<EndPlacement> at_tail(static_cast<size_t>(graph.edge_count()));
    std::vector<EndPlacement> at_head(static_cast<size_t>(graph.edge_count()));
    auto place = [&](const EndChoice& choice, int gene, bool inverted) {
        if (middle[static_cast<size_t>(choice.slot.edge)]) {
            fail(ErrorCode::vertex_not_on_path,
                 "ending segment collides with middle edge e" +
                     std::to_string(choice.slot.edge));
        }
        auto& side = choice.slot.end == EdgeEnd::tail ? at_tail : at_head;
        side[static_cast<size_t>(choice.slot.edge)] = {true, gene, inverted};
    };
    place(hpp.start, 1, hpp.start.label == EndLabel::B);
    place(hpp.finish, n + 1, hpp.finish.label == EndLabel::A);

    for (int e = 0; e < graph.edge_count(); ++e) {
        if (middle[static_cast<size_t>(e)]) continue;
        std::vector<Segment>& segs = layout.edges[static_cast<size_t>(e)];
        const EndPlacement& tail = at_tail[static_cast<size_t>(e)];
        const EndPlacement& head = at_head[static_cast<size_t>(e)];
        if (tail.present) segs.push_back(mds_segment(tail.gene, tail.inverted));
        segs.push_back(ies_segment());
        if (head.present) segs.push_back(mds_segment(head.gene, head.inverted));
    }
    return layout;
}

MicronuclearSequence micronuclear_sequence(const AssemblyGraph& graph,
                                           const Hpp& hpp) {
    const SegmentLayout layout = layout_segments(graph, hpp);
    MicronuclearSequence seq;
    seq.gene_count = graph.vertex_count();
    Component comp;
    int ies_index = 0;
    for (const auto& segs : layout.edges) {
        for (const Segment& s : segs) {
            if (s.ies) {
                comp.tokens.emplace_back(IesToken{ies_index++});
            } else {
                comp.tokens.emplace_back(
                    MdsToken{{s.inverted ? -s.gene : s.gene}});
            }
        }
    }
    seq.components.push_back(std::move(comp));
    return seq;
}

}  // namespace mnseq
