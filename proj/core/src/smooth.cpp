#include "mnseq/smooth.hpp"

#include <algorithm>
#include <map>

#include "mnseq/errors.hpp"

namespace mnseq {

std::pair<HalfEdge, HalfEdge> hpp_half_edges_at(const AssemblyGraph& graph,
                                                const Hpp& hpp, int vertex) {
    graph.vertex(vertex);  // validates 4-valence
    auto it = std::find(hpp.vertex_order.begin(), hpp.vertex_order.end(), vertex);
    if (it == hpp.vertex_order.end()) {
        fail(ErrorCode::vertex_not_on_path,
             "v" + std::to_string(vertex) + " is not on the HPP");
    }
    const size_t idx = static_cast<size_t>(it - hpp.vertex_order.begin());
    HalfEdge reach = idx == 0 ? hpp.start.slot
                              : middle_slot(hpp.middle[idx - 1], true);
    HalfEdge leave = idx + 1 == hpp.vertex_order.size()
                         ? hpp.finish.slot
                         : middle_slot(hpp.middle[idx], false);
    return {reach, leave};
}

SmoothKind classify_smoothing(const AssemblyGraph& graph, const Hpp& hpp,
                              int vertex) {
    auto [reach, leave] = hpp_half_edges_at(graph, hpp, vertex);
    return graph.incoming(reach) == graph.incoming(leave) ? SmoothKind::N
                                                          : SmoothKind::P;
}

namespace {

std::array<Joint, 2> joints_for(const FourValentVertex& v, SmoothKind kind) {
    if (kind == SmoothKind::N) {
        return {Joint{v.pass1.in, v.pass2.in}, Joint{v.pass1.out, v.pass2.out}};
    }
    return {Joint{v.pass1.in, v.pass2.out}, Joint{v.pass2.in, v.pass1.out}};
}

bool joint_pairs(const Joint& j, HalfEdge x, HalfEdge y) {
    return (j.a == x && j.b == y) || (j.a == y && j.b == x);
}

}  // namespace

std::vector<Strand> trace_components(const AssemblyGraph& graph, int vertex,
                                     const std::array<Joint, 2>& joints) {
    (void)vertex;
    std::map<HalfEdge, HalfEdge> fused;
    for (const Joint& j : joints) {
        fused[j.a] = j.b;
        fused[j.b] = j.a;
    }
    std::vector<char> visited(static_cast<size_t>(graph.edge_count()), 0);

    auto walk = [&](Step from, bool cyclic) {
        Strand strand;
        strand.cyclic = cyclic;
        Step step = from;
        while (true) {
            strand.steps.push_back(step);
            visited[static_cast<size_t>(step.edge)] = 1;
            HalfEdge arrive{step.edge,
                            step.forward ? EdgeEnd::head : EdgeEnd::tail};
            if (graph.is_terminus(arrive)) break;
            auto joined = fused.find(arrive);
            HalfEdge depart = joined != fused.end()
                                  ? joined->second
                                  : graph.straight_partner(arrive);
            step = Step{depart.edge, depart.end == EdgeEnd::tail};
            if (cyclic && step == from) break;
        }
        return strand;
    };

    std::vector<Strand> out;
    out.push_back(walk(Step{0, true}, false));
    for (int e = 0; e < graph.edge_count(); ++e) {
        if (!visited[static_cast<size_t>(e)]) {
            out.push_back(walk(Step{e, true}, true));
        }
    }
    return out;
}

std::vector<Segment> strand_pieces(const SegmentLayout& layout,
                                   const Strand& strand) {
    std::vector<Segment> pieces;
    for (const Step& step : strand.steps) {
        const auto& segs = layout.edges[static_cast<size_t>(step.edge)];
        if (step.forward) {
            pieces.insert(pieces.end(), segs.begin(), segs.end());
        } else {
            for (auto it = segs.rbegin(); it != segs.rend(); ++it) {
                Segment s = *it;
                if (!s.ies) s.inverted = !s.inverted;
                pieces.push_back(s);
            }
        }
    }
    return pieces;
}

namespace {

/// Folds a run-free token list out of consecutive pieces; same-kind runs
/// merge into one token (signed part lists concatenate in read order).
std::vector<Token> merge_pieces(const std::vector<Segment>& pieces,
                                std::vector<std::string>* diagnostics) {
    std::vector<Token> tokens;
    for (const Segment& piece : pieces) {
        if (piece.ies) {
            if (!tokens.empty() && is_ies(tokens.back())) continue;
            tokens.emplace_back(IesToken{});
        } else {
            int part = piece.inverted ? -piece.gene : piece.gene;
            if (!tokens.empty() && is_mds(tokens.back())) {
                std::get<MdsToken>(tokens.back()).parts.push_back(part);
            } else {
                tokens.emplace_back(MdsToken{{part}});
            }
        }
    }
    if (diagnostics) {
        for (const Token& t : tokens) {
            if (is_mds(t) && !std::get<MdsToken>(t).uniform_sign()) {
                MicronuclearSequence probe;
                probe.components.push_back({false, {t}});
                diagnostics->push_back("mixed-sign merge: " + render(probe));
            }
        }
    }
    return tokens;
}

Component merge_open(const std::vector<Segment>& pieces,
                     std::vector<std::string>* diagnostics) {
    Component comp;
    comp.tokens = merge_pieces(pieces, diagnostics);
    return comp;
}

Component merge_cycle(std::vector<Segment> pieces,
                      std::vector<std::string>* diagnostics) {
    Component comp;
    comp.cyclic = true;
    bool all_ies = std::all_of(pieces.begin(), pieces.end(),
                               [](const Segment& s) { return s.ies; });
    if (all_ies) {
        comp.tokens.emplace_back(IesToken{});
        return comp;
    }
    // rotate to a kind boundary so no merged run straddles the seam
    size_t cut = 0;
    const size_t count = pieces.size();
    for (size_t i = 0; i < count; ++i) {
        size_t prev = (i + count - 1) % count;
        if (pieces[prev].ies != pieces[i].ies) {
            cut = i;
            break;
        }
    }
    std::rotate(pieces.begin(), pieces.begin() + static_cast<long>(cut),
                pieces.end());
    comp.tokens = merge_pieces(pieces, diagnostics);
    canonicalize_rotation(comp);
    return comp;
}

}  // namespace

SmoothingOutcome apply_smoothing(const AssemblyGraph& graph, const Hpp& hpp,
                                 int vertex) {
    SmoothingOutcome out;
    out.vertex = vertex;
    out.kind = classify_smoothing(graph, hpp, vertex);
    out.joints = joints_for(graph.vertex(vertex), out.kind);

    // connectivity rule: the applied kind is the one joining the HPP's pair
    auto [reach, leave] = hpp_half_edges_at(graph, hpp, vertex);
    if (!joint_pairs(out.joints[0], reach, leave) &&
        !joint_pairs(out.joints[1], reach, leave)) {
        fail(ErrorCode::vertex_not_on_path,
             "smoothing joints do not contain the HPP slots at v" +
                 std::to_string(vertex));
    }

    out.components = trace_components(graph, vertex, out.joints);

    // cycles after the open strand, ordered by smallest contained edge
    std::stable_sort(out.components.begin(), out.components.end(),
                     [](const Strand& a, const Strand& b) {
                         if (a.cyclic != b.cyclic) return !a.cyclic;
                         if (!a.cyclic) return false;
                         return a.steps.front().edge < b.steps.front().edge;
                     });

    const SegmentLayout layout = layout_segments(graph, hpp);
    out.sequence.gene_count = graph.vertex_count();
    for (const Strand& strand : out.components) {
        std::vector<Segment> pieces = strand_pieces(layout, strand);
        out.sequence.components.push_back(
            strand.cyclic ? merge_cycle(std::move(pieces), &out.diagnostics)
                          : merge_open(pieces, &out.diagnostics));
    }
    return out;
}

MicronuclearSequence smoothed_sequence(const AssemblyGraph& graph,
                                       const Hpp& hpp, int vertex) {
    return apply_smoothing(graph, hpp, vertex).sequence;
}

}  // namespace mnseq
