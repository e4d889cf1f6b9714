#include "mnseq/hamiltonian.hpp"

#include <algorithm>

#include "mnseq/errors.hpp"

namespace mnseq {

std::vector<int> MiddlePath::edge_indices() const {
    std::vector<int> out;
    out.reserve(edges.size());
    for (const DirectedEdge& e : edges) out.push_back(e.edge);
    return out;
}

HalfEdge middle_slot(const DirectedEdge& e, bool arriving) {
    if (arriving) {
        return {e.edge, e.forward ? EdgeEnd::head : EdgeEnd::tail};
    }
    return {e.edge, e.forward ? EdgeEnd::tail : EdgeEnd::head};
}

namespace {

void extend_path(const AssemblyGraph& g, std::vector<DirectedEdge>& edges,
                 std::vector<int>& verts, std::vector<char>& seen,
                 HalfEdge arrival, bool at_start,
                 std::vector<MiddlePath>& out) {
    if (static_cast<int>(verts.size()) == g.vertex_count()) {
        out.push_back({edges, verts});
        return;
    }
    const FourValentVertex& cur = g.vertex(verts.back());
    std::array<HalfEdge, 4> candidates;
    size_t count;
    if (at_start) {
        candidates = {cur.pass1.in, cur.pass1.out, cur.pass2.in, cur.pass2.out};
        count = 4;
    } else {
        // polygonal turn: leave through the pass the arrival is not in
        auto nb = g.neighbors(arrival);
        candidates[0] = nb[0];
        candidates[1] = nb[1];
        count = 2;
    }
    for (size_t i = 0; i < count; ++i) {
        HalfEdge slot = candidates[i];
        if (slot.edge == 0 || slot.edge == g.edge_count() - 1) continue;
        HalfEdge far{slot.edge, slot.end == EdgeEnd::tail ? EdgeEnd::head
                                                          : EdgeEnd::tail};
        int next = g.vertex_of(far);
        if (next == cur.id || seen[static_cast<size_t>(next)]) continue;
        edges.push_back({slot.edge, slot.end == EdgeEnd::tail});
        verts.push_back(next);
        seen[static_cast<size_t>(next)] = 1;
        extend_path(g, edges, verts, seen, far, false, out);
        seen[static_cast<size_t>(next)] = 0;
        verts.pop_back();
        edges.pop_back();
    }
}

}  // namespace

std::vector<MiddlePath> enumerate_middle_paths(const AssemblyGraph& g) {
    const int n = g.vertex_count();
    std::vector<MiddlePath> out;
    if (n == 0) return out;
    if (n == 1) {
        out.push_back({{}, {1}});
        return out;
    }
    for (int v = 1; v <= n; ++v) {
        std::vector<DirectedEdge> edges;
        std::vector<int> verts{v};
        std::vector<char> seen(static_cast<size_t>(n) + 2, 0);
        seen[static_cast<size_t>(v)] = 1;
        extend_path(g, edges, verts, seen, HalfEdge{}, true, out);
    }
    // keep one representative per undirected path: the direction whose
    // start vertex the transversal reaches first
    std::erase_if(out, [&](const MiddlePath& p) {
        return g.first_visit(p.vertices.front()) >
               g.first_visit(p.vertices.back());
    });
    std::sort(out.begin(), out.end(), [](const MiddlePath& a, const MiddlePath& b) {
        return a.edge_indices() < b.edge_indices();
    });
    return out;
}

namespace {

std::pair<EndChoice, EndChoice> end_choices(const AssemblyGraph& g,
                                            const MiddlePath& path,
                                            bool at_finish) {
    if (path.edges.empty()) {
        // single-vertex path: the 1-labels attach to pass1, 2-labels to pass2
        const FourValentVertex& v = g.vertex(path.vertices.front());
        const Pass& pass = at_finish ? v.pass2 : v.pass1;
        return {{pass.in, EndLabel::A}, {pass.out, EndLabel::B}};
    }
    HalfEdge anchor = at_finish ? middle_slot(path.edges.back(), true)
                                : middle_slot(path.edges.front(), false);
    const FourValentVertex& v = g.vertex(g.vertex_of(anchor));
    const Pass& other = v.pass(g.pass_of(anchor) == 1 ? 2 : 1);
    return {{other.in, EndLabel::A}, {other.out, EndLabel::B}};
}

}  // namespace

std::vector<Hpp> enumerate_hpps(const AssemblyGraph& g) {
    std::vector<Hpp> out;
    for (const MiddlePath& path : enumerate_middle_paths(g)) {
        auto [start_a, start_b] = end_choices(g, path, false);
        auto [finish_a, finish_b] = end_choices(g, path, true);
        for (const EndChoice& s : {start_a, start_b}) {
            for (const EndChoice& f : {finish_a, finish_b}) {
                out.push_back({path.edges, path.vertices, s, f});
            }
        }
    }
    return out;
}

std::string hpp_name(const Hpp& hpp) {
    std::string name;
    if (hpp.middle.empty()) {
        name = "v" + std::to_string(hpp.vertex_order.front());
    } else {
        for (size_t i = 0; i < hpp.middle.size(); ++i) {
            if (i > 0) name += '.';
            name += "e" + std::to_string(hpp.middle[i].edge);
        }
    }
    name += "(1";
    name += to_char(hpp.start.label);
    name += ", 2";
    name += to_char(hpp.finish.label);
    name += ")";
    return name;
}

Hpp find_hpp(const AssemblyGraph& g, const std::string& name) {
    for (const Hpp& h : enumerate_hpps(g)) {
        if (hpp_name(h) == name) return h;
    }
    fail(ErrorCode::usage, "no HPP named '" + name + "' in graph " +
                               g.word().text());
}

}  // namespace mnseq
