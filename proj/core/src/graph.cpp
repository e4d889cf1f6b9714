#include "mnseq/graph.hpp"

#include "mnseq/errors.hpp"

namespace mnseq {

std::string to_string(HalfEdge h) {
    return "e" + std::to_string(h.edge) +
           (h.end == EdgeEnd::head ? ".head" : ".tail");
}

AssemblyGraph::AssemblyGraph(const Word& word) : word_(word.canonical()) {
    n_ = word_.vertex_count();
    station_.reserve(2 * static_cast<size_t>(n_) + 2);
    station_.push_back(0);
    for (int s : word_.symbols()) station_.push_back(s);
    station_.push_back(n_ + 1);

    vertices_.resize(static_cast<size_t>(n_));
    std::vector<int> visits(static_cast<size_t>(n_) + 1, 0);
    for (int s = 1; s <= 2 * n_; ++s) {
        int v = station_[static_cast<size_t>(s)];
        Pass pass{HalfEdge{s - 1, EdgeEnd::head}, HalfEdge{s, EdgeEnd::tail}};
        FourValentVertex& fv = vertices_[static_cast<size_t>(v) - 1];
        fv.id = v;
        if (++visits[static_cast<size_t>(v)] == 1) {
            fv.pass1 = pass;
        } else {
            fv.pass2 = pass;
        }
    }
}

int AssemblyGraph::tail_vertex(int edge) const {
    return station_[static_cast<size_t>(edge)];
}

int AssemblyGraph::head_vertex(int edge) const {
    return station_[static_cast<size_t>(edge) + 1];
}

int AssemblyGraph::vertex_of(HalfEdge h) const {
    return h.end == EdgeEnd::tail ? tail_vertex(h.edge) : head_vertex(h.edge);
}

const FourValentVertex& AssemblyGraph::vertex(int id) const {
    if (id < 1 || id > n_) {
        fail(ErrorCode::not_four_valent,
             "v" + std::to_string(id) + " is not a 4-valent vertex");
    }
    return vertices_[static_cast<size_t>(id) - 1];
}

int AssemblyGraph::first_visit(int id) const {
    for (int s = 1; s <= 2 * n_; ++s) {
        if (station_[static_cast<size_t>(s)] == id) return s;
    }
    fail(ErrorCode::not_four_valent,
         "v" + std::to_string(id) + " is not a 4-valent vertex");
}

bool AssemblyGraph::is_terminus(HalfEdge h) const {
    return (h.edge == 0 && h.end == EdgeEnd::tail) ||
           (h.edge == edge_count() - 1 && h.end == EdgeEnd::head);
}

const FourValentVertex& AssemblyGraph::vertex_of_slot(HalfEdge h) const {
    if (h.edge < 0 || h.edge >= edge_count() || is_terminus(h)) {
        fail(ErrorCode::not_four_valent,
             to_string(h) + " is not a slot of a 4-valent vertex");
    }
    return vertex(vertex_of(h));
}

int AssemblyGraph::pass_of(HalfEdge h) const {
    const FourValentVertex& fv = vertex_of_slot(h);
    if (h == fv.pass1.in || h == fv.pass1.out) return 1;
    return 2;
}

std::array<HalfEdge, 2> AssemblyGraph::neighbors(HalfEdge h) const {
    const FourValentVertex& fv = vertex_of_slot(h);
    const Pass& other = pass_of(h) == 1 ? fv.pass2 : fv.pass1;
    return {other.in, other.out};
}

HalfEdge AssemblyGraph::straight_partner(HalfEdge h) const {
    const FourValentVertex& fv = vertex_of_slot(h);
    const Pass& own = fv.pass(pass_of(h));
    return h == own.in ? own.out : own.in;
}

}  // namespace mnseq
