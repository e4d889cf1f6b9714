#include "mnseq/verify.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "mnseq/errors.hpp"
#include "mnseq/seq.hpp"

namespace mnseq {

namespace {

struct OracleSearch {
    const AssemblyGraph& g;
    std::vector<Hpp> found;
    std::vector<DirectedEdge> middle;
    std::vector<int> order;
    std::vector<char> seen;

    void finish_here(HalfEdge start_slot, HalfEdge last_slot) {
        for (HalfEdge end_slot : g.neighbors(last_slot)) {
            Hpp hpp;
            hpp.middle = middle;
            hpp.vertex_order = order;
            hpp.start = {start_slot,
                         g.incoming(start_slot) ? EndLabel::A : EndLabel::B};
            hpp.finish = {end_slot,
                          g.incoming(end_slot) ? EndLabel::A : EndLabel::B};
            found.push_back(std::move(hpp));
        }
    }

    void step(HalfEdge start_slot, HalfEdge at_slot) {
        if (static_cast<int>(order.size()) == g.vertex_count()) {
            finish_here(start_slot, at_slot);
            return;
        }
        for (HalfEdge depart : g.neighbors(at_slot)) {
            if (depart.edge == 0 || depart.edge == g.edge_count() - 1) continue;
            HalfEdge far{depart.edge, depart.end == EdgeEnd::tail
                                          ? EdgeEnd::head
                                          : EdgeEnd::tail};
            int next = g.vertex_of(far);
            if (seen[static_cast<size_t>(next)]) continue;
            middle.push_back({depart.edge, depart.end == EdgeEnd::tail});
            order.push_back(next);
            seen[static_cast<size_t>(next)] = 1;
            step(start_slot, far);
            seen[static_cast<size_t>(next)] = 0;
            order.pop_back();
            middle.pop_back();
        }
    }
};

}  // namespace

std::vector<Hpp> oracle_enumerate_hpps(const AssemblyGraph& g) {
    const int n = g.vertex_count();
    if (n > 6) {
        fail(ErrorCode::budget_exceeded,
             "oracle search is limited to n <= 6, got n = " + std::to_string(n));
    }
    std::vector<Hpp> out;
    if (n == 0) return out;
    for (int v = 1; v <= n; ++v) {
        const FourValentVertex& fv = g.vertex(v);
        for (HalfEdge start_slot :
             {fv.pass1.in, fv.pass1.out, fv.pass2.in, fv.pass2.out}) {
            if (n == 1 && g.pass_of(start_slot) != 1) continue;
            OracleSearch search{g, {}, {}, {v},
                                std::vector<char>(static_cast<size_t>(n) + 2, 0)};
            search.seen[static_cast<size_t>(v)] = 1;
            search.step(start_slot, start_slot);
            for (Hpp& h : search.found) out.push_back(std::move(h));
        }
    }
    // one representative per walk direction
    std::erase_if(out, [&](const Hpp& h) {
        return h.vertex_order.size() > 1 &&
               g.first_visit(h.vertex_order.front()) >
                   g.first_visit(h.vertex_order.back());
    });
    return out;
}

namespace {

struct SegId {
    int edge = 0;
    int index = 0;

    friend auto operator<=>(const SegId&, const SegId&) = default;
};

struct Port {
    SegId seg;
    bool left = true;  // left = tail-side end of the segment

    friend auto operator<=>(const Port&, const Port&) = default;
};

}  // namespace

std::vector<OracleStrand> oracle_trace(const AssemblyGraph& graph,
                                       const SegmentLayout& layout, int vertex,
                                       const std::array<Joint, 2>& joints) {
    std::map<Port, Port> links;
    auto link = [&](Port a, Port b) {
        links[a] = b;
        links[b] = a;
    };
    auto seg_count = [&](int e) {
        return static_cast<int>(layout.edges[static_cast<size_t>(e)].size());
    };
    auto slot_port = [&](HalfEdge h) {
        if (h.end == EdgeEnd::tail) return Port{{h.edge, 0}, true};
        return Port{{h.edge, seg_count(h.edge) - 1}, false};
    };

    for (int e = 0; e < graph.edge_count(); ++e) {
        for (int k = 0; k + 1 < seg_count(e); ++k) {
            link(Port{{e, k}, false}, Port{{e, k + 1}, true});
        }
    }
    for (int v = 1; v <= graph.vertex_count(); ++v) {
        if (v == vertex) continue;
        const FourValentVertex& fv = graph.vertex(v);
        for (const Pass* pass : {&fv.pass1, &fv.pass2}) {
            link(slot_port(pass->in), slot_port(pass->out));
        }
    }
    for (const Joint& j : joints) {
        link(slot_port(j.a), slot_port(j.b));
    }

    std::map<SegId, char> visited;
    auto read = [&](Port entry, bool cyclic) {
        OracleStrand strand;
        strand.cyclic = cyclic;
        Port at = entry;
        while (true) {
            visited[at.seg] = 1;
            Segment piece =
                layout.edges[static_cast<size_t>(at.seg.edge)]
                            [static_cast<size_t>(at.seg.index)];
            if (!at.left && !piece.ies) piece.inverted = !piece.inverted;
            strand.pieces.push_back(piece);
            Port exit{at.seg, !at.left};
            auto next = links.find(exit);
            if (next == links.end()) break;
            at = next->second;
            if (cyclic && at == entry) break;
        }
        return strand;
    };

    std::vector<OracleStrand> out;
    out.push_back(read(Port{{0, 0}, true}, false));
    for (int e = 0; e < graph.edge_count(); ++e) {
        for (int k = 0; k < seg_count(e); ++k) {
            if (!visited.count(SegId{e, k})) {
                out.push_back(read(Port{{e, k}, true}, true));
            }
        }
    }
    return out;
}

namespace {

std::optional<SmoothKind> parse_smoothing_kind(const std::string& kind,
                                               int* vertex) {
    // kind field: smoothing(<vertex>,<P|N>)
    if (kind.rfind("smoothing(", 0) != 0 || kind.back() != ')') {
        return std::nullopt;
    }
    std::string inner = kind.substr(10, kind.size() - 11);
    auto comma = inner.find(',');
    if (comma == std::string::npos) return std::nullopt;
    *vertex = std::stoi(inner.substr(0, comma));
    return inner[comma + 1] == 'P' ? SmoothKind::P : SmoothKind::N;
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (char c : line) {
        if (c == '\t') {
            fields.push_back(field);
            field.clear();
        } else {
            field.push_back(c);
        }
    }
    fields.push_back(field);
    return fields;
}

}  // namespace

std::vector<Fixture> load_fixtures() {
    std::vector<Fixture> out;
    std::istringstream in(fixture_text());
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields = split_tabs(line);
        if (fields.size() != 5) {
            fail(ErrorCode::parse_error,
                 "fixture line needs 5 tab-separated fields: " + line);
        }
        Fixture f;
        f.word = fields[0];
        if (fields[1] != "-") {
            auto space = fields[1].find(' ');
            f.row = std::stoi(fields[1].substr(0, space));
            f.hpp = fields[1].substr(space + 1);
        }
        f.kind = fields[2];
        f.expected = fields[3];
        const std::string& status = fields[4];
        if (status.rfind("erratum(", 0) == 0 && status.back() == ')') {
            f.status = "erratum";
            f.paper_text = status.substr(8, status.size() - 9);
        } else {
            f.status = status;
        }
        out.push_back(std::move(f));
    }
    return out;
}

FixtureReport run_fixture_suite() {
    FixtureReport report;
    std::map<std::string, AssemblyGraph> graphs;
    auto graph_for = [&](const std::string& word) -> const AssemblyGraph& {
        auto it = graphs.find(word);
        if (it == graphs.end()) {
            it = graphs.emplace(word, AssemblyGraph(Word::parse(word))).first;
        }
        return it->second;
    };

    for (const Fixture& f : load_fixtures()) {
        const AssemblyGraph& g = graph_for(f.word);
        std::string actual;
        if (f.kind == "count") {
            actual = std::to_string(distinct_count(g));
        } else {
            const Hpp hpp = find_hpp(g, f.hpp);
            const MicronuclearSequence gamma = micronuclear_sequence(g, hpp);
            int vertex = 0;
            if (f.kind == "gamma") {
                actual = render(gamma);
            } else if (f.kind == "gamma_r") {
                actual = render(reverse_complement(gamma));
            } else if (f.kind == "gamma_minus") {
                actual = render(reverse_hpp(gamma));
            } else if (f.kind == "gamma_minus_r") {
                actual = render(reverse_complement(reverse_hpp(gamma)));
            } else if (auto kind = parse_smoothing_kind(f.kind, &vertex)) {
                SmoothingOutcome outcome = apply_smoothing(g, hpp, vertex);
                actual = render(outcome.sequence);
                if (outcome.kind != *kind) {
                    actual = std::string("kind ") + to_char(outcome.kind) +
                             ": " + actual;
                }
            } else {
                fail(ErrorCode::parse_error, "unknown fixture kind " + f.kind);
            }
        }
        FixtureResult result{f, actual, actual == f.expected};
        if (!result.matched) {
            report.unexpected.push_back(std::move(result));
        } else if (f.status == "exact") {
            ++report.exact;
        } else if (f.status == "cyclic-equivalent") {
            ++report.cyclic_equivalent;
        } else {
            ++report.errata_confirmed;
        }
    }
    return report;
}

std::string format_report(const FixtureReport& report) {
    std::ostringstream out;
    out << "fixture rows:        " << report.total() << "\n"
        << "  exact:             " << report.exact << "\n"
        << "  cyclic-equivalent: " << report.cyclic_equivalent << "\n"
        << "  errata-confirmed:  " << report.errata_confirmed << "\n"
        << "  unexpected:        " << report.unexpected.size() << "\n";
    for (const FixtureResult& r : report.unexpected) {
        out << "MISMATCH " << r.fixture.word << " row " << r.fixture.row << " "
            << r.fixture.hpp << " " << r.fixture.kind << "\n"
            << "  expected: " << r.fixture.expected << "\n"
            << "  actual:   " << r.actual << "\n";
    }
    out << (report.ok() ? "ok" : "FAILED") << "\n";
    return out.str();
}

}  // namespace mnseq
