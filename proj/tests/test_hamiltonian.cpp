#include "doctest.h"

#include <set>

#include "mnseq/dot.hpp"
#include "mnseq/errors.hpp"
#include "mnseq/hamiltonian.hpp"
#include "mnseq/word.hpp"

using namespace mnseq;

TEST_SUITE_BEGIN("hamiltonian");

namespace {

std::set<std::vector<int>> middle_edge_sets(const AssemblyGraph& g) {
    std::set<std::vector<int>> out;
    for (const MiddlePath& p : enumerate_middle_paths(g)) {
        out.insert(p.edge_indices());
    }
    return out;
}

}  // namespace

TEST_CASE("1212 has the three one-edge middle paths") {
    AssemblyGraph g(Word::parse("1212"));
    CHECK(middle_edge_sets(g) ==
          std::set<std::vector<int>>{{1}, {2}, {3}});
    for (const MiddlePath& p : enumerate_middle_paths(g)) {
        CHECK(p.vertices == std::vector<int>{1, 2});
    }
}

TEST_CASE("1221 excludes the loop from middle paths") {
    AssemblyGraph g(Word::parse("1221"));
    CHECK(middle_edge_sets(g) == std::set<std::vector<int>>{{1}, {3}});
}

TEST_CASE("single vertex yields the empty middle path") {
    AssemblyGraph g(Word::parse("11"));
    auto paths = enumerate_middle_paths(g);
    REQUIRE(paths.size() == 1);
    CHECK(paths.front().edges.empty());
    CHECK(paths.front().vertices == std::vector<int>{1});
    CHECK(enumerate_middle_paths(AssemblyGraph(Word::parse(""))).empty());
}

TEST_CASE("hpp counts are four per middle path") {
    CHECK(enumerate_hpps(AssemblyGraph(Word::parse("1212"))).size() == 12);
    CHECK(enumerate_hpps(AssemblyGraph(Word::parse("1221"))).size() == 8);
    CHECK(enumerate_hpps(AssemblyGraph(Word::parse("11"))).size() == 4);
    CHECK(enumerate_hpps(AssemblyGraph(Word::parse("1122"))).size() == 4);
}

TEST_CASE("names follow the middle-edge dot notation") {
    AssemblyGraph g(Word::parse("1212"));
    std::vector<std::string> names;
    for (const Hpp& h : enumerate_hpps(g)) names.push_back(hpp_name(h));
    CHECK(names == std::vector<std::string>{
                       "e1(1A, 2A)", "e1(1A, 2B)", "e1(1B, 2A)", "e1(1B, 2B)",
                       "e2(1A, 2A)", "e2(1A, 2B)", "e2(1B, 2A)", "e2(1B, 2B)",
                       "e3(1A, 2A)", "e3(1A, 2B)", "e3(1B, 2A)", "e3(1B, 2B)"});

    AssemblyGraph single(Word::parse("11"));
    std::vector<std::string> single_names;
    for (const Hpp& h : enumerate_hpps(single)) {
        single_names.push_back(hpp_name(h));
    }
    CHECK(single_names ==
          std::vector<std::string>{"v1(1A, 2A)", "v1(1A, 2B)", "v1(1B, 2A)",
                                   "v1(1B, 2B)"});
}

TEST_CASE("find_hpp resolves names and rejects unknown ones") {
    AssemblyGraph g(Word::parse("1221"));
    Hpp h = find_hpp(g, "e3(1B, 2B)");
    CHECK(hpp_name(h) == "e3(1B, 2B)");
    CHECK_THROWS_AS(find_hpp(g, "e2(1A, 2A)"), Error);
}

TEST_CASE("every enumerated hpp satisfies the path invariants") {
    for (int n = 0; n <= 4; ++n) {
        for (const Word& w : enumerate_canonical_words(n)) {
            AssemblyGraph g(w);
            auto hpps = enumerate_hpps(g);
            CHECK(hpps.size() % 4 == 0);
            CHECK(hpps.size() == 4 * enumerate_middle_paths(g).size());
            for (const Hpp& h : hpps) {
                // each 4-valent vertex exactly once
                std::set<int> seen(h.vertex_order.begin(), h.vertex_order.end());
                CHECK(static_cast<int>(seen.size()) == n);
                CHECK(h.vertex_order.size() == static_cast<size_t>(n));
                // consecutive middle edges switch passes at the shared vertex
                for (size_t k = 0; k + 1 < h.middle.size(); ++k) {
                    HalfEdge in = middle_slot(h.middle[k], true);
                    HalfEdge out = middle_slot(h.middle[k + 1], false);
                    CHECK(g.vertex_of(in) == g.vertex_of(out));
                    CHECK(g.pass_of(in) != g.pass_of(out));
                }
                // end segments are neighbors of the adjacent middle edge
                if (!h.middle.empty()) {
                    HalfEdge first = middle_slot(h.middle.front(), false);
                    CHECK(g.vertex_of(h.start.slot) == g.vertex_of(first));
                    CHECK(g.pass_of(h.start.slot) != g.pass_of(first));
                    HalfEdge last = middle_slot(h.middle.back(), true);
                    CHECK(g.vertex_of(h.finish.slot) == g.vertex_of(last));
                    CHECK(g.pass_of(h.finish.slot) != g.pass_of(last));
                } else if (n == 1) {
                    CHECK(g.pass_of(h.start.slot) == 1);
                    CHECK(g.pass_of(h.finish.slot) == 2);
                }
                // A means incoming, B outgoing
                CHECK((h.start.label == EndLabel::A) ==
                      g.incoming(h.start.slot));
                CHECK((h.finish.label == EndLabel::A) ==
                      g.incoming(h.finish.slot));
                // no full edge repeats
                std::set<int> edges;
                for (const DirectedEdge& e : h.middle) {
                    CHECK(edges.insert(e.edge).second);
                }
            }
        }
    }
}

TEST_CASE("dot overlay dashes the middle edge") {
    AssemblyGraph g(Word::parse("1212"));
    Hpp h = find_hpp(g, "e2(1A, 2A)");
    std::string dot = to_dot(g, &h);
    // exactly the full HPP edge is dashed
    size_t dashes = 0;
    for (size_t pos = 0; (pos = dot.find("style=dashed", pos)) != std::string::npos;
         ++pos) {
        ++dashes;
    }
    CHECK(dashes == 1);
    CHECK(dot.find("e2") != std::string::npos);
}

TEST_SUITE_END();
