#include "doctest.h"

#include <algorithm>
#include <set>

#include "mnseq/errors.hpp"
#include "mnseq/verify.hpp"
#include "mnseq/word.hpp"

using namespace mnseq;

TEST_SUITE_BEGIN("oracle");

namespace {

std::multiset<std::string> names_of(const std::vector<Hpp>& hpps) {
    std::multiset<std::string> out;
    for (const Hpp& h : hpps) out.insert(hpp_name(h));
    return out;
}

}  // namespace

TEST_CASE("oracle hpp counts on the reference graphs") {
    CHECK(oracle_enumerate_hpps(AssemblyGraph(Word::parse("1212"))).size() == 12);
    CHECK(oracle_enumerate_hpps(AssemblyGraph(Word::parse("1221"))).size() == 8);
    CHECK(oracle_enumerate_hpps(AssemblyGraph(Word::parse("1122"))).size() == 4);
    // the only middle path of 1122 is the bridging edge
    for (const Hpp& h :
         oracle_enumerate_hpps(AssemblyGraph(Word::parse("1122")))) {
        REQUIRE(h.middle.size() == 1);
        CHECK(h.middle.front().edge == 2);
    }
}

TEST_CASE("structured enumerator agrees with the half-edge oracle, n <= 4") {
    for (int n = 0; n <= 4; ++n) {
        for (const Word& w : enumerate_canonical_words(n)) {
            AssemblyGraph g(w);
            auto expected = names_of(oracle_enumerate_hpps(g));
            auto actual = names_of(enumerate_hpps(g));
            CHECK(expected == actual);
        }
    }
}

TEST_CASE("oracle refuses words beyond its budget") {
    std::vector<int> symbols;
    for (int s = 1; s <= 7; ++s) symbols.push_back(s);
    for (int s = 1; s <= 7; ++s) symbols.push_back(s);
    AssemblyGraph g(Word::from_symbols(symbols));
    CHECK_THROWS_AS(oracle_enumerate_hpps(g), Error);
    try {
        oracle_enumerate_hpps(g);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::budget_exceeded);
    }
}

TEST_CASE("strand tracer agrees with the segment-graph oracle, n <= 3") {
    for (int n = 1; n <= 3; ++n) {
        for (const Word& w : enumerate_canonical_words(n)) {
            AssemblyGraph g(w);
            for (const Hpp& h : enumerate_hpps(g)) {
                SegmentLayout layout = layout_segments(g, h);
                for (int v = 1; v <= n; ++v) {
                    SmoothingOutcome outcome = apply_smoothing(g, h, v);
                    auto oracle =
                        oracle_trace(g, layout, v, outcome.joints);
                    REQUIRE(oracle.size() == outcome.components.size());
                    for (size_t c = 0; c < oracle.size(); ++c) {
                        CHECK(oracle[c].cyclic == outcome.components[c].cyclic);
                        auto pieces =
                            strand_pieces(layout, outcome.components[c]);
                        if (!oracle[c].cyclic) {
                            CHECK(oracle[c].pieces == pieces);
                        } else {
                            // same cycle up to rotation
                            REQUIRE(oracle[c].pieces.size() == pieces.size());
                            auto doubled = oracle[c].pieces;
                            doubled.insert(doubled.end(),
                                           oracle[c].pieces.begin(),
                                           oracle[c].pieces.end());
                            CHECK(std::search(doubled.begin(), doubled.end(),
                                              pieces.begin(), pieces.end()) !=
                                  doubled.end());
                        }
                    }
                }
            }
        }
    }
}

TEST_SUITE_END();
