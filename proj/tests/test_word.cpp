#include "doctest.h"

#include <random>

#include "mnseq/errors.hpp"
#include "mnseq/word.hpp"

using namespace mnseq;

TEST_SUITE_BEGIN("word");

TEST_CASE("compact digit parsing") {
    Word w = Word::parse("1212");
    CHECK(w.symbols() == std::vector<int>{1, 2, 1, 2});
    CHECK(w.vertex_count() == 2);
}

TEST_CASE("token parsing keeps large labels") {
    Word w = Word::parse("10 3 10 3");
    CHECK(w.symbols() == std::vector<int>{10, 3, 10, 3});
    CHECK(w.vertex_count() == 2);
    CHECK(Word::parse("10,3,10,3").symbols() == w.symbols());
}

TEST_CASE("single occurrence is rejected") {
    CHECK_THROWS_AS(Word::parse("121"), Error);
    try {
        Word::parse("121");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::not_double_occurrence);
    }
}

TEST_CASE("empty input is the empty word") {
    Word w = Word::parse("");
    CHECK(w.vertex_count() == 0);
    CHECK(w.empty());
    CHECK(w.text() == "");
}

TEST_CASE("compact form never reads multi-digit symbols") {
    // "10" is two compact digits, and 0 is not a symbol
    CHECK_THROWS_AS(Word::parse("102102"), Error);
    try {
        Word::parse("102102");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::malformed_token);
    }
    CHECK_THROWS_AS(Word::parse("1a"), Error);
    CHECK_THROWS_AS(Word::parse("1 -1 1 -1"), Error);
}

TEST_CASE("canonicalize relabels by first occurrence") {
    CHECK(Word::parse("2121").canonical().symbols() ==
          std::vector<int>{1, 2, 1, 2});
    CHECK(Word::parse("1212").canonical().symbols() ==
          std::vector<int>{1, 2, 1, 2});
    CHECK(Word::parse("10 3 10 3").canonical().text() == "1212");
}

TEST_CASE("canonicalize is idempotent and keeps the occurrence pattern") {
    std::mt19937 rng(20240801);
    for (int trial = 0; trial < 200; ++trial) {
        int n = static_cast<int>(rng() % 5);
        std::vector<int> symbols;
        for (int s = 0; s < n; ++s) {
            symbols.push_back(7 * s + 3);
            symbols.push_back(7 * s + 3);
        }
        std::shuffle(symbols.begin(), symbols.end(), rng);
        Word w = Word::from_symbols(symbols);
        Word c = w.canonical();
        CHECK(c.canonical() == c);
        REQUIRE(c.symbols().size() == symbols.size());
        for (size_t i = 0; i < symbols.size(); ++i) {
            for (size_t j = 0; j < symbols.size(); ++j) {
                CHECK((symbols[i] == symbols[j]) ==
                      (c.symbols()[i] == c.symbols()[j]));
            }
        }
    }
}

TEST_CASE("parse round-trips render") {
    for (const char* text : {"1212", "1221", "1122", "11", "123123"}) {
        CHECK(Word::parse(text).text() == text);
        CHECK(Word::parse(Word::parse(text).text()) == Word::parse(text));
    }
    Word big = Word::from_symbols({12, 4, 12, 4});
    CHECK(Word::parse(big.text()) == big);
}

TEST_CASE("canonical word census sizes are the double factorials") {
    CHECK(enumerate_canonical_words(0).size() == 1);
    CHECK(enumerate_canonical_words(1).size() == 1);
    CHECK(enumerate_canonical_words(2).size() == 3);
    CHECK(enumerate_canonical_words(3).size() == 15);
    CHECK(enumerate_canonical_words(4).size() == 105);
    for (const Word& w : enumerate_canonical_words(3)) {
        CHECK(w.is_canonical());
    }
}

TEST_SUITE_END();
