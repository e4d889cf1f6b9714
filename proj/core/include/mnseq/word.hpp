#pragma once

#include <string>
#include <vector>

namespace mnseq {

/// A double-occurrence word over positive integer symbols. Every distinct
/// symbol occurs exactly twice; each symbol names one 4-valent vertex of the
/// assembly graph it defines. The empty word is allowed and yields the
/// trivial graph with a single free edge.
class Word {
public:
    Word() = default;

    /// Accepts either a compact digit string ("1212", valid only when every
    /// symbol is a single digit) or whitespace/comma separated integer
    /// tokens ("10 3 10 3"). Symbols are kept in the order given.
    static Word parse(const std::string& text);

    /// Validates the double-occurrence property of an explicit symbol list.
    static Word from_symbols(std::vector<int> symbols);

    /// Relabels symbols 1..n by order of first occurrence. Idempotent.
    Word canonical() const;

    bool is_canonical() const;

    const std::vector<int>& symbols() const { return symbols_; }

    /// Number of distinct symbols (4-valent vertices).
    int vertex_count() const { return n_; }

    bool empty() const { return symbols_.empty(); }

    /// Inverse of parse: compact digits when every symbol fits one digit,
    /// space-separated tokens otherwise.
    std::string text() const;

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<int> symbols_;
    int n_ = 0;
};

/// All canonical double-occurrence words with exactly n symbols, sorted
/// lexicographically. There are (2n-1)!! of them; intended for n <= 6.
std::vector<Word> enumerate_canonical_words(int n);

}  // namespace mnseq
