#include "mnseq/word.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "mnseq/errors.hpp"

namespace mnseq {

namespace {

void check_double_occurrence(const std::vector<int>& symbols) {
    std::map<int, int> counts;
    for (int s : symbols) {
        ++counts[s];
    }
    for (const auto& [symbol, count] : counts) {
        if (count != 2) {
            fail(ErrorCode::not_double_occurrence,
                 "symbol " + std::to_string(symbol) + " occurs " +
                     std::to_string(count) + " time(s), expected exactly 2");
        }
    }
}

}  // namespace

Word Word::from_symbols(std::vector<int> symbols) {
    for (int s : symbols) {
        if (s <= 0) {
            fail(ErrorCode::malformed_token,
                 "symbols must be positive integers, got " + std::to_string(s));
        }
    }
    check_double_occurrence(symbols);
    Word w;
    w.symbols_ = std::move(symbols);
    w.n_ = static_cast<int>(w.symbols_.size()) / 2;
    return w;
}

Word Word::parse(const std::string& text) {
    std::vector<int> symbols;
    const bool compact =
        !text.empty() &&
        std::all_of(text.begin(), text.end(),
                    [](unsigned char c) { return std::isdigit(c); });
    if (compact) {
        for (char c : text) {
            if (c == '0') {
                fail(ErrorCode::malformed_token,
                     "digit 0 is not a valid symbol in compact form");
            }
            symbols.push_back(c - '0');
        }
        return from_symbols(std::move(symbols));
    }
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        for (char c : token) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                fail(ErrorCode::malformed_token,
                     "token '" + token + "' is not a positive integer");
            }
        }
        long value = std::stol(token);
        if (value <= 0) {
            fail(ErrorCode::malformed_token,
                 "token '" + token + "' is not a positive integer");
        }
        symbols.push_back(static_cast<int>(value));
        token.clear();
    };
    for (char c : text) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            flush();
        } else {
            token.push_back(c);
        }
    }
    flush();
    return from_symbols(std::move(symbols));
}

Word Word::canonical() const {
    std::map<int, int> rename;
    std::vector<int> out;
    out.reserve(symbols_.size());
    int next = 1;
    for (int s : symbols_) {
        auto it = rename.find(s);
        if (it == rename.end()) {
            it = rename.emplace(s, next++).first;
        }
        out.push_back(it->second);
    }
    return from_symbols(std::move(out));
}

bool Word::is_canonical() const { return *this == canonical(); }

std::string Word::text() const {
    if (symbols_.empty()) return "";
    const bool compact = std::all_of(symbols_.begin(), symbols_.end(),
                                     [](int s) { return s <= 9; });
    std::string out;
    for (size_t i = 0; i < symbols_.size(); ++i) {
        if (!compact && i > 0) out += ' ';
        out += std::to_string(symbols_[i]);
    }
    return out;
}

namespace {

void fill_canonical(std::vector<int>& slots, int next_symbol,
                    std::vector<Word>& out) {
    auto it = std::find(slots.begin(), slots.end(), 0);
    if (it == slots.end()) {
        out.push_back(Word::from_symbols(slots));
        return;
    }
    size_t i = static_cast<size_t>(it - slots.begin());
    slots[i] = next_symbol;
    for (size_t j = i + 1; j < slots.size(); ++j) {
        if (slots[j] != 0) continue;
        slots[j] = next_symbol;
        fill_canonical(slots, next_symbol + 1, out);
        slots[j] = 0;
    }
    slots[i] = 0;
}

}  // namespace

std::vector<Word> enumerate_canonical_words(int n) {
    std::vector<Word> out;
    if (n < 0) return out;
    if (n == 0) {
        out.push_back(Word());
        return out;
    }
    std::vector<int> slots(2 * static_cast<size_t>(n), 0);
    fill_canonical(slots, 1, out);
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        return a.symbols() < b.symbols();
    });
    return out;
}

}  // namespace mnseq
