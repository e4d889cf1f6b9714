#include "mnseq/seq.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>

#include "mnseq/errors.hpp"
#include "mnseq/graph.hpp"
#include "mnseq/hamiltonian.hpp"
#include "mnseq/label.hpp"

namespace mnseq {

bool MdsToken::uniform_sign() const {
    return std::all_of(parts.begin(), parts.end(), [](int p) { return p > 0; }) ||
           std::all_of(parts.begin(), parts.end(), [](int p) { return p < 0; });
}

MdsToken MdsToken::inverted() const {
    MdsToken out;
    out.parts.reserve(parts.size());
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        out.parts.push_back(-*it);
    }
    return out;
}

bool is_ies(const Token& t) { return std::holds_alternative<IesToken>(t); }
bool is_mds(const Token& t) { return std::holds_alternative<MdsToken>(t); }

namespace {

const Component& single_linear(const MicronuclearSequence& seq,
                               const char* op) {
    if (seq.components.size() != 1 || seq.components.front().cyclic) {
        fail(ErrorCode::multi_component,
             std::string(op) + " is defined on single linear components only");
    }
    return seq.components.front();
}

void renumber_ies(MicronuclearSequence& seq) {
    int next = 0;
    for (Component& comp : seq.components) {
        for (Token& t : comp.tokens) {
            if (auto* ies = std::get_if<IesToken>(&t)) ies->index = next++;
        }
    }
}

}  // namespace

MicronuclearSequence reverse_complement(const MicronuclearSequence& seq) {
    const Component& comp = single_linear(seq, "reverse_complement");
    MicronuclearSequence out;
    out.gene_count = seq.gene_count;
    Component rev;
    rev.tokens.reserve(comp.tokens.size());
    for (auto it = comp.tokens.rbegin(); it != comp.tokens.rend(); ++it) {
        if (const auto* mds = std::get_if<MdsToken>(&*it)) {
            rev.tokens.emplace_back(mds->inverted());
        } else {
            rev.tokens.emplace_back(IesToken{});
        }
    }
    out.components.push_back(std::move(rev));
    renumber_ies(out);
    return out;
}

MicronuclearSequence reverse_hpp(const MicronuclearSequence& seq) {
    const Component& comp = single_linear(seq, "reverse_hpp");
    const int top = seq.gene_count + 2;
    MicronuclearSequence out;
    out.gene_count = seq.gene_count;
    Component mapped;
    mapped.tokens.reserve(comp.tokens.size());
    for (const Token& t : comp.tokens) {
        if (const auto* mds = std::get_if<MdsToken>(&t)) {
            if (mds->parts.size() != 1) {
                fail(ErrorCode::composite_token,
                     "reverse_hpp is defined on singleton MDS tokens only");
            }
            int s = mds->parts.front();
            int image = top - std::abs(s);
            mapped.tokens.emplace_back(MdsToken{{s > 0 ? -image : image}});
        } else {
            mapped.tokens.push_back(t);
        }
    }
    out.components.push_back(std::move(mapped));
    renumber_ies(out);
    return out;
}

std::vector<MicronuclearSequence> orientation_closure(
    const MicronuclearSequence& seq) {
    MicronuclearSequence minus = reverse_hpp(seq);
    return {seq, reverse_complement(seq), minus, reverse_complement(minus)};
}

std::string render(const MicronuclearSequence& seq,
                   std::vector<std::string>* warnings) {
    std::string out;
    int ies_index = 0;
    for (size_t c = 0; c < seq.components.size(); ++c) {
        const Component& comp = seq.components[c];
        if (c > 0) out += ' ';
        if (comp.cyclic) out += '<';
        for (size_t i = 0; i < comp.tokens.size(); ++i) {
            if (i > 0) out += ' ';
            const Token& t = comp.tokens[i];
            if (is_ies(t)) {
                out += "I" + std::to_string(ies_index++);
                continue;
            }
            const MdsToken& mds = std::get<MdsToken>(t);
            if (mds.uniform_sign()) {
                if (mds.parts.front() < 0) out += '-';
                out += 'M';
                for (size_t p = 0; p < mds.parts.size(); ++p) {
                    if (p > 0) out += ',';
                    out += std::to_string(std::abs(mds.parts[p]));
                }
            } else {
                out += "M(";
                for (size_t p = 0; p < mds.parts.size(); ++p) {
                    if (p > 0) out += ',';
                    if (mds.parts[p] > 0) out += '+';
                    out += std::to_string(mds.parts[p]);
                }
                out += ')';
                if (warnings) {
                    warnings->push_back("mixed-sign MDS token rendered as " +
                                        out.substr(out.rfind("M(")));
                }
            }
        }
        if (comp.cyclic) out += '>';
    }
    return out;
}

namespace {

struct SequenceParser {
    const std::string& text;
    int n;
    size_t pos = 0;

    [[noreturn]] void error(const std::string& message, size_t at) {
        fail(ErrorCode::parse_error,
             message + " at position " + std::to_string(at));
    }

    void skip_space() {
        while (pos < text.size() &&
               std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    }

    int read_int(bool allow_sign) {
        size_t start = pos;
        if (allow_sign && pos < text.size() &&
            (text[pos] == '+' || text[pos] == '-')) {
            ++pos;
        }
        size_t digits = pos;
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        if (pos == digits) error("expected an integer", start);
        return std::atoi(text.substr(start, pos - start).c_str());
    }

    void check_gene(int part, size_t at) {
        int g = std::abs(part);
        if (g < 1 || g > n + 1) {
            error("gene index " + std::to_string(g) + " outside 1.." +
                      std::to_string(n + 1),
                  at);
        }
    }

    Token read_token() {
        size_t start = pos;
        bool negated = false;
        if (text[pos] == '-') {
            negated = true;
            ++pos;
        }
        if (pos >= text.size()) error("dangling '-'", start);
        if (text[pos] == 'I') {
            if (negated) error("IES tokens cannot be negated", start);
            ++pos;
            int idx = read_int(false);
            if (idx < 0) error("negative IES index", start);
            return IesToken{idx};
        }
        if (text[pos] != 'M') error("expected token", start);
        ++pos;
        MdsToken mds;
        if (!negated && pos < text.size() && text[pos] == '(') {
            ++pos;
            while (true) {
                size_t at = pos;
                int part = read_int(true);
                if (part == 0) error("gene index 0", at);
                check_gene(part, at);
                mds.parts.push_back(part);
                if (pos < text.size() && text[pos] == ',') {
                    ++pos;
                    continue;
                }
                break;
            }
            if (pos >= text.size() || text[pos] != ')') {
                error("expected ')'", pos);
            }
            ++pos;
        } else {
            while (true) {
                size_t at = pos;
                int g = read_int(false);
                if (g == 0) error("gene index 0", at);
                check_gene(g, at);
                mds.parts.push_back(negated ? -g : g);
                if (pos < text.size() && text[pos] == ',' && pos + 1 < text.size() &&
                    std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
                    ++pos;
                    continue;
                }
                break;
            }
        }
        std::set<int> seen;
        for (int p : mds.parts) {
            if (!seen.insert(std::abs(p)).second) {
                error("repeated gene index within one MDS token", start);
            }
        }
        return mds;
    }
};

void validate_component(const Component& comp, int n, size_t at) {
    (void)n;
    if (comp.tokens.empty()) {
        fail(ErrorCode::parse_error,
             "empty component at position " + std::to_string(at));
    }
    const size_t count = comp.tokens.size();
    for (size_t i = 0; i < count; ++i) {
        size_t j = (i + 1) % count;
        if (!comp.cyclic && j == 0) break;
        if (is_ies(comp.tokens[i]) == is_ies(comp.tokens[j]) &&
            !(comp.cyclic && count == 1)) {
            fail(ErrorCode::parse_error,
                 "adjacent tokens of the same kind at position " +
                     std::to_string(at));
        }
    }
    if (!comp.cyclic &&
        (!is_ies(comp.tokens.front()) || !is_ies(comp.tokens.back()))) {
        fail(ErrorCode::parse_error,
             "linear component must start and end with IES at position " +
                 std::to_string(at));
    }
}

}  // namespace

void canonicalize_rotation(Component& comp) {
    if (!comp.cyclic || comp.tokens.empty()) return;
    size_t best = comp.tokens.size();
    int best_gene = 0;
    for (size_t i = 0; i < comp.tokens.size(); ++i) {
        if (const auto* mds = std::get_if<MdsToken>(&comp.tokens[i])) {
            int smallest = std::abs(mds->parts.front());
            for (int p : mds->parts) smallest = std::min(smallest, std::abs(p));
            if (best == comp.tokens.size() || smallest < best_gene) {
                best = i;
                best_gene = smallest;
            }
        }
    }
    if (best == comp.tokens.size() || best == 0) return;  // pure IES or done
    std::rotate(comp.tokens.begin(),
                comp.tokens.begin() + static_cast<long>(best),
                comp.tokens.end());
}

MicronuclearSequence parse_sequence(const std::string& text, int n) {
    SequenceParser parser{text, n};
    MicronuclearSequence out;
    out.gene_count = n;
    Component current;
    bool in_cycle = false;
    size_t comp_start = 0;
    auto close_component = [&](size_t at) {
        if (current.tokens.empty() && !current.cyclic) return;
        validate_component(current, n, comp_start);
        canonicalize_rotation(current);
        out.components.push_back(std::move(current));
        current = Component{};
    };
    parser.skip_space();
    while (parser.pos < text.size()) {
        char c = text[parser.pos];
        if (c == '<') {
            if (in_cycle) parser.error("nested '<'", parser.pos);
            close_component(parser.pos);
            in_cycle = true;
            current.cyclic = true;
            comp_start = parser.pos;
            ++parser.pos;
        } else if (c == '>') {
            if (!in_cycle) parser.error("unmatched '>'", parser.pos);
            ++parser.pos;
            in_cycle = false;
            close_component(parser.pos);
        } else {
            if (current.tokens.empty() && !in_cycle) comp_start = parser.pos;
            current.tokens.push_back(parser.read_token());
        }
        parser.skip_space();
    }
    if (in_cycle) parser.error("missing '>'", text.size());
    close_component(text.size());
    return out;
}

MicronuclearSequence drop_pure_ies_circles(const MicronuclearSequence& seq) {
    MicronuclearSequence out;
    out.gene_count = seq.gene_count;
    for (const Component& comp : seq.components) {
        bool pure_ies_circle =
            comp.cyclic && std::all_of(comp.tokens.begin(), comp.tokens.end(),
                                       [](const Token& t) { return is_ies(t); });
        if (!pure_ies_circle) out.components.push_back(comp);
    }
    return out;
}

int distinct_count(const AssemblyGraph& graph) {
    std::set<std::string> seen;
    for (const Hpp& hpp : enumerate_hpps(graph)) {
        for (const MicronuclearSequence& variant :
             orientation_closure(micronuclear_sequence(graph, hpp))) {
            seen.insert(render(variant));
        }
    }
    return static_cast<int>(seen.size());
}

}  // namespace mnseq
