#pragma once

#include <string>
#include <variant>
#include <vector>

namespace mnseq {

class AssemblyGraph;

/// A (possibly composite) MDS token: signed gene indices in read order.
/// [+1,+2] prints M1,2; [-2,-1] prints -M2,1 and is read M̄2 then M̄1.
struct MdsToken {
    std::vector<int> parts;

    bool uniform_sign() const;
    MdsToken inverted() const;  // reverse the list, negate every sign

    friend bool operator==(const MdsToken&, const MdsToken&) = default;
};

/// IES token. The index is presentation-level numbering and is regenerated
/// on every render.
struct IesToken {
    int index = 0;

    friend bool operator==(const IesToken&, const IesToken&) = default;
};

using Token = std::variant<IesToken, MdsToken>;

bool is_ies(const Token& t);
bool is_mds(const Token& t);

/// One strand of a micronuclear sequence. Linear components begin and end
/// with IES tokens; cyclic components are stored in canonical rotation
/// (first token is the MDS token containing the smallest gene index, or the
/// single merged IES token of a pure-IES circle). Merges are already
/// applied: no two adjacent tokens of the same kind, cyclically for cycles.
struct Component {
    bool cyclic = false;
    std::vector<Token> tokens;

    friend bool operator==(const Component&, const Component&) = default;
};

struct MicronuclearSequence {
    int gene_count = 0;  // n of the originating graph; gene indices 1..n+1
    std::vector<Component> components;

    friend bool operator==(const MicronuclearSequence&,
                           const MicronuclearSequence&) = default;
};

/// Γ^R: opposite assembly-graph orientation, same HPP. Reverses the token
/// order and inverts every MDS token. Involution. Requires a single linear
/// component (the transform is defined pre-smoothing).
MicronuclearSequence reverse_complement(const MicronuclearSequence& seq);

/// Γ⁻: same graph orientation, opposite HPP orientation. Maps each signed
/// gene index s to -sign(s)·(n+2-|s|), token positions unchanged.
/// Involution. Requires singleton MDS tokens.
MicronuclearSequence reverse_hpp(const MicronuclearSequence& seq);

/// The four orientation classes of a Γ sequence, in the fixed order
/// [Γ, Γ^R, Γ⁻, Γ⁻ᴿ]. The two transforms commute.
std::vector<MicronuclearSequence> orientation_closure(
    const MicronuclearSequence& seq);

/// ASCII rendering. IES indices are regenerated 0.. in read order across
/// components; cyclic components are wrapped in '<' '>'. Mixed-sign MDS
/// tokens render as M(+i,-j,...) and append a warning when a sink is given.
std::string render(const MicronuclearSequence& seq,
                   std::vector<std::string>* warnings = nullptr);

/// Inverse of render. Re-canonicalizes cyclic rotations; rejects adjacent
/// same-kind tokens, gene indices outside 1..n+1, and linear components not
/// delimited by IES tokens. Errors carry the byte position.
MicronuclearSequence parse_sequence(const std::string& text, int n);

/// Drops cyclic components consisting of a single IES token. Presentation
/// helper; the default pipeline keeps them.
MicronuclearSequence drop_pure_ies_circles(const MicronuclearSequence& seq);

/// Rotates a cyclic component so the MDS token containing the smallest
/// gene index comes first. No-op on linear or pure-IES components.
void canonicalize_rotation(Component& comp);

/// Number of distinct canonical renderings over the orientation closures of
/// every HPP of the graph.
int distinct_count(const AssemblyGraph& graph);

}  // namespace mnseq
