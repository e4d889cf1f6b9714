#pragma once

#include <array>
#include <string>
#include <vector>

#include "mnseq/graph.hpp"
#include "mnseq/hamiltonian.hpp"
#include "mnseq/label.hpp"
#include "mnseq/smooth.hpp"

namespace mnseq {

/// Brute-force HPP search over raw half-edge steps: every start slot, every
/// neighbor turn, vertex-once rule, A/B typing from slot roles. Exists to
/// cross-check enumerate_hpps; n <= 6 only.
std::vector<Hpp> oracle_enumerate_hpps(const AssemblyGraph& graph);

/// Strand extraction from an explicit segment-level adjacency map: every
/// segment is a node, straight-through crossings and joints are links.
/// Exists to cross-check trace_components + strand_pieces.
struct OracleStrand {
    bool cyclic = false;
    std::vector<Segment> pieces;
};
std::vector<OracleStrand> oracle_trace(const AssemblyGraph& graph,
                                       const SegmentLayout& layout, int vertex,
                                       const std::array<Joint, 2>& joints);

/// One golden-table row. Status records its relation to the printed
/// source row: exact, cyclic-equivalent (same content, cycles linearized
/// differently in print), or erratum (the printed value disagrees with the
/// mechanical trace; the catalog keeps the printed text).
struct Fixture {
    std::string word;
    int row = 0;             // printed row number, 0 for count rows
    std::string hpp;         // canonical HPP name, empty for count rows
    std::string kind;        // gamma | gamma_r | gamma_minus | gamma_minus_r
                             // | smoothing(v,K) | count
    std::string expected;    // canonical rendering / integer for count
    std::string status;      // exact | cyclic-equivalent | erratum
    std::string paper_text;  // printed value for errata rows
};

/// The embedded fixture table (tab-separated text, diffable).
const std::string& fixture_text();

std::vector<Fixture> load_fixtures();

struct FixtureResult {
    Fixture fixture;
    std::string actual;
    bool matched = false;
};

struct FixtureReport {
    int exact = 0;
    int cyclic_equivalent = 0;
    int errata_confirmed = 0;
    std::vector<FixtureResult> unexpected;

    int total() const {
        return exact + cyclic_equivalent + errata_confirmed +
               static_cast<int>(unexpected.size());
    }
    bool ok() const { return unexpected.empty(); }
};

/// Evaluates every fixture row against the implementation. Fails only on
/// an unexpected mismatch; catalogued errata count as confirmations.
FixtureReport run_fixture_suite();

std::string format_report(const FixtureReport& report);

}  // namespace mnseq
