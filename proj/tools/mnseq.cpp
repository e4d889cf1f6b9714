// mnseq: assembly graphs, Hamiltonian polygonal paths, micronuclear
// sequences and vertex smoothings from double-occurrence words.

#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mnseq/dot.hpp"
#include "mnseq/errors.hpp"
#include "mnseq/graph.hpp"
#include "mnseq/hamiltonian.hpp"
#include "mnseq/label.hpp"
#include "mnseq/seq.hpp"
#include "mnseq/smooth.hpp"
#include "mnseq/verify.hpp"
#include "mnseq/word.hpp"

using json = nlohmann::json;
using namespace mnseq;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;   // fixture or internal failure
constexpr int kExitBadInput = 2;  // invalid input or usage

const std::vector<std::string> kOrientationKeys = {"gamma", "gamma_r",
                                                   "gamma_minus",
                                                   "gamma_minus_r"};

struct Options {
    std::string format = "text";
    std::string word;
    std::string hpp_name;
    std::string orient = "all";
    bool dot = false;
    bool drop_ies_circles = false;
    int vertex = 0;
    int max_n = 4;
};

bool orientation_selected(const std::string& filter, size_t index) {
    if (filter == "all") return true;
    static const std::map<std::string, size_t> order = {
        {"g", 0}, {"gr", 1}, {"gm", 2}, {"gmr", 3}};
    return order.at(filter) == index;
}

json token_json(const Token& token, int ies_index) {
    if (is_ies(token)) {
        return json{{"type", "ies"}, {"index", ies_index}};
    }
    const MdsToken& mds = std::get<MdsToken>(token);
    MicronuclearSequence probe;
    probe.components.push_back({false, {token}});
    return json{{"type", "mds"},
                {"parts", mds.parts},
                {"text", render(probe)}};
}

json sequence_json(const MicronuclearSequence& seq) {
    json components = json::array();
    int ies_index = 0;
    for (const Component& comp : seq.components) {
        json tokens = json::array();
        for (const Token& t : comp.tokens) {
            tokens.push_back(token_json(t, is_ies(t) ? ies_index : 0));
            if (is_ies(t)) ++ies_index;
        }
        components.push_back(
            json{{"cyclic", comp.cyclic}, {"tokens", std::move(tokens)}});
    }
    return json{{"components", std::move(components)},
                {"text", render(seq)}};
}

json hpp_json(const AssemblyGraph& g, const Hpp& hpp, const Options& opts,
              bool with_orientations, bool with_smoothings) {
    json out;
    out["name"] = hpp_name(hpp);
    MicronuclearSequence gamma = micronuclear_sequence(g, hpp);
    out["sequence"] = sequence_json(gamma);
    if (with_orientations) {
        json orientations;
        auto closure = orientation_closure(gamma);
        for (size_t i = 0; i < closure.size(); ++i) {
            if (!orientation_selected(opts.orient, i)) continue;
            orientations[kOrientationKeys[i]] = sequence_json(closure[i]);
        }
        out["orientations"] = std::move(orientations);
    }
    if (with_smoothings) {
        json smoothings = json::array();
        for (int v = 1; v <= g.vertex_count(); ++v) {
            SmoothingOutcome outcome = apply_smoothing(g, hpp, v);
            MicronuclearSequence seq =
                opts.drop_ies_circles ? drop_pure_ies_circles(outcome.sequence)
                                      : outcome.sequence;
            smoothings.push_back(json{{"vertex", v},
                                      {"kind", std::string(1, to_char(outcome.kind))},
                                      {"sequence", sequence_json(seq)}});
        }
        out["smoothings"] = std::move(smoothings);
    }
    return out;
}

AssemblyGraph graph_for(const Options& opts) {
    return AssemblyGraph(Word::parse(opts.word));
}

std::vector<Hpp> selected_hpps(const AssemblyGraph& g, const Options& opts) {
    if (!opts.hpp_name.empty()) return {find_hpp(g, opts.hpp_name)};
    return enumerate_hpps(g);
}

int cmd_validate(const Options& opts) {
    Word w = Word::parse(opts.word);
    if (opts.format == "json") {
        std::cout << json{{"word", w.text()},
                          {"canonical", w.canonical().text()},
                          {"n", w.vertex_count()},
                          {"symbols", w.symbols()}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "valid double-occurrence word: " << w.text()
                  << " (n=" << w.vertex_count()
                  << ", canonical " << w.canonical().text() << ")\n";
    }
    return kExitOk;
}

int cmd_graph(const Options& opts) {
    AssemblyGraph g = graph_for(opts);
    if (opts.dot) {
        if (!opts.hpp_name.empty()) {
            Hpp hpp = find_hpp(g, opts.hpp_name);
            std::cout << to_dot(g, &hpp);
        } else {
            std::cout << to_dot(g);
        }
        return kExitOk;
    }
    if (opts.format == "json") {
        json vertices = json::array();
        for (int v = 1; v <= g.vertex_count(); ++v) {
            const FourValentVertex& fv = g.vertex(v);
            vertices.push_back(json{
                {"id", v},
                {"pass1", {{"in", to_string(fv.pass1.in)},
                           {"out", to_string(fv.pass1.out)}}},
                {"pass2", {{"in", to_string(fv.pass2.in)},
                           {"out", to_string(fv.pass2.out)}}}});
        }
        std::cout << json{{"word", g.word().text()},
                          {"n", g.vertex_count()},
                          {"edges", g.edge_count()},
                          {"vertices", std::move(vertices)}}
                         .dump(2)
                  << "\n";
        return kExitOk;
    }
    std::cout << "word " << g.word().text() << "  n=" << g.vertex_count()
              << "  edges=" << g.edge_count() << "\n";
    for (int v = 1; v <= g.vertex_count(); ++v) {
        const FourValentVertex& fv = g.vertex(v);
        std::cout << "v" << v << ": pass1(in=" << to_string(fv.pass1.in)
                  << ", out=" << to_string(fv.pass1.out)
                  << ")  pass2(in=" << to_string(fv.pass2.in)
                  << ", out=" << to_string(fv.pass2.out) << ")\n";
    }
    return kExitOk;
}

int cmd_hpp(const Options& opts) {
    AssemblyGraph g = graph_for(opts);
    std::vector<std::string> names;
    for (const Hpp& h : enumerate_hpps(g)) names.push_back(hpp_name(h));
    if (opts.format == "json") {
        std::cout << json{{"word", g.word().text()},
                          {"n", g.vertex_count()},
                          {"hpps", names}}
                         .dump(2)
                  << "\n";
    } else {
        for (const std::string& name : names) std::cout << name << "\n";
    }
    return kExitOk;
}

int cmd_seq(const Options& opts) {
    AssemblyGraph g = graph_for(opts);
    if (opts.format == "json") {
        json hpps = json::array();
        for (const Hpp& h : selected_hpps(g, opts)) {
            hpps.push_back(hpp_json(g, h, opts, true, false));
        }
        std::cout << json{{"word", g.word().text()},
                          {"n", g.vertex_count()},
                          {"hpps", std::move(hpps)},
                          {"distinct_count", distinct_count(g)}}
                         .dump(2)
                  << "\n";
        return kExitOk;
    }
    for (const Hpp& h : selected_hpps(g, opts)) {
        std::cout << hpp_name(h) << "\n";
        auto closure = orientation_closure(micronuclear_sequence(g, h));
        for (size_t i = 0; i < closure.size(); ++i) {
            if (!orientation_selected(opts.orient, i)) continue;
            std::cout << "  " << kOrientationKeys[i] << ": "
                      << render(closure[i]) << "\n";
        }
    }
    return kExitOk;
}

int cmd_count(const Options& opts) {
    AssemblyGraph g = graph_for(opts);
    if (opts.format == "json") {
        std::cout << json{{"word", g.word().text()},
                          {"n", g.vertex_count()},
                          {"distinct_count", distinct_count(g)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << distinct_count(g) << "\n";
    }
    return kExitOk;
}

int cmd_smooth(const Options& opts) {
    AssemblyGraph g = graph_for(opts);
    Hpp hpp = find_hpp(g, opts.hpp_name);
    SmoothingOutcome outcome = apply_smoothing(g, hpp, opts.vertex);
    MicronuclearSequence seq = opts.drop_ies_circles
                                   ? drop_pure_ies_circles(outcome.sequence)
                                   : outcome.sequence;
    if (opts.format == "json") {
        std::cout << json{{"word", g.word().text()},
                          {"hpp", hpp_name(hpp)},
                          {"vertex", opts.vertex},
                          {"kind", std::string(1, to_char(outcome.kind))},
                          {"sequence", sequence_json(seq)},
                          {"diagnostics", outcome.diagnostics}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << to_char(outcome.kind) << "\n" << render(seq) << "\n";
    }
    return kExitOk;
}

int cmd_smooth_all(const Options& opts) {
    AssemblyGraph g = graph_for(opts);
    if (opts.format == "json") {
        json hpps = json::array();
        for (const Hpp& h : enumerate_hpps(g)) {
            hpps.push_back(hpp_json(g, h, opts, true, true));
        }
        std::cout << json{{"word", g.word().text()},
                          {"n", g.vertex_count()},
                          {"hpps", std::move(hpps)},
                          {"distinct_count", distinct_count(g)}}
                         .dump(2)
                  << "\n";
        return kExitOk;
    }
    for (const Hpp& h : enumerate_hpps(g)) {
        for (int v = 1; v <= g.vertex_count(); ++v) {
            SmoothingOutcome outcome = apply_smoothing(g, h, v);
            MicronuclearSequence seq =
                opts.drop_ies_circles ? drop_pure_ies_circles(outcome.sequence)
                                      : outcome.sequence;
            std::cout << hpp_name(h) << "\tv" << v << "\t"
                      << to_char(outcome.kind) << "\t" << render(seq) << "\n";
        }
    }
    return kExitOk;
}

int cmd_survey(const Options& opts) {
    if (opts.max_n > 6) {
        fail(ErrorCode::budget_exceeded,
             "survey is limited to n <= 6 (middle-path search grows "
             "factorially), got --max-n " +
                 std::to_string(opts.max_n));
    }
    json words = json::array();
    bool text = opts.format != "json";
    if (text) {
        std::cout << "word\tn\thpps\trealizable\tdistinct\n";
    }
    int realizable_count = 0, total = 0;
    int min_distinct = -1, max_distinct = -1;
    bool all_at_least_eight = true;
    for (int n = 0; n <= opts.max_n; ++n) {
        for (const Word& w : enumerate_canonical_words(n)) {
            AssemblyGraph g(w);
            int hpps = static_cast<int>(enumerate_hpps(g).size());
            int distinct = distinct_count(g);
            bool realizable = hpps > 0;
            ++total;
            if (realizable) {
                ++realizable_count;
                if (min_distinct < 0 || distinct < min_distinct) {
                    min_distinct = distinct;
                }
                max_distinct = std::max(max_distinct, distinct);
                if (n >= 2 && distinct < 8) all_at_least_eight = false;
            }
            if (text) {
                std::cout << (w.empty() ? "(empty)" : w.text()) << "\t" << n
                          << "\t" << hpps << "\t" << (realizable ? "yes" : "no")
                          << "\t" << distinct << "\n";
            } else {
                words.push_back(json{{"word", w.text()},
                                     {"n", n},
                                     {"hpp_count", hpps},
                                     {"realizable", realizable},
                                     {"distinct_count", distinct}});
            }
        }
    }
    if (text) {
        std::cout << "words: " << total << "  realizable: " << realizable_count
                  << "  distinct min/max over realizable: " << min_distinct
                  << "/" << max_distinct << "\n"
                  << "every realizable word with n >= 2 has at least eight "
                     "distinct sequences: "
                  << (all_at_least_eight ? "yes" : "no") << "\n";
    } else {
        std::cout << json{{"max_n", opts.max_n},
                          {"words", std::move(words)},
                          {"realizable", realizable_count},
                          {"min_distinct", min_distinct},
                          {"max_distinct", max_distinct},
                          {"all_at_least_eight_for_n_ge_2", all_at_least_eight}}
                         .dump(2)
                  << "\n";
    }
    return kExitOk;
}

int cmd_fixtures(const Options& opts) {
    FixtureReport report = run_fixture_suite();
    if (opts.format == "json") {
        json unexpected = json::array();
        for (const FixtureResult& r : report.unexpected) {
            unexpected.push_back(json{{"word", r.fixture.word},
                                      {"row", r.fixture.row},
                                      {"hpp", r.fixture.hpp},
                                      {"kind", r.fixture.kind},
                                      {"expected", r.fixture.expected},
                                      {"actual", r.actual}});
        }
        std::cout << json{{"total", report.total()},
                          {"exact", report.exact},
                          {"cyclic_equivalent", report.cyclic_equivalent},
                          {"errata_confirmed", report.errata_confirmed},
                          {"unexpected", std::move(unexpected)},
                          {"ok", report.ok()}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << format_report(report);
    }
    return report.ok() ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "mnseq: rigid-vertex assembly graphs from double-occurrence words —\n"
        "Hamiltonian polygonal paths, MDS/IES micronuclear sequences, the\n"
        "four orientation classes, and P/N vertex smoothings."};
    app.require_subcommand(1);

    Options opts;
    app.add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    auto add_word = [&](CLI::App* cmd) {
        cmd->add_option("word", opts.word,
                        "Double-occurrence word, compact digits (\"1212\") or "
                        "comma/space separated tokens (\"10 3 10 3\")")
            ->required();
    };

    CLI::App* validate =
        app.add_subcommand("validate", "Validate a double-occurrence word");
    add_word(validate);

    CLI::App* graph = app.add_subcommand(
        "graph",
        "Print the assembly graph; --dot emits Graphviz text (transversal "
        "edges solid, full HPP edges style=dashed, segment labels in the "
        "edge label attribute)");
    add_word(graph);
    graph->add_flag("--dot", opts.dot, "Emit Graphviz DOT text");
    graph->add_option("--hpp", opts.hpp_name,
                      "Overlay this HPP (by name) in the DOT output");

    CLI::App* hpp =
        app.add_subcommand("hpp", "List Hamiltonian polygonal paths by name");
    add_word(hpp);

    CLI::App* seq = app.add_subcommand(
        "seq", "Micronuclear sequences for every HPP (or one via --hpp)");
    add_word(seq);
    seq->add_option("--hpp", opts.hpp_name, "Only this HPP (by name)");
    seq->add_option("--orient", opts.orient,
                    "Orientation filter: g, gr, gm, gmr or all")
        ->check(CLI::IsMember({"g", "gr", "gm", "gmr", "all"}))
        ->capture_default_str();

    CLI::App* count = app.add_subcommand(
        "count", "Number of distinct micronuclear sequences over all HPP "
                 "orientation classes");
    add_word(count);

    CLI::App* smooth =
        app.add_subcommand("smooth", "Smooth one vertex under one HPP");
    add_word(smooth);
    smooth->add_option("--hpp", opts.hpp_name, "HPP name, e.g. \"e2(1A, 2B)\"")
        ->required();
    smooth->add_option("--vertex", opts.vertex, "Vertex id to smooth")
        ->required();
    smooth->add_flag("--drop-ies-circles", opts.drop_ies_circles,
                     "Drop cyclic components that contain only an IES");

    CLI::App* smooth_all = app.add_subcommand(
        "smooth-all", "Smooth every vertex under every HPP");
    add_word(smooth_all);
    smooth_all->add_flag("--drop-ies-circles", opts.drop_ies_circles,
                         "Drop cyclic components that contain only an IES");

    CLI::App* survey = app.add_subcommand(
        "survey", "Census over all canonical words up to --max-n");
    survey->add_option("--max-n", opts.max_n, "Largest vertex count (<= 6)")
        ->capture_default_str();

    CLI::App* fixtures = app.add_subcommand(
        "fixtures", "Run the embedded golden-table suite with errata catalog");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (validate->parsed()) return cmd_validate(opts);
        if (graph->parsed()) return cmd_graph(opts);
        if (hpp->parsed()) return cmd_hpp(opts);
        if (seq->parsed()) return cmd_seq(opts);
        if (count->parsed()) return cmd_count(opts);
        if (smooth->parsed()) return cmd_smooth(opts);
        if (smooth_all->parsed()) return cmd_smooth_all(opts);
        if (survey->parsed()) return cmd_survey(opts);
        if (fixtures->parsed()) return cmd_fixtures(opts);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitOk;
}
