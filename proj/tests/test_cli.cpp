#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <string>

#include "json.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("MNSEQ_BIN");
    REQUIRE_MESSAGE(bin != nullptr,
                    "MNSEQ_BIN must point at the mnseq binary (set by ctest)");
    std::string cmd = "'" + std::string(bin) + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        result.out.append(buffer, got);
    }
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

size_t count_lines(const std::string& text) {
    size_t lines = 0;
    for (char c : text) {
        if (c == '\n') ++lines;
    }
    return lines;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("count prints the distinct totals") {
    auto r = run_cli("count 1212");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "24\n");
    CHECK(run_cli("count 1221").out == "16\n");
}

TEST_CASE("validate rejects bad words with exit 2") {
    CHECK(run_cli("validate 1212").exit_code == 0);
    auto bad = run_cli("validate 121");
    CHECK(bad.exit_code == 2);
    CHECK(run_cli("validate '1 0 1 0'").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("hpp lists every path by name") {
    auto r = run_cli("hpp 1212");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 12);
    CHECK(r.out.find("e2(1A, 2A)\n") != std::string::npos);
    CHECK(count_lines(run_cli("hpp 1221").out) == 8);
}

TEST_CASE("smooth prints the kind and merged sequence") {
    auto r = run_cli("smooth 1212 --hpp 'e2(1A, 2B)' --vertex 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "N\nI0 M1,2 I1 M3 I2\n");

    auto circles = run_cli("smooth 1221 --hpp 'e1(1A, 2B)' --vertex 2");
    CHECK(circles.out == "P\nI0 M2,3 I1 M1 I2 <I3>\n");
    auto dropped = run_cli(
        "smooth 1221 --hpp 'e1(1A, 2B)' --vertex 2 --drop-ies-circles");
    CHECK(dropped.out == "P\nI0 M2,3 I1 M1 I2\n");

    CHECK(run_cli("smooth 1212 --hpp 'e9(1A, 2A)' --vertex 1").exit_code == 2);
}

TEST_CASE("seq honors the orientation filter") {
    auto r = run_cli("seq 1212 --hpp 'e2(1A, 2A)' --orient g");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("gamma: I0 M1 I1 -M2 I2 -M3 I3") != std::string::npos);
    CHECK(r.out.find("gamma_r") == std::string::npos);
    auto all = run_cli("seq 1212 --hpp 'e2(1A, 2A)'");
    CHECK(all.out.find("gamma_minus_r") != std::string::npos);
}

TEST_CASE("json and text agree on the underlying values") {
    auto text = run_cli("smooth 1221 --hpp 'e3(1B, 2A)' --vertex 1");
    auto j = json::parse(run_cli(
                             "--format json smooth 1221 --hpp 'e3(1B, 2A)' "
                             "--vertex 1")
                             .out);
    CHECK(text.out == j["kind"].get<std::string>() + "\n" +
                          j["sequence"]["text"].get<std::string>() + "\n");
    CHECK(j["sequence"]["components"].size() == 2);
    CHECK(j["sequence"]["components"][1]["cyclic"] == true);
    // tokens carry signed part lists
    auto& first = j["sequence"]["components"][1]["tokens"][0];
    CHECK(first["type"] == "mds");
    CHECK(first["parts"] == json::array({-2, -1}));

    auto count_text = run_cli("count 1212");
    auto count_json = json::parse(run_cli("--format json count 1212").out);
    CHECK(count_json["distinct_count"] == 24);
    CHECK(count_text.out == "24\n");

    auto hpps = json::parse(run_cli("--format json hpp 1221").out);
    CHECK(hpps["hpps"].size() == 8);
    CHECK(hpps["n"] == 2);
}

TEST_CASE("smooth-all emits the full json schema") {
    auto j = json::parse(run_cli("--format json smooth-all 1221").out);
    CHECK(j["word"] == "1221");
    CHECK(j["n"] == 2);
    CHECK(j["distinct_count"] == 16);
    REQUIRE(j["hpps"].size() == 8);
    for (const auto& h : j["hpps"]) {
        CHECK(h.contains("name"));
        CHECK(h.contains("sequence"));
        CHECK(h["orientations"].contains("gamma_minus_r"));
        CHECK(h["smoothings"].size() == 2);
        for (const auto& s : h["smoothings"]) {
            CHECK((s["kind"] == "P" || s["kind"] == "N"));
            CHECK(s["sequence"].contains("components"));
        }
    }
}

TEST_CASE("graph --dot emits graphviz with the hpp overlay") {
    auto dot = run_cli("graph 1212 --dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.out.find("digraph") != std::string::npos);
    auto overlay = run_cli("graph 1212 --dot --hpp 'e2(1A, 2A)'");
    CHECK(overlay.out.find("style=dashed") != std::string::npos);
}

TEST_CASE("survey reports the census and rejects big budgets") {
    auto r = run_cli("survey --max-n 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("1212\t2\t12\tyes\t24") != std::string::npos);
    CHECK(r.out.find("1221\t2\t8\tyes\t16") != std::string::npos);
    CHECK(r.out.find("1122\t2\t4\tyes\t8") != std::string::npos);
    CHECK(run_cli("survey --max-n 7").exit_code == 2);
}

TEST_CASE("fixtures subcommand runs the golden suite") {
    auto r = run_cli("fixtures");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("unexpected:        0") != std::string::npos);
    auto j = json::parse(run_cli("--format json fixtures").out);
    CHECK(j["ok"] == true);
    CHECK(j["total"] == 90);
}

TEST_SUITE_END();
