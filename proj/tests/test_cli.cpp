#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include <sys/wait.h>

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    const std::string cmd = std::string(REEBCZ_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe            = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult result;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) {
        result.out.append(buf, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) {
            end = text.size();
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

} // namespace

TEST_CASE("cz-table reproduces the n = 2 example over csv") {
    const CmdResult r = run_cli("cz-table --n 2 --eps 1/1000 --n-max 7 --format csv");
    CHECK(r.exit_code == 0);
    const auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 15); // header + 14 rows
    CHECK(lines[0] == "family,N,mu_crossing,mu_closed,mu_simplified,homotopy_class,contractible");

    const std::vector<std::string> expected{
        "minus,1,1,1,1,1,false", "minus,2,3,3,3,2,false", "minus,3,5,5,5,0,true",
        "minus,4,5,5,5,1,false", "minus,5,7,7,7,2,false", "minus,6,9,9,9,0,true",
        "minus,7,9,9,9,1,false", "plus,1,1,1,1,1,false",  "plus,2,3,3,3,2,false",
        "plus,3,3,3,3,0,true",   "plus,4,5,5,5,1,false",  "plus,5,7,7,7,2,false",
        "plus,6,7,7,7,0,true",   "plus,7,9,9,9,1,false"};
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(lines[i + 1] == expected[i]);
    }
}

TEST_CASE("cz-table rejects eps = 0 with the degenerate exit code") {
    const CmdResult r = run_cli("cz-table --n 2 --eps 0 --n-max 1");
    CHECK(r.exit_code == 2);
}

TEST_CASE("cz-table with auto eps includes the worked n = 4 value") {
    const CmdResult r = run_cli("cz-table --n 4 --eps auto --n-max 10 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("minus,10,9,9,9,0,true") != std::string::npos);
}

TEST_CASE("sh-ranks emits the theorem pattern and versioned json") {
    const CmdResult r = run_cli("sh-ranks --n 2 --degree-max 6 --format json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("schema") == 1);
    CHECK(doc.at("pattern_ok") == true);
    CHECK(doc.at("table").at("ranks").at("1") == 2);
    CHECK(doc.at("table").at("ranks").at("3") == 3);
    CHECK(doc.at("table").at("ranks").at("5") == 3);
    CHECK(doc.at("table").at("lacunary") == true);
    CHECK(doc.at("table").at("contractible_min_index") == 3);
    CHECK(doc.at("conjugacy_classes") == 3);

    const CmdResult r1 = run_cli("sh-ranks --n 1 --degree-max 10 --format json");
    CHECK(r1.exit_code == 0);
    const auto doc1 = nlohmann::json::parse(r1.out);
    CHECK(doc1.at("table").at("ranks").at("1") == 1);
    for (const char* d : {"3", "5", "7", "9"}) {
        CHECK(doc1.at("table").at("ranks").at(d) == 2);
    }
}

TEST_CASE("verify passes on a small sweep and is byte-deterministic") {
    const std::string args = "verify --n 2 --samples 40 --seed 0 --format json";
    const CmdResult a      = run_cli(args);
    CHECK(a.exit_code == 0);
    const auto doc = nlohmann::json::parse(a.out);
    CHECK(doc.at("all_asserted_pass") == true);

    const CmdResult b = run_cli(args);
    CHECK(a.out == b.out);

    const CmdResult c = run_cli("verify --n 2 --samples 40 --seed 1 --format json");
    CHECK(c.exit_code == 0);
    CHECK(c.out != a.out);
}

TEST_CASE("verify records the radial tangency defect with its n-dependence") {
    const CmdResult r2 = run_cli("verify --n 2 --samples 40 --seed 0 --format json");
    const CmdResult r1 = run_cli("verify --n 1 --samples 40 --seed 0 --format json");
    REQUIRE(r2.exit_code == 0);
    REQUIRE(r1.exit_code == 0);
    const auto doc2 = nlohmann::json::parse(r2.out);
    const auto doc1 = nlohmann::json::parse(r1.out);

    const auto find = [](const nlohmann::json& doc, const std::string& name) {
        for (const auto& entry : doc.at("identities")) {
            if (entry.at("name") == name) {
                return entry;
            }
        }
        REQUIRE(false);
        return nlohmann::json{};
    };

    const auto tangency2 = find(doc2, "radial_y_tangency");
    const auto tangency1 = find(doc1, "radial_y_tangency");
    CHECK(tangency2.at("report_only") == true);
    CHECK(tangency2.at("worst").get<double>() > 1e-4);  // nonzero for n = 2
    CHECK(tangency1.at("worst").get<double>() < 1e-12); // vanishes for n = 1
}

TEST_CASE("lens-compare agrees at the paper parameters and rejects resonance") {
    const CmdResult r =
        run_cli("lens-compare --n 2 --a1 1 --a2 1001/1000 --degree-max 6 --format json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("equal") == true);
    CHECK(doc.at("link_table").at("ranks") == doc.at("lens_table").at("ranks"));

    const CmdResult bad = run_cli("lens-compare --n 2 --a1 1 --a2 1 --degree-max 6");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("md rendering carries the table header") {
    const CmdResult r = run_cli("cz-table --n 2 --eps 1/1000 --n-max 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("family") != std::string::npos);
    CHECK(r.out.find("mu_crossing") != std::string::npos);
}
