#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include "crysalite/cli.hpp"
#include "crysalite/report_io.hpp"
#include "golden_corpus.hpp"

using namespace crysalite;
using namespace crysalite::testing;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

TEST_CASE("golden files are byte-stable") {
    // Set CRYSALITE_UPDATE_GOLDEN=1 to rewrite the corpus after an intended format change.
    const bool update = std::getenv("CRYSALITE_UPDATE_GOLDEN") != nullptr;
    for (const auto& g : corpus()) {
        CAPTURE(g.file);
        const auto r = run_cli(g.args);
        REQUIRE(r.code == cli::kExitOk);
        if (update) {
            std::ofstream(golden_path(g.file), std::ios::binary) << r.out;
            continue;
        }
        CHECK(r.out == slurp(golden_path(g.file)));
        // Running twice gives the same bytes.
        CHECK(run_cli(g.args).out == r.out);
    }
}

TEST_CASE("JSON reports round-trip") {
    for (const auto& g : corpus()) {
        if (g.args[0] != "analyze" || !ends_with(g.file, ".json")) continue;
        CAPTURE(g.file);
        const auto text = slurp(golden_path(g.file));
        const auto parsed = ordered_json::parse(text);
        const auto rep = report_from_json(parsed);
        CHECK(report_to_json(rep) == parsed);
        CHECK(report_to_json(rep).dump(2) + "\n" == text);
    }
}

TEST_CASE("round-trip reproduces the in-memory report") {
    const auto r = HypersurfaceRing::parse(Prime(5), {"x0", "x1"}, "x0*x1");
    const auto rep = crys_dimensions(r, 5);
    CHECK(report_from_json(report_to_json(rep)) == rep);
    const auto fat = crys_dimensions(HypersurfaceRing::parse(Prime(5), {"x"}, "x^5"), 3);
    CHECK(report_from_json(report_to_json(fat)) == fat);
}

TEST_CASE("report_from_json rejects malformed input") {
    auto j = ordered_json::parse(slurp(golden_path("node_p5.json")));
    auto bad_license = j;
    bad_license["license"] = "Whatever";
    CHECK_THROWS(report_from_json(bad_license));
    auto missing = j;
    missing.erase("pieces");
    CHECK_THROWS(report_from_json(missing));
}

TEST_CASE("CSV and JSON carry the same numbers") {
    const auto json = ordered_json::parse(slurp(golden_path("node_p5.json")));
    std::istringstream csv(slurp(golden_path("node_p5.csv")));
    std::string line;
    std::getline(csv, line);
    CHECK(line == "section,n,cohdeg,weight,value");

    std::map<std::tuple<int, int, int>, std::uint64_t> from_csv;
    std::map<std::pair<int, int>, std::uint64_t> totals_csv;
    while (std::getline(csv, line)) {
        std::vector<std::string> f;
        std::stringstream ls(line);
        for (std::string cell; std::getline(ls, cell, ',');) f.push_back(cell);
        REQUIRE(f.size() == 5);
        if (f[0] == "piece")
            from_csv[{std::stoi(f[1]), std::stoi(f[2]), std::stoi(f[3])}] = std::stoull(f[4]);
        else if (f[0] == "total")
            totals_csv[{std::stoi(f[2]), std::stoi(f[3])}] = std::stoull(f[4]);
    }
    std::map<std::tuple<int, int, int>, std::uint64_t> from_json;
    for (const auto& piece : json["pieces"])
        for (const auto& e : piece["entries"])
            from_json[{piece["n"].get<int>(), e["cohdeg"].get<int>(), e["weight"].get<int>()}] =
                e["dim"].get<std::uint64_t>();
    CHECK(from_csv == from_json);

    std::map<std::pair<int, int>, std::uint64_t> totals_json;
    for (const auto& t : json["totals"])
        for (const auto& [w, dim] : t["weights"].items())
            totals_json[{t["cohdeg"].get<int>(), std::stoi(w)}] = dim.get<std::uint64_t>();
    CHECK(totals_csv == totals_json);
}

TEST_CASE("verify subcommands") {
    SUBCASE("low-degree") {
        auto r = run_cli({"verify", "low-degree", "--N", "2", "--d", "6"});
        CHECK(r.code == 0);
        CHECK(r.out == "false\n");
        r = run_cli({"verify", "low-degree", "--N", "5", "--d", "2"});
        CHECK(r.out == "true\n");
    }
    SUBCASE("wedge-closed-form") {
        const auto r = run_cli({"verify", "wedge-closed-form", "--prime", "7", "--vars", "x0,x1,x2", "--poly", kCubic,
                                "--n", "5"});
        CHECK(r.code == 0);
        CHECK(r.out == "MATCH\n");
    }
    SUBCASE("koszul") {
        const auto r = run_cli({"verify", "koszul", "--prime", "5", "--vars", "x0,x1,x2", "--poly", kOdp3});
        CHECK(r.code == 0);
        CHECK(r.out == "MATCH\n");
    }
    SUBCASE("euler") {
        const auto r = run_cli({"verify", "euler", "--prime", "3", "--vars", "x0,x1", "--poly", "x0^3+x1^3"});
        CHECK(r.code == 0);
        CHECK(r.out == "true\n");
    }
    SUBCASE("special-fiber") {
        auto r = run_cli({"verify", "special-fiber", "--N", "3", "--n", "5"});
        CHECK(r.code == 0);
        CHECK(r.out == "-5 1\n-4 3\n-3 3\n-2 1\n");
        r = run_cli({"verify", "special-fiber", "--prime", "5", "--vars", "x0,x1", "--poly", "x0*x1", "--n", "4"});
        CHECK(r.code == 0);
        CHECK(r.out == "MATCH\n");
    }
}

TEST_CASE("hypothesis guards exit 1") {
    auto r = run_cli({"verify", "wedge-closed-form", "--prime", "3", "--vars", "x0,x1,x2", "--poly", kCubic, "--n", "5"});
    CHECK(r.code == cli::kExitHypothesis);
    CHECK(r.err.find("CharacteristicDividesDegree") != std::string::npos);

    r = run_cli({"verify", "wedge-closed-form", "--prime", "5", "--vars", "x0,x1,x2", "--poly", "x0^2*x1+x2^3", "--n",
                 "5"});
    CHECK(r.code == cli::kExitHypothesis);
    CHECK(r.err.find("NotSmooth") != std::string::npos);

    r = run_cli({"verify", "koszul", "--prime", "3", "--vars", "x0,x1", "--poly", "x0^3+x1^3"});
    CHECK(r.code == cli::kExitHypothesis);

    r = run_cli(certificate("5", "x0,x1", "x0", 6));
    CHECK(r.code == cli::kExitHypothesis);
    CHECK(r.err.find("NotSingular") != std::string::npos);
}

TEST_CASE("conditional certificates warn but succeed") {
    const auto r = run_cli(certificate("3", "x0,x1", "x0^3+x1^3", 4));
    CHECK(r.code == cli::kExitOk);
    CHECK(r.err.find("conditional") != std::string::npos);
    CHECK(ordered_json::parse(r.out)["conditional"] == true);
}

TEST_CASE("malformed input exits 2") {
    const std::vector<std::vector<std::string>> cases{
        analyze("4", "x0,x1", "x0*x1", 3),
        analyze("5", "x0,x1", "x0*y", 3),
        analyze("5", "x0,x1", "x0^2+x1", 3),
        analyze("5", "x0,x1", "x0 +* x1", 3),
        analyze("5", "x0,x1", "5*x0", 3),
        analyze("5", "x0,x0", "x0^2", 3),
        analyze("5", "x0,x1,x2", kOdp3, 2),
        analyze("5", "x0,x1", "x0*x1", 3, "xml"),
        {"analyze", "--prime", "5", "--vars", "x0,x1", "--nmax", "3"},
        {"frobnicate"},
        {},
        {"verify", "low-degree", "--N", "0", "--d", "3"},
        {"verify", "special-fiber", "--n", "3"},
    };
    for (const auto& args : cases) {
        std::string joined;
        for (const auto& a : args) joined += a + " ";
        CAPTURE(joined);
        const auto r = run_cli(args);
        CHECK(r.code == cli::kExitInput);
        CHECK_FALSE(r.err.empty());
    }
}

TEST_CASE("thread override must be a positive integer") {
    setenv("CRYSALITE_THREADS", "zero", 1);
    CHECK(run_cli({"verify", "low-degree", "--N", "2", "--d", "3"}).code == cli::kExitInput);
    setenv("CRYSALITE_THREADS", "2", 1);
    const auto two = run_cli(analyze("5", "x0,x1", "x0*x1", 8));
    unsetenv("CRYSALITE_THREADS");
    CHECK(two.code == 0);
    CHECK(two.out == slurp(golden_path("node_p5.json")));
}

TEST_CASE("the installed binary reports exit codes") {
    const std::string bin = CRYSALITE_CLI_PATH;
    auto status = [](const std::string& cmd) {
        const int raw = std::system((cmd + " >/dev/null 2>&1").c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    CHECK(status(bin + " verify low-degree --N 2 --d 6") == 0);
    CHECK(status(bin + " verify wedge-closed-form --prime 3 --vars x0,x1,x2 --poly 'x0^3+x1^3+x2^3' --n 5") == 1);
    CHECK(status(bin + " analyze --prime 6 --vars x0,x1 --poly 'x0*x1' --nmax 3") == 2);
    CHECK(status(bin + " --help") == 0);
}
