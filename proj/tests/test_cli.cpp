#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bipyr/diagram.hpp"
#include "commands.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = bipyr::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path write_temp(const std::string& name, const std::string& content) {
    const fs::path path = fs::temp_directory_path() / name;
    std::ofstream file(path);
    file << content;
    return path;
}

}  // namespace

TEST_CASE("table emits the published CSV") {
    const RunResult r = run({"table", "--n", "3,4,5"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "n,best_mccb,worst_mccb,octahedral\n"
          "3,7.32772,7.32772,10.9916\n"
          "4,10.9916,15.1827,21.9832\n"
          "5,14.6554,23.0377,36.6386\n");
}

TEST_CASE("lob and maxvol print six significant digits") {
    CHECK(run({"maxvol", "4"}).out == "3.66386\n");
    CHECK(run({"maxvol", "2"}).out == "0\n");
    CHECK(run({"lob", "0"}).out == "0\n");
}

TEST_CASE("analyze reports a worked diagram") {
    const fs::path dir = fs::temp_directory_path() / "bipyr-cli-test";
    fs::create_directories(dir);
    REQUIRE(run({"examples", "--write-dir", dir.string()}).code == 0);

    const RunResult r =
        run({"analyze", (dir / "fig8-ubercrossing.json").string(), "--json"});
    REQUIRE(r.code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["crossings"][0]["signature"] ==
          nlohmann::json::array({4, 8, 8, 4}));
    CHECK(j["crossings"][0]["tetrahedra"] == 24);
    CHECK(j["mccb"].get<double>() == doctest::Approx(23.0377).epsilon(1e-4));

    const RunResult t = run({"analyze", (dir / "triple-weave.json").string(), "--json"});
    REQUIRE(t.code == 0);
    const nlohmann::json jt = nlohmann::json::parse(t.out);
    CHECK(jt["mccb"].get<double>() == doctest::Approx(14.6554).epsilon(1e-4));
    CHECK(jt["mfcb"].get<double>() == doctest::Approx(14.6554).epsilon(1e-4));
    CHECK(jt["genus"] == nlohmann::json::array({1}));

    // Written examples parse back into the library.
    for (const std::string& name : bipyr::builtin_example_names()) {
        std::ifstream file(dir / (name + ".json"));
        std::stringstream buf;
        buf << file.rdbuf();
        CHECK_NOTHROW(bipyr::parse_diagram(buf.str()));
    }
}

TEST_CASE("identical invocations produce identical bytes") {
    const fs::path dir = fs::temp_directory_path() / "bipyr-cli-test";
    fs::create_directories(dir);
    run({"examples", "--write-dir", dir.string()});
    const std::string path = (dir / "right-triangle-weave.json").string();
    const RunResult a = run({"analyze", path, "--json"});
    const RunResult b = run({"analyze", path, "--json"});
    CHECK(a.out == b.out);
    CHECK(run({"enumerate", "6", "--csv"}).out == run({"enumerate", "6", "--csv"}).out);
}

TEST_CASE("user errors exit with code 2") {
    const fs::path bad = write_temp(
        "bipyr-bad-perm.json",
        R"({"crossings":[{"id":0,"levels":[1,1,2]}],"edges":[]})");
    const RunResult r = run({"analyze", bad.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("levels not a permutation") != std::string::npos);

    CHECK(run({"analyze", "/nonexistent/file.json"}).code == 2);
    CHECK(run({"realize", "4,6,4"}).code == 2);
    CHECK(run({"realize", "4,x"}).code == 2);
    CHECK(run({"enumerate", "50"}).code == 2);
    CHECK(run({"table", "--n", "2"}).code == 2);

    const fs::path syntax = write_temp("bipyr-syntax.json", "{oops");
    const RunResult s = run({"analyze", syntax.string()});
    CHECK(s.code == 2);
    CHECK(s.err.find("byte") != std::string::npos);
}

TEST_CASE("enumerate csv lists every configuration") {
    const RunResult r = run({"enumerate", "4", "--csv"});
    CHECK(r.code == 0);
    int lines = 0;
    for (char ch : r.out)
        if (ch == '\n') ++lines;
    CHECK(lines == 7);  // header + six configurations
}

TEST_CASE("realize prints a verified witness") {
    const RunResult r = run({"realize", "4,8,8,4"});
    REQUIRE(r.code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["signature"] == nlohmann::json::array({4, 8, 8, 4}));
    CHECK(j["levels"].size() == 5);
}

TEST_CASE("BIPYR_MAX_SUM caps realization size") {
    setenv("BIPYR_MAX_SUM", "8", 1);
    const RunResult r = run({"realize", "4,8,8,4"});
    unsetenv("BIPYR_MAX_SUM");
    CHECK(r.code == 2);
    CHECK(r.err.find("exceeds cap") != std::string::npos);
}
