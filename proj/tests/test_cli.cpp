#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "test_support.hpp"

namespace fs = std::filesystem;
using raagtree::testing::data_path;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string("'") + RAAGTREE_CLI + "' " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string tree_arg(const char* file) { return "--tree '" + data_path(file) + "'"; }

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch(const char* name) {
    auto dir = fs::temp_directory_path() / ("raagtree_cli_" + std::string(name));
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("exit codes") {
    CHECK(run("present " + tree_arg("tripod.json") + " --n 2").code == 0);
    CHECK(run("present --tree /nonexistent/tree.json --n 2").code == 1);
    CHECK(run("present " + tree_arg("tripod.json") + " --n -1").code == 1);
    CHECK(run("present " + tree_arg("tripod.json") + " --n 2 --format svg").code == 1);
    CHECK(run("bogus").code == 1);

    auto nonlinear = run("present " + tree_arg("nonlinear.json") + " --n 2");
    CHECK(nonlinear.code == 2);
    CHECK(nonlinear.out.find("not linear") != std::string::npos);

    auto capped = run("verify " + tree_arg("htree.json") + " --n 3 --cell-cap 50");
    CHECK(capped.code == 4);
    CHECK(capped.out.find("cell cap") != std::string::npos);
}

TEST_CASE("present writes dot and json files") {
    auto dir = scratch("present");
    auto r = run("present " + tree_arg("htree.json") + " --n 4 --format dot --out '" + dir.string() + "'");
    REQUIRE(r.code == 0);
    auto dot = slurp(dir / "presentation_n4.dot");
    CHECK(dot.rfind("graph raag_n4 {\n", 0) == 0);
    CHECK(std::count(dot.begin(), dot.end(), '[') == 12);
    CHECK(dot.find(" -- ") != std::string::npos);

    r = run("present " + tree_arg("htree.json") + " --n-min 2 --n-max 4 --out '" + dir.string() + "'");
    REQUIRE(r.code == 0);
    for (int n = 2; n <= 4; ++n) CHECK(fs::exists(dir / ("presentation_n" + std::to_string(n) + ".json")));
    auto doc = nlohmann::json::parse(slurp(dir / "presentation_n4.json"));
    CHECK(doc["generators"].size() == 12);
    CHECK(doc["relations"].size() == 1);
    for (const auto& entry : fs::directory_iterator(dir)) CHECK(entry.path().extension() != ".tmp");
    fs::remove_all(dir);
}

TEST_CASE("present to stdout") {
    auto empty = run("present " + tree_arg("tripod.json") + " --n 0 --format dot");
    CHECK(empty.code == 0);
    CHECK(empty.out == "graph raag_n0 {\n}\n");

    auto a = run("present " + tree_arg("htree.json") + " --n 4");
    auto b = run("present " + tree_arg("htree.json") + " --n 4");
    auto c = run("present " + tree_arg("htree.txt") + " --n 4");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
}

TEST_CASE("verify") {
    auto dir = scratch("verify");
    auto r = run("verify " + tree_arg("tripod.json") + " --n-min 2 --n-max 3 --out '" + dir.string() + "'");
    CHECK(r.code == 0);
    CHECK(r.out.find("n=2") != std::string::npos);
    CHECK(r.out.find("n=3") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    auto doc = nlohmann::json::parse(slurp(dir / "homology_n3.json"));
    CHECK(doc["betti"][0] == 1);
    CHECK(doc["betti"][1] == 3);

    auto low = run("verify " + tree_arg("tripod.json") + " --n 2 --subdivision 1");
    CHECK(low.code == 0);
    CHECK(low.out.find("warning") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("table and stabilize") {
    auto t = run("table --k 3 --n-min 0 --n-max 4");
    CHECK(t.code == 0);
    CHECK(t.out.find("  3       0       0       1       3       6") != std::string::npos);
    CHECK(t.out.find("all entries agree") != std::string::npos);

    auto s = run("stabilize " + tree_arg("caterpillar3.json") + " --n-max 4");
    CHECK(s.code == 0);
    CHECK(s.out.find("n=3->4") != std::string::npos);
    CHECK(s.out.find("FAIL") == std::string::npos);

    auto d = run("dump-star --k 3 --n 2");
    CHECK(d.code == 0);
    CHECK(d.out.find("basis") != std::string::npos);
}
