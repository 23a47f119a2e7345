#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "hca/io.hpp"

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(HILBERTCA_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int rc = pclose(pipe);
    r.status = WEXITSTATUS(rc);
    return r;
}

std::string temp_file(const std::string& name) {
    return std::string("/tmp/hilbertca_test_") + name;
}

}  // namespace

TEST_CASE("hilbert path emits 4 CSV rows for the basic path") {
    RunResult r = run_cli("hilbert path --variant a --level 1");
    CHECK(r.status == 0);
    CHECK(r.out.find("step,x,y") != std::string::npos);
    CHECK(r.out.find("1,0,0") != std::string::npos);
    CHECK(r.out.find("2,0,1") != std::string::npos);
    CHECK(r.out.find("3,1,1") != std::string::npos);
    CHECK(r.out.find("4,1,0") != std::string::npos);
}

TEST_CASE("entropy constants command") {
    RunResult r = run_cli("entropy constants");
    CHECK(r.status == 0);
    CHECK(r.out.find("\"epsilon\": \"1/64\"") != std::string::npos);
    CHECK(r.out.find("\"M\": 64") != std::string::npos);
    CHECK(r.out.find("\"refined\": 4") != std::string::npos);
}

TEST_CASE("unknown subcommands exit with status 1") {
    RunResult r = run_cli("frobnicate");
    CHECK(r.status == 1);
}

TEST_CASE("malformed JSON input exits with status 1") {
    std::string path = temp_file("bad.json");
    std::ofstream(path) << "{ not json";
    RunResult r = run_cli("tiles validate --input " + path);
    CHECK(r.status == 1);
}

TEST_CASE("budget refusal exits with status 2") {
    std::string grid = temp_file("long.json");
    {
        auto g = hca::Grid(hca::simple_tileset(2), 40, 1);
        std::ofstream(grid) << hca::io::grid_to_json(g);
    }
    RunResult r = run_cli("entropy exact --input " + grid +
                          " --group Z2 --window 0,0 --horizon 33 --budget 1000");
    CHECK(r.status == 2);
}

TEST_CASE("stochastic commands demand a seed") {
    RunResult r = run_cli("entropy survival --tileset kari --windows 8 --thresholds 1 --samples 5");
    CHECK(r.status == 1);
}

TEST_CASE("ca step on an all-invalid grid is the identity on gamma") {
    // A 3x3 Kari grid of one blank cross everywhere: every cell invalid.
    auto ts = hca::KariTileSet::instance();
    hca::KariTile blank;
    auto id = ts->id_of(blank);
    REQUIRE(id.has_value());
    hca::Grid g(ts, 3, 3);
    for (auto& c : g.cells()) c = *id;
    hca::Configuration config = hca::make_configuration(g, hca::FiniteGroup::cyclic(2));
    for (std::size_t i = 0; i < config.gamma.size(); ++i)
        config.gamma[i] = static_cast<std::uint32_t>(i % 2);
    std::string in = temp_file("invalid_config.json");
    std::ofstream(in) << hca::io::configuration_to_json(config);

    RunResult r = run_cli("ca step --input " + in);
    REQUIRE(r.status == 0);
    hca::Configuration out = hca::io::configuration_from_json(r.out);
    CHECK(out.gamma == config.gamma);
}

TEST_CASE("bxy output round-trips and is reproducible byte for byte") {
    std::string f = temp_file("bxy.json");
    std::string cmd = "tiles bxy --level 2 --orientation NE --label a --output " + f;
    auto read_file = [&] {
        std::ifstream s(f);
        std::stringstream b;
        b << s.rdbuf();
        return b.str();
    };
    REQUIRE(run_cli(cmd).status == 0);
    std::string first = read_file();
    std::remove(f.c_str());
    REQUIRE(run_cli(cmd).status == 0);
    std::string second = read_file();
    REQUIRE(!first.empty());
    CHECK(first == second);  // identical command, byte-identical artifact
    hca::Grid g = hca::io::grid_from_json(first);
    CHECK(g.width() == 7);
    CHECK(g.tileset().name() == "kari");
}

TEST_CASE("sampled word counts reproduce with the same seed") {
    std::string grid = temp_file("row.json");
    {
        auto g = hca::Grid(hca::simple_tileset(2), 10, 1);
        std::ofstream(grid) << hca::io::grid_to_json(g);
    }
    std::string args = "entropy sampled --input " + grid +
                       " --group Z2 --window 0,0 --horizon 6 --samples 50 --seed 7";
    RunResult r1 = run_cli(args);
    RunResult r2 = run_cli(args);
    REQUIRE(r1.status == 0);
    CHECK(r1.out == r2.out);
}

TEST_CASE("freegroup prob reports both readings") {
    RunResult r = run_cli("freegroup prob");
    CHECK(r.status == 0);
    CHECK(r.out.find("\"A\": \"1/2\"") != std::string::npos);
    CHECK(r.out.find("\"MinvA\": \"1/8\"") != std::string::npos);
    CHECK(r.out.find("\"MinvA_majority\": \"3/8\"") != std::string::npos);
}

TEST_CASE("rule6 variant switch is exposed") {
    RunResult r = run_cli("tiles enumerate --tileset kari --rule6-variant a --summary");
    CHECK(r.status == 0);
    CHECK(r.out.find("kari:rule6a") != std::string::npos);
}
