// Exercises the built CLI binary (path in $MOTIFDIFF_CLI, set by ctest) and
// checks that its subcommands compose with the in-process pipeline.

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "motifdiff/motifdiff.hpp"

using namespace motifdiff;
namespace fs = std::filesystem;

namespace {

const char* cli_path() { return std::getenv("MOTIFDIFF_CLI"); }

int run(const std::string& args) {
    const std::string cmd = std::string(cli_path()) + " " + args + " 2>/dev/null";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

fs::path work_dir() {
    auto d = fs::temp_directory_path() / "motifdiff_cli_test";
    fs::create_directories(d);
    return d;
}

} // namespace

TEST_CASE("simulate then count matches the in-process pipeline", "[cli]") {
    if (!cli_path()) {
        SKIP("MOTIFDIFF_CLI not set");
    }
    auto dir = work_dir();
    const auto tn_path = dir / "tn.txt";
    const auto vec_path = dir / "vec.csv";
    const std::string graph_spec = "ring_lattice:40:2";

    REQUIRE(run("simulate --graph " + graph_spec + " --model IC --seed 7 --cascades 5 -o " +
                tn_path.string()) == 0);
    REQUIRE(run("count --input " + tn_path.string() + " --delta 3.0 -o " + vec_path.string() +
                " --json " + (dir / "vec.json").string()) == 0);

    // in-process reference with the same stream tags the CLI uses
    auto g = graph_from_spec(graph_spec);
    EvalConfig cfg;
    cfg.cascades_per_network = 5;
    cfg.delta = 3.0;
    auto expect = motif_feature(g, ModelSpec{}, 7, cfg, "IC", graph_spec);

    // the CSV row is counts then normalized
    std::ifstream f(vec_path);
    std::string header, row;
    std::getline(f, header);
    std::getline(f, row);
    std::istringstream cells(row);
    std::string cell;
    for (int i = 0; i < kMotifClasses; ++i) {
        std::getline(cells, cell, ',');
        REQUIRE(std::stoull(cell) == expect.counts[i]);
    }
    for (int i = 0; i < kMotifClasses; ++i) {
        std::getline(cells, cell, ',');
        REQUIRE(std::stod(cell) == expect.normalized[i]);
    }

    auto j = nlohmann::json::parse(slurp(dir / "vec.json"));
    REQUIRE(j["total"].get<std::uint64_t>() == expect.total());
    REQUIRE(j["layout"][27] == "v->w|w->u");

    // the written temporal file also reads back in-process
    std::ifstream tf(tn_path);
    auto tn = read_temporal(tf);
    REQUIRE(count_fast(tn, 3.0) == expect);
}

TEST_CASE("cli exit codes distinguish config from runtime errors", "[cli]") {
    if (!cli_path()) {
        SKIP("MOTIFDIFF_CLI not set");
    }
    auto dir = work_dir();
    // bad model kind -> 1
    REQUIRE(run("simulate --graph ring_lattice:40:2 --model XX --seed 1 -o " +
                (dir / "x.txt").string()) == 1);
    // bad synthetic spec -> 1
    REQUIRE(run("simulate --graph nope:10:1 --model IC --seed 1 -o " +
                (dir / "x.txt").string()) == 1);
    // missing input file -> 1
    REQUIRE(run("count --input " + (dir / "missing.txt").string()) == 1);
    // missing required option -> 1
    REQUIRE(run("count") == 1);
    // help -> 0
    REQUIRE(run("--help >/dev/null") == 0);
    // unwritable output path -> 2 (runtime)
    REQUIRE(run("simulate --graph ring_lattice:40:2 --model IC --seed 1 -o /no/such/dir/o.txt") ==
            2);
}

TEST_CASE("evaluate and compare run against a small config", "[cli]") {
    if (!cli_path()) {
        SKIP("MOTIFDIFF_CLI not set");
    }
    auto dir = work_dir();
    {
        std::ofstream cfg(dir / "small.cfg");
        cfg << "[run]\nseeds = 1, 2\np_cascades = 2\ndelta = 2.0\n"
            << "[graphs]\na = ring_lattice:30:2\nb = erdos_renyi:30:0.1\n"
            << "[models]\nIC = IC\nWC = WC\n";
    }
    const auto out = dir / "report";
    REQUIRE(run("evaluate --config " + (dir / "small.cfg").string() + " -o " + out.string() +
                " --workers 2") == 0);
    for (const char* f : {"features.csv", "scores.csv", "distances.csv", "motif_means.csv",
                          "report.json"})
        REQUIRE(fs::exists(out / f));

    const std::string cmp =
        std::string(cli_path()) + " compare --config " + (dir / "small.cfg").string() +
        " --workers 2 > " + (dir / "cmp.csv").string() + " 2>/dev/null";
    REQUIRE(WEXITSTATUS(std::system(cmp.c_str())) == 0);
    const auto body = slurp(dir / "cmp.csv");
    REQUIRE(body.rfind("model_a,model_b,distance\n", 0) == 0);
    REQUIRE(body.find("IC,WC,") != std::string::npos);

    // config errors exit 1
    REQUIRE(run("evaluate --config /no/such.cfg -o " + out.string()) == 1);
}
