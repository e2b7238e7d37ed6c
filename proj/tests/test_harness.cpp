#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "motifdiff/config.hpp"
#include "motifdiff/harness.hpp"

using namespace motifdiff;
namespace fs = std::filesystem;

namespace {

// tiny but complete: two distinct graphs, two models, three explicit seeds
constexpr const char* kTinyCfg = R"(
[run]
master_seed = 7
seeds       = 5, 90, 1023
p_cascades  = 3
delta       = 2.0
rate        = 3.0

[graphs]
ring = ring_lattice:30:2
er   = erdos_renyi:40:0.08

[models]
IC = IC phi_scale=0.6
DC = DC phi_scale=0.6 confirm_prob=0.7
)";

RunConfig tiny_config() {
    std::istringstream in(kTinyCfg);
    return load_config(in);
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

fs::path fresh_dir(const std::string& name) {
    auto d = fs::temp_directory_path() / ("motifdiff_test_" + name);
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

} // namespace

TEST_CASE("minimal config applies protocol defaults", "[harness]") {
    std::istringstream in("[graphs]\nring = ring_lattice:30:2\nring2 = ring_lattice:32:2\n");
    auto rc = load_config(in);
    REQUIRE(rc.seeds.size() == 50);              // Q defaults to 50
    REQUIRE(rc.eval.cascades_per_network == 10); // P defaults to 10
    REQUIRE(rc.models.size() == 6);              // all six standard models
    for (const auto& m : rc.models) REQUIRE(m.spec.rounds == 6);
    for (auto k : rc.seeds) REQUIRE(k < (std::uint64_t{1} << 20));
    REQUIRE(rc.graphs.size() == 2);
    REQUIRE(rc.graphs[0].graph.node_count == 30);
}

TEST_CASE("explicit seed lists fix Q", "[harness]") {
    std::istringstream in("[run]\nseeds = 1, 2, 3\n[graphs]\ng = ring_lattice:30:1\n");
    auto rc = load_config(in);
    REQUIRE(rc.seeds == std::vector<std::uint64_t>{1, 2, 3});
}

TEST_CASE("config validation reports precise paths", "[harness]") {
    auto load = [](const std::string& text) {
        std::istringstream in(text);
        return load_config(in);
    };
    REQUIRE_THROWS_WITH(load("[run]\nq_seeds = 5\n"), Catch::Matchers::ContainsSubstring(
                                                          "graphs: section missing"));
    REQUIRE_THROWS_WITH(load("[run]\nfoo = 1\n[graphs]\ng = ring:30:1\n"),
                        Catch::Matchers::ContainsSubstring("run.foo"));
    REQUIRE_THROWS_WITH(load("[whatever]\nx = 1\n[graphs]\ng = ring:30:1\n"),
                        Catch::Matchers::ContainsSubstring("[whatever]"));
    REQUIRE_THROWS_WITH(load("[graphs]\ng = ring:30:1\n[models]\nM = XX\n"),
                        Catch::Matchers::ContainsSubstring("unknown model kind"));
    REQUIRE_THROWS_WITH(load("[graphs]\ng = ring:30:1\n[models]\nM = IC phi_scale=2\n"),
                        Catch::Matchers::ContainsSubstring("models.M"));
    REQUIRE_THROWS_WITH(load("[graphs]\ng = ring:30:1\n[models]\nM = IC frobnicate=1\n"),
                        Catch::Matchers::ContainsSubstring("unknown key 'frobnicate'"));
    REQUIRE_THROWS_WITH(load("[run]\ndelta = -1\n[graphs]\ng = ring:30:1\n"),
                        Catch::Matchers::ContainsSubstring("delta"));
    REQUIRE_THROWS_WITH(load("[run]\nseeds = 3, 3\n[graphs]\ng = ring:30:1\n"),
                        Catch::Matchers::ContainsSubstring("duplicate seed"));
    REQUIRE_THROWS_WITH(load("[run]\nq_seeds = 4\nseeds = 1, 2\n[graphs]\ng = ring:30:1\n"),
                        Catch::Matchers::ContainsSubstring("not both"));
    REQUIRE_THROWS_WITH(load("[graphs]\ng = ring:30:1\ng = ring:32:1\n"),
                        Catch::Matchers::ContainsSubstring("duplicate name"));
    REQUIRE_THROWS_AS(load("[graphs]\ng = /no/such/file.txt\n"), ConfigError);
    REQUIRE_THROWS_AS(load("key_without_section = 1\n"), ParseError);
}

TEST_CASE("graph files load through configs with directedness control", "[harness]") {
    auto dir = fresh_dir("cfgfile");
    {
        std::ofstream f(dir / "g.txt");
        f << "0 1\n1 2\n";
    }
    std::ofstream cfg(dir / "eval.cfg");
    cfg << "[run]\nseeds = 1, 2\n[graphs]\nd = g.txt\nu = g.txt undirected\n"
        << "[models]\nIC = IC\n";
    cfg.close();
    auto rc = load_config_file(dir / "eval.cfg");
    REQUIRE(rc.graphs[0].graph.edges.size() == 2);
    REQUIRE(rc.graphs[1].graph.edges.size() == 4);
}

TEST_CASE("feature tables are identical across worker counts", "[harness]") {
    auto rc = tiny_config();
    auto serial = compute_feature_table(rc, 1);
    auto parallel = compute_feature_table(rc, 8);
    REQUIRE(serial.failures.empty());
    REQUIRE(parallel.failures.empty());
    REQUIRE(serial.table.rows() == parallel.table.rows());
    REQUIRE(serial.table.size() == 2 * 2 * 3);
}

TEST_CASE("features for one seed ignore the other seeds in the config", "[harness]") {
    auto rc = tiny_config();
    auto full = compute_feature_table(rc, 2).table;

    RunConfig fewer = rc;
    fewer.seeds = {90};
    fewer.seeds.push_back(5); // same two, different order
    auto sub = compute_feature_table(fewer, 2).table;
    REQUIRE(sub.at("IC", "ring", 90).normalized == full.at("IC", "ring", 90).normalized);
    REQUIRE(sub.at("DC", "er", 5).normalized == full.at("DC", "er", 5).normalized);
}

TEST_CASE("run_evaluation writes a deterministic report", "[harness]") {
    auto rc = tiny_config();
    auto d1 = fresh_dir("eval1");
    auto d2 = fresh_dir("eval2");
    auto r1 = run_evaluation(rc, d1, 1);
    auto r2 = run_evaluation(rc, d2, 4);

    for (const char* f : {"features.csv", "scores.csv", "distances.csv", "motif_means.csv",
                          "report.json"})
        REQUIRE(slurp(d1 / f) == slurp(d2 / f));

    // distance matrix: symmetric, zero diagonal, N^2 long-form rows
    REQUIRE(r1.distances.size() == 4);
    std::map<std::pair<std::string, std::string>, double> dm;
    for (auto& [a, b, d] : r1.distances) dm[{a, b}] = d;
    REQUIRE(dm.at({"IC", "IC"}) == 0.0);
    REQUIRE(dm.at({"DC", "DC"}) == 0.0);
    REQUIRE(dm.at({"IC", "DC"}) == dm.at({"DC", "IC"}));

    // every emitted vector is unit-sum or all-zero
    for (const auto& [key, vec] : r1.features.rows()) {
        double s = 0.0;
        for (double x : vec.normalized) s += x;
        if (vec.total() == 0)
            REQUIRE(s == 0.0);
        else
            REQUIRE(std::abs(s - 1.0) < 1e-12);
    }
    REQUIRE_FALSE(r1.direction_note.empty());
}

TEST_CASE("single-graph configs report separability as absent", "[harness]") {
    std::istringstream in(
        "[run]\nseeds = 1, 2\np_cascades = 2\n[graphs]\nring = ring_lattice:30:2\n"
        "[models]\nIC = IC\n");
    auto rc = load_config(in);
    auto dir = fresh_dir("eval-single");
    auto r = run_evaluation(rc, dir, 2);
    REQUIRE_FALSE(r.scores.at("IC").separability.has_value());
    auto j = nlohmann::json::parse(slurp(dir / "report.json"));
    REQUIRE(j["scores"]["IC"]["separability"].is_null());
}

TEST_CASE("json and csv artifacts carry identical numbers", "[harness]") {
    auto rc = tiny_config();
    auto dir = fresh_dir("eval-lossless");
    auto r = run_evaluation(rc, dir, 4);

    auto j = nlohmann::json::parse(slurp(dir / "report.json"));
    // scores.csv vs json
    std::ifstream f(dir / "scores.csv");
    std::string header, line;
    std::getline(f, header);
    while (std::getline(f, line)) {
        std::istringstream row(line);
        std::string model, stab, sep;
        std::getline(row, model, ',');
        std::getline(row, stab, ',');
        std::getline(row, sep, ',');
        REQUIRE(std::stod(stab) == j["scores"][model]["stability"].get<double>());
        REQUIRE(std::stod(sep) == j["scores"][model]["separability"].get<double>());
    }
    // features.csv vs json rows
    std::size_t json_rows = j["features"].size();
    REQUIRE(json_rows == r.features.size());
}

TEST_CASE("partial failures persist results and a manifest", "[harness]") {
    auto rc = tiny_config();
    rc.models[1].spec.n_seed_nodes = 0; // constructed directly; load_config rejects this
    auto dir = fresh_dir("eval-partial");
    REQUIRE_THROWS_AS(run_evaluation(rc, dir, 2), std::runtime_error);

    REQUIRE(fs::exists(dir / "failure_manifest.json"));
    auto m = nlohmann::json::parse(slurp(dir / "failure_manifest.json"));
    REQUIRE(m["completed"].get<std::size_t>() == 6); // IC: 2 graphs x 3 seeds
    REQUIRE(m["failed"].size() == 6);                // all DC jobs
    REQUIRE(m["failed"][0]["model"] == "DC");

    const auto csv = slurp(dir / "features.csv");
    REQUIRE(csv.find("IC,") != std::string::npos);
    REQUIRE(csv.find("DC,") == std::string::npos);
}
