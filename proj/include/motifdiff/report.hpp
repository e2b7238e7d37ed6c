// report.hpp — evaluation report assembly artifacts: feature table,
// scores, distance matrix and per-(model, graph) mean motif profiles, as
// CSV files and one JSON document. No timestamps anywhere: identical runs
// produce identical bytes.

#pragma once

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "motifdiff/errors.hpp"
#include "motifdiff/metrics.hpp"
#include "motifdiff/version.hpp"

namespace motifdiff {

// Shortest round-trip decimal rendering; locale-independent.
inline std::string format_double(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

struct ModelReport {
    double stability = 0.0;
    std::map<std::string, double> per_graph_stability;
    std::optional<double> separability; // absent with a single graph
    Diagnostics diagnostics;
};

struct EvalReport {
    std::string version{kVersion};
    std::string config_hash;
    std::uint64_t master_seed = 0;
    EvalConfig eval;
    std::vector<std::pair<std::string, std::string>> graphs; // name, spec
    std::vector<std::string> models;
    std::vector<std::uint64_t> seeds;
    FeatureTable features;
    std::map<std::string, ModelReport> scores;
    std::vector<std::tuple<std::string, std::string, double>> distances; // long form
    std::map<std::pair<std::string, std::string>, MotifVector> motif_means;
    std::string direction_note;
};

namespace detail {

inline std::ofstream open_out(const std::filesystem::path& p) {
    std::ofstream f(p, std::ios::binary);
    if (!f.good()) throw std::runtime_error("cannot write '" + p.string() + "'");
    return f;
}

inline void write_vector_row(std::ofstream& f, const std::array<double, 36>& v) {
    for (double x : v) f << "," << format_double(x);
    f << "\n";
}

} // namespace detail

inline void emit_report_csv(const EvalReport& r, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);

    {
        auto f = detail::open_out(dir / "features.csv");
        f << "model,graph,seed";
        for (int i = 0; i < kMotifClasses; ++i)
            f << ",n" << (i < 10 ? "0" : "") << i;
        f << "\n";
        for (const auto& [key, vec] : r.features.rows()) {
            f << key.model << "," << key.graph << "," << key.seed;
            detail::write_vector_row(f, vec.normalized);
        }
    }
    {
        auto f = detail::open_out(dir / "scores.csv");
        f << "model,stability,separability,stab_frac,sep_frac,stab_pass,sep_pass\n";
        for (const auto& m : r.models) {
            const ModelReport& s = r.scores.at(m);
            f << m << "," << format_double(s.stability) << ","
              << (s.separability ? format_double(*s.separability) : std::string()) << ","
              << format_double(s.diagnostics.stab_frac) << ","
              << format_double(s.diagnostics.sep_frac) << ","
              << (s.diagnostics.stab_pass ? "true" : "false") << ","
              << (s.diagnostics.sep_pass ? "true" : "false") << "\n";
        }
    }
    {
        auto f = detail::open_out(dir / "distances.csv");
        f << "model_a,model_b,distance\n";
        for (const auto& [a, b, d] : r.distances)
            f << a << "," << b << "," << format_double(d) << "\n";
    }
    {
        auto f = detail::open_out(dir / "motif_means.csv");
        f << "model,graph";
        for (int i = 0; i < kMotifClasses; ++i)
            f << ",n" << (i < 10 ? "0" : "") << i;
        f << "\n";
        for (const auto& [key, vec] : r.motif_means) {
            f << key.first << "," << key.second;
            detail::write_vector_row(f, vec.normalized);
        }
    }
}

inline nlohmann::json report_to_json(const EvalReport& r) {
    nlohmann::json j;
    j["provenance"] = {{"version", r.version},
                       {"config_hash", r.config_hash},
                       {"master_seed", r.master_seed},
                       {"p_cascades", r.eval.cascades_per_network},
                       {"delta", r.eval.delta},
                       {"rate", r.eval.rate},
                       {"tau", r.eval.tau},
                       {"epsilon", r.eval.epsilon}};
    j["graphs"] = nlohmann::json::object();
    for (const auto& [name, spec] : r.graphs) j["graphs"][name] = spec;
    j["models"] = r.models;
    j["seeds"] = r.seeds;

    j["motif_layout"] = nlohmann::json::array();
    for (int i = 0; i < kMotifClasses; ++i) j["motif_layout"].push_back(motif_label(i));

    j["scores"] = nlohmann::json::object();
    for (const auto& [m, s] : r.scores) {
        nlohmann::json e;
        e["stability"] = s.stability;
        e["per_graph_stability"] = s.per_graph_stability;
        if (s.separability) e["separability"] = *s.separability;
        else e["separability"] = nullptr;
        e["stab_frac"] = s.diagnostics.stab_frac;
        e["sep_frac"] = s.diagnostics.sep_frac;
        e["stab_pass"] = s.diagnostics.stab_pass;
        e["sep_pass"] = s.diagnostics.sep_pass;
        j["scores"][m] = std::move(e);
    }

    j["distances"] = nlohmann::json::array();
    for (const auto& [a, b, d] : r.distances)
        j["distances"].push_back({{"model_a", a}, {"model_b", b}, {"distance", d}});

    j["motif_means"] = nlohmann::json::object();
    for (const auto& [key, vec] : r.motif_means)
        j["motif_means"][key.first][key.second] = vec.normalized;

    j["features"] = nlohmann::json::array();
    for (const auto& [key, vec] : r.features.rows())
        j["features"].push_back({{"model", key.model},
                                 {"graph", key.graph},
                                 {"seed", key.seed},
                                 {"normalized", vec.normalized}});

    j["notes"] = nlohmann::json::array({r.direction_note});
    return j;
}

inline void emit_report_json(const EvalReport& r, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    auto f = detail::open_out(dir / "report.json");
    f << report_to_json(r).dump(2) << "\n";
}

} // namespace motifdiff
