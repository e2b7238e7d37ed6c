// metrics.hpp — the motif-feature pipeline and the stability /
// separability / model-distance statistics.
//
// A feature is the normalized motif vector of one generated temporal
// network, keyed by (model, graph, seed). Features are pure functions of
// (graph, model, seed, numeric knobs): the per-cascade and combination
// streams derive from that key alone, so tables are reproducible across
// runs, orderings and worker counts.

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "motifdiff/diffusion.hpp"
#include "motifdiff/errors.hpp"
#include "motifdiff/motif.hpp"
#include "motifdiff/temporal.hpp"

namespace motifdiff {

// Numeric knobs of the evaluation protocol.
struct EvalConfig {
    int cascades_per_network = 10;   // P
    double delta = 10.0 / 3.0;       // motif window, ten mean gaps by default
    double rate = 3.0;               // inter-event exponential rate
    double tau = 0.01;               // diagnostics distance tolerance
    double epsilon = 0.05;           // diagnostics probability tolerance

    void validate() const {
        if (cascades_per_network < 1) throw ConfigError("cascades_per_network must be >= 1");
        if (!(delta > 0.0)) throw ConfigError("delta must be > 0");
        if (!(rate > 0.0)) throw ConfigError("rate must be > 0");
        if (!(tau >= 0.0)) throw ConfigError("tau must be >= 0");
        if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw ConfigError("epsilon must be in [0,1]");
    }
};

struct FeatureKey {
    std::string model;
    std::string graph;
    std::uint64_t seed = 0;

    friend auto operator<=>(const FeatureKey&, const FeatureKey&) = default;
};

// Runs P cascades, combines them, counts motifs and normalizes. All
// randomness comes from streams derived from (model_tag, graph_tag, seed).
inline MotifVector motif_feature(const StaticGraph& g, const ModelSpec& m, std::uint64_t seed,
                                 const EvalConfig& cfg, std::string_view model_tag,
                                 std::string_view graph_tag) {
    std::vector<Cascade> cascades;
    cascades.reserve(cfg.cascades_per_network);
    for (int p = 0; p < cfg.cascades_per_network; ++p) {
        auto stream = rng::derive_stream({"cascade", model_tag, graph_tag, seed,
                                          static_cast<std::uint64_t>(p)});
        cascades.push_back(run_cascade(g, m, stream));
    }
    auto combine_stream = rng::derive_stream({"combine", model_tag, graph_tag, seed});
    TemporalNetwork tn = combine_cascades(cascades, combine_stream, cfg.rate);
    tn.node_count = g.node_count;
    return count_fast(tn, cfg.delta);
}

inline MotifVector motif_feature(const StaticGraph& g, const ModelSpec& m, std::uint64_t seed,
                                 const EvalConfig& cfg) {
    return motif_feature(g, m, seed, cfg, model_kind_name(m.kind), "g");
}

// Squared Euclidean distance between normalized vectors. Bounded by 2 on
// the simplex.
inline double distance(const MotifVector& a, const MotifVector& b) {
    double s = 0.0;
    for (int i = 0; i < kMotifClasses; ++i) {
        const double d = a.normalized[i] - b.normalized[i];
        s += d * d;
    }
    return s;
}

// The (model, graph, seed) -> feature store that all reductions consume.
class FeatureTable {
public:
    void insert(FeatureKey key, MotifVector v) {
        rows_[std::move(key)] = std::move(v);
    }

    const MotifVector& at(std::string_view model, std::string_view graph,
                          std::uint64_t seed) const {
        auto it = rows_.find(FeatureKey{std::string(model), std::string(graph), seed});
        if (it == rows_.end())
            throw ConfigError("feature table has no row (" + std::string(model) + ", " +
                              std::string(graph) + ", " + std::to_string(seed) + ")");
        return it->second;
    }

    const std::map<FeatureKey, MotifVector>& rows() const { return rows_; }
    std::size_t size() const { return rows_.size(); }

private:
    std::map<FeatureKey, MotifVector> rows_;
};

// Largest pairwise feature distance across seeds on one graph.
inline double stability_score(const FeatureTable& t, std::string_view model,
                              std::string_view graph,
                              const std::vector<std::uint64_t>& seeds) {
    if (seeds.size() < 2) throw ConfigError("stability needs at least 2 seeds");
    double worst = 0.0;
    for (std::size_t i = 0; i < seeds.size(); ++i)
        for (std::size_t j = i + 1; j < seeds.size(); ++j)
            worst = std::max(worst,
                             distance(t.at(model, graph, seeds[i]), t.at(model, graph, seeds[j])));
    return worst;
}

// Worst-case stability over the graph collection.
inline double stability(const FeatureTable& t, std::string_view model,
                        const std::vector<std::string>& graphs,
                        const std::vector<std::uint64_t>& seeds) {
    if (graphs.empty()) throw ConfigError("stability needs at least 1 graph");
    double worst = 0.0;
    for (const auto& g : graphs) worst = std::max(worst, stability_score(t, model, g, seeds));
    return worst;
}

// Smallest cross-graph distance under a shared seed.
inline double separability(const FeatureTable& t, std::string_view model,
                           const std::vector<std::string>& graphs,
                           const std::vector<std::uint64_t>& seeds) {
    if (graphs.size() < 2) throw ConfigError("separability needs at least 2 graphs");
    if (seeds.empty()) throw ConfigError("separability needs at least 1 seed");
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = i + 1; j < graphs.size(); ++j)
            for (std::uint64_t k : seeds)
                best = std::min(best,
                                distance(t.at(model, graphs[i], k), t.at(model, graphs[j], k)));
    return best;
}

// Seed-averaged feature of one model on one graph, re-normalized (the mean
// of unit-sum vectors is unit-sum already unless some members are all-zero).
inline MotifVector seed_mean_feature(const FeatureTable& t, std::string_view model,
                                     std::string_view graph,
                                     const std::vector<std::uint64_t>& seeds) {
    if (seeds.empty()) throw ConfigError("seed mean needs at least 1 seed");
    MotifVector mean;
    for (std::uint64_t k : seeds) {
        const MotifVector& v = t.at(model, graph, k);
        for (int i = 0; i < kMotifClasses; ++i) mean.normalized[i] += v.normalized[i];
    }
    double sum = 0.0;
    for (int i = 0; i < kMotifClasses; ++i) {
        mean.normalized[i] /= static_cast<double>(seeds.size());
        sum += mean.normalized[i];
    }
    if (sum > 0.0)
        for (int i = 0; i < kMotifClasses; ++i) mean.normalized[i] /= sum;
    return mean;
}

// Mean over graphs of the distance between two models' seed-averaged
// features.
inline double model_distance(const FeatureTable& t, std::string_view model_a,
                             std::string_view model_b, const std::vector<std::string>& graphs,
                             const std::vector<std::uint64_t>& seeds) {
    if (graphs.empty()) throw ConfigError("model distance needs at least 1 graph");
    double sum = 0.0;
    for (const auto& g : graphs)
        sum += distance(seed_mean_feature(t, model_a, g, seeds),
                        seed_mean_feature(t, model_b, g, seeds));
    return sum / static_cast<double>(graphs.size());
}

// Empirical fractions of pairs with d <= tau: same-graph seed pairs for the
// stability condition, cross-graph shared-seed pairs for separability.
struct Diagnostics {
    double stab_frac = 0.0;
    double sep_frac = 0.0;
    bool stab_pass = false; // stab_frac >= 1 - epsilon
    bool sep_pass = false;  // sep_frac <= epsilon
};

inline Diagnostics probability_diagnostics(const FeatureTable& t, std::string_view model,
                                           const std::vector<std::string>& graphs,
                                           const std::vector<std::uint64_t>& seeds, double tau,
                                           double epsilon) {
    Diagnostics d;
    std::uint64_t stab_hits = 0, stab_total = 0;
    for (const auto& g : graphs)
        for (std::size_t i = 0; i < seeds.size(); ++i)
            for (std::size_t j = i + 1; j < seeds.size(); ++j) {
                ++stab_total;
                if (distance(t.at(model, g, seeds[i]), t.at(model, g, seeds[j])) <= tau)
                    ++stab_hits;
            }
    std::uint64_t sep_hits = 0, sep_total = 0;
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = i + 1; j < graphs.size(); ++j)
            for (std::uint64_t k : seeds) {
                ++sep_total;
                if (distance(t.at(model, graphs[i], k), t.at(model, graphs[j], k)) <= tau)
                    ++sep_hits;
            }
    d.stab_frac = stab_total ? static_cast<double>(stab_hits) / stab_total : 0.0;
    d.sep_frac = sep_total ? static_cast<double>(sep_hits) / sep_total : 0.0;
    d.stab_pass = d.stab_frac >= 1.0 - epsilon;
    d.sep_pass = d.sep_frac <= epsilon;
    return d;
}

} // namespace motifdiff
