// diffusion.hpp — the six diffusion models. Each run maps a seed set to an
// ordered cascade of activated directed edges, round-based, at most
// `rounds` rounds. Pure functions of (graph, spec, stream): replaying the
// same stream reproduces the cascade bit for bit.

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "motifdiff/errors.hpp"
#include "motifdiff/graph.hpp"
#include "motifdiff/rng.hpp"

namespace motifdiff {

enum class ModelKind { IC, WC, LT, SM, DC, BK };

inline std::string_view model_kind_name(ModelKind k) {
    switch (k) {
    case ModelKind::IC: return "IC";
    case ModelKind::WC: return "WC";
    case ModelKind::LT: return "LT";
    case ModelKind::SM: return "SM";
    case ModelKind::DC: return "DC";
    case ModelKind::BK: return "BK";
    }
    return "?";
}

inline std::optional<ModelKind> model_kind_from(std::string_view s) {
    if (s == "IC") return ModelKind::IC;
    if (s == "WC") return ModelKind::WC;
    if (s == "LT") return ModelKind::LT;
    if (s == "SM") return ModelKind::SM;
    if (s == "DC") return ModelKind::DC;
    if (s == "BK") return ModelKind::BK;
    return std::nullopt;
}

struct ModelSpec {
    ModelKind kind = ModelKind::IC;
    double phi_scale = 0.5;   // IC/DC/BK: scale of the weight->probability map, (0,1]
    double confirm_prob = 0.5; // DC: chance the receiver confirms back
    double bank_prob = 0.5;    // BK: chance the receiver talks to the hub
    int friends_min = 3;       // SM fan-out range, 3 <= min <= max
    int friends_max = 5;
    int rounds = 6;
    int n_seed_nodes = 10;

    void validate() const {
        if (!(phi_scale > 0.0 && phi_scale <= 1.0))
            throw ConfigError("phi_scale must be in (0,1]");
        if (!(confirm_prob >= 0.0 && confirm_prob <= 1.0))
            throw ConfigError("confirm_prob must be in [0,1]");
        if (!(bank_prob >= 0.0 && bank_prob <= 1.0))
            throw ConfigError("bank_prob must be in [0,1]");
        if (friends_min < 3 || friends_min > friends_max)
            throw ConfigError("need 3 <= friends_min <= friends_max");
        if (rounds < 1) throw ConfigError("rounds must be >= 1");
        if (n_seed_nodes < 1) throw ConfigError("n_seed_nodes must be >= 1");
    }
};

// One diffusion run: the emitted (src,dst) activations in emission order,
// plus the seed set that started it.
struct Cascade {
    std::vector<std::pair<NodeId, NodeId>> activations;
    std::vector<NodeId> seed_nodes; // sorted ascending

    friend bool operator==(const Cascade&, const Cascade&) = default;
};

// min(n, #candidates) distinct nodes, uniform among nodes with out-degree
// >= 1, returned sorted. A graph with no such nodes yields an empty set.
template <class R>
std::vector<NodeId> select_seeds(const StaticGraph& g, int n, R& stream) {
    if (n < 1) throw ConfigError("seed count must be >= 1");
    std::vector<NodeId> candidates;
    for (NodeId v = 0; v < g.node_count; ++v)
        if (g.out_degree(v) > 0) candidates.push_back(v);
    auto seeds = rng::sample_without_replacement(stream, std::move(candidates),
                                                 static_cast<std::size_t>(n));
    std::sort(seeds.begin(), seeds.end());
    return seeds;
}

namespace detail {

// Shared round loop of IC, WC, DC and BK: each frontier node tries each
// out-edge to an inactive target once; the round's successes are emitted in
// uniformly shuffled order and their targets form the next frontier. DC/BK
// replies ride along right after their base edge and never extend the
// frontier. Reply draws happen only when a reply is possible (DC: reverse
// edge exists; BK: target is not the hub).
template <class R>
void run_cascade_family(const StaticGraph& g, const ModelSpec& m, R& stream, Cascade& c) {
    std::vector<char> active(g.node_count, 0);
    for (NodeId s : c.seed_nodes) active[s] = 1;
    std::vector<NodeId> frontier = c.seed_nodes;
    std::vector<std::pair<NodeId, NodeId>> successes;

    for (int round = 0; round < m.rounds && !frontier.empty(); ++round) {
        successes.clear();
        for (NodeId u : frontier) {
            for (const Arc& a : g.out_adj[u]) {
                if (active[a.to]) continue;
                const double p = m.kind == ModelKind::WC
                                     ? 1.0 / static_cast<double>(g.in_degree(a.to))
                                     : m.phi_scale * a.weight / g.max_weight;
                if (stream.uniform01() < p) successes.emplace_back(u, a.to);
            }
        }
        rng::shuffle(stream, successes);
        frontier.clear();
        for (const auto& [u, v] : successes) {
            if (!active[v]) {
                active[v] = 1;
                frontier.push_back(v);
            }
            c.activations.emplace_back(u, v);
            if (m.kind == ModelKind::DC && g.has_edge(v, u)) {
                if (stream.uniform01() < m.confirm_prob) c.activations.emplace_back(v, u);
            } else if (m.kind == ModelKind::BK && v != g.hub) {
                if (stream.uniform01() < m.bank_prob) {
                    c.activations.emplace_back(v, g.hub);
                    c.activations.emplace_back(g.hub, v);
                }
            }
        }
    }
}

// Linear threshold, round-relaxed: per-cascade thresholds h_v ~ U(0,1) for
// every node, in-weights normalized by each node's total in-weight. A node
// activates when its active in-neighbors' normalized weights reach h_v; its
// in-edges from all pre-round active neighbors are emitted, shuffled per
// round.
template <class R>
void run_cascade_lt(const StaticGraph& g, const ModelSpec& m, R& stream, Cascade& c) {
    const NodeId n = g.node_count;
    std::vector<double> threshold(n);
    for (NodeId v = 0; v < n; ++v) threshold[v] = stream.uniform01();

    std::vector<double> total_in(n, 0.0);
    for (NodeId v = 0; v < n; ++v) total_in[v] = g.total_in_weight(v);

    std::vector<char> active(n, 0);
    for (NodeId s : c.seed_nodes) active[s] = 1;

    std::vector<NodeId> newly;
    std::vector<std::pair<NodeId, NodeId>> emissions;
    for (int round = 0; round < m.rounds; ++round) {
        newly.clear();
        for (NodeId v = 0; v < n; ++v) {
            if (active[v] || g.in_adj[v].empty()) continue;
            double s = 0.0;
            for (const Arc& a : g.in_adj[v])
                if (active[a.to]) s += a.weight;
            if (s / total_in[v] >= threshold[v]) newly.push_back(v);
        }
        if (newly.empty()) break;
        emissions.clear();
        for (NodeId v : newly)
            for (const Arc& a : g.in_adj[v])
                if (active[a.to]) emissions.emplace_back(a.to, v);
        rng::shuffle(stream, emissions);
        c.activations.insert(c.activations.end(), emissions.begin(), emissions.end());
        for (NodeId v : newly) active[v] = 1;
    }
}

// Message model: each frontier node contacts k ~ U{min..max} uniformly
// sampled distinct out-neighbors; each contact goes out and, when the
// reverse edge exists, straight back. A node enters the frontier at most
// once per cascade but can be contacted repeatedly.
template <class R>
void run_cascade_sm(const StaticGraph& g, const ModelSpec& m, R& stream, Cascade& c) {
    std::vector<char> fronted(g.node_count, 0);
    for (NodeId s : c.seed_nodes) fronted[s] = 1;
    std::vector<NodeId> frontier = c.seed_nodes;
    std::vector<NodeId> next, pool;

    const auto span = static_cast<std::uint64_t>(m.friends_max - m.friends_min + 1);
    for (int round = 0; round < m.rounds && !frontier.empty(); ++round) {
        next.clear();
        for (NodeId u : frontier) {
            if (g.out_adj[u].empty()) continue;
            const auto k = static_cast<std::size_t>(
                m.friends_min + static_cast<int>(stream.uniform_below(span)));
            pool.clear();
            for (const Arc& a : g.out_adj[u]) pool.push_back(a.to);
            const auto chosen = rng::sample_without_replacement(stream, pool, k);
            for (NodeId v : chosen) {
                c.activations.emplace_back(u, v);
                if (g.has_edge(v, u)) c.activations.emplace_back(v, u);
                if (!fronted[v]) {
                    fronted[v] = 1;
                    next.push_back(v);
                }
            }
        }
        frontier = next;
    }
}

} // namespace detail

// Runs one cascade: selects seeds from the stream, then dispatches on the
// model kind. Deterministic given (g, m, stream).
template <class R>
Cascade run_cascade(const StaticGraph& g, const ModelSpec& m, R& stream) {
    Cascade c;
    c.seed_nodes = select_seeds(g, m.n_seed_nodes, stream);
    switch (m.kind) {
    case ModelKind::IC:
    case ModelKind::WC:
    case ModelKind::DC:
    case ModelKind::BK:
        detail::run_cascade_family(g, m, stream, c);
        break;
    case ModelKind::LT:
        detail::run_cascade_lt(g, m, stream, c);
        break;
    case ModelKind::SM:
        detail::run_cascade_sm(g, m, stream, c);
        break;
    }
    return c;
}

} // namespace motifdiff
