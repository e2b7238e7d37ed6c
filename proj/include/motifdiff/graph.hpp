// graph.hpp — static directed graphs: edge-list parsing, synthetic
// generators, and summary stats. Graphs are immutable once built and safe
// to share across threads.

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "motifdiff/errors.hpp"
#include "motifdiff/rng.hpp"

namespace motifdiff {

using NodeId = std::uint32_t;

struct Edge {
    NodeId src = 0;
    NodeId dst = 0;
    double weight = 1.0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Arc {
    NodeId to = 0;      // dst for out_adj, src for in_adj
    double weight = 1.0;
};

// Directed weighted graph with contiguous node ids. out_adj/in_adj mirror
// the edge list exactly (sorted by neighbor id per node); hub is a node of
// maximal total degree, smallest id on ties. No self-loops, no duplicate
// (src,dst) pairs.
struct StaticGraph {
    NodeId node_count = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<Arc>> out_adj;
    std::vector<std::vector<Arc>> in_adj;
    NodeId hub = 0;
    double max_weight = 1.0; // max edge weight, 1.0 when there are no edges

    std::size_t out_degree(NodeId v) const { return out_adj[v].size(); }
    std::size_t in_degree(NodeId v) const { return in_adj[v].size(); }
    std::size_t degree(NodeId v) const { return out_degree(v) + in_degree(v); }

    bool has_edge(NodeId u, NodeId v) const {
        const auto& adj = out_adj[u];
        auto it = std::lower_bound(adj.begin(), adj.end(), v,
                                   [](const Arc& a, NodeId x) { return a.to < x; });
        return it != adj.end() && it->to == v;
    }

    double total_in_weight(NodeId v) const {
        double s = 0.0;
        for (const Arc& a : in_adj[v]) s += a.weight;
        return s;
    }

    friend bool operator==(const StaticGraph& a, const StaticGraph& b) {
        return a.node_count == b.node_count && a.edges == b.edges;
    }
};

namespace detail {

// Assembles adjacency, hub and max_weight from a deduplicated edge list.
inline StaticGraph finish_graph(NodeId node_count, std::vector<Edge> edges) {
    StaticGraph g;
    g.node_count = node_count;
    g.edges = std::move(edges);
    g.out_adj.assign(node_count, {});
    g.in_adj.assign(node_count, {});
    g.max_weight = 0.0;
    for (const Edge& e : g.edges) {
        g.out_adj[e.src].push_back({e.dst, e.weight});
        g.in_adj[e.dst].push_back({e.src, e.weight});
        g.max_weight = std::max(g.max_weight, e.weight);
    }
    if (g.edges.empty()) g.max_weight = 1.0;
    for (auto& adj : g.out_adj)
        std::sort(adj.begin(), adj.end(), [](const Arc& a, const Arc& b) { return a.to < b.to; });
    for (auto& adj : g.in_adj)
        std::sort(adj.begin(), adj.end(), [](const Arc& a, const Arc& b) { return a.to < b.to; });
    g.hub = 0;
    std::size_t best = 0;
    for (NodeId v = 0; v < node_count; ++v) {
        if (g.degree(v) > best) {
            best = g.degree(v);
            g.hub = v;
        }
    }
    return g;
}

inline bool parse_u64(std::string_view tok, std::uint64_t& out) {
    if (tok.empty()) return false;
    std::uint64_t v = 0;
    for (char c : tok) {
        if (c < '0' || c > '9') return false;
        const std::uint64_t d = static_cast<std::uint64_t>(c - '0');
        if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) return false;
        v = v * 10 + d;
    }
    out = v;
    return true;
}

inline bool parse_double(std::string_view tok, double& out) {
    std::string buf(tok);
    char* end = nullptr;
    const double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size()) return false;
    out = v;
    return true;
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) toks.push_back(line.substr(i, j - i));
        i = j;
    }
    return toks;
}

} // namespace detail

// Parses whitespace-separated edge-list text: "src dst" or "src dst weight"
// per line, '#' starts a comment. Node labels are arbitrary non-negative
// integers and get remapped to contiguous ids in first-appearance order.
// Self-loops are dropped, duplicate (src,dst) pairs keep the first weight.
// With directed=false every line yields both directions.
//
// A comment of the exact form "# nodes <n>" (written by serialize_edge_list)
// pins the node count and keeps labels as-is, so serialized graphs survive a
// round trip even with isolated nodes or non-appearance-ordered ids.
inline StaticGraph parse_edge_list(std::istream& in, bool directed = true) {
    std::unordered_map<std::uint64_t, NodeId> remap;
    std::unordered_set<std::uint64_t> seen_pairs;
    std::vector<Edge> edges;
    std::optional<std::uint64_t> pinned_nodes;
    std::string line;
    std::size_t line_no = 0;
    bool any_data = false;

    auto map_node = [&](std::uint64_t label) -> NodeId {
        if (pinned_nodes) {
            if (label >= *pinned_nodes)
                throw ParseError("node label " + std::to_string(label) +
                                     " out of range for pinned node count " +
                                     std::to_string(*pinned_nodes),
                                 line_no);
            return static_cast<NodeId>(label);
        }
        auto [it, fresh] = remap.emplace(label, static_cast<NodeId>(remap.size()));
        (void)fresh;
        return it->second;
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv(line);
        if (auto pos = sv.find('#'); pos != std::string_view::npos) {
            // recognize the serializer's "# nodes <n>" directive
            auto toks = detail::split_ws(sv.substr(pos + 1));
            if (toks.size() == 2 && toks[0] == "nodes" && !any_data) {
                std::uint64_t n = 0;
                if (detail::parse_u64(toks[1], n)) pinned_nodes = n;
            }
            sv = sv.substr(0, pos);
        }
        auto toks = detail::split_ws(sv);
        if (toks.empty()) continue;
        if (toks.size() != 2 && toks.size() != 3)
            throw ParseError("expected 'src dst' or 'src dst weight', got " +
                                 std::to_string(toks.size()) + " tokens",
                             line_no);
        std::uint64_t a = 0, b = 0;
        if (!detail::parse_u64(toks[0], a) || !detail::parse_u64(toks[1], b))
            throw ParseError("non-numeric node label", line_no);
        double w = 1.0;
        if (toks.size() == 3) {
            if (!detail::parse_double(toks[2], w))
                throw ParseError("non-numeric weight", line_no);
            if (!(w > 0.0))
                throw ParseError("weight must be positive", line_no);
        }
        any_data = true;
        if (a == b) continue; // self-loop
        const NodeId u = map_node(a);
        const NodeId v = map_node(b);
        auto add = [&](NodeId s, NodeId d) {
            const std::uint64_t key = (static_cast<std::uint64_t>(s) << 32) | d;
            if (seen_pairs.insert(key).second) edges.push_back({s, d, w});
        };
        add(u, v);
        if (!directed) add(v, u);
    }
    if (!any_data && !pinned_nodes) throw ParseError("empty graph");

    const NodeId n = pinned_nodes ? static_cast<NodeId>(*pinned_nodes)
                                  : static_cast<NodeId>(remap.size());
    return detail::finish_graph(n, std::move(edges));
}

inline StaticGraph parse_edge_list(std::string_view text, bool directed = true) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in, directed);
}

// Writes edges in stored order, one "src dst weight" line each, preceded by
// a "# nodes <n>" directive so parse_edge_list reproduces the graph exactly.
inline void serialize_edge_list(const StaticGraph& g, std::ostream& out) {
    out << "# nodes " << g.node_count << "\n";
    char buf[64];
    for (const Edge& e : g.edges) {
        const int len = std::snprintf(buf, sizeof buf, "%u %u %.17g\n", e.src, e.dst, e.weight);
        out.write(buf, len);
    }
}

inline std::string serialize_edge_list(const StaticGraph& g) {
    std::ostringstream out;
    serialize_edge_list(g, out);
    return out.str();
}

enum class SyntheticKind { erdos_renyi, preferential_attachment, ring_lattice };

// Synthetic substrates. Structural links are undirected and emitted in both
// directions with weight 1. Deterministic given (kind, n, param, stream).
template <class R>
StaticGraph generate_synthetic(SyntheticKind kind, NodeId n, double param, R& stream) {
    if (n < 2) throw ConfigError("synthetic graph needs n >= 2");
    std::vector<Edge> edges;
    auto link = [&](NodeId a, NodeId b) {
        edges.push_back({a, b, 1.0});
        edges.push_back({b, a, 1.0});
    };
    switch (kind) {
    case SyntheticKind::erdos_renyi: {
        if (!(param > 0.0 && param < 1.0))
            throw ConfigError("erdos_renyi edge probability must be in (0,1)");
        for (NodeId i = 0; i < n; ++i)
            for (NodeId j = i + 1; j < n; ++j)
                if (stream.uniform01() < param) link(i, j);
        break;
    }
    case SyntheticKind::preferential_attachment: {
        const auto m = static_cast<NodeId>(param);
        if (!(param >= 1.0) || static_cast<double>(m) != param)
            throw ConfigError("preferential_attachment needs an integer edges-per-node >= 1");
        if (m >= n) throw ConfigError("preferential_attachment needs param < n");
        // Each new node attaches to m distinct existing nodes, picked with
        // probability proportional to degree+1.
        std::vector<std::uint64_t> deg(n, 0);
        for (NodeId i = m; i < n; ++i) {
            std::uint64_t total = 0; // sum of deg+1 over existing nodes
            for (NodeId v = 0; v < i; ++v) total += deg[v] + 1;
            std::vector<NodeId> targets;
            while (targets.size() < m) {
                std::uint64_t pick = stream.uniform_below(total);
                NodeId t = 0;
                for (NodeId v = 0; v < i; ++v) {
                    const std::uint64_t wv = deg[v] + 1;
                    if (pick < wv) {
                        t = v;
                        break;
                    }
                    pick -= wv;
                }
                if (std::find(targets.begin(), targets.end(), t) == targets.end())
                    targets.push_back(t);
            }
            for (NodeId t : targets) {
                link(i, t);
                ++deg[i];
                ++deg[t];
            }
        }
        break;
    }
    case SyntheticKind::ring_lattice: {
        const auto k = static_cast<NodeId>(param);
        if (!(param >= 1.0) || static_cast<double>(k) != param)
            throw ConfigError("ring_lattice needs an integer half-bandwidth >= 1");
        if (2 * k + 1 > n) throw ConfigError("ring_lattice half-bandwidth too large for n");
        for (NodeId i = 0; i < n; ++i)
            for (NodeId d = 1; d <= k; ++d) link(i, (i + d) % n);
        break;
    }
    }
    return detail::finish_graph(n, std::move(edges));
}

inline std::optional<SyntheticKind> synthetic_kind_from(std::string_view s) {
    if (s == "erdos_renyi" || s == "er") return SyntheticKind::erdos_renyi;
    if (s == "preferential_attachment" || s == "pa") return SyntheticKind::preferential_attachment;
    if (s == "ring_lattice" || s == "ring") return SyntheticKind::ring_lattice;
    return std::nullopt;
}

// Builds a graph from a synthetic spec string "kind:n:param". The stream is
// derived from the spec contents alone, so the same string names the same
// graph everywhere.
inline StaticGraph graph_from_spec(std::string_view spec) {
    const auto c1 = spec.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : spec.find(':', c1 + 1);
    if (c2 == std::string_view::npos)
        throw ConfigError("bad synthetic graph spec '" + std::string(spec) +
                          "' (want kind:n:param)");
    const auto kind = synthetic_kind_from(spec.substr(0, c1));
    if (!kind)
        throw ConfigError("unknown synthetic graph kind '" +
                          std::string(spec.substr(0, c1)) + "'");
    std::uint64_t n = 0;
    double param = 0.0;
    if (!detail::parse_u64(spec.substr(c1 + 1, c2 - c1 - 1), n))
        throw ConfigError("bad node count in graph spec '" + std::string(spec) + "'");
    if (!detail::parse_double(spec.substr(c2 + 1), param))
        throw ConfigError("bad param in graph spec '" + std::string(spec) + "'");
    std::uint64_t param_bits;
    static_assert(sizeof param_bits == sizeof param);
    std::memcpy(&param_bits, &param, sizeof param);
    auto stream = rng::derive_stream(
        {"graph", spec.substr(0, c1), n, param_bits});
    return generate_synthetic(*kind, static_cast<NodeId>(n), param, stream);
}

struct GraphStats {
    std::uint64_t nodes = 0;
    std::uint64_t edges = 0;
    std::uint64_t max_degree = 0;
    NodeId hub = 0;

    friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

inline GraphStats graph_stats(const StaticGraph& g) {
    GraphStats s;
    s.nodes = g.node_count;
    s.edges = g.edges.size();
    for (NodeId v = 0; v < g.node_count; ++v)
        s.max_degree = std::max<std::uint64_t>(s.max_degree, g.degree(v));
    s.hub = g.hub;
    return s;
}

} // namespace motifdiff
