// temporal.hpp — combining cascades into a temporal network and the
// "src dst t" text format.
//
// Combination walks a single clock: repeatedly pick one of the surviving
// cascades uniformly at random, pop its next activation, advance the clock
// by an Exponential(rate) gap and stamp the edge. Per-cascade order is
// preserved; the interleaving is uniform.

#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "motifdiff/diffusion.hpp"
#include "motifdiff/errors.hpp"
#include "motifdiff/rng.hpp"

namespace motifdiff {

struct TemporalEdge {
    NodeId src = 0;
    NodeId dst = 0;
    double t = 0.0;

    friend bool operator==(const TemporalEdge&, const TemporalEdge&) = default;
};

// Time-stamped edge list, strictly increasing timestamps, t >= 0.
struct TemporalNetwork {
    std::vector<TemporalEdge> edges;
    NodeId node_count = 0;

    friend bool operator==(const TemporalNetwork&, const TemporalNetwork&) = default;
};

template <class R>
TemporalNetwork combine_cascades(const std::vector<Cascade>& cascades, R& stream,
                                 double rate = 3.0) {
    if (!(rate > 0.0)) throw ConfigError("inter-event rate must be > 0");

    struct Live {
        std::size_t cascade;
        std::size_t pos;
    };
    std::vector<Live> live;
    std::size_t total = 0;
    for (std::size_t i = 0; i < cascades.size(); ++i) {
        if (!cascades[i].activations.empty()) {
            live.push_back({i, 0});
            total += cascades[i].activations.size();
        }
    }

    TemporalNetwork tn;
    tn.edges.reserve(total);
    double clock = 0.0;
    NodeId max_node = 0;
    while (!live.empty()) {
        const auto j = static_cast<std::size_t>(stream.uniform_below(live.size()));
        Live& l = live[j];
        const auto [src, dst] = cascades[l.cascade].activations[l.pos++];
        // re-draw gaps that would not move the clock forward
        double gap;
        do {
            gap = rng::exponential(stream, rate);
        } while (clock + gap <= clock);
        clock += gap;
        tn.edges.push_back({src, dst, clock});
        max_node = std::max({max_node, src, dst});
        if (l.pos == cascades[l.cascade].activations.size()) {
            live[j] = live.back();
            live.pop_back();
        }
    }
    tn.node_count = tn.edges.empty() ? 0 : max_node + 1;
    return tn;
}

inline void write_temporal(const TemporalNetwork& tn, std::ostream& out) {
    char buf[96];
    for (const TemporalEdge& e : tn.edges) {
        const int len = std::snprintf(buf, sizeof buf, "%u %u %.17g\n", e.src, e.dst, e.t);
        out.write(buf, len);
    }
}

inline std::string write_temporal(const TemporalNetwork& tn) {
    std::ostringstream out;
    write_temporal(tn, out);
    return out.str();
}

// Parses "src dst t" lines ('#' comments and blank lines allowed) and
// enforces strictly increasing, non-negative timestamps.
inline TemporalNetwork read_temporal(std::istream& in) {
    TemporalNetwork tn;
    std::string line;
    std::size_t line_no = 0;
    double prev_t = -1.0;
    NodeId max_node = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv(line);
        if (auto pos = sv.find('#'); pos != std::string_view::npos) sv = sv.substr(0, pos);
        auto toks = detail::split_ws(sv);
        if (toks.empty()) continue;
        if (toks.size() != 3)
            throw ParseError("expected 'src dst t', got " + std::to_string(toks.size()) +
                                 " tokens",
                             line_no);
        std::uint64_t a = 0, b = 0;
        double t = 0.0;
        if (!detail::parse_u64(toks[0], a) || !detail::parse_u64(toks[1], b))
            throw ParseError("non-numeric node id", line_no);
        if (!detail::parse_double(toks[2], t))
            throw ParseError("non-numeric timestamp", line_no);
        if (t < 0.0) throw ParseError("negative timestamp", line_no);
        if (!(t > prev_t))
            throw ParseError("timestamps must be strictly increasing", line_no);
        prev_t = t;
        tn.edges.push_back({static_cast<NodeId>(a), static_cast<NodeId>(b), t});
        max_node = std::max({max_node, static_cast<NodeId>(a), static_cast<NodeId>(b)});
    }
    tn.node_count = tn.edges.empty() ? 0 : max_node + 1;
    return tn;
}

inline TemporalNetwork read_temporal(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_temporal(in);
}

} // namespace motifdiff
