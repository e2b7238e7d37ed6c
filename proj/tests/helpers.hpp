// helpers.hpp — shared generators and reference oracles for the test suite.
// Everything here is deliberately simple and independent of the library's
// fast paths.

#pragma once

#include <cstdint>
#include <vector>

#include "motifdiff/motif.hpp"
#include "motifdiff/rng.hpp"
#include "motifdiff/temporal.hpp"

namespace testutil {

using motifdiff::NodeId;
using motifdiff::TemporalNetwork;
using motifdiff::TimelineEntry;

// Random temporal network: up to max_nodes nodes, exactly n_edges edges,
// strictly increasing timestamps. Small node pools make pair/triad activity
// dense.
inline TemporalNetwork random_tn(motifdiff::rng::Stream& s, NodeId max_nodes,
                                 std::size_t n_edges) {
    TemporalNetwork tn;
    const NodeId n = 2 + static_cast<NodeId>(s.uniform_below(max_nodes - 1));
    tn.node_count = n;
    double t = 0.0;
    for (std::size_t i = 0; i < n_edges; ++i) {
        const NodeId a = static_cast<NodeId>(s.uniform_below(n));
        NodeId b = static_cast<NodeId>(s.uniform_below(n - 1));
        if (b >= a) ++b;
        t += 0.01 + s.uniform01();
        tn.edges.push_back({a, b, t});
    }
    return tn;
}

// O(n^3) reference for sequence_count3.
inline std::vector<std::uint64_t> enumerate_triples(const std::vector<TimelineEntry>& tl,
                                                    double delta, int alphabet) {
    std::vector<std::uint64_t> tensor(
        static_cast<std::size_t>(alphabet) * alphabet * alphabet, 0);
    for (std::size_t i = 0; i < tl.size(); ++i)
        for (std::size_t j = i + 1; j < tl.size(); ++j)
            for (std::size_t k = j + 1; k < tl.size(); ++k)
                if (!(tl[k].t - tl[i].t > delta))
                    ++tensor[(static_cast<std::size_t>(tl[i].letter) * alphabet +
                              tl[j].letter) *
                                 alphabet +
                             tl[k].letter];
    return tensor;
}

// Stream stub whose draws are all-zero: uniform01() = 0, uniform_below = 0.
// Makes every Bernoulli trial succeed, every threshold 0, every pick the
// first element.
struct ZeroStream {
    double uniform01() { return 0.0; }
    std::uint64_t uniform_below(std::uint64_t) { return 0; }
    bool bernoulli(double p) { return 0.0 < p; }
};

} // namespace testutil
