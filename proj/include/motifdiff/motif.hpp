// motif.hpp — classification and counting of the 36 three-edge, two/three-
// node temporal motifs under an inclusive time window of width delta.
//
// A motif instance is an index-ordered edge triple (e1,e2,e3) whose
// endpoints span at most 3 nodes and whose timestamps satisfy
// t3 - t1 <= delta. The first edge names the roles: u = e1.src, v = e1.dst;
// the later edges are typed over the alphabet
//
//     0: u->v   1: v->u   2: u->w   3: w->u   4: v->w   5: w->v
//
// where w is the unique third node. The motif id is 6*type(e2) + type(e3);
// ids {0,1,6,7} are the two-node classes.
//
// Two counters are provided: count_bruteforce (direct triple enumeration)
// and count_fast (sliding-window dynamic programming over node pairs and
// node triples). They agree exactly on every input.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "motifdiff/errors.hpp"
#include "motifdiff/temporal.hpp"

namespace motifdiff {

inline constexpr int kMotifClasses = 36;

struct MotifVector {
    std::array<std::uint64_t, kMotifClasses> counts{};
    std::array<double, kMotifClasses> normalized{};

    std::uint64_t total() const {
        std::uint64_t s = 0;
        for (auto c : counts) s += c;
        return s;
    }

    friend bool operator==(const MotifVector&, const MotifVector&) = default;
};

// Recomputes the normalized field: counts/sum, or all zeros when the counts
// are all zero. Idempotent.
inline MotifVector normalize(MotifVector v) {
    const std::uint64_t s = v.total();
    for (int i = 0; i < kMotifClasses; ++i)
        v.normalized[i] = s ? static_cast<double>(v.counts[i]) / static_cast<double>(s) : 0.0;
    return v;
}

inline std::string_view edge_type_name(int t) {
    static constexpr std::string_view names[6] = {"u->v", "v->u", "u->w",
                                                  "w->u", "v->w", "w->v"};
    return names[t];
}

// "u->v|w->u" style label for motif id = 6*type(e2) + type(e3).
inline std::string motif_label(int id) {
    return std::string(edge_type_name(id / 6)) + "|" + std::string(edge_type_name(id % 6));
}

// Classifies a time-ordered edge triple; nullopt when the endpoints span
// more than three nodes.
inline std::optional<int> classify_triple(std::pair<NodeId, NodeId> e1,
                                          std::pair<NodeId, NodeId> e2,
                                          std::pair<NodeId, NodeId> e3) {
    const NodeId u = e1.first, v = e1.second;
    bool have_w = false;
    NodeId w = 0;
    for (NodeId x : {e2.first, e2.second, e3.first, e3.second}) {
        if (x == u || x == v) continue;
        if (!have_w) {
            w = x;
            have_w = true;
        } else if (x != w) {
            return std::nullopt;
        }
    }
    auto type_of = [&](std::pair<NodeId, NodeId> e) -> int {
        if (e.first == u) return e.second == v ? 0 : 2;
        if (e.first == v) return e.second == u ? 1 : 4;
        return e.second == u ? 3 : 5;
    };
    return 6 * type_of(e2) + type_of(e3);
}

// Direct enumeration of index-ordered triples inside the window. The
// independent reference for count_fast.
inline MotifVector count_bruteforce(const TemporalNetwork& tn, double delta) {
    if (!(delta > 0.0)) throw ConfigError("delta must be > 0");
    MotifVector out;
    const auto& es = tn.edges;
    const std::size_t n = es.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n && !(es[j].t - es[i].t > delta); ++j) {
            for (std::size_t k = j + 1; k < n && !(es[k].t - es[i].t > delta); ++k) {
                if (auto id = classify_triple({es[i].src, es[i].dst}, {es[j].src, es[j].dst},
                                              {es[k].src, es[k].dst}))
                    ++out.counts[*id];
            }
        }
    }
    return normalize(out);
}

// One letter occurrence on a timeline. seq breaks timestamp ties by
// position (generated networks never tie; external files may).
struct TimelineEntry {
    double t;
    std::uint32_t seq;
    std::uint8_t letter;
};

namespace detail {

// Sliding-window triple counter over an alphabet of L <= 6 letters.
//
// Invariants while scanning: count1[x] = windowed occurrences of x,
// count2[x][y] = index-ordered windowed pairs (x then y), and count3
// accumulates the triples whose last element has been admitted. The window
// keeps exactly the entries usable as a triple's first element, so expiring
// the oldest entry f removes its singleton and the pairs it leads.
class TripleCounter {
public:
    explicit TripleCounter(int alphabet) : alphabet_(alphabet) {}

    // timeline must be ordered by (t, seq); the live window is
    // timeline[head..i], entries older than t_i - delta expire first
    void run(std::span<const TimelineEntry> timeline, double delta) {
        std::fill(count1_.begin(), count1_.end(), 0);
        std::fill(count2_.begin(), count2_.end(), 0);
        std::fill(count3_.begin(), count3_.end(), 0);
        std::size_t head = 0;
        const int L = alphabet_;
        for (std::size_t i = 0; i < timeline.size(); ++i) {
            const TimelineEntry& e = timeline[i];
            while (head < i && e.t - timeline[head].t > delta) {
                const int f = timeline[head].letter;
                ++head;
                --count1_[f];
                for (int x = 0; x < L; ++x) count2_[f * 6 + x] -= count1_[x];
            }
            for (int x = 0; x < L; ++x) {
                const auto c1x = count1_[x];
                for (int y = 0; y < L; ++y)
                    count3_[(x * 6 + y) * 6 + e.letter] += count2_[x * 6 + y];
                count2_[x * 6 + e.letter] += c1x;
            }
            ++count1_[e.letter];
        }
    }

    std::uint64_t triples(int x, int y, int z) const { return count3_[(x * 6 + y) * 6 + z]; }

private:
    int alphabet_;
    std::array<std::uint64_t, 6> count1_{};
    std::array<std::uint64_t, 36> count2_{};
    std::array<std::uint64_t, 216> count3_{};
};

} // namespace detail

// Count tensor over letter triples: tensor[(x*L + y)*L + z] = index-ordered
// triples with letters (x,y,z) and t_last - t_first <= delta.
inline std::vector<std::uint64_t> sequence_count3(std::span<const TimelineEntry> timeline,
                                                  double delta, int alphabet) {
    detail::TripleCounter counter(alphabet);
    counter.run(timeline, delta);
    std::vector<std::uint64_t> tensor(
        static_cast<std::size_t>(alphabet) * alphabet * alphabet, 0);
    for (int x = 0; x < alphabet; ++x)
        for (int y = 0; y < alphabet; ++y)
            for (int z = 0; z < alphabet; ++z)
                tensor[(static_cast<std::size_t>(x) * alphabet + y) * alphabet + z] =
                    counter.triples(x, y, z);
    return tensor;
}

namespace detail {

// Triad alphabet over the sorted node triple (n0,n1,n2): letter 2*p + d
// where p ranks the unordered pair ({n0,n1}, {n0,n2}, {n1,n2}) and d = 0
// for low->high.
inline constexpr std::array<std::pair<int, int>, 6> kTriadLetterEnds = {{
    {0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1},
}};

inline constexpr std::array<int, 6> kTriadLetterMask = {0b011, 0b011, 0b101,
                                                        0b101, 0b110, 0b110};

// kTriadType[x][l]: edge type of letter l when the first edge has letter x.
inline constexpr auto kTriadType = [] {
    std::array<std::array<int, 6>, 6> table{};
    for (int x = 0; x < 6; ++x) {
        const int u = kTriadLetterEnds[x].first;
        const int v = kTriadLetterEnds[x].second;
        const int w = 3 - u - v;
        for (int l = 0; l < 6; ++l) {
            const auto [s, d] = kTriadLetterEnds[l];
            int t = -1;
            if (s == u) t = d == v ? 0 : 2;
            else if (s == v) t = d == u ? 1 : 4;
            else if (s == w) t = d == u ? 3 : 5;
            table[x][l] = t;
        }
    }
    return table;
}();

struct PairTimeline {
    NodeId lo = 0, hi = 0;
    std::vector<TimelineEntry> entries; // letter = 0 for lo->hi, 1 for hi->lo
};

} // namespace detail

// Windowed-DP counter, exactly equal to count_bruteforce on every input.
//
// Pair pass: per unordered node pair, a two-letter timeline of directions
// yields the two-node classes {0,1,6,7}. Triad pass: per connected node
// triple of the static projection, the merged six-letter timeline yields
// the three-node classes; letter triples that do not span all three nodes
// are skipped there, so nothing is counted twice.
inline MotifVector count_fast(const TemporalNetwork& tn, double delta) {
    if (!(delta > 0.0)) throw ConfigError("delta must be > 0");
    MotifVector out;

    // group edges by unordered pair, keep time order
    std::unordered_map<std::uint64_t, std::uint32_t> pair_index;
    std::vector<detail::PairTimeline> pairs;
    pair_index.reserve(tn.edges.size());
    for (std::uint32_t i = 0; i < tn.edges.size(); ++i) {
        const TemporalEdge& e = tn.edges[i];
        const NodeId lo = std::min(e.src, e.dst), hi = std::max(e.src, e.dst);
        const std::uint64_t key = (static_cast<std::uint64_t>(lo) << 32) | hi;
        auto [it, fresh] = pair_index.emplace(key, static_cast<std::uint32_t>(pairs.size()));
        if (fresh) pairs.push_back({lo, hi, {}});
        pairs[it->second].entries.push_back(
            {e.t, i, static_cast<std::uint8_t>(e.src == lo ? 0 : 1)});
    }

    // pair pass
    detail::TripleCounter pair_counter(2);
    for (const auto& p : pairs) {
        pair_counter.run(p.entries, delta);
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                for (int z = 0; z < 2; ++z) {
                    const auto c = pair_counter.triples(x, y, z);
                    if (!c) continue;
                    const int ty = y == x ? 0 : 1;
                    const int tz = z == x ? 0 : 1;
                    out.counts[6 * ty + tz] += c;
                }
    }

    // static projection adjacency
    std::unordered_map<NodeId, std::vector<NodeId>> nbrs;
    for (const auto& p : pairs) {
        nbrs[p.lo].push_back(p.hi);
        nbrs[p.hi].push_back(p.lo);
    }

    // connected triples, deduplicated by sorted id
    std::vector<std::array<NodeId, 3>> triads;
    for (const auto& p : pairs) {
        for (NodeId third : {p.lo, p.hi}) {
            for (NodeId c : nbrs[third]) {
                if (c == p.lo || c == p.hi) continue;
                std::array<NodeId, 3> t = {p.lo, p.hi, c};
                std::sort(t.begin(), t.end());
                triads.push_back(t);
            }
        }
    }
    std::sort(triads.begin(), triads.end());
    triads.erase(std::unique(triads.begin(), triads.end()), triads.end());

    // triad pass
    detail::TripleCounter triad_counter(6);
    std::vector<TimelineEntry> merged;
    auto pair_of = [&](NodeId a, NodeId b) -> const detail::PairTimeline* {
        const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
        auto it = pair_index.find(key);
        return it == pair_index.end() ? nullptr : &pairs[it->second];
    };
    for (const auto& t : triads) {
        const detail::PairTimeline* slot[3] = {pair_of(t[0], t[1]), pair_of(t[0], t[2]),
                                               pair_of(t[1], t[2])};
        merged.clear();
        std::size_t cursor[3] = {0, 0, 0};
        for (;;) {
            int best = -1;
            for (int s = 0; s < 3; ++s) {
                if (!slot[s] || cursor[s] >= slot[s]->entries.size()) continue;
                if (best < 0) {
                    best = s;
                    continue;
                }
                const auto& a = slot[s]->entries[cursor[s]];
                const auto& b = slot[best]->entries[cursor[best]];
                if (a.t < b.t || (a.t == b.t && a.seq < b.seq)) best = s;
            }
            if (best < 0) break;
            TimelineEntry e = slot[best]->entries[cursor[best]++];
            e.letter = static_cast<std::uint8_t>(2 * best + e.letter);
            merged.push_back(e);
        }
        triad_counter.run(merged, delta);
        for (int x = 0; x < 6; ++x)
            for (int y = 0; y < 6; ++y)
                for (int z = 0; z < 6; ++z) {
                    const auto c = triad_counter.triples(x, y, z);
                    if (!c) continue;
                    if ((detail::kTriadLetterMask[x] | detail::kTriadLetterMask[y] |
                         detail::kTriadLetterMask[z]) != 0b111)
                        continue;
                    out.counts[6 * detail::kTriadType[x][y] + detail::kTriadType[x][z]] += c;
                }
    }

    return normalize(out);
}

} // namespace motifdiff
