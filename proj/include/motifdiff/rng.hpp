// rng.hpp — deterministic, path-keyed random streams.
//
// Every random draw in the toolkit flows through a Stream obtained from a
// derivation path (a list of tags and integers). The same path always yields
// the same stream; distinct paths yield streams with distinct increments, so
// their states never coincide. No global or time-based seeding anywhere.

#pragma once

#include <array>
#include <cstdint>
#include <cmath>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace motifdiff::rng {

// Stafford variant 13 of the 64-bit finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

// FNV-1a, used to fold string tags into derivation keys.
constexpr std::uint64_t hash_tag(std::string_view s) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Add-gamma counter generator (the SplittableRandom scheme): state advances
// by a per-stream odd increment, outputs are the mixed state. A stream is
// the pair (state, gamma); streams with different gammas can never share
// state in the (position, gamma) sense.
class Stream {
public:
    Stream() : Stream(0) {}

    explicit Stream(std::uint64_t key)
        : state_(mix64(key)),
          gamma_(mix64(key + kGoldenGamma) | 1ULL) {}

    std::uint64_t next_u64() noexcept {
        state_ += gamma_;
        return mix64(state_);
    }

    // Uniform on [0,1) with 53 random bits.
    double uniform01() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Unbiased integer in [0, n). n must be >= 1.
    std::uint64_t uniform_below(std::uint64_t n) noexcept {
        unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * n;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < n) {
            const std::uint64_t cutoff = (0 - n) % n;
            while (lo < cutoff) {
                m = static_cast<unsigned __int128>(next_u64()) * n;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    bool bernoulli(double p) noexcept { return uniform01() < p; }

private:
    std::uint64_t state_;
    std::uint64_t gamma_;
};

// Components of a derivation path: either a string tag or an integer.
struct PathPart {
    std::uint64_t value;
    PathPart(std::string_view tag) : value(hash_tag(tag)) {}
    PathPart(const std::string& tag) : value(hash_tag(tag)) {}
    PathPart(const char* tag) : value(hash_tag(tag)) {}
    PathPart(std::uint64_t v) : value(mix64(v + 0x6a09e667f3bcc909ULL)) {}
    PathPart(int v) : PathPart(static_cast<std::uint64_t>(v)) {}
};

inline std::uint64_t derive_key(std::initializer_list<PathPart> path) noexcept {
    std::uint64_t h = 0x243f6a8885a308d3ULL;
    for (const PathPart& p : path) h = mix64(h ^ p.value) + kGoldenGamma;
    return h;
}

inline Stream derive_stream(std::initializer_list<PathPart> path) noexcept {
    return Stream(derive_key(path));
}

// Exponential with density rate*exp(-rate*x). A draw of exactly zero is
// re-drawn so downstream clocks stay strictly increasing.
template <class R>
double exponential(R& r, double rate) {
    for (;;) {
        const double g = -std::log1p(-r.uniform01()) / rate;
        if (g > 0.0) return g;
    }
}

// In-place Fisher-Yates.
template <class R, class T>
void shuffle(R& r, std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(r.uniform_below(i));
        std::swap(v[i - 1], v[j]);
    }
}

// k distinct elements from pool, uniformly, in draw order. Consumes pool.
template <class R, class T>
std::vector<T> sample_without_replacement(R& r, std::vector<T> pool, std::size_t k) {
    if (k > pool.size()) k = pool.size();
    std::vector<T> out;
    out.reserve(k);
    std::size_t n = pool.size();
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = static_cast<std::size_t>(r.uniform_below(n - i));
        out.push_back(pool[j]);
        std::swap(pool[j], pool[n - i - 1]);
    }
    return out;
}

// Root of the harness RNG hierarchy. Paths are keyed by content (tags and
// values), never by list position, so adding or removing one job leaves all
// other jobs' streams untouched.
class Hierarchy {
public:
    explicit Hierarchy(std::uint64_t master_seed) : master_seed_(master_seed) {}

    std::uint64_t master_seed() const noexcept { return master_seed_; }

    Stream derive(std::initializer_list<PathPart> path) const noexcept {
        std::uint64_t h = mix64(master_seed_ ^ 0x452821e638d01377ULL);
        for (const PathPart& p : path) h = mix64(h ^ p.value) + kGoldenGamma;
        return Stream(h);
    }

private:
    std::uint64_t master_seed_;
};

} // namespace motifdiff::rng
