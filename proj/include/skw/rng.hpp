#pragma once

#include "skw/series.hpp"

#include <random>

namespace skw {

// Deterministic sampling. Raw mt19937_64 output is pinned by the standard;
// std::uniform_int_distribution is not, so draws go through modulo reduction.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next(std::uint64_t bound) { return bound ? eng_() % bound : 0; }

    Vec element(const CoeffRing& r) {
        Vec v(r.rank);
        for (auto& x : v) x = next(r.zm.m);
        return v;
    }

    SkewSeries series(const SkewPtr& s, Form f, unsigned T) {
        std::vector<Vec> c;
        c.reserve(T);
        for (unsigned i = 0; i < T; ++i) c.push_back(element(*s->ring));
        return SkewSeries::from_coeffs(s, std::move(c), f, T);
    }

  private:
    std::mt19937_64 eng_;
};

// Stable per-check seed derivation (FNV-1a of the label mixed into the seed).
inline std::uint64_t derive_seed(std::uint64_t base, const std::string& label) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : label) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return base ^ h;
}

} // namespace skw
