#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace skw {

// Arithmetic context for Z/p^n. Moduli are small (desk scale), entries are
// kept reduced in [0, p^n).
struct Zmod {
    std::uint64_t p = 0;
    unsigned n = 0;
    std::uint64_t m = 0; // p^n

    Zmod() = default;
    Zmod(std::uint64_t p_, unsigned n_) : p(p_), n(n_), m(1) {
        if (n_ == 0) throw std::invalid_argument("Zmod: n must be >= 1");
        for (unsigned i = 0; i < n_; ++i) {
            if (m > (std::uint64_t(1) << 31) / p_)
                throw std::invalid_argument("Zmod: p^n too large");
            m *= p_;
        }
    }

    std::uint64_t red(std::uint64_t x) const { return x % m; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % m; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + m - b % m) % m; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % m; }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : m - a; }

    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1 % m;
        a %= m;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    // p-adic valuation of a in [0, p^n); val(0) = n by convention.
    unsigned val(std::uint64_t a) const {
        if (a == 0) return n;
        unsigned v = 0;
        while (a % p == 0) { a /= p; ++v; }
        return v;
    }

    std::uint64_t p_pow(unsigned e) const {
        std::uint64_t r = 1;
        for (unsigned i = 0; i < e && i < n; ++i) r *= p;
        return e >= n ? m : r;
    }

    bool is_unit(std::uint64_t a) const { return a % p != 0; }

    // Inverse of a unit mod p^n (extended Euclid).
    std::uint64_t inv(std::uint64_t a) const {
        a %= m;
        if (!is_unit(a)) throw std::domain_error("Zmod::inv: not a unit: " + std::to_string(a));
        std::int64_t t0 = 0, t1 = 1;
        std::int64_t r0 = static_cast<std::int64_t>(m), r1 = static_cast<std::int64_t>(a);
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            std::int64_t tmp = r0 - q * r1; r0 = r1; r1 = tmp;
            tmp = t0 - q * t1; t0 = t1; t1 = tmp;
        }
        if (t0 < 0) t0 += static_cast<std::int64_t>(m);
        return static_cast<std::uint64_t>(t0);
    }

    bool operator==(const Zmod& o) const { return p == o.p && n == o.n; }
};

inline bool is_prime_u64(std::uint64_t x) {
    if (x < 2) return false;
    for (std::uint64_t d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

} // namespace skw
