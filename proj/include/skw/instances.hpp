#pragma once

#include "skw/series.hpp"

#include <optional>

namespace skw {

// Exact oracle for the Iwasawa-type instances: the group algebra
// (Z/p^n)[C_q x| C_g] with conjugation gamma h gamma^-1 = h^c. Elements are
// coefficient vectors indexed by h^i gamma^j at i*g + j.
class GroupOracle {
  public:
    GroupOracle(std::uint64_t p, unsigned n, std::uint64_t q, std::uint64_t g, std::uint64_t c);

    std::size_t dim() const { return static_cast<std::size_t>(q_ * g_); }
    const Zmod& zm() const { return zm_; }
    std::uint64_t q() const { return q_; }
    std::uint64_t g() const { return g_; }

    Vec zero() const { return Vec(dim(), 0); }
    Vec one() const;
    Vec monomial(std::uint64_t i, std::uint64_t j) const; // h^i gamma^j
    Vec mul(const Vec& a, const Vec& b) const;
    Vec add(const Vec& a, const Vec& b) const { return vec_add(zm_, a, b); }

    Vec t() const; // gamma - 1
    Vec embed_ring(const Vec& a) const;      // (Z/p^n)[C_q] coefficient vector
    Vec embed_series(const SkewSeries& x) const; // sum a_k t^k (left form)

  private:
    std::uint64_t q_, g_, c_;
    Zmod zm_;
    std::vector<std::uint64_t> conj_pow_; // c^j mod q
};

// A fully validated built-in instance.
struct Instance {
    std::string name;
    RingPtr ring;
    SkewPtr skew;
    unsigned t_prec = 0;
    std::shared_ptr<const GroupOracle> oracle; // IWA-family only
};

struct InstanceOverrides {
    std::optional<std::uint64_t> u;      // PX/PXN sigma unit
    std::optional<unsigned> t_prec;
    std::optional<unsigned> p_prec;      // ZPT only
    std::optional<std::uint64_t> conj;   // IWA conjugation exponent
};

// The named instances TRIV, PX, PXN, IWA, ZPT used throughout the suites.
Instance builtin_instance(const std::string& name, const InstanceOverrides& ov = {});

// Iwasawa-type generator: R = (Z/p)[C_{p^a}], sigma(h) = h^c,
// delta = sigma - id, t-precision p^b; requires c^(p^b) = 1 mod p^a.
Instance iwasawa_instance(std::uint64_t p, unsigned a, unsigned b, std::uint64_t c);

// F_3 x F_3 with the swap automorphism and delta = sigma - id; the standard
// non-nilpotent counterexample.
Instance f3xf3_swap_instance();

// Instance description document (External Interfaces format). Parses either
// a builtin name or a JSON spec; serializes bit-exactly.
struct InstanceSpec {
    std::string json_text; // canonical serialized form
    Instance built;
    std::uint64_t seed = 1;
};
InstanceSpec parse_instance_spec(const std::string& json_text);

} // namespace skw
