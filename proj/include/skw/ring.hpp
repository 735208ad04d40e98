#pragma once

#include "skw/howell.hpp"

#include <memory>
#include <string>

namespace skw {

// Validation failure with a machine-readable witness.
struct ValidationError : std::runtime_error {
    ValidationError(const std::string& what, std::string witness_ = {})
        : std::runtime_error(what), witness(std::move(witness_)) {}
    std::string witness;
};

enum class RingKind { Modular, TruncatedPoly, GroupAlgebra, Custom };

// A finite coefficient ring: free Z/p^n-module with structure constants,
// distinguished Jacobson radical generators, and enough introspection for
// exhaustive checks at desk scale.
class CoeffRing {
  public:
    static constexpr std::uint64_t kDefaultEnumBound = 59049; // 3^10

    Zmod zm;
    std::size_t rank = 0;
    RingKind kind = RingKind::Custom;
    std::vector<std::string> labels;
    std::vector<Vec> jac_gens;
    unsigned jac_index = 0; // least k with Jac^k = 0

    std::size_t gen_index = 0;   // X or h for the structured kinds
    std::uint64_t gen_order = 0; // X^N = 0 / h^q = 1 parameter

    Vec zero() const { return Vec(rank, 0); }
    Vec one() const {
        Vec v(rank, 0);
        v[0] = 1 % zm.m;
        return v;
    }
    Vec basis(std::size_t i) const {
        Vec v(rank, 0);
        v[i] = 1 % zm.m;
        return v;
    }

    Vec mul(const Vec& a, const Vec& b) const {
        Vec r(rank, 0);
        for (std::size_t i = 0; i < rank; ++i) {
            if (!a[i]) continue;
            for (std::size_t j = 0; j < rank; ++j) {
                if (!b[j]) continue;
                std::uint64_t c = zm.mul(a[i], b[j]);
                const std::uint64_t* s = &sc_[(i * rank + j) * rank];
                for (std::size_t k = 0; k < rank; ++k)
                    if (s[k]) r[k] = (r[k] + c * s[k]) % zm.m;
            }
        }
        return r;
    }
    Vec add(const Vec& a, const Vec& b) const { return vec_add(zm, a, b); }
    Vec sub(const Vec& a, const Vec& b) const { return vec_sub(zm, a, b); }
    Vec scale(const Vec& a, std::uint64_t c) const { return vec_scale(zm, a, c); }
    Vec neg(const Vec& a) const { return vec_scale(zm, a, zm.m - 1); }

    Vec pow_elt(Vec a, std::uint64_t e) const {
        Vec r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    Mat left_mul(const Vec& a) const {
        Mat m(rank, rank, zm);
        for (std::size_t j = 0; j < rank; ++j) {
            Vec col = mul(a, basis(j));
            for (std::size_t k = 0; k < rank; ++k) m(k, j) = col[k];
        }
        return m;
    }
    Mat right_mul(const Vec& a) const {
        Mat m(rank, rank, zm);
        for (std::size_t j = 0; j < rank; ++j) {
            Vec col = mul(basis(j), a);
            for (std::size_t k = 0; k < rank; ++k) m(k, j) = col[k];
        }
        return m;
    }

    bool is_unit(const Vec& a) const;
    Vec unit_inverse(const Vec& a) const; // throws if not a unit

    // Two-sided ideal generated by gens (closure under basis multiplication).
    Submodule ideal(const std::vector<Vec>& gens) const;
    Submodule jac() const { return ideal(jac_gens); }
    Submodule jac_power(unsigned k) const;
    Submodule full() const { return Submodule::full(rank, zm); }

    // Additive span of pairwise products, as 2-sided ideals would multiply.
    Submodule ideal_product(const Submodule& a, const Submodule& b) const;

    // log_p of |R|.
    unsigned card_exp() const { return zm.n * static_cast<unsigned>(rank); }
    bool enumerable(std::uint64_t bound = kDefaultEnumBound) const;
    std::vector<Vec> enumerate(std::uint64_t bound = kDefaultEnumBound) const;

    std::string show(const Vec& a) const;

  private:
    friend class RingBuilder;
    std::vector<std::uint64_t> sc_; // e_i e_j = sum_k sc[(i r + j) r + k] e_k
    std::vector<Submodule> jac_powers_; // filled at construction, 0..jac_index
};

using RingPtr = std::shared_ptr<const CoeffRing>;

// Built-in ring constructors. Each validates associativity/unitality on all
// basis triples (complete by bilinearity), computes the Jacobson nilpotency
// index and certifies R/Jac where the kind promises a field.
RingPtr make_modular_ring(std::uint64_t p, unsigned n);
RingPtr make_truncated_poly_ring(std::uint64_t p, unsigned n, std::size_t N);
RingPtr make_group_algebra_ring(std::uint64_t p, unsigned n, std::uint64_t cyclic_order);
// Custom structure constants (used for e.g. F_3 x F_3); jac_gens may be empty.
RingPtr make_custom_ring(std::uint64_t p, unsigned n, std::size_t rank,
                         std::vector<std::string> labels, std::vector<std::uint64_t> sc,
                         std::vector<Vec> jac_gens);

} // namespace skw
