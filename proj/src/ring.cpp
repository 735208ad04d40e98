#include "skw/ring.hpp"

#include <sstream>

namespace skw {

bool CoeffRing::is_unit(const Vec& a) const {
    try {
        left_mul(a).inverse();
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

Vec CoeffRing::unit_inverse(const Vec& a) const {
    Mat inv = left_mul(a).inverse();
    Vec r = inv.apply(one());
    // a * r = 1; for our rings left inverses are two-sided, but verify.
    if (mul(a, r) != one() || mul(r, a) != one())
        throw ValidationError("unit_inverse: one-sided inverse only", show(a));
    return r;
}

Submodule CoeffRing::ideal(const std::vector<Vec>& gens) const {
    Submodule cur = Submodule::span(gens, rank, zm);
    for (;;) {
        std::vector<Vec> next;
        for (std::size_t i = 0; i < cur.basis().rows(); ++i) {
            Vec g = cur.basis().row(i);
            next.push_back(g);
            for (std::size_t b = 0; b < rank; ++b) {
                next.push_back(mul(basis(b), g));
                next.push_back(mul(g, basis(b)));
            }
        }
        Submodule grown = Submodule::span(next, rank, zm);
        if (grown == cur) return cur;
        cur = grown;
    }
}

Submodule CoeffRing::ideal_product(const Submodule& a, const Submodule& b) const {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < a.basis().rows(); ++i)
        for (std::size_t j = 0; j < b.basis().rows(); ++j)
            gens.push_back(mul(a.basis().row(i), b.basis().row(j)));
    return Submodule::span(gens, rank, zm);
}

Submodule CoeffRing::jac_power(unsigned k) const {
    // The table is filled once at construction (certify_jac), keeping the
    // value immutable and safe to share across threads.
    if (k < jac_powers_.size()) return jac_powers_[k];
    return Submodule::zero(rank, zm);
}

bool CoeffRing::enumerable(std::uint64_t bound) const {
    long double total = 1;
    for (unsigned i = 0; i < card_exp(); ++i) {
        total *= static_cast<long double>(zm.p);
        if (total > static_cast<long double>(bound)) return false;
    }
    return true;
}

std::vector<Vec> CoeffRing::enumerate(std::uint64_t bound) const {
    if (!enumerable(bound))
        throw ValidationError("CoeffRing::enumerate: cardinality exceeds bound");
    std::vector<Vec> out;
    Vec v(rank, 0);
    for (;;) {
        out.push_back(v);
        std::size_t i = 0;
        while (i < rank) {
            v[i] = (v[i] + 1) % zm.m;
            if (v[i] != 0) break;
            ++i;
        }
        if (i == rank) break;
    }
    return out;
}

std::string CoeffRing::show(const Vec& a) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < rank; ++i) {
        if (!a[i]) continue;
        if (!first) os << " + ";
        first = false;
        if (a[i] != 1 || labels[i] == "1") os << a[i];
        if (labels[i] != "1") {
            if (a[i] != 1) os << "*";
            os << labels[i];
        }
    }
    if (first) os << "0";
    return os.str();
}

class RingBuilder {
  public:
    static RingPtr build(std::uint64_t p, unsigned n, std::size_t rank, RingKind kind,
                         std::vector<std::string> labels, std::vector<std::uint64_t> sc,
                         std::vector<Vec> jac_gens, std::size_t gen_index,
                         std::uint64_t gen_order) {
        if (!is_prime_u64(p)) throw ValidationError("make_ring: p is not prime", std::to_string(p));
        if (rank == 0) throw ValidationError("make_ring: zero rank");
        auto r = std::make_shared<CoeffRing>();
        r->zm = Zmod(p, n);
        r->rank = rank;
        r->kind = kind;
        r->labels = std::move(labels);
        r->gen_index = gen_index;
        r->gen_order = gen_order;
        for (auto& x : sc) x %= r->zm.m;
        r->sc_ = std::move(sc);
        validate_table(*r);
        r->jac_gens = std::move(jac_gens);
        certify_jac(*const_cast<CoeffRing*>(r.get()));
        return r;
    }

  private:
    static void validate_table(const CoeffRing& r) {
        for (std::size_t i = 0; i < r.rank; ++i) {
            if (r.mul(r.one(), r.basis(i)) != r.basis(i) || r.mul(r.basis(i), r.one()) != r.basis(i))
                throw ValidationError("make_ring: basis element 0 is not a two-sided unit",
                                      r.labels[i]);
        }
        // Associativity on basis triples is complete: multiplication is
        // bilinear in the structure constants.
        for (std::size_t i = 0; i < r.rank; ++i)
            for (std::size_t j = 0; j < r.rank; ++j)
                for (std::size_t k = 0; k < r.rank; ++k) {
                    Vec lhs = r.mul(r.mul(r.basis(i), r.basis(j)), r.basis(k));
                    Vec rhs = r.mul(r.basis(i), r.mul(r.basis(j), r.basis(k)));
                    if (lhs != rhs)
                        throw ValidationError("make_ring: associativity failure",
                                              r.labels[i] + "," + r.labels[j] + "," + r.labels[k]);
                }
    }

    static void certify_jac(CoeffRing& r) {
        Submodule j = r.jac();
        if (j.contains(r.one()))
            throw ValidationError("make_ring: Jacobson generators span the unit ideal");
        unsigned bound = r.zm.n * static_cast<unsigned>(r.rank);
        r.jac_powers_.push_back(r.full());
        r.jac_powers_.push_back(j);
        Submodule jk = j;
        unsigned k = 1;
        while (!jk.is_zero()) {
            if (k > bound)
                throw ValidationError("make_ring: Jac not nilpotent within n*rank",
                                      std::to_string(k));
            jk = r.ideal_product(jk, j);
            r.jac_powers_.push_back(jk);
            ++k;
        }
        r.jac_index = j.is_zero() ? 1 : k;
        if (r.kind != RingKind::Custom) {
            // The named kinds promise R/Jac = Z/p: a quotient of size p with 1.
            unsigned quot = r.full().size_exp() - j.size_exp();
            if (quot != 1)
                throw ValidationError("make_ring: R/Jac is not Z/p for this kind",
                                      std::to_string(quot));
        }
    }
};

RingPtr make_modular_ring(std::uint64_t p, unsigned n) {
    std::vector<std::uint64_t> sc{1};
    std::vector<Vec> jg;
    if (n > 1) jg.push_back(Vec{p});
    return RingBuilder::build(p, n, 1, RingKind::Modular, {"1"}, std::move(sc), std::move(jg), 0, 0);
}

RingPtr make_truncated_poly_ring(std::uint64_t p, unsigned n, std::size_t N) {
    if (N < 2) throw ValidationError("truncated_poly: need N >= 2");
    std::vector<std::uint64_t> sc(N * N * N, 0);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            if (i + j < N) sc[(i * N + j) * N + (i + j)] = 1;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < N; ++i)
        labels.push_back(i == 0 ? "1" : (i == 1 ? "X" : "X^" + std::to_string(i)));
    std::vector<Vec> jg;
    if (n > 1) {
        Vec pv(N, 0);
        pv[0] = p;
        jg.push_back(pv);
    }
    Vec x(N, 0);
    x[1] = 1;
    jg.push_back(x);
    return RingBuilder::build(p, n, N, RingKind::TruncatedPoly, std::move(labels), std::move(sc),
                          std::move(jg), 1, N);
}

RingPtr make_group_algebra_ring(std::uint64_t p, unsigned n, std::uint64_t q) {
    // Cyclic p-group of order q = p^a with generator h.
    std::uint64_t t = q;
    while (t > 1) {
        if (t % p != 0)
            throw ValidationError("group_algebra: order is not a power of p", std::to_string(q));
        t /= p;
    }
    std::size_t N = static_cast<std::size_t>(q);
    std::vector<std::uint64_t> sc(N * N * N, 0);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) sc[(i * N + j) * N + ((i + j) % N)] = 1;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < N; ++i)
        labels.push_back(i == 0 ? "1" : (i == 1 ? "h" : "h^" + std::to_string(i)));
    std::vector<Vec> jg;
    if (n > 1) {
        Vec pv(N, 0);
        pv[0] = p;
        jg.push_back(pv);
    }
    Vec hm1(N, 0);
    hm1[1] = 1;
    hm1[0] = Zmod(p, n).m - 1;
    jg.push_back(hm1);
    return RingBuilder::build(p, n, N, RingKind::GroupAlgebra, std::move(labels), std::move(sc),
                          std::move(jg), 1, q);
}

RingPtr make_custom_ring(std::uint64_t p, unsigned n, std::size_t rank,
                         std::vector<std::string> labels, std::vector<std::uint64_t> sc,
                         std::vector<Vec> jac_gens) {
    return RingBuilder::build(p, n, rank, RingKind::Custom, std::move(labels), std::move(sc),
                          std::move(jac_gens), 0, 0);
}

} // namespace skw
