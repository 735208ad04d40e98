#pragma once

#include "skw/instances.hpp"
#include "skw/rng.hpp"

namespace skw {

enum class Chirality { Left, Right };

// Module in M_R(S): finite free Z/p^e carrier (e may be below the ring
// precision), R acting through matrices, t acting compatibly with the skew
// relation, and t-adically separated.
class SModule {
  public:
    SkewPtr skew;
    Chirality chi = Chirality::Left;
    std::string name;
    Zmod mod;        // carrier modulus p^e
    std::size_t dim = 0;
    std::vector<Mat> r_action; // per ring basis element, dim x dim over mod
    Mat t_action;

    // Linear extension of the action to arbitrary ring elements.
    Mat act(const Vec& a) const {
        Mat m(dim, dim, mod);
        for (std::size_t i = 0; i < skew->ring->rank; ++i)
            if (a[i] % mod.m) m = m + r_action[i].scaled(a[i] % mod.m);
        return m;
    }

    // Stable image of t (intersection of the images of all t-powers).
    Submodule t_stable_image() const;
};

// Validates the R-action axioms, the skew relation
//   left:  t(a m) = sigma(a) t(m) + delta(a) m
//   right: (m a) t = (m t) sigma'(a) + m delta'(a)
// and t-adic separation (stable image of t is zero). Laurent-side
// modules need an invertible t instead, which contradicts separation; they
// pass require_separation = false.
SModule make_smodule(SkewPtr skew, Chirality chi, Zmod mod, std::vector<Mat> r_action,
                     Mat t_action, std::string name, bool require_separation = true);

// S (x)_R M truncated to T coordinate blocks, plain or sigma-twisted.
class InducedModule {
  public:
    const SModule* src = nullptr;
    unsigned T = 0;
    bool twisted = false;

    std::size_t dim() const { return src->dim * T; }
    // R-action on coordinate tuples.
    Mat r_act(const Vec& a) const;
    // t-action: shift one slot up, top coordinate truncated away.
    Mat t_act() const;
    // Coordinates of x (x) m (left) or m (x) x (right) for series x.
    Vec tuple_of(const SkewSeries& x, const Vec& m) const;
};

InducedModule induce(const SModule& m, unsigned T, bool twisted);

struct ChainMapPair {
    Chirality chi = Chirality::Left;
    unsigned T = 0;
    Mat kappa; // M^T -> M^{T+1}, (v_i) -> (v_{i-1} - t v_i), v_{-1} = v_T = 0
    Mat mu;    // M^{T+1} -> M, (v_i) -> sum t^i v_i
};

ChainMapPair boundary_maps(const SModule& m, unsigned T);

struct ExactnessReport {
    bool kappa_injective = false;
    bool mu_surjective = false;
    bool image_equals_kernel = false;
    bool exact() const { return kappa_injective && mu_surjective && image_equals_kernel; }
    unsigned dim_image_exp = 0;  // log_p |im kappa|
    unsigned dim_kernel_exp = 0; // log_p |ker mu|
    std::string witness;
};

ExactnessReport verify_exactness(const SModule& m, unsigned T);

Submodule t_adic_intersection(const SModule& m);

struct G0Witness {
    bool valid = false;
    std::string detail;
    Mat gamma_action;        // the iso twisted-M -> M given by gamma
    Mat kappa_untwisted;     // kappa composed with the slotwise inverse
    ExactnessReport sequence;
};

// Inner-automorphism witness: for sigma = gamma . gamma^-1 the twist drops and
// 0 -> S(x)M -> S(x)M -> M -> 0 is exact, so [M] = 0 in G_0(S).
G0Witness g0_witness(const SModule& m, const SkewSeries& gamma);

// Battery constructors used across the suites.
SModule m_delta(const Instance& inst);                       // left: R with t = delta
SModule m_delta_prime(const Instance& inst);                 // right: R with t = delta'
SModule simple_mod_p(const Instance& inst, Chirality chi);   // Z/p with t = 0
SModule quotient_mod_jac_power(const Instance& inst, unsigned k); // R/Jac^k, t = delta
// Free rank-1 module with an explicit t scalar (delta = 0 instances only).
SModule scalar_t_module(const Instance& inst, std::uint64_t t_scalar, Chirality chi);

} // namespace skw
