#pragma once

#include "skw/strunc.hpp"

namespace skw {

// Small matrix with ring-element entries (presentations, t-lifts,
// differentials before expansion).
struct RMat {
    std::size_t rows = 0, cols = 0;
    std::vector<Vec> e;
    RMat() = default;
    RMat(std::size_t r, std::size_t c, const CoeffRing& ring)
        : rows(r), cols(c), e(r * c, ring.zero()) {}
    Vec& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
    const Vec& at(std::size_t i, std::size_t j) const { return e[i * cols + j]; }
};

// Battery module for the Ext machinery: M = coker(iota: R^{a1} -> R^{a0})
// with a t-action matrix C0 on the F0 residue basis and a compatible lift C1
// (C1 iota = delta(iota) + sigma(iota) C0). a1 = 0 means M is R-free.
struct HModule {
    std::string instance; // TRIV | ZPT | IWA
    std::string name;
    std::size_t a0 = 0, a1 = 0;
    RMat iota, C0, C1;
    unsigned ann_exp = 0; // p-annihilator exponent of M
    bool has_t = true;    // false for plain R-modules (base-change grade inputs)
};

enum class Over { R, S };

struct ExtReport {
    Over over = Over::R;
    unsigned degree = 0;
    bool vanishing = true;        // stable cohomology is zero at the base window
    bool vanishing_stable = true; // the two windows agree on vanishing
    std::vector<unsigned> divisors; // capped elementary divisor exponents
    bool divisors_stable = true;
    std::vector<std::vector<unsigned>> t_invariants; // divisors of im(t^k), k = 1..3
    bool has_t_invariants = false;
    bool t_invariants_stable = true;
    bool stabilized() const {
        return vanishing_stable && (vanishing || (divisors_stable && t_invariants_stable));
    }
};

struct GradeReport {
    bool infinite = false; // zero module sentinel
    unsigned j = 0;
};

// Towers used for one module; base precisions are per-instance defaults,
// overridable for experiments.
struct TowerConfig {
    unsigned base_T = 0, base_n = 0; // 0 = instance default
};

ExtReport ext_over(const HModule& m, Over over, unsigned degree, TowerConfig cfg = {});
std::vector<ExtReport> ext_all(const HModule& m, Over over, TowerConfig cfg = {});
GradeReport grade_over(const HModule& m, Over over, TowerConfig cfg = {});

struct DimensionShiftReport {
    std::string module;
    bool hom_s_vanishes = false;
    bool invariants_match = false;
    bool grade_shift = false;
    bool mj_criterion = false;
    unsigned j_R = 0, j_S = 0;
    std::vector<ExtReport> ext_R, ext_S;
    std::string detail;
    bool ok() const {
        return hom_s_vanishes && invariants_match && grade_shift && mj_criterion;
    }
};

// Dimension-shift verification: Hom_S(M,S) = 0, Ext^j_S = Ext^{j-1}_R on
// invariants in every stabilized degree, and j_S = j_R + 1 together with the
// vanishing-range equivalence.
DimensionShiftReport verify_dimension_shift(const HModule& m, TowerConfig cfg = {});

struct BasechangeReport {
    std::string module;
    unsigned j_R = 0, j_S = 0;
    bool r_infinite = false, s_infinite = false;
    bool equal = false;
};

// Base-change grade equality: j_R(N) = j_S(S (x) N) for plain R-modules N.
BasechangeReport verify_basechange_grade(const HModule& n, TowerConfig cfg = {});

// Battery constructors.
HModule h_mod_p_power(const std::string& instance, unsigned e); // coker(p^e), t = 0
HModule h_sum_p_powers(const std::string& instance, unsigned e1, unsigned e2);
HModule h_free_nilpotent_t(const std::string& instance); // rank 2, t = ((0,3),(3,0))
HModule h_m_delta_iwa();                                 // IWA: R with t = delta
HModule h_free_rank1(const std::string& instance);       // N = R

// Composition-zero and size checks for the constructed resolution at the base
// tower level; throws on violation.
void validate_resolution(const HModule& m, TowerConfig cfg = {});

} // namespace skw
