#pragma once

#include "skw/smodule.hpp"

namespace skw {

// Hom_R(M, R) for a left SModule, with the twisted right S-action of the
// dual-module construction. Dual elements are rank x dim matrices over the
// ring modulus; R-linearity and the p^e annihilation of the carrier are
// solved for exactly.
struct DualSpace {
    const SModule* src = nullptr;
    std::vector<Mat> basis; // spanning set of Hom_R(M, R)
};

DualSpace dual_space(const SModule& m);
bool is_r_linear(const SModule& m, const Mat& f);

// f^a(m) = f(m) sigma^{-1}(a).
Mat act_coeff(const SModule& m, const Mat& f, const Vec& a);
// f^t(m) = sigma^{-1}(f(tm) - delta(f(m))); the result is again R-linear.
Mat act_t(const SModule& m, const Mat& f);
// B_{i,k}(delta, sigma, sigma^{-1}) applied to a ring element.
Vec b_apply(const SkewPtr& s, unsigned i, unsigned k, const Vec& a);
// f^{t^k} by the closed formula
//   sigma^{-k}( sum_i (-1)^i B_{i,k}(f(t^{k-i} m)) );
// must agree with iterating act_t.
Mat act_t_power(const SModule& m, const Mat& f, unsigned k);

struct ActSeriesResult {
    Mat value;
    bool exact = true; // tail of the series action provably vanishes
};
// f^x = sum_i (f^{t^i})^{a_i} for right-form x.
ActSeriesResult act_series(const SModule& m, const Mat& f, const SkewSeries& x);

struct ConvergenceWitness {
    unsigned j = 0;
    unsigned k_j = 0;
    bool window_stable = true; // verified on [k_j, k_j + sigma_order]
};
// Minimal k_j with f^{t^k}(M) <= Jac^j for the whole dual space and all
// k >= k_j; sound because the images of the iterated t-action descend.
ConvergenceWitness convergence_witness(const SModule& m, unsigned j);

} // namespace skw
