#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skw/dualaction.hpp"

using namespace skw;

namespace {

Mat augmentation_functional(const SModule& m) {
    // h^i |-> 1 on M_delta(IWA).
    const CoeffRing& R = *m.skew->ring;
    Mat f(R.rank, m.dim, R.zm);
    for (std::size_t c = 0; c < m.dim; ++c) f(0, c) = 1;
    return f;
}

} // namespace

TEST_CASE("dual space of M_delta(IWA) is 9-dimensional (right multiplications)") {
    Instance iwa = builtin_instance("IWA");
    SModule m = m_delta(iwa);
    DualSpace d = dual_space(m);
    CHECK(d.basis.size() == 9);
    for (const Mat& f : d.basis) CHECK(is_r_linear(m, f));
    // Right multiplications are R-linear for the left regular module.
    CHECK(is_r_linear(m, iwa.ring->right_mul(iwa.ring->basis(2))));
    // The all-ones "augmentation" row is additive but not R-linear; it is
    // used below only for pointwise formula checks.
    CHECK_FALSE(is_r_linear(m, augmentation_functional(m)));
}

TEST_CASE("act_coeff: f^a basics") {
    Instance iwa = builtin_instance("IWA");
    SModule m = m_delta(iwa);
    const CoeffRing& R = *iwa.ring;
    Mat id = Mat::identity(9, R.zm);
    // a = 1 fixes f.
    CHECK(act_coeff(m, id, R.one()) == id);
    // IWA, f = id, a = h: f^h(m) = m h^7.
    CHECK(act_coeff(m, id, R.basis(1)) == R.right_mul(R.basis(7)));
    // (f^a)^b = f^{ab}.
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Vec a = rng.element(R), b = rng.element(R);
        Mat f = augmentation_functional(m);
        CHECK(act_coeff(m, act_coeff(m, f, a), b) == act_coeff(m, f, R.mul(a, b)));
    }
    // TRIV: sigma = id so f^a is plain right multiplication by a.
    Instance triv = builtin_instance("TRIV");
    SModule mt = simple_mod_p(triv, Chirality::Left);
    Mat ft(1, 1, triv.ring->zm);
    ft(0, 0) = 1;
    Vec a{2};
    CHECK(act_coeff(mt, ft, a)(0, 0) == 2);
}

TEST_CASE("act_t: identity functional dies on M_delta; augmentation checked pointwise") {
    Instance iwa = builtin_instance("IWA");
    SModule m = m_delta(iwa);
    const CoeffRing& R = *iwa.ring;
    Mat id = Mat::identity(9, R.zm);
    // f = id: f(tm) = delta(m) cancels delta(f(m)) = delta(m).
    CHECK(act_t(m, id).is_zero());
    // f = augmentation: f^t(m) = sigma^{-1}(aug(delta m) - delta(aug m)),
    // checked against direct evaluation on all 9 basis elements.
    Mat f = augmentation_functional(m);
    Mat ft = act_t(m, f);
    for (std::size_t c = 0; c < 9; ++c) {
        Vec em(9, 0);
        em[c] = 1;
        Vec expect = iwa.skew->si(
            R.sub(f.apply(iwa.skew->delta.apply(em)), iwa.skew->d(f.apply(em))));
        CHECK(ft.apply(em) == expect);
    }
    // TRIV: f^t is the pure transpose of the t-action.
    Instance triv = builtin_instance("TRIV");
    SModule mt = scalar_t_module(triv, 0, Chirality::Left);
    Mat ftt(1, 1, triv.ring->zm);
    ftt(0, 0) = 2;
    CHECK(act_t(mt, ftt).is_zero()); // t = 0
}

TEST_CASE("exchange law on every (basis a, dual-basis f)") {
    Instance iwa = builtin_instance("IWA");
    SModule m = m_delta(iwa);
    DualSpace d = dual_space(m);
    const CoeffRing& R = *iwa.ring;
    for (const Mat& f : d.basis)
        for (std::size_t b = 0; b < R.rank; ++b) {
            Vec a = R.basis(b);
            Mat lhs = act_t(m, act_coeff(m, f, iwa.skew->s(a))) +
                      act_coeff(m, f, iwa.skew->d(a));
            Mat rhs = act_coeff(m, act_t(m, f), a);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("formula (+) equals iterated act_t for k <= 5 on the dual basis") {
    Instance iwa = builtin_instance("IWA");
    SModule m = m_delta(iwa);
    DualSpace d = dual_space(m);
    for (const Mat& f : d.basis) {
        Mat it = f;
        for (unsigned k = 0; k <= 5; ++k) {
            CHECK(act_t_power(m, f, k) == it);
            it = act_t(m, it);
        }
    }
}

TEST_CASE("B evaluation examples via b_apply") {
    Instance iwa = builtin_instance("IWA");
    const CoeffRing& R = *iwa.ring;
    Vec h = R.basis(1);
    // B_{1,2} = Y + ZYZ'.
    Vec expect = R.add(iwa.skew->d(h),
                       iwa.skew->s(iwa.skew->d(iwa.skew->si(h))));
    CHECK(b_apply(iwa.skew, 1, 2, h) == expect);
    CHECK_THROWS_AS(b_apply(iwa.skew, 3, 2, h), std::out_of_range);
}

TEST_CASE("series action: constants, t, and the module law (f^x)^y = f^{xy}") {
    Instance iwa = builtin_instance("IWA");
    SModule m = m_delta(iwa);
    DualSpace d = dual_space(m);
    const CoeffRing& R = *iwa.ring;
    Rng rng(31);
    Mat f = d.basis[2];
    Vec a = rng.element(R);
    CHECK(act_series(m, f, SkewSeries::constant(iwa.skew, a, Form::Right, 3)).value ==
          act_coeff(m, f, a));
    CHECK(act_series(m, f, SkewSeries::t_power(iwa.skew, 1, Form::Right, 3)).value ==
          act_t(m, f));
    for (int trial = 0; trial < 50; ++trial) {
        Mat g = d.basis[rng.next(d.basis.size())];
        SkewSeries x = rng.series(iwa.skew, Form::Right, 3);
        SkewSeries y = rng.series(iwa.skew, Form::Right, 3);
        Mat lhs = act_series(m, act_series(m, g, x).value, y).value;
        Mat rhs = act_series(m, g, x * y).value;
        CHECK(lhs == rhs);
        // Additivity in the series argument.
        CHECK(act_series(m, g, x + y).value ==
              act_series(m, g, x).value + act_series(m, g, y).value);
    }
}

TEST_CASE("act_series flags exactness against the convergence threshold") {
    Instance iwa = builtin_instance("IWA");
    SModule m = m_delta(iwa);
    DualSpace d = dual_space(m);
    ConvergenceWitness w = convergence_witness(m, iwa.ring->jac_index);
    Rng rng(12);
    SkewSeries x_lo = rng.series(iwa.skew, Form::Right, 1);
    SkewSeries x_hi = rng.series(iwa.skew, Form::Right, w.k_j);
    if (w.k_j > 1) CHECK_FALSE(act_series(m, d.basis[0], x_lo).exact);
    CHECK(act_series(m, d.basis[0], x_hi).exact);
}

TEST_CASE("convergence witness values") {
    // j = 0 always gives k_0 = 0.
    Instance triv = builtin_instance("TRIV");
    SModule mt = simple_mod_p(triv, Chirality::Left);
    CHECK(convergence_witness(mt, 0).k_j == 0);
    // TRIV, t = 0, j = 1: f^t = 0 identically, and Jac = 0 so k_1 = 1.
    ConvergenceWitness w1 = convergence_witness(mt, 1);
    CHECK(w1.k_j == 1);
    CHECK(w1.window_stable);
    // IWA M_delta at the full radical power: finite threshold, stable window,
    // and soundness: every f^{t^k} lands in Jac^j for k in [k_j, k_j + d].
    Instance iwa = builtin_instance("IWA");
    SModule m = m_delta(iwa);
    ConvergenceWitness w9 = convergence_witness(m, 9);
    CHECK(w9.window_stable);
    CHECK(w9.k_j >= 1);
    DualSpace d = dual_space(m);
    Submodule target = iwa.ring->jac_power(9);
    for (const Mat& f0 : d.basis) {
        Mat f = f0;
        for (unsigned k = 0; k < w9.k_j; ++k) f = act_t(m, f);
        for (unsigned k = w9.k_j; k <= w9.k_j + iwa.skew->sigma_order; ++k) {
            for (std::size_t c = 0; c < f.cols(); ++c) {
                Vec col(f.rows());
                for (std::size_t r = 0; r < f.rows(); ++r) col[r] = f(r, c);
                CHECK(target.contains(col));
            }
            f = act_t(m, f);
        }
    }
}
