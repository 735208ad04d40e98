// Acceptance suite: every structural claim the library is contracted to
// verify, one criterion per numbered block, one PASS/FAIL line each, exit
// nonzero if any line fails. All checks are exact equalities over finite
// rings; no tolerances anywhere.
#include "skw/dualaction.hpp"
#include "skw/filtration.hpp"
#include "skw/homology.hpp"
#include "skw/laurent.hpp"
#include "skw/nilpotence.hpp"
#include "skw/suites.hpp"

#include <chrono>
#include <iostream>

using namespace skw;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int num, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << num << ": " << what;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++failures;
}

bool c1_group_oracle() {
    auto t0 = Clock::now();
    Instance iwa = builtin_instance("IWA");
    const GroupOracle& orc = *iwa.oracle;
    for (std::uint64_t i1 = 0; i1 < 9; ++i1)
        for (std::uint64_t j1 = 0; j1 < 3; ++j1)
            for (std::uint64_t i2 = 0; i2 < 9; ++i2)
                for (std::uint64_t j2 = 0; j2 < 3; ++j2) {
                    SkewSeries x =
                        SkewSeries::constant(iwa.skew, iwa.ring->basis(i1), Form::Left, 3) *
                        SkewSeries::t_power(iwa.skew, static_cast<unsigned>(j1), Form::Left, 3);
                    SkewSeries y =
                        SkewSeries::constant(iwa.skew, iwa.ring->basis(i2), Form::Left, 3) *
                        SkewSeries::t_power(iwa.skew, static_cast<unsigned>(j2), Form::Left, 3);
                    if (orc.embed_series(x * y) !=
                        orc.mul(orc.embed_series(x), orc.embed_series(y)))
                        return false;
                }
    Rng rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        SkewSeries x = rng.series(iwa.skew, Form::Left, 3);
        SkewSeries y = rng.series(iwa.skew, Form::Left, 3);
        if (orc.embed_series(x * y) != orc.mul(orc.embed_series(x), orc.embed_series(y)))
            return false;
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    return secs < 10.0;
}

bool c2_formula_coherence() {
    for (const char* name : {"PX", "PXN", "IWA"}) {
        Instance inst = builtin_instance(name);
        Rng rng(derive_seed(2, name));
        for (int trial = 0; trial < 100; ++trial) {
            Form f = trial % 2 ? Form::Left : Form::Right;
            SkewSeries x = rng.series(inst.skew, f, 8);
            if (x.converted().converted() != x) return false;
        }
        for (int trial = 0; trial < 100; ++trial) {
            SkewSeries x = rng.series(inst.skew, Form::Left, 8);
            SkewSeries y = rng.series(inst.skew, Form::Left, 8);
            if ((x * y).converted() != x.converted() * y.converted()) return false;
        }
    }
    return true;
}

bool c3_px_example(std::string& detail) {
    Instance px = builtin_instance("PX");
    const CoeffRing& R = *px.ring;
    bool ok = true;
    auto expect = [&](bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail += what + "; ";
        }
    };
    expect(i_level(px.skew, 0).ideal == R.full(), "I_0 != R");
    expect(i_level(px.skew, 1).ideal == R.ideal({R.basis(3)}), "I_1 != (X^3)");
    Submodule i2 = i_level(px.skew, 2).ideal;
    if (i2 != R.ideal({R.basis(6)})) {
        ok = false;
        detail += "I_2 = (X^5) not (X^6): the two-step composition delta^2 sends X to X^5 inside Delta_2; ";
    }
    Submodule i3 = i_level(px.skew, 3).ideal;
    if (!i3.is_zero()) {
        ok = false;
        detail += "I_3 = (X^7) not 0: delta^3(X) = X^7; ";
    }
    GradedRing gr = graded_coeff(px.skew, 1);
    expect(gr.comp[0].dim_exp == 3, "gr degree-0 dimension != 3");
    Vec u = gr.residue(0, R.basis(1));
    Vec u2 = gr.grmul(0, u, 0, u);
    expect(!vec_is_zero(u) && !vec_is_zero(u2) && vec_is_zero(gr.grmul(0, u2, 0, u)),
           "degree-0 piece not F_3[X]/(X^3)");
    Submodule span = Submodule::span({gr.residue(0, R.one()), u, u2}, R.rank, R.zm);
    expect(span == Submodule::span(gr.comp[0].section, R.rank, R.zm),
           "degree-0 piece not spanned by 1, X, X^2");
    expect(gr.sigma_bar(0, u) == R.scale(u, 2), "sigma_bar(X) != 2X");
    return ok;
}

bool c4_nilpotence(std::string& detail) {
    Instance px = builtin_instance("PX");
    auto rpx = check_sigma_nilpotent(px.skew, 9);
    if (!rpx.nilpotent || rpx.witness_m > 4) {
        detail = "PX witness";
        return false;
    }
    Instance iwa = builtin_instance("IWA");
    if (!check_sigma_nilpotent(iwa.skew, 9).nilpotent) {
        detail = "IWA not nilpotent";
        return false;
    }
    Instance sw = f3xf3_swap_instance();
    auto rs = check_sigma_nilpotent(sw.skew, 1);
    Mat d = sw.skew->delta;
    bool fixpoint = (d * d == d) && !d.is_zero() &&
                    rs.stable_span == Submodule::full(2, sw.ring->zm).image(d);
    if (rs.nilpotent || !fixpoint || rs.counterexample.empty()) {
        detail = "swap counterexample";
        return false;
    }
    return true;
}

bool c5_exactness() {
    Instance triv = builtin_instance("TRIV");
    Instance zpt = builtin_instance("ZPT");
    Instance iwa = builtin_instance("IWA");
    std::vector<SModule> battery;
    battery.push_back(simple_mod_p(triv, Chirality::Left));
    battery.push_back(simple_mod_p(triv, Chirality::Right));
    battery.push_back(simple_mod_p(zpt, Chirality::Left));
    battery.push_back(simple_mod_p(zpt, Chirality::Right));
    battery.push_back(m_delta(iwa));
    battery.push_back(m_delta_prime(iwa));
    battery.push_back(quotient_mod_jac_power(iwa, 3));
    for (const SModule& m : battery)
        for (unsigned T : {1u, 3u, 5u, 8u})
            if (!verify_exactness(m, T).exact()) return false;
    return true;
}

bool c6_delta_power() {
    Instance iwa = builtin_instance("IWA");
    for (unsigned n = 0; n <= 6; ++n)
        for (std::size_t b = 0; b < 9; ++b)
            if (!delta_power_identity(iwa.skew, iwa.ring->basis(b), n).equal) return false;
    return true;
}

bool c7_dual_action() {
    Instance iwa = builtin_instance("IWA");
    SModule m = m_delta(iwa);
    DualSpace d = dual_space(m);
    for (const Mat& f : d.basis)
        for (std::size_t b = 0; b < 9; ++b) {
            Vec a = iwa.ring->basis(b);
            Mat lhs =
                act_t(m, act_coeff(m, f, iwa.skew->s(a))) + act_coeff(m, f, iwa.skew->d(a));
            if (lhs != act_coeff(m, act_t(m, f), a)) return false;
        }
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Mat f = d.basis[rng.next(d.basis.size())];
        SkewSeries x = rng.series(iwa.skew, Form::Right, 3);
        SkewSeries y = rng.series(iwa.skew, Form::Right, 3);
        if (act_series(m, act_series(m, f, x).value, y).value != act_series(m, f, x * y).value)
            return false;
    }
    for (const Mat& f : d.basis) {
        Mat it = f;
        for (unsigned k = 0; k <= 5; ++k) {
            if (act_t_power(m, f, k) != it) return false;
            it = act_t(m, it);
        }
    }
    return true;
}

bool c8_dimension_shift(std::string& detail) {
    std::vector<HModule> battery = {
        h_mod_p_power("ZPT", 1),
        h_mod_p_power("ZPT", 2),
        h_sum_p_powers("ZPT", 1, 2),
        h_free_nilpotent_t("ZPT"),
        h_m_delta_iwa(),
    };
    for (const HModule& m : battery) {
        DimensionShiftReport rep = verify_dimension_shift(m);
        if (!rep.ok()) {
            detail = m.name + ": " + rep.detail;
            return false;
        }
    }
    return true;
}

bool c9_basechange() {
    if (!verify_basechange_grade(h_mod_p_power("ZPT", 1)).equal) return false;
    if (!verify_basechange_grade(h_free_rank1("ZPT")).equal) return false;
    if (!verify_basechange_grade(h_free_rank1("TRIV")).equal) return false;
    return true;
}

bool c10_g0_witness() {
    Instance iwa = builtin_instance("IWA");
    SModule m = m_delta(iwa);
    SkewSeries gamma = SkewSeries::constant(iwa.skew, iwa.ring->one(), Form::Left, 3) +
                       SkewSeries::t_power(iwa.skew, 1, Form::Left, 3);
    G0Witness w = g0_witness(m, gamma);
    return w.valid && w.sequence.exact();
}

bool c11_sigma_hat() {
    Instance iwa = builtin_instance("IWA");
    Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        SkewSeries x = rng.series(iwa.skew, Form::Right, 3);
        SkewSeries y = rng.series(iwa.skew, Form::Right, 3);
        if (sigma_hat(x * y) != sigma_hat(x) * sigma_hat(y)) return false;
    }
    Instance pxn = builtin_instance("PXN");
    try {
        sigma_hat(SkewSeries::t_power(pxn.skew, 1, Form::Right, 2));
        return false;
    } catch (const ValidationError& e) {
        return e.witness == "X";
    }
}

bool c12_laurent(std::string& detail) {
    for (const char* name : {"TRIV", "ZPT"}) {
        Instance inst = builtin_instance(name);
        LaurentSeries t = LaurentSeries::t_power(inst.skew, 1, Form::Left);
        LaurentSeries ti = invert_t(inst.skew, Form::Left);
        LaurentSeries one = LaurentSeries::constant(inst.skew, inst.ring->one(), Form::Left);
        if (t * ti != one || ti * t != one) {
            detail = "t-inverse";
            return false;
        }
        SModule m = laurent_scalar_module(inst, 1);
        if (!laurent_module_checks(m, 4).sequence_exact) {
            detail = "window sequence";
            return false;
        }
        HModule hm = name == std::string("TRIV") ? h_free_rank1("TRIV") : h_mod_p_power("ZPT", 1);
        for (std::size_t i = 0; i < hm.C0.rows; ++i) hm.C0.at(i, i) = inst.ring->one();
        hm.C1 = hm.C0;
        LaurentExtShiftReport rep = laurent_ext_shift(hm, 4);
        if (!rep.shift_holds) {
            detail = std::string(name) + " ext shift: " + rep.detail;
            return false;
        }
    }
    // sigma-commutation on a sigma != id carrier with delta = 0.
    Instance px = builtin_instance("PX");
    auto skew0 =
        validate_skew(px.ring, SigmaGenImage{px.ring->scale(px.ring->basis(1), 2)}, DeltaZero{});
    for (long k = -4; k <= 4; ++k)
        for (std::size_t b = 0; b < px.ring->rank; ++b) {
            Vec a = px.ring->basis(b);
            LaurentSeries lhs = LaurentSeries::constant(skew0, a, Form::Left) *
                                LaurentSeries::t_power(skew0, k, Form::Left);
            LaurentSeries rhs =
                LaurentSeries::t_power(skew0, k, Form::Left) *
                LaurentSeries::constant(skew0, skew0->sigma_pow(-k).apply(a), Form::Left);
            if (lhs != rhs) {
                detail = "sigma-commutation";
                return false;
            }
        }
    return true;
}

bool c13_full_suite(std::string& detail) {
    auto t0 = Clock::now();
    for (const char* name : {"TRIV", "PX", "PXN", "IWA", "ZPT"}) {
        Instance inst = builtin_instance(name);
        Report rep = run_suite("all", inst, 1);
        if (rep.exit_code() != 0) {
            for (const auto& c : rep.checks)
                if (!c.ok()) detail += std::string(name) + "/" + c.name + "; ";
            return false;
        }
        if (name == std::string("IWA")) {
            Report again = run_suite("all", inst, 1);
            if (rep.to_json() != again.to_json()) {
                detail = "report bytes differ between identical runs";
                return false;
            }
        }
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    detail = "total " + std::to_string(secs) + " s";
    return secs < 120.0;
}

} // namespace

int main() {
    report(1, "group-algebra oracle equivalence on IWA at T=3 (< 10 s)", c1_group_oracle());
    report(2, "coefficient-form conversion involutive and product-coherent at T=8",
           c2_formula_coherence());
    {
        std::string detail;
        bool ok = c3_px_example(detail);
        report(3, "PX example: I-filtration table and gr_I R degree-0 structure", ok, detail);
    }
    {
        std::string detail;
        report(4, "sigma-nilpotence: PX m(9) <= 4, IWA nilpotent, F3xF3 swap refuted",
               c4_nilpotence(detail), detail);
    }
    report(5, "exactness triple on the module battery, T in {1,3,5,8}, both chiralities",
           c5_exactness());
    report(6, "delta-power identity for n <= 6 on all IWA basis elements", c6_delta_power());
    report(7, "dual-action laws: exchange, series action, plus-formula", c7_dual_action());
    {
        std::string detail;
        report(8, "Ext dimension shift with stabilized invariants on the homology battery",
               c8_dimension_shift(detail), detail);
    }
    report(9, "base-change grade equality on the N-battery", c9_basechange());
    report(10, "G0 witness: gamma = 1 + t untwists the exact sequence on IWA", c10_g0_witness());
    report(11, "sigma-hat multiplicative on IWA; PXN rejected with witness X", c11_sigma_hat());
    {
        std::string detail;
        report(12, "Laurent ring: t-inverse, sigma-commutation, sequence, Ext shift",
               c12_laurent(detail), detail);
    }
    {
        std::string detail;
        report(13, "full suite across built-ins: deterministic, exit 0, < 2 minutes",
               c13_full_suite(detail), detail);
    }
    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
