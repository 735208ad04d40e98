#include "skw/laurent.hpp"

#include "skw/homology.hpp"

#include <sstream>

namespace skw {

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    if (s_.get() != o.s_.get() || form_ != o.form_)
        throw ValidationError("LaurentSeries: mismatched operands");
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    long lo = std::min(val_, o.val_);
    long hi = std::max(val_ + static_cast<long>(c_.size()),
                       o.val_ + static_cast<long>(o.c_.size()));
    std::vector<Vec> out;
    for (long d = lo; d < hi; ++d)
        out.push_back(s_->ring->add(coeff_at(d), o.coeff_at(d)));
    return from_coeffs(s_, lo, std::move(out), form_);
}

LaurentSeries LaurentSeries::negated() const {
    LaurentSeries r = *this;
    for (auto& v : r.c_) v = s_->ring->neg(v);
    return r;
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    if (s_.get() != o.s_.get() || form_ != o.form_)
        throw ValidationError("LaurentSeries: mismatched operands");
    LaurentSeries r(s_, form_);
    if (is_zero() || o.is_zero()) return r;
    r.val_ = val_ + o.val_;
    r.c_.assign(c_.size() + o.c_.size() - 1, s_->ring->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (vec_is_zero(c_[i])) continue;
        long di = val_ + static_cast<long>(i);
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (vec_is_zero(o.c_[j])) continue;
            long dj = o.val_ + static_cast<long>(j);
            Vec term;
            if (form_ == Form::Left) {
                // a t^di * b t^dj = a sigma^di(b) t^(di+dj)
                term = s_->ring->mul(c_[i], s_->sigma_pow(di).apply(o.c_[j]));
            } else {
                // t^di a * t^dj b = t^(di+dj) sigma^(-dj)(a) b
                term = s_->ring->mul(s_->sigma_pow(-dj).apply(c_[i]), o.c_[j]);
            }
            r.c_[i + j] = s_->ring->add(r.c_[i + j], term);
        }
    }
    r.canon();
    return r;
}

std::string LaurentSeries::show() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (vec_is_zero(c_[i])) continue;
        if (!first) os << " + ";
        first = false;
        long d = val_ + static_cast<long>(i);
        os << "(" << s_->ring->show(c_[i]) << ")t^" << d;
    }
    if (first) os << "0";
    return os.str();
}

LaurentSeries invert_t(const SkewPtr& s, Form f) { return LaurentSeries::t_power(s, -1, f); }

SModule laurent_scalar_module(const Instance& inst, std::uint64_t t_scalar) {
    const CoeffRing& R = *inst.ring;
    if (!inst.skew->delta_is_zero() || R.rank != 1)
        throw ValidationError("laurent_scalar_module: rank-1 delta=0 instances only");
    std::vector<Mat> acts;
    Mat a(1, 1, R.zm);
    a(0, 0) = 1;
    acts.push_back(a);
    Mat t(1, 1, R.zm);
    t(0, 0) = R.zm.red(t_scalar);
    return make_smodule(inst.skew, Chirality::Left, R.zm, std::move(acts), t,
                        "laurent_t=" + std::to_string(t_scalar) + "(" + inst.name + ")", false);
}

LaurentSeries localize(const SkewSeries& x) {
    if (!x.skew()->delta_is_zero())
        throw ValidationError("localize requires delta = 0");
    std::vector<Vec> coeffs(x.coeffs());
    return LaurentSeries::from_coeffs(x.skew(), 0, std::move(coeffs), x.form());
}

namespace {

Submodule col_kernel(const Mat& k) { return Submodule::span(row_kernel(k.transposed())); }
Submodule col_image(const Mat& k) { return Submodule::span(k.transposed()); }

} // namespace

LaurentModuleReport laurent_module_checks(const SModule& m, unsigned window) {
    LaurentModuleReport rep;
    rep.window = window;
    if (!m.skew->delta_is_zero())
        throw ValidationError("laurent_module_checks: delta = 0 instances only");
    Mat tinv(0, 0, m.mod);
    try {
        tinv = m.t_action.inverse();
        rep.t_invertible = true;
    } catch (const std::domain_error&) {
        rep.t_invertible = false;
        rep.detail = "t does not act invertibly; not a Laurent module";
        return rep;
    }
    // Windowed kappa: slots -W..W-1 -> -W..W, (v_i) -> (v_{i-1} - t v_i).
    const long W = static_cast<long>(window);
    const std::size_t dom = m.dim * (2 * window);
    const std::size_t cod = m.dim * (2 * window + 1);
    Mat kappa(cod, dom, m.mod);
    for (long i = -W; i <= W; ++i) {
        std::size_t row = static_cast<std::size_t>(i + W);
        if (i - 1 >= -W && i - 1 < W) {
            std::size_t col = static_cast<std::size_t>(i - 1 + W);
            for (std::size_t r = 0; r < m.dim; ++r) kappa(row * m.dim + r, col * m.dim + r) = 1;
        }
        if (i >= -W && i < W) {
            std::size_t col = static_cast<std::size_t>(i + W);
            for (std::size_t r = 0; r < m.dim; ++r)
                for (std::size_t c = 0; c < m.dim; ++c)
                    kappa(row * m.dim + r, col * m.dim + c) =
                        m.mod.sub(kappa(row * m.dim + r, col * m.dim + c), m.t_action(r, c));
        }
    }
    Mat mu(m.dim, cod, m.mod);
    Mat tpow = m.t_action.pow(0);
    // t^{-W} first, then multiply upward.
    Mat tneg = tinv.pow(static_cast<std::uint64_t>(W));
    Mat cur = tneg;
    for (long i = -W; i <= W; ++i) {
        std::size_t col = static_cast<std::size_t>(i + W);
        for (std::size_t r = 0; r < m.dim; ++r)
            for (std::size_t c = 0; c < m.dim; ++c) mu(r, col * m.dim + c) = cur(r, c);
        cur = m.t_action * cur;
    }
    (void)tpow;
    bool comp_zero = (mu * kappa).is_zero();
    bool inj = col_kernel(kappa).is_zero();
    bool surj = col_image(mu) == Submodule::full(m.dim, m.mod);
    bool im_eq_ker = col_image(kappa) == col_kernel(mu);
    rep.sequence_exact = comp_zero && inj && surj && im_eq_ker;
    if (!rep.sequence_exact) rep.detail += "windowed sequence not exact; ";
    return rep;
}


namespace {

// Entry of a Laurent-polynomial matrix: e0 + e1 t with ring coefficients.
struct LEntry {
    Vec e0, e1;
};

struct LMat {
    std::size_t rows = 0, cols = 0;
    std::vector<LEntry> e;
    LMat() = default;
    LMat(std::size_t r, std::size_t c, const CoeffRing& ring)
        : rows(r), cols(c), e(r * c, LEntry{ring.zero(), ring.zero()}) {}
    LEntry& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
    const LEntry& at(std::size_t i, std::size_t j) const { return e[i * cols + j]; }
};

// Expand left-multiplication by an LMat on block-windowed Laurent vectors:
// domain degrees [lo, hi), codomain degrees [lo, hi+1). sigma = id is
// assumed (commutative instances), so t commutes with coefficients.
Mat expand_window(const CoeffRing& ring, const LMat& d, long lo, long hi) {
    const std::size_t slots_dom = static_cast<std::size_t>(hi - lo);
    const std::size_t slots_cod = slots_dom + 1;
    const std::size_t bd = ring.rank;
    Mat out(d.rows * slots_cod * bd, d.cols * slots_dom * bd, ring.zm);
    for (std::size_t i = 0; i < d.rows; ++i)
        for (std::size_t j = 0; j < d.cols; ++j) {
            Mat m0 = ring.left_mul(d.at(i, j).e0);
            Mat m1 = ring.left_mul(d.at(i, j).e1);
            for (std::size_t s = 0; s < slots_dom; ++s)
                for (std::size_t r = 0; r < bd; ++r)
                    for (std::size_t c = 0; c < bd; ++c) {
                        std::size_t col = (j * slots_dom + s) * bd + c;
                        if (m0(r, c))
                            out((i * slots_cod + s) * bd + r, col) =
                                ring.zm.add(out((i * slots_cod + s) * bd + r, col), m0(r, c));
                        if (m1(r, c))
                            out((i * slots_cod + s + 1) * bd + r, col) =
                                ring.zm.add(out((i * slots_cod + s + 1) * bd + r, col), m1(r, c));
                    }
        }
    return out;
}

// Pad a spot-(window [lo,hi)) vector into the bigger window [LO,HI).
Vec pad_window(const CoeffRing& ring, std::size_t blocks, const Vec& v, long lo, long hi,
               long LO, long HI) {
    const std::size_t bd = ring.rank;
    const std::size_t slots = static_cast<std::size_t>(hi - lo);
    const std::size_t SLOTS = static_cast<std::size_t>(HI - LO);
    Vec out(blocks * SLOTS * bd, 0);
    for (std::size_t b = 0; b < blocks; ++b)
        for (std::size_t s = 0; s < slots; ++s) {
            long deg = lo + static_cast<long>(s);
            std::size_t S = static_cast<std::size_t>(deg - LO);
            for (std::size_t r = 0; r < bd; ++r)
                out[(b * SLOTS + S) * bd + r] = v[(b * slots + s) * bd + r];
        }
    return out;
}

struct LaurentComplex {
    std::vector<std::size_t> blocks; // per spot
    std::vector<LMat> d;             // d[j]: spot j -> spot j+1
};

LaurentComplex build_laurent_complex(const HModule& m, const CoeffRing& ring) {
    LaurentComplex cx;
    RMat iota(m.iota.rows, m.iota.cols, ring), c0(m.C0.rows, m.C0.cols, ring);
    for (std::size_t i = 0; i < m.iota.e.size(); ++i)
        for (std::size_t k = 0; k < ring.rank; ++k) iota.e[i][k] = m.iota.e[i][k] % ring.zm.m;
    for (std::size_t i = 0; i < m.C0.e.size(); ++i)
        for (std::size_t k = 0; k < ring.rank; ++k) c0.e[i][k] = m.C0.e[i][k] % ring.zm.m;
    auto tid_minus = [&](const RMat& c) {
        LMat out(c.rows, c.cols, ring);
        for (std::size_t i = 0; i < c.rows; ++i)
            for (std::size_t j = 0; j < c.cols; ++j) {
                out.at(i, j).e0 = ring.neg(c.at(i, j));
                if (i == j) out.at(i, j).e1 = ring.one();
            }
        return out;
    };
    auto lconst = [&](const RMat& c) {
        LMat out(c.rows, c.cols, ring);
        for (std::size_t i = 0; i < c.rows; ++i)
            for (std::size_t j = 0; j < c.cols; ++j) out.at(i, j).e0 = c.at(i, j);
        return out;
    };
    if (m.a1 == 0) {
        cx.blocks = {m.a0, m.a0};
        cx.d.push_back(tid_minus(c0));
        return cx;
    }
    // Over sigma = id, delta = 0 the lift condition is C1 iota = iota C0;
    // the battery presentations are diagonal, where C1 = C0 works. Verify.
    if (m.a1 != m.a0)
        throw ValidationError("laurent_ext_shift: presentation must be square here");
    RMat c1 = c0;
    for (std::size_t i = 0; i < m.a1; ++i)
        for (std::size_t j = 0; j < m.a0; ++j) {
            Vec lhs = ring.zero(), rhs = ring.zero();
            for (std::size_t k = 0; k < m.a1; ++k) {
                lhs = ring.add(lhs, ring.mul(c1.at(i, k), iota.at(k, j)));
                rhs = ring.add(rhs, ring.mul(iota.at(i, k), c0.at(k, j)));
            }
            if (lhs != rhs)
                throw ValidationError("laurent_ext_shift: C1 lift identity fails");
        }
    LMat d1(m.a1 + m.a0, m.a0, ring);
    LMat ic = lconst(iota), d0 = tid_minus(c0);
    for (std::size_t i = 0; i < m.a1; ++i)
        for (std::size_t j = 0; j < m.a0; ++j) d1.at(i, j) = ic.at(i, j);
    for (std::size_t i = 0; i < m.a0; ++i)
        for (std::size_t j = 0; j < m.a0; ++j) d1.at(m.a1 + i, j) = d0.at(i, j);
    LMat d2(m.a1, m.a1 + m.a0, ring);
    LMat negd1 = tid_minus(c1);
    for (auto& x : negd1.e) {
        x.e0 = ring.neg(x.e0);
        x.e1 = ring.neg(x.e1);
    }
    for (std::size_t i = 0; i < m.a1; ++i) {
        for (std::size_t j = 0; j < m.a1; ++j) d2.at(i, j) = negd1.at(i, j);
        for (std::size_t j = 0; j < m.a0; ++j) d2.at(i, m.a1 + j) = ic.at(i, j);
    }
    cx.blocks = {m.a0, m.a1 + m.a0, m.a1};
    cx.d.push_back(std::move(d1));
    cx.d.push_back(std::move(d2));
    return cx;
}

} // namespace

LaurentExtShiftReport laurent_ext_shift(const HModule& m, unsigned window) {
    Instance inst = builtin_instance(m.instance);
    if (inst.skew->sigma_order != 1 || !inst.skew->delta_is_zero())
        throw ValidationError("laurent_ext_shift: sigma = id, delta = 0 instances only");
    const CoeffRing& ring = *inst.ring;
    LaurentExtShiftReport rep;
    rep.module = m.name;
    // Invertibility of the t-matrix over the ring.
    {
        Mat c0(m.a0, m.a0, ring.zm);
        for (std::size_t i = 0; i < m.a0; ++i)
            for (std::size_t j = 0; j < m.a0; ++j) c0(i, j) = m.C0.at(i, j)[0] % ring.zm.m;
        try {
            c0.inverse();
        } catch (const std::domain_error&) {
            throw ValidationError("laurent_ext_shift: t-matrix is not invertible", m.name);
        }
    }
    LaurentComplex cx = build_laurent_complex(m, ring);
    const long W = static_cast<long>(window);
    // Rings at increasing p-precision for the Mittag-Leffler direction.
    auto ring_at = [&](unsigned d) {
        InstanceOverrides ov;
        if (m.instance == "ZPT") ov.p_prec = ring.zm.n + d;
        return builtin_instance(m.instance, ov).ring;
    };
    const long SAT = 4; // t-direction boundary saturation
    auto analyze = [&](std::size_t spot, long w) {
        LaurentExtDegree deg;
        deg.degree = static_cast<unsigned>(spot);
        long lo = -w, hi = w + static_cast<long>(spot);
        long LO = lo - SAT, HI = hi + SAT;
        std::size_t bd = ring.rank;
        // Boundaries at base precision from the saturated domain.
        Submodule b_base = Submodule::zero(
            cx.blocks[spot] * static_cast<std::size_t>(HI - LO) * bd, ring.zm);
        if (spot > 0) {
            LaurentComplex cb = build_laurent_complex(m, ring);
            Mat dmat = expand_window(ring, cb.d[spot - 1], LO, HI - 1);
            b_base = Submodule::span(dmat.transposed());
        }
        std::vector<unsigned> prev_div;
        bool have_prev = false, converged = false;
        for (unsigned d = 1; d <= 6; ++d) {
            RingPtr rfine = ring_at(d);
            LaurentComplex cf = build_laurent_complex(m, *rfine);
            std::size_t dim_spot_fine =
                cx.blocks[spot] * static_cast<std::size_t>(hi - lo) * bd;
            Submodule ker = (spot < cf.d.size())
                                ? Submodule::span(row_kernel(
                                      expand_window(*rfine, cf.d[spot], lo, hi).transposed()))
                                : Submodule::full(dim_spot_fine, rfine->zm);
            std::vector<Vec> rows;
            for (std::size_t i = 0; i < ker.basis().rows(); ++i) {
                Vec v = ker.basis().row(i);
                for (auto& x : v) x %= ring.zm.m;
                rows.push_back(pad_window(ring, cx.blocks[spot], v, lo, hi, LO, HI));
            }
            Submodule stable = Submodule::span(rows, b_base.ambient(), ring.zm) + b_base;
            std::vector<unsigned> div = quotient_divisors(stable, b_base);
            bool vanish = stable == b_base;
            if (have_prev && div == prev_div && deg.vanishing == vanish) {
                deg.divisors = div;
                deg.vanishing = vanish;
                converged = true;
                break;
            }
            prev_div = div;
            have_prev = true;
            deg.divisors = div;
            deg.vanishing = vanish;
        }
        deg.stable = converged;
        return deg;
    };
    std::size_t spots = cx.blocks.size();
    for (std::size_t spot = 0; spot < spots; ++spot) {
        LaurentExtDegree a = analyze(spot, W);
        LaurentExtDegree b = analyze(spot, W + 1);
        a.stable = a.stable && b.stable && a.divisors == b.divisors && a.vanishing == b.vanishing;
        rep.ext_T.push_back(a);
    }
    // R-side comparison through the shared homology machinery.
    std::vector<ExtReport> ext_r = ext_all(m, Over::R);
    unsigned j_t = 0;
    bool found = false;
    for (const auto& d : rep.ext_T)
        if (!d.vanishing && !found) {
            j_t = d.degree;
            found = true;
        }
    rep.j_T = j_t;
    GradeReport gr = grade_over(m, Over::R);
    rep.j_R = gr.j;
    rep.shift_holds = found && !gr.infinite && j_t == gr.j + 1;
    for (std::size_t j = 1; j < rep.ext_T.size() && j - 1 < ext_r.size(); ++j) {
        if (!rep.ext_T[j].stable) {
            rep.shift_holds = false;
            rep.detail += "Ext_T degree " + std::to_string(j) + " unstable; ";
            continue;
        }
        if (rep.ext_T[j].divisors != ext_r[j - 1].divisors) {
            rep.shift_holds = false;
            rep.detail += "divisors differ in degree " + std::to_string(j) + "; ";
        }
    }
    if (!rep.ext_T[0].vanishing) {
        rep.shift_holds = false;
        rep.detail += "Hom_T(M,T) != 0; ";
    }
    return rep;
}

} // namespace skw
