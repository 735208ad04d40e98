#include "skw/smodule.hpp"

#include <algorithm>

namespace skw {

namespace {

// Column kernel {v : K v = 0} as a row-basis submodule.
Submodule col_kernel(const Mat& k) { return Submodule::span(row_kernel(k.transposed())); }

Submodule col_image(const Mat& k) { return Submodule::span(k.transposed()); }

} // namespace

Submodule SModule::t_stable_image() const {
    Submodule img = Submodule::full(dim, mod);
    for (;;) {
        Submodule next = img.image(t_action);
        if (next == img) return img;
        img = next;
    }
}

SModule make_smodule(SkewPtr skew, Chirality chi, Zmod mod, std::vector<Mat> r_action,
                     Mat t_action, std::string name, bool require_separation) {
    const CoeffRing& R = *skew->ring;
    if (mod.p != R.zm.p || mod.n > R.zm.n)
        throw ValidationError("make_smodule: carrier modulus incompatible with the ring");
    if (r_action.size() != R.rank)
        throw ValidationError("make_smodule: need one action matrix per ring basis element");
    SModule m;
    m.skew = std::move(skew);
    m.chi = chi;
    m.mod = mod;
    m.dim = t_action.rows();
    m.r_action = std::move(r_action);
    m.t_action = std::move(t_action);
    m.name = std::move(name);

    Mat id = Mat::identity(m.dim, mod);
    if (m.act(R.one()) != id)
        throw ValidationError("make_smodule: 1 does not act as identity", m.name);
    for (std::size_t i = 0; i < R.rank; ++i)
        for (std::size_t j = 0; j < R.rank; ++j) {
            Mat prod = m.act(R.mul(R.basis(i), R.basis(j)));
            Mat composed = (chi == Chirality::Left) ? m.r_action[i] * m.r_action[j]
                                                    : m.r_action[j] * m.r_action[i];
            if (prod != composed)
                throw ValidationError("make_smodule: R-action is not multiplicative",
                                      R.labels[i] + "," + R.labels[j]);
        }
    // Skew relation, exhaustively on the ring basis.
    for (std::size_t i = 0; i < R.rank; ++i) {
        Vec b = R.basis(i);
        Mat lhs = m.t_action * m.r_action[i];
        Mat rhs = (chi == Chirality::Left)
                      ? m.act(m.skew->s(b)) * m.t_action + m.act(m.skew->d(b))
                      : m.act(m.skew->sigma_prime.apply(b)) * m.t_action +
                            m.act(m.skew->delta_prime.apply(b));
        if (lhs != rhs)
            throw ValidationError("make_smodule: skew relation fails", R.labels[i]);
    }
    if (require_separation) {
        Submodule stable = m.t_stable_image();
        if (!stable.is_zero())
            throw ValidationError("make_smodule: t-adic separation fails",
                                  m.name + ": stable image size exponent " +
                                      std::to_string(stable.size_exp()));
    }
    return m;
}

Mat InducedModule::r_act(const Vec& a) const {
    const SModule& m = *src;
    OpTable ops(m.skew);
    Mat out(dim(), dim(), m.mod);
    for (unsigned i = 0; i < T; ++i)
        for (unsigned n = 0; n <= i; ++n) {
            // left: a t^i = sum_n t^n M_{i-n,n}(delta',sigma')(a)
            // right: t^i a = sum_n M_{i-n,n}(delta,sigma)(a) t^n
            Vec c = (m.chi == Chirality::Left) ? ops.m_right(i - n, n).apply(a)
                                               : ops.m_left(i - n, n).apply(a);
            if (twisted) c = (m.chi == Chirality::Left) ? m.skew->si(c) : m.skew->s(c);
            Mat blk = m.act(c);
            for (std::size_t r = 0; r < m.dim; ++r)
                for (std::size_t cc = 0; cc < m.dim; ++cc)
                    out(n * m.dim + r, i * m.dim + cc) =
                        m.mod.add(out(n * m.dim + r, i * m.dim + cc), blk(r, cc));
        }
    return out;
}

Mat InducedModule::t_act() const {
    Mat out(dim(), dim(), src->mod);
    for (unsigned i = 0; i + 1 < T; ++i)
        for (std::size_t r = 0; r < src->dim; ++r)
            out((i + 1) * src->dim + r, i * src->dim + r) = 1;
    return out;
}

Vec InducedModule::tuple_of(const SkewSeries& x, const Vec& m) const {
    const SModule& M = *src;
    SkewSeries canon = (M.chi == Chirality::Left)
                           ? (x.form() == Form::Right ? x : x.converted())
                           : (x.form() == Form::Left ? x : x.converted());
    Vec out(dim(), 0);
    for (unsigned i = 0; i < T; ++i) {
        Vec c = canon.coeff(i);
        if (twisted) c = (M.chi == Chirality::Left) ? M.skew->si(c) : M.skew->s(c);
        Vec block = M.act(c).apply(m);
        for (std::size_t r = 0; r < M.dim; ++r) out[i * M.dim + r] = block[r];
    }
    return out;
}

InducedModule induce(const SModule& m, unsigned T, bool twisted) {
    if (T < 1) throw ValidationError("induce: T >= 1 required");
    InducedModule ind;
    ind.src = &m;
    ind.T = T;
    ind.twisted = twisted;
    return ind;
}

ChainMapPair boundary_maps(const SModule& m, unsigned T) {
    if (T < 1) throw ValidationError("boundary_maps: T >= 1 required");
    ChainMapPair pair;
    pair.chi = m.chi;
    pair.T = T;
    pair.kappa = Mat(m.dim * (T + 1), m.dim * T, m.mod);
    for (unsigned i = 0; i <= T; ++i) {
        if (i >= 1)
            for (std::size_t r = 0; r < m.dim; ++r)
                pair.kappa(i * m.dim + r, (i - 1) * m.dim + r) = 1;
        if (i < T)
            for (std::size_t r = 0; r < m.dim; ++r)
                for (std::size_t c = 0; c < m.dim; ++c)
                    pair.kappa(i * m.dim + r, i * m.dim + c) =
                        m.mod.sub(pair.kappa(i * m.dim + r, i * m.dim + c), m.t_action(r, c));
    }
    pair.mu = Mat(m.dim, m.dim * (T + 1), m.mod);
    Mat tp = Mat::identity(m.dim, m.mod);
    for (unsigned i = 0; i <= T; ++i) {
        for (std::size_t r = 0; r < m.dim; ++r)
            for (std::size_t c = 0; c < m.dim; ++c) pair.mu(r, i * m.dim + c) = tp(r, c);
        tp = tp * m.t_action;
    }
    return pair;
}

ExactnessReport verify_exactness(const SModule& m, unsigned T) {
    ChainMapPair maps = boundary_maps(m, T);
    ExactnessReport rep;
    if (!(maps.mu * maps.kappa).is_zero()) {
        rep.witness = "mu o kappa != 0";
        return rep;
    }
    Submodule ker_kappa = col_kernel(maps.kappa);
    rep.kappa_injective = ker_kappa.is_zero();
    Submodule im_mu = col_image(maps.mu);
    rep.mu_surjective = im_mu == Submodule::full(m.dim, m.mod);
    Submodule im_kappa = col_image(maps.kappa);
    Submodule ker_mu = col_kernel(maps.mu);
    rep.image_equals_kernel = im_kappa == ker_mu;
    rep.dim_image_exp = im_kappa.size_exp();
    rep.dim_kernel_exp = ker_mu.size_exp();
    if (!rep.exact() && rep.witness.empty()) rep.witness = "exactness triple violated";
    return rep;
}

Submodule t_adic_intersection(const SModule& m) { return m.t_stable_image(); }

G0Witness g0_witness(const SModule& m, const SkewSeries& gamma) {
    const CoeffRing& R = *m.skew->ring;
    G0Witness w;
    SkewSeries g = gamma.form() == Form::Left ? gamma : gamma.converted();
    if (!R.is_unit(g.coeff(0)))
        throw ValidationError("g0_witness: gamma is not a unit", R.show(g.coeff(0)));
    // Conjugation identity gamma a = sigma(a) gamma, exactly.
    for (std::size_t i = 0; i < R.rank; ++i) {
        Vec b = R.basis(i);
        SkewSeries cb = SkewSeries::constant(m.skew, b, Form::Left, g.prec());
        SkewSeries sb = SkewSeries::constant(m.skew, m.skew->s(b), Form::Left, g.prec());
        if (g * cb != sb * g)
            throw ValidationError("g0_witness: gamma a != sigma(a) gamma", R.labels[i]);
    }
    // gamma acts on M through the t-action; this realizes the twisted iso.
    Mat gact(m.dim, m.dim, m.mod);
    Mat tp = Mat::identity(m.dim, m.mod);
    for (std::size_t i = 0; i < g.support(); ++i) {
        gact = gact + m.act(g.coeff(i)) * tp;
        tp = tp * m.t_action;
    }
    Mat ginv(0, 0, m.mod);
    try {
        ginv = gact.inverse();
    } catch (const std::domain_error&) {
        throw ValidationError("g0_witness: gamma does not act invertibly on M");
    }
    // Semilinearity: gact . act(sigma^{-1}(a)) = act(a) . gact.
    for (std::size_t i = 0; i < R.rank; ++i) {
        Vec b = R.basis(i);
        if (gact * m.act(m.skew->si(b)) != m.act(b) * gact)
            throw ValidationError("g0_witness: gamma action is not sigma-semilinear",
                                  R.labels[i]);
    }
    w.gamma_action = gact;
    unsigned T = std::max(1u, g.prec());
    ChainMapPair maps = boundary_maps(m, T);
    // Untwist kappa with the slotwise inverse of the gamma action.
    Mat blk(m.dim * T, m.dim * T, m.mod);
    for (unsigned i = 0; i < T; ++i)
        for (std::size_t r = 0; r < m.dim; ++r)
            for (std::size_t c = 0; c < m.dim; ++c)
                blk(i * m.dim + r, i * m.dim + c) = ginv(r, c);
    w.kappa_untwisted = maps.kappa * blk;
    ExactnessReport rep;
    rep.kappa_injective = col_kernel(w.kappa_untwisted).is_zero();
    rep.mu_surjective = col_image(maps.mu) == Submodule::full(m.dim, m.mod);
    rep.image_equals_kernel = col_image(w.kappa_untwisted) == col_kernel(maps.mu);
    rep.dim_image_exp = col_image(w.kappa_untwisted).size_exp();
    rep.dim_kernel_exp = col_kernel(maps.mu).size_exp();
    w.sequence = rep;
    w.valid = rep.exact();
    w.detail = w.valid ? "untwisted sequence exact" : "untwisted sequence NOT exact";
    return w;
}

SModule m_delta(const Instance& inst) {
    const CoeffRing& R = *inst.ring;
    std::vector<Mat> acts;
    for (std::size_t i = 0; i < R.rank; ++i) acts.push_back(R.left_mul(R.basis(i)));
    return make_smodule(inst.skew, Chirality::Left, R.zm, std::move(acts), inst.skew->delta,
                        "M_delta(" + inst.name + ")");
}

SModule m_delta_prime(const Instance& inst) {
    const CoeffRing& R = *inst.ring;
    std::vector<Mat> acts;
    for (std::size_t i = 0; i < R.rank; ++i) acts.push_back(R.right_mul(R.basis(i)));
    return make_smodule(inst.skew, Chirality::Right, R.zm, std::move(acts),
                        inst.skew->delta_prime, "M_delta_prime(" + inst.name + ")");
}

SModule simple_mod_p(const Instance& inst, Chirality chi) {
    const CoeffRing& R = *inst.ring;
    Zmod zp(R.zm.p, 1);
    std::vector<Mat> acts;
    for (std::size_t i = 0; i < R.rank; ++i) {
        // Act through the augmentation R -> R/Jac = Z/p.
        std::uint64_t aug;
        switch (R.kind) {
        case RingKind::Modular: aug = 1; break;
        case RingKind::TruncatedPoly: aug = (i == 0) ? 1 : 0; break;
        case RingKind::GroupAlgebra: aug = 1; break;
        default: throw ValidationError("simple_mod_p: unsupported ring kind");
        }
        Mat a(1, 1, zp);
        a(0, 0) = aug % zp.m;
        acts.push_back(a);
    }
    return make_smodule(inst.skew, chi, zp, std::move(acts), Mat(1, 1, zp),
                        "Z/p(" + inst.name + ")");
}

SModule quotient_mod_jac_power(const Instance& inst, unsigned k) {
    const CoeffRing& R = *inst.ring;
    if (R.zm.n != 1)
        throw ValidationError("quotient_mod_jac_power: char-p carrier required");
    Submodule ideal = R.jac_power(k);
    // Free basis of R/Jac^k: coordinates away from the Howell pivot columns.
    std::vector<std::size_t> pivots;
    const Mat& h = ideal.basis();
    for (std::size_t i = 0; i < h.rows(); ++i) {
        std::size_t c = 0;
        while (c < R.rank && h(i, c) == 0) ++c;
        pivots.push_back(c);
    }
    std::vector<std::size_t> coords;
    for (std::size_t c = 0; c < R.rank; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) coords.push_back(c);
    auto project = [&](const Vec& x) {
        Vec red = ideal.reduce(x);
        Vec out(coords.size());
        for (std::size_t i = 0; i < coords.size(); ++i) out[i] = red[coords[i]];
        return out;
    };
    auto matrix_of = [&](auto&& f) {
        Mat m(coords.size(), coords.size(), R.zm);
        for (std::size_t j = 0; j < coords.size(); ++j) {
            Vec lift = R.zero();
            lift[coords[j]] = 1;
            Vec img = project(f(lift));
            for (std::size_t i = 0; i < coords.size(); ++i) m(i, j) = img[i];
        }
        return m;
    };
    std::vector<Mat> acts;
    for (std::size_t b = 0; b < R.rank; ++b)
        acts.push_back(matrix_of([&](const Vec& x) { return R.mul(R.basis(b), x); }));
    Mat tmat = matrix_of([&](const Vec& x) { return inst.skew->d(x); });
    return make_smodule(inst.skew, Chirality::Left, R.zm, std::move(acts), tmat,
                        "R/Jac^" + std::to_string(k) + "(" + inst.name + ")");
}

SModule scalar_t_module(const Instance& inst, std::uint64_t t_scalar, Chirality chi) {
    const CoeffRing& R = *inst.ring;
    if (!inst.skew->delta_is_zero() || R.rank != 1)
        throw ValidationError("scalar_t_module: rank-1 delta=0 instances only");
    std::vector<Mat> acts;
    Mat a(1, 1, R.zm);
    a(0, 0) = 1;
    acts.push_back(a);
    Mat t(1, 1, R.zm);
    t(0, 0) = R.zm.red(t_scalar);
    return make_smodule(inst.skew, chi, R.zm, std::move(acts), t,
                        "scalar_t=" + std::to_string(t_scalar) + "(" + inst.name + ")");
}

} // namespace skw
