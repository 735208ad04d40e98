#include "skw/dualaction.hpp"

namespace skw {

namespace {

// Lift a carrier-modulus matrix to the ring modulus entrywise.
Mat lift(const Mat& m, const Zmod& target) {
    Mat r(m.rows(), m.cols(), target);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j) % target.m;
    return r;
}

} // namespace

bool is_r_linear(const SModule& m, const Mat& f) {
    const CoeffRing& R = *m.skew->ring;
    // p^e f = 0 so that f factors through the carrier.
    if (!f.scaled(R.zm.p_pow(m.mod.n)).is_zero()) return false;
    for (std::size_t b = 0; b < R.rank; ++b) {
        Mat ab = lift(m.r_action[b], R.zm);
        if (f * ab != R.left_mul(R.basis(b)) * f) return false;
    }
    return true;
}

DualSpace dual_space(const SModule& m) {
    const CoeffRing& R = *m.skew->ring;
    const std::size_t vars = R.rank * m.dim;
    std::vector<std::vector<std::uint64_t>> cols;
    auto add_constraints = [&](auto&& entry) {
        // entry(i, j, r, c) = coefficient of F(r, c) in equation (i, j)
        for (std::size_t i = 0; i < R.rank; ++i)
            for (std::size_t j = 0; j < m.dim; ++j) {
                std::vector<std::uint64_t> col(vars, 0);
                for (std::size_t r = 0; r < R.rank; ++r)
                    for (std::size_t c = 0; c < m.dim; ++c)
                        col[r * m.dim + c] = entry(i, j, r, c);
                cols.push_back(std::move(col));
            }
    };
    // F * A_b - L_b * F = 0 for each ring basis b.
    for (std::size_t b = 0; b < R.rank; ++b) {
        Mat ab = lift(m.r_action[b], R.zm);
        Mat lb = R.left_mul(R.basis(b));
        add_constraints([&](std::size_t i, std::size_t j, std::size_t r, std::size_t c) {
            std::uint64_t v = 0;
            if (r == i) v = R.zm.add(v, ab(c, j));
            if (c == j) v = R.zm.sub(v, lb(i, r));
            return v;
        });
    }
    // p^e F = 0.
    std::uint64_t pe = R.zm.p_pow(m.mod.n);
    if (pe != R.zm.m)
        add_constraints([&](std::size_t i, std::size_t j, std::size_t r, std::size_t c) {
            return (r == i && c == j) ? pe : 0;
        });
    Mat sys(vars, cols.size(), R.zm);
    for (std::size_t e = 0; e < cols.size(); ++e)
        for (std::size_t v = 0; v < vars; ++v) sys(v, e) = cols[e][v];
    Mat ker = row_kernel(sys);
    DualSpace d;
    d.src = &m;
    for (std::size_t i = 0; i < ker.rows(); ++i) {
        Mat f(R.rank, m.dim, R.zm);
        for (std::size_t r = 0; r < R.rank; ++r)
            for (std::size_t c = 0; c < m.dim; ++c) f(r, c) = ker(i, r * m.dim + c);
        d.basis.push_back(std::move(f));
    }
    for (const Mat& f : d.basis)
        if (!is_r_linear(m, f))
            throw ValidationError("dual_space: solver produced a non-linear functional");
    return d;
}

Mat act_coeff(const SModule& m, const Mat& f, const Vec& a) {
    return m.skew->ring->right_mul(m.skew->si(a)) * f;
}

Mat act_t(const SModule& m, const Mat& f) {
    const CoeffRing& R = *m.skew->ring;
    Mat t = lift(m.t_action, R.zm);
    Mat out = m.skew->sigma_inv * (f * t - m.skew->delta * f);
    // R-linear input gives R-linear output.
    if (is_r_linear(m, f) && !is_r_linear(m, out))
        throw ValidationError("act_t: result failed R-linearity");
    return out;
}

Vec b_apply(const SkewPtr& s, unsigned i, unsigned k, const Vec& a) {
    if (i > k) throw std::out_of_range("b_apply: need 0 <= i <= k");
    OpTable ops(s);
    return ops.b(i, k).apply(a);
}

Mat act_t_power(const SModule& m, const Mat& f, unsigned k) {
    const CoeffRing& R = *m.skew->ring;
    OpTable ops(m.skew);
    Mat t = lift(m.t_action, R.zm);
    Mat acc(R.rank, m.dim, R.zm);
    Mat tpow = Mat::identity(m.dim, R.zm);
    // t^{k-i} built from the top: iterate i = k down to 0.
    std::vector<Mat> tpows(k + 1, Mat(0, 0, R.zm));
    for (unsigned e = 0; e <= k; ++e) {
        tpows[e] = tpow;
        if (e < k) tpow = t * tpow;
    }
    for (unsigned i = 0; i <= k; ++i) {
        Mat term = ops.b(i, k) * f * tpows[k - i];
        acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    return m.skew->sigma_pow(-static_cast<long>(k)) * acc;
}

ActSeriesResult act_series(const SModule& m, const Mat& f, const SkewSeries& x) {
    if (x.form() != Form::Right)
        throw ValidationError("act_series expects right coefficient form");
    const CoeffRing& R = *m.skew->ring;
    ActSeriesResult res{Mat(R.rank, m.dim, R.zm), true};
    Mat ft = f;
    for (std::size_t i = 0; i < x.support(); ++i) {
        if (i > 0) ft = act_t(m, ft);
        res.value = res.value + act_coeff(m, ft, x.coeff(i));
    }
    // The tail vanishes once f^{t^k} = 0 for all k >= x's precision.
    ConvergenceWitness w = convergence_witness(m, R.jac_index);
    res.exact = x.prec() >= w.k_j;
    return res;
}

ConvergenceWitness convergence_witness(const SModule& m, unsigned j) {
    const CoeffRing& R = *m.skew->ring;
    Submodule target = R.jac_power(j);
    auto lands = [&](const std::vector<Mat>& gens) {
        for (const Mat& g : gens)
            for (std::size_t c = 0; c < g.cols(); ++c) {
                Vec col(g.rows());
                for (std::size_t r = 0; r < g.rows(); ++r) col[r] = g(r, c);
                if (!target.contains(col)) return false;
            }
        return true;
    };
    DualSpace d = dual_space(m);
    std::vector<Mat> cur = d.basis;
    ConvergenceWitness w;
    w.j = j;
    unsigned k = 0;
    const unsigned bound = R.jac_index * static_cast<unsigned>(m.dim) * R.zm.n + 2;
    while (!lands(cur)) {
        for (Mat& g : cur) g = act_t(m, g);
        ++k;
        if (k > bound)
            throw ValidationError("convergence_witness: no threshold within bound",
                                  std::to_string(bound));
    }
    w.k_j = k;
    // Stability window of length sigma_order past the threshold.
    std::vector<Mat> probe = cur;
    for (unsigned step = 0; step < m.skew->sigma_order; ++step) {
        for (Mat& g : probe) g = act_t(m, g);
        if (!lands(probe)) w.window_stable = false;
    }
    return w;
}

} // namespace skw
