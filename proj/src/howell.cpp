#include "skw/howell.hpp"

#include <algorithm>

namespace skw {

namespace {

struct Pivot {
    std::size_t row, col;
    unsigned e; // pivot entry is exactly p^e
};

// In-place echelonization with minimal-valuation pivots. Over the local ring
// Z/p^n the minimal-valuation entry of a column divides the others, so one
// elimination pass per column suffices.
std::vector<Pivot> echelonize(std::vector<Vec>& rows, std::size_t cols, const Zmod& zm) {
    std::vector<Pivot> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t best = rows.size();
        unsigned beste = zm.n + 1;
        for (std::size_t i = r; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            unsigned v = zm.val(rows[i][c]);
            if (v < beste) { beste = v; best = i; }
        }
        if (best == rows.size()) continue;
        std::swap(rows[r], rows[best]);
        std::uint64_t pe = zm.p_pow(beste);
        std::uint64_t u = rows[r][c] / pe; // unit since val is exactly beste
        rows[r] = vec_scale(zm, rows[r], zm.inv(u));
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            std::uint64_t q = rows[i][c] / pe;
            rows[i] = vec_sub(zm, rows[i], vec_scale(zm, rows[r], q));
        }
        pivots.push_back({r, c, beste});
        ++r;
    }
    rows.resize(r);
    return pivots;
}

Vec reduce_against(const std::vector<Vec>& rows, const std::vector<Pivot>& pivots, Vec v,
                   const Zmod& zm) {
    for (const auto& pv : pivots) {
        std::uint64_t pe = zm.p_pow(pv.e);
        std::uint64_t q = v[pv.col] / pe;
        if (q) v = vec_sub(zm, v, vec_scale(zm, rows[pv.row], q));
    }
    return v;
}

} // namespace

Mat howell_form(const Mat& a) {
    const Zmod zm = a.zm();
    const std::size_t cols = a.cols();
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (!vec_is_zero(a.row(i))) rows.push_back(a.row(i));

    std::vector<Pivot> pivots = echelonize(rows, cols, zm);
    // Saturate: the p^(n-e) multiple of a pivot row starts strictly to the
    // right of its pivot; add those shadows until they all reduce to zero.
    for (unsigned pass = 0; pass <= zm.n * cols + 1; ++pass) {
        std::vector<Vec> shadows;
        for (const auto& pv : pivots) {
            if (pv.e == 0) continue;
            Vec s = vec_scale(zm, rows[pv.row], zm.p_pow(zm.n - pv.e));
            s = reduce_against(rows, pivots, s, zm);
            if (!vec_is_zero(s)) shadows.push_back(s);
        }
        if (shadows.empty()) break;
        for (auto& s : shadows) rows.push_back(std::move(s));
        pivots = echelonize(rows, cols, zm);
    }
    // Canonicalize entries above each pivot.
    for (const auto& pv : pivots) {
        std::uint64_t pe = zm.p_pow(pv.e);
        for (std::size_t i = 0; i < pv.row; ++i) {
            std::uint64_t q = rows[i][pv.col] / pe;
            if (q) rows[i] = vec_sub(zm, rows[i], vec_scale(zm, rows[pv.row], q));
        }
    }
    return Mat::from_rows(rows, cols, zm);
}

Vec howell_reduce(const Mat& h, Vec v) {
    const Zmod zm = h.zm();
    for (std::size_t r = 0; r < h.rows(); ++r) {
        std::size_t c = 0;
        while (c < h.cols() && h(r, c) == 0) ++c;
        if (c == h.cols()) continue;
        std::uint64_t pe = zm.p_pow(zm.val(h(r, c)));
        std::uint64_t q = v[c] / pe;
        if (q) v = vec_sub(zm, v, vec_scale(zm, h.row(r), q));
    }
    return v;
}

Mat row_kernel(const Mat& m) {
    const Zmod zm = m.zm();
    const std::size_t a = m.rows(), b = m.cols();
    Mat blk(a, b + a, zm);
    for (std::size_t i = 0; i < a; ++i) {
        for (std::size_t j = 0; j < b; ++j) blk(i, j) = m(i, j);
        blk(i, b + i) = 1 % zm.m;
    }
    Mat h = howell_form(blk);
    std::vector<Vec> ker;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        bool lead_zero = true;
        for (std::size_t j = 0; j < b; ++j)
            if (h(i, j)) { lead_zero = false; break; }
        if (!lead_zero) continue;
        Vec v(a);
        for (std::size_t j = 0; j < a; ++j) v[j] = h(i, b + j);
        ker.push_back(std::move(v));
    }
    return howell_form(Mat::from_rows(ker, a, zm));
}

std::optional<Vec> solve_row(const Mat& m, const Vec& w) {
    const Zmod zm = m.zm();
    const std::size_t a = m.rows(), b = m.cols();
    Mat blk(a, b + a, zm);
    for (std::size_t i = 0; i < a; ++i) {
        for (std::size_t j = 0; j < b; ++j) blk(i, j) = m(i, j);
        blk(i, b + i) = 1 % zm.m;
    }
    Mat h = howell_form(blk);
    Vec u(b + a, 0);
    for (std::size_t j = 0; j < b; ++j) u[j] = zm.red(w[j]);
    u = howell_reduce(h, u);
    for (std::size_t j = 0; j < b; ++j)
        if (u[j]) return std::nullopt;
    Vec x(a);
    for (std::size_t j = 0; j < a; ++j) x[j] = zm.neg(u[b + j]);
    return x;
}

Submodule Submodule::intersect(const Submodule& o) const {
    const std::size_t k = basis_.rows(), l = o.basis_.rows();
    if (k == 0 || l == 0) return Submodule::zero(ambient_, zm_);
    Mat stacked(k + l, ambient_, zm_);
    for (std::size_t i = 0; i < k; ++i) stacked.set_row(i, basis_.row(i));
    for (std::size_t i = 0; i < l; ++i) stacked.set_row(k + i, o.basis_.row(i));
    Mat ker = row_kernel(stacked);
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < ker.rows(); ++i) {
        Vec x(ambient_, 0);
        for (std::size_t r = 0; r < k; ++r) {
            if (!ker(i, r)) continue;
            x = vec_add(zm_, x, vec_scale(zm_, basis_.row(r), ker(i, r)));
        }
        gens.push_back(std::move(x));
    }
    return Submodule::span(gens, ambient_, zm_);
}

std::vector<unsigned> quotient_divisors(const Submodule& z, const Submodule& b) {
    const Zmod zm = z.zm();
    std::vector<unsigned> e(zm.n + 1, 0);
    for (unsigned i = 0; i <= zm.n; ++i) {
        Submodule w = z.scaled(zm.p_pow(i)) + b;
        e[i] = w.size_exp() - b.size_exp();
    }
    // f_i = #{parts > i}; conjugate back to the partition itself.
    std::vector<unsigned> divisors;
    for (unsigned i = 0; i < zm.n; ++i) {
        unsigned fi = e[i] - e[i + 1];
        unsigned fnext = (i + 1 < zm.n) ? e[i + 1] - e[i + 2] : 0;
        for (unsigned c = fnext; c < fi; ++c) divisors.push_back(i + 1);
    }
    std::sort(divisors.rbegin(), divisors.rend());
    return divisors;
}

} // namespace skw
