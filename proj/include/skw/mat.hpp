#pragma once

#include "skw/zmod.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

namespace skw {

using Vec = std::vector<std::uint64_t>;

// Dense matrix over Z/p^n. Maps act on column vectors (w = M v); submodules
// are stored as row bases elsewhere.
class Mat {
  public:
    Mat() = default;
    Mat(std::size_t r, std::size_t c, Zmod zm) : rows_(r), cols_(c), zm_(zm), a_(r * c, 0) {}

    static Mat identity(std::size_t d, Zmod zm) {
        Mat m(d, d, zm);
        for (std::size_t i = 0; i < d; ++i) m(i, i) = 1 % zm.m;
        return m;
    }

    static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols, Zmod zm) {
        Mat m(rows.size(), cols, zm);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = zm.red(rows[i][j]);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Zmod& zm() const { return zm_; }

    std::uint64_t& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    std::uint64_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const { return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }
    void set_row(std::size_t i, const Vec& v) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = zm_.red(v[j]);
    }

    Mat operator*(const Mat& o) const {
        Mat r(rows_, o.cols_, zm_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                std::uint64_t x = (*this)(i, k);
                if (!x) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r(i, j) = (r(i, j) + x * o(k, j)) % zm_.m;
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        Mat r(rows_, cols_, zm_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = zm_.add(a_[i], o.a_[i]);
        return r;
    }

    Mat operator-(const Mat& o) const {
        Mat r(rows_, cols_, zm_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = zm_.sub(a_[i], o.a_[i]);
        return r;
    }

    Mat scaled(std::uint64_t c) const {
        Mat r(rows_, cols_, zm_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = zm_.mul(a_[i], c);
        return r;
    }

    Vec apply(const Vec& v) const {
        Vec w(rows_, 0);
        for (std::size_t i = 0; i < rows_; ++i) {
            std::uint64_t s = 0;
            for (std::size_t j = 0; j < cols_; ++j) s = (s + (*this)(i, j) * v[j]) % zm_.m;
            w[i] = s;
        }
        return w;
    }

    // Row-vector action x -> x * M, matching row-basis submodule conventions.
    Vec apply_row(const Vec& x) const {
        Vec w(cols_, 0);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (!x[i]) continue;
            for (std::size_t j = 0; j < cols_; ++j) w[j] = (w[j] + x[i] * (*this)(i, j)) % zm_.m;
        }
        return w;
    }

    Mat transposed() const {
        Mat r(cols_, rows_, zm_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Mat pow(std::uint64_t e) const {
        Mat r = identity(rows_, zm_), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    bool is_zero() const {
        for (auto x : a_)
            if (x) return false;
        return true;
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    // Inverse of an invertible matrix over Z/p^n (Gauss with unit pivots).
    // Throws if not invertible.
    Mat inverse() const;

    friend std::ostream& operator<<(std::ostream& os, const Mat& m) {
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i ? "; " : "[");
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? "," : "") << m(i, j);
        }
        return os << "]";
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    Zmod zm_;
    Vec a_;
};

inline Mat Mat::inverse() const {
    if (rows_ != cols_) throw std::domain_error("Mat::inverse: not square");
    Mat a = *this, inv = identity(rows_, zm_);
    for (std::size_t c = 0; c < cols_; ++c) {
        std::size_t piv = rows_;
        for (std::size_t i = c; i < rows_; ++i)
            if (zm_.is_unit(a(i, c))) { piv = i; break; }
        if (piv == rows_) throw std::domain_error("Mat::inverse: singular over Z/p^n");
        if (piv != c)
            for (std::size_t j = 0; j < cols_; ++j) {
                std::swap(a(piv, j), a(c, j));
                std::swap(inv(piv, j), inv(c, j));
            }
        std::uint64_t u = zm_.inv(a(c, c));
        for (std::size_t j = 0; j < cols_; ++j) {
            a(c, j) = zm_.mul(a(c, j), u);
            inv(c, j) = zm_.mul(inv(c, j), u);
        }
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == c) continue;
            std::uint64_t f = a(i, c);
            if (!f) continue;
            for (std::size_t j = 0; j < cols_; ++j) {
                a(i, j) = zm_.sub(a(i, j), zm_.mul(f, a(c, j)));
                inv(i, j) = zm_.sub(inv(i, j), zm_.mul(f, inv(c, j)));
            }
        }
    }
    return inv;
}

inline Vec vec_add(const Zmod& zm, const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = zm.add(a[i], b[i]);
    return r;
}
inline Vec vec_sub(const Zmod& zm, const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = zm.sub(a[i], b[i]);
    return r;
}
inline Vec vec_scale(const Zmod& zm, const Vec& a, std::uint64_t c) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = zm.mul(a[i], c);
    return r;
}
inline bool vec_is_zero(const Vec& a) {
    for (auto x : a)
        if (x) return false;
    return true;
}

} // namespace skw
