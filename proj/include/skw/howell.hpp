#pragma once

#include "skw/mat.hpp"

#include <optional>
#include <tuple>

namespace skw {

// Howell normal form over Z/p^n: the unique canonical row basis of a row
// span. Unlike plain echelon form it is span-saturated, so two generating
// sets of the same submodule produce bit-identical bases and membership is
// decidable by reduction.
Mat howell_form(const Mat& a);

// Canonical coset representative of v modulo the row span of a Howell basis.
Vec howell_reduce(const Mat& h, Vec v);

// Row kernel {x : x M = 0}, returned as a Howell basis.
Mat row_kernel(const Mat& m);

// One solution of x M = w, if any.
std::optional<Vec> solve_row(const Mat& m, const Vec& w);

// A submodule of (Z/p^n)^ambient, held in Howell form.
class Submodule {
  public:
    Submodule() = default;
    Submodule(std::size_t ambient, Zmod zm) : ambient_(ambient), zm_(zm), basis_(0, ambient, zm) {}

    static Submodule span(const std::vector<Vec>& gens, std::size_t ambient, Zmod zm) {
        return Submodule(ambient, zm, howell_form(Mat::from_rows(gens, ambient, zm)));
    }
    static Submodule span(const Mat& gens) {
        return Submodule(gens.cols(), gens.zm(), howell_form(gens));
    }
    static Submodule full(std::size_t ambient, Zmod zm) {
        return Submodule(ambient, zm, howell_form(Mat::identity(ambient, zm)));
    }
    static Submodule zero(std::size_t ambient, Zmod zm) { return Submodule(ambient, zm); }

    std::size_t ambient() const { return ambient_; }
    const Zmod& zm() const { return zm_; }
    const Mat& basis() const { return basis_; }
    std::size_t num_gens() const { return basis_.rows(); }
    bool is_zero() const { return basis_.rows() == 0; }

    bool contains(const Vec& v) const { return vec_is_zero(howell_reduce(basis_, v)); }
    bool contains(const Submodule& o) const {
        for (std::size_t i = 0; i < o.basis_.rows(); ++i)
            if (!contains(o.basis_.row(i))) return false;
        return true;
    }
    Vec reduce(const Vec& v) const { return howell_reduce(basis_, v); }

    bool operator==(const Submodule& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Submodule& o) const { return !(*this == o); }

    Submodule operator+(const Submodule& o) const {
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < basis_.rows(); ++i) rows.push_back(basis_.row(i));
        for (std::size_t i = 0; i < o.basis_.rows(); ++i) rows.push_back(o.basis_.row(i));
        return span(rows, ambient_, zm_);
    }

    Submodule intersect(const Submodule& o) const;

    // Image of this submodule under the column-action map M (elements are
    // rows, so rows map through M^T).
    Submodule image(const Mat& m) const {
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < basis_.rows(); ++i) rows.push_back(m.apply(basis_.row(i)));
        return span(rows, m.rows(), zm_);
    }

    Submodule scaled(std::uint64_t c) const {
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < basis_.rows(); ++i) rows.push_back(vec_scale(zm_, basis_.row(i), c));
        return span(rows, ambient_, zm_);
    }

    // log_p of the number of elements.
    unsigned size_exp() const {
        unsigned e = 0;
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            std::size_t c = 0;
            while (c < ambient_ && basis_(i, c) == 0) ++c;
            e += zm_.n - zm_.val(basis_(i, c));
        }
        return e;
    }

  private:
    Submodule(std::size_t ambient, Zmod zm, Mat h) : ambient_(ambient), zm_(zm), basis_(std::move(h)) {}
    std::size_t ambient_ = 0;
    Zmod zm_;
    Mat basis_;
};

// Elementary divisor exponents of the p-group Z/B (B <= Z), sorted
// descending. Derived from the size profile |p^i Z + B|.
std::vector<unsigned> quotient_divisors(const Submodule& z, const Submodule& b);

} // namespace skw
