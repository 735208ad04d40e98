#pragma once

#include "skw/monomial.hpp"

namespace skw {

enum class Form { Left, Right }; // sum a_i t^i vs sum t^i a_i

// Element of the skew polynomial ring R[t; sigma, delta], carried exactly:
// multiplication and form conversion never drop support, so ring axioms and
// the conversion identities hold on the nose. t_precision is the validity
// horizon the caller asked for (min of operands under arithmetic); truncate()
// reduces into an honest quotient where the instance provides one (t^T = 0).
class SkewSeries {
  public:
    SkewSeries() = default;
    SkewSeries(SkewPtr s, Form f, unsigned prec) : s_(std::move(s)), form_(f), prec_(prec) {}

    static SkewSeries constant(SkewPtr s, const Vec& a, Form f, unsigned prec) {
        SkewSeries x(std::move(s), f, prec);
        x.c_.push_back(a);
        x.trim();
        return x;
    }
    static SkewSeries t_power(SkewPtr s, unsigned i, Form f, unsigned prec) {
        SkewSeries x(s, f, prec);
        x.c_.assign(i + 1, s->ring->zero());
        x.c_[i] = s->ring->one();
        return x;
    }
    static SkewSeries from_coeffs(SkewPtr s, std::vector<Vec> coeffs, Form f, unsigned prec) {
        SkewSeries x(std::move(s), f, prec);
        x.c_ = std::move(coeffs);
        x.trim();
        return x;
    }

    const SkewPtr& skew() const { return s_; }
    Form form() const { return form_; }
    unsigned prec() const { return prec_; }
    std::size_t support() const { return c_.size(); }
    Vec coeff(std::size_t i) const { return i < c_.size() ? c_[i] : s_->ring->zero(); }
    const std::vector<Vec>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    SkewSeries operator+(const SkewSeries& o) const;
    SkewSeries operator-(const SkewSeries& o) const;
    SkewSeries operator*(const SkewSeries& o) const; // skew product in either form
    SkewSeries negated() const;

    bool operator==(const SkewSeries& o) const {
        return form_ == o.form_ && c_ == o.c_;
    }
    bool operator!=(const SkewSeries& o) const { return !(*this == o); }

    // Exact change between left and right coefficient form.
    SkewSeries converted() const;
    SkewSeries truncated(unsigned T) const;

    std::string show() const;

  private:
    void trim() {
        while (!c_.empty() && vec_is_zero(c_.back())) c_.pop_back();
    }
    void check_compatible(const SkewSeries& o) const;

    SkewPtr s_;
    Form form_ = Form::Left;
    unsigned prec_ = 0;
    std::vector<Vec> c_;
};

// The lifted automorphism sigma-hat: sum t^i a_i -> sum t^i sigma(a_i).
// Requires a commuting pair; otherwise throws with the witness basis element.
SkewSeries sigma_hat(const SkewSeries& x);

struct DeltaPowerReport {
    bool equal;
    SkewSeries lhs, rhs;
};
// Commuting-pair power identity:
// delta^n(a) = sum_i binom(n,i)(-1)^i t^{n-i} sigma^i(a) t^i.
DeltaPowerReport delta_power_identity(const SkewPtr& s, const Vec& a, unsigned n);

} // namespace skw
