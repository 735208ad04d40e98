#pragma once

#include "skw/smodule.hpp"

namespace skw {

// Skew Laurent element over (R, sigma) with delta = 0: exact finite support
// from the valuation upward, t commuting by a t^k = t^k sigma^k(a). The
// window metadata mirrors SkewSeries precision bookkeeping.
class LaurentSeries {
  public:
    LaurentSeries() = default;
    LaurentSeries(SkewPtr s, Form f) : s_(std::move(s)), form_(f) {
        if (!s_->delta_is_zero())
            throw ValidationError("LaurentSeries requires delta = 0");
    }

    static LaurentSeries t_power(SkewPtr s, long k, Form f) {
        LaurentSeries x(std::move(s), f);
        x.val_ = k;
        x.c_.push_back(x.s_->ring->one());
        return x;
    }
    static LaurentSeries constant(SkewPtr s, const Vec& a, Form f) {
        LaurentSeries x(std::move(s), f);
        x.c_.push_back(a);
        x.canon();
        return x;
    }
    static LaurentSeries from_coeffs(SkewPtr s, long valuation, std::vector<Vec> coeffs, Form f) {
        LaurentSeries x(std::move(s), f);
        x.val_ = valuation;
        x.c_ = std::move(coeffs);
        x.canon();
        return x;
    }

    const SkewPtr& skew() const { return s_; }
    Form form() const { return form_; }
    long valuation() const { return val_; }
    std::size_t support() const { return c_.size(); }
    bool is_zero() const { return c_.empty(); }
    Vec coeff_at(long deg) const {
        if (deg < val_ || deg >= val_ + static_cast<long>(c_.size())) return s_->ring->zero();
        return c_[static_cast<std::size_t>(deg - val_)];
    }

    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries negated() const;
    LaurentSeries operator-(const LaurentSeries& o) const { return *this + o.negated(); }
    bool operator==(const LaurentSeries& o) const {
        return form_ == o.form_ && val_ == o.val_ && c_ == o.c_;
    }
    bool operator!=(const LaurentSeries& o) const { return !(*this == o); }

    std::string show() const;

  private:
    void canon() {
        while (!c_.empty() && vec_is_zero(c_.back())) c_.pop_back();
        std::size_t lead = 0;
        while (lead < c_.size() && vec_is_zero(c_[lead])) ++lead;
        if (lead) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
            val_ += static_cast<long>(lead);
        }
        if (c_.empty()) val_ = 0;
    }
    SkewPtr s_;
    Form form_ = Form::Left;
    long val_ = 0;
    std::vector<Vec> c_;
};

// t^{-1}; t * invert_t(s) = invert_t(s) * t = 1.
LaurentSeries invert_t(const SkewPtr& s, Form f);

// Rank-1 module with an invertible scalar t-action (Laurent battery entry);
// skips the separation requirement which holds only for power series modules.
SModule laurent_scalar_module(const Instance& inst, std::uint64_t t_scalar);

// Embedding of a delta = 0 skew series into the Laurent ring.
LaurentSeries localize(const SkewSeries& x);

struct LaurentModuleReport {
    bool t_invertible = false;
    bool sequence_exact = false;        // windowed kappa/mu triple
    bool ext_shift_checked = false;     // sigma = id instances only
    bool ext_shift_holds = false;
    unsigned window = 0;
    std::string detail;
};

// Laurent-module checks for a finite module with invertible t-action: the
// untwisted exact sequence on a symmetric window.
LaurentModuleReport laurent_module_checks(const SModule& m, unsigned window);

struct LaurentExtDegree {
    unsigned degree = 0;
    bool vanishing = true;
    bool stable = true;
    std::vector<unsigned> divisors;
};

struct LaurentExtShiftReport {
    std::string module;
    std::vector<LaurentExtDegree> ext_T;
    unsigned j_T = 0, j_R = 0;
    bool shift_holds = false; // Ext^j_T invariants = Ext^{j-1}_R, grades shift by one
    std::string detail;
};

// Ext over the skew Laurent polynomial ring for a presented module with
// invertible t-matrix, on exact degree windows with adaptive boundary
// saturation; sigma = id instances only. Compared against the R-side Ext of
// the same presentation.
struct HModule;
LaurentExtShiftReport laurent_ext_shift(const HModule& m, unsigned window);

} // namespace skw
