#include "skw/series.hpp"

#include <sstream>

namespace skw {

void SkewSeries::check_compatible(const SkewSeries& o) const {
    if (s_.get() != o.s_.get())
        throw ValidationError("SkewSeries: mismatched skew data");
    if (form_ != o.form_)
        throw ValidationError("SkewSeries: mismatched coefficient form");
}

SkewSeries SkewSeries::operator+(const SkewSeries& o) const {
    check_compatible(o);
    SkewSeries r(s_, form_, std::min(prec_, o.prec_));
    r.c_.resize(std::max(c_.size(), o.c_.size()), s_->ring->zero());
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = s_->ring->add(coeff(i), o.coeff(i));
    r.trim();
    return r;
}

SkewSeries SkewSeries::negated() const {
    SkewSeries r(s_, form_, prec_);
    r.c_ = c_;
    for (auto& v : r.c_) v = s_->ring->neg(v);
    return r;
}

SkewSeries SkewSeries::operator-(const SkewSeries& o) const { return *this + o.negated(); }

SkewSeries SkewSeries::operator*(const SkewSeries& o) const {
    check_compatible(o);
    const CoeffRing& R = *s_->ring;
    OpTable ops(s_);
    SkewSeries r(s_, form_, std::min(prec_, o.prec_));
    if (c_.empty() || o.c_.empty()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, R.zero());
    if (form_ == Form::Left) {
        // left form: c_m = sum_{n<=m} sum_{j>=n} a_j M_{j-n,n}(delta,sigma)(b_{m-n})
        for (std::size_t j = 0; j < c_.size(); ++j) {
            if (vec_is_zero(c_[j])) continue;
            for (std::size_t n = 0; n <= j; ++n)
                for (std::size_t l = 0; l < o.c_.size(); ++l) {
                    if (vec_is_zero(o.c_[l])) continue;
                    Vec term = R.mul(c_[j], ops.m_left(static_cast<unsigned>(j - n),
                                                       static_cast<unsigned>(n))
                                                .apply(o.c_[l]));
                    r.c_[n + l] = R.add(r.c_[n + l], term);
                }
        }
    } else {
        // right form: c_m = sum_{n<=m} sum_{k>=n} M_{k-n,n}(delta',sigma')(a_{m-n}) b_k
        for (std::size_t k = 0; k < o.c_.size(); ++k) {
            if (vec_is_zero(o.c_[k])) continue;
            for (std::size_t n = 0; n <= k; ++n)
                for (std::size_t i = 0; i < c_.size(); ++i) {
                    if (vec_is_zero(c_[i])) continue;
                    Vec term = R.mul(ops.m_right(static_cast<unsigned>(k - n),
                                                 static_cast<unsigned>(n))
                                         .apply(c_[i]),
                                     o.c_[k]);
                    r.c_[i + n] = R.add(r.c_[i + n], term);
                }
        }
    }
    r.trim();
    return r;
}

SkewSeries SkewSeries::converted() const {
    const CoeffRing& R = *s_->ring;
    OpTable ops(s_);
    SkewSeries r(s_, form_ == Form::Left ? Form::Right : Form::Left, prec_);
    if (c_.empty()) return r;
    r.c_.assign(c_.size(), R.zero());
    if (form_ == Form::Right) {
        // right -> left: l_j = sum_{i>=j} M_{i-j,j}(delta,sigma)(a_i)
        for (std::size_t j = 0; j < c_.size(); ++j)
            for (std::size_t i = j; i < c_.size(); ++i)
                r.c_[j] = R.add(r.c_[j], ops.m_left(static_cast<unsigned>(i - j),
                                                    static_cast<unsigned>(j))
                                             .apply(c_[i]));
    } else {
        // left -> right: r_i = sum_{j>=i} M_{j-i,i}(delta',sigma')(a_j)
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = i; j < c_.size(); ++j)
                r.c_[i] = R.add(r.c_[i], ops.m_right(static_cast<unsigned>(j - i),
                                                     static_cast<unsigned>(i))
                                             .apply(c_[j]));
    }
    r.trim();
    return r;
}

SkewSeries SkewSeries::truncated(unsigned T) const {
    SkewSeries r(s_, form_, std::min(prec_, T));
    r.c_ = c_;
    if (r.c_.size() > T) r.c_.resize(T);
    r.trim();
    return r;
}

std::string SkewSeries::show() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (vec_is_zero(c_[i])) continue;
        if (!first) os << " + ";
        first = false;
        std::string a = s_->ring->show(c_[i]);
        if (i == 0) {
            os << a;
            continue;
        }
        std::string tp = i == 1 ? "t" : "t^" + std::to_string(i);
        if (form_ == Form::Left)
            os << "(" << a << ")" << tp;
        else
            os << tp << "(" << a << ")";
    }
    if (first) os << "0";
    return os.str();
}

SkewSeries sigma_hat(const SkewSeries& x) {
    const SkewData& s = *x.skew();
    if (x.form() != Form::Right)
        throw ValidationError("sigma_hat expects right coefficient form");
    if (!s.commuting) {
        auto w = s.noncommuting_witness();
        throw ValidationError("sigma_hat requires commuting sigma, delta",
                              s.ring->labels[w.value_or(0)]);
    }
    std::vector<Vec> out;
    out.reserve(x.support());
    for (std::size_t i = 0; i < x.support(); ++i) out.push_back(s.s(x.coeff(i)));
    return SkewSeries::from_coeffs(x.skew(), std::move(out), Form::Right, x.prec());
}

DeltaPowerReport delta_power_identity(const SkewPtr& s, const Vec& a, unsigned n) {
    if (!s->commuting)
        throw ValidationError("delta_power_identity requires commuting sigma, delta");
    const CoeffRing& R = *s->ring;
    // LHS: delta^n(a) as a constant.
    Vec da = a;
    for (unsigned i = 0; i < n; ++i) da = s->d(da);
    SkewSeries lhs = SkewSeries::constant(s, da, Form::Left, n + 1);
    // RHS: sum_i binom(n,i)(-1)^i t^{n-i} sigma^i(a) t^i, expanded exactly.
    SkewSeries rhs(s, Form::Left, n + 1);
    std::uint64_t binom = 1;
    for (unsigned i = 0; i <= n; ++i) {
        Vec sa = s->sigma_pow(i).apply(a);
        std::uint64_t cf = binom % R.zm.m;
        if (i % 2 == 1) cf = R.zm.neg(cf);
        SkewSeries term = SkewSeries::t_power(s, n - i, Form::Left, n + 1) *
                          SkewSeries::constant(s, R.scale(sa, cf), Form::Left, n + 1) *
                          SkewSeries::t_power(s, i, Form::Left, n + 1);
        rhs = rhs + term;
        binom = binom * (n - i) / (i + 1);
    }
    return {lhs == rhs, lhs, rhs};
}

} // namespace skw
