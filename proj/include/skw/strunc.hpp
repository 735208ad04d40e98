#pragma once

#include "skw/series.hpp"

namespace skw {

// Finite model of S at a truncation where t^T = 0 holds honestly, so the
// capped left-form multiplication is exact ring arithmetic:
//  - delta = 0: any (T, n), the quotient S/(t^T);
//  - char p with delta = sigma - id and ord(sigma) | T = p^b: the group-flavored
//    quotient, where (1+t)^{p^b} - 1 = t^{p^b} is central.
// Elements are flat vectors of length rank*T over Z/p^n (slot i = coefficient
// of t^i).
class STrunc {
  public:
    STrunc(SkewPtr skew, unsigned T);

    const SkewPtr& skew() const { return s_; }
    unsigned T() const { return T_; }
    const Zmod& zm() const { return s_->ring->zm; }
    std::size_t rank() const { return s_->ring->rank; }
    std::size_t dim() const { return rank() * T_; }

    Vec zero() const { return Vec(dim(), 0); }
    Vec one() const;
    Vec t_elem() const;
    Vec embed_ring(const Vec& a) const;
    Vec embed_series(const SkewSeries& x) const; // left form, truncated

    Vec add(const Vec& a, const Vec& b) const { return vec_add(zm(), a, b); }
    Vec mul(const Vec& a, const Vec& b) const;

    // Regular representations over Z/p^n.
    Mat left_mul(const Vec& a) const;
    Mat right_mul(const Vec& a) const;

    // Ring surjection onto a coarser model (coefficient reduction plus
    // t-truncation); both models must come from the same instance family.
    Vec reduce_to(const STrunc& small, const Vec& a) const;

  private:
    SkewPtr s_;
    unsigned T_;
    std::vector<std::vector<Mat>> mtable_; // mtable_[k][n] = M_{k-n,n}(delta,sigma)
};

// Three-level precision tower (base, +1, +2) for stable-cohomology
// computations. Towers raise (T, n) for delta = 0 instances and the
// group-level p^b for IWA-type instances.
struct STower {
    std::vector<STrunc> level; // level[0] = base
};

STower strunc_tower(const std::string& instance_name, unsigned base_T, unsigned base_n);

} // namespace skw
