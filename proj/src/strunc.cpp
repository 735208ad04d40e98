#include "skw/strunc.hpp"

#include "skw/instances.hpp"

namespace skw {

STrunc::STrunc(SkewPtr skew, unsigned T) : s_(std::move(skew)), T_(T) {
    if (T_ < 1) throw ValidationError("STrunc: T >= 1 required");
    const CoeffRing& R = *s_->ring;
    if (!s_->delta_is_zero()) {
        // Need t^T = 0 honestly: char p, delta = sigma - id, ord(sigma) | T,
        // T a power of p (so that (1+t)^T - 1 = t^T, which is then central).
        bool ok = R.zm.n == 1;
        Mat smi = s_->sigma - Mat::identity(R.rank, R.zm);
        ok = ok && (s_->delta == smi);
        ok = ok && (T_ % s_->sigma_order == 0);
        unsigned tt = T_;
        while (tt % R.zm.p == 0) tt /= R.zm.p;
        ok = ok && tt == 1;
        if (!ok)
            throw ValidationError("STrunc: capped truncation is not an honest quotient here",
                                  "T=" + std::to_string(T_));
    }
    OpTable ops(s_);
    mtable_.resize(T_);
    for (unsigned k = 0; k < T_; ++k) {
        mtable_[k].resize(k + 1, Mat(0, 0, R.zm));
        for (unsigned n = 0; n <= k; ++n) mtable_[k][n] = ops.m_left(k - n, n);
    }
}

Vec STrunc::one() const {
    Vec v = zero();
    v[0] = 1 % zm().m;
    return v;
}

Vec STrunc::t_elem() const {
    Vec v = zero();
    if (T_ > 1) v[rank()] = 1 % zm().m;
    return v;
}

Vec STrunc::embed_ring(const Vec& a) const {
    Vec v = zero();
    for (std::size_t i = 0; i < rank(); ++i) v[i] = zm().red(a[i]);
    return v;
}

Vec STrunc::embed_series(const SkewSeries& x) const {
    SkewSeries lf = x.form() == Form::Left ? x : x.converted();
    Vec v = zero();
    for (unsigned i = 0; i < T_ && i < lf.support(); ++i) {
        Vec c = lf.coeff(i);
        for (std::size_t r = 0; r < rank(); ++r) v[i * rank() + r] = zm().red(c[r]);
    }
    return v;
}

Vec STrunc::mul(const Vec& a, const Vec& b) const {
    const CoeffRing& R = *s_->ring;
    Vec out = zero();
    for (unsigned j = 0; j < T_; ++j) {
        Vec aj(a.begin() + j * rank(), a.begin() + (j + 1) * rank());
        if (vec_is_zero(aj)) continue;
        for (unsigned n = 0; n <= j; ++n)
            for (unsigned l = 0; n + l < T_; ++l) {
                Vec bl(b.begin() + l * rank(), b.begin() + (l + 1) * rank());
                if (vec_is_zero(bl)) continue;
                Vec term = R.mul(aj, mtable_[j][n].apply(bl));
                for (std::size_t r = 0; r < rank(); ++r)
                    out[(n + l) * rank() + r] = zm().add(out[(n + l) * rank() + r], term[r]);
            }
    }
    return out;
}

Mat STrunc::left_mul(const Vec& a) const {
    const CoeffRing& R = *s_->ring;
    Mat out(dim(), dim(), zm());
    // Column (e_r, i): a * (e_r t^i) = sum_j sum_{n<=j} a_j M_{j-n,n}(e_r) t^{n+i}.
    for (unsigned j = 0; j < T_; ++j) {
        Vec aj(a.begin() + j * rank(), a.begin() + (j + 1) * rank());
        if (vec_is_zero(aj)) continue;
        for (unsigned n = 0; n <= j; ++n)
            for (std::size_t er = 0; er < rank(); ++er) {
                Vec img = R.mul(aj, mtable_[j][n].apply(R.basis(er)));
                for (unsigned i = 0; n + i < T_; ++i)
                    for (std::size_t r = 0; r < rank(); ++r)
                        out((n + i) * rank() + r, i * rank() + er) =
                            zm().add(out((n + i) * rank() + r, i * rank() + er), img[r]);
            }
    }
    return out;
}

Mat STrunc::right_mul(const Vec& a) const {
    const CoeffRing& R = *s_->ring;
    Mat out(dim(), dim(), zm());
    // Column (e_r, i): (e_r t^i) * a = sum_j sum_{n<=i} e_r M_{i-n,n}(a_j) t^{n+j}.
    for (unsigned i = 0; i < T_; ++i)
        for (unsigned n = 0; n <= i; ++n)
            for (unsigned j = 0; n + j < T_; ++j) {
                Vec aj(a.begin() + j * rank(), a.begin() + (j + 1) * rank());
                if (vec_is_zero(aj)) continue;
                for (std::size_t er = 0; er < rank(); ++er) {
                    Vec img = R.mul(R.basis(er), mtable_[i][n].apply(aj));
                    for (std::size_t r = 0; r < rank(); ++r)
                        out((n + j) * rank() + r, i * rank() + er) =
                            zm().add(out((n + j) * rank() + r, i * rank() + er), img[r]);
                }
            }
    return out;
}

Vec STrunc::reduce_to(const STrunc& small, const Vec& a) const {
    if (small.rank() != rank())
        throw ValidationError("STrunc::reduce_to: incompatible coefficient ranks");
    Vec v = small.zero();
    for (unsigned i = 0; i < small.T_ && i < T_; ++i)
        for (std::size_t r = 0; r < rank(); ++r)
            v[i * rank() + r] = a[i * rank() + r] % small.zm().m;
    return v;
}

STower strunc_tower(const std::string& name, unsigned base_T, unsigned base_n) {
    STower tower;
    if (name == "IWA") {
        // Honest quotients sit at T = p^b; grow the group level. The base_T
        // request is satisfied by the smallest p^b >= base_T.
        Instance inst = builtin_instance("IWA");
        unsigned T = inst.t_prec; // p^b = 3
        while (T < base_T) T *= 3;
        for (unsigned lvl = 0; lvl < 3; ++lvl) {
            tower.level.emplace_back(inst.skew, T);
            T *= 3;
        }
        return tower;
    }
    if (name == "TRIV" || name == "ZPT") {
        for (unsigned lvl = 0; lvl < 3; ++lvl) {
            InstanceOverrides ov;
            ov.t_prec = base_T + 2 * lvl;
            if (name == "ZPT") ov.p_prec = base_n + lvl;
            Instance inst = builtin_instance(name, ov);
            tower.level.emplace_back(inst.skew, base_T + 2 * lvl);
        }
        return tower;
    }
    throw ValidationError("strunc_tower: unsupported instance", name);
}

} // namespace skw
