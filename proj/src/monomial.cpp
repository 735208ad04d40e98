#include "skw/monomial.hpp"

namespace skw {

Mat OpTable::m_generic(unsigned k, unsigned l, const Mat& dm, const Mat& sm,
                       std::map<std::pair<unsigned, unsigned>, Mat>& memo) const {
    auto key = std::make_pair(k, l);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Mat r(s_->ring->rank, s_->ring->rank, s_->zm());
    if (k == 0 && l == 0)
        r = Mat::identity(s_->ring->rank, s_->zm());
    else {
        if (k > 0) r = r + dm * m_generic(k - 1, l, dm, sm, memo);
        if (l > 0) r = r + sm * m_generic(k, l - 1, dm, sm, memo);
    }
    return memo.emplace(key, std::move(r)).first->second;
}

const Mat& OpTable::m_left(unsigned k, unsigned l) const {
    m_generic(k, l, s_->delta, s_->sigma, ml_);
    return ml_.at({k, l});
}

const Mat& OpTable::m_right(unsigned k, unsigned l) const {
    m_generic(k, l, s_->delta_prime, s_->sigma_prime, mr_);
    return mr_.at({k, l});
}

const Mat& OpTable::b(unsigned i, unsigned k) const {
    auto key = std::make_pair(i, k);
    auto it = b_.find(key);
    if (it != b_.end()) return it->second;
    if (i > k) throw std::out_of_range("B_{i,k} requires 0 <= i <= k");
    Mat r(0, 0, s_->zm());
    if (i == 0)
        r = Mat::identity(s_->ring->rank, s_->zm());
    else {
        // Z^{k-1} Y Z'^{k-1} is the conjugate sigma^{k-1} delta sigma^{-(k-1)}.
        const Mat& conj = s_->delta_conj[(k - 1) % s_->sigma_order];
        if (i == k)
            r = conj * b(i - 1, k - 1);
        else
            r = b(i, k - 1) + conj * b(i - 1, k - 1);
    }
    return b_.emplace(key, std::move(r)).first->second;
}

std::uint64_t OpTable::m_leaf_count(unsigned k, unsigned l) {
    if (k == 0 && l == 0) return 1;
    std::uint64_t c = 0;
    if (k > 0) c += m_leaf_count(k - 1, l);
    if (l > 0) c += m_leaf_count(k, l - 1);
    return c;
}

WordSum expand_m(unsigned k, unsigned l) {
    if (k == 0 && l == 0) return {Word{}};
    WordSum out;
    if (k > 0)
        for (auto w : expand_m(k - 1, l)) {
            w.insert(w.begin(), Letter::Y);
            out.push_back(std::move(w));
        }
    if (l > 0)
        for (auto w : expand_m(k, l - 1)) {
            w.insert(w.begin(), Letter::Z);
            out.push_back(std::move(w));
        }
    return out;
}

WordSum expand_b(unsigned i, unsigned k) {
    if (i > k) return {};
    if (i == 0) return {Word{}};
    Word pref;
    for (unsigned j = 0; j + 1 < k; ++j) pref.push_back(Letter::Z);
    pref.push_back(Letter::Y);
    for (unsigned j = 0; j + 1 < k; ++j) pref.push_back(Letter::Zp);
    WordSum out;
    if (i < k)
        for (auto& w : expand_b(i, k - 1)) out.push_back(w);
    for (auto w : expand_b(i - 1, k - 1)) {
        w.insert(w.begin(), pref.begin(), pref.end());
        out.push_back(std::move(w));
    }
    return out;
}

Mat eval_word(const SkewData& s, const Word& w) {
    Mat r = Mat::identity(s.ring->rank, s.zm());
    // Words act by composition, leftmost letter applied last.
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        switch (*it) {
        case Letter::Y: r = s.delta * r; break;
        case Letter::Z: r = s.sigma * r; break;
        case Letter::Zp: r = s.sigma_inv * r; break;
        }
    }
    return r;
}

Mat eval_word_sum(const SkewData& s, const WordSum& ws) {
    Mat r(s.ring->rank, s.ring->rank, s.zm());
    for (const auto& w : ws) r = r + eval_word(s, w);
    return r;
}

unsigned count_letter(const Word& w, Letter l) {
    unsigned c = 0;
    for (auto x : w)
        if (x == l) ++c;
    return c;
}

} // namespace skw
