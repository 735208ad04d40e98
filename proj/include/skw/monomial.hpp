#pragma once

#include "skw/skew.hpp"

#include <cstdint>
#include <map>

namespace skw {

// Letters of the noncommutative monomial alphabet: Y binds delta, Z binds
// sigma, Zp binds sigma^-1.
enum class Letter : std::uint8_t { Y, Z, Zp };
using Word = std::vector<Letter>;
using WordSum = std::vector<Word>;

// Memoized evaluation tables for the operator families M_{k,l} and B_{i,k}
// attached to one SkewData. Values are column-action matrices on R.
class OpTable {
  public:
    explicit OpTable(SkewPtr s) : s_(std::move(s)) {}

    // M_{k,l}(delta, sigma): sum of all words with k Y's and l Z's.
    const Mat& m_left(unsigned k, unsigned l) const;
    // M_{k,l}(delta', sigma').
    const Mat& m_right(unsigned k, unsigned l) const;
    // B_{i,k}(delta, sigma, sigma^-1) from the explicit recursion.
    const Mat& b(unsigned i, unsigned k) const;

    Vec apply_m_left(unsigned k, unsigned l, const Vec& a) const { return m_left(k, l).apply(a); }

    const SkewData& skew() const { return *s_; }

    // Number of M_{0,0} leaves the un-memoized recursion visits; equals
    // binomial(k+l, k).
    static std::uint64_t m_leaf_count(unsigned k, unsigned l);

  private:
    Mat m_generic(unsigned k, unsigned l, const Mat& dm, const Mat& sm,
                  std::map<std::pair<unsigned, unsigned>, Mat>& memo) const;
    SkewPtr s_;
    mutable std::map<std::pair<unsigned, unsigned>, Mat> ml_, mr_, b_;
};

// Symbolic expansions, used by structural tests at small indices.
WordSum expand_m(unsigned k, unsigned l);          // words over {Y, Z}
WordSum expand_b(unsigned i, unsigned k);          // words over {Y, Z, Zp}
Mat eval_word(const SkewData& s, const Word& w);   // compose bound maps
Mat eval_word_sum(const SkewData& s, const WordSum& ws);
unsigned count_letter(const Word& w, Letter l);

} // namespace skw
