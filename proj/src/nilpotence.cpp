#include "skw/nilpotence.hpp"

namespace skw {

namespace {

Submodule step(const SkewPtr& s, const Submodule& u) {
    Submodule next = Submodule::zero(s->ring->rank, s->zm());
    for (const Mat& dj : s->delta_conj) next = next + u.image(dj);
    return next;
}

// Find one composition word of length len whose image is not inside target.
std::optional<std::vector<unsigned>> find_escaping_word(const SkewPtr& s, unsigned len,
                                                        const Submodule& target) {
    const unsigned d = s->sigma_order;
    std::vector<unsigned> word;
    Mat id = Mat::identity(s->ring->rank, s->zm());
    // DFS over words; prune when the composed image already sits in target
    // (applying more maps keeps it there only if target were stable, so no
    // pruning on containment of intermediate images -- enumerate fully but
    // cap the total).
    std::uint64_t budget = 200000;
    std::vector<std::pair<std::vector<unsigned>, Mat>> stack{{{}, id}};
    while (!stack.empty()) {
        auto [w, m] = std::move(stack.back());
        stack.pop_back();
        if (budget-- == 0) break;
        if (w.size() == len) {
            Submodule img = Submodule::full(s->ring->rank, s->zm()).image(m);
            if (!target.contains(img)) return w;
            continue;
        }
        for (unsigned j = 0; j < d; ++j) {
            auto w2 = w;
            w2.push_back(j);
            stack.push_back({std::move(w2), s->delta_conj[j] * m});
        }
    }
    return std::nullopt;
}

} // namespace

Submodule monomial_span(const SkewPtr& s, unsigned k) {
    Submodule u = Submodule::full(s->ring->rank, s->zm());
    for (unsigned i = 0; i < k; ++i) u = step(s, u);
    return u;
}

NilpotenceResult check_sigma_nilpotent(const SkewPtr& s, unsigned n) {
    if (n < 1) throw ValidationError("check_sigma_nilpotent: n >= 1 required");
    const Submodule target = s->ring->jac_power(n);
    NilpotenceResult res{};

    std::vector<Submodule> seq{Submodule::full(s->ring->rank, s->zm())}; // U_0 = R
    unsigned cyc_start = 0, cyc_end = 0;
    for (unsigned k = 1;; ++k) {
        Submodule u = step(s, seq.back());
        bool repeat = false;
        for (unsigned j = 1; j < seq.size(); ++j)
            if (seq[j] == u) {
                cyc_start = j;
                cyc_end = k;
                repeat = true;
                break;
            }
        seq.push_back(u);
        if (repeat) break;
        if (u.is_zero()) {
            cyc_start = k;
            cyc_end = k + 1;
            seq.push_back(u);
            break;
        }
    }
    res.cycle_start = cyc_start;
    res.cycle_len = cyc_end - cyc_start;

    // Eventual containment holds iff every state in the cycle is inside the
    // target; the minimal m is one past the last violating index.
    bool ok = true;
    for (unsigned k = cyc_start; k < cyc_end; ++k)
        if (!target.contains(seq[k])) { ok = false; break; }
    if (ok) {
        unsigned m = 1;
        for (unsigned k = 1; k < seq.size(); ++k)
            if (!target.contains(seq[k])) m = k + 1;
        res.nilpotent = true;
        res.witness_m = std::max(1u, m);
        return res;
    }
    res.nilpotent = false;
    for (unsigned k = cyc_start; k < cyc_end; ++k) {
        if (target.contains(seq[k])) continue;
        res.stable_span = seq[k];
        if (auto w = find_escaping_word(s, k, target)) {
            res.counterexample = *w;
            break;
        }
    }
    return res;
}

} // namespace skw
