#include "skw/skew.hpp"

namespace skw {

std::optional<std::size_t> SkewData::noncommuting_witness() const {
    Mat sd = sigma * delta, ds = delta * sigma;
    for (std::size_t j = 0; j < ring->rank; ++j)
        for (std::size_t i = 0; i < ring->rank; ++i)
            if (sd(i, j) != ds(i, j)) return j;
    return std::nullopt;
}

namespace {

Mat sigma_from_gen_image(const CoeffRing& r, const Vec& image) {
    // sigma(gen^i) = image^i along the power basis.
    Mat m(r.rank, r.rank, r.zm);
    Vec cur = r.one();
    for (std::size_t j = 0; j < r.rank; ++j) {
        for (std::size_t i = 0; i < r.rank; ++i) m(i, j) = cur[i];
        cur = r.mul(cur, image);
    }
    return m;
}

Mat delta_from_gen_image(const CoeffRing& r, const Mat& sigma, const Vec& f) {
    if (r.kind != RingKind::TruncatedPoly && r.kind != RingKind::GroupAlgebra)
        throw ValidationError("delta generator image needs a generator-power basis");
    // d_{k+1} = f * gen^k + sigma(gen) * d_k, d_0 = 0.
    Mat m(r.rank, r.rank, r.zm);
    Vec gen = r.basis(r.gen_index);
    Vec sgen = sigma.apply(gen);
    Vec dk(r.rank, 0), genk = r.one();
    for (std::size_t k = 0; k < r.rank; ++k) {
        for (std::size_t i = 0; i < r.rank; ++i) m(i, k) = dk[i];
        dk = r.add(r.mul(f, genk), r.mul(sgen, dk));
        genk = r.mul(genk, gen);
    }
    // One step past the basis: the defining relation gen^rank = 0 (poly) or
    // gen^rank = 1 (group) forces delta(gen^rank) = 0.
    if (!vec_is_zero(dk))
        throw ValidationError("delta violates the ring's defining relation",
                              "delta(" + r.labels[r.gen_index] + "^" + std::to_string(r.rank) +
                                  ") = " + r.show(dk));
    return m;
}

} // namespace

SkewPtr validate_skew(RingPtr ring, const SigmaSpec& sigma_spec, const DeltaSpec& delta_spec,
                      unsigned max_order) {
    const CoeffRing& r = *ring;
    auto out = std::make_shared<SkewData>();
    out->ring = ring;

    if (std::holds_alternative<SigmaIdentity>(sigma_spec))
        out->sigma = Mat::identity(r.rank, r.zm);
    else if (auto* g = std::get_if<SigmaGenImage>(&sigma_spec))
        out->sigma = sigma_from_gen_image(r, g->image);
    else
        out->sigma = std::get<SigmaMatrix>(sigma_spec).map;

    // sigma multiplicative and unital on all basis pairs.
    if (out->sigma.apply(r.one()) != r.one())
        throw ValidationError("sigma(1) != 1");
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < r.rank; ++j) {
            Vec lhs = out->sigma.apply(r.mul(r.basis(i), r.basis(j)));
            Vec rhs = r.mul(out->sigma.apply(r.basis(i)), out->sigma.apply(r.basis(j)));
            if (lhs != rhs)
                throw ValidationError("sigma is not multiplicative",
                                      r.labels[i] + "," + r.labels[j]);
        }
    try {
        out->sigma_inv = out->sigma.inverse();
    } catch (const std::domain_error&) {
        throw ValidationError("sigma is not invertible");
    }

    // Finite order.
    Mat id = Mat::identity(r.rank, r.zm), pw = out->sigma;
    unsigned ord = 1;
    while (pw != id) {
        pw = pw * out->sigma;
        ++ord;
        if (ord > max_order)
            throw ValidationError("sigma order exceeds configured bound", std::to_string(max_order));
    }
    out->sigma_order = ord;

    if (std::holds_alternative<DeltaZero>(delta_spec))
        out->delta = Mat(r.rank, r.rank, r.zm);
    else if (std::holds_alternative<DeltaSigmaMinusId>(delta_spec))
        out->delta = out->sigma - id;
    else if (auto* g = std::get_if<DeltaGenImage>(&delta_spec))
        out->delta = delta_from_gen_image(r, out->sigma, g->image);
    else
        out->delta = std::get<DeltaMatrix>(delta_spec).map;

    if (!vec_is_zero(out->delta.apply(r.one())))
        throw ValidationError("delta(1) != 0");
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < r.rank; ++j) {
            Vec ab = r.mul(r.basis(i), r.basis(j));
            Vec lhs = out->delta.apply(ab);
            Vec rhs = r.add(r.mul(out->delta.apply(r.basis(i)), r.basis(j)),
                            r.mul(out->sigma.apply(r.basis(i)), out->delta.apply(r.basis(j))));
            if (lhs != rhs)
                throw ValidationError("delta fails the left Leibniz rule",
                                      r.labels[i] + "," + r.labels[j]);
        }

    out->sigma_prime = out->sigma_inv;
    out->delta_prime = (out->delta * out->sigma_inv).scaled(r.zm.m - 1);
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < r.rank; ++j) {
            Vec ab = r.mul(r.basis(i), r.basis(j));
            Vec lhs = out->delta_prime.apply(ab);
            Vec rhs = r.add(r.mul(out->delta_prime.apply(r.basis(i)),
                                  out->sigma_prime.apply(r.basis(j))),
                            r.mul(r.basis(i), out->delta_prime.apply(r.basis(j))));
            if (lhs != rhs)
                throw ValidationError("delta' fails the right Leibniz rule",
                                      r.labels[i] + "," + r.labels[j]);
        }

    Submodule jac = r.jac();
    if (jac.image(out->sigma) != jac || jac.image(out->sigma_inv) != jac)
        throw ValidationError("sigma does not stabilize Jac(R)");

    out->commuting = (out->sigma * out->delta == out->delta * out->sigma);

    out->delta_conj.reserve(out->sigma_order);
    Mat sj = id, sji = id;
    for (unsigned j = 0; j < out->sigma_order; ++j) {
        out->delta_conj.push_back(sj * out->delta * sji);
        sj = sj * out->sigma;
        sji = sji * out->sigma_inv;
    }
    return out;
}

} // namespace skw
