#include "skw/instances.hpp"

#include <json.hpp>

namespace skw {

GroupOracle::GroupOracle(std::uint64_t p, unsigned n, std::uint64_t q, std::uint64_t g,
                         std::uint64_t c)
    : q_(q), g_(g), c_(c), zm_(p, n) {
    conj_pow_.resize(g_);
    std::uint64_t cj = 1;
    for (std::uint64_t j = 0; j < g_; ++j) {
        conj_pow_[j] = cj;
        cj = (cj * c_) % q_;
    }
    if ((conj_pow_.back() * c_) % q_ != 1)
        throw ValidationError("GroupOracle: conjugation exponent has wrong order",
                              std::to_string(c));
}

Vec GroupOracle::one() const { return monomial(0, 0); }

Vec GroupOracle::monomial(std::uint64_t i, std::uint64_t j) const {
    Vec v(dim(), 0);
    v[(i % q_) * g_ + (j % g_)] = 1 % zm_.m;
    return v;
}

Vec GroupOracle::mul(const Vec& a, const Vec& b) const {
    Vec r(dim(), 0);
    for (std::uint64_t i1 = 0; i1 < q_; ++i1)
        for (std::uint64_t j1 = 0; j1 < g_; ++j1) {
            std::uint64_t x = a[i1 * g_ + j1];
            if (!x) continue;
            for (std::uint64_t i2 = 0; i2 < q_; ++i2)
                for (std::uint64_t j2 = 0; j2 < g_; ++j2) {
                    std::uint64_t y = b[i2 * g_ + j2];
                    if (!y) continue;
                    std::uint64_t i = (i1 + i2 * conj_pow_[j1]) % q_;
                    std::uint64_t j = (j1 + j2) % g_;
                    r[i * g_ + j] = (r[i * g_ + j] + x * y) % zm_.m;
                }
        }
    return r;
}

Vec GroupOracle::t() const {
    Vec v = monomial(0, 1);
    v[0] = zm_.sub(v[0], 1);
    return v;
}

Vec GroupOracle::embed_ring(const Vec& a) const {
    Vec r = zero();
    for (std::uint64_t i = 0; i < q_; ++i) r[i * g_] = zm_.red(a[i]);
    return r;
}

Vec GroupOracle::embed_series(const SkewSeries& x) const {
    SkewSeries lf = x.form() == Form::Left ? x : x.converted();
    Vec r = zero(), tk = one();
    for (std::size_t k = 0; k < lf.support(); ++k) {
        r = add(r, mul(embed_ring(lf.coeff(k)), tk));
        tk = mul(tk, t());
    }
    return r;
}

namespace {

Instance make_px_family(const std::string& name, std::uint64_t p, unsigned N, std::uint64_t u,
                        std::size_t fdeg, unsigned t_prec) {
    if (u == 0 || u == 1 || u >= p)
        throw ValidationError(name + ": sigma unit u must lie in F_p \\ {0,1}", std::to_string(u));
    Instance inst;
    inst.name = name;
    inst.ring = make_truncated_poly_ring(p, 1, N);
    Vec ux = inst.ring->scale(inst.ring->basis(1), u);
    Vec f = inst.ring->basis(fdeg);
    inst.skew = validate_skew(inst.ring, SigmaGenImage{ux}, DeltaGenImage{f});
    inst.t_prec = t_prec;
    return inst;
}

} // namespace

Instance iwasawa_instance(std::uint64_t p, unsigned a, unsigned b, std::uint64_t c) {
    if (p == 2 || !is_prime_u64(p))
        throw ValidationError("iwasawa_instance: p must be an odd prime", std::to_string(p));
    std::uint64_t qa = 1, qb = 1;
    for (unsigned i = 0; i < a; ++i) qa *= p;
    for (unsigned i = 0; i < b; ++i) qb *= p;
    // Conjugation by gamma of order p^b must be a valid action: c^(p^b) = 1 mod p^a.
    std::uint64_t cc = 1;
    for (std::uint64_t i = 0; i < qb; ++i) cc = (cc * c) % qa;
    if (cc != 1)
        throw ValidationError("iwasawa_instance: invalid conjugation exponent",
                              std::to_string(c) + "^" + std::to_string(qb) + " mod " +
                                  std::to_string(qa) + " = " + std::to_string(cc));
    Instance inst;
    inst.name = "IWA";
    inst.ring = make_group_algebra_ring(p, 1, qa);
    Vec hc = inst.ring->basis(static_cast<std::size_t>(c % qa));
    inst.skew = validate_skew(inst.ring, SigmaGenImage{hc}, DeltaSigmaMinusId{});
    inst.t_prec = static_cast<unsigned>(qb);
    auto oracle = std::make_shared<GroupOracle>(p, 1, qa, qb, c);
    // Certify t^(p^b) = 0 in characteristic p.
    Vec tk = oracle->one();
    for (std::uint64_t i = 0; i < qb; ++i) tk = oracle->mul(tk, oracle->t());
    if (!vec_is_zero(tk))
        throw ValidationError("iwasawa_instance: t^(p^b) != 0 in the group algebra");
    inst.oracle = oracle;
    return inst;
}

Instance f3xf3_swap_instance() {
    // Basis {1, e} with e^2 = e; the ring is F_3 x F_3, sigma swaps the two
    // idempotents e and 1-e, delta = sigma - id, Jac = 0.
    std::vector<std::uint64_t> sc = {
        1, 0, 0, 1, // 1*1 = 1, 1*e = e
        0, 1, 0, 1, // e*1 = e, e*e = e
    };
    auto ring = make_custom_ring(3, 1, 2, {"1", "e"}, sc, {});
    Mat sig(2, 2, ring->zm);
    sig(0, 0) = 1;
    sig(0, 1) = 1;
    sig(1, 1) = 2; // sigma(e) = 1 - e
    Instance inst;
    inst.name = "F3xF3-swap";
    inst.ring = ring;
    inst.skew = validate_skew(ring, SigmaMatrix{sig}, DeltaSigmaMinusId{});
    inst.t_prec = 4;
    return inst;
}

Instance builtin_instance(const std::string& name, const InstanceOverrides& ov) {
    if (name == "TRIV") {
        Instance inst;
        inst.name = name;
        inst.ring = make_modular_ring(3, 1);
        inst.skew = validate_skew(inst.ring, SigmaIdentity{}, DeltaZero{});
        inst.t_prec = ov.t_prec.value_or(8);
        return inst;
    }
    if (name == "PX")
        return make_px_family("PX", 3, 9, ov.u.value_or(2), 3, ov.t_prec.value_or(8));
    if (name == "PXN")
        return make_px_family("PXN", 5, 12, ov.u.value_or(2), 4, ov.t_prec.value_or(8));
    if (name == "IWA") {
        Instance inst = iwasawa_instance(3, 2, 1, ov.conj.value_or(4));
        if (ov.t_prec) inst.t_prec = *ov.t_prec;
        return inst;
    }
    if (name == "ZPT") {
        Instance inst;
        inst.name = name;
        inst.ring = make_modular_ring(3, ov.p_prec.value_or(5));
        inst.skew = validate_skew(inst.ring, SigmaIdentity{}, DeltaZero{});
        inst.t_prec = ov.t_prec.value_or(6);
        return inst;
    }
    if (name == "F3xF3-swap") return f3xf3_swap_instance();
    throw ValidationError("unknown builtin instance", name);
}

namespace {

using nlohmann::json;

// Minimal element expressions: sums of terms c, g^k, c*g^k over the ring
// generator, e.g. "h^4", "2*X", "X^3 + 1".
Vec parse_element(const CoeffRing& r, const std::string& text) {
    Vec out = r.zero();
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && text[pos] == ' ') ++pos; };
    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        std::uint64_t coeff = 1;
        bool saw_num = false;
        if (isdigit(static_cast<unsigned char>(text[pos]))) {
            coeff = 0;
            while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos])))
                coeff = coeff * 10 + (text[pos++] - '0');
            saw_num = true;
        }
        skip_ws();
        if (pos < text.size() && text[pos] == '*') { ++pos; skip_ws(); }
        std::size_t deg = 0;
        if (pos < text.size() && isalpha(static_cast<unsigned char>(text[pos]))) {
            std::string sym;
            while (pos < text.size() && isalnum(static_cast<unsigned char>(text[pos])))
                sym += text[pos++];
            if (r.gen_index == 0 || sym != r.labels[r.gen_index])
                throw ValidationError("unknown symbol in element expression", sym);
            deg = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                deg = 0;
                while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos])))
                    deg = deg * 10 + (text[pos++] - '0');
            }
        } else if (!saw_num) {
            throw ValidationError("cannot parse element expression", text);
        }
        Vec term = r.pow_elt(r.basis(r.gen_index), deg);
        out = r.add(out, r.scale(term, coeff));
        skip_ws();
        if (pos < text.size()) {
            if (text[pos] != '+')
                throw ValidationError("cannot parse element expression", text);
            ++pos;
        }
    }
    return out;
}

} // namespace

InstanceSpec parse_instance_spec(const std::string& json_text) {
    json doc = json::parse(json_text);
    InstanceSpec spec;
    spec.seed = doc.value("seed", 1);

    const json& rj = doc.at("ring");
    std::string kind = rj.at("kind").get<std::string>();
    std::uint64_t p = rj.at("p").get<std::uint64_t>();
    unsigned n = rj.value("p_precision", 1u);
    RingPtr ring;
    if (kind == "modular")
        ring = make_modular_ring(p, n);
    else if (kind == "truncated_poly")
        ring = make_truncated_poly_ring(p, n, rj.at("N").get<std::size_t>());
    else if (kind == "group_algebra") {
        std::string grp = rj.at("group").get<std::string>();
        if (grp.rfind("cyclic:", 0) != 0)
            throw ValidationError("group must be 'cyclic:<order>'", grp);
        ring = make_group_algebra_ring(p, n, std::stoull(grp.substr(7)));
    } else {
        throw ValidationError("unknown ring kind", kind);
    }

    SigmaSpec sig = SigmaIdentity{};
    if (doc.contains("sigma") && !doc.at("sigma").is_null()) {
        const json& sj = doc.at("sigma");
        if (sj.is_string() && sj.get<std::string>() == "id")
            sig = SigmaIdentity{};
        else if (sj.is_object()) {
            if (sj.size() != 1)
                throw ValidationError("sigma object must map the single generator");
            auto it = sj.begin();
            if (ring->gen_index == 0 || it.key() != ring->labels[ring->gen_index])
                throw ValidationError("sigma must be given on the ring generator", it.key());
            sig = SigmaGenImage{parse_element(*ring, it.value().get<std::string>())};
        } else {
            throw ValidationError("bad sigma spec");
        }
    }

    DeltaSpec del = DeltaZero{};
    if (doc.contains("delta") && !doc.at("delta").is_null()) {
        const json& dj = doc.at("delta");
        if (dj.is_string()) {
            std::string s = dj.get<std::string>();
            if (s == "zero")
                del = DeltaZero{};
            else if (s == "sigma_minus_id")
                del = DeltaSigmaMinusId{};
            else
                throw ValidationError("bad delta spec", s);
        } else if (dj.is_object()) {
            if (dj.size() != 1)
                throw ValidationError("delta object must map the single generator");
            auto it = dj.begin();
            if (ring->gen_index == 0 || it.key() != ring->labels[ring->gen_index])
                throw ValidationError("delta must be given on the ring generator", it.key());
            del = DeltaGenImage{parse_element(*ring, it.value().get<std::string>())};
        } else {
            throw ValidationError("bad delta spec");
        }
    }

    spec.built.name = doc.value("name", std::string("custom"));
    spec.built.ring = ring;
    spec.built.skew = validate_skew(ring, sig, del);
    spec.built.t_prec = doc.value("t_precision", 4u);
    spec.json_text = doc.dump();
    // Round-trip guarantee: parsing our own serialization is the identity.
    if (json::parse(spec.json_text) != doc)
        throw ValidationError("instance spec does not round-trip");
    return spec;
}

} // namespace skw
