#include "skw/homology.hpp"

#include "skw/instances.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>

namespace skw {

namespace {

struct TowerDefaults {
    unsigned T, n;
};

TowerDefaults defaults_for(const std::string& inst) {
    if (inst == "ZPT") return {6, 5};
    if (inst == "TRIV") return {6, 1};
    if (inst == "IWA") return {3, 1};
    throw ValidationError("homology: unsupported instance", inst);
}

Vec reembed(const Vec& v, const Zmod& zm) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] % zm.m;
    return r;
}

RMat reembed(const RMat& m, const CoeffRing& ring) {
    RMat r(m.rows, m.cols, ring);
    for (std::size_t i = 0; i < m.e.size(); ++i) r.e[i] = reembed(m.e[i], ring.zm);
    return r;
}

RMat rmat_apply(const RMat& m, const Mat& f) {
    RMat r = m;
    for (auto& x : r.e) x = f.apply(x);
    return r;
}

RMat rmat_mul(const CoeffRing& ring, const RMat& a, const RMat& b) {
    RMat r(a.rows, b.cols, ring);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k)
            for (std::size_t j = 0; j < b.cols; ++j)
                r.at(i, j) = ring.add(r.at(i, j), ring.mul(a.at(i, k), b.at(k, j)));
    return r;
}

// S-matrix: entries are STrunc elements.
struct SMat {
    std::size_t rows = 0, cols = 0;
    std::vector<Vec> e;
    SMat() = default;
    SMat(std::size_t r, std::size_t c, const STrunc& s) : rows(r), cols(c), e(r * c, s.zero()) {}
    Vec& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
    const Vec& at(std::size_t i, std::size_t j) const { return e[i * cols + j]; }
};

SMat smat_mul(const STrunc& s, const SMat& a, const SMat& b) {
    SMat r(a.rows, b.cols, s);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k)
            for (std::size_t j = 0; j < b.cols; ++j)
                r.at(i, j) = s.add(r.at(i, j), s.mul(a.at(i, k), b.at(k, j)));
    return r;
}

bool smat_zero(const SMat& a) {
    for (const auto& x : a.e)
        if (!vec_is_zero(x)) return false;
    return true;
}

// Expanded dual differential: left multiplication by D on S-columns.
Mat expand_left(const STrunc& s, const SMat& d) {
    const std::size_t ds = s.dim();
    Mat out(d.rows * ds, d.cols * ds, s.zm());
    for (std::size_t i = 0; i < d.rows; ++i)
        for (std::size_t j = 0; j < d.cols; ++j) {
            if (vec_is_zero(d.at(i, j))) continue;
            Mat blk = s.left_mul(d.at(i, j));
            for (std::size_t r = 0; r < ds; ++r)
                for (std::size_t c = 0; c < ds; ++c)
                    out(i * ds + r, j * ds + c) = s.zm().add(out(i * ds + r, j * ds + c), blk(r, c));
        }
    return out;
}

Mat expand_left_r(const CoeffRing& ring, const RMat& d) {
    const std::size_t ds = ring.rank;
    Mat out(d.rows * ds, d.cols * ds, ring.zm);
    for (std::size_t i = 0; i < d.rows; ++i)
        for (std::size_t j = 0; j < d.cols; ++j) {
            if (vec_is_zero(d.at(i, j))) continue;
            Mat blk = ring.left_mul(d.at(i, j));
            for (std::size_t r = 0; r < ds; ++r)
                for (std::size_t c = 0; c < ds; ++c)
                    out(i * ds + r, j * ds + c) = ring.zm.add(out(i * ds + r, j * ds + c), blk(r, c));
        }
    return out;
}

// One tower level of the dualized complex.
struct DualLevel {
    std::vector<std::size_t> spot_blocks; // number of S (or R) blocks per spot
    std::size_t block_dim = 0;
    Zmod zm;
    std::vector<Mat> d;   // d[j]: spot j -> spot j+1
    std::vector<Mat> tau; // right-multiplication by t per spot (may be empty)
};

Submodule col_kernel(const Mat& k) { return Submodule::span(row_kernel(k.transposed())); }
Submodule col_image(const Mat& k) { return Submodule::span(k.transposed()); }

// Solve C1 iota = delta(iota) + sigma(iota) C0 over the ring.
RMat solve_c1(const SkewPtr& skew, const RMat& iota, const RMat& c0) {
    const CoeffRing& ring = *skew->ring;
    const std::size_t a1 = iota.rows, a0 = iota.cols;
    RMat rhs = rmat_apply(iota, skew->delta);
    RMat sc0 = rmat_mul(ring, rmat_apply(iota, skew->sigma), c0);
    for (std::size_t i = 0; i < rhs.e.size(); ++i) rhs.e[i] = ring.add(rhs.e[i], sc0.e[i]);
    RMat c1(a1, a1, ring);
    if (a1 == 0) return c1;
    Mat sys(a1 * ring.rank, a0 * ring.rank, ring.zm);
    for (std::size_t j = 0; j < a1; ++j)
        for (std::size_t beta = 0; beta < a0; ++beta) {
            Mat rm = ring.right_mul(iota.at(j, beta));
            for (std::size_t r = 0; r < ring.rank; ++r)
                for (std::size_t k = 0; k < ring.rank; ++k)
                    sys(j * ring.rank + r, beta * ring.rank + k) = rm(k, r);
        }
    for (std::size_t i = 0; i < a1; ++i) {
        Vec w(a0 * ring.rank, 0);
        for (std::size_t beta = 0; beta < a0; ++beta)
            for (std::size_t k = 0; k < ring.rank; ++k)
                w[beta * ring.rank + k] = rhs.at(i, beta)[k];
        auto sol = solve_row(sys, w);
        if (!sol)
            throw ValidationError("homology: no compatible t-lift C1 exists",
                                  "row " + std::to_string(i));
        for (std::size_t j = 0; j < a1; ++j)
            for (std::size_t k = 0; k < ring.rank; ++k) c1.at(i, j)[k] = (*sol)[j * ring.rank + k];
    }
    RMat lhs = rmat_mul(ring, c1, iota);
    for (std::size_t i = 0; i < lhs.e.size(); ++i)
        if (lhs.e[i] != rhs.e[i])
            throw ValidationError("homology: C1 lift verification failed");
    return c1;
}

// Build the dualized S-side complex at one tower level.
DualLevel build_s_level(const HModule& m, const STrunc& s) {
    const CoeffRing& ring = *s.skew()->ring;
    RMat iota = reembed(m.iota, ring);
    RMat c0 = reembed(m.C0, ring);
    DualLevel lvl;
    lvl.zm = s.zm();
    lvl.block_dim = s.dim();
    auto smat_from_r = [&](const RMat& rm) {
        SMat out(rm.rows, rm.cols, s);
        for (std::size_t i = 0; i < rm.rows; ++i)
            for (std::size_t j = 0; j < rm.cols; ++j) out.at(i, j) = s.embed_ring(rm.at(i, j));
        return out;
    };
    auto tid_minus = [&](const RMat& c) {
        SMat out = smat_from_r(c);
        for (auto& x : out.e) x = vec_scale(s.zm(), x, s.zm().m - 1);
        for (std::size_t i = 0; i < out.rows; ++i)
            out.at(i, i) = s.add(out.at(i, i), s.t_elem());
        return out;
    };
    if (!m.has_t) {
        lvl.spot_blocks = {m.a0, m.a1};
        lvl.d.push_back(expand_left(s, smat_from_r(iota)));
    } else if (m.a1 == 0) {
        SMat d0 = tid_minus(c0);
        lvl.spot_blocks = {m.a0, m.a0};
        lvl.d.push_back(expand_left(s, d0));
    } else {
        RMat c1 = solve_c1(s.skew(), iota, c0);
        SMat d0 = tid_minus(c0);
        SMat d1cone(m.a1 + m.a0, m.a0, s);
        SMat si = smat_from_r(rmat_apply(iota, s.skew()->sigma));
        SMat ic = smat_from_r(iota);
        for (std::size_t i = 0; i < m.a1; ++i)
            for (std::size_t j = 0; j < m.a0; ++j) d1cone.at(i, j) = ic.at(i, j);
        for (std::size_t i = 0; i < m.a0; ++i)
            for (std::size_t j = 0; j < m.a0; ++j) d1cone.at(m.a1 + i, j) = d0.at(i, j);
        SMat d2cone(m.a1, m.a1 + m.a0, s);
        SMat negd1 = tid_minus(c1);
        for (auto& x : negd1.e) x = vec_scale(s.zm(), x, s.zm().m - 1);
        for (std::size_t i = 0; i < m.a1; ++i) {
            for (std::size_t j = 0; j < m.a1; ++j) d2cone.at(i, j) = negd1.at(i, j);
            for (std::size_t j = 0; j < m.a0; ++j) d2cone.at(i, m.a1 + j) = si.at(i, j);
        }
        if (!smat_zero(smat_mul(s, d2cone, d1cone)))
            throw ValidationError("homology: cone differentials do not compose to zero");
        lvl.spot_blocks = {m.a0, m.a1 + m.a0, m.a1};
        lvl.d.push_back(expand_left(s, d1cone));
        lvl.d.push_back(expand_left(s, d2cone));
    }
    Mat rt = s.right_mul(s.t_elem());
    for (std::size_t spot = 0; spot < lvl.spot_blocks.size(); ++spot) {
        std::size_t blocks = lvl.spot_blocks[spot];
        Mat tau(blocks * s.dim(), blocks * s.dim(), s.zm());
        for (std::size_t b = 0; b < blocks; ++b)
            for (std::size_t r = 0; r < s.dim(); ++r)
                for (std::size_t c = 0; c < s.dim(); ++c)
                    tau(b * s.dim() + r, b * s.dim() + c) = rt(r, c);
        lvl.tau.push_back(std::move(tau));
    }
    return lvl;
}

DualLevel build_r_level(const HModule& m, const RingPtr& ring, const SkewPtr& skew) {
    DualLevel lvl;
    lvl.zm = ring->zm;
    lvl.block_dim = ring->rank;
    RMat iota = reembed(m.iota, *ring);
    lvl.spot_blocks = {m.a0, m.a1};
    lvl.d.push_back(expand_left_r(*ring, iota));
    if (m.has_t) {
        RMat c0 = reembed(m.C0, *ring);
        RMat c1 = solve_c1(skew, iota, c0);
        lvl.tau.push_back(expand_left_r(*ring, c0));
        lvl.tau.push_back(expand_left_r(*ring, c1));
    }
    return lvl;
}

Vec reduce_spot_s(const STrunc& big, const STrunc& small, std::size_t blocks, const Vec& v) {
    Vec out(blocks * small.dim(), 0);
    for (std::size_t b = 0; b < blocks; ++b) {
        Vec piece(v.begin() + b * big.dim(), v.begin() + (b + 1) * big.dim());
        Vec red = big.reduce_to(small, piece);
        for (std::size_t i = 0; i < small.dim(); ++i) out[b * small.dim() + i] = red[i];
    }
    return out;
}

Vec reduce_spot_r(const Zmod& small, const Vec& v) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] % small.m;
    return out;
}

struct SpotAnalysis {
    bool converged = false;
    bool vanishing = true;
    unsigned depth_used = 0;
    std::vector<unsigned> divisors;
    std::vector<std::vector<unsigned>> t_invariants;
};
bool divisors_track(const std::vector<unsigned>& base, const std::vector<unsigned>& fine,
                    unsigned growth);

// Lazily built tower of dualized complexes plus one-step reductions.
struct LevelSet {
    std::function<DualLevel(unsigned)> make;
    std::function<Vec(unsigned, std::size_t, const Vec&)> reduce_one; // (from idx, spot, v)
    unsigned max_idx = 0;
    bool want_t = false;
    unsigned cap = 0;
    unsigned precision_growth = 0; // coefficient-precision step between levels
    std::vector<std::unique_ptr<DualLevel>> cache;

    DualLevel& at(unsigned i) {
        if (cache.size() <= i) cache.resize(i + 1);
        if (!cache[i]) cache[i] = std::make_unique<DualLevel>(make(i));
        return *cache[i];
    }
};

// Mittag-Leffler stable cohomology at a spot over the given base index: the
// images of H(level base+d) -> H(level base) descend in d; iterate until two
// consecutive images agree.
SpotAnalysis analyze_spot(LevelSet& ls, unsigned base_idx, std::size_t spot) {
    DualLevel& base = ls.at(base_idx);
    std::size_t dim_base = base.spot_blocks[spot] * base.block_dim;
    Submodule b_base =
        (spot > 0) ? col_image(base.d[spot - 1]) : Submodule::zero(dim_base, base.zm);
    SpotAnalysis out;
    Submodule prev = Submodule::zero(0, base.zm);
    bool have_prev = false;
    for (unsigned d = 1; base_idx + d <= ls.max_idx; ++d) {
        DualLevel& fine = ls.at(base_idx + d);
        Submodule z_fine =
            (spot < fine.d.size())
                ? col_kernel(fine.d[spot])
                : Submodule::full(fine.spot_blocks[spot] * fine.block_dim, fine.zm);
        std::vector<Vec> reduced;
        for (std::size_t i = 0; i < z_fine.basis().rows(); ++i) {
            Vec v = z_fine.basis().row(i);
            for (unsigned step = 0; step < d; ++step)
                v = ls.reduce_one(base_idx + d - step, spot, v);
            reduced.push_back(std::move(v));
        }
        Submodule stable = Submodule::span(reduced, dim_base, base.zm) + b_base;
        if (have_prev && stable == prev) {
            out.converged = true;
            out.depth_used = d;
            break;
        }
        prev = stable;
        have_prev = true;
    }
    if (!out.converged) return out;
    out.vanishing = (prev == b_base);
    out.divisors = quotient_divisors(prev, b_base);
    if (ls.want_t && spot < base.tau.size()) {
        Submodule cur = prev;
        for (unsigned k = 1; k <= 3; ++k) {
            cur = cur.image(base.tau[spot]);
            out.t_invariants.push_back(quotient_divisors(cur + b_base, b_base));
        }
    }
    return out;
}

// Divisor lists computed at consecutive precisions are consistent when each
// exponent either stays (torsion component) or tracks the modulus exactly
// (free direction, constant co-exponent n - e).
bool divisors_track(const std::vector<unsigned>& base, const std::vector<unsigned>& fine,
                    unsigned growth) {
    if (base.size() != fine.size()) return false;
    for (std::size_t i = 0; i < base.size(); ++i)
        if (fine[i] != base[i] && fine[i] != base[i] + growth) return false;
    return true;
}

LevelSet build_levels(const HModule& m, Over over, TowerConfig cfg) {
    TowerDefaults def = defaults_for(m.instance);
    unsigned base_T = cfg.base_T ? cfg.base_T : def.T;
    unsigned base_n = cfg.base_n ? cfg.base_n : def.n;
    if (base_n <= m.ann_exp)
        throw ValidationError("homology: precision must exceed the annihilator exponent", m.name);
    LevelSet ls;
    ls.cap = base_n;
    ls.precision_growth = (m.instance == "ZPT") ? 1 : 0;
    HModule mod = m;
    std::string inst_name = m.instance;
    if (over == Over::S) {
        bool iwa = (inst_name == "IWA");
        ls.max_idx = iwa ? 3 : 10;
        auto mk_strunc = [inst_name, base_T, base_n, iwa](unsigned idx) {
            InstanceOverrides ov;
            if (iwa) {
                Instance inst = builtin_instance("IWA");
                unsigned T = inst.t_prec;
                for (unsigned i = 0; i < idx; ++i) T *= 3;
                return STrunc(inst.skew, T);
            }
            ov.t_prec = base_T + 2 * idx;
            if (inst_name == "ZPT") ov.p_prec = base_n + idx;
            Instance inst = builtin_instance(inst_name, ov);
            return STrunc(inst.skew, base_T + 2 * idx);
        };
        auto struncs = std::make_shared<std::map<unsigned, STrunc>>();
        auto strunc_at = [struncs, mk_strunc](unsigned idx) -> const STrunc& {
            auto it = struncs->find(idx);
            if (it == struncs->end()) it = struncs->emplace(idx, mk_strunc(idx)).first;
            return it->second;
        };
        auto blocks = std::make_shared<std::vector<std::size_t>>();
        ls.make = [mod, strunc_at, blocks](unsigned idx) {
            DualLevel lvl = build_s_level(mod, strunc_at(idx));
            if (blocks->empty()) *blocks = lvl.spot_blocks;
            return lvl;
        };
        ls.reduce_one = [strunc_at, blocks](unsigned from, std::size_t spot, const Vec& v) {
            return reduce_spot_s(strunc_at(from), strunc_at(from - 1), (*blocks)[spot], v);
        };
        ls.want_t = m.has_t;
    } else {
        ls.max_idx = 10;
        auto rings = std::make_shared<std::map<unsigned, std::pair<RingPtr, SkewPtr>>>();
        auto ring_at = [rings, inst_name,
                        base_n](unsigned idx) -> const std::pair<RingPtr, SkewPtr>& {
            auto it = rings->find(idx);
            if (it == rings->end()) {
                InstanceOverrides ov;
                if (inst_name == "ZPT") ov.p_prec = base_n + idx;
                Instance inst = builtin_instance(inst_name, ov);
                it = rings->emplace(idx, std::make_pair(inst.ring, inst.skew)).first;
            }
            return it->second;
        };
        ls.make = [mod, ring_at](unsigned idx) {
            auto& rs = ring_at(idx);
            return build_r_level(mod, rs.first, rs.second);
        };
        ls.reduce_one = [ring_at](unsigned from, std::size_t spot, const Vec& v) {
            (void)spot;
            return reduce_spot_r(ring_at(from - 1).first->zm, v);
        };
        ls.want_t = m.has_t;
    }
    Instance check = builtin_instance(m.instance);
    if (check.skew->sigma_order != 1) ls.want_t = false;
    return ls;
}

ExtReport ext_from_levels(LevelSet& ls, unsigned degree, Over over, const std::string& name) {
    ExtReport rep;
    rep.over = over;
    rep.degree = degree;
    std::size_t spots = ls.at(0).spot_blocks.size();
    if (degree >= spots) {
        rep.vanishing = true;
        rep.vanishing_stable = true;
        return rep;
    }
    SpotAnalysis a = analyze_spot(ls, 0, degree);
    SpotAnalysis b = analyze_spot(ls, 1, degree);
    if (!a.converged || !b.converged)
        throw ValidationError("ext: stable cohomology did not converge within the tower", name);
    rep.vanishing = a.vanishing;
    rep.vanishing_stable = (a.vanishing == b.vanishing);
    rep.divisors = a.divisors;
    rep.divisors_stable = divisors_track(a.divisors, b.divisors, ls.precision_growth);
    rep.has_t_invariants = ls.want_t;
    rep.t_invariants = a.t_invariants;
    rep.t_invariants_stable = a.t_invariants.size() == b.t_invariants.size();
    for (std::size_t k = 0; rep.t_invariants_stable && k < a.t_invariants.size(); ++k)
        rep.t_invariants_stable =
            divisors_track(a.t_invariants[k], b.t_invariants[k], ls.precision_growth);
    return rep;
}

} // namespace

ExtReport ext_over(const HModule& m, Over over, unsigned degree, TowerConfig cfg) {
    LevelSet ls = build_levels(m, over, cfg);
    return ext_from_levels(ls, degree, over, m.name);
}

std::vector<ExtReport> ext_all(const HModule& m, Over over, TowerConfig cfg) {
    LevelSet ls = build_levels(m, over, cfg);
    std::vector<ExtReport> out;
    unsigned max_deg = (over == Over::S) ? 3 : 2;
    for (unsigned j = 0; j < max_deg; ++j) out.push_back(ext_from_levels(ls, j, over, m.name));
    return out;
}

namespace {

GradeReport grade_from_reports(const std::vector<ExtReport>& reps, const std::string& name) {
    GradeReport g;
    for (const ExtReport& rep : reps) {
        if (!rep.vanishing_stable)
            throw ValidationError("grade: non-stabilized Ext report",
                                  name + " degree " + std::to_string(rep.degree));
        if (!rep.vanishing) {
            g.j = rep.degree;
            return g;
        }
    }
    g.infinite = true;
    return g;
}

} // namespace

GradeReport grade_over(const HModule& m, Over over, TowerConfig cfg) {
    return grade_from_reports(ext_all(m, over, cfg), m.name);
}

DimensionShiftReport verify_dimension_shift(const HModule& m, TowerConfig cfg) {
    DimensionShiftReport rep;
    rep.module = m.name;
    rep.ext_S = ext_all(m, Over::S, cfg);
    rep.ext_R = ext_all(m, Over::R, cfg);
    rep.hom_s_vanishes = rep.ext_S[0].vanishing && rep.ext_S[0].stabilized();
    rep.invariants_match = true;
    for (unsigned j = 1; j < 3; ++j) {
        const ExtReport& es = rep.ext_S[j];
        const ExtReport& er = rep.ext_R[j - 1];
        if (!es.stabilized() || !er.stabilized()) {
            rep.invariants_match = false;
            rep.detail += "degree " + std::to_string(j) + " not stabilized; ";
            continue;
        }
        if (es.divisors != er.divisors) {
            rep.invariants_match = false;
            rep.detail += "p-group divisors differ in degree " + std::to_string(j) + "; ";
        }
        if (es.has_t_invariants && er.has_t_invariants && es.t_invariants != er.t_invariants) {
            rep.invariants_match = false;
            rep.detail += "t-invariants differ in degree " + std::to_string(j) + "; ";
        }
    }
    GradeReport gr = grade_from_reports(rep.ext_R, m.name);
    GradeReport gs = grade_from_reports(rep.ext_S, m.name);
    rep.j_R = gr.j;
    rep.j_S = gs.j;
    rep.grade_shift = !gr.infinite && !gs.infinite && gs.j == gr.j + 1;
    rep.mj_criterion = true;
    for (unsigned j = 0; j <= 2; ++j) {
        bool r_van = true, s_van = true;
        for (unsigned i = 0; i < j && i < 2; ++i) r_van = r_van && rep.ext_R[i].vanishing;
        for (unsigned i = 0; i < j + 1 && i < 3; ++i) s_van = s_van && rep.ext_S[i].vanishing;
        if (r_van != s_van) rep.mj_criterion = false;
    }
    return rep;
}

BasechangeReport verify_basechange_grade(const HModule& n, TowerConfig cfg) {
    HModule plain = n;
    plain.has_t = false;
    BasechangeReport rep;
    rep.module = n.name;
    GradeReport gr = grade_over(plain, Over::R, cfg);
    GradeReport gs = grade_over(plain, Over::S, cfg);
    rep.j_R = gr.j;
    rep.j_S = gs.j;
    rep.r_infinite = gr.infinite;
    rep.s_infinite = gs.infinite;
    rep.equal = (gr.infinite && gs.infinite) || (!gr.infinite && !gs.infinite && gr.j == gs.j);
    return rep;
}

void validate_resolution(const HModule& m, TowerConfig cfg) {
    // Cone levels enforce composition-zero at the S-matrix level while they
    // are built; recheck the expanded dual differentials on the first two
    // tower levels.
    LevelSet ls = build_levels(m, Over::S, cfg);
    for (unsigned lvl = 0; lvl <= 1; ++lvl) {
        DualLevel& L = ls.at(lvl);
        for (std::size_t j = 0; j + 1 < L.d.size(); ++j)
            if (!(L.d[j + 1] * L.d[j]).is_zero())
                throw ValidationError(
                    "validate_resolution: expanded differentials do not compose to zero");
    }
}

HModule h_mod_p_power(const std::string& instance, unsigned e) {
    Instance inst = builtin_instance(instance);
    const CoeffRing& R = *inst.ring;
    HModule m;
    m.instance = instance;
    m.name = "Z/p^" + std::to_string(e) + "(" + instance + ")";
    m.a0 = 1;
    m.a1 = 1;
    m.iota = RMat(1, 1, R);
    m.iota.at(0, 0) = R.scale(R.one(), R.zm.p_pow(e));
    m.C0 = RMat(1, 1, R);
    m.C1 = RMat(1, 1, R);
    m.ann_exp = e;
    return m;
}

HModule h_sum_p_powers(const std::string& instance, unsigned e1, unsigned e2) {
    Instance inst = builtin_instance(instance);
    const CoeffRing& R = *inst.ring;
    HModule m;
    m.instance = instance;
    m.name = "Z/p^" + std::to_string(e1) + "+Z/p^" + std::to_string(e2) + "(" + instance + ")";
    m.a0 = 2;
    m.a1 = 2;
    m.iota = RMat(2, 2, R);
    m.iota.at(0, 0) = R.scale(R.one(), R.zm.p_pow(e1));
    m.iota.at(1, 1) = R.scale(R.one(), R.zm.p_pow(e2));
    m.C0 = RMat(2, 2, R);
    m.C1 = RMat(2, 2, R);
    m.ann_exp = std::max(e1, e2);
    return m;
}

HModule h_free_nilpotent_t(const std::string& instance) {
    Instance inst = builtin_instance(instance);
    const CoeffRing& R = *inst.ring;
    HModule m;
    m.instance = instance;
    m.name = "free-rank-2-nilpotent-t(" + instance + ")";
    m.a0 = 2;
    m.a1 = 0;
    m.iota = RMat(0, 2, R);
    m.C0 = RMat(2, 2, R);
    m.C0.at(0, 1) = R.scale(R.one(), 3);
    m.C0.at(1, 0) = R.scale(R.one(), 3);
    m.ann_exp = 0;
    return m;
}

HModule h_m_delta_iwa() {
    Instance inst = builtin_instance("IWA");
    const CoeffRing& R = *inst.ring;
    HModule m;
    m.instance = "IWA";
    m.name = "M_delta(IWA)";
    m.a0 = 1;
    m.a1 = 0;
    m.iota = RMat(0, 1, R);
    m.C0 = RMat(1, 1, R); // t . 1 = delta(1) = 0
    m.ann_exp = 0;
    return m;
}

HModule h_free_rank1(const std::string& instance) {
    Instance inst = builtin_instance(instance);
    const CoeffRing& R = *inst.ring;
    HModule m;
    m.instance = instance;
    m.name = "R(" + instance + ")";
    m.a0 = 1;
    m.a1 = 0;
    m.iota = RMat(0, 1, R);
    m.C0 = RMat(1, 1, R);
    m.ann_exp = 0;
    return m;
}

} // namespace skw
