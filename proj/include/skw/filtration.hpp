#pragma once

#include "skw/nilpotence.hpp"
#include "skw/rng.hpp"
#include "skw/series.hpp"

namespace skw {

struct FiltrationLevel {
    unsigned k = 0;
    Submodule ideal;
    bool truncation_interference = false; // level differs from the untruncated value
};

struct SeriesFiltrationLevel {
    unsigned k = 0;
    unsigned t_prec = 0;
    std::vector<Submodule> slots; // slot i carries I_{k-i}
};

struct GradedComponent {
    unsigned k = 0;
    Submodule level, next;    // I_k and I_{k+1}
    std::vector<Vec> section; // canonical residues generating I_k / I_{k+1}
    unsigned dim_exp = 0;     // log_p |I_k / I_{k+1}|
};

// Associated graded ring of the I-filtration, with canonical section bases.
struct GradedRing {
    SkewPtr skew;
    std::vector<GradedComponent> comp;

    // Canonical residue of x in degree k (x must lie in I_k).
    Vec residue(unsigned k, const Vec& x) const;
    // Induced automorphism on the degree-k component, on residues.
    Vec sigma_bar(unsigned k, const Vec& residue_val) const;
    // Graded product of residues: (deg a) x (deg b) -> residue in deg a+b.
    Vec grmul(unsigned ka, const Vec& ra, unsigned kb, const Vec& rb) const;
};

// Additive span Delta_k over all composition products of monomial images.
Submodule delta_level(const SkewPtr& s, unsigned k);

// I_k = R Delta_k, with construction-time property checks: descending,
// sigma-stable, delta shifts one level down, R Delta_k = Delta_k R.
FiltrationLevel i_level(const SkewPtr& s, int k);

GradedRing graded_coeff(const SkewPtr& s, unsigned max_k);

SeriesFiltrationLevel j_level(const SkewPtr& s, unsigned k, unsigned T);
bool j_member(const SkewPtr& s, const SkewSeries& x, unsigned k);
// Random element of J_k with support < T.
SkewSeries j_sample(const SkewPtr& s, unsigned k, unsigned T, Rng& rng);

struct GradedSeriesReport {
    bool isomorphic = true;           // gr_J S = (gr_I R)[tbar; sigma_bar, dbar]
    bool derivation_vanishes = true;  // dbar = 0, i.e. the pure sigma-twist model
    std::string witness;
    std::string derivation_witness;
    GradedRing base; // gr_I R used for the comparison
};
// Certifies the graded structure of gr_J S against the skew polynomial model
// over gr_I R: slot-level membership (J_k J_l <= J_{k+l}), structure-constant
// equality on canonical section bases, and well-definedness of the induced
// constants on residues (perturbed lifts give the same classes). The induced
// degree-raising derivation dbar([a]_k) = [delta(a)]_{k+1} is part of the
// model; derivation_vanishes reports whether the pure tbar.abar =
// sigma_bar(abar).tbar form holds.
GradedSeriesReport graded_series(const SkewPtr& s, unsigned max_k, unsigned T);

} // namespace skw
