#pragma once

#include "skw/ring.hpp"

#include <variant>

namespace skw {

// How sigma is presented: identity, the image of the ring generator (X or h),
// or an explicit matrix for custom rings.
struct SigmaIdentity {};
struct SigmaGenImage { Vec image; };
struct SigmaMatrix { Mat map; };
using SigmaSpec = std::variant<SigmaIdentity, SigmaGenImage, SigmaMatrix>;

struct DeltaZero {};
struct DeltaSigmaMinusId {};
struct DeltaGenImage { Vec image; }; // extended along generator powers by the Leibniz rule
struct DeltaMatrix { Mat map; };
using DeltaSpec = std::variant<DeltaZero, DeltaSigmaMinusId, DeltaGenImage, DeltaMatrix>;

// Validated (sigma, delta) pair with the derived right-side pair and the
// finite-order conjugate family delta_j = sigma^j delta sigma^-j.
class SkewData {
  public:
    RingPtr ring;
    Mat sigma, sigma_inv, delta;
    Mat sigma_prime, delta_prime; // sigma^-1 and -delta∘sigma^-1
    unsigned sigma_order = 1;
    bool commuting = true;
    std::vector<Mat> delta_conj;

    const CoeffRing& R() const { return *ring; }
    const Zmod& zm() const { return ring->zm; }

    Vec s(const Vec& a) const { return sigma.apply(a); }
    Vec si(const Vec& a) const { return sigma_inv.apply(a); }
    Vec d(const Vec& a) const { return delta.apply(a); }
    Vec dp(const Vec& a) const { return delta_prime.apply(a); }

    Mat sigma_pow(long e) const {
        long d = static_cast<long>(sigma_order);
        long r = ((e % d) + d) % d;
        return sigma.pow(static_cast<std::uint64_t>(r));
    }

    bool delta_is_zero() const { return delta.is_zero(); }

    // First ring basis element where sigma∘delta != delta∘sigma, if any.
    std::optional<std::size_t> noncommuting_witness() const;
};

using SkewPtr = std::shared_ptr<const SkewData>;

// Validates sigma (multiplicative, unital, invertible, finite order,
// stabilizes Jac) and delta (left sigma-derivation consistent with the
// ring's defining relations), and derives the right-side pair.
SkewPtr validate_skew(RingPtr ring, const SigmaSpec& sigma_spec, const DeltaSpec& delta_spec,
                      unsigned max_order = 64);

} // namespace skw
