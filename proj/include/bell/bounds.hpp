#pragma once

#include "bell/types.hpp"

namespace bell {

enum class RegionLabel { MABK, Holder, LHV_no_violation };

const char* region_name(RegionLabel r);

// Exact value mantissa * 2^(half_exp/2) with half_exp in {0,1}; lets the
// w = 2^k bound coincidences be asserted without floating point.
struct ExactBound {
    Rational mantissa{1};
    int half_exp = 0;

    static ExactBound pow2_half(long long half_exponent);  // 2^(half_exponent/2)
    ExactBound operator*(const ExactBound& o) const;
    friend bool operator==(const ExactBound&, const ExactBound&) = default;
    double value() const;
};

// Holder bounds under loss: 2^((n+1)/2) sqrt(w) for the Ardehali combination
// (CHSH, Ardehali, Svetlichny), 2^(n/2) sqrt(w) for Mermin.
double holder_bound(SiteCount n, const BellFunctional& f, double w);

// Exact Holder bound at w = 2^w_log2 (w_log2 <= 0).
ExactBound holder_bound_exact(SiteCount n, const BellFunctional& f, int w_log2);

// Loss-independent bounds: CHSH 2; Ardehali 2^(n/2); Mermin 2^((n-1)/2);
// Svetlichny 2^(n-1).
double mabk_bound(SiteCount n, const BellFunctional& f);
ExactBound mabk_bound_exact(SiteCount n, const BellFunctional& f);

// min(Holder, MABK); the branches coincide at w = 1/2.
double tight_analytic_bound(SiteCount n, const BellFunctional& f, double w);

// w > 1/2 -> MABK; w < 2^-n -> no violation possible; otherwise Holder.
// Ties resolve to the higher-w region.
RegionLabel classify_region(SiteCount n, double w);

struct ThresholdResult {
    double w_star;
    double eta_symmetric;
    bool quantum_crosses_holder;  // false only for n = 2
};

// Loophole-free violation threshold for the GHZ quantum line:
// w_star = 2^(2-n), symmetric eta = 2^(2/n - 1), for n >= 3.  For n = 2 the
// quantum line never crosses the Holder curve and the crossing is on the
// MABK segment at w = 1/sqrt(2).
ThresholdResult analytic_threshold(SiteCount n);

// MABK-only symmetric threshold 2^((1-n)/(2n)).
double braunstein_mann_threshold(SiteCount n);

// True iff prod eta_k > 2^(2-n) (strict).
bool asymmetric_threshold_check(const EfficiencyProfile& etas);

struct SvetlichnyRequirement {
    double w_threshold;     // 1/sqrt(2), independent of n
    double eta_symmetric;   // 2^(-1/(2n))
};

SvetlichnyRequirement svetlichny_requirement(SiteCount n);

}  // namespace bell
