#pragma once

#include "bell/enumerate.hpp"
#include "bell/types.hpp"

namespace bell {

// Concave majorant of { (w, F(p)) } u {(0,0)}: the exact maximum of <F> over
// probability mixtures of deterministic strategies with <W_N> = w.  Collinear
// interior vertices are dropped.
EnvelopePolyline upper_envelope(const MomentPointSet& points, const BellFunctional& f);

// F_max(w) by linear interpolation between bracketing vertices; exact.
Rational envelope_query(const EnvelopePolyline& env, const Rational& w);

// Floating-point convenience query for presentation paths.
double envelope_query_d(const EnvelopePolyline& env, double w);

struct ScatterPoint {
    Rational w;
    Rational f;
    bool is_mixture;  // false: pure deterministic strategy image

    friend bool operator==(const ScatterPoint&, const ScatterPoint&) = default;
};

// Deterministic-strategy points plus seeded random finite mixtures, for
// figure reproduction.  Mixture weights are exact dyadic rationals so every
// emitted point provably lies on or below the envelope.
std::vector<ScatterPoint> scatter_sample(SiteCount n, const BellFunctional& f, int count,
                                         uint64_t seed);

struct ProbeResult {
    double max_excess;  // max of F - F_max(W) over trials; expected <= 0
    double w_at_max;
    double f_at_max;
    long trials;
};

// Samples stochastic per-site response functions with (<A_k>, <B_k>) drawn
// from the rectangle |<A_k>| <= eta^A_k, |<B_k>| <= eta^B_k, forms the LHV
// product moments and checks them against the deterministic-mixture envelope.
ProbeResult stochastic_probe(SiteCount n, const BellFunctional& f, long trials, uint64_t seed);

}  // namespace bell
