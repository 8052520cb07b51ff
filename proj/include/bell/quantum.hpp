#pragma once

#include <optional>

#include "bell/bounds.hpp"
#include "bell/envelope.hpp"
#include "bell/statevector.hpp"

namespace bell {

struct QuantumPrediction {
    double value;
    double w;                  // prod eta_k for the GHZ model
    SettingProfile settings;   // the settings actually used
};

// Lossless functional optimum over settings, found by a deterministic
// coarse grid (x/y settings, plus rotations of the last site for the
// Ardehali combination) refined by exact per-coordinate sinusoid ascent.
QuantumPrediction optimal_quantum_value(SiteCount n, const BellFunctional& f);

// Functional value and W for given settings and per-site efficiencies.
// Each correlator term contains every site once, so loss scales the
// lossless value by prod eta_k exactly.
QuantumPrediction quantum_prediction(SiteCount n, const BellFunctional& f,
                                     const EfficiencyProfile& etas,
                                     const SettingProfile& settings);

// As above with OPTIMAL settings.
QuantumPrediction quantum_prediction_optimal(SiteCount n, const BellFunctional& f,
                                             const EfficiencyProfile& etas);

// Closed-form lossless optimum: 2 sqrt(2) (CHSH), 2^(n-1) (Mermin, odd n),
// 2^(n-1/2) (Ardehali/Svetlichny functional, even n); validated against the
// search elsewhere.  Conventional parities only.
double closed_form_optimum(SiteCount n, const BellFunctional& f);

enum class CrossingTarget { Analytic, Envelope };

struct CrossingResult {
    bool violation_possible;
    double w_star;           // smallest w with quantum line above the bound
    double eta_symmetric;    // w_star^(1/n)
};

// Intersects the quantum line value = Q*w with the chosen LHV bound.
// Analytic mode solves against min(Holder, MABK); envelope mode intersects
// the exact hull (tighter or equal).
CrossingResult threshold_crossing(SiteCount n, const BellFunctional& f, CrossingTarget target,
                                  const EnvelopePolyline* env = nullptr);

// True iff for every symmetric eta <= 1/2 on the grid the optimal quantum
// value stays at or below the envelope at w = eta^n.
bool no_violation_check(SiteCount n, const BellFunctional& f, const EnvelopePolyline& env,
                        double grid_step);

}  // namespace bell
