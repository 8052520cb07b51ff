#pragma once

#include <map>

#include "bell/quantum.hpp"
#include "bell/statevector.hpp"

namespace bell {

// One heralded trial: the chosen setting word and the per-site outcomes
// after detector erasure.  Heralding is perfect in this model; the flag is
// kept for format stability.
struct TrialRecord {
    uint32_t word = 0;           // bit k: B at site k
    std::vector<int> outcomes;   // each in {-1, 0, +1}
    bool herald = true;
};

struct EstimateReport {
    double w_hat = 0.0;
    double f_hat = 0.0;
    double se_w = 0.0;
    double se_f = 0.0;
    long trials_per_word = 0;
    uint64_t seed = 0;
};

struct ViolationReport {
    RegionLabel region;
    double excess_over_envelope;
    double excess_over_analytic;
    double significance;  // excess_over_envelope / se_f
};

// Samples joint +-1 outcomes from the exact GHZ distribution for the given
// word, then independently erases each site to 0 with probability 1-eta_k.
std::vector<TrialRecord> simulate_trials(SiteCount n, const EfficiencyProfile& etas,
                                         const SettingProfile& settings, uint32_t word,
                                         long count, uint64_t seed);

// Balanced-design run: `count` trials for each of the 2^n setting words,
// with per-word seed substreams derived from `seed`.
std::map<uint32_t, std::vector<TrialRecord>> simulate_all_words(SiteCount n,
                                                                const EfficiencyProfile& etas,
                                                                const SettingProfile& settings,
                                                                long count, uint64_t seed);

// f_hat from the correlator expansion, w_hat from the 2^n-word mean of
// prod |outcome| / 2^n; standard errors by independent-term propagation.
EstimateReport estimate_functionals(SiteCount n,
                                    const std::map<uint32_t, std::vector<TrialRecord>>& records,
                                    const BellFunctional& f);

ViolationReport violation_report(const EstimateReport& report, SiteCount n,
                                 const BellFunctional& f, const EnvelopePolyline& env);

}  // namespace bell
