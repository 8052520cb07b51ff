#include "bell/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace bell {

std::vector<TrialRecord> simulate_trials(SiteCount n, const EfficiencyProfile& etas,
                                         const SettingProfile& settings, uint32_t word,
                                         long count, uint64_t seed) {
    if (count < 1) throw domain_error("trial count must be >= 1");
    if (etas.sites() != n.n) throw domain_error("efficiency profile length mismatch");
    settings.validate(n.n);

    Eigen::VectorXd probs = ghz_outcome_distribution(n, settings, word);
    std::vector<double> weights(probs.data(), probs.data() + probs.size());
    std::mt19937_64 rng(seed);
    std::discrete_distribution<uint32_t> joint(weights.begin(), weights.end());
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<TrialRecord> out;
    out.reserve(static_cast<size_t>(count));
    for (long t = 0; t < count; ++t) {
        uint32_t pattern = joint(rng);  // bit k set = outcome -1 at site k
        TrialRecord rec;
        rec.word = word;
        rec.outcomes.resize(n.n);
        for (int k = 0; k < n.n; ++k) {
            int s = (pattern >> k & 1) ? -1 : +1;
            if (unit(rng) >= etas.etas[k]) s = 0;
            rec.outcomes[k] = s;
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::map<uint32_t, std::vector<TrialRecord>> simulate_all_words(SiteCount n,
                                                                const EfficiencyProfile& etas,
                                                                const SettingProfile& settings,
                                                                long count, uint64_t seed) {
    std::map<uint32_t, std::vector<TrialRecord>> all;
    for (uint32_t word = 0; word < (1u << n.n); ++word) {
        // fixed per-word substream keeps the merged stream deterministic
        uint64_t sub = seed ^ (0x9e3779b97f4a7c15ULL * (word + 1));
        all[word] = simulate_trials(n, etas, settings, word, count, sub);
    }
    return all;
}

namespace {

struct MeanVar {
    double mean;
    double var_of_mean;
    long count;
};

template <typename F>
MeanVar word_statistic(const std::vector<TrialRecord>& recs, F&& per_trial) {
    double sum = 0.0, sumsq = 0.0;
    for (const TrialRecord& r : recs) {
        double x = per_trial(r);
        sum += x;
        sumsq += x * x;
    }
    double m = sum / recs.size();
    double var = recs.size() > 1 ? (sumsq - recs.size() * m * m) / (recs.size() - 1) : 0.0;
    return {m, var / recs.size(), static_cast<long>(recs.size())};
}

}  // namespace

EstimateReport estimate_functionals(SiteCount n,
                                    const std::map<uint32_t, std::vector<TrialRecord>>& records,
                                    const BellFunctional& f) {
    for (uint32_t word = 0; word < (1u << n.n); ++word) {
        auto it = records.find(word);
        if (it == records.end() || it->second.empty())
            throw incomplete_design_error("missing trials for setting word " +
                                          std::to_string(word));
    }

    EstimateReport rep;
    rep.trials_per_word = static_cast<long>(records.begin()->second.size());

    double f_hat = 0.0, f_var = 0.0;
    for (const CorrelatorTerm& term : expand_functional(n, f)) {
        MeanVar mv = word_statistic(records.at(term.choice), [&](const TrialRecord& r) {
            double p = 1.0;
            for (int o : r.outcomes) p *= o;
            return p;
        });
        f_hat += term.coefficient * mv.mean;
        f_var += mv.var_of_mean;  // coefficients are +-1, disjoint trials
    }
    rep.f_hat = f_hat;
    rep.se_f = std::sqrt(f_var);

    double scale = std::pow(2.0, -n.n);
    double w_hat = 0.0, w_var = 0.0;
    for (const auto& [word, recs] : records) {
        MeanVar mv = word_statistic(recs, [&](const TrialRecord& r) {
            double p = 1.0;
            for (int o : r.outcomes) p *= std::abs(o);
            return p;
        });
        w_hat += mv.mean;
        w_var += mv.var_of_mean;
    }
    rep.w_hat = scale * w_hat;
    rep.se_w = scale * std::sqrt(w_var);
    return rep;
}

ViolationReport violation_report(const EstimateReport& report, SiteCount n,
                                 const BellFunctional& f, const EnvelopePolyline& env) {
    ViolationReport out{};
    double w = std::clamp(report.w_hat, 0.0, 1.0);
    out.region = classify_region(n, w);
    out.excess_over_envelope = report.f_hat - envelope_query_d(env, w);
    out.excess_over_analytic = report.f_hat - tight_analytic_bound(n, f, w);
    out.significance = report.se_f > 0.0 ? out.excess_over_envelope / report.se_f : 0.0;
    return out;
}

}  // namespace bell
