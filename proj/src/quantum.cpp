#include "bell/quantum.hpp"

#include <algorithm>
#include <cmath>

namespace bell {
namespace {

constexpr double kPi = 3.14159265358979323846;

// value(settings) via the closed-form GHZ correlator -cos(sum theta); the
// statevector route validates this form in the test suite.
double eval_settings(const std::vector<CorrelatorTerm>& terms, const SettingProfile& s) {
    double total = 0.0;
    const int n = s.sites();
    for (const CorrelatorTerm& t : terms) {
        double sum = 0.0;
        for (int k = 0; k < n; ++k) sum += s.theta(k, t.choice >> k & 1);
        total -= t.coefficient * std::cos(sum);
    }
    return total;
}

// Exact maximization of the coordinate sinusoid a cos(t) + b sin(t) + c.
void ascend_coordinate(const std::vector<CorrelatorTerm>& terms, SettingProfile& s, int site,
                       bool use_b) {
    double& theta = use_b ? s.thetas_b[site] : s.thetas_a[site];
    double orig = theta;
    theta = 0.0;
    double f0 = eval_settings(terms, s);
    theta = kPi / 2;
    double f1 = eval_settings(terms, s);
    theta = kPi;
    double f2 = eval_settings(terms, s);
    double a = 0.5 * (f0 - f2);
    double c = 0.5 * (f0 + f2);
    double b = f1 - c;
    if (std::abs(a) < 1e-15 && std::abs(b) < 1e-15) {
        theta = orig;
        return;
    }
    theta = std::atan2(b, a);
}

}  // namespace

double closed_form_optimum(SiteCount n, const BellFunctional& f) {
    check_compatible(n.n, f);
    if (f.kind == FunctionalKind::Mermin) return std::pow(2.0, n.n - 1);
    return std::pow(2.0, n.n - 0.5);
}

namespace {

double ascend_from(const std::vector<CorrelatorTerm>& terms, SettingProfile& s) {
    const int n = s.sites();
    double best = eval_settings(terms, s);
    for (int pass = 0; pass < 64; ++pass) {
        for (int k = 0; k < n; ++k) {
            ascend_coordinate(terms, s, k, false);
            ascend_coordinate(terms, s, k, true);
        }
        double v = eval_settings(terms, s);
        if (v - best < 1e-14) return std::max(best, v);
        best = v;
    }
    return best;
}

}  // namespace

QuantumPrediction optimal_quantum_value(SiteCount n, const BellFunctional& f) {
    check_compatible(n.n, f);
    if (n.n > 8) throw capacity_error("optimal search supports n <= 8");
    const auto terms = expand_functional(n, f);

    std::vector<SettingProfile> seeds;

    // rotated-phase family: theta_B = theta_A + pi/2 at every site, with a
    // coarse phase on the first site; covers the GHZ optimum basin directly
    for (int i = 0; i < 8; ++i) {
        SettingProfile s;
        s.thetas_a.assign(n.n, 0.0);
        s.thetas_b.assign(n.n, kPi / 2);
        s.thetas_a[0] = i * kPi / 4;
        s.thetas_b[0] = i * kPi / 4 + kPi / 2;
        seeds.push_back(s);
    }

    // x/y seed grid: each of the 2n angles is 0 or pi/2; keep the best ranked
    const int bits = 2 * n.n;
    std::vector<std::pair<double, uint32_t>> ranked;
    ranked.reserve(1u << bits);
    for (uint32_t mask = 0; mask < (1u << bits); ++mask) {
        SettingProfile s;
        s.thetas_a.resize(n.n);
        s.thetas_b.resize(n.n);
        for (int k = 0; k < n.n; ++k) {
            s.thetas_a[k] = (mask >> (2 * k) & 1) ? kPi / 2 : 0.0;
            s.thetas_b[k] = (mask >> (2 * k + 1) & 1) ? kPi / 2 : 0.0;
        }
        ranked.emplace_back(eval_settings(terms, s), mask);
    }
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        return a.first > b.first || (a.first == b.first && a.second < b.second);
    });
    size_t keep = std::min<size_t>(ranked.size(), 64);
    for (size_t i = 0; i < keep; ++i) {
        SettingProfile s;
        s.thetas_a.resize(n.n);
        s.thetas_b.resize(n.n);
        for (int k = 0; k < n.n; ++k) {
            s.thetas_a[k] = (ranked[i].second >> (2 * k) & 1) ? kPi / 2 : 0.0;
            s.thetas_b[k] = (ranked[i].second >> (2 * k + 1) & 1) ? kPi / 2 : 0.0;
        }
        seeds.push_back(s);
        // rotated last site, per the Ardehali construction
        if (f.kind != FunctionalKind::Mermin) {
            for (int ia = 1; ia < 8; ++ia) {
                SettingProfile r = s;
                r.thetas_a[n.n - 1] = ia * kPi / 4;
                r.thetas_b[n.n - 1] = ia * kPi / 4 + kPi / 2;
                seeds.push_back(r);
            }
        }
    }

    double best = -1e300;
    SettingProfile best_s = seeds.front();
    for (SettingProfile& s : seeds) {
        double v = ascend_from(terms, s);
        if (v > best + 1e-13) {
            best = v;
            best_s = s;
        }
    }
    return {best, 1.0, best_s};
}

QuantumPrediction quantum_prediction(SiteCount n, const BellFunctional& f,
                                     const EfficiencyProfile& etas,
                                     const SettingProfile& settings) {
    check_compatible(n.n, f);
    settings.validate(n.n);
    if (etas.sites() != n.n) throw domain_error("efficiency profile length mismatch");
    const auto terms = expand_functional(n, f);
    double lossless = eval_settings(terms, settings);
    double w = etas.product();
    return {w * lossless, w, settings};
}

QuantumPrediction quantum_prediction_optimal(SiteCount n, const BellFunctional& f,
                                             const EfficiencyProfile& etas) {
    QuantumPrediction opt = optimal_quantum_value(n, f);
    double w = etas.product();
    return {w * opt.value, w, opt.settings};
}

CrossingResult threshold_crossing(SiteCount n, const BellFunctional& f, CrossingTarget target,
                                  const EnvelopePolyline* env) {
    check_compatible(n.n, f);
    const double q = closed_form_optimum(n, f);

    if (target == CrossingTarget::Analytic) {
        double c = holder_bound(n, f, 1.0);  // Holder bound is c*sqrt(w)
        double mb = mabk_bound(n, f);
        double w_holder = (c / q) * (c / q);
        if (w_holder < 0.5) {
            return {true, w_holder, std::pow(w_holder, 1.0 / n.n)};
        }
        double w_flat = mb / q;
        if (w_flat <= 1.0) return {true, w_flat, std::pow(w_flat, 1.0 / n.n)};
        return {false, 0.0, 0.0};
    }

    if (env == nullptr) throw domain_error("envelope crossing requires an envelope");
    const auto& v = env->vertices;
    for (size_t i = 1; i < v.size(); ++i) {
        double w1 = to_double(v[i - 1].first), f1 = to_double(v[i - 1].second);
        double w2 = to_double(v[i].first), f2 = to_double(v[i].second);
        if (q * w1 <= f1 + 1e-15 && q * w2 > f2) {
            double m = (f2 - f1) / (w2 - w1);
            double w_star = (f1 - m * w1) / (q - m);
            return {true, w_star, std::pow(w_star, 1.0 / n.n)};
        }
    }
    return {false, 0.0, 0.0};
}

bool no_violation_check(SiteCount n, const BellFunctional& f, const EnvelopePolyline& env,
                        double grid_step) {
    if (grid_step <= 0.0) throw domain_error("grid step must be positive");
    const double q = closed_form_optimum(n, f);
    for (double eta = grid_step; eta <= 0.5 + 1e-12; eta += grid_step) {
        double e = std::min(eta, 0.5);
        double w = std::pow(e, n.n);
        if (q * w > envelope_query_d(env, w) + 1e-12) return false;
    }
    return true;
}

}  // namespace bell
