#include "bell/envelope.hpp"

#include <algorithm>
#include <complex>
#include <map>
#include <random>

namespace bell {
namespace {

Rational cross(const std::pair<Rational, Rational>& o, const std::pair<Rational, Rational>& a,
               const std::pair<Rational, Rational>& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
}

}  // namespace

EnvelopePolyline upper_envelope(const MomentPointSet& set, const BellFunctional& f) {
    if (set.points.empty()) throw domain_error("empty moment point set");
    check_compatible(set.n, f);

    // best functional value per distinct w
    std::map<Rational, Rational> best;
    best[Rational(0)] = Rational(0);
    for (const MomentPoint& p : set.points) {
        Rational v = functional_value(p, f);
        auto [it, inserted] = best.emplace(p.w, v);
        if (!inserted && v > it->second) it->second = v;
    }

    // upper concave chain over w-increasing candidates; collinear points dropped
    std::vector<std::pair<Rational, Rational>> chain;
    for (const auto& [w, v] : best) {
        std::pair<Rational, Rational> p{w, v};
        while (chain.size() >= 2 && cross(chain[chain.size() - 2], chain.back(), p) >= Rational(0))
            chain.pop_back();
        chain.push_back(p);
    }

    EnvelopePolyline env;
    env.vertices = std::move(chain);
    env.validate();
    return env;
}

Rational envelope_query(const EnvelopePolyline& env, const Rational& w) {
    if (w < Rational(0) || w > Rational(1)) throw domain_error("envelope query outside [0,1]");
    const auto& v = env.vertices;
    auto it = std::lower_bound(v.begin(), v.end(), w,
                               [](const auto& vert, const Rational& x) { return vert.first < x; });
    if (it != v.end() && it->first == w) return it->second;
    if (it == v.begin() || it == v.end())
        throw domain_error("envelope does not bracket query point");
    const auto& [w1, f1] = *(it - 1);
    const auto& [w2, f2] = *it;
    return f1 + (f2 - f1) * (w - w1) / (w2 - w1);
}

double envelope_query_d(const EnvelopePolyline& env, double w) {
    if (w < 0.0 || w > 1.0) throw domain_error("envelope query outside [0,1]");
    const auto& v = env.vertices;
    for (size_t i = 1; i < v.size(); ++i) {
        double w2 = to_double(v[i].first);
        if (w <= w2 || i + 1 == v.size()) {
            double w1 = to_double(v[i - 1].first);
            double f1 = to_double(v[i - 1].second);
            double f2 = to_double(v[i].second);
            return f1 + (f2 - f1) * (w - w1) / (w2 - w1);
        }
    }
    return to_double(v.back().second);
}

std::vector<ScatterPoint> scatter_sample(SiteCount n, const BellFunctional& f, int count,
                                         uint64_t seed) {
    if (count < 1) throw domain_error("scatter count must be >= 1");
    auto mode = n.n <= 8 ? EnumerationMode::Direct : EnumerationMode::DP;
    MomentPointSet set = enumerate_moment_points(n, mode);
    check_compatible(set.n, f);

    std::vector<std::pair<Rational, Rational>> pure;
    pure.reserve(set.points.size());
    for (const MomentPoint& p : set.points) pure.emplace_back(p.w, functional_value(p, f));

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, pure.size() - 1);
    std::uniform_int_distribution<long long> dyadic(1, 1023);

    std::vector<ScatterPoint> out;
    out.reserve(static_cast<size_t>(count));
    int n_pure = std::min<int>(count / 2 + 1, static_cast<int>(pure.size()));
    for (int i = 0; i < n_pure && static_cast<int>(out.size()) < count; ++i) {
        size_t j = pick(rng);
        out.push_back({pure[j].first, pure[j].second, false});
    }
    while (static_cast<int>(out.size()) < count) {
        // dyadic mixture weight keeps the point exactly inside the hull
        size_t i = pick(rng), j = pick(rng);
        Rational t(dyadic(rng), 1024);
        Rational w = t * pure[i].first + (Rational(1) - t) * pure[j].first;
        Rational v = t * pure[i].second + (Rational(1) - t) * pure[j].second;
        out.push_back({w, v, true});
    }
    return out;
}

ProbeResult stochastic_probe(SiteCount n, const BellFunctional& f, long trials, uint64_t seed) {
    if (trials < 1) throw domain_error("probe trials must be >= 1");
    auto mode = n.n <= 8 ? EnumerationMode::Direct : EnumerationMode::DP;
    EnvelopePolyline env = upper_envelope(enumerate_moment_points(n, mode), f);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> sym(-1.0, 1.0);

    ProbeResult res{-1e300, 0.0, 0.0, trials};
    for (long t = 0; t < trials; ++t) {
        double w = 1.0;
        std::complex<double> z(1.0, 0.0);
        for (int k = 0; k < n.n; ++k) {
            double eta_a = unit(rng);
            double eta_b = unit(rng);
            double a = eta_a * sym(rng);
            double b = eta_b * sym(rng);
            w *= 0.5 * (eta_a + eta_b);
            z *= std::complex<double>(a, b);
        }
        double value = f.kind == FunctionalKind::Mermin ? z.real()
                                                        : f.s_r * z.real() + f.s_i * z.imag();
        double excess = value - envelope_query_d(env, w);
        if (excess > res.max_excess) {
            res.max_excess = excess;
            res.w_at_max = w;
            res.f_at_max = value;
        }
    }
    return res;
}

}  // namespace bell
