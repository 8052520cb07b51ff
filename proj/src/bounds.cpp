#include "bell/bounds.hpp"

#include <cmath>

namespace bell {
namespace {

bool ardehali_form(FunctionalKind k) {
    return k == FunctionalKind::CHSH || k == FunctionalKind::Ardehali ||
           k == FunctionalKind::Svetlichny;
}

void check_w(double w) {
    if (!(w >= 0.0 && w <= 1.0)) throw domain_error("w must lie in [0,1]");
}

}  // namespace

const char* region_name(RegionLabel r) {
    switch (r) {
        case RegionLabel::MABK: return "MABK";
        case RegionLabel::Holder: return "Holder";
        case RegionLabel::LHV_no_violation: return "LHV_no_violation";
    }
    return "?";
}

ExactBound ExactBound::pow2_half(long long h) {
    ExactBound b;
    long long whole = h >= 0 ? h / 2 : -((-h + 1) / 2);
    int rem = static_cast<int>(h - 2 * whole);  // 0 or 1
    b.mantissa = whole >= 0 ? Rational(1LL << whole) : Rational(1, 1LL << (-whole));
    b.half_exp = rem;
    return b;
}

ExactBound ExactBound::operator*(const ExactBound& o) const {
    ExactBound r;
    r.mantissa = mantissa * o.mantissa;
    int h = half_exp + o.half_exp;
    if (h >= 2) {
        r.mantissa *= Rational(2);
        h -= 2;
    }
    r.half_exp = h;
    return r;
}

double ExactBound::value() const {
    return to_double(mantissa) * (half_exp ? std::sqrt(2.0) : 1.0);
}

double holder_bound(SiteCount n, const BellFunctional& f, double w) {
    check_w(w);
    double half_exponent = ardehali_form(f.kind) ? (n.n + 1) / 2.0 : n.n / 2.0;
    return std::pow(2.0, half_exponent) * std::sqrt(w);
}

ExactBound holder_bound_exact(SiteCount n, const BellFunctional& f, int w_log2) {
    if (w_log2 > 0) throw domain_error("w = 2^k requires k <= 0");
    long long h = (ardehali_form(f.kind) ? n.n + 1 : n.n) + w_log2;
    return ExactBound::pow2_half(h);
}

double mabk_bound(SiteCount n, const BellFunctional& f) {
    return mabk_bound_exact(n, f).value();
}

ExactBound mabk_bound_exact(SiteCount n, const BellFunctional& f) {
    switch (f.kind) {
        case FunctionalKind::CHSH:
            return ExactBound::pow2_half(2);
        case FunctionalKind::Ardehali:
            return ExactBound::pow2_half(n.n);
        case FunctionalKind::Mermin:
            return ExactBound::pow2_half(n.n - 1);
        case FunctionalKind::Svetlichny:
            return ExactBound::pow2_half(2LL * (n.n - 1));
    }
    throw domain_error("bad functional kind");
}

double tight_analytic_bound(SiteCount n, const BellFunctional& f, double w) {
    return std::min(holder_bound(n, f, w), mabk_bound(n, f));
}

RegionLabel classify_region(SiteCount n, double w) {
    check_w(w);
    if (w >= 0.5) return RegionLabel::MABK;
    if (w < std::pow(2.0, -n.n)) return RegionLabel::LHV_no_violation;
    return RegionLabel::Holder;
}

ThresholdResult analytic_threshold(SiteCount n) {
    if (n.n == 2) {
        // quantum line 2*sqrt(2)*w meets only the flat CHSH segment
        return {1.0 / std::sqrt(2.0), std::pow(2.0, -0.25), false};
    }
    if (n.n < 2) throw domain_error("threshold requires n >= 2");
    double w_star = std::pow(2.0, 2 - n.n);
    double eta = std::pow(2.0, 2.0 / n.n - 1.0);
    return {w_star, eta, true};
}

double braunstein_mann_threshold(SiteCount n) {
    return std::pow(2.0, (1.0 - n.n) / (2.0 * n.n));
}

bool asymmetric_threshold_check(const EfficiencyProfile& etas) {
    int n = etas.sites();
    if (n < 3) throw domain_error("asymmetric threshold requires n >= 3");
    return etas.product() > std::pow(2.0, 2 - n);
}

SvetlichnyRequirement svetlichny_requirement(SiteCount n) {
    return {1.0 / std::sqrt(2.0), std::pow(2.0, -1.0 / (2.0 * n.n))};
}

}  // namespace bell
