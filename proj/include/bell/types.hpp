#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bell {

using Rational = boost::rational<long long>;

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// Error taxonomy mirrored by the CLI exit codes.
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct incomplete_design_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Number of spatially separated sites.
struct SiteCount {
    int n;

    explicit SiteCount(int n_) : n(n_) {
        if (n < 1 || n > 16)
            throw domain_error("site count must be in [1,16], got " + std::to_string(n));
    }
};

// Per-site detection efficiencies, identical for both settings at a site.
struct EfficiencyProfile {
    std::vector<double> etas;

    explicit EfficiencyProfile(std::vector<double> e) : etas(std::move(e)) {
        for (double x : etas)
            if (x < 0.0 || x > 1.0)
                throw domain_error("efficiency out of [0,1]");
    }

    static EfficiencyProfile symmetric(int n, double eta) {
        return EfficiencyProfile(std::vector<double>(static_cast<size_t>(n), eta));
    }

    int sites() const { return static_cast<int>(etas.size()); }

    double product() const {
        double p = 1.0;
        for (double x : etas) p *= x;
        return p;
    }
};

// One per-site outcome assignment (a_k, b_k) for the two settings;
// 0 encodes "no detection".
struct DeterministicStrategy {
    std::vector<std::pair<int, int>> assignments;

    int sites() const { return static_cast<int>(assignments.size()); }

    void validate() const {
        for (auto [a, b] : assignments)
            if (a < -1 || a > 1 || b < -1 || b > 1)
                throw domain_error("strategy outcomes must lie in {-1,0,+1}");
    }
};

// Exact (W, Re z, Im z) with z = prod_k (a_k + i b_k).  W is dyadic with
// denominator dividing 2^n; z is a Gaussian integer with |z|^2 <= 2^n.
struct MomentPoint {
    Rational w;
    long long re_z = 0;
    long long im_z = 0;

    friend bool operator==(const MomentPoint&, const MomentPoint&) = default;
};

enum class FunctionalKind { CHSH, Mermin, Ardehali, Svetlichny };

// Selector among the two-setting functionals.  The sign pair is used by the
// Ardehali/Svetlichny combination s_R*Re z + s_I*Im z.
struct BellFunctional {
    FunctionalKind kind = FunctionalKind::Mermin;
    int s_r = +1;
    int s_i = +1;

    static BellFunctional chsh(int sr = +1, int si = +1) { return {FunctionalKind::CHSH, sr, si}; }
    static BellFunctional mermin() { return {FunctionalKind::Mermin, +1, +1}; }
    static BellFunctional ardehali(int sr = +1, int si = +1) { return {FunctionalKind::Ardehali, sr, si}; }
    static BellFunctional svetlichny(int sr = +1, int si = +1) { return {FunctionalKind::Svetlichny, sr, si}; }
};

const char* functional_name(FunctionalKind k);
FunctionalKind functional_from_name(const std::string& name);

// CHSH is the n=2 instance; Mermin/Ardehali conventionally pair with odd/even
// n but other n are accepted (callers may warn).
void check_compatible(int n, const BellFunctional& f);

// True when (n, kind) follows the conventional parity pairing.
bool conventional_pairing(int n, FunctionalKind k);

// Conventional functional for a given site count: CHSH at n=2, else
// Mermin for odd n, Ardehali for even n.
BellFunctional conventional_functional(int n);

// Concave piecewise-linear upper bound F_max(W) with exact vertices,
// starting at (0,0).
struct EnvelopePolyline {
    std::vector<std::pair<Rational, Rational>> vertices;

    void validate() const;
};

// s_R*re + s_I*im for CHSH/Ardehali/Svetlichny; re for Mermin.
Rational functional_value(const MomentPoint& p, const BellFunctional& f);
Rational functional_value(int n, const MomentPoint& p, const BellFunctional& f);

}  // namespace bell
