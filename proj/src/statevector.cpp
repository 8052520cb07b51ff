#include "bell/statevector.hpp"

#include <cmath>

namespace bell {

using complexd = std::complex<double>;

void SettingProfile::validate(int n) const {
    if (static_cast<int>(thetas_a.size()) != n || static_cast<int>(thetas_b.size()) != n)
        throw domain_error("setting profile length must equal site count");
}

StateVector ghz_state(SiteCount n) {
    if (n.n > 12) throw capacity_error("statevector path supports n <= 12");
    Eigen::Index dim = Eigen::Index(1) << n.n;
    StateVector psi = StateVector::Zero(dim);
    const double r = 1.0 / std::sqrt(2.0);
    psi(0) = r;
    psi(dim - 1) = -r;
    return psi;
}

StateVector apply_sigma_theta(const StateVector& psi, int n, int site, double theta) {
    // sigma_theta |0> = e^{i theta} |1>,  sigma_theta |1> = e^{-i theta} |0>
    StateVector out(psi.size());
    const complexd up = std::polar(1.0, theta);
    const Eigen::Index bit = Eigen::Index(1) << site;
    for (Eigen::Index idx = 0; idx < psi.size(); ++idx) {
        if (idx & bit)
            out(idx) = up * psi(idx ^ bit);
        else
            out(idx) = std::conj(up) * psi(idx ^ bit);
    }
    (void)n;
    return out;
}

double ghz_correlator(SiteCount n, const std::vector<double>& thetas) {
    if (static_cast<int>(thetas.size()) != n.n)
        throw domain_error("theta list length must equal site count");
    StateVector psi = ghz_state(n);
    StateVector phi = psi;
    for (int k = 0; k < n.n; ++k) phi = apply_sigma_theta(phi, n.n, k, thetas[k]);
    complexd e = psi.dot(phi);
    return e.real();
}

double ghz_correlator_closed_form(const std::vector<double>& thetas) {
    double s = 0.0;
    for (double t : thetas) s += t;
    return -std::cos(s);
}

double functional_from_correlators(SiteCount n, const BellFunctional& f,
                                   const SettingProfile& settings) {
    settings.validate(n.n);
    double total = 0.0;
    for (const CorrelatorTerm& term : expand_functional(n, f)) {
        std::vector<double> thetas(n.n);
        for (int k = 0; k < n.n; ++k) thetas[k] = settings.theta(k, term.choice >> k & 1);
        total += term.coefficient * ghz_correlator(n, thetas);
    }
    return total;
}

namespace {

Eigen::Matrix2cd sigma_theta_matrix(double theta) {
    Eigen::Matrix2cd m;
    m << 0.0, std::polar(1.0, -theta), std::polar(1.0, theta), 0.0;
    return m;
}

}  // namespace

double functional_operator_expectation(SiteCount n, const BellFunctional& f,
                                       const SettingProfile& settings) {
    settings.validate(n.n);
    if (n.n > 8) throw capacity_error("dense operator path supports n <= 8");
    Eigen::Index dim = Eigen::Index(1) << n.n;
    Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(dim, dim);
    for (const CorrelatorTerm& term : expand_functional(n, f)) {
        Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(1, 1);
        // site k occupies bit k, so higher sites are outer Kronecker factors
        for (int k = 0; k < n.n; ++k) {
            Eigen::Matrix2cd site = sigma_theta_matrix(settings.theta(k, term.choice >> k & 1));
            Eigen::MatrixXcd next(acc.rows() * 2, acc.cols() * 2);
            next.topLeftCorner(acc.rows(), acc.cols()) = site(0, 0) * acc;
            next.topRightCorner(acc.rows(), acc.cols()) = site(0, 1) * acc;
            next.bottomLeftCorner(acc.rows(), acc.cols()) = site(1, 0) * acc;
            next.bottomRightCorner(acc.rows(), acc.cols()) = site(1, 1) * acc;
            acc = std::move(next);
        }
        op += static_cast<double>(term.coefficient) * acc;
    }
    StateVector psi = ghz_state(n);
    return psi.dot(op * psi).real();
}

Eigen::VectorXd ghz_outcome_distribution(SiteCount n, const SettingProfile& settings,
                                         uint32_t word) {
    settings.validate(n.n);
    StateVector psi = ghz_state(n);
    // rotate each site into the sigma_theta eigenbasis:
    // |+theta> = (|0> + e^{i theta}|1>)/sqrt(2), |-theta> = (|0> - e^{i theta}|1>)/sqrt(2)
    for (int k = 0; k < n.n; ++k) {
        double theta = settings.theta(k, word >> k & 1);
        const complexd ph = std::polar(1.0, -theta);
        const double r = 1.0 / std::sqrt(2.0);
        const Eigen::Index bit = Eigen::Index(1) << k;
        for (Eigen::Index idx = 0; idx < psi.size(); ++idx) {
            if (idx & bit) continue;
            complexd a0 = psi(idx);
            complexd a1 = psi(idx | bit);
            psi(idx) = r * (a0 + ph * a1);
            psi(idx | bit) = r * (a0 - ph * a1);
        }
    }
    Eigen::VectorXd p = psi.cwiseAbs2();
    double total = p.sum();
    p /= total;
    return p;
}

}  // namespace bell
