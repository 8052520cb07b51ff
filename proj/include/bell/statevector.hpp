#pragma once

#include <Eigen/Dense>
#include <complex>

#include "bell/correlators.hpp"
#include "bell/types.hpp"

namespace bell {

using StateVector = Eigen::VectorXcd;

// Measurement directions in the x-y plane for settings A and B at each site:
// sigma_theta = sigma_x cos(theta) + sigma_y sin(theta).
struct SettingProfile {
    std::vector<double> thetas_a;
    std::vector<double> thetas_b;

    int sites() const { return static_cast<int>(thetas_a.size()); }
    void validate(int n) const;
    double theta(int site, bool use_b) const { return use_b ? thetas_b[site] : thetas_a[site]; }
};

// (|0...0> - |1...1>)/sqrt(2), qubit k at bit k, amplitude index little-endian.
StateVector ghz_state(SiteCount n);

// Applies sigma_theta at the given qubit.
StateVector apply_sigma_theta(const StateVector& psi, int n, int site, double theta);

// <prod_k sigma_{theta_k}> on the GHZ state by explicit statevector
// construction; equals -cos(sum theta_k) for this phase convention.
double ghz_correlator(SiteCount n, const std::vector<double>& thetas);

double ghz_correlator_closed_form(const std::vector<double>& thetas);

// <psi| F |psi> with F built as a dense operator from the correlator
// expansion via explicit Kronecker products.  Independent check path; n <= 8.
double functional_operator_expectation(SiteCount n, const BellFunctional& f,
                                       const SettingProfile& settings);

// Functional value assembled term by term from statevector correlators.
double functional_from_correlators(SiteCount n, const BellFunctional& f,
                                   const SettingProfile& settings);

// Joint +-1 outcome distribution for one setting word (bit k: B at site k):
// probabilities indexed by outcome bits (bit k set = outcome -1 at site k).
Eigen::VectorXd ghz_outcome_distribution(SiteCount n, const SettingProfile& settings,
                                         uint32_t word);

}  // namespace bell
