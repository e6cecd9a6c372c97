#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qoptml/gaussian_state.hpp"
#include "qoptml/optimize.hpp"
#include "qoptml/records.hpp"

namespace qoptml {

/// Outcome of a maximum-likelihood estimation: point estimate(s), statistical
/// error, the Cramer-Rao variance bound 1/(N F) when the Fisher information F
/// is available, and convergence metadata.
struct EstimationResult {
    std::vector<double> estimate;
    std::vector<double> std_error;
    double crlb = 0.0;    // variance bound 1/(N F); 0 when unavailable
    double fisher = 0.0;  // per-sample Fisher information; 0 when unavailable
    std::size_t n_samples = 0;
    bool converged = true;
    double log_likelihood_at_max = std::numeric_limits<double>::quiet_NaN();
    std::vector<std::string> flags;
    std::map<std::string, double> diagnostics;

    double value() const { return estimate.at(0); }
    double error() const { return std_error.empty() ? 0.0 : std_error.front(); }
    bool has_flag(std::string_view flag) const;
};

/// Displaced squeezed probe |x0, r> used for linear-detector efficiency
/// estimation; n = x0^2 + sinh^2 r, gamma_frac = sinh^2 r / n.
struct SqueezedProbe {
    double x0;
    double r;
    double gamma_frac;

    SqueezedProbe(double x0, double r);
    static SqueezedProbe from_photons(double n_photons, double gamma_frac);
    double total_photons() const;
};

/// Coherent-state phase-estimation scenario: amplitude A, true phase psi.
struct CoherentPhaseScenario {
    double amplitude = 1.0;
    double psi_true = 0.0;
};

/// Sum of log homodyne densities over the records.
double log_likelihood_gaussian(const GaussianState& state, const DetectorEfficiency& det,
                               std::span<const HomodyneRecord> records);

struct FitOptions {
    bool fit_theta = false;  // also fit the covariance orientation
    int n_starts = 4;
    int max_iters = 500;
    /// Natural-parameter start (delta, r, mu_re, mu_im[, theta]); moment
    /// estimates are used when absent.
    std::optional<std::vector<double>> init;
};

/// Maximum-likelihood fit of the Gaussian state parameters (delta, r, Re mu,
/// Im mu) from homodyne records (theta = 0 unless fit_theta). delta is
/// optimized through log(delta) and clamped to <= 1 at the end (flagged when
/// the clamp is active).
std::pair<GaussianState, EstimationResult> fit_gaussian_state(
    std::span<const HomodyneRecord> records, const DetectorEfficiency& det,
    const FitOptions& options = {});

/// psi_ML = arg(mean alpha); std error from 50-block jackknife, CRLB with the
/// plug-in photon number |mean alpha|^2.
EstimationResult phase_mle_heterodyne(std::span<const HeterodyneRecord> records);

/// psi_ML = atan2(mean(x sin phi), mean(x cos phi)); range (-pi, pi].
EstimationResult phase_mle_homodyne_random(std::span<const HomodyneRecord> records);

/// psi_ML = arcsin(ybar / A) for fixed-phase homodyne on a displaced squeezed
/// state; |ybar| > A is clamped to +-pi/2 and flagged. Std error by error
/// propagation through the arcsin.
EstimationResult phase_mle_squeezed(std::span<const double> y_records, double amplitude);

/// Density of the eta-probe model: N(eta x0, (e^{-2r} + 1 - eta)/4).
double eta_probe_pdf(const SqueezedProbe& probe, double eta, double x);

/// Log-likelihood of fixed-phase homodyne outcomes under the eta-probe model.
double eta_probe_log_likelihood(const SqueezedProbe& probe, double eta,
                                std::span<const double> records);

/// eta_ML from numeric 1-D maximization of the eta-probe likelihood (logit
/// transform on (0, 1)); the printed closed form is evaluated as a cross-check
/// and reported under diagnostics["closed_form_eta"].
EstimationResult eta_mle_linear(std::span<const double> records, const SqueezedProbe& probe);

/// Naive mean-value estimate eta = xbar / x0 (may exceed 1; flagged, not
/// clamped).
EstimationResult eta_naive(std::span<const double> records, const SqueezedProbe& probe);

/// eta_ML = -log(1 - N_c/N) / |alpha|^2 for ON/OFF clicks on a coherent
/// reference. N_c = 0 gives the boundary estimate 0; N_c = N is reported as an
/// out-of-range failure.
EstimationResult eta_mle_onoff(const ClickRecord& clicks, double alpha_sq);

}  // namespace qoptml
