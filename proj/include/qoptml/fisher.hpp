#pragma once

#include <cstdint>
#include <functional>

namespace qoptml {

struct FisherResult {
    double fisher = 0.0;         // F
    double crlb_variance = 0.0;  // 1/(n F)
    std::int64_t n = 1;
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Density family p(x | lambda).
using PdfFamily = std::function<double(double x, double lambda)>;

/// Fisher information F = integral (d_lambda p)^2 / p dx, with central
/// differences in lambda (step d = 1e-5 (1 + |lambda|) when dlambda <= 0)
/// and adaptive Simpson quadrature over x_domain.
FisherResult fisher_numeric(const PdfFamily& family, double lambda, Interval x_domain,
                            double dlambda = 0.0);

/// Phase bound sigma_psi = 1/sqrt(2 n N) for heterodyne / random-phase
/// homodyne on a coherent state with mean photon number n.
double phase_crlb_coherent(double n_photons, std::int64_t n_meas);

/// Phase variance bound sigma^2_psi = (e^{-2r} + (1-eta)/eta) / (4 N A^2) for
/// fixed-phase homodyne on a displaced squeezed state; eta = 1 gives the ideal
/// bound.
double phase_crlb_squeezed(double amplitude, double r, double eta, std::int64_t n_meas);

/// Optimal squeezing e^{2r} maximizing the phase sensitivity at fixed total
/// photon number: closed form at eta = 1, root of the cubic
/// x^3 + (4A^2 + (1-eta)/eta) x^2 - x - (1-eta)/eta in [0, 1] (x = e^{-2r})
/// otherwise.
double optimal_squeezing(double amplitude, double eta);

/// The cubic-root route on its own (valid at eta = 1 too, where it agrees
/// with the closed form); kept separate so both routes can be cross-checked.
double optimal_squeezing_cubic(double amplitude, double eta);

/// Fisher information of the ON/OFF coherent-reference test:
/// F = |alpha|^4 e^{-eta |alpha|^2} / (1 - e^{-eta |alpha|^2}).
FisherResult onoff_fisher(double eta, double alpha_sq);

/// The paper's weak-pulse simplification eta^2 / (e^{eta |alpha|^2} - 1);
/// reported alongside the general line (the two disagree, see README notes).
double onoff_fisher_weak_pulse(double eta, double alpha_sq);

/// Error propagation sigma_psi = sigma_ybar / (A sqrt(1 - (ybar/A)^2)) for the
/// arcsin phase estimator.
double propagate_phase_error(double y_mean, double sigma_y_mean, double amplitude);

}  // namespace qoptml
