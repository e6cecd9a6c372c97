#pragma once

#include <complex>

#include "qoptml/mat2.hpp"

namespace qoptml {

/// How a sub-unity quantum efficiency eta enters the homodyne distribution.
///
/// Rescaled: outcomes are rescaled so the mean is unchanged and eta only
/// broadens the variance by (1-eta)/(4 eta) (convolution convention).
/// Raw: the mean is scaled by eta and the variance becomes
/// eta^2 * ideal + eta (1-eta)/4.
/// The two coincide at eta = 1.
enum class EtaConvention { Rescaled, Raw };

class DetectorEfficiency {
  public:
    explicit DetectorEfficiency(double eta, EtaConvention convention = EtaConvention::Rescaled);

    static DetectorEfficiency ideal() { return DetectorEfficiency(1.0); }

    double eta() const { return eta_; }
    EtaConvention convention() const { return convention_; }

  private:
    double eta_;
    EtaConvention convention_;
};

/// Single-mode Gaussian state with Wigner function
///   W(x, y) = (2 D^2 / pi) exp{-2 D^2 [e^{-2r} u^2 + e^{2r} v^2]},
/// where (u, v) are the coordinates relative to (Re mu, Im mu) rotated by
/// -theta. delta is the purity parameter (Tr rho^2 = delta^2), r the
/// squeezing, mu the coherent amplitude. theta = 0 for states built from the
/// standard parameterization; nonzero theta arises from Bogoliubov outputs.
class GaussianState {
  public:
    GaussianState(double delta, double r, std::complex<double> mu, double theta = 0.0);

    static GaussianState vacuum() { return GaussianState(1.0, 0.0, {0.0, 0.0}); }
    static GaussianState coherent(std::complex<double> mu) { return GaussianState(1.0, 0.0, mu); }
    /// Builds the state with the given mean photon contributions; the
    /// coherent amplitude is placed at angle coh_phase.
    static GaussianState from_photon_budget(double n_th, double n_sq, double n_coh,
                                            double coh_phase = 0.0);

    double delta() const { return delta_; }
    double r() const { return r_; }
    std::complex<double> mu() const { return mu_; }
    double theta() const { return theta_; }

    /// Covariance of the Wigner distribution (quadrature units: vacuum = I/4).
    SymMat2 covariance() const;

    bool operator==(const GaussianState&) const = default;

  private:
    double delta_;
    double r_;
    std::complex<double> mu_;
    double theta_;
};

struct PhotonBudget {
    double n_th = 0.0;
    double n_sq = 0.0;
    double n_coh = 0.0;
};

/// Mean photon numbers (thermal, squeezing, coherent) of a state.
PhotonBudget photon_budget(const GaussianState& state);

/// Wigner function value at (x, y); normalized so the plane integral is 1.
double wigner(const GaussianState& state, double x, double y);

struct GaussianMoments {
    double mean = 0.0;
    double variance = 0.0;
};

/// Mean and variance of the homodyne outcome distribution at the given
/// local-oscillator phase, including the detector-efficiency smearing.
GaussianMoments homodyne_moments(const GaussianState& state, const DetectorEfficiency& det,
                                 double phase);

/// Probability density of homodyne outcome x at the given phase.
double homodyne_pdf(const GaussianState& state, const DetectorEfficiency& det, double phase,
                    double x);

/// Normalized overlap O = Tr[rho_a rho_b] / sqrt(Tr[rho_a^2] Tr[rho_b^2]),
/// computed from closed-form Gaussian moment algebra. O = 1 iff a == b.
double state_overlap(const GaussianState& a, const GaussianState& b);

/// Tr[rho_a rho_b] = pi * integral of W_a W_b.
double state_product_trace(const GaussianState& a, const GaussianState& b);

}  // namespace qoptml
