#include "qoptml/gaussian_state.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qoptml {

namespace {

constexpr double kPi = std::numbers::pi;

double normalize_theta(double theta) {
    theta = std::fmod(theta, kPi);
    if (theta < 0.0) theta += kPi;
    return theta;
}

}  // namespace

DetectorEfficiency::DetectorEfficiency(double eta, EtaConvention convention)
    : eta_(eta), convention_(convention) {
    if (!(eta > 0.0) || eta > 1.0)
        throw std::invalid_argument("DetectorEfficiency: eta must be in (0, 1]");
}

GaussianState::GaussianState(double delta, double r, std::complex<double> mu, double theta)
    : delta_(delta), r_(r), mu_(mu), theta_(normalize_theta(theta)) {
    if (!(delta > 0.0) || delta > 1.0 + 1e-12)
        throw std::invalid_argument("GaussianState: delta must be in (0, 1]");
    if (delta_ > 1.0) delta_ = 1.0;
    if (!std::isfinite(r) || !std::isfinite(mu.real()) || !std::isfinite(mu.imag()))
        throw std::invalid_argument("GaussianState: parameters must be finite");
}

GaussianState GaussianState::from_photon_budget(double n_th, double n_sq, double n_coh,
                                                double coh_phase) {
    if (n_th < 0.0 || n_sq < 0.0 || n_coh < 0.0)
        throw std::invalid_argument("from_photon_budget: photon numbers must be >= 0");
    const double delta = 1.0 / std::sqrt(2.0 * n_th + 1.0);
    const double r = std::asinh(std::sqrt(n_sq));
    const std::complex<double> mu = std::polar(std::sqrt(n_coh), coh_phase);
    return GaussianState(delta, r, mu);
}

SymMat2 GaussianState::covariance() const {
    const double k = 1.0 / (4.0 * delta_ * delta_);
    const SymMat2 diag{std::exp(2.0 * r_) * k, 0.0, std::exp(-2.0 * r_) * k};
    if (theta_ == 0.0) return diag;
    return Mat2::rotation(theta_).congruence(diag);
}

PhotonBudget photon_budget(const GaussianState& state) {
    const double d2 = state.delta() * state.delta();
    const double sh = std::sinh(state.r());
    return {0.5 * (1.0 / d2 - 1.0), sh * sh, std::norm(state.mu())};
}

double wigner(const GaussianState& state, double x, double y) {
    const double dx = x - state.mu().real();
    const double dy = y - state.mu().imag();
    const double c = std::cos(state.theta());
    const double s = std::sin(state.theta());
    const double u = c * dx + s * dy;
    const double v = -s * dx + c * dy;
    const double d2 = state.delta() * state.delta();
    const double expo =
        -2.0 * d2 * (std::exp(-2.0 * state.r()) * u * u + std::exp(2.0 * state.r()) * v * v);
    return (2.0 * d2 / kPi) * std::exp(expo);
}

GaussianMoments homodyne_moments(const GaussianState& state, const DetectorEfficiency& det,
                                 double phase) {
    const double rel = phase - state.theta();
    const double cp = std::cos(rel);
    const double sp = std::sin(rel);
    const double d2 = state.delta() * state.delta();
    const double ideal_var =
        (std::exp(2.0 * state.r()) * cp * cp + std::exp(-2.0 * state.r()) * sp * sp) / (4.0 * d2);
    const double ideal_mean = (state.mu() * std::polar(1.0, -phase)).real();

    const double eta = det.eta();
    if (eta == 1.0) return {ideal_mean, ideal_var};
    switch (det.convention()) {
        case EtaConvention::Rescaled:
            return {ideal_mean, ideal_var + (1.0 - eta) / (4.0 * eta)};
        case EtaConvention::Raw:
            return {eta * ideal_mean, eta * eta * ideal_var + eta * (1.0 - eta) / 4.0};
    }
    throw std::logic_error("homodyne_moments: unknown convention");
}

double homodyne_pdf(const GaussianState& state, const DetectorEfficiency& det, double phase,
                    double x) {
    const auto [mean, var] = homodyne_moments(state, det, phase);
    const double d = x - mean;
    return std::exp(-d * d / (2.0 * var)) / std::sqrt(2.0 * kPi * var);
}

double state_product_trace(const GaussianState& a, const GaussianState& b) {
    const SymMat2 sum = a.covariance() + b.covariance();
    const double dx = a.mu().real() - b.mu().real();
    const double dy = a.mu().imag() - b.mu().imag();
    const SymMat2 inv = sum.inverse();
    return std::exp(-0.5 * inv.quad_form(dx, dy)) / (2.0 * std::sqrt(sum.det()));
}

double state_overlap(const GaussianState& a, const GaussianState& b) {
    if (a == b) return 1.0;
    return state_product_trace(a, b) / (a.delta() * b.delta());
}

}  // namespace qoptml
