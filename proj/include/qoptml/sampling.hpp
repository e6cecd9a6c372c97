#pragma once

#include <cstdint>
#include <vector>

#include "qoptml/gaussian_state.hpp"
#include "qoptml/records.hpp"
#include "qoptml/rng.hpp"

namespace qoptml {

/// Local-oscillator phase policy for homodyne sampling.
struct PhasePolicy {
    enum class Kind { RandomUniform, Fixed };
    Kind kind = Kind::RandomUniform;
    double fixed_phase = 0.0;

    static PhasePolicy random_uniform() { return {Kind::RandomUniform, 0.0}; }
    static PhasePolicy fixed(double phase) { return {Kind::Fixed, phase}; }
};

/// Draws n homodyne records: phi_i per policy (uniform on [0, 2pi) for
/// RandomUniform), x_i from the homodyne distribution at phi_i.
std::vector<HomodyneRecord> sample_homodyne(const GaussianState& state,
                                            const DetectorEfficiency& det, PhasePolicy policy,
                                            std::int64_t n, RngSeed seed);

/// Draws n heterodyne outcomes alpha_i = A e^{i psi} + (g1 + i g2)/sqrt(2)
/// with g1, g2 standard normal (density e^{-|alpha - A e^{i psi}|^2} / pi).
std::vector<HeterodyneRecord> sample_heterodyne(double amplitude, double psi, std::int64_t n,
                                                RngSeed seed);

/// ON/OFF detection of a coherent reference with |alpha|^2 = alpha_sq:
/// n_clicks ~ Binomial(n, 1 - e^{-eta alpha_sq}).
ClickRecord sample_onoff(double alpha_sq, double eta_true, std::int64_t n, RngSeed seed);

/// Fixed-phase homodyne outcomes of the squeezed eta-probe model
/// x ~ N(eta x0, (e^{-2r} + 1 - eta)/4); used for linear-detector efficiency
/// estimation.
std::vector<double> sample_eta_probe(double x0, double r, double eta_true, std::int64_t n,
                                     RngSeed seed);

}  // namespace qoptml
