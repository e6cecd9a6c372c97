#include "qoptml/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qoptml {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_count(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("sampler: n must be >= 1");
}

}  // namespace

std::vector<HomodyneRecord> sample_homodyne(const GaussianState& state,
                                            const DetectorEfficiency& det, PhasePolicy policy,
                                            std::int64_t n, RngSeed seed) {
    check_count(n);
    StreamRng rng(seed);
    std::vector<HomodyneRecord> records(static_cast<std::size_t>(n));

    if (policy.kind == PhasePolicy::Kind::Fixed) {
        double phase = std::fmod(policy.fixed_phase, kTwoPi);
        if (phase < 0.0) phase += kTwoPi;
        const auto [mean, var] = homodyne_moments(state, det, phase);
        const double sd = std::sqrt(var);
        for (auto& rec : records) rec = {phase, mean + sd * rng.normal()};
    } else {
        for (auto& rec : records) {
            const double phase = rng.uniform(0.0, kTwoPi);
            const auto [mean, var] = homodyne_moments(state, det, phase);
            rec = {phase, mean + std::sqrt(var) * rng.normal()};
        }
    }
    return records;
}

std::vector<HeterodyneRecord> sample_heterodyne(double amplitude, double psi, std::int64_t n,
                                                RngSeed seed) {
    check_count(n);
    if (amplitude < 0.0) throw std::invalid_argument("sample_heterodyne: amplitude must be >= 0");
    StreamRng rng(seed);
    const double re0 = amplitude * std::cos(psi);
    const double im0 = amplitude * std::sin(psi);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<HeterodyneRecord> records(static_cast<std::size_t>(n));
    for (auto& rec : records) {
        const auto [g1, g2] = rng.normal_pair();
        rec = {re0 + g1 * inv_sqrt2, im0 + g2 * inv_sqrt2};
    }
    return records;
}

ClickRecord sample_onoff(double alpha_sq, double eta_true, std::int64_t n, RngSeed seed) {
    check_count(n);
    if (alpha_sq < 0.0) throw std::invalid_argument("sample_onoff: alpha_sq must be >= 0");
    if (!(eta_true > 0.0) || eta_true > 1.0)
        throw std::invalid_argument("sample_onoff: eta_true must be in (0, 1]");
    StreamRng rng(seed);
    const double p_click = -std::expm1(-eta_true * alpha_sq);
    std::int64_t clicks = 0;
    for (std::int64_t i = 0; i < n; ++i)
        if (rng.uniform() < p_click) ++clicks;
    return {n, clicks};
}

std::vector<double> sample_eta_probe(double x0, double r, double eta_true, std::int64_t n,
                                     RngSeed seed) {
    check_count(n);
    if (!(eta_true > 0.0) || eta_true > 1.0)
        throw std::invalid_argument("sample_eta_probe: eta_true must be in (0, 1]");
    StreamRng rng(seed);
    const double mean = eta_true * x0;
    const double sd = 0.5 * std::sqrt(std::exp(-2.0 * r) + 1.0 - eta_true);
    std::vector<double> xs(static_cast<std::size_t>(n));
    for (auto& x : xs) x = mean + sd * rng.normal();
    return xs;
}

}  // namespace qoptml
