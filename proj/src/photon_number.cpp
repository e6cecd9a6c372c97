#include "qoptml/photon_number.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qoptml {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double big_c(double phi, double n_th, double r) {
    const double c = std::cos(phi), s = std::sin(phi);
    return (n_th + 0.5) * (std::exp(-2.0 * r) * s * s + std::exp(2.0 * r) * c * c) + 0.5;
}

// (1/2pi) integral of [(C-1)/C]^n / C over [0, 2pi], K uniform nodes.
// C > 1/2 always, so |(C-1)/C| < 1 and the integrand is bounded.
double trapezoid(double n_th, double r, int n, int nodes) {
    double acc = 0.0;
    for (int k = 0; k < nodes; ++k) {
        const double phi = kTwoPi * static_cast<double>(k) / nodes;
        const double c = big_c(phi, n_th, r);
        const double t = (c - 1.0) / c;
        acc += std::pow(t, n) / c;
    }
    return acc / nodes;
}

// Largest |(C-1)/C|; C is extremal at phi = 0 and phi = pi/2.
double max_abs_t(double n_th, double r) {
    const double t0 = std::abs(1.0 - 1.0 / big_c(0.0, n_th, r));
    const double t1 = std::abs(1.0 - 1.0 / big_c(0.5 * std::numbers::pi, n_th, r));
    return std::max(t0, t1);
}

}  // namespace

double photon_number_prob(double n_th, double r, int n) {
    if (n_th < 0.0) throw std::invalid_argument("photon_number_prob: n_th must be >= 0");
    if (n < 0) throw std::invalid_argument("photon_number_prob: n must be >= 0");

    constexpr double kTol = 1e-10;
    constexpr int kMaxNodes = 1 << 17;
    int nodes = 512;
    double prev = trapezoid(n_th, r, n, nodes);
    double err = std::numeric_limits<double>::infinity();
    while (nodes < kMaxNodes) {
        nodes *= 2;
        const double cur = trapezoid(n_th, r, n, nodes);
        err = std::abs(cur - prev);
        prev = cur;
        if (err < kTol) {
            // Clamp quadrature noise around exact zeros (odd squeezed-vacuum terms).
            if (prev < 0.0 && prev > -kTol) return 0.0;
            return prev;
        }
    }
    throw QuadratureError("photon_number_prob: trapezoid rule did not converge", err);
}

int photon_number_cutoff(double n_th, double r, double tail_bound) {
    const double t = max_abs_t(n_th, r);
    if (t <= 0.0) return 0;
    const double m = std::log(tail_bound) / std::log(t) - 1.0;
    return std::max(0, static_cast<int>(std::ceil(m)));
}

std::vector<double> photon_number_distribution(double n_th, double r, double tail_bound) {
    const int cutoff = photon_number_cutoff(n_th, r, tail_bound);
    std::vector<double> probs(static_cast<std::size_t>(cutoff) + 1);
    for (int n = 0; n <= cutoff; ++n) probs[static_cast<std::size_t>(n)] = photon_number_prob(n_th, r, n);
    return probs;
}

}  // namespace qoptml
