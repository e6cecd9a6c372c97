#include "qoptml/fisher.hpp"

#include <cmath>
#include <stdexcept>

#include "qoptml/photon_number.hpp"

namespace qoptml {

namespace {

struct SimpsonState {
    const std::function<double(double)>* f = nullptr;
    long evals = 0;
};

double simpson(const std::function<double(double)>& f, double a, double m, double b, double fa,
               double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(SimpsonState& st, double a, double m, double b, double fa, double fm,
                     double fb, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = (*st.f)(lm), frm = (*st.f)(rm);
    st.evals += 2;
    const double left = simpson(*st.f, a, lm, m, fa, flm, fm);
    const double right = simpson(*st.f, m, rm, b, fm, frm, fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_step(st, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_step(st, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double rel_tol,
                        long max_evals) {
    SimpsonState st{&f, 0};
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    st.evals = 3;
    const double rough = simpson(f, a, m, b, fa, fm, fb);
    const double tol = std::max(1e-300, rel_tol * std::max(1.0, std::abs(rough)));
    const double result = adaptive_step(st, a, m, b, fa, fm, fb, rough, tol, 48);
    if (st.evals > max_evals)
        throw QuadratureError("fisher_numeric: quadrature did not converge", std::abs(result - rough));
    return result;
}

}  // namespace

FisherResult fisher_numeric(const PdfFamily& family, double lambda, Interval x_domain,
                            double dlambda) {
    if (!(x_domain.hi > x_domain.lo))
        throw std::invalid_argument("fisher_numeric: empty x domain");
    const double d = dlambda > 0.0 ? dlambda : 1e-5 * (1.0 + std::abs(lambda));

    const auto integrand = [&](double x) {
        const double p = family(x, lambda);
        const double dp = (family(x, lambda + d) - family(x, lambda - d)) / (2.0 * d);
        if (p <= 0.0) return 0.0;
        return dp * dp / p;
    };
    const double f = adaptive_simpson(integrand, x_domain.lo, x_domain.hi, 1e-10, 4'000'000);
    if (f < 0.0) throw std::runtime_error("fisher_numeric: negative information");
    return {f, f > 0.0 ? 1.0 / f : 0.0, 1};
}

double phase_crlb_coherent(double n_photons, std::int64_t n_meas) {
    if (!(n_photons > 0.0) || n_meas < 1)
        throw std::invalid_argument("phase_crlb_coherent: need n_photons > 0, n_meas >= 1");
    return 1.0 / std::sqrt(2.0 * n_photons * static_cast<double>(n_meas));
}

double phase_crlb_squeezed(double amplitude, double r, double eta, std::int64_t n_meas) {
    if (!(amplitude > 0.0) || n_meas < 1 || !(eta > 0.0) || eta > 1.0)
        throw std::invalid_argument("phase_crlb_squeezed: invalid arguments");
    const double noise = std::exp(-2.0 * r) + (1.0 - eta) / eta;
    return noise / (4.0 * static_cast<double>(n_meas) * amplitude * amplitude);
}

double optimal_squeezing_cubic(double amplitude, double eta) {
    if (!(amplitude > 0.0) || !(eta > 0.0) || eta > 1.0)
        throw std::invalid_argument("optimal_squeezing: invalid arguments");
    const double q = (1.0 - eta) / eta;
    const double b = 4.0 * amplitude * amplitude + q;
    const auto cubic = [&](double x) { return ((x + b) * x - 1.0) * x - q; };

    double lo = 1e-12, hi = 1.0;
    double flo = cubic(lo);
    if (flo > 0.0) throw std::runtime_error("optimal_squeezing: bracket lost at 0");
    if (cubic(hi) < 0.0) throw std::runtime_error("optimal_squeezing: bracket lost at 1");
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = cubic(mid);
        if (fm <= 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 4; ++i) {  // Newton polish
        const double fx = cubic(x);
        const double dfx = (3.0 * x + 2.0 * b) * x - 1.0;
        if (dfx == 0.0) break;
        const double nx = x - fx / dfx;
        if (nx > 0.0 && nx <= 1.0) x = nx;
    }
    return 1.0 / x;
}

double optimal_squeezing(double amplitude, double eta) {
    if (!(amplitude > 0.0) || !(eta > 0.0) || eta > 1.0)
        throw std::invalid_argument("optimal_squeezing: invalid arguments");
    if (eta == 1.0) {
        const double a2 = amplitude * amplitude;
        return 2.0 * a2 * (1.0 + std::sqrt(1.0 + 1.0 / (4.0 * a2 * a2)));
    }
    return optimal_squeezing_cubic(amplitude, eta);
}

FisherResult onoff_fisher(double eta, double alpha_sq) {
    if (!(eta > 0.0) || eta > 1.0 || !(alpha_sq > 0.0))
        throw std::invalid_argument("onoff_fisher: invalid arguments");
    const double x = eta * alpha_sq;
    // |alpha|^4 e^{-x} / (1 - e^{-x}); -expm1(-x) keeps small-x accuracy.
    const double f = alpha_sq * alpha_sq * std::exp(-x) / (-std::expm1(-x));
    return {f, 1.0 / f, 1};
}

double onoff_fisher_weak_pulse(double eta, double alpha_sq) {
    if (!(eta > 0.0) || eta > 1.0 || !(alpha_sq > 0.0))
        throw std::invalid_argument("onoff_fisher_weak_pulse: invalid arguments");
    return eta * eta / std::expm1(eta * alpha_sq);
}

double propagate_phase_error(double y_mean, double sigma_y_mean, double amplitude) {
    if (!(amplitude > 0.0)) throw std::invalid_argument("propagate_phase_error: amplitude <= 0");
    if (sigma_y_mean < 0.0)
        throw std::invalid_argument("propagate_phase_error: negative sigma");
    const double ratio = y_mean / amplitude;
    if (std::abs(ratio) >= 1.0)
        throw std::domain_error("propagate_phase_error: |y_mean| must be < amplitude");
    return sigma_y_mean / (amplitude * std::sqrt(1.0 - ratio * ratio));
}

}  // namespace qoptml
