#include "qoptml/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "qoptml/rng.hpp"

namespace qoptml {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Simplex {
    std::vector<std::vector<double>> x;  // n+1 vertices
    std::vector<double> f;
};

double eval_clamped(const Objective& obj, const Box& box, std::vector<double> pt, long& evals) {
    box.clamp(pt);
    ++evals;
    const double v = obj(pt);
    if (std::isnan(v)) return -kInf;
    return v;
}

// Single Nelder-Mead run (maximization). Returns best vertex and value.
void nelder_mead(const Objective& obj, const Box& box, std::vector<double> start,
                 const MaximizeOptions& opt, std::vector<double>& best_x, double& best_f,
                 bool& converged, long& evals) {
    const std::size_t dim = start.size();
    box.clamp(start);

    Simplex s;
    s.x.assign(dim + 1, start);
    for (std::size_t i = 0; i < dim; ++i) {
        double h = opt.init_step * std::max(1.0, std::abs(start[i]));
        if (std::isfinite(box.lo[i]) && std::isfinite(box.hi[i]))
            h = std::min(h, 0.25 * (box.hi[i] - box.lo[i]));
        s.x[i + 1][i] += h;
    }
    s.f.resize(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) s.f[i] = eval_clamped(obj, box, s.x[i], evals);

    std::vector<std::size_t> order(dim + 1);
    auto sort_simplex = [&] {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return s.f[a] > s.f[b]; });
        Simplex tmp;
        tmp.x.reserve(dim + 1);
        tmp.f.reserve(dim + 1);
        for (std::size_t k : order) {
            tmp.x.push_back(std::move(s.x[k]));
            tmp.f.push_back(s.f[k]);
        }
        s = std::move(tmp);
    };

    converged = false;
    std::vector<double> centroid(dim), xr(dim), xe(dim), xc(dim);
    for (int iter = 0; iter < opt.max_iters; ++iter) {
        sort_simplex();

        const double f_best = s.f[0], f_worst = s.f[dim];
        double size = 0.0;
        for (std::size_t i = 0; i < dim; ++i)
            size = std::max(size, std::abs(s.x[dim][i] - s.x[0][i]) / (1.0 + std::abs(s.x[0][i])));
        if (std::abs(f_best - f_worst) <= opt.tol_f * (1.0 + std::abs(f_best)) && size <= opt.tol_x) {
            converged = true;
            break;
        }

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t v = 0; v < dim; ++v)
            for (std::size_t i = 0; i < dim; ++i) centroid[i] += s.x[v][i] / static_cast<double>(dim);

        for (std::size_t i = 0; i < dim; ++i) xr[i] = centroid[i] + (centroid[i] - s.x[dim][i]);
        const double fr = eval_clamped(obj, box, xr, evals);

        if (fr > s.f[0]) {
            for (std::size_t i = 0; i < dim; ++i) xe[i] = centroid[i] + 2.0 * (xr[i] - centroid[i]);
            const double fe = eval_clamped(obj, box, xe, evals);
            if (fe > fr) {
                s.x[dim] = xe;
                s.f[dim] = fe;
            } else {
                s.x[dim] = xr;
                s.f[dim] = fr;
            }
        } else if (fr > s.f[dim - 1]) {
            s.x[dim] = xr;
            s.f[dim] = fr;
        } else {
            const bool outside = fr > s.f[dim];
            const auto& base = outside ? xr : s.x[dim];
            for (std::size_t i = 0; i < dim; ++i) xc[i] = centroid[i] + 0.5 * (base[i] - centroid[i]);
            const double fc = eval_clamped(obj, box, xc, evals);
            if (fc > (outside ? fr : s.f[dim])) {
                s.x[dim] = xc;
                s.f[dim] = fc;
            } else {
                for (std::size_t v = 1; v <= dim; ++v) {
                    for (std::size_t i = 0; i < dim; ++i)
                        s.x[v][i] = s.x[0][i] + 0.5 * (s.x[v][i] - s.x[0][i]);
                    s.f[v] = eval_clamped(obj, box, s.x[v], evals);
                }
            }
        }
    }

    sort_simplex();
    best_x = s.x[0];
    best_f = s.f[0];
}

}  // namespace

Box Box::unbounded(std::size_t dim) {
    Box b;
    b.lo.assign(dim, -kInf);
    b.hi.assign(dim, kInf);
    return b;
}

bool Box::contains(std::span<const double> x) const {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] < lo[i] || x[i] > hi[i]) return false;
    return true;
}

void Box::clamp(std::span<double> x) const {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::clamp(x[i], lo[i], hi[i]);
}

MaximizeResult maximize(const Objective& objective, std::span<const double> init, const Box& box,
                        const MaximizeOptions& options) {
    const std::size_t dim = init.size();
    if (dim == 0) throw std::invalid_argument("maximize: empty init point");
    if (box.lo.size() != dim || box.hi.size() != dim)
        throw std::invalid_argument("maximize: box dimension mismatch");

    MaximizeResult result;
    result.value = -kInf;

    for (int start = 0; start < std::max(1, options.n_starts); ++start) {
        std::vector<double> x0(init.begin(), init.end());
        if (start > 0) {
            StreamRng jitter(options.jitter_seed, static_cast<std::uint64_t>(start));
            for (std::size_t i = 0; i < dim; ++i) {
                double scale;
                if (std::isfinite(box.lo[i]) && std::isfinite(box.hi[i]))
                    scale = 0.15 * (box.hi[i] - box.lo[i]);
                else
                    scale = 0.5 * std::max(1.0, std::abs(x0[i]));
                x0[i] += scale * jitter.normal();
            }
        }

        std::vector<double> bx;
        double bf = -kInf;
        bool conv = false;
        nelder_mead(objective, box, std::move(x0), options, bx, bf, conv, result.n_evals);
        if (bf > result.value) {
            result.value = bf;
            result.argmax = bx;
            result.converged = conv;
        }
    }

    // Central-difference gradient check at the reported optimum; components
    // pinned at the box boundary are skipped.
    double grad_sq = 0.0;
    std::vector<double> probe(result.argmax);
    for (std::size_t i = 0; i < dim; ++i) {
        const double h = 1e-6 * (1.0 + std::abs(result.argmax[i]));
        if (result.argmax[i] - h < box.lo[i] || result.argmax[i] + h > box.hi[i]) continue;
        probe[i] = result.argmax[i] + h;
        const double fp = objective(probe);
        probe[i] = result.argmax[i] - h;
        const double fm = objective(probe);
        probe[i] = result.argmax[i];
        result.n_evals += 2;
        const double g = (fp - fm) / (2.0 * h);
        grad_sq += g * g;
    }
    result.grad_norm = std::sqrt(grad_sq);
    result.converged =
        result.converged && result.grad_norm <= options.tol_grad * (1.0 + std::abs(result.value));
    return result;
}

}  // namespace qoptml
