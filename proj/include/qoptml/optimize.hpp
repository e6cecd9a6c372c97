#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace qoptml {

/// Box domain for the maximizer; use +-infinity for unbounded coordinates.
struct Box {
    std::vector<double> lo;
    std::vector<double> hi;

    static Box unbounded(std::size_t dim);
    bool contains(std::span<const double> x) const;
    void clamp(std::span<double> x) const;
};

struct MaximizeOptions {
    int max_iters = 600;         // Nelder-Mead iterations per start
    double tol_f = 1e-11;        // relative simplex value spread
    double tol_x = 1e-9;         // relative simplex size
    double tol_grad = 1e-5;      // relative gradient norm for the final check
    int n_starts = 8;            // multi-start count (start 0 = given init)
    double init_step = 0.1;      // initial simplex edge scale
    std::uint64_t jitter_seed = 0x51ed2701u;  // deterministic multi-start jitter
};

struct MaximizeResult {
    std::vector<double> argmax;
    double value = 0.0;
    bool converged = false;
    double grad_norm = 0.0;
    long n_evals = 0;
};

using Objective = std::function<double(std::span<const double>)>;

/// Derivative-free maximization: multi-start Nelder-Mead simplex over a box
/// domain, followed by a central-difference gradient check at the best point.
/// Deterministic for fixed arguments. On non-convergence the best point found
/// is still returned with converged = false.
MaximizeResult maximize(const Objective& objective, std::span<const double> init, const Box& box,
                        const MaximizeOptions& options = {});

}  // namespace qoptml
