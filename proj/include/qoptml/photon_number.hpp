#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qoptml {

/// Thrown when a quadrature fails to reach its target accuracy; carries the
/// achieved error estimate.
class QuadratureError : public std::runtime_error {
  public:
    QuadratureError(const std::string& what, double achieved_error)
        : std::runtime_error(what), achieved_error_(achieved_error) {}
    double achieved_error() const { return achieved_error_; }

  private:
    double achieved_error_;
};

/// Photon-number probability <n|rho|n> of a squeezed thermal state, from the
/// phase integral with C(phi) = (n_th + 1/2)(e^{-2r} sin^2 phi + e^{2r} cos^2 phi) + 1/2.
/// Evaluated by a uniform trapezoid rule on [0, 2pi], node count doubled until
/// successive estimates differ by less than 1e-10.
double photon_number_prob(double n_th, double r, int n);

/// Distribution p_0 .. p_{n_cut} where n_cut is chosen so the tail above it is
/// bounded by tail_bound.
std::vector<double> photon_number_distribution(double n_th, double r, double tail_bound = 1e-8);

/// Smallest cutoff with photon-number tail below tail_bound.
int photon_number_cutoff(double n_th, double r, double tail_bound = 1e-8);

}  // namespace qoptml
