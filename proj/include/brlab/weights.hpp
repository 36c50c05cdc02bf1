#pragma once

#include <vector>

#include "brlab/field.hpp"

namespace brlab {

/// Nonnegative weight with estimated Muckenhoupt characteristics.  The sups
/// run over grid-aligned dyadic squares plus their half-side translates, so
/// the estimates are lower bounds of the true characteristics.
struct WeightProfile {
    Grid grid;
    double rho = 2.0;
    std::vector<double> w;
    double a1 = 0;   // [w]_{A_1} = sup <w>_Q / essinf_Q w
    double rh = 0;   // [w]_{RH_rho} = sup <w>_{Q,rho} / <w>_{Q,1}
    double ainf = 0; // [w^rho]_{A_infty}, Fujii-Wilson form
};

/// estimate characteristics for given cell weights
WeightProfile make_weight(const Grid& g, std::vector<double> w, double rho);

/// w(x) = max(|x|, h)^{-a}, 0 <= a < 2
WeightProfile power_weight(double a, const Grid& g, double rho);

/// reverse Holder threshold of the corollary: rho > 4 / (4 - 3 p_lambda)
double rho_threshold(double lambda);

/// sup_t t w({|B_lambda f| > t})^{1/p_lambda} / ||f||_{L^{p_lambda}(w)}
double weighted_weak_quotient(const SampledField& f, double lambda, const WeightProfile& w);

/// weighted weak norm of an already-computed field (shared by the unweighted path)
double weighted_weak_norm(const SampledField& g, double p, std::span<const double> w,
                          double cell_area);
double weighted_lp_norm(const SampledField& g, double p, std::span<const double> w,
                        double cell_area);

} // namespace brlab
