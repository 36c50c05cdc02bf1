#pragma once

#include <functional>
#include <vector>

#include "brlab/field.hpp"
#include "brlab/jet.hpp"
#include "brlab/quadrature.hpp"

namespace brlab {

/// Radial profile on (0, infinity) with Taylor jets available on its support.
struct RadialFunction {
    std::function<Jet(const Jet&)> eval_jet; // jet-in, jet-out
    double support_lo = 0;
    double support_hi = 0;

    double operator()(double s) const { return eval_jet(Jet::constant(0, s)).value(); }
    Jet at(double s, int order) const { return eval_jet(Jet::variable(order, s)); }
};

/// smooth bump supported on (lo, hi), equal to exp(-1/(1-u^2)) in the
/// centered coordinate u
RadialFunction mollifier_bump(double lo, double hi);
/// hat tau_j as a radial function of s = |xi|:
/// 2^{lambda j} (1-s^2)_+^lambda psi(2^j (1-s))
RadialFunction annular_symbol_profile(int j, double lambda);

/// one application of M^{-1} D M D (chi'' + chi'/s) at s, via jets
double ibp_once(const RadialFunction& chi, double s);
/// [M^{-1} D M D]^N chi at s; requires jets of order 2N
double ibp_apply(const RadialFunction& chi, int n, double s);
/// finite-difference fallback: 4th-order central differences with the given
/// step instead of jets
double ibp_apply_fd(const std::function<double(double)>& chi, int n, double s, double step);

/// sup over the support of |[M^{-1} D M D]^N chi| (sampled on a fine grid)
double ibp_sup(const RadialFunction& chi, int n, int samples = 2048);

struct RadialProfile {
    int j = 0;
    double lambda = 0;
    std::vector<double> u;
    std::vector<double> tau;
};

struct KernelOptions {
    QuadratureOptions quad;
    double oscillation_fraction = 1.0 / 16.0; // panel width <= fraction / u
};

/// tau_j(u) = 2 pi int tau_hat_j(s) J_0(2 pi u s) s ds by adaptive
/// Gauss-Legendre with oscillation-limited panels
double radial_kernel_at(int j, double lambda, double u, const KernelOptions& opts = {});
RadialProfile radial_kernel(int j, double lambda, std::span<const double> u,
                            const KernelOptions& opts = {});

/// 2-D spectral kernel: inverse transform of the annular symbol on the grid
/// (the periodization of tau_j); the oracle the quadrature is checked against
SampledField grid_kernel(int j, double lambda, const Grid& g);

struct DecayCertificate {
    int j = 0;
    int n = 0; // the N of the estimate
    double lambda = 0;
    double constant = 0;      // sup over u in [2^j, 2^{j+4}] of |tau| (2^{-j}u)^{2N} 2^{3j/2}
    double envelope_slope = 0; // fitted log2 slope of the |tau| envelope on [2^{j+1}, 2^{j+4}]
    std::vector<double> u;
    std::vector<double> tau;
};

DecayCertificate decay_certificate(int j, int n, double lambda,
                                   const KernelOptions& opts = {});

/// least-squares slope of log2(y) against log2(x)
double fit_log2_slope(std::span<const double> x, std::span<const double> y);

} // namespace brlab
