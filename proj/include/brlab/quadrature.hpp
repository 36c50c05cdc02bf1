#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace brlab {

struct GaussLegendre {
    std::vector<double> x; // nodes on [-1, 1]
    std::vector<double> w;
};

/// Newton iteration on Legendre polynomials
const GaussLegendre& gauss_legendre(int order);

struct QuadratureOptions {
    double rel_tol = 1e-10;     // per-panel refinement tolerance
    double abs_floor = 1e-300;  // below this panel scale, accept
    long max_panels = 1 << 20;  // total refinement budget
    double max_panel_width = 0; // 0 = no oscillation cap
    int order = 16;
};

struct QuadratureError : std::runtime_error {
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

struct QuadratureResult {
    double value = 0;
    double error_estimate = 0;
    long panels = 0;
};

/// Adaptive Gauss-Legendre on [a, b]: seeds panels no wider than
/// max_panel_width, then bisects until the two-half refinement agrees to
/// rel_tol of the accumulated scale.  Throws QuadratureError with diagnostics
/// when the panel budget runs out.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts = {});

} // namespace brlab
