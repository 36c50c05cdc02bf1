#include "brlab/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace brlab {

namespace {

GaussLegendre compute_gauss_legendre(int n) {
    // Newton iteration on P_n, cos initial guesses (standard gauleg)
    GaussLegendre gl;
    gl.x.resize(size_t(n));
    gl.w.resize(size_t(n));
    int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int k = 0; k < n; ++k) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k + 1.0) * z * p1 - k * p2) / (k + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        gl.x[size_t(i)] = -z;
        gl.x[size_t(n - 1 - i)] = z;
        double w = 2.0 / ((1.0 - z * z) * pp * pp);
        gl.w[size_t(i)] = w;
        gl.w[size_t(n - 1 - i)] = w;
    }
    return gl;
}

} // namespace

const GaussLegendre& gauss_legendre(int order) {
    static std::mutex mu;
    static std::map<int, GaussLegendre> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_gauss_legendre(order)).first;
    return it->second;
}

namespace {

double panel(const std::function<double(double)>& f, double a, double b,
             const GaussLegendre& gl) {
    double c = 0.5 * (a + b), hw = 0.5 * (b - a);
    double s = 0;
    for (size_t i = 0; i < gl.x.size(); ++i) s += gl.w[i] * f(c + hw * gl.x[i]);
    return s * hw;
}

struct Work {
    double a, b, coarse;
    int depth;
};

} // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts) {
    const GaussLegendre& gl = gauss_legendre(opts.order);
    QuadratureResult res;
    if (!(b > a)) return res;

    long seeds = 1;
    if (opts.max_panel_width > 0)
        seeds = std::max<long>(1, long(std::ceil((b - a) / opts.max_panel_width)));
    if (seeds > opts.max_panels)
        throw QuadratureError("integrate: oscillation cap needs " + std::to_string(seeds) +
                              " panels, budget is " + std::to_string(opts.max_panels));

    std::vector<Work> stack;
    stack.reserve(64);
    double width = (b - a) / double(seeds);
    for (long i = seeds - 1; i >= 0; --i) {
        double lo = a + i * width, hi = i + 1 == seeds ? b : a + (i + 1) * width;
        stack.push_back({lo, hi, panel(f, lo, hi, gl), 0});
        ++res.panels;
    }

    // scale for the relative test: magnitude of the coarse pass
    double scale = 0;
    for (const auto& w : stack) scale += std::abs(w.coarse);
    scale = std::max(scale, opts.abs_floor);

    double total = 0, err = 0;
    while (!stack.empty()) {
        Work w = stack.back();
        stack.pop_back();
        double mid = 0.5 * (w.a + w.b);
        double left = panel(f, w.a, mid, gl);
        double right = panel(f, mid, w.b, gl);
        res.panels += 2;
        if (res.panels > opts.max_panels)
            throw QuadratureError(
                "integrate: panel budget exhausted (" + std::to_string(opts.max_panels) +
                ") on [" + std::to_string(w.a) + ", " + std::to_string(w.b) +
                "] at depth " + std::to_string(w.depth) + "; scale " + std::to_string(scale));
        double fine = left + right;
        double delta = std::abs(fine - w.coarse);
        if (delta <= opts.rel_tol * std::max(scale, std::abs(fine)) || w.depth >= 48) {
            total += fine;
            err += delta;
        } else {
            stack.push_back({w.a, mid, left, w.depth + 1});
            stack.push_back({mid, w.b, right, w.depth + 1});
        }
    }
    res.value = total;
    res.error_estimate = err;
    return res;
}

} // namespace brlab
