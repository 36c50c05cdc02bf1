#include "brlab/kernel.hpp"

#include <algorithm>
#include <cmath>

#include "brlab/bessel.hpp"
#include "brlab/symbol.hpp"

namespace brlab {

namespace {

Jet jet_theta(const Jet& t) {
    // exp(-1/t) for t.value() > 0, flat zero otherwise
    if (!(t.value() > 0)) return Jet::constant(t.order(), 0.0);
    return exp(-1.0 * (Jet::constant(t.order(), 1.0) / t));
}

Jet jet_smoothstep(const Jet& t) {
    if (t.value() <= 0) return Jet::constant(t.order(), 0.0);
    if (t.value() >= 1) return Jet::constant(t.order(), 1.0);
    Jet a = jet_theta(t);
    Jet b = jet_theta(1.0 - t);
    return a / (a + b);
}

Jet jet_phi(const Jet& x) {
    Jet ax = x.value() < 0 ? -x : x;
    if (ax.value() <= 1.0) return Jet::constant(x.order(), 1.0);
    if (ax.value() >= 2.0) return Jet::constant(x.order(), 0.0);
    return jet_smoothstep(2.0 - ax);
}

Jet jet_psi(const Jet& x) { return jet_phi(x) - jet_phi(2.0 * x); }

} // namespace

RadialFunction mollifier_bump(double lo, double hi) {
    if (!(hi > lo)) throw std::invalid_argument("mollifier_bump: empty support");
    RadialFunction f;
    f.support_lo = lo;
    f.support_hi = hi;
    f.eval_jet = [lo, hi](const Jet& s) {
        Jet u = (2.0 / (hi - lo)) * (s - Jet::constant(s.order(), 0.5 * (lo + hi)));
        Jet t = 1.0 - u * u;
        if (!(t.value() > 0)) return Jet::constant(s.order(), 0.0);
        return exp(-1.0 * (Jet::constant(s.order(), 1.0) / t));
    };
    return f;
}

RadialFunction annular_symbol_profile(int j, double lambda) {
    RadialFunction f;
    f.support_lo = std::max(0.0, 1.0 - std::ldexp(1.0, -j + 1));
    f.support_hi = 1.0 - std::ldexp(1.0, -j - 1);
    double amp = std::exp2(lambda * j);
    double scale = std::ldexp(1.0, j);
    f.eval_jet = [lambda, amp, scale](const Jet& s) {
        Jet v = 1.0 - s * s;
        if (!(v.value() > 0)) return Jet::constant(s.order(), 0.0);
        Jet ps = jet_psi(scale * (1.0 - s));
        return amp * (pow(v, lambda) * ps);
    };
    return f;
}

double ibp_once(const RadialFunction& chi, double s) { return ibp_apply(chi, 1, s); }

double ibp_apply(const RadialFunction& chi, int n, double s) {
    if (n < 0) throw std::invalid_argument("ibp_apply: order must be >= 0");
    if (chi.support_lo <= 0)
        throw std::invalid_argument("ibp_apply: support touches 0, M^{-1} is singular");
    Jet cur = chi.at(s, 2 * n);
    for (int m = 0; m < n; ++m) {
        Jet d1 = cur.derivative();
        Jet d2 = d1.derivative();
        Jet svar = Jet::variable(d1.order(), s);
        // chi'' + chi'/s, truncated to the order both summands are valid at
        cur = (d2 + d1 / svar).truncated(d2.order());
    }
    return cur.value();
}

double ibp_apply_fd(const std::function<double(double)>& chi, int n, double s, double step) {
    if (n == 0) return chi(s);
    auto prev = [&](double x) { return ibp_apply_fd(chi, n - 1, x, step); };
    double e = step;
    double f2p = prev(s + 2 * e), f1p = prev(s + e), f0 = prev(s), f1m = prev(s - e),
           f2m = prev(s - 2 * e);
    double d1 = (-f2p + 8 * f1p - 8 * f1m + f2m) / (12 * e);
    double d2 = (-f2p + 16 * f1p - 30 * f0 + 16 * f1m - f2m) / (12 * e * e);
    return d2 + d1 / s;
}

double ibp_sup(const RadialFunction& chi, int n, int samples) {
    double best = 0;
    for (int i = 1; i < samples; ++i) {
        double s = chi.support_lo +
                   (chi.support_hi - chi.support_lo) * double(i) / double(samples);
        best = std::max(best, std::abs(ibp_apply(chi, n, s)));
    }
    return best;
}

double radial_kernel_at(int j, double lambda, double u, const KernelOptions& opts) {
    RadialFunction prof = annular_symbol_profile(j, lambda);
    double lo = prof.support_lo, hi = prof.support_hi;
    QuadratureOptions q = opts.quad;
    double width = hi - lo;
    q.max_panel_width = std::min(width / 8.0, opts.oscillation_fraction / std::max(u, 1e-12));
    auto integrand = [&prof, u](double s) {
        return prof(s) * bessel_j0(2.0 * M_PI * u * s) * s;
    };
    return 2.0 * M_PI * integrate(integrand, lo, hi, q).value;
}

RadialProfile radial_kernel(int j, double lambda, std::span<const double> u,
                            const KernelOptions& opts) {
    RadialProfile p;
    p.j = j;
    p.lambda = lambda;
    p.u.assign(u.begin(), u.end());
    p.tau.resize(u.size());
    for (size_t i = 0; i < u.size(); ++i) p.tau[i] = radial_kernel_at(j, lambda, u[i], opts);
    return p;
}

SampledField grid_kernel(int j, double lambda, const Grid& g) {
    // inverse transform of the symbol sampled on the grid = the periodized tau_j;
    // exact (no frequency aliasing) once N >= 2L so the Nyquist disc covers |xi| < 1
    SymbolSpec spec = SymbolSpec::annular(lambda, j);
    SampledField m(g);
    for (int ky = 0; ky < g.n; ++ky)
        for (int kx = 0; kx < g.n; ++kx) m.at(kx, ky) = spec.eval(g.freq(kx), g.freq(ky));
    return transform(m, Direction::Inverse);
}

double fit_log2_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_log2_slope: need matching samples");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    double n = double(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        double lx = std::log2(x[i]), ly = std::log2(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

DecayCertificate decay_certificate(int j, int n, double lambda, const KernelOptions& opts) {
    if (j < 1 || n < 1) throw std::invalid_argument("decay_certificate: j, N must be >= 1");
    DecayCertificate cert;
    cert.j = j;
    cert.n = n;
    cert.lambda = lambda;

    const int samples = 97;
    double ulo = std::ldexp(1.0, j), uhi = std::ldexp(1.0, j + 4);
    cert.u.resize(samples);
    cert.tau.resize(samples);
    for (int i = 0; i < samples; ++i) {
        double t = double(i) / (samples - 1);
        cert.u[size_t(i)] = ulo * std::pow(uhi / ulo, t);
        cert.tau[size_t(i)] = radial_kernel_at(j, lambda, cert.u[size_t(i)], opts);
    }
    double c = 0;
    for (int i = 0; i < samples; ++i) {
        double u = cert.u[size_t(i)];
        c = std::max(c, std::abs(cert.tau[size_t(i)]) *
                            std::pow(std::ldexp(u, -j), 2.0 * n) * std::exp2(1.5 * j));
    }
    cert.constant = c;

    // envelope slope on [2^{j+1}, 2^{j+4}]: bin the |tau| samples there and fit
    // bin maxima so the Bessel zeros do not dominate the fit
    std::vector<double> bx, by;
    const int bins = 12;
    double wlo = std::ldexp(1.0, j + 1);
    std::vector<std::pair<double, double>> window;
    for (int i = 0; i < samples; ++i)
        if (cert.u[size_t(i)] >= wlo)
            window.push_back({cert.u[size_t(i)], std::abs(cert.tau[size_t(i)])});
    size_t per = std::max<size_t>(1, window.size() / bins);
    for (size_t b = 0; b * per < window.size(); ++b) {
        double mx = 0, mu = 0;
        size_t lo = b * per, hi = std::min(window.size(), lo + per);
        for (size_t i = lo; i < hi; ++i) {
            mu += std::log2(window[i].first);
            mx = std::max(mx, window[i].second);
        }
        if (mx > 0) {
            bx.push_back(std::exp2(mu / double(hi - lo)));
            by.push_back(mx);
        }
    }
    cert.envelope_slope = fit_log2_slope(bx, by);
    return cert;
}

} // namespace brlab
