#include "brlab/symbol.hpp"

#include <cmath>

namespace brlab {

namespace {
double theta_fn(double t) { return t > 0 ? std::exp(-1.0 / t) : 0.0; }
}

double smoothstep(double t) {
    if (t <= 0) return 0.0;
    if (t >= 1) return 1.0;
    double a = theta_fn(t), b = theta_fn(1.0 - t);
    return a / (a + b);
}

double bump_phi(double x) { return smoothstep(2.0 - std::abs(x)); }

double bump_psi(double x) { return bump_phi(x) - bump_phi(2.0 * x); }

double partition_sum(double xi) {
    if (!(xi > 0) || xi > 1)
        throw std::domain_error("partition_sum: xi must lie in (0, 1]");
    int top = int(std::ceil(std::log2(2.0 / xi))) + 1;
    double s = 0;
    for (int j = 0; j <= top; ++j) s += bump_psi(std::ldexp(xi, j));
    return s;
}

double IndexPack::p_of_lambda(double lambda) { return 4.0 / (3.0 + 2.0 * lambda); }

double IndexPack::lambda_of_p(double p) { return 2.0 * (1.0 / p - 0.5) - 0.5; }

IndexPack IndexPack::critical(double lambda, double q) {
    if (!(lambda > 0 && lambda < 0.5))
        throw std::invalid_argument("IndexPack: lambda must lie in (0, 1/2)");
    IndexPack pack;
    pack.lambda = lambda;
    pack.p = p_of_lambda(lambda);
    pack.q = q;
    return pack;
}

namespace {

double positive_power(double base, double lambda) {
    // (x)_+^lambda without NaN at the sphere
    if (base <= 1e-300) return 0.0;
    return std::exp(lambda * std::log(base));
}

} // namespace

double truncated_symbol_closed(double lambda, int j_top, double rho) {
    if (j_top < 0) return 0.0;
    double v = 1.0 - rho * rho;
    if (v <= 0) return 0.0;
    double t = 1.0 - rho;
    return positive_power(v, lambda) * (bump_phi(t) - bump_phi(std::ldexp(t, j_top + 1)));
}

double SymbolSpec::eval_radial(double rho) const {
    switch (piece) {
        case Piece::Identity:
            return 1.0;
        case Piece::Full: {
            double v = 1.0 - rho * rho;
            return positive_power(v, lambda);
        }
        case Piece::Annular: {
            double v = 1.0 - rho * rho;
            if (v <= 0) return 0.0;
            return std::exp2(lambda * j) * positive_power(v, lambda) *
                   bump_psi(std::ldexp(1.0 - rho, j));
        }
        case Piece::Truncated:
            return truncated_symbol_closed(lambda, j_top, rho);
    }
    return 0.0;
}

double SymbolSpec::eval(double xi_x, double xi_y) const {
    return eval_radial(std::hypot(xi_x, xi_y));
}

int max_resolved_annular_j(const Grid& g) {
    // 2^-j >= 4/L
    return int(std::floor(std::log2(g.extent / 4.0)));
}

int reconstruction_j_top(const Grid& g) {
    double tmin = 2.0;
    for (int ky = 0; ky < g.n; ++ky)
        for (int kx = 0; kx < g.n; ++kx) {
            double rho = std::hypot(g.freq(kx), g.freq(ky));
            double t = 1.0 - rho;
            if (t > 0 && t < tmin) tmin = t;
        }
    if (tmin >= 1.0) return 1;
    return int(std::ceil(std::log2(1.0 / tmin))) + 1;
}

SampledField apply(const SymbolSpec& spec, const SampledField& f, const ApplyOptions& opts) {
    const Grid& g = f.grid();
    if (spec.piece == Piece::Annular && opts.check_resolution) {
        int jmax = max_resolved_annular_j(g);
        if (spec.j > jmax)
            throw std::invalid_argument(
                "apply: annulus j=" + std::to_string(spec.j) +
                " is unresolvable on this grid (2^-j >= 4/L requires j <= " +
                std::to_string(jmax) + ")");
    }
    SampledField fhat = transform(f, Direction::Forward);
    for (int ky = 0; ky < g.n; ++ky)
        for (int kx = 0; kx < g.n; ++kx)
            fhat.at(kx, ky) *= spec.eval(g.freq(kx), g.freq(ky));
    return transform(fhat, Direction::Inverse);
}

// ---- rhombus region ----

Rat Rat::from_double(double x) {
    if (!std::isfinite(x)) throw std::domain_error("Rat: non-finite double");
    int exp = 0;
    double m = std::frexp(x, &exp); // x = m 2^exp, |m| in [1/2, 1)
    long long num = (long long)std::ldexp(m, 53);
    exp -= 53;
    __int128 n = num, d = 1;
    if (exp >= 0) {
        if (exp > 62) throw std::overflow_error("Rat: exponent too large");
        n <<= exp;
    } else {
        if (exp < -126) {
            // shed trailing zero bits first
            while (n != 0 && (n & 1) == 0 && exp < 0) { n >>= 1; ++exp; }
            if (exp < -126) throw std::overflow_error("Rat: denominator too large");
        }
        d <<= -exp;
    }
    return reduce128(n, d);
}

RhombusRegion rhombus(const Rat& lambda) {
    if (!(Rat(0) < lambda) || !(lambda < Rat(1, 2)))
        throw std::invalid_argument("rhombus: lambda must lie in (0, 1/2)");
    Rat one(1), four(4);
    Rat inv_p = (Rat(3) + Rat(2) * lambda) / four;  // 1/p_lambda
    Rat inv_pc = one - inv_p;                       // 1/p_lambda'
    Rat mid = (one + Rat(6) * lambda) / four;       // (1+6 lambda)/4
    RhombusRegion r;
    r.lambda = lambda;
    r.vertices = {{{inv_p, inv_pc}, {mid, inv_pc}, {inv_p, mid}, {inv_pc, inv_p}}};
    return r;
}

RhombusRegion rhombus(double lambda) { return rhombus(Rat::from_double(lambda)); }

bool contains(const RhombusRegion& region, const Rat& inv_r, const Rat& inv_s) {
    // cyclic order: v1, v0, v2, v3 is counterclockwise
    const auto& v = region.vertices;
    std::array<std::array<Rat, 2>, 4> poly = {v[1], v[0], v[2], v[3]};
    for (int i = 0; i < 4; ++i) {
        const auto& a = poly[size_t(i)];
        const auto& b = poly[size_t((i + 1) % 4)];
        Rat cross = (b[0] - a[0]) * (inv_s - a[1]) - (b[1] - a[1]) * (inv_r - a[0]);
        if (!(Rat(0) < cross)) return false; // on edge or outside: open region
    }
    return true;
}

bool contains(const RhombusRegion& region, double inv_r, double inv_s) {
    return contains(region, Rat::from_double(inv_r), Rat::from_double(inv_s));
}

} // namespace brlab
