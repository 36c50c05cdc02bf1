#include "brlab/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace brlab {

namespace {

constexpr double kSeriesCut = 12.0;

double j_series(int nu, double x) {
    // sum_k (-1)^k (x/2)^{2k+nu} / (k! (k+nu)!)
    double half = 0.5 * x;
    double term = nu == 0 ? 1.0 : half; // k = 0 term
    double sum = term;
    double q = half * half;
    for (int k = 1; k <= 64; ++k) {
        term *= -q / (double(k) * double(k + nu));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum) + 1e-300) break;
    }
    return sum;
}

// Hankel asymptotic expansion: J_nu(x) ~ sqrt(2/(pi x)) [P cos(chi) - Q sin(chi)],
// chi = x - (2 nu + 1) pi/4
double j_asymptotic(int nu, double x) {
    double mu = 4.0 * nu * nu;
    double p = 1.0, q = 0.0;
    double term = 1.0;
    double ex = 8.0 * x;
    // a_k = prod_{m=1..k} (mu - (2m-1)^2) / (k! 8^k); alternate into P (even k)
    // and Q (odd k), stopping at the smallest term of the divergent series
    double prev = 1.0;
    for (int k = 1; k <= 40; ++k) {
        term *= (mu - double(2 * k - 1) * double(2 * k - 1)) / (double(k) * ex);
        if (std::abs(term) > prev) break;
        prev = std::abs(term);
        if (k % 2 == 1) q += (k % 4 == 1 ? term : -term);
        else p += (k % 4 == 0 ? term : -term);
        if (prev < 1e-18) break;
    }
    double chi = x - (2.0 * nu + 1.0) * M_PI / 4.0;
    return std::sqrt(2.0 / (M_PI * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

} // namespace

double bessel_j0(double x) {
    if (x < 0) throw std::domain_error("bessel_j0: x must be >= 0");
    return x <= kSeriesCut ? j_series(0, x) : j_asymptotic(0, x);
}

double bessel_j1(double x) {
    if (x < 0) throw std::domain_error("bessel_j1: x must be >= 0");
    return x <= kSeriesCut ? j_series(1, x) : j_asymptotic(1, x);
}

double bessel_j(int order, double x) {
    if (order == 0) return bessel_j0(x);
    if (order == 1) return bessel_j1(x);
    throw std::invalid_argument("bessel_j: only orders 0 and 1 are implemented");
}

} // namespace brlab
