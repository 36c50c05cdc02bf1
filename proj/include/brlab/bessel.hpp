#pragma once

namespace brlab {

/// J_0 and J_1 for x >= 0: power series up to x = 12, Hankel asymptotic
/// expansion beyond.  Absolute accuracy ~1e-12 of the oscillation envelope.
double bessel_j0(double x);
double bessel_j1(double x);
double bessel_j(int order, double x);

} // namespace brlab
