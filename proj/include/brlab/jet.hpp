#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace brlab {

/// Truncated Taylor series at a point: c[k] = f^(k)/k!.  Gives machine-exact
/// derivatives of the composed profile functions (the "analytic derivative
/// callbacks" used by the integration-by-parts operator).
class Jet {
public:
    Jet() : c_(1, 0.0) {}
    explicit Jet(int order, double value = 0.0) : c_(size_t(order) + 1, 0.0) { c_[0] = value; }
    static Jet variable(int order, double value) {
        Jet j(order, value);
        if (order >= 1) j.c_[1] = 1.0;
        return j;
    }
    static Jet constant(int order, double value) { return Jet(order, value); }

    int order() const { return int(c_.size()) - 1; }
    double value() const { return c_[0]; }
    double coeff(int k) const { return k <= order() ? c_[size_t(k)] : 0.0; }
    double deriv(int k) const; // f^(k) = k! c[k]

    Jet& operator+=(const Jet& o);
    Jet& operator-=(const Jet& o);
    friend Jet operator+(Jet a, const Jet& b) { a += b; return a; }
    friend Jet operator-(Jet a, const Jet& b) { a -= b; return a; }
    friend Jet operator*(const Jet& a, const Jet& b);
    friend Jet operator/(const Jet& a, const Jet& b);
    friend Jet operator*(double s, Jet a);
    friend Jet operator+(double s, Jet a) { a.c_[0] += s; return a; }
    friend Jet operator-(double s, const Jet& a) { return s + (-1.0) * a; }
    Jet operator-() const { return -1.0 * *this; }

    friend Jet exp(const Jet& a);
    friend Jet log(const Jet& a);
    friend Jet pow(const Jet& a, double e); // a.value() > 0

    /// jet of f' (order drops by one)
    Jet derivative() const;
    /// drop coefficients beyond the given order
    Jet truncated(int order) const;

private:
    std::vector<double> c_;
};

} // namespace brlab
