#include "brlab/jet.hpp"

#include <algorithm>

namespace brlab {

namespace {
double factorial(int k) {
    double f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}
} // namespace

double Jet::deriv(int k) const { return coeff(k) * factorial(k); }

Jet& Jet::operator+=(const Jet& o) {
    c_.resize(std::max(c_.size(), o.c_.size()), 0.0);
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

Jet& Jet::operator-=(const Jet& o) {
    c_.resize(std::max(c_.size(), o.c_.size()), 0.0);
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
    int m = std::max(a.order(), b.order());
    Jet out(m);
    for (int k = 0; k <= m; ++k) {
        double s = 0;
        for (int i = std::max(0, k - b.order()); i <= std::min(k, a.order()); ++i)
            s += a.coeff(i) * b.coeff(k - i);
        out.c_[size_t(k)] = s;
    }
    return out;
}

Jet operator/(const Jet& a, const Jet& b) {
    if (b.value() == 0) throw std::domain_error("Jet: division by zero value");
    int m = std::max(a.order(), b.order());
    Jet out(m);
    for (int k = 0; k <= m; ++k) {
        double s = a.coeff(k);
        for (int i = 0; i < k; ++i) s -= out.c_[size_t(i)] * b.coeff(k - i);
        out.c_[size_t(k)] = s / b.value();
    }
    return out;
}

Jet operator*(double s, Jet a) {
    for (auto& c : a.c_) c *= s;
    return a;
}

Jet exp(const Jet& a) {
    Jet out(a.order());
    out.c_[0] = std::exp(a.value());
    for (int k = 1; k <= a.order(); ++k) {
        double s = 0;
        for (int i = 1; i <= k; ++i) s += i * a.coeff(i) * out.c_[size_t(k - i)];
        out.c_[size_t(k)] = s / k;
    }
    return out;
}

Jet log(const Jet& a) {
    if (!(a.value() > 0)) throw std::domain_error("Jet: log of non-positive value");
    Jet out(a.order());
    out.c_[0] = std::log(a.value());
    for (int k = 1; k <= a.order(); ++k) {
        double s = k * a.coeff(k);
        for (int i = 1; i < k; ++i) s -= i * out.c_[size_t(i)] * a.coeff(k - i);
        out.c_[size_t(k)] = s / (k * a.value());
    }
    return out;
}

Jet pow(const Jet& a, double e) { return exp(e * log(a)); }

Jet Jet::derivative() const {
    if (order() == 0) return Jet(0, 0.0);
    Jet out(order() - 1);
    for (int k = 0; k < order(); ++k) out.c_[size_t(k)] = (k + 1) * coeff(k + 1);
    return out;
}

Jet Jet::truncated(int order) const {
    if (order < 0) throw std::invalid_argument("Jet: negative truncation order");
    Jet out(order);
    for (int k = 0; k <= order; ++k) out.c_[size_t(k)] = coeff(k);
    return out;
}

} // namespace brlab
