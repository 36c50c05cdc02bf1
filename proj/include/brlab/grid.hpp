#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace brlab {

/// Periodic N x N sampling grid for the torus [-L/2, L/2)^2.
/// Samples sit at lattice points x = (i - N/2) h, h = L/N; sample i owns the
/// cell [x_i, x_i + h) of area h^2.  Frequencies live on (1/L) Z^2 with
/// |xi| <= N/(2L).
struct Grid {
    int n = 0;        // samples per axis, power of two
    double extent = 0; // L

    Grid() = default;
    Grid(int n_, double extent_) : n(n_), extent(extent_) {
        if (n <= 0 || (n & (n - 1)) != 0)
            throw std::invalid_argument("Grid: n must be a positive power of two");
        if (!(extent > 0))
            throw std::invalid_argument("Grid: extent must be positive");
    }

    double spacing() const { return extent / n; }
    double cell_area() const { double h = spacing(); return h * h; }
    std::int64_t cells() const { return std::int64_t(n) * n; }
    int log2n() const {
        int l = 0;
        while ((1 << l) < n) ++l;
        return l;
    }

    // coordinate of sample i along one axis
    double coord(int i) const { return (i - n / 2) * spacing(); }
    // frequency of bin k along one axis (shifted layout, k in [0, n))
    double freq(int k) const { return (k - n / 2) / extent; }

    int wrap(int i) const { int m = i % n; return m < 0 ? m + n : m; }
    std::int64_t index(int ix, int iy) const { return std::int64_t(iy) * n + ix; }
    std::int64_t index_wrapped(int ix, int iy) const { return index(wrap(ix), wrap(iy)); }

    bool operator==(const Grid& o) const { return n == o.n && extent == o.extent; }
    bool operator!=(const Grid& o) const { return !(*this == o); }
};

} // namespace brlab
