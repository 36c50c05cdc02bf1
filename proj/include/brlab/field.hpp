#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "brlab/dyadic.hpp"
#include "brlab/grid.hpp"

namespace brlab {

using cplx = std::complex<double>;

enum class Direction { Forward, Inverse };

/// Complex field sampled on a periodic grid.  Forward transform uses the
/// convention F f(xi) = integral f(x) exp(-2 pi i x.xi) dx, realized as the
/// shifted DFT scaled by h^2; the inverse carries 1/L^2.
class SampledField {
public:
    SampledField() = default;
    SampledField(Grid g, cplx fill = 0.0) : grid_(g), data_(size_t(g.cells()), fill) {}
    SampledField(Grid g, std::vector<cplx> data);

    const Grid& grid() const { return grid_; }
    std::span<const cplx> data() const { return data_; }
    std::span<cplx> data() { return data_; }
    cplx& at(int ix, int iy) { return data_[size_t(grid_.index(ix, iy))]; }
    const cplx& at(int ix, int iy) const { return data_[size_t(grid_.index(ix, iy))]; }
    cplx& at_wrapped(int ix, int iy) { return data_[size_t(grid_.index_wrapped(ix, iy))]; }
    const cplx& at_wrapped(int ix, int iy) const {
        return data_[size_t(grid_.index_wrapped(ix, iy))];
    }

private:
    Grid grid_;
    std::vector<cplx> data_;
};

SampledField transform(const SampledField& f, Direction dir);

double lp_norm(const SampledField& f, double p);
double sup_norm(const SampledField& f);
/// sup_t t |{|f| > t}|^{1/p}, evaluated by the sorted-samples formula
/// max_k (k h^2)^{1/p} |f|_(k).
double weak_lp(const SampledField& f, double p);

/// (mean over the square's cells of |f|^r)^{1/r}, periodic extension with
/// multiplicity when the square exceeds the torus.
double avg(const SampledField& f, const Square& q, double r);
/// plain (complex) mean over a dyadic square
cplx mean(const SampledField& f, const DyadicSquare& q);

struct NormReport {
    double p = 0;
    double value = 0;
    enum class Kind { Strong, Weak } kind = Kind::Strong;
};

/// 2-D prefix-sum table over nonnegative cell values; rectangle queries are
/// O(1) and handle periodic wrap with multiplicity.
class PrefixTable {
public:
    PrefixTable() = default;
    PrefixTable(const Grid& g, std::span<const double> cell_values);

    // sum over samples ix in [x0, x0+w), iy in [y0, y0+h), wrapped, counted
    // with multiplicity
    double sum(std::int64_t x0, std::int64_t y0, std::int64_t w, std::int64_t h) const;
    double sum(const Square& q) const;
    double total() const;

private:
    double core(int x0, int y0, int x1, int y1) const; // unwrapped, clipped box sums
    int n_ = 0;
    std::vector<double> table_;
};

std::vector<double> abs_pow_cells(const SampledField& f, double p);

// ---- field generators (the `gen` families) ----

SampledField gen_indicator(const Grid& g, const DyadicSquare& q, cplx amplitude = 1.0);
/// Gaussian exp(-pi |x-c|^2 / w^2) truncated outside radius `support_radius`
SampledField gen_gaussian(const Grid& g, double cx, double cy, double width,
                          double support_radius);
/// Knapp-type anisotropic bump: frequency-side plate of radial half-width
/// `radial_hw` and tangential half-width `tangential_hw`, centered at radius
/// `radius` along direction (1,0).
SampledField gen_knapp(const Grid& g, double radius, double radial_hw, double tangential_hw);
/// e^{2 pi i |x|} chirp restricted to the annulus r0 <= |x| <= r1
SampledField gen_chirp(const Grid& g, double r0, double r1);
/// Seeded band-limited random field (trig polynomial, |k| <= kmax) restricted
/// to the centered box of the given side (cells); refinable across grids.
SampledField gen_random(const Grid& g, std::uint64_t seed, int kmax, int box_side_cells);

// ---- field file I/O: <base>.json sidecar + <base>.bin raw complex128 ----

void write_field(const SampledField& f, const std::string& base_path);
SampledField read_field(const std::string& base_path);

} // namespace brlab
