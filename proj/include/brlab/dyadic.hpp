#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "brlab/grid.hpp"

namespace brlab {

class SampledField;

/// Axis-aligned square in grid cell units: cell i (per axis) occupies
/// [i, i+1), so a square of side m anchored at integer a covers samples
/// a..a+m-1.  Dilations keep the center and scale the side; membership of a
/// sample is decided by the half-open box [c - s/2, c + s/2) per axis.
struct Square {
    double cx = 0, cy = 0; // center, cell units
    double side = 0;       // side, cell units (> 0)

    Square() = default;
    Square(double cx_, double cy_, double side_);

    double area_cells() const { return side * side; }
    // sample range [lo, hi) along one axis (unwrapped indices)
    static int lo_index(double center, double side);
    static int hi_index(double center, double side);
};

Square dilate(const Square& q, double c);

/// Dyadic square: side 2^level cells, lower-left corner at anchor * 2^level.
struct DyadicSquare {
    int level = 0;
    int ax = 0, ay = 0;

    int side_cells() const { return 1 << level; }
    std::int64_t area_cells() const { return std::int64_t(side_cells()) * side_cells(); }
    int x0() const { return ax << level; }
    int y0() const { return ay << level; }
    Square to_square() const {
        double m = side_cells();
        return Square(x0() + m / 2, y0() + m / 2, m);
    }
    bool contains(const DyadicSquare& o) const {
        if (o.level > level) return false;
        int d = level - o.level;
        return (o.ax >> d) == ax && (o.ay >> d) == ay;
    }
    bool contains_cell(int ix, int iy) const {
        return ix >= x0() && ix < x0() + side_cells() && iy >= y0() && iy < y0() + side_cells();
    }
    bool operator==(const DyadicSquare& o) const {
        return level == o.level && ax == o.ax && ay == o.ay;
    }
};

std::array<DyadicSquare, 4> children(const DyadicSquare& q);

/// Cells of (2^k)Q \ (2^{k-1})Q, wrapped periodically; requires k >= 2 and
/// 2^k * side <= n so the wrapped cells stay distinct.
std::vector<std::int64_t> annulus(const DyadicSquare& q, int k, const Grid& grid);

/// Wrapped cells of an arbitrary square (set semantics; side must fit in the grid).
std::vector<std::int64_t> cells_of(const Square& q, const Grid& grid);

struct SparseEntry {
    DyadicSquare sq;
    std::vector<std::int64_t> carve; // E_Q as flattened wrapped cell indices
};

/// Squares with pairwise disjoint carve-outs E_Q, |E_Q| >= eta |Q|.
/// eta is kept as a rational so the measure clause is checked in exact
/// integer arithmetic.
struct SparseCollection {
    Grid grid;
    long eta_num = 99, eta_den = 100;
    std::vector<SparseEntry> entries;

    double eta() const { return double(eta_num) / double(eta_den); }
};

struct SparseReport {
    bool ok = true;
    std::vector<std::string> violations;
};

SparseReport verify_sparse(const SparseCollection& s);

enum class FormAverage { Q, ThreeQ };

/// sum over S of <f>_{Q,r} <h>_{Q,s} |Q| with |Q| the physical area; the
/// averages widen to 3Q when avg == ThreeQ (the shape the recursion's final
/// bound takes).
double sparse_form(const SparseCollection& s, const SampledField& f, const SampledField& h,
                   double r, double p_s, FormAverage avg = FormAverage::ThreeQ);

std::string sparse_to_json(const SparseCollection& s);
SparseCollection sparse_from_json(const std::string& text);

} // namespace brlab
