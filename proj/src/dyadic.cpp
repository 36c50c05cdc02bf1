#include "brlab/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "brlab/field.hpp"
#include "json.hpp"

namespace brlab {

Square::Square(double cx_, double cy_, double side_) : cx(cx_), cy(cy_), side(side_) {
    if (!(side > 0)) throw std::invalid_argument("Square: side must be positive");
}

Square dilate(const Square& q, double c) {
    if (c < 1.0) throw std::invalid_argument("dilate: factor must be >= 1");
    return Square(q.cx, q.cy, c * q.side);
}

std::array<DyadicSquare, 4> children(const DyadicSquare& q) {
    if (q.level < 1) throw std::invalid_argument("children: level-0 square has no children");
    int l = q.level - 1;
    return {DyadicSquare{l, 2 * q.ax, 2 * q.ay}, DyadicSquare{l, 2 * q.ax + 1, 2 * q.ay},
            DyadicSquare{l, 2 * q.ax, 2 * q.ay + 1}, DyadicSquare{l, 2 * q.ax + 1, 2 * q.ay + 1}};
}

std::vector<std::int64_t> cells_of(const Square& q, const Grid& grid) {
    if (q.side > grid.n + 0.5)
        throw std::invalid_argument("cells_of: square exceeds the torus");
    int x0 = Square::lo_index(q.cx, q.side), x1 = Square::hi_index(q.cx, q.side);
    int y0 = Square::lo_index(q.cy, q.side), y1 = Square::hi_index(q.cy, q.side);
    std::vector<std::int64_t> out;
    out.reserve(size_t(x1 - x0 + 1) * size_t(y1 - y0 + 1));
    for (int iy = y0; iy <= y1; ++iy)
        for (int ix = x0; ix <= x1; ++ix) out.push_back(grid.index_wrapped(ix, iy));
    return out;
}

std::vector<std::int64_t> annulus(const DyadicSquare& q, int k, const Grid& grid) {
    if (k < 2) throw std::invalid_argument("annulus: k must be >= 2");
    double outer_side = std::ldexp(double(q.side_cells()), k);
    if (outer_side > grid.n)
        throw std::invalid_argument("annulus: 2^k Q does not fit inside the root domain");
    Square base = q.to_square();
    Square outer = dilate(base, std::ldexp(1.0, k));
    Square inner = dilate(base, std::ldexp(1.0, k - 1));
    int ox0 = Square::lo_index(outer.cx, outer.side), ox1 = Square::hi_index(outer.cx, outer.side);
    int oy0 = Square::lo_index(outer.cy, outer.side), oy1 = Square::hi_index(outer.cy, outer.side);
    int ix0 = Square::lo_index(inner.cx, inner.side), ix1 = Square::hi_index(inner.cx, inner.side);
    int iy0 = Square::lo_index(inner.cy, inner.side), iy1 = Square::hi_index(inner.cy, inner.side);
    std::vector<std::int64_t> out;
    for (int iy = oy0; iy <= oy1; ++iy)
        for (int ix = ox0; ix <= ox1; ++ix) {
            bool in_inner = ix >= ix0 && ix <= ix1 && iy >= iy0 && iy <= iy1;
            if (!in_inner) out.push_back(grid.index_wrapped(ix, iy));
        }
    return out;
}

SparseReport verify_sparse(const SparseCollection& s) {
    SparseReport rep;
    std::vector<std::uint8_t> owner(size_t(s.grid.cells()), 0);
    std::vector<int> owner_idx(size_t(s.grid.cells()), -1);
    for (size_t e = 0; e < s.entries.size(); ++e) {
        const auto& entry = s.entries[e];
        const auto& q = entry.sq;
        // measure clause, exact integers: den |E_Q| >= num |Q|
        if (__int128(s.eta_den) * entry.carve.size() <
            __int128(s.eta_num) * q.area_cells()) {
            rep.ok = false;
            rep.violations.push_back("entry " + std::to_string(e) + ": |E_Q| = " +
                                     std::to_string(entry.carve.size()) + " < eta |Q| = " +
                                     std::to_string(s.eta_num) + "/" + std::to_string(s.eta_den) +
                                     " * " + std::to_string(q.area_cells()));
            if (rep.violations.size() > 32) return rep;
        }
        for (auto cell : entry.carve) {
            if (cell < 0 || cell >= s.grid.cells()) {
                rep.ok = false;
                rep.violations.push_back("entry " + std::to_string(e) + ": cell out of range");
                break;
            }
            int ix = int(cell % s.grid.n), iy = int(cell / s.grid.n);
            if (!q.contains_cell(ix, iy)) {
                rep.ok = false;
                rep.violations.push_back("entry " + std::to_string(e) +
                                         ": carve-out cell outside Q at (" + std::to_string(ix) +
                                         "," + std::to_string(iy) + ")");
                if (rep.violations.size() > 32) return rep;
                continue;
            }
            if (owner[size_t(cell)]) {
                rep.ok = false;
                rep.violations.push_back("entries " + std::to_string(owner_idx[size_t(cell)]) +
                                         " and " + std::to_string(e) + " overlap at cell (" +
                                         std::to_string(ix) + "," + std::to_string(iy) + ")");
                if (rep.violations.size() > 32) return rep;
            }
            owner[size_t(cell)] = 1;
            owner_idx[size_t(cell)] = int(e);
        }
    }
    return rep;
}

double sparse_form(const SparseCollection& s, const SampledField& f, const SampledField& h,
                   double r, double p_s, FormAverage avg_kind) {
    if (r < 1 || p_s < 1) throw std::invalid_argument("sparse_form: exponents must be >= 1");
    if (f.grid() != s.grid || h.grid() != s.grid)
        throw std::invalid_argument("sparse_form: mismatched grids");
    PrefixTable fr(s.grid, abs_pow_cells(f, r));
    PrefixTable hs(s.grid, abs_pow_cells(h, p_s));
    double hphys = s.grid.spacing();
    double total = 0;
    for (const auto& entry : s.entries) {
        Square q = entry.sq.to_square();
        Square qa = avg_kind == FormAverage::ThreeQ ? dilate(q, 3.0) : q;
        double cells =
            double(Square::hi_index(qa.cx, qa.side) - Square::lo_index(qa.cx, qa.side) + 1) *
            double(Square::hi_index(qa.cy, qa.side) - Square::lo_index(qa.cy, qa.side) + 1);
        double af = std::pow(fr.sum(qa) / cells, 1.0 / r);
        double ah = std::pow(hs.sum(qa) / cells, 1.0 / p_s);
        double area_phys = (entry.sq.side_cells() * hphys) * (entry.sq.side_cells() * hphys);
        total += af * ah * area_phys;
    }
    return total;
}

std::string sparse_to_json(const SparseCollection& s) {
    nlohmann::json j;
    j["N"] = s.grid.n;
    j["L"] = s.grid.extent;
    j["eta"] = {s.eta_num, s.eta_den};
    auto& entries = j["entries"] = nlohmann::json::array();
    for (const auto& e : s.entries) {
        nlohmann::json je;
        je["level"] = e.sq.level;
        je["anchor"] = {e.sq.ax, e.sq.ay};
        auto& cells = je["carve_out_cells"] = nlohmann::json::array();
        for (auto c : e.carve)
            cells.push_back({int(c % s.grid.n), int(c / s.grid.n)});
        entries.push_back(std::move(je));
    }
    return j.dump();
}

SparseCollection sparse_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    SparseCollection s;
    s.grid = Grid(j.at("N").get<int>(), j.at("L").get<double>());
    s.eta_num = j.at("eta").at(0).get<long>();
    s.eta_den = j.at("eta").at(1).get<long>();
    for (const auto& je : j.at("entries")) {
        SparseEntry e;
        e.sq.level = je.at("level").get<int>();
        e.sq.ax = je.at("anchor").at(0).get<int>();
        e.sq.ay = je.at("anchor").at(1).get<int>();
        for (const auto& c : je.at("carve_out_cells"))
            e.carve.push_back(s.grid.index(c.at(0).get<int>(), c.at(1).get<int>()));
        s.entries.push_back(std::move(e));
    }
    return s;
}

} // namespace brlab
