#include "brlab/field.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cstring>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>

#include "brlab/rng.hpp"
#include "json.hpp"

namespace brlab {

SampledField::SampledField(Grid g, std::vector<cplx> data) : grid_(g), data_(std::move(data)) {
    if (std::int64_t(data_.size()) != grid_.cells())
        throw std::invalid_argument("SampledField: data size does not match grid");
}

namespace {

// FFTW plans reused per grid size; FFTW_ESTIMATE keeps planning deterministic.
struct PlanCache {
    std::mutex mu;
    std::map<std::pair<int, int>, fftw_plan> plans;

    fftw_plan get(int n, int sign, fftw_complex* buf) {
        std::lock_guard<std::mutex> lock(mu);
        auto key = std::make_pair(n, sign);
        auto it = plans.find(key);
        if (it != plans.end()) return it->second;
        fftw_plan p = fftw_plan_dft_2d(n, n, buf, buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans.emplace(key, p);
        return p;
    }
};

PlanCache& plan_cache() {
    static PlanCache cache;
    return cache;
}

// rotate both axes by n/2 (fftshift; its own inverse for even n)
void shift_half(const Grid& g, const cplx* src, cplx* dst) {
    int n = g.n, half = n / 2;
    for (int iy = 0; iy < n; ++iy) {
        int sy = (iy + half) % n;
        for (int ix = 0; ix < n; ++ix)
            dst[std::int64_t(iy) * n + ix] = src[std::int64_t(sy) * n + ((ix + half) % n)];
    }
}

} // namespace

SampledField transform(const SampledField& f, Direction dir) {
    const Grid& g = f.grid();
    int n = g.n;
    std::vector<cplx> buf(size_t(g.cells()));
    shift_half(g, f.data().data(), buf.data());
    int sign = dir == Direction::Forward ? FFTW_FORWARD : FFTW_BACKWARD;
    fftw_plan plan = plan_cache().get(n, sign, reinterpret_cast<fftw_complex*>(buf.data()));
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(buf.data()),
                     reinterpret_cast<fftw_complex*>(buf.data()));
    SampledField out(g);
    shift_half(g, buf.data(), out.data().data());
    double scale = dir == Direction::Forward ? g.cell_area() : 1.0 / (g.extent * g.extent);
    for (auto& z : out.data()) z *= scale;
    return out;
}

double lp_norm(const SampledField& f, double p) {
    if (p < 1) throw std::invalid_argument("lp_norm: p must be >= 1");
    double s = 0;
    for (const auto& z : f.data()) s += std::pow(std::abs(z), p);
    return std::pow(s * f.grid().cell_area(), 1.0 / p);
}

double sup_norm(const SampledField& f) {
    double m = 0;
    for (const auto& z : f.data()) m = std::max(m, std::abs(z));
    return m;
}

double weak_lp(const SampledField& f, double p) {
    if (p < 1) throw std::invalid_argument("weak_lp: p must be >= 1");
    std::vector<double> mags(f.data().size());
    for (size_t i = 0; i < mags.size(); ++i) mags[i] = std::abs(f.data()[i]);
    std::sort(mags.begin(), mags.end(), std::greater<double>());
    double h2 = f.grid().cell_area();
    double best = 0;
    for (size_t k = 0; k < mags.size(); ++k) {
        if (mags[k] == 0) break;
        best = std::max(best, std::pow(double(k + 1) * h2, 1.0 / p) * mags[k]);
    }
    return best;
}

namespace {

// sample range of a square along one axis: i in [c - s/2, c + s/2)
std::pair<std::int64_t, std::int64_t> axis_range(double center, double side) {
    double lo = center - side / 2, hi = center + side / 2;
    auto lo_i = std::int64_t(std::ceil(lo));
    auto hi_i = std::int64_t(std::ceil(hi)) - 1; // last index with i < hi
    return {lo_i, hi_i};
}

} // namespace

int Square::lo_index(double center, double side) { return int(axis_range(center, side).first); }
int Square::hi_index(double center, double side) { return int(axis_range(center, side).second); }

double avg(const SampledField& f, const Square& q, double r) {
    if (r < 1) throw std::invalid_argument("avg: r must be >= 1");
    auto [x0, x1] = axis_range(q.cx, q.side);
    auto [y0, y1] = axis_range(q.cy, q.side);
    if (x1 < x0 || y1 < y0) throw std::invalid_argument("avg: square contains no samples");
    const Grid& g = f.grid();
    double s = 0;
    for (std::int64_t iy = y0; iy <= y1; ++iy)
        for (std::int64_t ix = x0; ix <= x1; ++ix)
            s += std::pow(std::abs(f.data()[size_t(g.index_wrapped(int(ix % g.n), int(iy % g.n)))]), r);
    double count = double(x1 - x0 + 1) * double(y1 - y0 + 1);
    return std::pow(s / count, 1.0 / r);
}

cplx mean(const SampledField& f, const DyadicSquare& q) {
    const Grid& g = f.grid();
    cplx s = 0;
    for (int iy = q.y0(); iy < q.y0() + q.side_cells(); ++iy)
        for (int ix = q.x0(); ix < q.x0() + q.side_cells(); ++ix)
            s += f.data()[size_t(g.index_wrapped(ix, iy))];
    return s / double(q.area_cells());
}

// ---- prefix table ----

PrefixTable::PrefixTable(const Grid& g, std::span<const double> cell_values) : n_(g.n) {
    if (std::int64_t(cell_values.size()) != g.cells())
        throw std::invalid_argument("PrefixTable: size mismatch");
    table_.assign(size_t(n_ + 1) * (n_ + 1), 0.0);
    for (int iy = 0; iy < n_; ++iy)
        for (int ix = 0; ix < n_; ++ix) {
            table_[size_t(iy + 1) * (n_ + 1) + (ix + 1)] =
                cell_values[size_t(iy) * n_ + ix] + table_[size_t(iy) * (n_ + 1) + (ix + 1)] +
                table_[size_t(iy + 1) * (n_ + 1) + ix] - table_[size_t(iy) * (n_ + 1) + ix];
        }
}

double PrefixTable::core(int x0, int y0, int x1, int y1) const {
    // sum over [x0, x1) x [y0, y1) with 0 <= x0 <= x1 <= n
    return table_[size_t(y1) * (n_ + 1) + x1] - table_[size_t(y0) * (n_ + 1) + x1] -
           table_[size_t(y1) * (n_ + 1) + x0] + table_[size_t(y0) * (n_ + 1) + x0];
}

double PrefixTable::total() const { return core(0, 0, n_, n_); }

double PrefixTable::sum(std::int64_t x0, std::int64_t y0, std::int64_t w, std::int64_t h) const {
    if (w <= 0 || h <= 0) return 0.0;
    // per-axis wrapped interval = (full copies) + one partial [a, a+r)
    auto split = [&](std::int64_t a, std::int64_t len) {
        std::int64_t q = len / n_, r = len % n_;
        std::int64_t am = ((a % n_) + n_) % n_;
        return std::tuple<std::int64_t, int, int>(q, int(am), int(r));
    };
    auto [qx, ax, rx] = split(x0, w);
    auto [qy, ay, ry] = split(y0, h);

    // partial interval [a, a+r) wrapped into at most two spans
    auto spans = [&](int a, int r) {
        std::vector<std::pair<int, int>> v;
        if (r == 0) return v;
        if (a + r <= n_) v.push_back({a, a + r});
        else {
            v.push_back({a, n_});
            v.push_back({0, a + r - n_});
        }
        return v;
    };
    auto sx = spans(ax, rx);
    auto sy = spans(ay, ry);

    double col_partial = 0; // sum over partial x, all y
    for (auto& [a, b] : sx) col_partial += core(a, 0, b, n_);
    double row_partial = 0; // sum over all x, partial y
    for (auto& [a, b] : sy) row_partial += core(0, a, n_, b);
    double corner = 0;
    for (auto& [xa, xb] : sx)
        for (auto& [ya, yb] : sy) corner += core(xa, ya, xb, yb);

    return double(qx) * double(qy) * total() + double(qx) * row_partial +
           double(qy) * col_partial + corner;
}

double PrefixTable::sum(const Square& q) const {
    auto [x0, x1] = axis_range(q.cx, q.side);
    auto [y0, y1] = axis_range(q.cy, q.side);
    return sum(x0, y0, x1 - x0 + 1, y1 - y0 + 1);
}

std::vector<double> abs_pow_cells(const SampledField& f, double p) {
    std::vector<double> v(f.data().size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = std::pow(std::abs(f.data()[i]), p);
    return v;
}

// ---- generators ----

SampledField gen_indicator(const Grid& g, const DyadicSquare& q, cplx amplitude) {
    SampledField f(g);
    for (int iy = q.y0(); iy < q.y0() + q.side_cells(); ++iy)
        for (int ix = q.x0(); ix < q.x0() + q.side_cells(); ++ix)
            f.at_wrapped(ix, iy) = amplitude;
    return f;
}

SampledField gen_gaussian(const Grid& g, double cx, double cy, double width,
                          double support_radius) {
    SampledField f(g);
    for (int iy = 0; iy < g.n; ++iy)
        for (int ix = 0; ix < g.n; ++ix) {
            double dx = g.coord(ix) - cx, dy = g.coord(iy) - cy;
            double r2 = dx * dx + dy * dy;
            if (r2 <= support_radius * support_radius)
                f.at(ix, iy) = std::exp(-M_PI * r2 / (width * width));
        }
    return f;
}

SampledField gen_knapp(const Grid& g, double radius, double radial_hw, double tangential_hw) {
    // frequency-side plate bump, then one inverse transform
    SampledField m(g);
    auto bump = [](double u) {
        double t = 1.0 - u * u;
        if (t <= 0) return 0.0;
        return std::exp(-1.0 / t);
    };
    for (int ky = 0; ky < g.n; ++ky)
        for (int kx = 0; kx < g.n; ++kx) {
            double xr = g.freq(kx), xt = g.freq(ky);
            m.at(kx, ky) = bump((xr - radius) / radial_hw) * bump(xt / tangential_hw);
        }
    return transform(m, Direction::Inverse);
}

SampledField gen_chirp(const Grid& g, double r0, double r1) {
    SampledField f(g);
    for (int iy = 0; iy < g.n; ++iy)
        for (int ix = 0; ix < g.n; ++ix) {
            double x = g.coord(ix), y = g.coord(iy);
            double r = std::hypot(x, y);
            if (r >= r0 && r <= r1)
                f.at(ix, iy) = std::polar(1.0 / std::sqrt(std::max(r, 1.0)),
                                          2.0 * M_PI * r);
        }
    return f;
}

SampledField gen_random(const Grid& g, std::uint64_t seed, int kmax, int box_side_cells) {
    Rng rng(seed);
    // frequency coefficients drawn on the fixed lattice |k| <= kmax, so the
    // field refines consistently across grid sizes
    std::vector<cplx> coef(size_t(2 * kmax + 1) * (2 * kmax + 1));
    for (auto& c : coef) c = cplx(rng.normal(), rng.normal());
    SampledField f(g);
    double box = box_side_cells * g.spacing();
    for (int iy = 0; iy < g.n; ++iy)
        for (int ix = 0; ix < g.n; ++ix) {
            double x = g.coord(ix), y = g.coord(iy);
            if (std::abs(x) >= box / 2 || std::abs(y) >= box / 2) continue;
            cplx s = 0;
            for (int ky = -kmax; ky <= kmax; ++ky)
                for (int kx = -kmax; kx <= kmax; ++kx) {
                    cplx c = coef[size_t(ky + kmax) * (2 * kmax + 1) + (kx + kmax)];
                    double phase = 2.0 * M_PI * (kx * x + ky * y) / box;
                    s += c * std::polar(1.0, phase);
                }
            f.at(ix, iy) = s / double(2 * kmax + 1);
        }
    return f;
}

// ---- I/O ----

void write_field(const SampledField& f, const std::string& base_path) {
    nlohmann::json j;
    j["N"] = f.grid().n;
    j["L"] = f.grid().extent;
    j["dtype"] = "c128";
    j["layout"] = "row-major";
    std::ofstream meta(base_path + ".json");
    if (!meta) throw std::runtime_error("write_field: cannot open " + base_path + ".json");
    meta << j.dump(2) << "\n";
    std::ofstream bin(base_path + ".bin", std::ios::binary);
    if (!bin) throw std::runtime_error("write_field: cannot open " + base_path + ".bin");
    static_assert(sizeof(cplx) == 16);
    bin.write(reinterpret_cast<const char*>(f.data().data()),
              std::streamsize(f.data().size() * sizeof(cplx)));
}

SampledField read_field(const std::string& base_path) {
    std::ifstream meta(base_path + ".json");
    if (!meta) throw std::runtime_error("read_field: cannot open " + base_path + ".json");
    nlohmann::json j;
    meta >> j;
    Grid g(j.at("N").get<int>(), j.at("L").get<double>());
    if (j.value("dtype", "c128") != std::string("c128") ||
        j.value("layout", "row-major") != std::string("row-major"))
        throw std::runtime_error("read_field: unsupported field format");
    std::ifstream bin(base_path + ".bin", std::ios::binary);
    if (!bin) throw std::runtime_error("read_field: cannot open " + base_path + ".bin");
    std::vector<cplx> data(size_t(g.cells()));
    bin.read(reinterpret_cast<char*>(data.data()), std::streamsize(data.size() * sizeof(cplx)));
    if (bin.gcount() != std::streamsize(data.size() * sizeof(cplx)))
        throw std::runtime_error("read_field: truncated binary payload");
    return SampledField(g, std::move(data));
}

} // namespace brlab
