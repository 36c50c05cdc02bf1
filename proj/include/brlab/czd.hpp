#pragma once

#include <map>
#include <vector>

#include "brlab/field.hpp"

namespace brlab {

struct BadSquare {
    DyadicSquare sq;
    cplx mean = 0; // <f>_Q, so b_Q = (f - mean) 1_Q
};

/// L^p Calderon-Zygmund decomposition of f on E at level <f>_{E,p}:
/// stopping squares are the maximal dyadic Q with <|f|^p>_Q > 100 <|f|^p>_E,
/// which forces |U Q| <= |E|/100 by Chebyshev.  f = good + bad exactly.
struct CZOutput {
    DyadicSquare root;
    double p = 0;
    double level = 0;     // <f>_{E,p}
    double threshold = 0; // 100^{1/p} * level
    SampledField good;
    SampledField bad; // sum of b_Q
    std::vector<BadSquare> bad_squares;

    std::int64_t bad_cells() const;
    SampledField b_of(const SampledField& f, const BadSquare& q) const;
};

struct CZOptions {
    double level_multiplier = 100.0; // threshold^p = multiplier * level^p
};

CZOutput cz_decompose(const SampledField& f, const DyadicSquare& root, double p,
                      const CZOptions& opts = {});

/// beta_t = sum of b_Q over ell(Q) = 2^t (physical side); t = 0 collects all
/// squares of physical side <= 1
std::map<int, SampledField> regroup(const CZOutput& out);
int physical_scale_t(const DyadicSquare& q, const Grid& g);

/// documented constants of the selection rule
double cz_good_sup_constant(double p);   // 4^{1/p} 100^{1/p}
double cz_bad_lp_constant(double p);     // (2 * 4^{1/p} 100^{1/p})^p = 2^p * 400

} // namespace brlab
