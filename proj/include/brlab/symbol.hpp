#pragma once

#include <array>
#include <optional>
#include <string>

#include "brlab/field.hpp"
#include "brlab/rational.hpp"

namespace brlab {

// smooth partition machinery: theta(t) = exp(-1/t) 1_{t>0},
// s(t) = theta(t)/(theta(t)+theta(1-t)), phi(x) = s(2-|x|),
// psi(x) = phi(x) - phi(2x), psi_j(x) = psi(2^j x)
double smoothstep(double t);
double bump_phi(double x);
double bump_psi(double x);

/// sum_{j>=0} psi(2^j xi) on (0, 1]; finitely many (at most two) nonzero terms
double partition_sum(double xi);

/// Exponent bookkeeping at the critical index: p_lambda = 4/(3+2 lambda),
/// lambda_p = 2(1/p - 1/2) - 1/2, dual q range 4 < q < p_lambda'.
struct IndexPack {
    double lambda = 0;
    double p = 0; // p_lambda
    double q = 0;

    static double p_of_lambda(double lambda);
    static double lambda_of_p(double p);
    static IndexPack critical(double lambda, double q);

    double p_conj() const { return p / (p - 1.0); }
    bool q_in_sparse_range() const { return q > 4.0 && q < p_conj(); }
};

enum class Piece { Full, Annular, Truncated, Identity };

/// Which multiplier a spectral application uses: the full (1-|xi|^2)_+^lambda,
/// an annular slice 2^{lambda j}(1-|xi|^2)_+^lambda psi_j(1-|xi|), the
/// truncation sum_{j=0..j_top} 2^{-lambda j} T_j, or the identity (test mode).
struct SymbolSpec {
    double lambda = 0.25;
    Piece piece = Piece::Full;
    int j = 0;     // Annular
    int j_top = 0; // Truncated: includes j = 0..j_top (empty when j_top < 0)

    static SymbolSpec full(double lambda) { return {lambda, Piece::Full, 0, 0}; }
    static SymbolSpec annular(double lambda, int j) { return {lambda, Piece::Annular, j, 0}; }
    static SymbolSpec truncated(double lambda, int j_top) {
        return {lambda, Piece::Truncated, 0, j_top};
    }
    static SymbolSpec identity() { return {0.0, Piece::Identity, 0, 0}; }

    double eval_radial(double rho) const;
    double eval(double xi_x, double xi_y) const;
};

/// truncated symbol by the telescoped closed form
/// (1-rho^2)_+^lambda [phi(1-rho) - phi(2^{j_top+1}(1-rho))]
double truncated_symbol_closed(double lambda, int j_top, double rho);

struct ApplyOptions {
    bool check_resolution = true;
};

/// inverse( symbol * forward(f) ); Annular pieces require 2^{-j} >= 4/L when
/// the resolution check is on.
SampledField apply(const SymbolSpec& spec, const SampledField& f,
                   const ApplyOptions& opts = {});

int max_resolved_annular_j(const Grid& g);
/// smallest J such that sum_{j<=J} psi_j(1-|xi|) == 1 at every grid frequency
/// with |xi| < 1 (so the reconstruction terminates exactly)
int reconstruction_j_top(const Grid& g);

/// Open rhombus of sparse exponent pairs (1/r, 1/s); vertices kept as exact
/// rationals.
struct RhombusRegion {
    Rat lambda;
    std::array<std::array<Rat, 2>, 4> vertices; // (1/p,1/p'), ((1+6l)/4,1/p'), (1/p,(1+6l)/4), (1/p',1/p)
};

RhombusRegion rhombus(const Rat& lambda);
RhombusRegion rhombus(double lambda);
/// open-region membership of (1/r, 1/s), exact
bool contains(const RhombusRegion& region, const Rat& inv_r, const Rat& inv_s);
bool contains(const RhombusRegion& region, double inv_r, double inv_s);

} // namespace brlab
