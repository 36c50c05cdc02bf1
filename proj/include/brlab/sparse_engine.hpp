#pragma once

#include <map>
#include <vector>

#include "brlab/czd.hpp"
#include "brlab/dyadic.hpp"
#include "brlab/field.hpp"
#include "brlab/symbol.hpp"

namespace brlab {

/// truncation level of T^{lambda,Q}: largest j with 2^j < ell(Q) (physical),
/// -1 when no annular piece fits
int truncation_j_top(const DyadicSquare& q, const Grid& g);

/// the operator T^{lambda_p, Q} applied spectrally (closed-form truncated symbol)
SampledField apply_truncated(const SampledField& f, const DyadicSquare& q,
                             const IndexPack& pack);

/// discrete pairing <u, v> = h^2 sum u conj(v)
cplx pairing(const SampledField& u, const SampledField& v);

struct RecursionNode {
    DyadicSquare sq;
    double local_term = 0; // <f>_{Q,p} <h>_{3Q,q} |Q|
    std::vector<DyadicSquare> stopping; // the CZ bad squares
};

/// one step of the recursive estimate: CZ-decompose f 1_E at level <f>_{E,p}
/// and hand back the stopping children (measure <= |E|/100)
RecursionNode recursive_step(const SampledField& f, const SampledField& h,
                             const DyadicSquare& e, const IndexPack& pack);

struct DominationReport {
    IndexPack pack;
    Grid grid;
    double pairing_abs = 0; // |<B_lambda f, h>|
    double form_value = 0;  // Lambda over the emitted collection (3Q averages)
    double ratio = 0;
    long nodes = 0;
    int max_depth = 0;
    SparseCollection collection;
};

struct EngineOptions {
    int min_pad_factor = 8; // root side >= factor * support diameter
    CZOptions cz;
};

/// full recursion of the theorem's proof: emits the sparse collection with
/// carve-outs E_Q = Q minus the stopping squares (eta = 99/100) and evaluates
/// the sparse form against |<B_lambda f, h>|
DominationReport build_sparse(const SampledField& f, const SampledField& h,
                              const IndexPack& pack, const EngineOptions& opts = {});

struct AuditReport {
    IndexPack pack;
    double benchmark = 0; // <f>_{E,p} <h>_{3E,q} |E|
    double lhs = 0;       // |<T^E f, h>|
    double term_i = 0;
    std::vector<std::pair<int, double>> term_ii; // s -> |<sum_j 2^{-l j} T_j beta_{j-s}, h>|
    double term_ii_total = 0;
    double term_iii = 0;
    std::vector<std::pair<int, double>> term_iv1; // sigma -> off-3Q part
    std::vector<std::pair<int, double>> term_iv2; // sigma -> on-3Q part
    double term_iv1_total = 0;
    double term_iv2_total = 0;
    double iv1_fitted_slope = 0; // log2 slope of nonzero IV1 rows
    long bad_square_count = 0;
};

/// numeric evaluation of the four-term split I + II + III + IV of the
/// recursive lemma at the root square
AuditReport audit_terms(const SampledField& f, const SampledField& h,
                        const DyadicSquare& e, const IndexPack& pack, int sigma_max = 4);

struct SeegerReport {
    double p = 0;
    double lhs = 0;   // || sum_j T_j^{lambda_p} f_j ||_p
    double rhs = 0;   // [ sum_j 2^{p lambda_p j} ||f_j||_p^p ]^{1/p}
    double ratio = 0; // lhs / rhs
};

/// desk-scale check of the vector-valued inequality; f_j indexed from j0
SeegerReport seeger_check(std::span<const SampledField> fj, double p, int j0 = 1);

} // namespace brlab
