#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "brlab/field.hpp"

namespace brlab {

struct GrowthTable {
    double p = 0;
    std::vector<int> j;
    std::vector<double> value; // lower-bound estimates of ||T_j||_{p->p} (or ||tau_j||_1)
    double slope = 0;          // fitted log2 slope against j
};

/// ||tau_j||_{L^1} per j via the grid kernel on L = 16 * 2^j, N = 2L
GrowthTable kernel_l1_growth(std::span<const int> js, double lambda);

enum class ProbeFamily { Knapp, RadialChirp, Random };

struct ProbeOptions {
    std::uint64_t seed = 7;
    int random_draws = 4;
};

/// max over the family of ||T_j^{lambda_p} f||_p / ||f||_p.  The Knapp family
/// is the multiscale set of tangent plates (dims 2^{-m} x 2^{-m/2}, m = 0..j,
/// centered on the unit circle) plus pure tangent waves at the grid
/// frequencies nearest the symbol's radial argmax.
double norm_probe(int j, double p, ProbeFamily family, const ProbeOptions& opts = {});

GrowthTable probe_growth(std::span<const int> js, double p, ProbeFamily family,
                         const ProbeOptions& opts = {});

/// sup over the annulus of the T_j^{lambda_p} symbol (1-D scan)
double symbol_sup(int j, double lambda);

} // namespace brlab
