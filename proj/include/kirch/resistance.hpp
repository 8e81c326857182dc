#pragma once

#include <vector>

#include "kirch/graph.hpp"
#include "kirch/spectral.hpp"
#include "kirch/symmetric_matrix.hpp"

namespace kirch {

struct ResistanceMatrix {
    int n = 0;
    Matrix r;             // effective resistance between every vertex pair
    double r_max = 0.0;   // largest pairwise resistance
};

struct IndexValues {
    double r = 0.0;       // sum of resistances over pairs
    double r_star = 0.0;  // degree-product weighting
    double r_plus = 0.0;  // degree-sum weighting
};

struct HittingTimes {
    Matrix h;               // h(i, j) = expected random-walk steps from i to j
    std::vector<double> pi; // stationary distribution d_i / (2m)
};

// r_ij = M_ii + M_jj - 2 M_ij with M the Laplacian pseudoinverse
ResistanceMatrix effective_resistances(const Graph& g);

double kirchhoff_index(const Graph& g, const ResistanceMatrix& rm);
double multiplicative_index(const Graph& g, const ResistanceMatrix& rm);
double additive_index(const Graph& g, const ResistanceMatrix& rm);
IndexValues exact_indices(const Graph& g, const ResistanceMatrix& rm);

// 2m * sum over non-leading transition eigenvalues of 1/(1 - lambda)
double multiplicative_index_spectral(const Graph& g, const SpectralData& sd);

// h(i, j) = (1/2) * sum_v d_v (r_ij + r_jv - r_iv)
HittingTimes hitting_times(const Graph& g, const ResistanceMatrix& rm);

// |a-b| / max(1, |a|, |b|)
double relative_error(double a, double b);

// the degree-sum index computed three ways that share no linear algebra:
// resistance sums, a spectral term plus stationary-weighted hitting sums,
// and commute times from independently solved hitting systems
struct DecompositionReport {
    double additive_resistance = 0.0;
    double additive_spectral = 0.0;
    double additive_commute = 0.0;
    double multiplicative_resistance = 0.0;
    double multiplicative_spectral = 0.0;
    double max_rel_err = 0.0;
    bool ok = false;
};

DecompositionReport verify_decomposition(const Graph& g, double tol = 1e-8);

// per-target check that the stationary-weighted hitting sum matches its
// spectral closed form, plus the eigenvector mass balance it relies on
struct LovaszReport {
    double max_identity_err = 0.0;
    double max_mass_err = 0.0;
    bool ok = false;
};

LovaszReport verify_lovasz(const Graph& g, double tol = 1e-7);

} // namespace kirch
