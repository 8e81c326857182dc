#pragma once

#include <vector>

#include "kirch/eigen.hpp"
#include "kirch/graph.hpp"
#include "kirch/symmetric_matrix.hpp"

namespace kirch {

// combinatorial Laplacian D - A
SymmetricMatrix laplacian(const Graph& g);

// Moore-Penrose pseudoinverse of a connected-graph Laplacian; requires the
// spectrum to contain exactly one (numerically) zero eigenvalue
Matrix pseudoinverse(const SymmetricMatrix& l);

// eigendata of the symmetrized random-walk matrix D^{-1/2} A D^{-1/2}
struct SpectralData {
    std::vector<double> lambda; // descending; lambda[0] == 1 for connected graphs
    double lambda2 = 0.0;       // second largest
    double sigma = 0.0;         // sqrt(sum lambda_i^2 / n)
    int k_param = 0;            // floor((lambda2*(n-1)+1)/(lambda2+1))
    double theta = 0.0;         // lambda2*(n-k-2) - k + 2
    bool has_gap_params = false; // false when lambda2 <= -1 (only K_2)
    Matrix v;                   // columns aligned with lambda
};

SpectralData transition_spectrum(const Graph& g);

// sqrt((2/n) * sum over edges of 1/(d_u d_v)); pure degree/edge computation
double sigma(const Graph& g);

} // namespace kirch
