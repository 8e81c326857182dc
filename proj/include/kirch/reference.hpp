#pragma once

#include "kirch/brute.hpp"
#include "kirch/eigen.hpp"
#include "kirch/graph.hpp"
#include "kirch/symmetric_matrix.hpp"

// Serial reference implementations, written independently of the parallel
// kernels: cyclic Jacobi instead of round-robin phases, grounded-matrix
// inversion instead of the spectral pseudoinverse, direct linear solves
// instead of resistance identities. Tests and benchmarks compare the two.
namespace kirch::reference {

EigenDecomposition symmetric_eigen(const SymmetricMatrix& a);

// resistances from the inverse of the Laplacian with vertex 0 grounded
Matrix effective_resistances(const Graph& g);

// h(i, j) from one absorbing linear system per target j
Matrix hitting_times(const Graph& g);

// degree-sum index via commute times h(i,j) + h(j,i)
double additive_via_commute(const Graph& g);

// sum over pairs of (d_i + d_j) * dist(i, j); equals the degree-sum index
// on trees, where resistance is shortest-path distance
long long degree_distance(const Graph& g);

BruteForceResult brute_force_min_additive(int n);

} // namespace kirch::reference
