#pragma once

#include <string>
#include <vector>

#include "kirch/graph.hpp"
#include "kirch/resistance.hpp"
#include "kirch/spectral.hpp"

namespace kirch {

// H  = sum over sorted degree pairs of larger/smaller (>= pair count)
// H* = sum over sorted degree pairs of smaller/larger (<= pair count)
struct RatioInvariants {
    double h = 0.0;
    double h_star = 0.0;
};

RatioInvariants ratio_invariants(const Graph& g);

// ---- lower bounds on the degree-sum index ----

// 2(n-1)^2; tight exactly on complete graphs
double lb_universal(const Graph& g);

// n(n-4) + 2m * sum(1/d_i)
double lb_degree_harmonic(const Graph& g);

// harmonic sum replaced by its leaf-count minorant; needs a degree-1 vertex
double lb_leaves(const Graph& g);

// lb_leaves specialized to trees (m = n-1)
double lb_leaves_tree(const Graph& g);

// n(n-2) + 2m * sum(1/d_i) - 4m/(1+delta), delta = min degree
double lb_mindeg_full(const Graph& g);

// 2n(n-1) - 4m/(1+delta); exact rational arithmetic
double lb_mindeg(const Graph& g);

// variant of lb_leaves from the sharper starting inequality
double lb_leaves_v2(const Graph& g);

// variant of lb_leaves_tree from the sharper starting inequality
double lb_leaves_tree_v2(const Graph& g);

// n(n-3) + H + (n(n-1)/2)^2 / H
double lb_major_h(const Graph& g);

// same shape through H*; dominated by lb_major_h, equal iff regular
double lb_major_hstar(const Graph& g);

// n[1/(1+s) + (n-2)^2/(n-1-s)] + (n-1)^2 with s = sigma/sqrt(n-1)
double lb_sigma(const Graph& g);

// true iff lb_mindeg strictly beats lb_universal: (n-1)(1+delta) > 2m
bool condition_17(const Graph& g);

// x + (n-x)^2/(2m-x), increasing on x < 2m
double phi(const Graph& g, double x);

// x * (M + (n-M)^2/(2x-M)) with M the leaf count; increasing, constant if M=0
double psi(const Graph& g, double x);

// ---- upper bounds ----

// 2m(n-1) * max pairwise resistance
double ub_resistance(const Graph& g, const ResistanceMatrix& rm);

// 2(n-1)^2 * diameter; trees only
double ub_tree(const Graph& g);

// (390/101)(n-1)^2; distance-regular graphs of degree above 2
double ub_distance_regular(const Graph& g);

// spectral-gap bound from the second transition eigenvalue
double ub_spectral(const Graph& g, const SpectralData& sd);

// sharper variant valid on bipartite graphs
double ub_spectral_bipartite(const Graph& g, const SpectralData& sd);

// ---- catalog evaluation ----

enum class BoundKind { lower, upper };

// coarse description of what a bound consumes
enum class BoundNeeds { degrees_only, resistances, spectrum, structure };

struct BoundResult {
    std::string id;
    BoundKind kind = BoundKind::lower;
    double value = 0.0;
    bool applicable = false;
    std::string reason; // why not, when applicable is false
    BoundNeeds needs = BoundNeeds::degrees_only;
};

struct BoundCatalog {
    std::vector<BoundResult> entries; // fixed catalog order
    int best_lower_index = -1;        // largest applicable lower bound
    int best_upper_index = -1;        // smallest applicable upper bound
};

// evaluates every bound; inapplicable ones carry a reason instead of a value.
// near-ties (1e-9 relative) resolve to the earliest catalog entry
BoundCatalog evaluate_all(const Graph& g);
BoundCatalog evaluate_all(const Graph& g, const ResistanceMatrix* rm, const SpectralData* sd);

} // namespace kirch
