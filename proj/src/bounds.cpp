#include "kirch/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "kirch/errors.hpp"

namespace kirch {

RatioInvariants ratio_invariants(const Graph& g) {
    std::vector<int> d = degree_sequence(g).degrees;
    std::sort(d.begin(), d.end());
    RatioInvariants ri;
    for (size_t i = 0; i < d.size(); ++i)
        for (size_t j = i + 1; j < d.size(); ++j) {
            ri.h += static_cast<double>(d[j]) / d[i];
            ri.h_star += static_cast<double>(d[i]) / d[j];
        }
    return ri;
}

double lb_universal(const Graph& g) {
    long long n = g.n;
    return static_cast<double>(2 * (n - 1) * (n - 1));
}

double lb_degree_harmonic(const Graph& g) {
    double n = g.n;
    return n * (n - 4.0) + 2.0 * g.m_edges() * degree_sequence(g).harmonic_sum;
}

namespace {

// shared core of the leaf-count bounds: M + (n-M)^2/(2m-M)
double leaf_minorant(const Graph& g, const char* id) {
    DegreeSequence ds = degree_sequence(g);
    int leaves = ds.m_leaves;
    if (leaves < 1) throw infeasible_error(std::string(id) + " needs a degree-1 vertex");
    long long denom = 2ll * g.m_edges() - leaves;
    if (denom <= 0) throw infeasible_error(std::string(id) + " needs 2m > leaf count");
    double nm = g.n - leaves;
    return leaves + nm * nm / denom;
}

void require_tree(const Graph& g, const char* id) {
    if (!is_tree(g)) throw infeasible_error(std::string(id) + " applies to trees only");
    if (g.n <= 2) throw infeasible_error(std::string(id) + " needs n > 2");
    if (degree_sequence(g).m_leaves < 2)
        throw infeasible_error(std::string(id) + " needs two degree-1 vertices");
}

} // namespace

double lb_leaves(const Graph& g) {
    double n = g.n;
    return n * (n - 4.0) + 2.0 * g.m_edges() * leaf_minorant(g, "lb_leaves");
}

double lb_leaves_tree(const Graph& g) {
    require_tree(g, "lb_leaves_tree");
    double n = g.n;
    return n * (n - 4.0) + 2.0 * (n - 1.0) * leaf_minorant(g, "lb_leaves_tree");
}

double lb_mindeg_full(const Graph& g) {
    if (g.n <= 2) throw infeasible_error("lb_mindeg_full needs n > 2");
    DegreeSequence ds = degree_sequence(g);
    double n = g.n;
    double m = g.m_edges();
    return n * (n - 2.0) + 2.0 * m * ds.harmonic_sum - 4.0 * m / (1.0 + ds.min_degree);
}

double lb_mindeg(const Graph& g) {
    long long n = g.n;
    long long num = 4ll * g.m_edges();
    long long den = 1ll + degree_sequence(g).min_degree;
    return static_cast<double>(2 * n * (n - 1)) - static_cast<double>(num) / den;
}

double lb_leaves_v2(const Graph& g) {
    double n = g.n;
    double m = g.m_edges();
    return n * (n - 2.0) + 2.0 * m * leaf_minorant(g, "lb_leaves_v2") - 2.0 * m;
}

double lb_leaves_tree_v2(const Graph& g) {
    require_tree(g, "lb_leaves_tree_v2");
    double n = g.n;
    return n * (n - 2.0) + 2.0 * (n - 1.0) * leaf_minorant(g, "lb_leaves_tree_v2") -
           2.0 * (n - 1.0);
}

namespace {

double major_bound(const Graph& g, double h) {
    double n = g.n;
    double pairs = n * (n - 1.0) / 2.0;
    return n * (n - 3.0) + h + pairs * pairs / h;
}

} // namespace

double lb_major_h(const Graph& g) { return major_bound(g, ratio_invariants(g).h); }

double lb_major_hstar(const Graph& g) { return major_bound(g, ratio_invariants(g).h_star); }

double lb_sigma(const Graph& g) {
    if (g.n <= 2) throw infeasible_error("lb_sigma degenerates at n = 2");
    double n = g.n;
    double s = sigma(g) / std::sqrt(n - 1.0);
    if (s >= n - 1.0) throw infeasible_error("lb_sigma needs s < n - 1");
    double nm2 = n - 2.0;
    return n * (1.0 / (1.0 + s) + nm2 * nm2 / (n - 1.0 - s)) + (n - 1.0) * (n - 1.0);
}

bool condition_17(const Graph& g) {
    long long lhs = static_cast<long long>(g.n - 1) * (1ll + degree_sequence(g).min_degree);
    return lhs > 2ll * g.m_edges();
}

double phi(const Graph& g, double x) {
    double m2 = 2.0 * g.m_edges();
    if (x >= m2) throw infeasible_error("phi needs x < 2m");
    double n = g.n;
    return x + (n - x) * (n - x) / (m2 - x);
}

double psi(const Graph& g, double x) {
    int leaves = degree_sequence(g).m_leaves;
    if (2.0 * x <= leaves) throw infeasible_error("psi needs 2x > leaf count");
    double nm = g.n - leaves;
    return x * (leaves + nm * nm / (2.0 * x - leaves));
}

double ub_resistance(const Graph& g, const ResistanceMatrix& rm) {
    return 2.0 * g.m_edges() * (g.n - 1.0) * rm.r_max;
}

double ub_tree(const Graph& g) {
    if (!is_tree(g)) throw infeasible_error("ub_tree applies to trees only");
    long long n = g.n;
    return static_cast<double>(2 * (n - 1) * (n - 1) * diameter(g));
}

double ub_distance_regular(const Graph& g) {
    if (!is_distance_regular(g))
        throw infeasible_error("ub_distance_regular applies to distance-regular graphs only");
    if (g.degree(0) <= 2)
        throw infeasible_error("ub_distance_regular needs vertex degree above 2");
    long long n = g.n;
    return 390.0 * static_cast<double>((n - 1) * (n - 1)) / 101.0;
}

namespace {

double spectral_core(const Graph& g, const SpectralData& sd, bool bipartite_variant) {
    if (!sd.has_gap_params)
        throw infeasible_error("spectral bound needs n > 2 and second eigenvalue above -1");
    if (sd.theta <= 0.0) throw numeric_error("spectral bound parameter theta not positive");
    double n = g.n;
    double gap = 1.0 - sd.lambda2;
    double k = sd.k_param;
    double tail = (2.0 * g.m_edges() * degree_sequence(g).harmonic_sum - n) / gap;
    if (bipartite_variant)
        return n * (0.5 + (n - k - 3.0) / gap + k / 2.0 + 1.0 / sd.theta) + tail;
    return n * ((n - k - 2.0) / gap + k / 2.0 + 1.0 / sd.theta) + tail;
}

} // namespace

double ub_spectral(const Graph& g, const SpectralData& sd) { return spectral_core(g, sd, false); }

double ub_spectral_bipartite(const Graph& g, const SpectralData& sd) {
    if (!is_bipartite(g))
        throw infeasible_error("ub_spectral_bipartite applies to bipartite graphs only");
    return spectral_core(g, sd, true);
}

namespace {

void add_entry(BoundCatalog& cat, const char* id, BoundKind kind, BoundNeeds needs,
               const std::function<double()>& eval) {
    BoundResult br;
    br.id = id;
    br.kind = kind;
    br.needs = needs;
    try {
        br.value = eval();
        br.applicable = true;
    } catch (const infeasible_error& e) {
        br.applicable = false;
        br.reason = e.what();
    }
    cat.entries.push_back(std::move(br));
}

} // namespace

BoundCatalog evaluate_all(const Graph& g, const ResistanceMatrix* rm, const SpectralData* sd) {
    ResistanceMatrix local_rm;
    SpectralData local_sd;
    if (!rm) {
        local_rm = effective_resistances(g);
        rm = &local_rm;
    }
    if (!sd) {
        local_sd = transition_spectrum(g);
        sd = &local_sd;
    }

    BoundCatalog cat;
    auto L = BoundKind::lower;
    auto U = BoundKind::upper;
    add_entry(cat, "LB-3", L, BoundNeeds::degrees_only, [&] { return lb_universal(g); });
    add_entry(cat, "LB-6", L, BoundNeeds::degrees_only, [&] { return lb_degree_harmonic(g); });
    add_entry(cat, "LB-8", L, BoundNeeds::degrees_only, [&] { return lb_leaves(g); });
    add_entry(cat, "LB-10", L, BoundNeeds::structure, [&] { return lb_leaves_tree(g); });
    add_entry(cat, "LB-11", L, BoundNeeds::degrees_only, [&] { return lb_mindeg_full(g); });
    add_entry(cat, "LB-14", L, BoundNeeds::degrees_only, [&] { return lb_mindeg(g); });
    add_entry(cat, "LB-15", L, BoundNeeds::degrees_only, [&] { return lb_leaves_v2(g); });
    add_entry(cat, "LB-16", L, BoundNeeds::structure, [&] { return lb_leaves_tree_v2(g); });
    add_entry(cat, "LB-19", L, BoundNeeds::degrees_only, [&] { return lb_major_h(g); });
    add_entry(cat, "LB-22", L, BoundNeeds::degrees_only, [&] { return lb_major_hstar(g); });
    add_entry(cat, "LB-24", L, BoundNeeds::degrees_only, [&] { return lb_sigma(g); });
    add_entry(cat, "UB-25", U, BoundNeeds::resistances, [&] { return ub_resistance(g, *rm); });
    add_entry(cat, "UB-26", U, BoundNeeds::structure, [&] { return ub_tree(g); });
    add_entry(cat, "UB-DR", U, BoundNeeds::structure, [&] { return ub_distance_regular(g); });
    add_entry(cat, "UB-29", U, BoundNeeds::spectrum, [&] { return ub_spectral(g, *sd); });
    add_entry(cat, "UB-30", U, BoundNeeds::spectrum,
              [&] { return ub_spectral_bipartite(g, *sd); });

    auto margin = [](double v) { return 1e-9 * std::max(1.0, std::fabs(v)); };
    for (size_t i = 0; i < cat.entries.size(); ++i) {
        const BoundResult& br = cat.entries[i];
        if (!br.applicable) continue;
        if (br.kind == BoundKind::lower) {
            if (cat.best_lower_index < 0 ||
                br.value > cat.entries[cat.best_lower_index].value +
                               margin(cat.entries[cat.best_lower_index].value))
                cat.best_lower_index = static_cast<int>(i);
        } else {
            if (cat.best_upper_index < 0 ||
                br.value < cat.entries[cat.best_upper_index].value -
                               margin(cat.entries[cat.best_upper_index].value))
                cat.best_upper_index = static_cast<int>(i);
        }
    }
    return cat;
}

BoundCatalog evaluate_all(const Graph& g) { return evaluate_all(g, nullptr, nullptr); }

} // namespace kirch
