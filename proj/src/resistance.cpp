#include "kirch/resistance.hpp"

#include <algorithm>
#include <cmath>

#include "kirch/reference.hpp"

namespace kirch {

ResistanceMatrix effective_resistances(const Graph& g) {
    const int n = g.n;
    Matrix m = pseudoinverse(laplacian(g));

    ResistanceMatrix rm;
    rm.n = n;
    rm.r = Matrix(n, n);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rm.r(i, j) = i == j ? 0.0 : m(i, i) + m(j, j) - 2.0 * m(i, j);

    double mx = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) mx = std::max(mx, rm.r(i, j));
    rm.r_max = mx;
    return rm;
}

namespace {

// weighted pair sum with per-row partials; rows fill in parallel but the
// final accumulation is a fixed-order serial pass, so results don't depend
// on the thread count
template <typename W>
double pair_sum(const Graph& g, const ResistanceMatrix& rm, W weight) {
    const int n = g.n;
    std::vector<double> partial(n, 0.0);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = i + 1; j < n; ++j) acc += weight(i, j) * rm.r(i, j);
        partial[i] = acc;
    }
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += partial[i];
    return total;
}

} // namespace

double kirchhoff_index(const Graph& g, const ResistanceMatrix& rm) {
    return pair_sum(g, rm, [](int, int) { return 1.0; });
}

double multiplicative_index(const Graph& g, const ResistanceMatrix& rm) {
    return pair_sum(g, rm, [&](int i, int j) {
        return static_cast<double>(g.degree(i)) * static_cast<double>(g.degree(j));
    });
}

double additive_index(const Graph& g, const ResistanceMatrix& rm) {
    return pair_sum(g, rm, [&](int i, int j) {
        return static_cast<double>(g.degree(i) + g.degree(j));
    });
}

IndexValues exact_indices(const Graph& g, const ResistanceMatrix& rm) {
    IndexValues iv;
    iv.r = kirchhoff_index(g, rm);
    iv.r_star = multiplicative_index(g, rm);
    iv.r_plus = additive_index(g, rm);
    return iv;
}

double multiplicative_index_spectral(const Graph& g, const SpectralData& sd) {
    double acc = 0.0;
    for (size_t k = 1; k < sd.lambda.size(); ++k) acc += 1.0 / (1.0 - sd.lambda[k]);
    return 2.0 * g.m_edges() * acc;
}

HittingTimes hitting_times(const Graph& g, const ResistanceMatrix& rm) {
    const int n = g.n;
    const double two_m = 2.0 * g.m_edges();

    HittingTimes ht;
    ht.h = Matrix(n, n);
    ht.pi.assign(n, 0.0);
    for (int i = 0; i < n; ++i) ht.pi[i] = g.degree(i) / two_m;

#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            double acc = 0.0;
            for (int v = 0; v < n; ++v)
                acc += g.degree(v) * (rm.r(i, j) + rm.r(j, v) - rm.r(i, v));
            ht.h(i, j) = 0.5 * acc;
        }
    return ht;
}

double relative_error(double a, double b) {
    return std::fabs(a - b) / std::max({1.0, std::fabs(a), std::fabs(b)});
}

DecompositionReport verify_decomposition(const Graph& g, double tol) {
    const int n = g.n;
    const double two_m = 2.0 * g.m_edges();

    ResistanceMatrix rm = effective_resistances(g);
    IndexValues iv = exact_indices(g, rm);
    SpectralData sd = transition_spectrum(g);
    Matrix href = reference::hitting_times(g);

    DecompositionReport rep;
    rep.additive_resistance = iv.r_plus;
    rep.multiplicative_resistance = iv.r_star;
    rep.multiplicative_spectral = multiplicative_index_spectral(g, sd);

    double hitting_sum = 0.0;
    for (int j = 0; j < n; ++j) {
        double col = 0.0;
        for (int i = 0; i < n; ++i) col += g.degree(i) / two_m * href(i, j);
        hitting_sum += col;
    }
    rep.additive_spectral = n / two_m * rep.multiplicative_spectral + hitting_sum;

    double commute = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            commute += (g.degree(i) + g.degree(j)) * (href(i, j) + href(j, i));
    rep.additive_commute = commute / two_m;

    rep.max_rel_err = std::max(
        {relative_error(rep.additive_resistance, rep.additive_spectral),
         relative_error(rep.additive_resistance, rep.additive_commute),
         relative_error(rep.additive_spectral, rep.additive_commute),
         relative_error(rep.multiplicative_resistance, rep.multiplicative_spectral)});
    rep.ok = rep.max_rel_err <= tol;
    return rep;
}

LovaszReport verify_lovasz(const Graph& g, double tol) {
    const int n = g.n;
    ResistanceMatrix rm = effective_resistances(g);
    HittingTimes ht = hitting_times(g, rm);
    SpectralData sd = transition_spectrum(g);

    LovaszReport rep;
    for (int j = 0; j < n; ++j) {
        double lhs = 0.0;
        for (int i = 0; i < n; ++i) lhs += ht.pi[i] * ht.h(i, j);

        double rhs = 0.0, mass = 0.0;
        for (int k = 1; k < n; ++k) {
            double c = sd.v(j, k) * sd.v(j, k);
            rhs += c / (1.0 - sd.lambda[k]);
            mass += c;
        }
        rhs /= ht.pi[j];

        rep.max_identity_err = std::max(rep.max_identity_err, relative_error(lhs, rhs));
        rep.max_mass_err = std::max(rep.max_mass_err, std::fabs(mass - (1.0 - ht.pi[j])));
    }
    rep.ok = rep.max_identity_err <= tol && rep.max_mass_err <= tol;
    return rep;
}

} // namespace kirch
