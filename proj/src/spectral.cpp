#include "kirch/spectral.hpp"

#include <cmath>

#include "kirch/errors.hpp"

namespace kirch {

SymmetricMatrix laplacian(const Graph& g) {
    SymmetricMatrix l(g.n);
    for (int i = 0; i < g.n; ++i) l.set(i, i, static_cast<double>(g.degree(i)));
    for (auto [u, v] : g.edges) l.set(u, v, -1.0);
    return l;
}

Matrix pseudoinverse(const SymmetricMatrix& l) {
    const int n = l.order();
    EigenDecomposition ed = symmetric_eigen(l);

    double lmax = 0.0;
    for (double x : ed.values) lmax = std::max(lmax, std::fabs(x));
    const double cutoff = 1e-9 * std::max(1.0, lmax);

    int zeros = 0;
    std::vector<double> inv(n, 0.0);
    for (int k = 0; k < n; ++k) {
        if (std::fabs(ed.values[k]) <= cutoff) {
            ++zeros;
        } else {
            inv[k] = 1.0 / ed.values[k];
        }
    }
    if (zeros != 1)
        throw numeric_error("laplacian null space has dimension " + std::to_string(zeros) +
                            ", expected 1");

    Matrix m(n, n);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int k = 0; k < n; ++k) acc += inv[k] * ed.vectors(i, k) * ed.vectors(j, k);
            m(i, j) = acc;
        }
    return m;
}

SpectralData transition_spectrum(const Graph& g) {
    const int n = g.n;
    SymmetricMatrix s(n);
    std::vector<double> isq(n);
    for (int i = 0; i < n; ++i) isq[i] = 1.0 / std::sqrt(static_cast<double>(g.degree(i)));
    for (auto [u, v] : g.edges) s.set(u, v, isq[u] * isq[v]);

    EigenDecomposition ed = symmetric_eigen(s);

    SpectralData sd;
    sd.lambda.assign(n, 0.0);
    sd.v = Matrix(n, n);
    for (int k = 0; k < n; ++k) {
        int src = n - 1 - k;
        sd.lambda[k] = ed.values[src];
        for (int i = 0; i < n; ++i) sd.v(i, k) = ed.vectors(i, src);
    }
    if (std::fabs(sd.lambda[0] - 1.0) > 1e-6)
        throw numeric_error("leading transition eigenvalue deviates from 1");

    double sq = 0.0;
    for (double x : sd.lambda) sq += x * x;
    sd.sigma = std::sqrt(sq / n);

    sd.lambda2 = sd.lambda[1];
    if (n > 2 && sd.lambda2 > -1.0 + 1e-12) {
        sd.has_gap_params = true;
        sd.k_param = static_cast<int>(
            std::floor((sd.lambda2 * (n - 1) + 1.0) / (sd.lambda2 + 1.0) + 1e-9));
        sd.theta = sd.lambda2 * (n - sd.k_param - 2) - sd.k_param + 2.0;
    }
    return sd;
}

double sigma(const Graph& g) {
    double acc = 0.0;
    for (auto [u, v] : g.edges)
        acc += 1.0 / (static_cast<double>(g.degree(u)) * static_cast<double>(g.degree(v)));
    return std::sqrt(2.0 * acc / g.n);
}

} // namespace kirch
