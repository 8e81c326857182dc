#include "kirch/reference.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <queue>
#include <vector>

#include "kirch/errors.hpp"

namespace kirch::reference {

namespace {

// Gauss-Jordan inverse with partial pivoting, row-major m x m
std::vector<double> dense_inverse(int m, std::vector<double> a) {
    std::vector<double> inv(static_cast<size_t>(m) * m, 0.0);
    for (int i = 0; i < m; ++i) inv[static_cast<size_t>(i) * m + i] = 1.0;
    for (int col = 0; col < m; ++col) {
        int piv = col;
        for (int r = col + 1; r < m; ++r)
            if (std::fabs(a[static_cast<size_t>(r) * m + col]) >
                std::fabs(a[static_cast<size_t>(piv) * m + col]))
                piv = r;
        if (std::fabs(a[static_cast<size_t>(piv) * m + col]) < 1e-14)
            throw numeric_error("singular matrix in reference inverse");
        if (piv != col)
            for (int j = 0; j < m; ++j) {
                std::swap(a[static_cast<size_t>(piv) * m + j], a[static_cast<size_t>(col) * m + j]);
                std::swap(inv[static_cast<size_t>(piv) * m + j],
                          inv[static_cast<size_t>(col) * m + j]);
            }
        double d = a[static_cast<size_t>(col) * m + col];
        for (int j = 0; j < m; ++j) {
            a[static_cast<size_t>(col) * m + j] /= d;
            inv[static_cast<size_t>(col) * m + j] /= d;
        }
        for (int r = 0; r < m; ++r) {
            if (r == col) continue;
            double f = a[static_cast<size_t>(r) * m + col];
            if (f == 0.0) continue;
            for (int j = 0; j < m; ++j) {
                a[static_cast<size_t>(r) * m + j] -= f * a[static_cast<size_t>(col) * m + j];
                inv[static_cast<size_t>(r) * m + j] -= f * inv[static_cast<size_t>(col) * m + j];
            }
        }
    }
    return inv;
}

// solve a x = b by Gaussian elimination with partial pivoting
std::vector<double> dense_solve(int m, std::vector<double> a, std::vector<double> b) {
    for (int col = 0; col < m; ++col) {
        int piv = col;
        for (int r = col + 1; r < m; ++r)
            if (std::fabs(a[static_cast<size_t>(r) * m + col]) >
                std::fabs(a[static_cast<size_t>(piv) * m + col]))
                piv = r;
        if (std::fabs(a[static_cast<size_t>(piv) * m + col]) < 1e-14)
            throw numeric_error("singular system in reference solve");
        if (piv != col) {
            for (int j = col; j < m; ++j)
                std::swap(a[static_cast<size_t>(piv) * m + j], a[static_cast<size_t>(col) * m + j]);
            std::swap(b[piv], b[col]);
        }
        for (int r = col + 1; r < m; ++r) {
            double f = a[static_cast<size_t>(r) * m + col] / a[static_cast<size_t>(col) * m + col];
            if (f == 0.0) continue;
            for (int j = col; j < m; ++j)
                a[static_cast<size_t>(r) * m + j] -= f * a[static_cast<size_t>(col) * m + j];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(m, 0.0);
    for (int r = m - 1; r >= 0; --r) {
        double acc = b[r];
        for (int j = r + 1; j < m; ++j) acc -= a[static_cast<size_t>(r) * m + j] * x[j];
        x[r] = acc / a[static_cast<size_t>(r) * m + r];
    }
    return x;
}

} // namespace

EigenDecomposition symmetric_eigen(const SymmetricMatrix& a) {
    const int n = a.order();
    std::vector<double> w(a.data(), a.data() + static_cast<size_t>(n) * n);
    auto at = [&](int i, int j) -> double& { return w[static_cast<size_t>(i) * n + j]; };

    EigenDecomposition out;
    out.values.assign(n, 0.0);
    out.vectors = Matrix(n, n);
    Matrix& v = out.vectors;
    for (int i = 0; i < n; ++i) v(i, i) = 1.0;

    double fro = 0.0;
    for (double x : w) fro += x * x;
    fro = std::sqrt(fro);
    if (fro == 0.0 || n == 1) {
        for (int i = 0; i < n; ++i) out.values[i] = at(i, i);
        return out;
    }

    bool converged = false;
    for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        if (std::sqrt(2.0 * off) <= 1e-12 * fro) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (std::fabs(apq) <= 1e-300) continue;
                double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);

                at(p, p) -= t * apq;
                at(q, q) += t * apq;
                at(p, q) = 0.0;
                at(q, p) = 0.0;
                for (int j = 0; j < n; ++j) {
                    if (j == p || j == q) continue;
                    double ajp = at(j, p), ajq = at(j, q);
                    at(j, p) = ajp - s * (ajq + tau * ajp);
                    at(p, j) = at(j, p);
                    at(j, q) = ajq + s * (ajp - tau * ajq);
                    at(q, j) = at(j, q);
                }
                for (int i = 0; i < n; ++i) {
                    double vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip - s * viq;
                    v(i, q) = s * vip + c * viq;
                }
            }
    }
    if (!converged) throw numeric_error("reference jacobi did not converge in 100 sweeps");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        double dx = at(x, x), dy = at(y, y);
        if (dx != dy) return dx < dy;
        return x < y;
    });
    Matrix sorted(n, n);
    for (int k = 0; k < n; ++k) {
        int src = order[k];
        out.values[k] = at(src, src);
        double sign = 1.0;
        for (int i = 0; i < n; ++i)
            if (std::fabs(v(i, src)) > 1e-9) {
                sign = v(i, src) > 0.0 ? 1.0 : -1.0;
                break;
            }
        for (int i = 0; i < n; ++i) sorted(i, k) = sign * v(i, src);
    }
    out.vectors = std::move(sorted);
    return out;
}

Matrix effective_resistances(const Graph& g) {
    const int n = g.n;
    const int m = n - 1;
    std::vector<double> grounded(static_cast<size_t>(m) * m, 0.0);
    for (int i = 1; i < n; ++i)
        grounded[static_cast<size_t>(i - 1) * m + (i - 1)] = static_cast<double>(g.degree(i));
    for (auto [u, v] : g.edges)
        if (u >= 1) {
            grounded[static_cast<size_t>(u - 1) * m + (v - 1)] = -1.0;
            grounded[static_cast<size_t>(v - 1) * m + (u - 1)] = -1.0;
        }
    std::vector<double> inv = dense_inverse(m, std::move(grounded));
    auto mi = [&](int i, int j) { return inv[static_cast<size_t>(i - 1) * m + (j - 1)]; };

    Matrix r(n, n);
    for (int j = 1; j < n; ++j) {
        r(0, j) = mi(j, j);
        r(j, 0) = mi(j, j);
    }
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double val = mi(i, i) + mi(j, j) - 2.0 * mi(i, j);
            r(i, j) = val;
            r(j, i) = val;
        }
    return r;
}

Matrix hitting_times(const Graph& g) {
    const int n = g.n;
    Matrix h(n, n);
    for (int target = 0; target < n; ++target) {
        std::vector<int> idx(n, -1);
        int m = 0;
        for (int u = 0; u < n; ++u)
            if (u != target) idx[u] = m++;

        std::vector<double> a(static_cast<size_t>(m) * m, 0.0);
        std::vector<double> b(m, 1.0);
        for (int u = 0; u < n; ++u) {
            if (u == target) continue;
            int ru = idx[u];
            a[static_cast<size_t>(ru) * m + ru] = 1.0;
            double p = 1.0 / g.degree(u);
            for (int w : g.adj[u])
                if (w != target) a[static_cast<size_t>(ru) * m + idx[w]] -= p;
        }
        std::vector<double> x = dense_solve(m, std::move(a), std::move(b));
        for (int u = 0; u < n; ++u)
            if (u != target) h(u, target) = x[idx[u]];
    }
    return h;
}

double additive_via_commute(const Graph& g) {
    Matrix h = hitting_times(g);
    double acc = 0.0;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            acc += (g.degree(i) + g.degree(j)) * (h(i, j) + h(j, i));
    return acc / (2.0 * g.m_edges());
}

long long degree_distance(const Graph& g) {
    const int n = g.n;
    long long total = 0;
    std::vector<int> dist(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.adj[u])
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
        }
        for (int j = s + 1; j < n; ++j)
            total += static_cast<long long>(g.degree(s) + g.degree(j)) * dist[j];
    }
    return total;
}

namespace {

bool mask_connected(int n, const unsigned* adjbits) {
    unsigned visited = 1u;
    unsigned frontier = 1u;
    while (frontier) {
        unsigned next = 0;
        for (int i = 0; i < n; ++i)
            if (frontier & (1u << i)) next |= adjbits[i];
        frontier = next & ~visited;
        visited |= next;
    }
    return visited == (1u << n) - 1u;
}

double additive_of_mask(int n, std::uint64_t mask) {
    unsigned adjbits[8] = {0};
    int deg[8] = {0};
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (mask & (1ull << bit)) {
                adjbits[i] |= 1u << j;
                adjbits[j] |= 1u << i;
                ++deg[i];
                ++deg[j];
            }
    if (!mask_connected(n, adjbits)) return -1.0;

    const int m = n - 1;
    std::vector<double> grounded(static_cast<size_t>(m) * m, 0.0);
    for (int i = 1; i < n; ++i) {
        grounded[static_cast<size_t>(i - 1) * m + (i - 1)] = deg[i];
        for (int j = i + 1; j < n; ++j)
            if (adjbits[i] & (1u << j)) {
                grounded[static_cast<size_t>(i - 1) * m + (j - 1)] = -1.0;
                grounded[static_cast<size_t>(j - 1) * m + (i - 1)] = -1.0;
            }
    }
    std::vector<double> inv = dense_inverse(m, std::move(grounded));
    auto mi = [&](int i, int j) { return inv[static_cast<size_t>(i - 1) * m + (j - 1)]; };

    double acc = 0.0;
    for (int j = 1; j < n; ++j) acc += (deg[0] + deg[j]) * mi(j, j);
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            acc += (deg[i] + deg[j]) * (mi(i, i) + mi(j, j) - 2.0 * mi(i, j));
    return acc;
}

} // namespace

BruteForceResult brute_force_min_additive(int n) {
    if (n < 2 || n > 7) throw infeasible_error("brute force supports 2 <= n <= 7");
    const int bits = n * (n - 1) / 2;
    const std::uint64_t total = 1ull << bits;

    BruteForceResult res;
    res.n = n;
    res.min_value = -1.0;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        double val = additive_of_mask(n, mask);
        if (val < 0.0) continue;
        ++res.connected_count;
        if (res.min_value < 0.0 || val < res.min_value) {
            res.min_value = val;
            res.argmin_edge_mask = mask;
        }
    }
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        double val = additive_of_mask(n, mask);
        if (val >= 0.0 && val <= res.min_value + 1e-6) ++res.min_attain_count;
    }
    return res;
}

} // namespace kirch::reference
