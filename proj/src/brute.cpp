#include "kirch/brute.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "kirch/errors.hpp"

namespace kirch {

namespace {

// degree-sum index of the labeled graph encoded by mask (bit k = k-th pair
// in lexicographic order); -1 when the graph is disconnected
double eval_mask(int n, std::uint64_t mask) {
    unsigned adj[8] = {0};
    int deg[8] = {0};
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (mask & (1ull << bit)) {
                adj[i] |= 1u << j;
                adj[j] |= 1u << i;
                ++deg[i];
                ++deg[j];
            }

    unsigned visited = 1u, frontier = 1u;
    while (frontier) {
        unsigned next = 0;
        for (int i = 0; i < n; ++i)
            if (frontier & (1u << i)) next |= adj[i];
        frontier = next & ~visited;
        visited |= next;
    }
    if (visited != (1u << n) - 1u) return -1.0;

    // invert the Laplacian with vertex 0 grounded; Gauss-Jordan on a pair of
    // stack matrices, partial pivoting
    const int m = n - 1;
    double a[49], inv[49];
    for (int i = 0; i < m * m; ++i) {
        a[i] = 0.0;
        inv[i] = 0.0;
    }
    for (int i = 0; i < m; ++i) {
        a[i * m + i] = deg[i + 1];
        inv[i * m + i] = 1.0;
        for (int j = i + 1; j < m; ++j)
            if (adj[i + 1] & (1u << (j + 1))) {
                a[i * m + j] = -1.0;
                a[j * m + i] = -1.0;
            }
    }
    for (int col = 0; col < m; ++col) {
        int piv = col;
        for (int r = col + 1; r < m; ++r)
            if (std::fabs(a[r * m + col]) > std::fabs(a[piv * m + col])) piv = r;
        if (piv != col)
            for (int j = 0; j < m; ++j) {
                double t = a[piv * m + j];
                a[piv * m + j] = a[col * m + j];
                a[col * m + j] = t;
                t = inv[piv * m + j];
                inv[piv * m + j] = inv[col * m + j];
                inv[col * m + j] = t;
            }
        double d = a[col * m + col];
        for (int j = 0; j < m; ++j) {
            a[col * m + j] /= d;
            inv[col * m + j] /= d;
        }
        for (int r = 0; r < m; ++r) {
            if (r == col) continue;
            double f = a[r * m + col];
            if (f == 0.0) continue;
            for (int j = 0; j < m; ++j) {
                a[r * m + j] -= f * a[col * m + j];
                inv[r * m + j] -= f * inv[col * m + j];
            }
        }
    }

    double acc = 0.0;
    for (int j = 1; j < n; ++j) acc += (deg[0] + deg[j]) * inv[(j - 1) * m + (j - 1)];
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            acc += (deg[i] + deg[j]) *
                   (inv[(i - 1) * m + (i - 1)] + inv[(j - 1) * m + (j - 1)] -
                    2.0 * inv[(i - 1) * m + (j - 1)]);
    return acc;
}

struct ChunkResult {
    long long connected = 0;
    double min_value = -1.0;
    std::uint64_t argmin = 0;
    long long attain = 0;
};

} // namespace

BruteForceResult brute_force_min_additive(int n) {
    if (n < 2 || n > 7) throw infeasible_error("brute force supports 2 <= n <= 7");
    const int bits = n * (n - 1) / 2;
    const std::uint64_t total = 1ull << bits;
    const std::uint64_t chunk = 4096;
    const int nchunks = static_cast<int>((total + chunk - 1) / chunk);

    std::vector<ChunkResult> parts(nchunks);
#pragma omp parallel for schedule(static)
    for (int c = 0; c < nchunks; ++c) {
        ChunkResult& cr = parts[c];
        std::uint64_t lo = static_cast<std::uint64_t>(c) * chunk;
        std::uint64_t hi = std::min(total, lo + chunk);
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            double val = eval_mask(n, mask);
            if (val < 0.0) continue;
            ++cr.connected;
            if (cr.min_value < 0.0 || val < cr.min_value) {
                cr.min_value = val;
                cr.argmin = mask;
            }
        }
    }

    BruteForceResult res;
    res.n = n;
    res.min_value = -1.0;
    for (const ChunkResult& cr : parts) {
        res.connected_count += cr.connected;
        if (cr.min_value < 0.0) continue;
        if (res.min_value < 0.0 || cr.min_value < res.min_value) {
            res.min_value = cr.min_value;
            res.argmin_edge_mask = cr.argmin;
        }
    }

#pragma omp parallel for schedule(static)
    for (int c = 0; c < nchunks; ++c) {
        ChunkResult& cr = parts[c];
        std::uint64_t lo = static_cast<std::uint64_t>(c) * chunk;
        std::uint64_t hi = std::min(total, lo + chunk);
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            double val = eval_mask(n, mask);
            if (val >= 0.0 && val <= res.min_value + 1e-6) ++cr.attain;
        }
    }
    for (const ChunkResult& cr : parts) res.min_attain_count += cr.attain;
    return res;
}

} // namespace kirch
