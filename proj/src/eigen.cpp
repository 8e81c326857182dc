#include "kirch/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>

#include "kirch/errors.hpp"

namespace kirch {

namespace {

struct Rotation {
    int p, q;
    double c, s;
    bool active;
};

// round-robin tournament: slot 0 fixed, slots 1..ns-1 rotate; ns-1 rounds
// cover every unordered pair exactly once, each round's pairs disjoint
int slot_player(int pos, int round, int ns) {
    if (pos == 0) return 0;
    return 1 + (pos - 1 + round) % (ns - 1);
}

} // namespace

EigenDecomposition symmetric_eigen(const SymmetricMatrix& a) {
    const int n = a.order();
    EigenDecomposition out;
    out.values.assign(n, 0.0);
    out.vectors = Matrix(n, n);

    std::vector<double> w(a.data(), a.data() + static_cast<size_t>(n) * n);
    Matrix& v = out.vectors;
    for (int i = 0; i < n; ++i) v(i, i) = 1.0;
    auto at = [&](int i, int j) -> double& { return w[static_cast<size_t>(i) * n + j]; };

    if (n == 1) {
        out.values[0] = at(0, 0);
        return out;
    }

    double amax = 0.0;
    for (double x : w) amax = std::max(amax, std::fabs(x));
    if (amax == 0.0) return out;

    const double skip_tol = amax * 1e-18;
    const double conv_tol = amax * 1e-13;
    const int ns = (n % 2 == 0) ? n : n + 1; // odd order gets a bye slot
    const int npairs = ns / 2;

    std::vector<Rotation> rots(npairs);
    bool converged = false;
    for (int sweep = 0; sweep < 60 && !converged; ++sweep) {
        for (int round = 0; round < ns - 1; ++round) {
            for (int t = 0; t < npairs; ++t) {
                int p = slot_player(t, round, ns);
                int q = slot_player(ns - 1 - t, round, ns);
                if (p > q) std::swap(p, q);
                Rotation& r = rots[t];
                r.p = p;
                r.q = q;
                r.active = q < n;
                if (!r.active) continue;
                double apq = at(p, q);
                if (std::fabs(apq) <= skip_tol) {
                    r.active = false;
                    continue;
                }
                double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                double tt = (theta >= 0.0 ? 1.0 : -1.0) /
                            (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                r.c = 1.0 / std::sqrt(tt * tt + 1.0);
                r.s = tt * r.c;
            }

            // rows p and q belong to one pair only, so pairs never collide
#pragma omp parallel for schedule(static)
            for (int t = 0; t < npairs; ++t) {
                const Rotation& r = rots[t];
                if (!r.active) continue;
                double* rp = &at(r.p, 0);
                double* rq = &at(r.q, 0);
                for (int j = 0; j < n; ++j) {
                    double xp = rp[j], xq = rq[j];
                    rp[j] = r.c * xp - r.s * xq;
                    rq[j] = r.s * xp + r.c * xq;
                }
            }

            // columns p and q likewise; eigenvector columns ride along
#pragma omp parallel for schedule(static)
            for (int t = 0; t < npairs; ++t) {
                const Rotation& r = rots[t];
                if (!r.active) continue;
                for (int i = 0; i < n; ++i) {
                    double xp = at(i, r.p), xq = at(i, r.q);
                    at(i, r.p) = r.c * xp - r.s * xq;
                    at(i, r.q) = r.s * xp + r.c * xq;
                }
                at(r.p, r.q) = 0.0;
                at(r.q, r.p) = 0.0;
                for (int i = 0; i < n; ++i) {
                    double xp = v(i, r.p), xq = v(i, r.q);
                    v(i, r.p) = r.c * xp - r.s * xq;
                    v(i, r.q) = r.s * xp + r.c * xq;
                }
            }
        }

        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                double m = 0.5 * (at(i, j) + at(j, i));
                at(i, j) = m;
                at(j, i) = m;
                off = std::max(off, std::fabs(m));
            }
        converged = off <= conv_tol;
    }
    if (!converged) throw numeric_error("jacobi eigensolver did not converge in 60 sweeps");

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

} // namespace kirch
