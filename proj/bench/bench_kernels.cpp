// timing harness: parallel kernels against their serial reference twins
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>

#include <omp.h>

#include "kirch/brute.hpp"
#include "kirch/eigen.hpp"
#include "kirch/graph.hpp"
#include "kirch/reference.hpp"
#include "kirch/resistance.hpp"

using namespace kirch;
using clk = std::chrono::steady_clock;

namespace {

double seconds(clk::time_point a, clk::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

SymmetricMatrix random_symmetric(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    SymmetricMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) a.set(i, j, dist(rng));
    return a;
}

Graph random_connected(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::set<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace(static_cast<int>(rng() % v), v);
    for (int t = 0; t < 4 * n; ++t) {
        int u = static_cast<int>(rng() % n);
        int v = static_cast<int>(rng() % n);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        edges.emplace(u, v);
    }
    return Graph::build(n, {edges.begin(), edges.end()});
}

void row(const char* name, double t_par, double t_ser, double max_diff) {
    std::printf("%-24s parallel %8.4fs   serial %8.4fs   speedup %5.2fx   max|diff| %.3e\n",
                name, t_par, t_ser, t_ser / t_par, max_diff);
}

} // namespace

int main() {
    std::printf("threads: %d\n\n", omp_get_max_threads());

    {
        SymmetricMatrix a = random_symmetric(120, 99);
        auto t0 = clk::now();
        auto fast = symmetric_eigen(a);
        auto t1 = clk::now();
        auto ref = reference::symmetric_eigen(a);
        auto t2 = clk::now();
        double diff = 0.0;
        for (size_t k = 0; k < fast.values.size(); ++k)
            diff = std::max(diff, std::fabs(fast.values[k] - ref.values[k]));
        row("eigen n=120", seconds(t0, t1), seconds(t1, t2), diff);
    }

    {
        Graph g = random_connected(150, 7);
        auto t0 = clk::now();
        auto rm = effective_resistances(g);
        auto t1 = clk::now();
        auto ref = reference::effective_resistances(g);
        auto t2 = clk::now();
        double diff = 0.0;
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j)
                diff = std::max(diff, std::fabs(rm.r(i, j) - ref(i, j)));
        row("resistances n=150", seconds(t0, t1), seconds(t1, t2), diff);
    }

    {
        Graph g = random_connected(100, 13);
        auto rm = effective_resistances(g);
        auto t0 = clk::now();
        auto ht = hitting_times(g, rm);
        auto t1 = clk::now();
        auto ref = reference::hitting_times(g);
        auto t2 = clk::now();
        double diff = 0.0;
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j)
                diff = std::max(diff, std::fabs(ht.h(i, j) - ref(i, j)));
        row("hitting times n=100", seconds(t0, t1), seconds(t1, t2), diff);
    }

    {
        auto t0 = clk::now();
        auto fast = brute_force_min_additive(6);
        auto t1 = clk::now();
        auto ref = reference::brute_force_min_additive(6);
        auto t2 = clk::now();
        double diff = std::fabs(fast.min_value - ref.min_value);
        row("exhaustive scan n=6", seconds(t0, t1), seconds(t1, t2), diff);
        std::printf("%-24s %lld connected graphs, minimum %.6f\n", "", fast.connected_count,
                    fast.min_value);
    }

    return 0;
}
