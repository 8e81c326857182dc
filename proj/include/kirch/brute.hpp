#pragma once

#include <cstdint>

namespace kirch {

// exhaustive scan of all labeled simple graphs on n vertices
struct BruteForceResult {
    int n = 0;
    long long connected_count = 0;
    double min_value = 0.0;            // smallest degree-sum index over connected graphs
    std::uint64_t argmin_edge_mask = 0; // smallest mask attaining it
    long long min_attain_count = 0;     // graphs within 1e-6 of the minimum
};

// OpenMP-chunked enumeration; chunk results merge in fixed order so the
// outcome is identical for any thread count
BruteForceResult brute_force_min_additive(int n);

} // namespace kirch
