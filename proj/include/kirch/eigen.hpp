#pragma once

#include <vector>

#include "kirch/symmetric_matrix.hpp"

namespace kirch {

// values ascending; vectors(i, k) is component i of the eigenvector for values[k]
struct EigenDecomposition {
    std::vector<double> values;
    Matrix vectors;
};

// Parallel Jacobi eigensolver. Rotation pairs follow a fixed round-robin
// tournament schedule with angles taken from a per-round snapshot, and the
// row/column updates run in two barrier-separated phases over disjoint pairs,
// so the result is bitwise identical for any thread count.
EigenDecomposition symmetric_eigen(const SymmetricMatrix& a);

} // namespace kirch
