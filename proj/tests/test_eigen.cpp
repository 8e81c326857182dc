#include "doctest.h"

#include <cmath>
#include <omp.h>
#include <random>

#include "kirch/eigen.hpp"
#include "kirch/reference.hpp"

using namespace kirch;

namespace {

SymmetricMatrix random_symmetric(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    SymmetricMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) a.set(i, j, dist(rng));
    return a;
}

double reconstruction_error(const SymmetricMatrix& a, const EigenDecomposition& ed) {
    int n = a.order();
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k)
                s += ed.vectors(i, k) * ed.values[k] * ed.vectors(j, k);
            worst = std::max(worst, std::fabs(s - a(i, j)));
        }
    return worst;
}

double orthogonality_error(const EigenDecomposition& ed) {
    int n = static_cast<int>(ed.values.size());
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += ed.vectors(k, i) * ed.vectors(k, j);
            worst = std::max(worst, std::fabs(s - (i == j ? 1.0 : 0.0)));
        }
    return worst;
}

} // namespace

TEST_CASE("eigen solves small matrices exactly") {
    SymmetricMatrix a(2);
    a.set(0, 0, 2.0);
    a.set(1, 1, 2.0);
    a.set(0, 1, 1.0);
    auto ed = symmetric_eigen(a);
    CHECK(ed.values[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ed.values[1] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(reconstruction_error(a, ed) < 1e-12);
}

TEST_CASE("eigen matches the serial reference on random matrices") {
    for (unsigned seed : {7u, 21u, 99u}) {
        for (int n : {5, 17, 40}) {
            SymmetricMatrix a = random_symmetric(n, seed + n);
            auto fast = symmetric_eigen(a);
            auto ref = reference::symmetric_eigen(a);
            for (int k = 0; k < n; ++k)
                CHECK(fast.values[k] == doctest::Approx(ref.values[k]).epsilon(1e-9));
            CHECK(reconstruction_error(a, fast) < 1e-9);
            CHECK(orthogonality_error(fast) < 1e-10);
        }
    }
}

TEST_CASE("eigen output is ascending and deterministic across thread counts") {
    SymmetricMatrix a = random_symmetric(33, 4242);
    int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    auto one = symmetric_eigen(a);
    omp_set_num_threads(3);
    auto three = symmetric_eigen(a);
    omp_set_num_threads(saved);
    for (size_t k = 0; k + 1 < one.values.size(); ++k)
        CHECK(one.values[k] <= one.values[k + 1]);
    for (size_t k = 0; k < one.values.size(); ++k)
        CHECK(one.values[k] == three.values[k]); // bitwise
    for (int i = 0; i < 33; ++i)
        for (int j = 0; j < 33; ++j)
            CHECK(one.vectors(i, j) == three.vectors(i, j)); // bitwise
}

TEST_CASE("repeated runs are bitwise identical") {
    SymmetricMatrix a = random_symmetric(20, 555);
    auto first = symmetric_eigen(a);
    auto second = symmetric_eigen(a);
    for (size_t k = 0; k < first.values.size(); ++k)
        CHECK(first.values[k] == second.values[k]);
}
