#include "doctest.h"

#include <cmath>

#include "corpus.hpp"
#include "kirch/families.hpp"
#include "kirch/spectral.hpp"

using namespace kirch;

TEST_CASE("laplacian entries") {
    Graph g = generate(FamilySpec::star(4));
    auto l = laplacian(g);
    CHECK(l(0, 0) == doctest::Approx(3.0));
    CHECK(l(1, 1) == doctest::Approx(1.0));
    CHECK(l(0, 1) == doctest::Approx(-1.0));
    CHECK(l(1, 2) == doctest::Approx(0.0));
}

TEST_CASE("pseudoinverse satisfies the defining identities") {
    for (const char* which : {"cycle", "star", "lollipop"}) {
        Graph g = which[0] == 'c'   ? generate(FamilySpec::cycle(9))
                  : which[0] == 's' ? generate(FamilySpec::star(8))
                                    : generate(FamilySpec::lollipop(7));
        auto l = laplacian(g);
        auto p = pseudoinverse(l);
        int n = g.n;
        // L * P * L == L
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double s = 0.0;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) s += l(i, a) * p(a, b) * l(b, j);
                CHECK(s == doctest::Approx(l(i, j)).epsilon(1e-8));
            }
        // rows of P sum to zero (kernel is the all-ones vector)
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += p(i, j);
            CHECK(std::fabs(s) < 1e-9);
        }
    }
}

TEST_CASE("transition spectra of closed-form families") {
    SUBCASE("complete graph") {
        for (int n : {3, 5, 9}) {
            auto sd = transition_spectrum(generate(FamilySpec::complete(n)));
            CHECK(sd.lambda[0] == doctest::Approx(1.0).epsilon(1e-12));
            for (int k = 1; k < n; ++k)
                CHECK(sd.lambda[k] == doctest::Approx(-1.0 / (n - 1)).epsilon(1e-10));
            CHECK(sd.lambda2 == doctest::Approx(-1.0 / (n - 1)).epsilon(1e-10));
        }
    }
    SUBCASE("star: one at each end, zeros between") {
        auto sd = transition_spectrum(generate(FamilySpec::star(6)));
        CHECK(sd.lambda[0] == doctest::Approx(1.0));
        CHECK(sd.lambda[5] == doctest::Approx(-1.0));
        for (int k = 1; k < 5; ++k) CHECK(std::fabs(sd.lambda[k]) < 1e-10);
    }
    SUBCASE("complete bipartite mirrors the star layout") {
        auto sd = transition_spectrum(generate(FamilySpec::complete_bipartite(3, 5)));
        CHECK(sd.lambda[0] == doctest::Approx(1.0));
        CHECK(sd.lambda.back() == doctest::Approx(-1.0));
        for (size_t k = 1; k + 1 < sd.lambda.size(); ++k)
            CHECK(std::fabs(sd.lambda[k]) < 1e-10);
    }
}

TEST_CASE("sigma agrees between edge sum and spectrum") {
    for (const auto& e : kirch::testing::family_corpus()) {
        if (e.graph.n > 25) continue;
        auto sd = transition_spectrum(e.graph);
        CHECK(sd.sigma == doctest::Approx(sigma(e.graph)).epsilon(1e-9));
    }
}

TEST_CASE("sigma closed form for the complete bipartite graph") {
    // K_{10,4}: sigma = 1/sqrt(7)
    CHECK(sigma(generate(FamilySpec::complete_bipartite(10, 4))) ==
          doctest::Approx(0.3779644730092273).epsilon(1e-12));
    CHECK(sigma(generate(FamilySpec::sun(20))) ==
          doctest::Approx(0.4352521619066866).epsilon(1e-10));
    CHECK(sigma(generate(FamilySpec::full_binary_tree(3))) ==
          doctest::Approx(0.6776866969767514).epsilon(1e-10));
    CHECK(sigma(generate(FamilySpec::leaf_path_tree(3))) ==
          doctest::Approx(0.5962847939999439).epsilon(1e-10));
}

TEST_CASE("gap parameters")
{
    SUBCASE("triangle") {
        auto sd = transition_spectrum(generate(FamilySpec::complete(3)));
        REQUIRE(sd.has_gap_params);
        CHECK(sd.k_param == 0);
        CHECK(sd.theta == doctest::Approx(1.5).epsilon(1e-10));
    }
    SUBCASE("star") {
        auto sd = transition_spectrum(generate(FamilySpec::star(7)));
        REQUIRE(sd.has_gap_params);
        CHECK(sd.k_param == 1); // lambda2 == 0
        CHECK(sd.theta == doctest::Approx(1.0).epsilon(1e-10));
    }
    SUBCASE("path on three vertices") {
        auto sd = transition_spectrum(generate(FamilySpec::path(3)));
        REQUIRE(sd.has_gap_params);
        CHECK(sd.k_param == 1);
        CHECK(sd.theta == doctest::Approx(1.0).epsilon(1e-10));
    }
    SUBCASE("an edge has no usable gap") {
        auto sd = transition_spectrum(generate(FamilySpec::complete(2)));
        CHECK_FALSE(sd.has_gap_params);
    }
    SUBCASE("k stays in range and theta stays positive across the corpus") {
        for (const auto& e : kirch::testing::family_corpus()) {
            if (e.graph.n > 25) continue;
            auto sd = transition_spectrum(e.graph);
            if (!sd.has_gap_params) continue;
            CHECK(sd.k_param >= 0);
            CHECK(sd.k_param <= e.graph.n - 2);
            CHECK(sd.theta > 0.0);
        }
    }
}
