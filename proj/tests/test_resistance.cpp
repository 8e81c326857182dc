#include "doctest.h"

#include <cmath>

#include "corpus.hpp"
#include "kirch/families.hpp"
#include "kirch/reference.hpp"
#include "kirch/resistance.hpp"
#include "kirch/spectral.hpp"

using namespace kirch;

TEST_CASE("effective resistances match the grounded-inverse reference") {
    for (const auto& e : kirch::testing::family_corpus()) {
        if (e.graph.n > 20) continue;
        auto rm = effective_resistances(e.graph);
        auto ref = reference::effective_resistances(e.graph);
        for (int i = 0; i < e.graph.n; ++i)
            for (int j = 0; j < e.graph.n; ++j)
                CHECK(std::fabs(rm.r(i, j) - ref(i, j)) < 1e-9);
    }
}

TEST_CASE("closed-form resistances") {
    SUBCASE("complete graph: every pair at 2/n") {
        for (int n : {3, 6, 11}) {
            auto rm = effective_resistances(generate(FamilySpec::complete(n)));
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    CHECK(rm.r(i, j) == doctest::Approx(2.0 / n).epsilon(1e-10));
        }
    }
    SUBCASE("trees: resistance equals path length") {
        Graph t = generate(FamilySpec::full_binary_tree(3));
        auto rm = effective_resistances(t);
        auto d = distance_matrix(t);
        for (int i = 0; i < t.n; ++i)
            for (int j = 0; j < t.n; ++j)
                CHECK(rm.r(i, j) == doctest::Approx(static_cast<double>(d[i][j])).epsilon(1e-9));
    }
}

TEST_CASE("index values on frozen references") {
    auto triple = [](const Graph& g) { return exact_indices(g, effective_resistances(g)); };
    SUBCASE("star on 4 vertices") {
        auto iv = triple(generate(FamilySpec::star(4)));
        CHECK(iv.r_star == doctest::Approx(15.0).epsilon(1e-10));
        CHECK(iv.r_plus == doctest::Approx(24.0).epsilon(1e-10));
    }
    SUBCASE("small families") {
        CHECK(triple(generate(FamilySpec::cycle(5))).r_plus == doctest::Approx(40.0).epsilon(1e-10));
        CHECK(triple(generate(FamilySpec::complete(6))).r_plus == doctest::Approx(50.0).epsilon(1e-10));
        CHECK(triple(generate(FamilySpec::path(3))).r_plus == doctest::Approx(10.0).epsilon(1e-10));
    }
    SUBCASE("petersen") {
        auto iv = triple(kirch::testing::petersen());
        CHECK(iv.r == doctest::Approx(33.0).epsilon(1e-10));
        CHECK(iv.r_star == doctest::Approx(297.0).epsilon(1e-10));
        CHECK(iv.r_plus == doctest::Approx(198.0).epsilon(1e-10));
    }
    SUBCASE("reproduction graphs") {
        auto sun = triple(generate(FamilySpec::sun(20)));
        CHECK(sun.r == doctest::Approx(99.65634002271491).epsilon(1e-9));
        CHECK(sun.r_star == doctest::Approx(2820.1786588940313).epsilon(1e-9));
        CHECK(sun.r_plus == doctest::Approx(1100.486003823651).epsilon(1e-9));
        auto fbt = triple(generate(FamilySpec::full_binary_tree(3)));
        CHECK(fbt.r == doctest::Approx(368.0).epsilon(1e-10));
        CHECK(fbt.r_star == doctest::Approx(1066.0).epsilon(1e-10));
        CHECK(fbt.r_plus == doctest::Approx(1262.0).epsilon(1e-10));
        auto lpt = triple(generate(FamilySpec::leaf_path_tree(3)));
        CHECK(lpt.r == doctest::Approx(151.72450805008924).epsilon(1e-9));
        CHECK(lpt.r_star == doctest::Approx(1157.5387000596284).epsilon(1e-9));
        CHECK(lpt.r_plus == doctest::Approx(838.73273703041).epsilon(1e-9));
    }
    SUBCASE("closed forms over a short sweep") {
        for (int n : {5, 8, 12}) {
            auto lol = triple(generate(FamilySpec::lollipop(n)));
            double want = 3.0 * n * n - 8.0 * n + 8.0 - 2.0 / (n - 1);
            CHECK(lol.r_plus == doctest::Approx(want).epsilon(1e-9));
        }
        for (int n : {4, 8, 14}) {
            auto kb = triple(generate(FamilySpec::complete_bipartite(n / 2, n / 2)));
            CHECK(kb.r_plus == doctest::Approx(static_cast<double>(n) * (2 * n - 3)).epsilon(1e-9));
        }
    }
}

TEST_CASE("multiplicative index agrees between resistance and spectral forms") {
    for (const auto& e : kirch::testing::family_corpus()) {
        if (e.graph.n > 25 || e.graph.n < 3) continue;
        auto rm = effective_resistances(e.graph);
        double via_r = multiplicative_index(e.graph, rm);
        auto sd = transition_spectrum(e.graph);
        double via_s = multiplicative_index_spectral(e.graph, sd);
        CHECK(relative_error(via_r, via_s) < 1e-9);
    }
}

TEST_CASE("hitting times") {
    SUBCASE("main kernel matches the absorbing-solve reference") {
        for (const char* name : {"cycle_9", "lollipop_6", "sun_8", "petersen"}) {
            const Graph* g = nullptr;
            for (const auto& e : kirch::testing::family_corpus())
                if (e.name == name) g = &e.graph;
            REQUIRE(g != nullptr);
            auto rm = effective_resistances(*g);
            auto ht = hitting_times(*g, rm);
            auto ref = reference::hitting_times(*g);
            for (int i = 0; i < g->n; ++i)
                for (int j = 0; j < g->n; ++j)
                    CHECK(std::fabs(ht.h(i, j) - ref(i, j)) < 1e-8);
        }
    }
    SUBCASE("commute time equals 2m times resistance") {
        Graph g = generate(FamilySpec::lollipop(8));
        auto ref = reference::hitting_times(g);
        auto rm = effective_resistances(g);
        double m2 = 2.0 * static_cast<double>(g.m_edges());
        for (int i = 0; i < g.n; ++i)
            for (int j = i + 1; j < g.n; ++j)
                CHECK(ref(i, j) + ref(j, i) == doctest::Approx(m2 * rm.r(i, j)).epsilon(1e-9));
    }
}

TEST_CASE("degree distance equals the additive index on trees") {
    Graph fbt = generate(FamilySpec::full_binary_tree(3));
    CHECK(reference::degree_distance(fbt) == 1262);
    CHECK(static_cast<double>(reference::degree_distance(fbt)) ==
          doctest::Approx(exact_indices(fbt, effective_resistances(fbt)).r_plus).epsilon(1e-10));
    Graph star = generate(FamilySpec::star(9));
    CHECK(static_cast<double>(reference::degree_distance(star)) ==
          doctest::Approx(exact_indices(star, effective_resistances(star)).r_plus).epsilon(1e-10));
}

TEST_CASE("verification bundles pass on representative graphs") {
    for (const char* name : {"complete_7", "star_8", "cycle_9", "lollipop_9",
                             "sun_8", "biregular_6_2_4_3", "petersen"}) {
        const Graph* g = nullptr;
        for (const auto& e : kirch::testing::family_corpus())
            if (e.name == name) g = &e.graph;
        REQUIRE(g != nullptr);
        auto dec = verify_decomposition(*g);
        CHECK(dec.ok);
        CHECK(dec.max_rel_err < 1e-8);
        auto lov = verify_lovasz(*g);
        CHECK(lov.ok);
        CHECK(lov.max_identity_err < 1e-7);
        CHECK(lov.max_mass_err < 1e-7);
    }
}
