#include "doctest.h"

#include <cmath>
#include <omp.h>

#include "corpus.hpp"
#include "kirch/bounds.hpp"
#include "kirch/errors.hpp"
#include "kirch/brute.hpp"
#include "kirch/families.hpp"
#include "kirch/reference.hpp"
#include "kirch/resistance.hpp"

using namespace kirch;

namespace {

const Graph& corpus_graph(const char* name) {
    for (const auto& e : kirch::testing::family_corpus())
        if (e.name == name) return e.graph;
    REQUIRE(false);
    return kirch::testing::family_corpus().front().graph;
}

double bound_value(const BoundCatalog& cat, const std::string& id) {
    for (const auto& e : cat.entries)
        if (e.id == id) {
            REQUIRE(e.applicable);
            return e.value;
        }
    REQUIRE(false);
    return 0.0;
}

} // namespace

TEST_CASE("degree ratio invariants") {
    auto kb = ratio_invariants(corpus_graph("complete_bipartite_10_4"));
    CHECK(kb.h == doctest::Approx(151.0).epsilon(1e-12));
    CHECK(kb.h_star == doctest::Approx(67.0).epsilon(1e-12));
    auto fbt = ratio_invariants(corpus_graph("full_binary_tree_3"));
    CHECK(fbt.h == doctest::Approx(212.0).epsilon(1e-12));
    auto lpt = ratio_invariants(corpus_graph("leaf_path_tree_3"));
    CHECK(lpt.h == doctest::Approx(123.0).epsilon(1e-12));
}

TEST_CASE("individual lower bounds on frozen references") {
    const Graph& kb = corpus_graph("complete_bipartite_10_4");
    CHECK(lb_universal(kb) == doctest::Approx(338.0));
    CHECK(lb_mindeg(kb) == doctest::Approx(332.0));
    CHECK(lb_sigma(kb) == doctest::Approx(338.0092372231155).epsilon(1e-10));
    CHECK(lb_major_h(kb) == doctest::Approx(359.841059602649).epsilon(1e-10));
    CHECK(lb_major_hstar(kb) == doctest::Approx(344.5970149253731).epsilon(1e-10));

    const Graph& sun = corpus_graph("sun_20");
    CHECK(lb_universal(sun) == doctest::Approx(722.0));
    CHECK(lb_mindeg(sun) == doctest::Approx(695.0));
    CHECK(lb_sigma(sun) == doctest::Approx(722.0387255853169).epsilon(1e-10));
    CHECK(lb_major_h(sun) == doctest::Approx(848.6089238845145).epsilon(1e-10));

    const Graph& fbt = corpus_graph("full_binary_tree_3");
    CHECK(lb_universal(fbt) == doctest::Approx(392.0));
    CHECK(lb_mindeg(fbt) == doctest::Approx(392.0));
    CHECK(lb_sigma(fbt) == doctest::Approx(392.14448739100095).epsilon(1e-10));
    CHECK(lb_major_h(fbt) == doctest::Approx(444.0047169811321).epsilon(1e-10));
    CHECK(lb_leaves_tree_v2(fbt) == doctest::Approx(459.6).epsilon(1e-10));

    const Graph& lpt = corpus_graph("leaf_path_tree_3");
    CHECK(lb_mindeg(lpt) == doctest::Approx(392.0));
    CHECK(lb_sigma(lpt) == doctest::Approx(392.0944509248235).epsilon(1e-10));
    CHECK(lb_major_h(lpt) == doctest::Approx(392.6341463414634).epsilon(1e-10));

    Graph star4 = generate(FamilySpec::star(4));
    CHECK(lb_leaves_tree_v2(star4) == doctest::Approx(22.0));
    CHECK(lb_leaves_tree(star4) == doctest::Approx(20.0));
    CHECK(lb_leaves_tree(generate(FamilySpec::path(5))) == doctest::Approx(33.0));
}

TEST_CASE("pendant-vertex bounds need a leaf and trees") {
    CHECK_THROWS_AS(lb_leaves(generate(FamilySpec::cycle(5))), infeasible_error);
    CHECK_THROWS_AS(lb_leaves_tree(generate(FamilySpec::lollipop(6))), infeasible_error);
    CHECK_THROWS_AS(lb_leaves_tree_v2(generate(FamilySpec::cycle(5))), infeasible_error);
    CHECK_NOTHROW(lb_leaves(generate(FamilySpec::lollipop(6))));
}

TEST_CASE("bound relations with exact integer gaps") {
    SUBCASE("tree variants differ by exactly two") {
        for (const char* name : {"star_8", "full_binary_tree_3", "path_8",
                                 "full_binary_tree_4"}) {
            const Graph& g = corpus_graph(name);
            CHECK(lb_leaves_tree_v2(g) - lb_leaves_tree(g) == doctest::Approx(2.0).epsilon(1e-12));
        }
    }
    SUBCASE("general leaf variants differ by twice the edge excess") {
        for (const char* name : {"lollipop_6", "lollipop_9", "star_8"}) {
            const Graph& g = corpus_graph(name);
            double want = 2.0 * static_cast<double>(g.m_edges()) - 2.0 * g.n;
            CHECK(lb_leaves(g) - lb_leaves_v2(g) == doctest::Approx(want).epsilon(1e-9));
        }
    }
}

TEST_CASE("sparse graph condition") {
    CHECK(condition_17(generate(FamilySpec::cycle(5))));
    CHECK_FALSE(condition_17(corpus_graph("complete_bipartite_10_4")));
    CHECK_FALSE(condition_17(corpus_graph("full_binary_tree_3")));
    CHECK_FALSE(condition_17(corpus_graph("leaf_path_tree_3")));
    // equivalent to the min-degree bound beating the universal one
    for (const auto& e : kirch::testing::family_corpus()) {
        if (e.graph.n < 3) continue;
        bool strict = lb_mindeg(e.graph) > lb_universal(e.graph) + 1e-12;
        CHECK(condition_17(e.graph) == strict);
    }
}

TEST_CASE("interpolation functionals") {
    Graph g = generate(FamilySpec::lollipop(6));
    double n = g.n;
    double m2 = 2.0 * static_cast<double>(g.m_edges());
    CHECK(phi(g, 0.0) == doctest::Approx(n * n / m2).epsilon(1e-12));
    CHECK_THROWS_AS(phi(g, m2), infeasible_error);
    CHECK_THROWS_AS(psi(g, 0.0), infeasible_error);
}

TEST_CASE("upper bounds on frozen references") {
    Graph k3 = generate(FamilySpec::complete(3));
    CHECK(ub_resistance(k3, effective_resistances(k3)) == doctest::Approx(8.0).epsilon(1e-10));
    CHECK(ub_spectral(k3, transition_spectrum(k3)) == doctest::Approx(8.0).epsilon(1e-10));

    Graph k5 = generate(FamilySpec::complete(5));
    CHECK(ub_spectral(k5, transition_spectrum(k5)) == doctest::Approx(32.0).epsilon(1e-10));

    Graph star4 = generate(FamilySpec::star(4));
    CHECK(ub_spectral(star4, transition_spectrum(star4)) == doctest::Approx(26.0).epsilon(1e-10));
    CHECK(ub_spectral_bipartite(star4, transition_spectrum(star4)) == doctest::Approx(24.0).epsilon(1e-10));

    Graph c4 = generate(FamilySpec::cycle(4));
    CHECK(ub_spectral_bipartite(c4, transition_spectrum(c4)) == doctest::Approx(20.0).epsilon(1e-10));

    Graph kb = generate(FamilySpec::complete_bipartite(10, 4));
    CHECK(ub_spectral_bipartite(kb, transition_spectrum(kb)) == doctest::Approx(386.0).epsilon(1e-10));
    CHECK(exact_indices(kb, effective_resistances(kb)).r_plus == doctest::Approx(386.0).epsilon(1e-10)); // tight here

    Graph fbt = generate(FamilySpec::full_binary_tree(3));
    CHECK(ub_tree(fbt) == doctest::Approx(2.0 * 14 * 14 * 6).epsilon(1e-12));

    CHECK(ub_distance_regular(kirch::testing::petersen()) ==
          doctest::Approx(312.7722772277228).epsilon(1e-10));
    CHECK_THROWS_AS(ub_distance_regular(generate(FamilySpec::star(5))), infeasible_error);
    CHECK_THROWS_AS(ub_spectral_bipartite(k5, transition_spectrum(k5)), infeasible_error);
}

TEST_CASE("catalog evaluation and best selection") {
    SUBCASE("triangle") {
        Graph k3 = generate(FamilySpec::complete(3));
        BoundCatalog cat = evaluate_all(k3);
        CHECK(cat.entries.size() == 16);
        REQUIRE(cat.best_lower_index >= 0);
        REQUIRE(cat.best_upper_index >= 0);
        CHECK(cat.entries[cat.best_lower_index].id == "LB-3");
        CHECK(cat.entries[cat.best_lower_index].value == doctest::Approx(8.0));
        CHECK(cat.entries[cat.best_upper_index].id == "UB-25");
        CHECK(cat.entries[cat.best_upper_index].value == doctest::Approx(8.0));
    }
    SUBCASE("star") {
        Graph star4 = generate(FamilySpec::star(4));
        BoundCatalog cat = evaluate_all(star4);
        // LB-11, LB-15, and LB-16 all evaluate to 22 here; ties resolve to
        // the earliest catalog entry
        CHECK(cat.entries[cat.best_lower_index].id == "LB-11");
        CHECK(cat.entries[cat.best_lower_index].value == doctest::Approx(22.0));
        CHECK(cat.entries[cat.best_upper_index].id == "UB-30");
        CHECK(cat.entries[cat.best_upper_index].value == doctest::Approx(24.0));
    }
    SUBCASE("published ordering for the biregular example") {
        BoundCatalog cat = evaluate_all(corpus_graph("complete_bipartite_10_4"));
        double lb14 = bound_value(cat, "LB-14");
        double lb3 = bound_value(cat, "LB-3");
        double lb24 = bound_value(cat, "LB-24");
        double lb19 = bound_value(cat, "LB-19");
        CHECK(lb14 < lb3);
        CHECK(lb3 < lb24);
        CHECK(lb24 < lb19);
    }
    SUBCASE("inapplicable entries carry a reason") {
        BoundCatalog cat = evaluate_all(generate(FamilySpec::cycle(5)));
        for (const auto& e : cat.entries) {
            if (e.id == "LB-8" || e.id == "LB-10" || e.id == "UB-26" || e.id == "UB-30") {
                CHECK_FALSE(e.applicable);
                CHECK_FALSE(e.reason.empty());
            }
            if (e.id == "LB-3" || e.id == "UB-25" || e.id == "UB-29") CHECK(e.applicable);
        }
    }
}

TEST_CASE("exhaustive minimum over small orders") {
    SUBCASE("parallel scan equals the serial reference") {
        for (int n : {4, 5}) {
            auto fast = brute_force_min_additive(n);
            auto ref = reference::brute_force_min_additive(n);
            CHECK(fast.connected_count == ref.connected_count);
            CHECK(fast.min_value == doctest::Approx(ref.min_value).epsilon(1e-12));
            CHECK(fast.argmin_edge_mask == ref.argmin_edge_mask);
            CHECK(fast.min_attain_count == ref.min_attain_count);
        }
    }
    SUBCASE("thread count does not change the result") {
        int saved = omp_get_max_threads();
        omp_set_num_threads(1);
        auto one = brute_force_min_additive(5);
        omp_set_num_threads(3);
        auto three = brute_force_min_additive(5);
        omp_set_num_threads(saved);
        CHECK(one.min_value == three.min_value); // bitwise
        CHECK(one.argmin_edge_mask == three.argmin_edge_mask);
        CHECK(one.min_attain_count == three.min_attain_count);
    }
    SUBCASE("order bounds are enforced") {
        CHECK_THROWS_AS(brute_force_min_additive(1), infeasible_error);
        CHECK_THROWS_AS(brute_force_min_additive(8), infeasible_error);
    }
}
