#pragma once

#include <string>
#include <vector>

#include "kirch/graph.hpp"

namespace kirch {

enum class Family {
    complete,
    path,
    cycle,
    star,
    complete_bipartite,
    circulant,
    biregular_bipartite,
    sun,
    full_binary_tree,
    leaf_path_tree,
    lollipop,
    barbell_thirds,
};

struct FamilySpec {
    Family family = Family::complete;
    int n = 0;
    int r = 0, s = 0;               // complete_bipartite
    int n1 = 0, a = 0, n2 = 0, b = 0; // biregular_bipartite
    int depth = 0;                  // trees
    std::vector<int> offsets;       // circulant

    static FamilySpec complete(int n);
    static FamilySpec path(int n);
    static FamilySpec cycle(int n);
    static FamilySpec star(int n);
    static FamilySpec complete_bipartite(int r, int s);
    static FamilySpec circulant(int n, std::vector<int> offsets);
    static FamilySpec biregular_bipartite(int n1, int a, int n2, int b);
    static FamilySpec sun(int n);
    static FamilySpec full_binary_tree(int depth);
    static FamilySpec leaf_path_tree(int depth);
    static FamilySpec lollipop(int n);
    static FamilySpec barbell_thirds(int n);
};

Graph generate(const FamilySpec& spec);

std::string family_name(Family f);
Family family_from_name(const std::string& name);

} // namespace kirch
