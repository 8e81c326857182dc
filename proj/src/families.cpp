#include "kirch/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "kirch/errors.hpp"

namespace kirch {

FamilySpec FamilySpec::complete(int n) { return {Family::complete, n, 0, 0, 0, 0, 0, 0, 0, {}}; }
FamilySpec FamilySpec::path(int n) { return {Family::path, n, 0, 0, 0, 0, 0, 0, 0, {}}; }
FamilySpec FamilySpec::cycle(int n) { return {Family::cycle, n, 0, 0, 0, 0, 0, 0, 0, {}}; }
FamilySpec FamilySpec::star(int n) { return {Family::star, n, 0, 0, 0, 0, 0, 0, 0, {}}; }
FamilySpec FamilySpec::complete_bipartite(int r, int s) {
    return {Family::complete_bipartite, 0, r, s, 0, 0, 0, 0, 0, {}};
}
FamilySpec FamilySpec::circulant(int n, std::vector<int> offsets) {
    return {Family::circulant, n, 0, 0, 0, 0, 0, 0, 0, std::move(offsets)};
}
FamilySpec FamilySpec::biregular_bipartite(int n1, int a, int n2, int b) {
    return {Family::biregular_bipartite, 0, 0, 0, n1, a, n2, b, 0, {}};
}
FamilySpec FamilySpec::sun(int n) { return {Family::sun, n, 0, 0, 0, 0, 0, 0, 0, {}}; }
FamilySpec FamilySpec::full_binary_tree(int depth) {
    return {Family::full_binary_tree, 0, 0, 0, 0, 0, 0, 0, depth, {}};
}
FamilySpec FamilySpec::leaf_path_tree(int depth) {
    return {Family::leaf_path_tree, 0, 0, 0, 0, 0, 0, 0, depth, {}};
}
FamilySpec FamilySpec::lollipop(int n) { return {Family::lollipop, n, 0, 0, 0, 0, 0, 0, 0, {}}; }
FamilySpec FamilySpec::barbell_thirds(int n) { return {Family::barbell_thirds, n, 0, 0, 0, 0, 0, 0, 0, {}}; }

using EdgeList = std::vector<std::pair<int, int>>;

static Graph gen_complete(int n) {
    if (n < 2) throw infeasible_error("complete graph needs n >= 2");
    EdgeList e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::build(n, std::move(e));
}

static Graph gen_path(int n) {
    if (n < 2) throw infeasible_error("path needs n >= 2");
    EdgeList e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::build(n, std::move(e));
}

static Graph gen_cycle(int n) {
    if (n < 3) throw infeasible_error("cycle needs n >= 3");
    EdgeList e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::build(n, std::move(e));
}

static Graph gen_star(int n) {
    if (n < 2) throw infeasible_error("star needs n >= 2");
    EdgeList e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return Graph::build(n, std::move(e));
}

static Graph gen_complete_bipartite(int r, int s) {
    if (r < 1 || s < 1 || r + s < 2) throw infeasible_error("complete bipartite needs r, s >= 1");
    EdgeList e;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j) e.emplace_back(i, r + j);
    return Graph::build(r + s, std::move(e));
}

static Graph gen_circulant(int n, const std::vector<int>& offsets) {
    if (n < 3) throw infeasible_error("circulant needs n >= 3");
    if (offsets.empty()) throw infeasible_error("circulant needs at least one offset");
    std::set<int> offs;
    for (int o : offsets) {
        int r = ((o % n) + n) % n;
        if (r == 0) throw infeasible_error("circulant offset must not be 0 mod n");
        offs.insert(std::min(r, n - r));
    }
    std::set<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int o : offs) {
            int j = (i + o) % n;
            es.emplace(std::min(i, j), std::max(i, j));
        }
    return Graph::build(n, EdgeList(es.begin(), es.end()));
}

// right vertex j takes lefts jb..jb+b-1 mod n1, then degree-preserving edge swaps
// merge components until connected (swap endpoints always lie in different
// components, so the new edges cannot already exist)
static Graph gen_biregular(int n1, int a, int n2, int b) {
    if (n1 < 1 || n2 < 1 || a < 1 || b < 1) throw infeasible_error("biregular parameters must be positive");
    if (static_cast<long long>(n1) * a != static_cast<long long>(n2) * b)
        throw infeasible_error("biregular needs n1*a == n2*b");
    if (a > n2 || b > n1) throw infeasible_error("biregular needs a <= n2 and b <= n1");

    EdgeList e;
    for (int j = 0; j < n2; ++j)
        for (int t = 0; t < b; ++t) {
            long long l = (static_cast<long long>(j) * b + t) % n1;
            e.emplace_back(static_cast<int>(l), n1 + j);
        }

    int n = n1 + n2;
    auto components = [&](std::vector<int>& comp) {
        std::vector<std::vector<int>> adj(n);
        for (auto [u, v] : e) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        comp.assign(n, -1);
        int c = 0;
        for (int s = 0; s < n; ++s) {
            if (comp[s] >= 0) continue;
            std::vector<int> stack{s};
            comp[s] = c;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int w : adj[u])
                    if (comp[w] < 0) {
                        comp[w] = c;
                        stack.push_back(w);
                    }
            }
            ++c;
        }
        return c;
    };

    std::vector<int> comp;
    while (components(comp) > 1) {
        size_t i1 = 0;
        while (comp[e[i1].first] != comp[0]) ++i1;
        size_t i2 = 0;
        while (comp[e[i2].first] == comp[0]) ++i2;
        std::swap(e[i1].second, e[i2].second);
    }
    return Graph::build(n, std::move(e));
}

// clique 0..h-1, cycle h..2h-1, spoke (i, h+i)
static Graph gen_sun(int n) {
    if (n < 8 || n % 2 != 0) throw infeasible_error("sun needs even n >= 8");
    int h = n / 2;
    EdgeList e;
    for (int i = 0; i < h; ++i)
        for (int j = i + 1; j < h; ++j) e.emplace_back(i, j);
    for (int i = 0; i < h; ++i) e.emplace_back(h + i, h + (i + 1) % h);
    for (int i = 0; i < h; ++i) e.emplace_back(i, h + i);
    return Graph::build(n, std::move(e));
}

// heap layout: children of i are 2i+1, 2i+2
static EdgeList binary_tree_edges(int depth, int& n_out) {
    int n = (1 << (depth + 1)) - 1;
    EdgeList e;
    for (int i = 1; i < n; ++i) e.emplace_back((i - 1) / 2, i);
    n_out = n;
    return e;
}

static Graph gen_full_binary_tree(int depth) {
    if (depth < 1) throw infeasible_error("full binary tree needs depth >= 1");
    int n;
    EdgeList e = binary_tree_edges(depth, n);
    return Graph::build(n, std::move(e));
}

// full binary tree plus a path through the leaves in left-to-right order
static Graph gen_leaf_path_tree(int depth) {
    if (depth < 2) throw infeasible_error("leaf path tree needs depth >= 2");
    int n;
    EdgeList e = binary_tree_edges(depth, n);
    int first_leaf = (1 << depth) - 1;
    for (int i = first_leaf; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::build(n, std::move(e));
}

// K_{n-1} with one pendant vertex attached to clique vertex 0
static Graph gen_lollipop(int n) {
    if (n < 3) throw infeasible_error("lollipop needs n >= 3");
    EdgeList e;
    for (int i = 0; i + 1 < n - 1; ++i)
        for (int j = i + 1; j < n - 1; ++j) e.emplace_back(i, j);
    e.emplace_back(0, n - 1);
    return Graph::build(n, std::move(e));
}

// two K_{n/3} joined by a path of n/3 edges; interior path vertices are new,
// so the realized vertex count is 2(n/3) + (n/3 - 1) = n - 1
static Graph gen_barbell_thirds(int n) {
    if (n < 6 || n % 3 != 0) throw infeasible_error("barbell needs n divisible by 3, n >= 6");
    int k = n / 3;
    int nv = 3 * k - 1;
    EdgeList e;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            e.emplace_back(i, j);
            e.emplace_back(k + i, k + j);
        }
    int prev = k - 1; // attachment in first clique
    for (int t = 0; t < k - 1; ++t) {
        e.emplace_back(prev, 2 * k + t);
        prev = 2 * k + t;
    }
    e.emplace_back(prev, k); // attachment in second clique
    return Graph::build(nv, std::move(e));
}

Graph generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::complete: return gen_complete(spec.n);
        case Family::path: return gen_path(spec.n);
        case Family::cycle: return gen_cycle(spec.n);
        case Family::star: return gen_star(spec.n);
        case Family::complete_bipartite: return gen_complete_bipartite(spec.r, spec.s);
        case Family::circulant: return gen_circulant(spec.n, spec.offsets);
        case Family::biregular_bipartite: return gen_biregular(spec.n1, spec.a, spec.n2, spec.b);
        case Family::sun: return gen_sun(spec.n);
        case Family::full_binary_tree: return gen_full_binary_tree(spec.depth);
        case Family::leaf_path_tree: return gen_leaf_path_tree(spec.depth);
        case Family::lollipop: return gen_lollipop(spec.n);
        case Family::barbell_thirds: return gen_barbell_thirds(spec.n);
    }
    throw infeasible_error("unknown family");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::complete: return "complete";
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::star: return "star";
        case Family::complete_bipartite: return "complete_bipartite";
        case Family::circulant: return "circulant";
        case Family::biregular_bipartite: return "biregular_bipartite";
        case Family::sun: return "sun";
        case Family::full_binary_tree: return "full_binary_tree";
        case Family::leaf_path_tree: return "leaf_path_tree";
        case Family::lollipop: return "lollipop";
        case Family::barbell_thirds: return "barbell_thirds";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "complete") return Family::complete;
    if (name == "path") return Family::path;
    if (name == "cycle") return Family::cycle;
    if (name == "star") return Family::star;
    if (name == "complete_bipartite") return Family::complete_bipartite;
    if (name == "circulant") return Family::circulant;
    if (name == "biregular" || name == "biregular_bipartite") return Family::biregular_bipartite;
    if (name == "sun") return Family::sun;
    if (name == "full_binary_tree") return Family::full_binary_tree;
    if (name == "leaf_path_tree") return Family::leaf_path_tree;
    if (name == "lollipop") return Family::lollipop;
    if (name == "barbell" || name == "barbell_thirds") return Family::barbell_thirds;
    throw infeasible_error("unknown family name: " + name);
}

} // namespace kirch
