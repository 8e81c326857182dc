#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace kirch {

// simple connected undirected graph; edges canonical (u < v), sorted lexicographically
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;

    long long m_edges() const { return static_cast<long long>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const;

    // validates: n >= 2, no self-loops, no duplicates, indices in range, connected
    static Graph build(int n, std::vector<std::pair<int, int>> edge_list);
};

struct DegreeSequence {
    std::vector<int> degrees; // ascending
    int m_leaves = 0;
    int min_degree = 0;
    double harmonic_sum = 0.0;
};

Graph from_edge_list(std::istream& in);
Graph from_edge_list_file(const std::string& path);
void to_edge_list(const Graph& g, std::ostream& out);
void to_edge_list_file(const Graph& g, const std::string& path);

DegreeSequence degree_sequence(const Graph& g);

std::vector<std::vector<int>> distance_matrix(const Graph& g);
int diameter(const Graph& g);

bool is_tree(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_regular(const Graph& g);
bool is_distance_regular(const Graph& g);

} // namespace kirch
