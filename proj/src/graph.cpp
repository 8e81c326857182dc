#include "kirch/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

#include "kirch/errors.hpp"

namespace kirch {

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

Graph Graph::build(int n, std::vector<std::pair<int, int>> edge_list) {
    if (n < 2) throw validation_error("vertex count must be at least 2, got " + std::to_string(n));
    for (auto& [u, v] : edge_list) {
        if (u == v) throw validation_error("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n)
            throw validation_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                   ") out of range for n=" + std::to_string(n));
    }
    std::sort(edge_list.begin(), edge_list.end());
    if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
        throw validation_error("duplicate edge");

    Graph g;
    g.n = n;
    g.edges = std::move(edge_list);
    g.adj.assign(n, {});
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());

    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.adj[u])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    if (reached != n)
        throw validation_error("graph is disconnected (" + std::to_string(reached) + " of " +
                               std::to_string(n) + " vertices reachable from 0)");
    return g;
}

Graph from_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;

    auto next_content_line = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            size_t pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos) continue; // blank
            if (line[pos] == '#') continue;         // comment
            out = line;
            return true;
        }
        return false;
    };

    std::string content;
    if (!next_content_line(content)) throw parse_error("empty input, expected header \"N M\"");
    {
        std::istringstream hs(content);
        if (!(hs >> n >> m)) throw parse_error("line " + std::to_string(lineno) + ": malformed header, expected \"N M\"");
        std::string rest;
        if (hs >> rest) throw parse_error("line " + std::to_string(lineno) + ": trailing content after header");
        if (n < 0 || m < 0) throw parse_error("line " + std::to_string(lineno) + ": negative header value");
    }

    for (long long k = 0; k < m; ++k) {
        if (!next_content_line(content))
            throw parse_error("expected " + std::to_string(m) + " edges, got " + std::to_string(k));
        std::istringstream es(content);
        long long u, v;
        if (!(es >> u >> v)) throw parse_error("line " + std::to_string(lineno) + ": malformed edge line");
        std::string rest;
        if (es >> rest) throw parse_error("line " + std::to_string(lineno) + ": trailing content after edge");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw validation_error("line " + std::to_string(lineno) + ": vertex index out of range");
        if (u >= v) throw parse_error("line " + std::to_string(lineno) + ": edges must satisfy u < v");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    while (next_content_line(content))
        throw parse_error("line " + std::to_string(lineno) + ": unexpected content after last edge");

    return Graph::build(static_cast<int>(n), std::move(edges));
}

Graph from_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open file: " + path);
    return from_edge_list(in);
}

void to_edge_list(const Graph& g, std::ostream& out) {
    out << g.n << ' ' << g.edges.size() << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
}

void to_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw error("cannot open file for writing: " + path);
    to_edge_list(g, out);
}

DegreeSequence degree_sequence(const Graph& g) {
    DegreeSequence ds;
    ds.degrees.resize(g.n);
    for (int v = 0; v < g.n; ++v) ds.degrees[v] = g.degree(v);
    std::sort(ds.degrees.begin(), ds.degrees.end());
    ds.min_degree = ds.degrees.front();
    for (int d : ds.degrees) {
        if (d == 1) ++ds.m_leaves;
        ds.harmonic_sum += 1.0 / d;
    }
    return ds;
}

static void bfs_row(const Graph& g, int src, std::vector<int>& dist) {
    dist.assign(g.n, -1);
    dist[src] = 0;
    std::vector<int> frontier{src}, next;
    int d = 0;
    while (!frontier.empty()) {
        ++d;
        next.clear();
        for (int u : frontier)
            for (int w : g.adj[u])
                if (dist[w] < 0) {
                    dist[w] = d;
                    next.push_back(w);
                }
        frontier.swap(next);
    }
}

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
    std::vector<std::vector<int>> dm(g.n);
#pragma omp parallel for schedule(static) if (g.n >= 64)
    for (int s = 0; s < g.n; ++s) bfs_row(g, s, dm[s]);
    return dm;
}

int diameter(const Graph& g) {
    auto dm = distance_matrix(g);
    int d = 0;
    for (const auto& row : dm)
        for (int x : row) d = std::max(d, x);
    return d;
}

bool is_tree(const Graph& g) { return g.m_edges() == g.n - 1; }

bool is_bipartite(const Graph& g) {
    std::vector<int> color(g.n, -1);
    std::queue<int> q;
    color[0] = 0;
    q.push(0);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.adj[u]) {
            if (color[w] < 0) {
                color[w] = 1 - color[u];
                q.push(w);
            } else if (color[w] == color[u]) {
                return false;
            }
        }
    }
    return true;
}

bool is_regular(const Graph& g) {
    int d = g.degree(0);
    for (int v = 1; v < g.n; ++v)
        if (g.degree(v) != d) return false;
    return true;
}

// regular + constant intersection numbers b_i, c_i over all pairs at distance i
bool is_distance_regular(const Graph& g) {
    if (!is_regular(g)) return false;
    auto dm = distance_matrix(g);
    int diam = 0;
    for (const auto& row : dm)
        for (int x : row) diam = std::max(diam, x);

    std::vector<int> b(diam + 1, -1), c(diam + 1, -1);
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < g.n; ++v) {
            if (u == v) continue;
            int i = dm[u][v];
            int bi = 0, ci = 0;
            for (int w : g.adj[v]) {
                if (dm[u][w] == i + 1) ++bi;
                else if (dm[u][w] == i - 1) ++ci;
            }
            if (b[i] < 0) {
                b[i] = bi;
                c[i] = ci;
            } else if (b[i] != bi || c[i] != ci) {
                return false;
            }
        }
    return true;
}

} // namespace kirch
