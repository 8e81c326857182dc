#pragma once

#include <map>
#include <string>
#include <vector>

#include "kirch/bounds.hpp"
#include "kirch/graph.hpp"
#include "kirch/resistance.hpp"

namespace kirch {

struct GraphSummary {
    int n = 0;
    long long m = 0;
    std::map<int, int> degree_histogram; // degree -> multiplicity
    bool tree = false;
    bool bipartite = false;
    bool regular = false;
    bool distance_regular = false;
};

GraphSummary summarize(const Graph& g);

// identity checks tying the independent computation routes together
struct VerificationBlock {
    double tol = 1e-8;
    DecompositionReport decomposition;
    LovaszReport lovasz;
    // commute times from linear solves against 2m * resistance
    double commute_max_rel_err = 0.0;
    // bipartiteness must coincide with the bottom transition eigenvalue at -1
    bool bipartite_spectrum_consistent = false;
    bool ok = false;
};

VerificationBlock verify_graph(const Graph& g, double tol = 1e-8);

// one row of the published-table reproduction; published values are frozen
// in-source with their table number and printed precision
struct ReproRow {
    int table = 0;
    std::string bound_id;      // catalog id actually evaluated
    std::string printed_label; // label as it appears in the published table
    double computed = 0.0;
    double published = 0.0;
    int published_decimals = 0;
    std::string status; // match | tolerance-match | flagged | mismatch
    std::string note;
};

// the graph each published table was computed on
Graph reproduction_graph(int table);

// match: agreement at the printed precision (integers: exact);
// tolerance-match: within max(0.1%, 0.02); flagged rows never fail
std::vector<ReproRow> reproduce_tables(const std::vector<int>& tables);

// true when no row has status "mismatch"
bool reproduction_ok(const std::vector<ReproRow>& rows);

// quartic cap (n^4 - n^3 - n^2 + n)/3, shown as a reference line
double quartic_reference(int n);

struct CompareRow {
    std::string name;
    int n = 0;
    long long m = 0;
    double additive = 0.0;
    std::string best_lower_id;
    double best_lower = 0.0;
    std::string best_upper_id;
    double best_upper = 0.0;
};

struct Report {
    bool has_summary = false;
    GraphSummary summary;
    bool has_exact = false;
    IndexValues exact;
    bool has_bounds = false;
    BoundCatalog bounds;
    bool has_verification = false;
    VerificationBlock verification;
    std::vector<ReproRow> repro_rows;
    std::vector<std::pair<int, double>> repro_reference; // table -> quartic cap
    std::vector<CompareRow> compare_rows;
};

// serialization; all three renderings are byte-stable for identical reports
std::string render_tsv(const Report& r);
std::string render_markdown(const Report& r);
std::string render_json(const Report& r);
Report report_from_json(const std::string& text);

// shared numeric formatting for the text renderings: integers print bare,
// small magnitudes go exponential, everything else %.6f with zeros trimmed
std::string format_number(double x);

} // namespace kirch
