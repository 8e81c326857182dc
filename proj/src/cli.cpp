#include "kirch/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kirch/errors.hpp"
#include "kirch/families.hpp"
#include "kirch/report.hpp"

namespace kirch {

namespace {

void write_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw validation_error("cannot open output file: " + out_path);
    f << text;
}

void emit(const Report& rep, const std::string& format, const std::string& out_path) {
    std::string text;
    if (format == "json")
        text = render_json(rep);
    else if (format == "markdown")
        text = render_markdown(rep);
    else
        text = render_tsv(rep);
    write_text(text, out_path);
}

std::string basename_of(const std::string& path) {
    size_t pos = path.find_last_of('/');
    return pos == std::string::npos ? path : path.substr(pos + 1);
}

FamilySpec spec_from_options(const std::string& family, int n, int r, int s, int n1, int a,
                             int n2, int b, int depth, const std::vector<int>& offsets) {
    switch (family_from_name(family)) {
        case Family::complete: return FamilySpec::complete(n);
        case Family::path: return FamilySpec::path(n);
        case Family::cycle: return FamilySpec::cycle(n);
        case Family::star: return FamilySpec::star(n);
        case Family::complete_bipartite: return FamilySpec::complete_bipartite(r, s);
        case Family::circulant: return FamilySpec::circulant(n, offsets);
        case Family::biregular_bipartite: return FamilySpec::biregular_bipartite(n1, a, n2, b);
        case Family::sun: return FamilySpec::sun(n);
        case Family::full_binary_tree: return FamilySpec::full_binary_tree(depth);
        case Family::leaf_path_tree: return FamilySpec::leaf_path_tree(depth);
        case Family::lollipop: return FamilySpec::lollipop(n);
        case Family::barbell_thirds: return FamilySpec::barbell_thirds(n);
    }
    throw infeasible_error("unknown family name: " + family);
}

} // namespace

int cli_main(int argc, char** argv) {
    CLI::App app{"additive degree-Kirchhoff index toolkit: exact values, bounds, checks"};
    app.require_subcommand(1);
    int result = 0;

    // gen
    auto* gen = app.add_subcommand("gen", "generate a family graph as an edge list");
    std::string gen_family, gen_out;
    int gen_n = 0, gen_r = 0, gen_s = 0, gen_n1 = 0, gen_a = 0, gen_n2 = 0, gen_b = 0,
        gen_depth = 0;
    std::vector<int> gen_offsets;
    gen->add_option("--family", gen_family, "family name")->required();
    gen->add_option("--n", gen_n, "vertex-count parameter");
    gen->add_option("--r", gen_r, "first part size (complete_bipartite)");
    gen->add_option("--s", gen_s, "second part size (complete_bipartite)");
    gen->add_option("--n1", gen_n1, "left part size (biregular)");
    gen->add_option("--a", gen_a, "left degree (biregular)");
    gen->add_option("--n2", gen_n2, "right part size (biregular)");
    gen->add_option("--b", gen_b, "right degree (biregular)");
    gen->add_option("--depth", gen_depth, "tree depth");
    gen->add_option("--offsets", gen_offsets, "circulant offsets")->delimiter(',');
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");
    gen->callback([&] {
        Graph g = generate(spec_from_options(gen_family, gen_n, gen_r, gen_s, gen_n1, gen_a,
                                             gen_n2, gen_b, gen_depth, gen_offsets));
        std::ostringstream os;
        to_edge_list(g, os);
        write_text(os.str(), gen_out);
    });

    // exact
    auto* exact = app.add_subcommand("exact", "exact resistance-based indices");
    std::string exact_in, exact_out, exact_format = "tsv";
    exact->add_option("-i,--input", exact_in, "edge-list file")->required();
    exact->add_option("-o,--output", exact_out, "output file (default stdout)");
    exact->add_option("--format", exact_format, "output format")
        ->check(CLI::IsMember({"tsv", "json", "markdown"}));
    exact->callback([&] {
        Graph g = from_edge_list_file(exact_in);
        Report rep;
        rep.has_summary = true;
        rep.summary = summarize(g);
        rep.has_exact = true;
        rep.exact = exact_indices(g, effective_resistances(g));
        emit(rep, exact_format, exact_out);
    });

    // bounds
    auto* bounds = app.add_subcommand("bounds", "evaluate the bound catalog");
    std::string bounds_in, bounds_out, bounds_format = "tsv";
    bounds->add_option("-i,--input", bounds_in, "edge-list file")->required();
    bounds->add_option("-o,--output", bounds_out, "output file (default stdout)");
    bounds->add_option("--format", bounds_format, "output format")
        ->check(CLI::IsMember({"tsv", "json", "markdown"}));
    bounds->callback([&] {
        Graph g = from_edge_list_file(bounds_in);
        Report rep;
        rep.has_summary = true;
        rep.summary = summarize(g);
        rep.has_bounds = true;
        rep.bounds = evaluate_all(g);
        emit(rep, bounds_format, bounds_out);
    });

    // verify
    auto* verify = app.add_subcommand("verify", "check the cross-route identities");
    std::string verify_in, verify_out, verify_format = "tsv";
    double verify_tol = 1e-8;
    verify->add_option("-i,--input", verify_in, "edge-list file")->required();
    verify->add_option("-o,--output", verify_out, "output file (default stdout)");
    verify->add_option("--format", verify_format, "output format")
        ->check(CLI::IsMember({"tsv", "json", "markdown"}));
    verify->add_option("--tol", verify_tol, "residual tolerance");
    verify->callback([&] {
        Graph g = from_edge_list_file(verify_in);
        Report rep;
        rep.has_summary = true;
        rep.summary = summarize(g);
        rep.has_verification = true;
        rep.verification = verify_graph(g, verify_tol);
        emit(rep, verify_format, verify_out);
        if (!rep.verification.ok) result = 1;
    });

    // reproduce
    auto* reproduce = app.add_subcommand("reproduce", "recompute the published tables");
    std::string repro_table = "all", repro_out, repro_format = "tsv";
    reproduce->add_option("--table", repro_table, "table selector")
        ->check(CLI::IsMember({"1", "2", "3", "4", "all"}));
    reproduce->add_option("-o,--output", repro_out, "output file (default stdout)");
    reproduce->add_option("--format", repro_format, "output format")
        ->check(CLI::IsMember({"tsv", "json", "markdown"}));
    reproduce->callback([&] {
        std::vector<int> tables;
        if (repro_table == "all")
            tables = {1, 2, 3, 4};
        else
            tables = {std::stoi(repro_table)};
        Report rep;
        rep.repro_rows = reproduce_tables(tables);
        for (int t : tables)
            rep.repro_reference.emplace_back(t, quartic_reference(reproduction_graph(t).n));
        emit(rep, repro_format, repro_out);
        if (!reproduction_ok(rep.repro_rows)) result = 1;
    });

    // compare
    auto* compare = app.add_subcommand("compare", "side-by-side view over several graphs");
    std::vector<std::string> compare_in;
    std::string compare_out, compare_format = "tsv";
    compare->add_option("-i,--input", compare_in, "edge-list files")->required();
    compare->add_option("-o,--output", compare_out, "output file (default stdout)");
    compare->add_option("--format", compare_format, "output format")
        ->check(CLI::IsMember({"tsv", "json", "markdown"}));
    compare->callback([&] {
        Report rep;
        for (const std::string& path : compare_in) {
            Graph g = from_edge_list_file(path);
            ResistanceMatrix rm = effective_resistances(g);
            BoundCatalog cat = evaluate_all(g, &rm, nullptr);
            CompareRow row;
            row.name = basename_of(path);
            row.n = g.n;
            row.m = g.m_edges();
            row.additive = additive_index(g, rm);
            if (cat.best_lower_index >= 0) {
                row.best_lower_id = cat.entries[cat.best_lower_index].id;
                row.best_lower = cat.entries[cat.best_lower_index].value;
            }
            if (cat.best_upper_index >= 0) {
                row.best_upper_id = cat.entries[cat.best_upper_index].id;
                row.best_upper = cat.entries[cat.best_upper_index].value;
            }
            rep.compare_rows.push_back(std::move(row));
        }
        emit(rep, compare_format, compare_out);
    });

    try {
        app.parse(argc, argv);
        return result;
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace kirch
