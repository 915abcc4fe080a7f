#include "flowvol/error.hpp"
#include "flowvol/families.hpp"
#include "flowvol/graph.hpp"
#include "flowvol/kostant.hpp"
#include "flowvol/lidskii.hpp"
#include "flowvol/parse.hpp"
#include "flowvol/report.hpp"
#include "flowvol/subdivision.hpp"
#include "flowvol/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using flowvol::Int;
using flowvol::MultiDigraph;
using flowvol::Netflow;
using flowvol::RunReport;

constexpr int kExitAgree = 0;
constexpr int kExitDisagree = 1;
constexpr int kExitError = 2;
constexpr int kExitTruncated = 3;

struct CommonArgs {
    std::string graph_spec;
    std::string netflow;
    std::string method = "all";
    bool json = false;
    bool timings = false;
};

template <typename F>
Int timed(RunReport& report, const std::string& name, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    Int value = f();
    const auto stop = std::chrono::steady_clock::now();
    report.timings_ms.emplace_back(
        name, std::chrono::duration<double, std::milli>(stop - start).count());
    return value;
}

std::string join(const std::vector<long long>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

std::string signature_string(const std::vector<long long>& m) {
    return "(" + join(m) + ")";
}

void echo_graph(RunReport& report, const CommonArgs& args, const MultiDigraph& g) {
    report.request.emplace_back("graph", args.graph_spec);
    report.request.emplace_back("parsed", g.to_string());
    if (!args.netflow.empty()) report.request.emplace_back("netflow", args.netflow);
}

int finish(const RunReport& report, const CommonArgs& args, int exit_code) {
    std::cout << (args.json ? flowvol::render_json(report, args.timings)
                            : flowvol::render_human(report, args.timings));
    return exit_code;
}

void note_negative_entries(RunReport& report, const Netflow& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < 0) {
            report.notes.push_back("closed forms assume nonnegative netflow entries");
            return;
        }
}

int run_volume(const CommonArgs& args) {
    const MultiDigraph g = flowvol::parse_graph(args.graph_spec);
    const Netflow a = flowvol::parse_netflow(args.netflow, g.n());

    RunReport report;
    report.command = "volume";
    echo_graph(report, args, g);
    report.request.emplace_back("method", args.method);
    note_negative_entries(report, a);

    std::vector<std::string> methods =
        args.method == "all" ? std::vector<std::string>{"lidskii", "indegree", "cells", "oracle"}
                             : std::vector<std::string>{args.method};
    std::vector<Int> values;
    for (const std::string& method : methods) {
        Int value;
        if (method == "lidskii") {
            value = timed(report, method, [&] { return flowvol::lidskii_volume(g, a); });
        } else if (method == "indegree") {
            if (!g.has_outgoing_all())
                flowvol::fail(flowvol::ErrorKind::MissingOutgoingEdge,
                              "the indegree route needs an outgoing edge at every vertex 1..n");
            value = timed(report, method, [&] {
                const std::vector<long long> rev_a(a.entries().rbegin(), a.entries().rend());
                return flowvol::volume_indegree(flowvol::reverse(g), rev_a);
            });
        } else if (method == "cells") {
            value = timed(report, method, [&] {
                Int total = 0;
                for (const auto& cell : flowvol::ccrt_cells(g, a))
                    total += cell.multiplicity * cell.volume_term;
                return total;
            });
        } else {
            value = timed(report, method, [&] { return flowvol::volume_oracle(g, a); });
        }
        report.results.emplace_back(method, value.str());
        values.push_back(std::move(value));
    }

    if (static_cast<long long>(g.edge_count()) > g.n() && values.front() == 0)
        report.notes.push_back("polytope is lower dimensional or empty; its volume is 0");
    report.agreement_applicable = values.size() > 1;
    report.agreement = true;
    for (const Int& v : values) report.agreement = report.agreement && v == values.front();
    return finish(report, args, report.agreement ? kExitAgree : kExitDisagree);
}

int run_points(const CommonArgs& args) {
    const MultiDigraph g = flowvol::parse_graph(args.graph_spec);
    const Netflow a = flowvol::parse_netflow(args.netflow, g.n());

    RunReport report;
    report.command = "points";
    echo_graph(report, args, g);
    report.request.emplace_back("method", args.method);
    note_negative_entries(report, a);

    std::vector<std::string> methods =
        args.method == "all"
            ? std::vector<std::string>{"oracle", "binomial", "multiset", "indegree"}
            : std::vector<std::string>{args.method};
    std::vector<Int> values;
    for (const std::string& method : methods) {
        Int value;
        if (method == "oracle") {
            value = timed(report, method, [&] { return flowvol::kpf(g, a.full()); });
        } else if (method == "binomial") {
            value = timed(report, method, [&] { return flowvol::lidskii_points_binomial(g, a); });
        } else if (method == "multiset") {
            value = timed(report, method, [&] { return flowvol::lidskii_points_multiset(g, a); });
        } else {
            // F_G(a) matches F_{rev G} with the sink-style netflow
            // (sum rev_a, -rev_a), the chamber points_indegree evaluates.
            if (!g.has_outgoing_all())
                flowvol::fail(flowvol::ErrorKind::MissingIncomingEdge,
                              "the indegree route needs an incoming edge at every vertex "
                              "2..n+1 of the reversed graph");
            value = timed(report, method, [&] {
                const std::vector<long long> rev_a(a.entries().rbegin(), a.entries().rend());
                return flowvol::points_indegree(flowvol::reverse(g), rev_a);
            });
        }
        report.results.emplace_back(method, value.str());
        values.push_back(std::move(value));
    }

    report.agreement_applicable = values.size() > 1;
    report.agreement = true;
    for (const Int& v : values) report.agreement = report.agreement && v == values.front();
    return finish(report, args, report.agreement ? kExitAgree : kExitDisagree);
}

int run_ehrhart(const CommonArgs& args, bool want_poly, std::optional<long long> eval_t) {
    const MultiDigraph g = flowvol::parse_graph(args.graph_spec);
    const Netflow a = flowvol::parse_netflow(args.netflow, g.n());
    if (!want_poly && !eval_t) want_poly = true;

    RunReport report;
    report.command = "ehrhart";
    echo_graph(report, args, g);

    const flowvol::EhrhartPolynomial ehrhart = flowvol::ehrhart_poly(g, a);
    if (want_poly) {
        report.results.emplace_back("polynomial", ehrhart.poly.to_string());
        report.results.emplace_back("degree", std::to_string(ehrhart.poly.total_degree()));
        report.results.emplace_back("normalized_volume", flowvol::volume_oracle(g, a).str());
        if (ehrhart.degenerate)
            report.notes.push_back("polytope is lower dimensional; the top coefficient vanishes");
    }
    if (eval_t) {
        const Int direct = timed(report, "direct_count",
                                 [&] { return flowvol::ehrhart_value(g, a, *eval_t); });
        const flowvol::Rational via_poly = ehrhart.poly.evaluate({flowvol::Rational(*eval_t)});
        report.request.emplace_back("t", std::to_string(*eval_t));
        report.results.emplace_back("value", direct.str());
        report.results.emplace_back("polynomial_value", via_poly.str());
        report.agreement_applicable = true;
        report.agreement = via_poly == flowvol::Rational(direct);
    }
    return finish(report, args, report.agreement ? kExitAgree : kExitDisagree);
}

int run_cells(const CommonArgs& args) {
    const MultiDigraph g = flowvol::parse_graph(args.graph_spec);
    const Netflow a = flowvol::parse_netflow(args.netflow, g.n());

    RunReport report;
    report.command = "cells";
    echo_graph(report, args, g);

    const auto cells = flowvol::ccrt_cells(g, a);
    flowvol::ReportTable table{"cells",
                               {"m", "multiplicity", "volume_term", "points_binomial",
                                "points_multiset"},
                               {}};
    Int volume_total = 0;
    for (const auto& cell : cells) {
        volume_total += cell.multiplicity * cell.volume_term;
        table.rows.push_back({signature_string(cell.m), cell.multiplicity.str(),
                              cell.volume_term.str(), cell.points_term_binomial.str(),
                              cell.points_term_multiset.str()});
    }
    report.tables.push_back(std::move(table));

    const Int n_types = flowvol::num_cell_types(g);
    const auto crosschecks = flowvol::num_cells_crosschecks(g);
    report.results.emplace_back("num_cell_types", n_types.str());
    report.results.emplace_back("num_cells", crosschecks.formula_sum.str());
    report.results.emplace_back("volume", volume_total.str());
    report.results.emplace_back("kpf_star", crosschecks.kpf_star.str());
    report.results.emplace_back("volume_star", crosschecks.volume_star.str());
    report.results.emplace_back("volume_circ", crosschecks.volume_circ.str());
    if (crosschecks.explicit_count)
        report.results.emplace_back("explicit_leaf_count", crosschecks.explicit_count->str());
    else
        report.notes.push_back("explicit reduction tree skipped (node cap)");

    const Int volume_direct = flowvol::lidskii_volume(g, a);
    const Int points_direct = flowvol::kpf(g, a.full());
    report.results.emplace_back("points", points_direct.str());

    report.agreement_applicable = true;
    report.agreement = crosschecks.all_equal && volume_total == volume_direct &&
                       flowvol::lidskii_points_binomial(g, a) == points_direct &&
                       flowvol::lidskii_points_multiset(g, a) == points_direct;
    return finish(report, args, report.agreement ? kExitAgree : kExitDisagree);
}

int run_tree(const CommonArgs& args, const std::string& kind, const std::string& format,
             const std::string& out_path, std::size_t node_cap) {
    const MultiDigraph g = flowvol::parse_graph(args.graph_spec);
    std::vector<long long> entries(static_cast<std::size_t>(g.n()), 1);
    bool defaulted_netflow = true;
    if (!args.netflow.empty()) {
        entries = flowvol::parse_netflow(args.netflow, g.n()).entries();
        defaulted_netflow = false;
    }

    const flowvol::ReductionTree tree = kind == "brt"
                                            ? flowvol::build_brt(g, node_cap)
                                            : flowvol::build_ccrt(g, Netflow(entries), node_cap);
    const std::string content =
        format == "json" ? flowvol::tree_to_json(tree) : flowvol::tree_to_dot(tree);

    if (out_path.empty()) {
        std::cout << content;
        if (content.empty() || content.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream file(out_path);
        if (!file) {
            std::cerr << "error: cannot write '" << out_path << "'\n";
            return kExitError;
        }
        file << content;

        RunReport report;
        report.command = "tree";
        echo_graph(report, args, g);
        report.request.emplace_back("kind", kind);
        report.request.emplace_back("format", format);
        std::size_t leaves = 0;
        for (const auto& node : tree.nodes)
            if (node.leaf) ++leaves;
        report.results.emplace_back("nodes", std::to_string(tree.nodes.size()));
        report.results.emplace_back("leaves", std::to_string(leaves));
        report.results.emplace_back("written", out_path);
        if (kind == "ccrt" && defaulted_netflow)
            report.notes.push_back("no netflow given; using all ones");
        if (tree.truncated) report.notes.push_back("tree truncated at the node cap");
        std::cout << (args.json ? flowvol::render_json(report, args.timings)
                                : flowvol::render_human(report, args.timings));
    }
    return tree.truncated ? kExitTruncated : kExitAgree;
}

int run_verify_cmd(const flowvol::VerifyOptions& options, bool json, bool timings) {
    const auto start = std::chrono::steady_clock::now();
    const flowvol::VerifyReport verify = flowvol::run_verify(options);
    const auto stop = std::chrono::steady_clock::now();

    RunReport report;
    report.command = "verify";
    report.request.emplace_back("corpus", options.corpus);
    report.request.emplace_back("seed", std::to_string(options.seed));
    report.request.emplace_back("trials", std::to_string(options.trials));
    report.request.emplace_back("max_n", std::to_string(options.max_n));
    report.request.emplace_back("max_m", std::to_string(options.max_m));
    report.request.emplace_back("max_a", std::to_string(options.max_a));

    flowvol::ReportTable table{"checks", {"check", "status", "cases", "detail"}, {}};
    long long passed = 0;
    for (const auto& check : verify.checks) {
        table.rows.push_back({check.name, check.passed ? "pass" : "FAIL",
                              std::to_string(check.cases), check.detail});
        if (check.passed) ++passed;
    }
    report.tables.push_back(std::move(table));
    report.results.emplace_back("checks_passed", std::to_string(passed) + "/" +
                                                     std::to_string(verify.checks.size()));
    report.results.emplace_back("total_cases", std::to_string(verify.total_cases));
    report.agreement_applicable = true;
    report.agreement = verify.all_passed;
    report.timings_ms.emplace_back(
        "verify", std::chrono::duration<double, std::milli>(stop - start).count());

    CommonArgs args;
    args.json = json;
    args.timings = timings;
    return finish(report, args, verify.all_passed ? kExitAgree : kExitDisagree);
}

struct FamilyArgs {
    std::string name;
    long long n = 0;
    long long d = 0;
    std::string c;
    std::string a;
    bool json = false;
    bool timings = false;
};

int run_family(const FamilyArgs& fam) {
    RunReport report;
    report.command = "family";
    report.request.emplace_back("name", fam.name);

    CommonArgs args;
    args.json = fam.json;
    args.timings = fam.timings;

    auto need_n = [&](long long minimum) {
        if (fam.n < minimum)
            flowvol::fail(flowvol::ErrorKind::BadParams,
                          fam.name + " needs --n >= " + std::to_string(minimum));
        report.request.emplace_back("n", std::to_string(fam.n));
        return fam.n;
    };
    auto need_vector = [&](const std::string& text, const char* key) {
        if (text.empty())
            flowvol::fail(flowvol::ErrorKind::BadParams,
                          fam.name + " needs --" + std::string(key));
        report.request.emplace_back(key, text);
        return flowvol::parse_integers(text);
    };
    auto set_agreement = [&](std::initializer_list<Int> values) {
        report.agreement_applicable = true;
        report.agreement = true;
        const Int& first = *values.begin();
        for (const Int& v : values) report.agreement = report.agreement && v == first;
    };

    if (fam.name == "catalan") {
        report.results.emplace_back("catalan", flowvol::catalan(need_n(0)).str());
    } else if (fam.name == "hook-staircase") {
        const long long n = need_n(0);
        const Int hooks = flowvol::hook_staircase(n);
        report.results.emplace_back("hook_staircase", hooks.str());
        if (n <= 6) {
            const Int brute = flowvol::staircase_syt_count(n);
            report.results.emplace_back("tableau_enumeration", brute.str());
            set_agreement({hooks, brute});
        }
    } else if (fam.name == "cry") {
        const long long n = need_n(2);
        const Int formula = flowvol::cry_volume(n);
        report.results.emplace_back("cry_volume", formula.str());
        if (n <= 6) {
            std::vector<long long> unit(static_cast<std::size_t>(n), 0);
            unit[0] = 1;
            const Int direct = timed(report, "lidskii", [&] {
                return flowvol::lidskii_volume(flowvol::complete_graph(static_cast<int>(n) + 1),
                                               Netflow(unit));
            });
            report.results.emplace_back("lidskii_volume", direct.str());
            set_agreement({formula, direct});
        }
    } else if (fam.name == "tesler") {
        const long long n = need_n(1);
        const Int formula = flowvol::tesler_volume(n);
        report.results.emplace_back("tesler_volume", formula.str());
        if (n <= 4) {
            const std::vector<long long> ones(static_cast<std::size_t>(n), 1);
            const Int direct = timed(report, "lidskii", [&] {
                return flowvol::lidskii_volume(flowvol::complete_graph(static_cast<int>(n) + 1),
                                               Netflow(ones));
            });
            report.results.emplace_back("lidskii_volume", direct.str());
            set_agreement({formula, direct});
        }
    } else if (fam.name == "ckm") {
        const long long n = need_n(2);
        const Int formula = flowvol::ckm_volume(n);
        report.results.emplace_back("ckm_volume", formula.str());
        if (n <= 6) {
            std::vector<long long> two_units(static_cast<std::size_t>(n), 0);
            two_units[0] = two_units[1] = 1;
            const Int direct = timed(report, "lidskii", [&] {
                return flowvol::lidskii_volume(flowvol::complete_graph(static_cast<int>(n) + 1),
                                               Netflow(two_units));
            });
            report.results.emplace_back("lidskii_volume", direct.str());
            set_agreement({formula, direct});
        }
    } else if (fam.name == "ps") {
        const auto a = need_vector(fam.a, "a");
        const MultiDigraph g = flowvol::pitman_stanley_graph(static_cast<int>(a.size()));
        const Int closed = flowvol::ps_volume(a);
        const Int words = flowvol::ps_word_volume(a);
        const Int direct = flowvol::lidskii_volume(g, Netflow(a));
        const Int lattice = flowvol::ps_lattice_count(a);
        const Int points = flowvol::kpf(g, Netflow(a).full());
        report.results.emplace_back("ps_volume", closed.str());
        report.results.emplace_back("ps_word_volume", words.str());
        report.results.emplace_back("lidskii_volume", direct.str());
        report.results.emplace_back("ps_lattice_count", lattice.str());
        report.results.emplace_back("kpf", points.str());
        report.agreement_applicable = true;
        report.agreement = closed == words && closed == direct && lattice == points;
    } else if (fam.name == "pic") {
        const auto c = need_vector(fam.c, "c");
        const auto a = need_vector(fam.a, "a");
        const MultiDigraph g = flowvol::pi_c_graph(c);
        const Int volume = flowvol::pic_volume(c, a);
        const Int direct = flowvol::lidskii_volume(g, Netflow(a));
        const Int binom = flowvol::pic_points_binomial(c, a);
        const Int multiset = flowvol::pic_points_multiset(c, a);
        const Int points = flowvol::kpf(g, Netflow(a).full());
        report.results.emplace_back("pic_volume", volume.str());
        report.results.emplace_back("lidskii_volume", direct.str());
        report.results.emplace_back("pic_points_binomial", binom.str());
        report.results.emplace_back("pic_points_multiset", multiset.str());
        report.results.emplace_back("kpf", points.str());
        report.agreement_applicable = true;
        report.agreement = volume == direct && binom == points && multiset == points;
    } else if (fam.name == "pic-star") {
        const auto c = need_vector(fam.c, "c");
        const Int determinant = flowvol::pic_star_volume(c);
        report.results.emplace_back("pic_star_volume", determinant.str());
        const MultiDigraph star = flowvol::star_graph(flowvol::pi_c_graph(c));
        std::vector<long long> unit(static_cast<std::size_t>(star.n()), 0);
        unit[0] = 1;
        const Int direct = flowvol::lidskii_volume(star, Netflow(unit));
        report.results.emplace_back("lidskii_volume", direct.str());
        set_agreement({determinant, direct});
    } else if (fam.name == "block") {
        const auto c = need_vector(fam.c, "c");
        if (c.size() != 1)
            flowvol::fail(flowvol::ErrorKind::BadParams, "block needs --c with one entry");
        const long long n = need_n(1);
        report.request.emplace_back("d", std::to_string(fam.d));
        const Int product = flowvol::ps_block_product(c[0], fam.d, n);
        report.results.emplace_back("ps_block_product", product.str());
        std::vector<long long> profile{c[0]};
        profile.insert(profile.end(), static_cast<std::size_t>(n - 1), fam.d);
        const Int determinant = flowvol::ps_lattice_count(profile);
        report.results.emplace_back("ps_lattice_count", determinant.str());
        set_agreement({product, determinant});
    } else if (fam.name == "parking") {
        const long long n = need_n(1);
        const auto words = flowvol::parking_functions(n);
        report.results.emplace_back("count", std::to_string(words.size()));
        const Int expected = flowvol::int_pow(Int(n + 1), n - 1);
        report.results.emplace_back("expected", expected.str());
        set_agreement({Int(words.size()), expected});
    } else {
        flowvol::fail(flowvol::ErrorKind::BadParams, "unknown family '" + fam.name + "'");
    }
    return finish(report, args, report.agreement ? kExitAgree : kExitDisagree);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact volumes, lattice points, Ehrhart polynomials, and subdivisions of "
                 "flow polytopes"};
    app.require_subcommand(1);

    CommonArgs volume_args, points_args, ehrhart_args, cells_args, tree_args;

    auto* volume = app.add_subcommand("volume", "Normalized volume of F_G(a)");
    volume->add_option("graph", volume_args.graph_spec, "Graph specification")->required();
    volume->add_option("--netflow", volume_args.netflow, "Free netflow entries a_1..a_n")
        ->required();
    volume->add_option("--method", volume_args.method, "lidskii|indegree|cells|oracle|all")
        ->check(CLI::IsMember({"lidskii", "indegree", "cells", "oracle", "all"}));
    volume->add_flag("--json", volume_args.json, "Machine-readable output");
    volume->add_flag("--timings", volume_args.timings, "Report per-method timings");

    auto* points = app.add_subcommand("points", "Lattice points of F_G(a)");
    points->add_option("graph", points_args.graph_spec, "Graph specification")->required();
    points->add_option("--netflow", points_args.netflow, "Free netflow entries a_1..a_n")
        ->required();
    points->add_option("--method", points_args.method, "oracle|binomial|multiset|indegree|all")
        ->check(CLI::IsMember({"oracle", "binomial", "multiset", "indegree", "all"}));
    points->add_flag("--json", points_args.json, "Machine-readable output");
    points->add_flag("--timings", points_args.timings, "Report per-method timings");

    bool ehrhart_poly_flag = false;
    long long ehrhart_t = 0;
    auto* ehrhart = app.add_subcommand("ehrhart", "Ehrhart polynomial of F_G(a)");
    ehrhart->add_option("graph", ehrhart_args.graph_spec, "Graph specification")->required();
    ehrhart->add_option("--netflow", ehrhart_args.netflow, "Free netflow entries a_1..a_n")
        ->required();
    ehrhart->add_flag("--poly", ehrhart_poly_flag, "Report the interpolated polynomial");
    auto* eval_opt = ehrhart->add_option("--eval", ehrhart_t, "Evaluate the t-th dilate count");
    ehrhart->add_flag("--json", ehrhart_args.json, "Machine-readable output");
    ehrhart->add_flag("--timings", ehrhart_args.timings, "Report timings");

    auto* cells = app.add_subcommand("cells", "Canonical cell census of F_G(a)");
    cells->add_option("graph", cells_args.graph_spec, "Graph specification")->required();
    cells->add_option("--netflow", cells_args.netflow, "Free netflow entries a_1..a_n")
        ->required();
    cells->add_flag("--json", cells_args.json, "Machine-readable output");
    cells->add_flag("--timings", cells_args.timings, "Report timings");

    std::string tree_kind = "ccrt", tree_format = "json", tree_out;
    std::size_t tree_cap = 100000;
    auto* tree = app.add_subcommand("tree", "Export a reduction tree");
    tree->add_option("graph", tree_args.graph_spec, "Graph specification")->required();
    tree->add_option("--netflow", tree_args.netflow,
                     "Free netflow entries (zero pattern steers the compounded tree)");
    tree->add_option("--kind", tree_kind, "ccrt|brt")
        ->check(CLI::IsMember({"ccrt", "brt"}));
    tree->add_option("--format", tree_format, "json|dot")
        ->check(CLI::IsMember({"json", "dot"}));
    tree->add_option("--out", tree_out, "Write the export to a file");
    tree->add_option("--node-cap", tree_cap, "Truncate the tree beyond this many nodes");
    tree->add_flag("--json", tree_args.json, "Machine-readable summary with --out");
    tree->add_flag("--timings", tree_args.timings, "Report timings");

    flowvol::VerifyOptions verify_options;
    bool verify_json = false, verify_timings = false;
    auto* verify = app.add_subcommand("verify", "Run the cross-method identity suite");
    verify->add_option("--corpus", verify_options.corpus, "random|builtin")
        ->check(CLI::IsMember({"random", "builtin"}));
    verify->add_option("--seed", verify_options.seed, "Random corpus seed");
    verify->add_option("--trials", verify_options.trials, "Random corpus size");
    verify->add_option("--max-n", verify_options.max_n, "Largest n");
    verify->add_option("--max-m", verify_options.max_m, "Largest edge count");
    verify->add_option("--max-a", verify_options.max_a, "Largest netflow entry");
    verify->add_flag("--json", verify_json, "Machine-readable output");
    verify->add_flag("--timings", verify_timings, "Report total timing");

    FamilyArgs family_args;
    auto* family = app.add_subcommand("family", "Closed-form family formulas");
    family
        ->add_option("name", family_args.name,
                     "catalan|hook-staircase|cry|tesler|ckm|ps|pic|pic-star|block|parking")
        ->required();
    family->add_option("--n", family_args.n, "Family index");
    family->add_option("--d", family_args.d, "Block profile repeat value");
    family->add_option("--c", family_args.c, "Profile c_1..c_n (comma separated)");
    family->add_option("--a", family_args.a, "Netflow entries (comma separated)");
    family->add_flag("--json", family_args.json, "Machine-readable output");
    family->add_flag("--timings", family_args.timings, "Report timings");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitError;
    }

    try {
        if (volume->parsed()) return run_volume(volume_args);
        if (points->parsed()) return run_points(points_args);
        if (ehrhart->parsed())
            return run_ehrhart(ehrhart_args, ehrhart_poly_flag,
                               eval_opt->count() > 0 ? std::optional<long long>(ehrhart_t)
                                                     : std::nullopt);
        if (cells->parsed()) return run_cells(cells_args);
        if (tree->parsed())
            return run_tree(tree_args, tree_kind, tree_format, tree_out, tree_cap);
        if (verify->parsed()) return run_verify_cmd(verify_options, verify_json, verify_timings);
        if (family->parsed()) return run_family(family_args);
    } catch (const flowvol::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
