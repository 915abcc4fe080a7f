#include "flowvol/verify.hpp"

#include "flowvol/error.hpp"
#include "flowvol/families.hpp"
#include "flowvol/graph.hpp"
#include "flowvol/kostant.hpp"
#include "flowvol/lidskii.hpp"
#include "flowvol/subdivision.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <utility>

namespace flowvol {

namespace {

struct Instance {
    MultiDigraph graph;
    std::vector<long long> a;  // free netflow entries, nonnegative
};

std::string describe(const Instance& inst) {
    std::ostringstream os;
    os << inst.graph.to_string() << " a=(";
    for (std::size_t i = 0; i < inst.a.size(); ++i) {
        if (i > 0) os << ",";
        os << inst.a[i];
    }
    os << ")";
    return os.str();
}

// Accumulates one named check over many instances, keeping the first failure.
class Check {
  public:
    explicit Check(std::string name) { result_.name = std::move(name); }

    void expect(bool ok, const std::string& context) {
        ++result_.cases;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.detail = context;
        }
    }

    CheckResult take() { return std::move(result_); }

  private:
    CheckResult result_;
};

// Engine-independent bounded draw so corpora are reproducible everywhere.
long long draw(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Path backbone 1-2-...-(n+1) plus random forward edges: every inner vertex
// keeps incoming and outgoing edges, so all formula routes apply.
Instance random_instance(std::mt19937_64& rng, const VerifyOptions& opt) {
    const int n = static_cast<int>(draw(rng, 1, opt.max_n));
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) edges.emplace_back(i, i + 1);
    const long long extras = draw(rng, 0, std::max(0, opt.max_m - n));
    for (long long e = 0; e < extras; ++e) {
        const int u = static_cast<int>(draw(rng, 1, n));
        const int v = static_cast<int>(draw(rng, u + 1, n + 1));
        edges.emplace_back(u, v);
    }
    std::sort(edges.begin(), edges.end());
    std::vector<long long> a;
    for (int i = 0; i < n; ++i) a.push_back(draw(rng, 0, opt.max_a));
    return {MultiDigraph(n, std::move(edges)), std::move(a)};
}

std::vector<Instance> build_corpus(const VerifyOptions& opt) {
    std::vector<Instance> corpus;
    if (opt.corpus == "builtin") {
        corpus.push_back({complete_graph(4), {1, 1, 1}});
        corpus.push_back({complete_graph(4), {1, 1, 0}});
        corpus.push_back({complete_graph(4), {1, 0, 0}});
        corpus.push_back({complete_graph(5), {1, 1, 1, 1}});
        corpus.push_back({complete_graph(5), {1, 0, 0, 0}});
        corpus.push_back({pitman_stanley_graph(1), {2}});
        corpus.push_back({pitman_stanley_graph(2), {3, 1}});
        corpus.push_back({pitman_stanley_graph(3), {1, 1, 1}});
        corpus.push_back({pitman_stanley_graph(4), {1, 2, 0, 1}});
        corpus.push_back({MultiDigraph(2, {{1, 2}, {1, 2}, {2, 3}, {2, 3}}), {1, 1}});
        corpus.push_back({MultiDigraph(1, {{1, 2}}), {3}});
        corpus.push_back({pi_c_graph({2, 1}), {1, 1}});
        corpus.push_back({pi_c_graph({1, 0, 2}), {1, 2, 1}});
        return corpus;
    }
    if (opt.corpus != "random")
        fail(ErrorKind::BadParams, "corpus must be 'random' or 'builtin'");
    std::mt19937_64 rng(opt.seed);
    for (int t = 0; t < opt.trials; ++t) corpus.push_back(random_instance(rng, opt));
    return corpus;
}

Int robust_volume(const MultiDigraph& g, const std::vector<long long>& a) {
    const Netflow netflow(a);
    return g.has_outgoing_all() ? lidskii_volume(g, netflow) : volume_oracle(g, netflow);
}

int first_active_vertex(const MultiDigraph& g) {
    for (int v = g.n(); v >= 2; --v)
        if (g.indeg(v) > 0 && g.outdeg(v) > 0) return v;
    return 0;
}

CheckResult check_volume_vs_oracle(const std::vector<Instance>& corpus) {
    Check check("volume-lidskii-vs-oracle");
    for (const auto& inst : corpus) {
        const Netflow a(inst.a);
        check.expect(lidskii_volume(inst.graph, a) == volume_oracle(inst.graph, a),
                     describe(inst));
    }
    return check.take();
}

CheckResult check_points_formulas(const std::vector<Instance>& corpus) {
    Check check("points-binomial-multiset-kpf");
    for (const auto& inst : corpus) {
        const Netflow a(inst.a);
        const Int direct = kpf(inst.graph, a.full());
        check.expect(lidskii_points_binomial(inst.graph, a) == direct, describe(inst));
        check.expect(lidskii_points_multiset(inst.graph, a) == direct, describe(inst));
    }
    return check.take();
}

CheckResult check_reversal(const std::vector<Instance>& corpus) {
    Check check("kpf-reversal");
    for (const auto& inst : corpus) {
        const std::vector<long long> full = Netflow(inst.a).full();
        std::vector<long long> reversed_negated(full.rbegin(), full.rend());
        for (long long& x : reversed_negated) x = -x;
        check.expect(kpf(inst.graph, full) == kpf(reverse(inst.graph), reversed_negated),
                     describe(inst));
    }
    return check.take();
}

CheckResult check_indegree_route(const std::vector<Instance>& corpus) {
    Check check("indegree-route");
    for (const auto& inst : corpus) {
        const std::vector<long long>& b = inst.a;
        const std::vector<long long> b_reversed(b.rbegin(), b.rend());
        check.expect(volume_indegree(inst.graph, b) ==
                         lidskii_volume(reverse(inst.graph), Netflow(b_reversed)),
                     describe(inst));

        std::vector<long long> full{std::accumulate(b.begin(), b.end(), 0LL)};
        for (long long x : b) full.push_back(-x);
        check.expect(points_indegree(inst.graph, b) == kpf(inst.graph, full), describe(inst));
    }
    return check.take();
}

CheckResult check_flow_tree_roundtrip(const std::vector<Instance>& corpus) {
    Check check("flow-tree-roundtrip");
    for (const auto& inst : corpus) {
        const MultiDigraph& g = inst.graph;
        for (const auto& term : lidskii_terms(g).terms) {
            if (term.kpf_factor == 0) continue;
            std::vector<long long> m;
            for (long long ji : term.j) m.push_back(ji + 1);
            const DegreeProfile deg = degree_profile(g);
            std::vector<long long> netflow;
            for (std::size_t i = 0; i < m.size(); ++i)
                netflow.push_back(m[i] - deg.outdeg[i]);
            netflow.push_back(0);

            const FlowEnumeration enumeration = kpf_count_via_flows(g, netflow);
            check.expect(enumeration.count == term.kpf_factor, describe(inst));
            for (const FlowAssignment& flow : *enumeration.flows) {
                const auto trees = phi_bijection(g, m, flow);
                check.expect(psi_inverse(g, trees) == flow, describe(inst));
            }
        }
    }
    return check.take();
}

CheckResult check_leaf_census(const std::vector<Instance>& corpus) {
    Check check("leaf-census");
    for (const auto& inst : corpus) {
        const MultiDigraph& g = inst.graph;
        std::map<std::vector<long long>, Int> expected;
        for (const auto& term : lidskii_terms(g).terms) {
            if (term.kpf_factor == 0) continue;
            std::vector<long long> m;
            for (long long ji : term.j) m.push_back(ji + 1);
            expected[m] = term.kpf_factor;
        }

        const ReductionTree brt = build_brt(g);
        check.expect(!brt.truncated, describe(inst) + " [brt truncated]");
        std::map<std::vector<long long>, Int> brt_census;
        for (const auto& node : brt.nodes)
            if (node.leaf && node.full_dimensional) {
                std::vector<long long> m;
                for (int v = 1; v <= g.n(); ++v) m.push_back(node.graph.outdeg(v));
                brt_census[m] += 1;
            }
        check.expect(brt_census == expected, describe(inst) + " [brt]");

        const std::vector<long long> ones(static_cast<std::size_t>(g.n()), 1);
        const ReductionTree ccrt = build_ccrt(g, Netflow(ones));
        check.expect(!ccrt.truncated, describe(inst) + " [ccrt truncated]");
        std::map<std::vector<long long>, Int> ccrt_census;
        for (const auto& node : ccrt.nodes)
            if (node.leaf) {
                check.expect(node.full_dimensional, describe(inst) + " [ccrt leaf]");
                std::vector<long long> m;
                for (int v = 1; v <= g.n(); ++v) m.push_back(node.graph.outdeg(v));
                ccrt_census[m] += 1;
            }
        check.expect(ccrt_census == expected, describe(inst) + " [ccrt]");
    }
    return check.take();
}

CheckResult check_brt_contributions(const std::vector<Instance>& corpus) {
    Check check("brt-contributions");
    for (const auto& inst : corpus) {
        const Int direct = kpf(inst.graph, Netflow(inst.a).full());
        for (ContributionMode mode : {ContributionMode::Out, ContributionMode::In}) {
            Int total = 0;
            for (const auto& leaf : brt_leaves(inst.graph, Netflow(inst.a), mode)) {
                if (!leaf.full_dimensional)
                    check.expect(leaf.contribution == 0, describe(inst) + " [lower-dim leaf]");
                total += leaf.contribution;
            }
            check.expect(total == direct, describe(inst) + " [leaf sum]");
        }
    }
    return check.take();
}

CheckResult check_reduction_additivity(const std::vector<Instance>& corpus) {
    Check check("reduction-additivity");
    for (const auto& inst : corpus) {
        const MultiDigraph& g = inst.graph;
        const int v = first_active_vertex(g);
        if (v == 0) continue;
        const Int whole = robust_volume(g, inst.a);

        // The basic split compares f(e1) with f(e2); when v has one in-edge,
        // one out-edge and zero netflow, conservation pins f(e1) = f(e2) on
        // the whole polytope and both pieces coincide with it, so the split
        // only subdivides when that degenerate case is excluded.
        const bool pinned_split = g.indeg(v) == 1 && g.outdeg(v) == 1 &&
                                  inst.a[static_cast<std::size_t>(v - 1)] == 0;
        if (!pinned_split) {
            const auto [g1, g2] =
                basic_reduction(g, g.in_edges(v).front(), g.out_edges(v).front());
            check.expect(whole == robust_volume(g1, inst.a) + robust_volume(g2, inst.a),
                         describe(inst) + " [basic]");
        }

        const bool positive = inst.a[static_cast<std::size_t>(v - 1)] > 0;
        const long long l = g.indeg(v) + (positive ? 1 : 0);
        Int pieces = 0;
        for (const auto& t : noncrossing_trees(l, g.outdeg(v)))
            pieces += robust_volume(compounded_reduction(g, v, positive, t), inst.a);
        check.expect(whole == pieces, describe(inst) + " [compounded]");
    }
    return check.take();
}

CheckResult check_cell_count_crosschecks(const std::vector<Instance>& corpus) {
    Check check("cell-count-crosschecks");
    for (const auto& inst : corpus) {
        const CellCountCrosschecks crosschecks = num_cells_crosschecks(inst.graph);
        check.expect(crosschecks.all_equal && crosschecks.explicit_count.has_value(),
                     describe(inst));
    }
    return check.take();
}

CheckResult check_cell_type_determinants(const std::vector<Instance>& corpus) {
    Check check("cell-type-determinants");
    for (const auto& inst : corpus) {
        const Int determinant = num_cell_types(inst.graph);
        check.expect(determinant == num_cell_types_enumerated(inst.graph),
                     describe(inst) + " [enumerated]");
        const DegreeProfile deg = degree_profile(inst.graph);
        const std::vector<long long> out(deg.out.begin(), deg.out.begin() + inst.graph.n());
        const std::vector<long long> reversed_tail(out.rbegin(), out.rend() - 1);
        check.expect(determinant == ps_lattice_count(reversed_tail),
                     describe(inst) + " [pitman-stanley]");
    }
    return check.take();
}

CheckResult check_unit_volume_identities(const std::vector<Instance>& corpus) {
    Check check("unit-volume-identities");
    for (const auto& inst : corpus) {
        const UnitVolumeIdentities ids = unit_volume_identities(inst.graph);
        check.expect(ids.volume == ids.rhs_out && ids.volume == ids.rhs_in, describe(inst));
    }
    return check.take();
}

CheckResult check_words_total(const std::vector<Instance>& corpus) {
    Check check("words-total");
    for (const auto& inst : corpus) {
        const std::vector<long long> ones(static_cast<std::size_t>(inst.graph.n()), 1);
        check.expect(words_total(inst.graph) == lidskii_volume(inst.graph, Netflow(ones)),
                     describe(inst));
    }
    return check.take();
}

std::string describe_vector(const char* name, const std::vector<long long>& v) {
    std::ostringstream os;
    os << name << "=(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::string describe_vectors(const char* name1, const std::vector<long long>& v1,
                             const char* name2, const std::vector<long long>& v2) {
    return describe_vector(name1, v1) + " " + describe_vector(name2, v2);
}

CheckResult check_pitman_stanley(const VerifyOptions& opt) {
    Check check("pitman-stanley-closed-forms");
    std::mt19937_64 rng(opt.seed + 1);
    const int rounds = opt.corpus == "builtin" ? 8 : std::max(8, opt.trials / 4);
    for (int round = 0; round < rounds; ++round) {
        const int n = static_cast<int>(draw(rng, 1, opt.max_n));
        std::vector<long long> a;
        for (int i = 0; i < n; ++i) a.push_back(draw(rng, 0, opt.max_a));
        const std::string context = describe_vector("a", a);

        const MultiDigraph g = pitman_stanley_graph(n);
        const Int volume = ps_volume(a);
        check.expect(volume == lidskii_volume(g, Netflow(a)), context + " [volume]");
        check.expect(volume == ps_word_volume(a), context + " [word volume]");
        check.expect(ps_lattice_count(a) == kpf(g, Netflow(a).full()), context + " [points]");
    }
    for (long long c = 0; c <= 3; ++c)
        for (long long d = 0; d <= 3; ++d)
            for (long long n = 1; n <= 5; ++n) {
                std::vector<long long> profile{c};
                profile.insert(profile.end(), static_cast<std::size_t>(n - 1), d);
                std::ostringstream os;
                os << "c=" << c << " d=" << d << " n=" << n;
                check.expect(ps_block_product(c, d, n) == ps_lattice_count(profile), os.str());
            }
    return check.take();
}

CheckResult check_pi_c(const VerifyOptions& opt) {
    Check check("pi-c-closed-forms");
    std::mt19937_64 rng(opt.seed + 2);
    const int rounds = opt.corpus == "builtin" ? 8 : std::max(8, opt.trials / 4);
    for (int round = 0; round < rounds; ++round) {
        const int n = static_cast<int>(draw(rng, 1, opt.max_n));
        std::vector<long long> c, a;
        for (int i = 0; i < n; ++i) {
            c.push_back(draw(rng, 0, 2));
            a.push_back(draw(rng, 0, opt.max_a));
        }
        const std::string context = describe_vectors("c", c, "a", a);

        const MultiDigraph g = pi_c_graph(c);
        check.expect(pic_volume(c, a) == lidskii_volume(g, Netflow(a)), context + " [volume]");
        const Int direct = kpf(g, Netflow(a).full());
        check.expect(pic_points_binomial(c, a) == direct, context + " [binomial]");
        check.expect(pic_points_multiset(c, a) == direct, context + " [multiset]");

        const MultiDigraph star = star_graph(g);
        std::vector<long long> unit(static_cast<std::size_t>(star.n()), 0);
        unit[0] = 1;
        check.expect(pic_star_volume(c) == lidskii_volume(star, Netflow(unit)),
                     context + " [star]");
    }
    return check.take();
}

CheckResult check_ehrhart_positivity(const VerifyOptions& opt) {
    Check check("ehrhart-positivity");
    check.expect(ehrhart_positivity_check({1, 1, 1}, {1, 1, 1}, 3), "c=(1,1,1) a=(1,1,1)");
    std::mt19937_64 rng(opt.seed + 3);
    const int rounds = opt.corpus == "builtin" ? 8 : std::max(8, opt.trials / 8);
    for (int round = 0; round < rounds; ++round) {
        const int n = static_cast<int>(draw(rng, 1, std::min(3, opt.max_n)));
        std::vector<long long> c, a;
        for (int i = 0; i < n; ++i) {
            c.push_back(draw(rng, 0, 2));
            a.push_back(draw(rng, 0, opt.max_a));
        }
        check.expect(ehrhart_positivity_check(c, a, 2), describe_vectors("c", c, "a", a));
    }
    return check.take();
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
    const std::vector<Instance> corpus = build_corpus(options);

    VerifyReport report;
    report.checks.push_back(check_volume_vs_oracle(corpus));
    report.checks.push_back(check_points_formulas(corpus));
    report.checks.push_back(check_reversal(corpus));
    report.checks.push_back(check_indegree_route(corpus));
    report.checks.push_back(check_flow_tree_roundtrip(corpus));
    report.checks.push_back(check_leaf_census(corpus));
    report.checks.push_back(check_brt_contributions(corpus));
    report.checks.push_back(check_reduction_additivity(corpus));
    report.checks.push_back(check_cell_count_crosschecks(corpus));
    report.checks.push_back(check_cell_type_determinants(corpus));
    report.checks.push_back(check_unit_volume_identities(corpus));
    report.checks.push_back(check_words_total(corpus));
    report.checks.push_back(check_pitman_stanley(options));
    report.checks.push_back(check_pi_c(options));
    report.checks.push_back(check_ehrhart_positivity(options));

    report.all_passed = true;
    report.total_cases = 0;
    for (const auto& check : report.checks) {
        report.all_passed = report.all_passed && check.passed;
        report.total_cases += check.cases;
    }
    return report;
}

}  // namespace flowvol
