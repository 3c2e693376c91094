#include "qgain/fuzz.hpp"

#include <algorithm>
#include <fstream>

#include "json.hpp"

#include "qgain/analysis.hpp"
#include "qgain/errors.hpp"
#include "qgain/generate.hpp"
#include "qgain/json_io.hpp"
#include "qgain/matrix.hpp"
#include "qgain/theorems.hpp"

namespace qgain {

namespace {

struct InstanceOutcome {
    bool ok = true;
    std::string detail;
    std::string artifact_kind;
    std::string artifact;
};

InstanceOutcome pass() { return {}; }

InstanceOutcome fail_graph(const GainGraph& g, std::string detail) {
    return {false, std::move(detail), "graph", serialize_graph(g)};
}

InstanceOutcome fail_matrix(const QMatrix& m, std::string detail) {
    return {false, std::move(detail), "matrix", serialize_matrix(m)};
}

InstanceOutcome fail_seed(Seed s, std::string detail) {
    nlohmann::ordered_json j;
    j["seed"] = s;
    return {false, std::move(detail), "seed", j.dump() + "\n"};
}

QMatrix random_matrix(Rng& rng, int max_dim) {
    const int rows = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_dim)));
    const int cols = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_dim)));
    QMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (!rng.chance(2, 5))
                m(r, c) = Quaternion(rng.small_rational(3, 3), rng.small_rational(3, 3),
                                     rng.small_rational(3, 3), rng.small_rational(3, 3));
    return m;
}

GainGraph delete_vertices(const GainGraph& g, std::vector<int> gone) {
    std::sort(gone.begin(), gone.end());
    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!std::binary_search(gone.begin(), gone.end(), v)) keep.push_back(v);
    return induced(g, keep).graph;
}

Skeleton skeleton_of(const GainGraph& g) {
    Skeleton s{g.vertex_count(), {}};
    for (const auto& e : g.edges()) s.edges.emplace_back(e.u, e.v);
    return s;
}

// --- lemmas suite ----------------------------------------------------------

InstanceOutcome p_quat_algebra(Seed s, int) {
    Rng rng(s);
    const Quaternion a = rng.seed_quaternion();
    const Quaternion b = rng.seed_quaternion();
    const Quaternion c = rng.seed_quaternion();
    if ((a * b) * c != a * (b * c)) return fail_seed(s, "product is not associative");
    if (conj(a * b) != conj(b) * conj(a))
        return fail_seed(s, "conjugation does not reverse products");
    if (norm_sq(a * b) != norm_sq(a) * norm_sq(b))
        return fail_seed(s, "norm is not multiplicative");
    if (inv(a) * a != Quaternion::one() || a * inv(a) != Quaternion::one())
        return fail_seed(s, "inverse is not two-sided");
    if (!is_unit(unit_from_seed(a))) return fail_seed(s, "unit_from_seed is not a unit");
    return pass();
}

InstanceOutcome p_transposition(Seed s, int) {
    Rng rng(s);
    const QMatrix m = random_matrix(rng, 8);
    if (rank(m, RankSide::row_left) != rank(m, RankSide::col_right))
        return fail_matrix(m, "left row rank != right column rank");
    if (rank(m, RankSide::row_right) != rank(m, RankSide::col_left))
        return fail_matrix(m, "right row rank != left column rank");
    return pass();
}

InstanceOutcome p_vertex_deletion(Seed s, int max_n) {
    Rng rng(s);
    const int n = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n - 1)));
    const GainGraph g = random_graph(n, split_seed(s, 1));
    const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    const int r = graph_rank(g);
    const int rd = graph_rank(delete_vertices(g, {v}));
    if (rd > r || rd < r - 2)
        return fail_graph(g, "deleting vertex " + std::to_string(v) + " took rank " +
                                 std::to_string(r) + " to " + std::to_string(rd));
    return pass();
}

InstanceOutcome p_pendant_deletion(Seed s, int max_n) {
    Rng rng(s);
    int n = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n - 1)));
    GainGraph g = random_graph(n, split_seed(s, 1));
    if (degrees(g).pendants.empty()) g = random_tree(std::max(2, n), split_seed(s, 2));
    const auto info = degrees(g);
    const int v = info.pendants.front();
    const int u = g.neighbors(v).front();
    const int whole = graph_rank(g);
    const int rest = graph_rank(delete_vertices(g, {v, u}));
    if (whole != rest + 2)
        return fail_graph(g, "pendant pair (" + std::to_string(v) + ", " + std::to_string(u) +
                                 "): rank " + std::to_string(whole) + " != " +
                                 std::to_string(rest) + " + 2");
    return pass();
}

InstanceOutcome p_component_sum(Seed s, int max_n) {
    Rng rng(s);
    const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n)));
    const GainGraph g = random_graph(n, split_seed(s, 1));
    int sum = 0;
    for (const auto& comp : components(g)) sum += graph_rank(induced(g, comp).graph);
    const int r = graph_rank(g);
    if (r != sum)
        return fail_graph(g, "rank " + std::to_string(r) + " != component sum " +
                                 std::to_string(sum));
    if ((r == 0) != (g.edge_count() == 0))
        return fail_graph(g, "zero rank should coincide with having no edges");
    return pass();
}

InstanceOutcome p_kab_rank2(Seed s, int) {
    Rng rng(s);
    const int a = 2 + static_cast<int>(rng.below(3));
    const int b = 2 + static_cast<int>(rng.below(3));
    const bool constructed = rng.chance(1, 3);
    const GainGraph g = constructed
                            ? rank2_kab(a, b, split_seed(s, 1))
                            : random_gains(complete_bipartite_skeleton(a, b), split_seed(s, 1));
    const bool full = all_c4_type1(g, true);
    const bool reduced = all_c4_type1_reduced(g);
    if (full != reduced) return fail_graph(g, "full and reduced 4-cycle scans disagree");
    const int r = graph_rank(g);
    if ((r == 2) != full)
        return fail_graph(g, "rank " + std::to_string(r) + " vs all-C4-Type-1 = " +
                                 (full ? "true" : "false"));
    if (constructed && !full) return fail_graph(g, "constructed rank-2 block has a bad 4-cycle");
    return pass();
}

InstanceOutcome p_tree_rank(Seed s, int max_n) {
    Rng rng(s);
    const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n)));
    const GainGraph g = random_tree(n, split_seed(s, 1));
    const int structural = tree_rank(g);
    const int eliminated = graph_rank(g);
    if (structural != eliminated)
        return fail_graph(g, "tree rank " + std::to_string(structural) + " != elimination " +
                                 std::to_string(eliminated));
    if (structural != 2 * max_matching(g).size())
        return fail_graph(g, "tree rank is not twice the matching number");
    const GainGraph regained = random_gains(skeleton_of(g), split_seed(s, 2));
    if (graph_rank(regained) != eliminated)
        return fail_graph(regained, "re-randomized gains changed a tree's rank");
    return pass();
}

InstanceOutcome p_reduce_rank(Seed s, int max_n) {
    Rng rng(s);
    const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n)));
    const GainGraph g = random_graph(n, split_seed(s, 1));
    const RankReport rep = reduce_rank(g);
    const int direct = graph_rank(g);
    if (rep.rank != direct)
        return fail_graph(g, "structural reduction " + std::to_string(rep.rank) +
                                 " != elimination " + std::to_string(direct));
    return pass();
}

// --- bounds suite ----------------------------------------------------------

int draw_isolated_free_cap(Rng& rng, int& n) {
    if (rng.chance(1, 5)) {
        n -= n % 2;
        if (n < 2) n = 2;
        return 1;
    }
    return 5;
}

InstanceOutcome p_general_bound(Seed s, int max_n) {
    Rng rng(s);
    int n = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n - 1)));
    const int cap = draw_isolated_free_cap(rng, n);
    const GainGraph g = random_isolated_free(n, cap, split_seed(s, 1));
    const BoundVerdict v = check_general_bound(g);
    if (!v.holds)
        return fail_graph(g, "rank " + std::to_string(v.rank) + " beat the bound " +
                                 v.bound.str());
    return pass();
}

InstanceOutcome p_connected_bound(Seed s, int max_n) {
    Rng rng(s);
    const int n = 3 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n - 2)));
    const GainGraph g = random_connected(n, 5, split_seed(s, 1));
    const BoundVerdict v = check_connected_bound(g);
    if (!v.holds)
        return fail_graph(g, "rank " + std::to_string(v.rank) + " beat the bound " +
                                 v.bound.str());
    return pass();
}

InstanceOutcome p_general_extremal(Seed s, int max_n) {
    Rng rng(s);
    if (rng.chance(1, 4)) {
        const int delta = 1 + static_cast<int>(rng.below(3));
        const int copies = 1 + static_cast<int>(rng.below(2));
        const int n = 2 * delta * copies;
        const GainGraph g = extremal_union(n, delta, split_seed(s, 1));
        const BoundVerdict v = check_general_bound(g);
        if (!v.tight) return fail_graph(g, "constructed extremal union is not tight");
        if (!is_extremal_general(g))
            return fail_graph(g, "constructed extremal union not recognized");
        if (v.rank * delta != n)
            return fail_graph(g, "constructed extremal union has rank " +
                                     std::to_string(v.rank) + ", wanted n/delta");
        return pass();
    }
    int n = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n - 1)));
    const int cap = draw_isolated_free_cap(rng, n);
    const GainGraph g = random_isolated_free(n, cap, split_seed(s, 1));
    const bool tight = check_general_bound(g).tight;
    const bool recognized = is_extremal_general(g);
    if (tight != recognized)
        return fail_graph(g, std::string("tight = ") + (tight ? "true" : "false") +
                                 " but recognizer said " + (recognized ? "true" : "false"));
    return pass();
}

InstanceOutcome p_connected_extremal(Seed s, int max_n) {
    Rng rng(s);
    if (rng.chance(1, 4)) {
        GainGraph g = rng.chance(1, 2)
                          ? type1_cycle(4 + 2 * static_cast<int>(rng.below(
                                                static_cast<std::uint64_t>(max_n / 2 - 1))),
                                        split_seed(s, 1))
                          : [&] {
                                const int a = 2 + static_cast<int>(rng.below(3));
                                return rank2_kab(a, a, split_seed(s, 1));
                            }();
        const BoundVerdict v = check_connected_bound(g);
        if (!v.tight) return fail_graph(g, "constructed extremal instance is not tight");
        if (!is_extremal_connected(g))
            return fail_graph(g, "constructed extremal instance not recognized");
        return pass();
    }
    const int n = 3 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n - 2)));
    const GainGraph g = random_connected(n, 5, split_seed(s, 1));
    const bool tight = check_connected_bound(g).tight;
    const bool recognized = is_extremal_connected(g);
    if (tight != recognized)
        return fail_graph(g, std::string("tight = ") + (tight ? "true" : "false") +
                                 " but recognizer said " + (recognized ? "true" : "false"));
    return pass();
}

struct PropertyDef {
    const char* name;
    const char* suite;
    InstanceOutcome (*fn)(Seed, int);
};

constexpr PropertyDef kProperties[] = {
    {"quat-algebra", "lemmas", p_quat_algebra},
    {"transposition-identities", "lemmas", p_transposition},
    {"vertex-deletion-bounds", "lemmas", p_vertex_deletion},
    {"pendant-deletion", "lemmas", p_pendant_deletion},
    {"component-sum", "lemmas", p_component_sum},
    {"kab-rank2-iff", "lemmas", p_kab_rank2},
    {"tree-rank-gain-free", "lemmas", p_tree_rank},
    {"reduce-equals-elimination", "lemmas", p_reduce_rank},
    {"general-bound", "bounds", p_general_bound},
    {"connected-bound", "bounds", p_connected_bound},
    {"general-extremal-iff", "bounds", p_general_extremal},
    {"connected-extremal-iff", "bounds", p_connected_extremal},
};

std::uint64_t fnv1a(const char* text) {
    std::uint64_t h = 1469598103934665603ull;
    for (const char* p = text; *p; ++p) {
        h ^= static_cast<unsigned char>(*p);
        h *= 1099511628211ull;
    }
    return h;
}

InstanceOutcome run_instance(const PropertyDef& def, Seed instance_seed, int max_n) {
    try {
        return def.fn(instance_seed, max_n);
    } catch (const std::exception& e) {
        auto outcome = fail_seed(instance_seed, std::string("exception: ") + e.what());
        return outcome;
    }
}

} // namespace

std::vector<std::string> suite_names() { return {"lemmas", "bounds", "all"}; }

FuzzReport run_fuzz(const FuzzOptions& opt) {
    if (opt.suite != "lemmas" && opt.suite != "bounds" && opt.suite != "all")
        throw precondition_error("unknown suite '" + opt.suite + "'");
    if (opt.count < 1) throw precondition_error("instance count must be positive");
    if (opt.max_n < 2) throw precondition_error("max instance size must be at least 2");

    FuzzReport report;
    for (const auto& def : kProperties) {
        if (opt.suite != "all" && opt.suite != def.suite) continue;
        const Seed property_seed = split_seed(opt.seed, fnv1a(def.name));
        std::vector<InstanceOutcome> outcomes(opt.count);
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < opt.count; ++i)
            outcomes[i] = run_instance(def, split_seed(property_seed, static_cast<std::uint64_t>(i)),
                                       opt.max_n);
        PropertyTally tally{def.name, 0, 0};
        for (int i = 0; i < opt.count; ++i) {
            if (outcomes[i].ok) {
                ++tally.passed;
                continue;
            }
            ++tally.failed;
            report.failures.push_back({def.name, i, outcomes[i].detail,
                                       outcomes[i].artifact, outcomes[i].artifact_kind});
        }
        report.tallies.push_back(std::move(tally));
    }
    return report;
}

std::vector<std::string> dump_failures(const FuzzReport& report, const std::string& dir,
                                       int limit) {
    std::vector<std::string> paths;
    std::string last_property;
    int dumped_for_property = 0;
    for (const auto& f : report.failures) {
        if (f.property != last_property) {
            last_property = f.property;
            dumped_for_property = 0;
        }
        if (dumped_for_property >= limit) continue;
        const std::string path =
            dir + "/fuzz_fail_" + f.property + "_" + std::to_string(f.index) + ".json";
        std::ofstream out(path);
        if (!out) throw parse_error("cannot write failure artifact " + path);
        out << f.artifact;
        paths.push_back(path);
        ++dumped_for_property;
    }
    return paths;
}

} // namespace qgain
