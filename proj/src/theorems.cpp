#include "qgain/theorems.hpp"

#include <algorithm>

#include "json.hpp"

#include "qgain/analysis.hpp"
#include "qgain/errors.hpp"

namespace qgain {

namespace {

// Vertex order of a connected 2-regular graph, starting at vertex 0 toward
// its smaller neighbor.
std::vector<int> cycle_order(const GainGraph& g) {
    std::vector<int> cycle{0};
    int prev = 0;
    int cur = g.neighbors(0)[0];
    while (cur != 0) {
        cycle.push_back(cur);
        for (int w : g.neighbors(cur))
            if (w != prev) {
                prev = cur;
                cur = w;
                break;
            }
    }
    return cycle;
}

bool is_bare_cycle(const GainGraph& g) {
    if (g.vertex_count() < 3 || !is_connected(g)) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.neighbors(v).size() != 2) return false;
    return true;
}

} // namespace

std::string to_json(const BoundVerdict& v) {
    nlohmann::ordered_json j;
    j["n"] = v.n;
    j["delta"] = v.delta;
    j["rank"] = v.rank;
    j["bound"] = v.bound.str();
    j["holds"] = v.holds;
    j["tight"] = v.tight;
    return j.dump();
}

BoundVerdict check_general_bound(const GainGraph& g) {
    const auto info = degrees(g);
    if (g.vertex_count() == 0)
        throw precondition_error("general bound needs at least one vertex");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (info.degree[v] == 0)
            throw precondition_error("general bound requires no isolated vertices; vertex " +
                                     std::to_string(v) + " is isolated");
    BoundVerdict verdict;
    verdict.n = g.vertex_count();
    verdict.delta = info.max_degree;
    verdict.rank = graph_rank(g);
    verdict.bound = Rational(verdict.n, verdict.delta);
    verdict.holds = verdict.rank >= verdict.bound.ceil_long();
    verdict.tight = Rational(verdict.rank) == verdict.bound;
    return verdict;
}

BoundVerdict check_connected_bound(const GainGraph& g) {
    if (g.vertex_count() == 0 || !is_connected(g))
        throw precondition_error("connected bound requires a connected graph");
    const auto info = degrees(g);
    if (info.max_degree < 2)
        throw precondition_error("connected bound requires max degree >= 2");
    BoundVerdict verdict;
    verdict.n = g.vertex_count();
    verdict.delta = info.max_degree;
    verdict.rank = graph_rank(g);
    verdict.bound = Rational(verdict.n - 2, verdict.delta - 1);
    verdict.holds = verdict.rank >= verdict.bound.ceil_long();
    verdict.tight = Rational(verdict.rank) == verdict.bound;
    return verdict;
}

std::vector<std::vector<int>> complete_bipartite_parts(const GainGraph& g) {
    const int n = g.vertex_count();
    if (n < 2 || !is_connected(g)) return {};
    std::vector<int> color(n, -1);
    color[0] = 0;
    std::vector<int> queue{0};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const int v = queue[qi];
        for (int w : g.neighbors(v)) {
            if (color[w] < 0) {
                color[w] = 1 - color[v];
                queue.push_back(w);
            } else if (color[w] == color[v]) {
                return {};
            }
        }
    }
    std::vector<std::vector<int>> parts(2);
    for (int v = 0; v < n; ++v) parts[color[v]].push_back(v);
    // Bipartite and simple: complete iff every cross pair is present.
    const long long a = static_cast<long long>(parts[0].size());
    const long long b = static_cast<long long>(parts[1].size());
    if (static_cast<long long>(g.edge_count()) != a * b) return {};
    return parts;
}

bool all_c4_type1(const GainGraph& g, bool part_check) {
    if (part_check) {
        const auto parts = complete_bipartite_parts(g);
        if (parts.empty() || parts[0].size() < 2 || parts[1].size() < 2)
            throw precondition_error(
                "not a complete bipartite graph with both sides of size >= 2");
    }
    for (const auto& cycle : enumerate_cycles(g, 4)) {
        if (cycle.size() != 4) continue;
        if (classify_cycle(g, cycle) != CycleType::type1) return false;
    }
    return true;
}

bool all_c4_type1_reduced(const GainGraph& g) {
    const auto parts = complete_bipartite_parts(g);
    if (parts.empty() || parts[0].size() < 2 || parts[1].size() < 2)
        throw precondition_error("not a complete bipartite graph with both sides of size >= 2");
    const int u1 = parts[0][0];
    const int v1 = parts[1][0];
    for (std::size_t i = 1; i < parts[0].size(); ++i)
        for (std::size_t j = 1; j < parts[1].size(); ++j)
            if (classify_cycle(g, {u1, v1, parts[0][i], parts[1][j]}) != CycleType::type1)
                return false;
    return true;
}

bool is_extremal_general(const GainGraph& g) {
    const auto info = degrees(g);
    if (g.vertex_count() == 0)
        throw precondition_error("extremal check needs at least one vertex");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (info.degree[v] == 0)
            throw precondition_error("extremal check requires no isolated vertices; vertex " +
                                     std::to_string(v) + " is isolated");
    const int delta = info.max_degree;
    for (const auto& comp : components(g)) {
        if (static_cast<int>(comp.size()) != 2 * delta) return false;
        const GainGraph sub = induced(g, comp).graph;
        const auto parts = complete_bipartite_parts(sub);
        if (parts.empty()) return false;
        if (static_cast<int>(parts[0].size()) != delta ||
            static_cast<int>(parts[1].size()) != delta)
            return false;
        if (delta >= 2 && !all_c4_type1(sub, false)) return false;
    }
    return true;
}

bool is_extremal_connected(const GainGraph& g) {
    if (g.vertex_count() == 0 || !is_connected(g))
        throw precondition_error("extremal check requires a connected graph");
    if (degrees(g).max_degree < 2)
        throw precondition_error("extremal check requires max degree >= 2");
    if (is_bare_cycle(g))
        if (classify_cycle(g, cycle_order(g)) == CycleType::type1) return true;
    const auto parts = complete_bipartite_parts(g);
    if (parts.empty() || parts[0].size() != parts[1].size()) return false;
    return all_c4_type1(g, false);
}

} // namespace qgain
