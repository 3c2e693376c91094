#include "qgain/analysis.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "qgain/errors.hpp"
#include "qgain/matrix.hpp"

namespace qgain {

namespace {

void check_cycle(const GainGraph& g, const std::vector<int>& cycle) {
    const int n = static_cast<int>(cycle.size());
    if (n < 3) throw precondition_error("not a cycle: needs at least 3 vertices");
    std::set<int> distinct(cycle.begin(), cycle.end());
    if (static_cast<int>(distinct.size()) != n)
        throw precondition_error("not a cycle: repeated vertex");
    for (int i = 0; i < n; ++i) {
        const int u = cycle[i];
        const int v = cycle[(i + 1) % n];
        if (u < 0 || u >= g.vertex_count())
            throw precondition_error("not a cycle: vertex " + std::to_string(u) +
                                     " out of range");
        if (!g.has_edge(u, v))
            throw precondition_error("not a cycle: " + std::to_string(u) + " and " +
                                     std::to_string(v) + " are not adjacent");
    }
}

} // namespace

std::string to_string(CycleType t) {
    switch (t) {
        case CycleType::type1: return "Type 1";
        case CycleType::type2: return "Type 2";
        case CycleType::type3: return "Type 3";
        default: return "Type 4";
    }
}

int type_number(CycleType t) {
    switch (t) {
        case CycleType::type1: return 1;
        case CycleType::type2: return 2;
        case CycleType::type3: return 3;
        default: return 4;
    }
}

Quaternion cycle_gain(const GainGraph& g, const std::vector<int>& cycle) {
    check_cycle(g, cycle);
    Quaternion prod = Quaternion::one();
    const int n = static_cast<int>(cycle.size());
    for (int i = 0; i < n; ++i) prod *= g.gain(cycle[i], cycle[(i + 1) % n]);
    return prod;
}

CycleType classify_cycle(const GainGraph& g, const std::vector<int>& cycle) {
    const Quaternion phi = cycle_gain(g, cycle);
    const int n = static_cast<int>(cycle.size());
    if (n % 2 == 0) {
        const Quaternion target((n / 2) % 2 == 0 ? 1 : -1);
        return phi == target ? CycleType::type1 : CycleType::type2;
    }
    const Rational signed_re = ((n - 1) / 2) % 2 == 0 ? re(phi) : -re(phi);
    return signed_re.is_zero() ? CycleType::type4 : CycleType::type3;
}

int path_rank(int n) {
    if (n < 1) throw precondition_error("path needs at least one vertex");
    return n % 2 == 1 ? n - 1 : n;
}

int cycle_rank(const GainGraph& g, const std::vector<int>& cycle) {
    const int n = static_cast<int>(cycle.size());
    switch (classify_cycle(g, cycle)) {
        case CycleType::type1: return n - 2;
        case CycleType::type4: return n - 1;
        default: return n;
    }
}

std::vector<std::vector<int>> enumerate_cycles(const GainGraph& g, int max_len) {
    std::vector<std::vector<int>> out;
    if (max_len < 3) return out;
    const int n = g.vertex_count();
    std::vector<char> in_path(n, 0);
    std::vector<int> path;
    // Each cycle is found exactly once: started at its smallest vertex and
    // walked in the direction whose second vertex beats the last.
    std::function<void(int, int)> grow = [&](int start, int v) {
        for (int w : g.neighbors(v)) {
            if (w == start && path.size() >= 3 && path[1] < path.back())
                out.push_back(path);
            if (w <= start || in_path[w] || static_cast<int>(path.size()) >= max_len)
                continue;
            in_path[w] = 1;
            path.push_back(w);
            grow(start, w);
            path.pop_back();
            in_path[w] = 0;
        }
    };
    for (int s = 0; s < n; ++s) {
        in_path[s] = 1;
        path.assign(1, s);
        grow(s, s);
        in_path[s] = 0;
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Matchings
// ---------------------------------------------------------------------------

bool Matching::covers(int v) const {
    for (const auto& [a, b] : edges)
        if (a == v || b == v) return true;
    return false;
}

namespace {

using LocalMatching = std::vector<std::pair<int, int>>;

// Exact for trees: repeatedly match the smallest remaining leaf to its
// neighbor and delete both.
LocalMatching match_tree(const GainGraph& c) {
    const int n = c.vertex_count();
    std::vector<char> alive(n, 1);
    std::vector<int> deg(n, 0);
    for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(c.neighbors(v).size());
    auto kill = [&](int v) {
        alive[v] = 0;
        for (int w : c.neighbors(v))
            if (alive[w]) --deg[w];
    };
    LocalMatching out;
    for (;;) {
        int leaf = -1;
        for (int v = 0; v < n; ++v)
            if (alive[v] && deg[v] == 1) {
                leaf = v;
                break;
            }
        if (leaf < 0) break;
        int partner = -1;
        for (int w : c.neighbors(leaf))
            if (alive[w]) {
                partner = w;
                break;
            }
        out.emplace_back(leaf, partner);
        kill(leaf);
        kill(partner);
    }
    return out;
}

// Two-coloring; empty result when an odd cycle exists.
std::vector<int> two_color(const GainGraph& c) {
    const int n = c.vertex_count();
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> queue{s};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int v = queue[qi];
            for (int w : c.neighbors(v)) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    return {};
                }
            }
        }
    }
    return color;
}

LocalMatching match_bipartite(const GainGraph& c, const std::vector<int>& color) {
    const int n = c.vertex_count();
    std::vector<int> match(n, -1);
    std::vector<char> visited(n, 0);
    std::function<bool(int)> try_augment = [&](int u) -> bool {
        for (int w : c.neighbors(u)) {
            if (visited[w]) continue;
            visited[w] = 1;
            if (match[w] < 0 || try_augment(match[w])) {
                match[w] = u;
                match[u] = w;
                return true;
            }
        }
        return false;
    };
    for (int u = 0; u < n; ++u) {
        if (color[u] != 0 || match[u] >= 0) continue;
        std::fill(visited.begin(), visited.end(), 0);
        try_augment(u);
    }
    LocalMatching out;
    for (int v = 0; v < n; ++v)
        if (match[v] > v) out.emplace_back(v, match[v]);
    return out;
}

// Exhaustive subset DP, exact for any graph on <= 16 vertices.
LocalMatching match_exhaustive(const GainGraph& c) {
    const int n = c.vertex_count();
    std::vector<unsigned> adj_mask(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : c.neighbors(v)) adj_mask[v] |= 1u << w;
    const unsigned full = (n == 32) ? ~0u : (1u << n) - 1;
    std::vector<int> dp(full + 1, 0);
    for (unsigned mask = 1; mask <= full; ++mask) {
        const int v = __builtin_ctz(mask);
        int best = dp[mask ^ (1u << v)];
        unsigned candidates = adj_mask[v] & mask;
        while (candidates) {
            const int u = __builtin_ctz(candidates);
            candidates &= candidates - 1;
            best = std::max(best, 1 + dp[mask ^ (1u << v) ^ (1u << u)]);
        }
        dp[mask] = best;
    }
    LocalMatching out;
    unsigned mask = full;
    while (mask) {
        const int v = __builtin_ctz(mask);
        if (dp[mask] == dp[mask ^ (1u << v)]) {
            mask ^= 1u << v;
            continue;
        }
        unsigned candidates = adj_mask[v] & mask;
        while (candidates) {
            const int u = __builtin_ctz(candidates);
            candidates &= candidates - 1;
            if (1 + dp[mask ^ (1u << v) ^ (1u << u)] == dp[mask]) {
                out.emplace_back(v, u);
                mask ^= (1u << v) | (1u << u);
                break;
            }
        }
    }
    return out;
}

// Augmenting search without blossom shrinking; may undercount on odd cycles,
// so callers accept the result only when it provably maxes out.
LocalMatching match_uncertified(const GainGraph& c) {
    const int n = c.vertex_count();
    std::vector<int> match(n, -1);
    for (const auto& e : c.edges())
        if (match[e.u] < 0 && match[e.v] < 0) {
            match[e.u] = e.v;
            match[e.v] = e.u;
        }
    std::vector<char> visited(n, 0);
    std::function<bool(int)> try_augment = [&](int u) -> bool {
        for (int w : c.neighbors(u)) {
            if (visited[w]) continue;
            visited[w] = 1;
            if (match[w] < 0 || try_augment(match[w])) {
                match[w] = u;
                match[u] = w;
                return true;
            }
        }
        return false;
    };
    bool improved = true;
    while (improved) {
        improved = false;
        for (int u = 0; u < n; ++u) {
            if (match[u] >= 0) continue;
            std::fill(visited.begin(), visited.end(), 0);
            visited[u] = 1;
            if (try_augment(u)) {
                improved = true;
                break;
            }
        }
    }
    LocalMatching out;
    for (int v = 0; v < n; ++v)
        if (match[v] > v) out.emplace_back(v, match[v]);
    return out;
}

LocalMatching match_component(const GainGraph& c) {
    const int n = c.vertex_count();
    if (c.edge_count() == 0) return {};
    if (c.edge_count() == n - 1) return match_tree(c); // connected + acyclic
    const auto color = two_color(c);
    if (!color.empty()) return match_bipartite(c, color);
    if (n <= 16) return match_exhaustive(c);
    auto attempt = match_uncertified(c);
    if (static_cast<int>(attempt.size()) == n / 2) return attempt;
    throw size_limit_error("maximum matching not certified for a non-bipartite component on " +
                           std::to_string(n) + " vertices (limit 16)");
}

} // namespace

Matching max_matching(const GainGraph& g) {
    Matching m;
    for (const auto& comp : components(g)) {
        if (comp.size() < 2) continue;
        const auto sub = induced(g, comp);
        for (const auto& [a, b] : match_component(sub.graph)) {
            const int u = sub.vertices[a];
            const int v = sub.vertices[b];
            m.edges.emplace_back(std::min(u, v), std::max(u, v));
        }
    }
    std::sort(m.edges.begin(), m.edges.end());
    m.perfect = 2 * m.size() == g.vertex_count();
    return m;
}

int tree_rank(const GainGraph& t) {
    for (const auto& comp : components(t)) {
        int edges_within = 0;
        std::vector<char> in_comp(t.vertex_count(), 0);
        for (int v : comp) in_comp[v] = 1;
        for (const auto& e : t.edges())
            if (in_comp[e.u] && in_comp[e.v]) ++edges_within;
        if (edges_within != static_cast<int>(comp.size()) - 1)
            throw precondition_error("not a forest: a component contains a cycle");
    }
    return 2 * max_matching(t).size();
}

// ---------------------------------------------------------------------------
// Rank by structural reduction
// ---------------------------------------------------------------------------

int graph_rank(const GainGraph& g) { return rank(adjacency(g), RankSide::row_left); }

std::string to_string(ReductionStep::Kind k) {
    switch (k) {
        case ReductionStep::Kind::isolated: return "isolated";
        case ReductionStep::Kind::pendant_pair: return "pendant-pair";
        case ReductionStep::Kind::cycle_closed_form: return "cycle";
        default: return "elimination";
    }
}

RankReport reduce_rank(const GainGraph& g) {
    const int n = g.vertex_count();
    std::vector<char> alive(n, 1);
    int alive_count = n;
    RankReport rep;

    auto alive_degree = [&](int v) {
        int d = 0;
        for (int w : g.neighbors(v))
            if (alive[w]) ++d;
        return d;
    };
    auto consume = [&](ReductionStep step) {
        for (int v : step.vertices) {
            alive[v] = 0;
            --alive_count;
        }
        rep.rank += step.contribution;
        rep.trace.push_back(std::move(step));
    };

    while (alive_count > 0) {
        int start = 0;
        while (!alive[start]) ++start;
        // Component of the smallest remaining vertex.
        std::vector<int> comp{start};
        std::vector<char> seen(n, 0);
        seen[start] = 1;
        for (std::size_t qi = 0; qi < comp.size(); ++qi)
            for (int w : g.neighbors(comp[qi]))
                if (alive[w] && !seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());

        if (comp.size() == 1) {
            consume({ReductionStep::Kind::isolated, comp, 0,
                     "isolated vertex " + std::to_string(start)});
            continue;
        }

        int pendant = -1;
        bool all_degree_two = true;
        for (int v : comp) {
            const int d = alive_degree(v);
            if (d == 1 && pendant < 0) pendant = v;
            if (d != 2) all_degree_two = false;
        }
        if (pendant >= 0) {
            int neighbor = -1;
            for (int w : g.neighbors(pendant))
                if (alive[w]) {
                    neighbor = w;
                    break;
                }
            consume({ReductionStep::Kind::pendant_pair,
                     {pendant, neighbor},
                     2,
                     "pendant " + std::to_string(pendant) + " with neighbor " +
                         std::to_string(neighbor)});
            continue;
        }
        if (all_degree_two) {
            // Connected and 2-regular: a bare cycle. Walk it from its
            // smallest vertex toward the smaller neighbor.
            std::vector<int> cycle{comp[0]};
            int prev = comp[0];
            int cur = -1;
            for (int w : g.neighbors(comp[0]))
                if (alive[w]) {
                    cur = w;
                    break;
                }
            while (cur != comp[0]) {
                cycle.push_back(cur);
                for (int w : g.neighbors(cur))
                    if (alive[w] && w != prev) {
                        prev = cur;
                        cur = w;
                        break;
                    }
            }
            const int contribution = cycle_rank(g, cycle);
            consume({ReductionStep::Kind::cycle_closed_form, comp, contribution,
                     to_string(classify_cycle(g, cycle)) + " cycle of length " +
                         std::to_string(cycle.size())});
            continue;
        }
        const int contribution = graph_rank(induced(g, comp).graph);
        consume({ReductionStep::Kind::elimination, comp, contribution,
                 "elimination on " + std::to_string(comp.size()) + " vertices"});
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Cores, dual pendants, longest paths
// ---------------------------------------------------------------------------

std::vector<int> extract_core(const GainGraph& g, bool require_connected) {
    if (require_connected && !is_connected(g))
        throw precondition_error("connected core requested for a disconnected graph");
    const int target = graph_rank(g);
    std::vector<int> s(g.vertex_count());
    std::iota(s.begin(), s.end(), 0);

    auto admissible = [&](const std::vector<int>& candidate) {
        const GainGraph sub = induced(g, candidate).graph;
        if (require_connected && !is_connected(sub)) return false;
        return graph_rank(sub) == target;
    };

    bool shrunk = true;
    while (static_cast<int>(s.size()) > target && shrunk) {
        shrunk = false;
        for (std::size_t i = 0; i < s.size(); ++i) {
            std::vector<int> candidate = s;
            candidate.erase(candidate.begin() + static_cast<long>(i));
            if (admissible(candidate)) {
                s = std::move(candidate);
                shrunk = true;
                break;
            }
        }
    }
    if (static_cast<int>(s.size()) == target) return s;

    // Greedy stalled: exhaust size-target subsets of what is left.
    if (s.size() > 14)
        throw size_limit_error("core search needs an exhaustive pass over " +
                               std::to_string(s.size()) + " vertices (limit 14)");
    const int k = static_cast<int>(s.size());
    std::vector<int> pick(target);
    std::function<std::vector<int>(int, int)> search = [&](int from,
                                                           int chosen) -> std::vector<int> {
        if (chosen == target) {
            std::vector<int> candidate(pick.begin(), pick.end());
            return admissible(candidate) ? candidate : std::vector<int>{};
        }
        for (int i = from; i <= k - (target - chosen); ++i) {
            pick[chosen] = s[i];
            auto found = search(i + 1, chosen + 1);
            if (!found.empty() || target == 0) return found;
        }
        return {};
    };
    auto found = search(0, 0);
    if (static_cast<int>(found.size()) == target) return found;
    throw size_limit_error("no rank-preserving core located; exhaustive pass failed");
}

namespace {

void check_pm_tree(const GainGraph& t, const Matching& m) {
    const int n = t.vertex_count();
    if (n < 2 || !is_connected(t) || t.edge_count() != n - 1)
        throw precondition_error("not a PM-tree: underlying graph is not a tree");
    if (!m.perfect || 2 * m.size() != n)
        throw precondition_error("not a PM-tree: matching is not perfect");
    std::vector<char> covered(n, 0);
    for (const auto& [u, v] : m.edges) {
        if (!t.has_edge(u, v))
            throw precondition_error("not a PM-tree: matching edge (" + std::to_string(u) +
                                     ", " + std::to_string(v) + ") is not in the tree");
        if (covered[u] || covered[v])
            throw precondition_error("not a PM-tree: matching edges share a vertex");
        covered[u] = covered[v] = 1;
    }
}

std::vector<int> tree_path(const GainGraph& t, int from, int to) {
    std::vector<int> parent(t.vertex_count(), -1);
    parent[from] = from;
    std::vector<int> queue{from};
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
        for (int w : t.neighbors(queue[qi]))
            if (parent[w] < 0) {
                parent[w] = queue[qi];
                queue.push_back(w);
            }
    std::vector<int> path{to};
    while (path.back() != from) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace

std::vector<int> dual_pendants(const GainGraph& t, int v, const Matching& m) {
    check_pm_tree(t, m);
    if (v < 0 || v >= t.vertex_count() || t.neighbors(v).size() != 1)
        throw precondition_error("vertex " + std::to_string(v) + " is not a pendant");
    std::set<std::pair<int, int>> matched(m.edges.begin(), m.edges.end());
    auto in_matching = [&](int a, int b) {
        return matched.count({std::min(a, b), std::max(a, b)}) > 0;
    };
    std::vector<int> out;
    for (int w = 0; w < t.vertex_count(); ++w) {
        if (w == v || t.neighbors(w).size() != 1) continue;
        const auto path = tree_path(t, v, w);
        bool alternating = true;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            const bool expect_matched = i % 2 == 0;
            if (in_matching(path[i], path[i + 1]) != expect_matched) {
                alternating = false;
                break;
            }
        }
        if (alternating) out.push_back(w);
    }
    return out;
}

std::vector<int> longest_path(const GainGraph& t) {
    const int n = t.vertex_count();
    if (n == 0) throw precondition_error("not a tree: empty graph");
    if (!is_connected(t) || t.edge_count() != n - 1)
        throw precondition_error("not a tree");
    if (n == 1) return {0};

    auto farthest = [&](int from) {
        std::vector<int> dist(n, -1);
        dist[from] = 0;
        std::vector<int> queue{from};
        for (std::size_t qi = 0; qi < queue.size(); ++qi)
            for (int w : t.neighbors(queue[qi]))
                if (dist[w] < 0) {
                    dist[w] = dist[queue[qi]] + 1;
                    queue.push_back(w);
                }
        int best = from;
        for (int v = 0; v < n; ++v)
            if (dist[v] > dist[best]) best = v; // ties keep the smaller id
        return best;
    };

    const int a = farthest(0);
    const int b = farthest(a);
    std::vector<int> path = tree_path(t, a, b);
    std::vector<int> reversed(path.rbegin(), path.rend());
    return std::min(path, reversed);
}

} // namespace qgain
