#include "qgain/generate.hpp"

#include <algorithm>
#include <set>

#include "qgain/errors.hpp"

namespace qgain {

namespace {

// Gains are drawn against canonical edge order so the output depends only on
// the edge set, not on how the skeleton listed it.
std::vector<std::pair<int, int>> canonical_edges(const Skeleton& s) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(s.edges.size());
    for (const auto& [u, v] : s.edges) {
        if (u < 0 || u >= s.n || v < 0 || v >= s.n)
            throw precondition_error("skeleton edge out of range");
        if (u == v) throw precondition_error("skeleton has a self-loop");
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw precondition_error("skeleton has a repeated edge");
    return edges;
}

GainGraph assemble(int n, const std::vector<std::pair<int, int>>& edges, Seed gain_seed) {
    Skeleton s{n, edges};
    return random_gains(s, gain_seed);
}

} // namespace

Skeleton path_skeleton(int n) {
    if (n < 1) throw precondition_error("path needs at least one vertex");
    Skeleton s{n, {}};
    for (int v = 0; v + 1 < n; ++v) s.edges.emplace_back(v, v + 1);
    return s;
}

Skeleton cycle_skeleton(int n) {
    if (n < 3) throw precondition_error("cycle needs at least three vertices");
    Skeleton s{n, {}};
    for (int v = 0; v + 1 < n; ++v) s.edges.emplace_back(v, v + 1);
    s.edges.emplace_back(n - 1, 0);
    return s;
}

Skeleton complete_bipartite_skeleton(int a, int b) {
    if (a < 1 || b < 1) throw precondition_error("both sides need at least one vertex");
    Skeleton s{a + b, {}};
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) s.edges.emplace_back(i, a + j);
    return s;
}

Skeleton star_skeleton(int leaves) {
    if (leaves < 1) throw precondition_error("star needs at least one leaf");
    Skeleton s{leaves + 1, {}};
    for (int leaf = 1; leaf <= leaves; ++leaf) s.edges.emplace_back(0, leaf);
    return s;
}

GainGraph random_gains(const Skeleton& underlying, Seed seed) {
    const auto edges = canonical_edges(underlying);
    Rng rng(seed);
    RawGraph raw;
    raw.n = underlying.n;
    for (const auto& [u, v] : edges) raw.entries.push_back({u, v, rng.unit_quaternion()});
    return GainGraph::from_raw(raw);
}

GainGraph type1_cycle(int n, Seed seed) {
    if (n < 4 || n % 2 != 0)
        throw precondition_error("Type 1 cycle needs an even vertex count >= 4");
    Rng rng(seed);
    RawGraph raw;
    raw.n = n;
    Quaternion prefix = Quaternion::one();
    for (int v = 0; v + 1 < n; ++v) {
        const Quaternion g = rng.unit_quaternion();
        prefix *= g;
        raw.entries.push_back({v, v + 1, g});
    }
    const Quaternion target((n / 2) % 2 == 0 ? 1 : -1);
    raw.entries.push_back({n - 1, 0, inv(prefix) * target});
    return GainGraph::from_raw(raw);
}

GainGraph rank2_kab(int a, int b, Seed seed) {
    if (a < 2 || b < 2) throw precondition_error("rank-2 block needs both sides >= 2");
    Rng rng(seed);
    std::vector<Quaternion> k(a), alpha(b);
    k[0] = Quaternion::one();
    for (int i = 1; i < a; ++i) k[i] = rng.unit_quaternion();
    for (int j = 0; j < b; ++j) alpha[j] = rng.unit_quaternion();
    RawGraph raw;
    raw.n = a + b;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) raw.entries.push_back({i, a + j, k[i] * alpha[j]});
    return GainGraph::from_raw(raw);
}

GainGraph extremal_union(int n, int delta, Seed seed) {
    if (delta < 1) throw precondition_error("max degree must be at least 1");
    if (n <= 0 || n % (2 * delta) != 0)
        throw precondition_error("vertex count must be a positive multiple of 2*delta");
    const int copies = n / (2 * delta);
    RawGraph raw;
    raw.n = n;
    for (int c = 0; c < copies; ++c) {
        const int offset = c * 2 * delta;
        if (delta == 1) {
            Rng rng(split_seed(seed, static_cast<std::uint64_t>(c)));
            raw.entries.push_back({offset, offset + 1, rng.unit_quaternion()});
        } else {
            const GainGraph block = rank2_kab(delta, delta, split_seed(seed, static_cast<std::uint64_t>(c)));
            for (const auto& e : block.edges())
                raw.entries.push_back({e.u + offset, e.v + offset, e.gain});
        }
    }
    return GainGraph::from_raw(raw);
}

GainGraph random_pm_tree(int n, Seed seed) {
    if (n < 2 || n % 2 != 0)
        throw precondition_error("perfect-matching tree needs an even vertex count >= 2");
    Rng rng(split_seed(seed, 0));
    std::vector<std::pair<int, int>> edges{{0, 1}};
    for (int grown = 2; grown < n; grown += 2) {
        const int root = static_cast<int>(rng.below(static_cast<std::uint64_t>(grown)));
        edges.emplace_back(root, grown);
        edges.emplace_back(grown, grown + 1);
    }
    return assemble(n, edges, split_seed(seed, 1));
}

GainGraph random_connected(int n, int max_delta, Seed seed) {
    if (n < 2) throw precondition_error("connected corpus graph needs n >= 2");
    if (max_delta < 2) throw precondition_error("max degree cap must be >= 2");
    Rng rng(split_seed(seed, 0));
    std::vector<int> degree(n, 0);
    std::set<std::pair<int, int>> edge_set;
    auto add_edge = [&](int u, int v) {
        edge_set.emplace(std::min(u, v), std::max(u, v));
        ++degree[u];
        ++degree[v];
    };
    for (int v = 1; v < n; ++v) {
        // Attachment trees stay attachable: v-1 vertices cannot all sit at a
        // cap of 2 or more while holding only v-2 edges.
        std::vector<int> eligible;
        for (int u = 0; u < v; ++u)
            if (degree[u] < max_delta) eligible.push_back(u);
        add_edge(static_cast<int>(eligible[rng.below(eligible.size())]), v);
    }
    for (int attempt = 0; attempt < n; ++attempt) {
        const int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        if (u == v || degree[u] >= max_delta || degree[v] >= max_delta) continue;
        if (edge_set.count({std::min(u, v), std::max(u, v)})) continue;
        add_edge(u, v);
    }
    return assemble(n, {edge_set.begin(), edge_set.end()}, split_seed(seed, 1));
}

GainGraph random_graph(int n, Seed seed) {
    if (n < 0) throw precondition_error("vertex count must be nonnegative");
    Rng rng(split_seed(seed, 0));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(2, 5)) edges.emplace_back(u, v);
    return assemble(n, edges, split_seed(seed, 1));
}

GainGraph random_tree(int n, Seed seed) {
    if (n < 1) throw precondition_error("tree needs at least one vertex");
    Rng rng(split_seed(seed, 0));
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(v))), v);
    return assemble(n, edges, split_seed(seed, 1));
}

GainGraph random_isolated_free(int n, int max_delta, Seed seed) {
    if (n < 2) throw precondition_error("need at least two vertices to avoid isolation");
    if (max_delta < 1) throw precondition_error("max degree cap must be >= 1");
    Rng rng(split_seed(seed, 0));
    if (max_delta == 1) {
        if (n % 2 != 0)
            throw precondition_error("a degree-1 graph without isolated vertices needs even n");
        std::vector<int> order(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        for (int v = n - 1; v > 0; --v)
            std::swap(order[v], order[rng.below(static_cast<std::uint64_t>(v + 1))]);
        std::vector<std::pair<int, int>> edges;
        for (int p = 0; p < n; p += 2) edges.emplace_back(order[p], order[p + 1]);
        return assemble(n, edges, split_seed(seed, 1));
    }
    std::vector<int> degree(n, 0);
    std::set<std::pair<int, int>> edge_set;
    for (int attempt = 0; attempt < 2 * n; ++attempt) {
        const int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        if (u == v || degree[u] >= max_delta || degree[v] >= max_delta) continue;
        if (edge_set.count({std::min(u, v), std::max(u, v)})) continue;
        edge_set.emplace(std::min(u, v), std::max(u, v));
        ++degree[u];
        ++degree[v];
    }
    for (int v = 0; v < n; ++v) {
        if (degree[v] > 0) continue;
        std::vector<int> eligible;
        for (int u = 0; u < n; ++u)
            if (u != v && degree[u] < max_delta) eligible.push_back(u);
        if (!eligible.empty()) {
            const int u = eligible[rng.below(eligible.size())];
            edge_set.emplace(std::min(u, v), std::max(u, v));
            ++degree[u];
            ++degree[v];
        } else {
            // Everyone else is at the cap: splice v into an existing edge,
            // which keeps all other degrees unchanged (cap is >= 2 here).
            auto it = edge_set.begin();
            std::advance(it, static_cast<long>(rng.below(edge_set.size())));
            const auto [x, y] = *it;
            edge_set.erase(it);
            edge_set.emplace(std::min(x, v), std::max(x, v));
            edge_set.emplace(std::min(y, v), std::max(y, v));
            degree[v] = 2;
        }
    }
    return assemble(n, {edge_set.begin(), edge_set.end()}, split_seed(seed, 1));
}

} // namespace qgain
