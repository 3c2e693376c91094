#include "qgain/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qgain/errors.hpp"

namespace qgain {

namespace {

std::string edge_label(int u, int v) {
    std::ostringstream os;
    os << "(" << u << ", " << v << ")";
    return os.str();
}

} // namespace

std::vector<Violation> validate(const RawGraph& raw) {
    std::vector<Violation> out;
    // Edges seen so far, keyed by canonical orientation; the stored gain is
    // re-oriented to u < v so a conjugate restatement matches exactly.
    std::map<std::pair<int, int>, Quaternion> seen;
    for (const auto& e : raw.entries) {
        if (e.u < 0 || e.u >= raw.n || e.v < 0 || e.v >= raw.n) {
            out.push_back({Violation::Kind::index_range, e.u, e.v,
                           "edge " + edge_label(e.u, e.v) + " out of range for n=" +
                               std::to_string(raw.n)});
            continue;
        }
        if (e.u == e.v) {
            out.push_back({Violation::Kind::self_loop, e.u, e.v,
                           "self-loop at vertex " + std::to_string(e.u)});
            continue;
        }
        const int a = std::min(e.u, e.v);
        const int b = std::max(e.u, e.v);
        const Quaternion canonical = (e.u < e.v) ? e.gain : conj(e.gain);
        auto it = seen.find({a, b});
        if (it != seen.end()) {
            if (it->second == canonical) {
                out.push_back({Violation::Kind::multi_edge, e.u, e.v,
                               "edge " + edge_label(a, b) + " stated more than once"});
            } else {
                out.push_back({Violation::Kind::conjugacy, e.u, e.v,
                               "edge " + edge_label(a, b) +
                                   " restated with a gain that is not the conjugate"});
            }
            continue;
        }
        seen.emplace(std::make_pair(a, b), canonical);
        if (!is_unit(e.gain)) {
            out.push_back({Violation::Kind::unit_norm, e.u, e.v,
                           "gain on edge " + edge_label(e.u, e.v) + " has norm " +
                               norm_sq(e.gain).str() + ", expected 1"});
        }
    }
    return out;
}

GainGraph GainGraph::from_raw(const RawGraph& raw, bool enforce_valid) {
    if (raw.n < 0) throw precondition_error("vertex count must be nonnegative");
    if (enforce_valid) {
        auto violations = validate(raw);
        if (!violations.empty())
            throw precondition_error("invalid gain graph: " + violations.front().message);
    }
    GainGraph g;
    g.n_ = raw.n;
    std::map<std::pair<int, int>, Quaternion> canon;
    for (const auto& e : raw.entries) {
        if (e.u < 0 || e.u >= raw.n || e.v < 0 || e.v >= raw.n || e.u == e.v) continue;
        const int a = std::min(e.u, e.v);
        const int b = std::max(e.u, e.v);
        canon.emplace(std::make_pair(a, b), (e.u < e.v) ? e.gain : conj(e.gain));
    }
    g.edges_.reserve(canon.size());
    for (const auto& [key, gain] : canon) g.edges_.push_back({key.first, key.second, gain});
    if (static_cast<int>(raw.names.size()) == raw.n) g.names_ = raw.names;
    g.build_adjacency();
    return g;
}

GainGraph::GainGraph(int n, const std::vector<OrientedGain>& entries) {
    *this = from_raw(RawGraph{n, entries, {}});
}

void GainGraph::build_adjacency() {
    adj_.assign(n_, {});
    for (const auto& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool GainGraph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Quaternion GainGraph::gain(int u, int v) const {
    const int a = std::min(u, v);
    const int b = std::max(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(a, b),
                               [](const OrientedGain& e, const std::pair<int, int>& key) {
                                   return std::make_pair(e.u, e.v) < key;
                               });
    if (it == edges_.end() || it->u != a || it->v != b)
        throw precondition_error("no edge " + edge_label(u, v));
    return (u < v) ? it->gain : conj(it->gain);
}

RawGraph GainGraph::to_raw() const { return RawGraph{n_, edges_, names_}; }

bool operator==(const GainGraph& a, const GainGraph& b) {
    if (a.n_ != b.n_ || a.edges_.size() != b.edges_.size()) return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
        const auto& x = a.edges_[i];
        const auto& y = b.edges_[i];
        if (x.u != y.u || x.v != y.v || x.gain != y.gain) return false;
    }
    return true;
}

QMatrix adjacency(const GainGraph& g) {
    const int n = g.vertex_count();
    QMatrix m(n, n);
    for (const auto& e : g.edges()) {
        m(e.u, e.v) = e.gain;
        m(e.v, e.u) = conj(e.gain);
    }
    return m;
}

InducedSubgraph induced(const GainGraph& g, const std::vector<int>& s) {
    std::vector<int> verts = s;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<int> relabel(g.vertex_count(), -1);
    for (std::size_t k = 0; k < verts.size(); ++k) {
        const int v = verts[k];
        if (v < 0 || v >= g.vertex_count())
            throw precondition_error("induced subgraph vertex " + std::to_string(v) +
                                     " out of range");
        relabel[v] = static_cast<int>(k);
    }
    RawGraph raw;
    raw.n = static_cast<int>(verts.size());
    for (const auto& e : g.edges())
        if (relabel[e.u] >= 0 && relabel[e.v] >= 0)
            raw.entries.push_back({relabel[e.u], relabel[e.v], e.gain});
    if (!g.names().empty()) {
        raw.names.reserve(verts.size());
        for (int v : verts) raw.names.push_back(g.names()[v]);
    }
    return {GainGraph::from_raw(raw, /*enforce_valid=*/false), verts};
}

std::vector<std::vector<int>> components(const GainGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        const int id = static_cast<int>(out.size());
        std::vector<int> stack{start};
        std::vector<int> members;
        comp[start] = id;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w : g.neighbors(v))
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

bool is_connected(const GainGraph& g) {
    return g.vertex_count() <= 1 || components(g).size() == 1;
}

DegreeInfo degrees(const GainGraph& g) {
    DegreeInfo info;
    info.degree.assign(g.vertex_count(), 0);
    for (const auto& e : g.edges()) {
        ++info.degree[e.u];
        ++info.degree[e.v];
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        info.max_degree = std::max(info.max_degree, info.degree[v]);
        if (info.degree[v] == 1) info.pendants.push_back(v);
    }
    return info;
}

} // namespace qgain
