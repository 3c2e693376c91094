#ifndef QGAIN_GRAPH_HPP
#define QGAIN_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgain/matrix.hpp"
#include "qgain/quaternion.hpp"

namespace qgain {

/// One oriented gain statement: the gain of traversing u -> v.
struct OrientedGain {
    int u = 0;
    int v = 0;
    Quaternion gain;
};

/// A gain graph exactly as stated in a file or by a caller, before any
/// invariant is enforced. Entries may be inconsistent; validate() reports how.
struct RawGraph {
    int n = 0;
    std::vector<OrientedGain> entries;
    std::vector<std::string> names; // optional vertex labels; never semantic
};

struct Violation {
    enum class Kind { index_range, self_loop, multi_edge, conjugacy, unit_norm };
    Kind kind;
    int u = 0;
    int v = 0;
    std::string message;
};

/// Empty iff the raw data describes a valid gain graph: indices in range, no
/// self-loops, one gain per edge (a reverse-orientation restatement must be
/// the exact conjugate), every gain an exact unit.
std::vector<Violation> validate(const RawGraph& raw);

/// Simple undirected graph with a unit-quaternion gain on each oriented edge.
/// Gains are stored once per edge under the canonical orientation
/// (smaller index -> larger index); the reverse gain is the conjugate.
/// Immutable after construction.
class GainGraph {
public:
    GainGraph() = default;

    /// Builds from raw data. Throws precondition_error listing the first
    /// violation unless enforce_valid is false, in which case inconsistent
    /// entries are dropped (first statement of an edge wins, self-loops are
    /// skipped) and non-unit gains are kept as stated.
    static GainGraph from_raw(const RawGraph& raw, bool enforce_valid = true);

    /// Convenience for programmatic construction; validates.
    GainGraph(int n, const std::vector<OrientedGain>& entries);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Canonical edge list, sorted by (u, v) with u < v.
    const std::vector<OrientedGain>& edges() const { return edges_; }

    const std::vector<std::string>& names() const { return names_; }

    bool has_edge(int u, int v) const;

    /// Gain of traversing u -> v; conjugated on demand for reversed lookups.
    /// Throws precondition_error if u and v are not adjacent.
    Quaternion gain(int u, int v) const;

    /// Neighbor lists, ascending.
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    RawGraph to_raw() const;

    friend bool operator==(const GainGraph& a, const GainGraph& b);

private:
    void build_adjacency();

    int n_ = 0;
    std::vector<OrientedGain> edges_; // canonical orientation, sorted
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> names_;
};

/// Hermitian adjacency matrix: entry (i, j) is the gain of i -> j, zero when
/// not adjacent; the diagonal is zero.
QMatrix adjacency(const GainGraph& g);

/// Subgraph induced on the given vertices together with the relabeling:
/// result.vertices[k] is the original label of new vertex k.
struct InducedSubgraph {
    GainGraph graph;
    std::vector<int> vertices;
};
InducedSubgraph induced(const GainGraph& g, const std::vector<int>& s);

/// Connected components as vertex sets, each ascending, ordered by their
/// smallest vertex.
std::vector<std::vector<int>> components(const GainGraph& g);

bool is_connected(const GainGraph& g);

struct DegreeInfo {
    std::vector<int> degree;
    int max_degree = 0;
    std::vector<int> pendants; // degree-1 vertices, ascending
};
DegreeInfo degrees(const GainGraph& g);

} // namespace qgain

#endif
