#ifndef QGAIN_ANALYSIS_HPP
#define QGAIN_ANALYSIS_HPP

#include <string>
#include <utility>
#include <vector>

#include "qgain/graph.hpp"
#include "qgain/quaternion.hpp"

namespace qgain {

// ---------------------------------------------------------------------------
// Cycle classification
// ---------------------------------------------------------------------------

/// Even cycles are Type 1 or 2, odd cycles Type 3 or 4 (see classify_cycle).
enum class CycleType { type1, type2, type3, type4 };

std::string to_string(CycleType t);
int type_number(CycleType t); // 1..4

/// Ordered product of oriented gains along the closed walk
/// cycle[0] -> cycle[1] -> ... -> cycle.back() -> cycle[0].
/// Throws precondition_error unless the list is a cycle in g (length >= 3,
/// vertices distinct, consecutive and wrap-around pairs adjacent).
Quaternion cycle_gain(const GainGraph& g, const std::vector<int>& cycle);

/// Type 1: n even and gain == (-1)^(n/2).  Type 2: n even otherwise.
/// Type 3: n odd and Re((-1)^((n-1)/2) gain) != 0.  Type 4: n odd otherwise.
CycleType classify_cycle(const GainGraph& g, const std::vector<int>& cycle);

/// Rank of a bare gain path on n vertices: n-1 when n is odd, n when even.
int path_rank(int n);

/// Closed-form rank of a bare gain cycle: n-2 (Type 1), n (Types 2 and 3),
/// n-1 (Type 4).
int cycle_rank(const GainGraph& g, const std::vector<int>& cycle);

/// All cycles of length 3..max_len, one canonical representative each:
/// smallest vertex first, then the lexicographically smaller direction.
/// Sorted by (length, sequence).
std::vector<std::vector<int>> enumerate_cycles(const GainGraph& g, int max_len);

// ---------------------------------------------------------------------------
// Matchings
// ---------------------------------------------------------------------------

struct Matching {
    std::vector<std::pair<int, int>> edges; // u < v, sorted
    bool perfect = false;

    int size() const { return static_cast<int>(edges.size()); }
    bool covers(int v) const;
};

/// Maximum matching of the underlying graph. Exact for forests (leaf
/// pruning), bipartite graphs (augmenting paths), and components of at most
/// 16 vertices (exhaustive). Larger non-bipartite components use an
/// uncertified augmenting search accepted only when it provably maxes out;
/// otherwise throws size_limit_error.
Matching max_matching(const GainGraph& g);

/// 2m(T) for a forest; gains never enter. Throws precondition_error when the
/// underlying graph has a cycle.
int tree_rank(const GainGraph& t);

// ---------------------------------------------------------------------------
// Rank by structural reduction
// ---------------------------------------------------------------------------

/// Rank of the Hermitian adjacency matrix (all four one-sided ranks agree).
int graph_rank(const GainGraph& g);

struct ReductionStep {
    enum class Kind { isolated, pendant_pair, cycle_closed_form, elimination };
    Kind kind;
    std::vector<int> vertices; // original labels consumed by this step
    int contribution = 0;
    std::string note;
};

std::string to_string(ReductionStep::Kind k);

struct RankReport {
    int rank = 0;
    std::vector<ReductionStep> trace;
};

/// Rank via structure: repeatedly, on the component holding the smallest
/// remaining vertex, delete an isolated vertex (+0), delete the
/// lowest-indexed pendant with its neighbor (+2), consume a bare cycle by
/// its closed form, or fall back to elimination on the irreducible core.
/// After every step, contributions so far plus the rank of the remaining
/// graph equal rank(g). Bare paths never reach a closed form: their
/// endpoints are pendants, so pendant deletion consumes them first.
RankReport reduce_rank(const GainGraph& g);

// ---------------------------------------------------------------------------
// Cores, dual pendants, longest paths
// ---------------------------------------------------------------------------

/// A vertex set S with |S| = rank(induced(g, S)) = rank(g); connected when
/// require_connected is set (g must then be connected). Greedy deletion
/// first; if it stalls, exhaustive search over size-r subsets of the
/// remaining vertices, allowed only up to 14 of them (size_limit_error
/// beyond).
std::vector<int> extract_core(const GainGraph& g, bool require_connected);

/// Pendant vertices w != v whose unique v-w path alternates between matching
/// and non-matching edges. Requires t to be a tree, m a perfect matching of
/// it, and v pendant; never empty for such inputs.
std::vector<int> dual_pendants(const GainGraph& t, int v, const Matching& m);

/// A maximum-length path of the tree via double farthest-vertex sweeps,
/// ties toward smaller vertex ids; of the two traversal directions the
/// lexicographically smaller is returned.
std::vector<int> longest_path(const GainGraph& t);

} // namespace qgain

#endif
