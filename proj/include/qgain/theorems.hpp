#ifndef QGAIN_THEOREMS_HPP
#define QGAIN_THEOREMS_HPP

#include <string>
#include <vector>

#include "qgain/graph.hpp"
#include "qgain/rational.hpp"

namespace qgain {

struct BoundVerdict {
    int n = 0;
    int delta = 0;
    int rank = 0;
    Rational bound;
    bool holds = false; // rank >= ceil(bound)
    bool tight = false; // rank == bound exactly
};

std::string to_json(const BoundVerdict& v);

/// Lower bound rank >= n/delta for graphs without isolated vertices.
/// A verdict with holds == false on valid input reports a counterexample.
BoundVerdict check_general_bound(const GainGraph& g);

/// Lower bound rank >= (n-2)/(delta-1) for connected graphs with delta >= 2.
BoundVerdict check_connected_bound(const GainGraph& g);

/// True iff g is a disjoint union of copies of K_{d,d} (d = max degree of g)
/// in which every 4-cycle is Type 1 — exactly the graphs where the general
/// bound is met with equality. Purely structural plus cycle classification.
/// Requires no isolated vertices.
bool is_extremal_general(const GainGraph& g);

/// True iff g is a Type 1 cycle or a K_{n/2,n/2} whose 4-cycles are all
/// Type 1 — the equality graphs of the connected bound. Requires g connected
/// with max degree >= 2.
bool is_extremal_connected(const GainGraph& g);

/// True iff every 4-cycle of g is Type 1. With part_check set, g must be a
/// complete bipartite graph with both sides of size >= 2 (throws
/// precondition_error otherwise).
bool all_c4_type1(const GainGraph& g, bool part_check);

/// Same predicate for complete bipartite graphs, deciding from only the
/// 4-cycles through one fixed vertex pair (smallest vertex of each side);
/// those force all the rest. Always verifies the complete-bipartite shape.
bool all_c4_type1_reduced(const GainGraph& g);

/// Bipartition of a connected complete bipartite graph: sides sorted, the
/// side of vertex 0 first. Empty result when g is not of that shape.
std::vector<std::vector<int>> complete_bipartite_parts(const GainGraph& g);

} // namespace qgain

#endif
