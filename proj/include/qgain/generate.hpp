#ifndef QGAIN_GENERATE_HPP
#define QGAIN_GENERATE_HPP

#include <utility>
#include <vector>

#include "qgain/graph.hpp"
#include "qgain/rng.hpp"

namespace qgain {

/// Underlying simple graph without gains.
struct Skeleton {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

Skeleton path_skeleton(int n);
Skeleton cycle_skeleton(int n);
Skeleton complete_bipartite_skeleton(int a, int b);
Skeleton star_skeleton(int leaves); // center 0 with the given number of leaves

/// The skeleton with a pseudorandom exact unit gain on every edge. Identical
/// (skeleton, seed) pairs produce identical graphs. Throws precondition_error
/// when the skeleton is not simple.
GainGraph random_gains(const Skeleton& underlying, Seed seed);

/// Cycle on n >= 4 even vertices whose gain product along 0 -> 1 -> ... -> 0
/// is exactly (-1)^(n/2): the last gain is solved for, the rest are random.
GainGraph type1_cycle(int n, Seed seed);

/// K_{a,b} (a, b >= 2; sides 0..a-1 and a..a+b-1) with gains k_i * alpha_j
/// for random units with k_0 = 1. Every 4-cycle is Type 1 and the rank is 2.
GainGraph rank2_kab(int a, int b, Seed seed);

/// Disjoint union of n/(2*delta) independently seeded rank-2 K_{delta,delta}
/// blocks (single random-gain edges when delta is 1). Requires 2*delta | n.
GainGraph extremal_union(int n, int delta, Seed seed);

/// Random tree on n >= 2 even vertices built by attaching pendant P2 units,
/// so a perfect matching exists by construction; random unit gains.
GainGraph random_pm_tree(int n, Seed seed);

/// Connected underlying graph on n >= 2 vertices with max degree <= max_delta
/// (>= 2); random unit gains.
GainGraph random_connected(int n, int max_delta, Seed seed);

/// Erdos-Renyi-style corpus graph (edge chance 2/5); random unit gains.
GainGraph random_graph(int n, Seed seed);

/// Random attachment tree; random unit gains.
GainGraph random_tree(int n, Seed seed);

/// Corpus graph with no isolated vertex and max degree <= max_delta. With
/// max_delta == 1 (n even) this is a random perfect matching.
GainGraph random_isolated_free(int n, int max_delta, Seed seed);

} // namespace qgain

#endif
