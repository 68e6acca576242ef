#pragma once

#include <cstdint>
#include <vector>

#include "npc/topology.hpp"

namespace npc {

/// A directed path as a node sequence (front = source, back = destination).
struct Path {
    std::vector<std::size_t> nodes;
    std::int64_t cost = 0;

    std::size_t hops() const { return nodes.empty() ? 0 : nodes.size() - 1; }
};

struct DisjointPair {
    Path first;   // the cheaper path (ties broken by node sequence)
    Path second;
    std::int64_t total_cost = 0;
};

/// Minimum-total-cost pair of link-disjoint s->r paths: shortest path, then a
/// shortest path in the residual graph where the first path's arcs are
/// removed and their reversals get negated cost, then removal of the
/// overlapping span uses.  Throws when the graph has no two link-disjoint
/// paths between s and r.
DisjointPair bhandari_pair(const Topology& topo, std::size_t s, std::size_t r);

/// Plain shortest path (Dijkstra); throws if r is unreachable.
Path shortest_path(const Topology& topo, std::size_t s, std::size_t r);

}  // namespace npc
