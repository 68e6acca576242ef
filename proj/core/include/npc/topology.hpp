#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "npc/errors.hpp"

namespace npc {

/// Undirected span usable in both directions, one unit cost per directed use.
struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;
    std::int64_t cost = 1;
};

/// Simple undirected graph.  Directed arcs are numbered 2e (u->v) and
/// 2e+1 (v->u) for span e.
struct Topology {
    std::vector<std::string> nodes;
    std::vector<Edge> edges;

    std::size_t node_count() const { return nodes.size(); }
    std::size_t arc_count() const { return edges.size() * 2; }

    std::size_t arc_from(std::size_t arc) const {
        const Edge& e = edges[arc / 2];
        return (arc % 2 == 0) ? e.u : e.v;
    }
    std::size_t arc_to(std::size_t arc) const {
        const Edge& e = edges[arc / 2];
        return (arc % 2 == 0) ? e.v : e.u;
    }
    std::int64_t arc_cost(std::size_t arc) const { return edges[arc / 2].cost; }
    std::size_t reverse_arc(std::size_t arc) const { return arc ^ 1; }
    std::size_t span_of(std::size_t arc) const { return arc / 2; }

    std::size_t node_index(const std::string& name) const;

    /// Out-arcs per node, in arc order.
    std::vector<std::vector<std::size_t>> out_arcs() const;
};

struct Connection {
    std::size_t src = 0;
    std::size_t dst = 0;
};

/// Demands plus the same-source / same-destination indicators the
/// provisioning model needs.
struct ConnectionSet {
    std::vector<Connection> conns;

    std::size_t size() const { return conns.size(); }
    bool same_source(std::size_t h, std::size_t l) const {
        return conns[h].src == conns[l].src;
    }
    bool same_destination(std::size_t h, std::size_t l) const {
        return conns[h].dst == conns[l].dst;
    }
};

struct ProvisioningInstance {
    Topology topology;
    ConnectionSet connections;
};

/// Parses the topology document format:
///
///   # comment
///   nodes
///   a b c ...
///   edges
///   u v [cost]
///   connections
///   s r
///
/// Section headers are the bare words "nodes", "edges", "connections"; any
/// other section word is rejected.  Node names are [A-Za-z0-9_]+.  Errors
/// carry the offending line number.
ProvisioningInstance parse_topology(std::istream& in);
ProvisioningInstance load_topology(const std::string& path);

}  // namespace npc
