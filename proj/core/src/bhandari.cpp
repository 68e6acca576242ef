#include "npc/bhandari.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace npc {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

Path path_from_parents(const Topology& topo, const std::vector<std::size_t>& parent_arc,
                       std::size_t s, std::size_t r) {
    Path p;
    std::vector<std::size_t> rev;
    std::size_t cur = r;
    while (cur != s) {
        std::size_t a = parent_arc[cur];
        rev.push_back(cur);
        p.cost += topo.arc_cost(a);
        cur = topo.arc_from(a);
    }
    rev.push_back(s);
    p.nodes.assign(rev.rbegin(), rev.rend());
    return p;
}

}  // namespace

Path shortest_path(const Topology& topo, std::size_t s, std::size_t r) {
    const std::size_t nv = topo.node_count();
    std::vector<std::int64_t> dist(nv, kInf);
    std::vector<std::size_t> parent_arc(nv, SIZE_MAX);
    auto adj = topo.out_arcs();

    using Item = std::pair<std::int64_t, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[s] = 0;
    pq.push({0, s});
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (d > dist[u]) continue;
        for (std::size_t a : adj[u]) {
            std::size_t v = topo.arc_to(a);
            std::int64_t nd = d + topo.arc_cost(a);
            if (nd < dist[v]) {
                dist[v] = nd;
                parent_arc[v] = a;
                pq.push({nd, v});
            }
        }
    }
    if (dist[r] >= kInf) throw Error("no path between the requested nodes");
    return path_from_parents(topo, parent_arc, s, r);
}

DisjointPair bhandari_pair(const Topology& topo, std::size_t s, std::size_t r) {
    if (s == r) throw Error("disjoint pair needs distinct endpoints");
    Path p1 = shortest_path(topo, s, r);

    // Arcs of the first path.
    std::vector<bool> on_p1(topo.arc_count(), false);
    for (std::size_t i = 0; i + 1 < p1.nodes.size(); ++i) {
        std::size_t u = p1.nodes[i], v = p1.nodes[i + 1];
        for (std::size_t a = 0; a < topo.arc_count(); ++a)
            if (topo.arc_from(a) == u && topo.arc_to(a) == v) {
                on_p1[a] = true;
                break;
            }
    }

    // Residual graph: first-path arcs removed, their reversals negated.
    // Bellman-Ford handles the negative arcs; arc order keeps it
    // deterministic.
    const std::size_t nv = topo.node_count();
    std::vector<std::int64_t> dist(nv, kInf);
    std::vector<std::size_t> parent_arc(nv, SIZE_MAX);
    dist[s] = 0;
    for (std::size_t pass = 0; pass < nv; ++pass) {
        bool changed = false;
        for (std::size_t a = 0; a < topo.arc_count(); ++a) {
            if (on_p1[a]) continue;
            std::int64_t cost = topo.arc_cost(a);
            if (on_p1[topo.reverse_arc(a)]) cost = -cost;
            std::size_t u = topo.arc_from(a), v = topo.arc_to(a);
            if (dist[u] >= kInf) continue;
            if (dist[u] + cost < dist[v]) {
                dist[v] = dist[u] + cost;
                parent_arc[v] = a;
                changed = true;
            }
        }
        if (!changed) break;
    }
    if (dist[r] >= kInf)
        throw Error("graph not 2-link-connected between " + topo.nodes[s] + " and " +
                    topo.nodes[r]);

    // Arc multiset union with opposite uses of the same span canceled.
    std::vector<int> use(topo.arc_count(), 0);
    for (std::size_t a = 0; a < topo.arc_count(); ++a)
        if (on_p1[a]) use[a] = 1;
    {
        std::size_t cur = r;
        while (cur != s) {
            std::size_t a = parent_arc[cur];
            if (use[topo.reverse_arc(a)] > 0)
                use[topo.reverse_arc(a)] = 0;  // interleaved span, cancels out
            else
                use[a] += 1;
            cur = topo.arc_from(a);
        }
    }

    // Decompose the remaining arcs into two link-disjoint trails from s to r:
    // walk from s taking the lowest-numbered unused out-arc.
    auto walk = [&]() {
        Path p;
        p.nodes.push_back(s);
        std::size_t cur = s;
        while (cur != r) {
            bool advanced = false;
            for (std::size_t a = 0; a < topo.arc_count(); ++a) {
                if (use[a] > 0 && topo.arc_from(a) == cur) {
                    use[a] -= 1;
                    p.cost += topo.arc_cost(a);
                    cur = topo.arc_to(a);
                    p.nodes.push_back(cur);
                    advanced = true;
                    break;
                }
            }
            if (!advanced) throw Error("internal: path decomposition stuck");
        }
        return p;
    };
    Path a = walk();
    Path b = walk();

    DisjointPair pair;
    if (b.cost < a.cost || (b.cost == a.cost && b.nodes < a.nodes)) std::swap(a, b);
    pair.first = std::move(a);
    pair.second = std::move(b);
    pair.total_cost = pair.first.cost + pair.second.cost;
    return pair;
}

}  // namespace npc
