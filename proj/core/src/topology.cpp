#include "npc/topology.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace npc {

std::size_t Topology::node_index(const std::string& name) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i] == name) return i;
    throw Error("unknown node '" + name + "'");
}

std::vector<std::vector<std::size_t>> Topology::out_arcs() const {
    std::vector<std::vector<std::size_t>> out(node_count());
    for (std::size_t a = 0; a < arc_count(); ++a) out[arc_from(a)].push_back(a);
    return out;
}

namespace {

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

}  // namespace

ProvisioningInstance parse_topology(std::istream& in) {
    ProvisioningInstance inst;
    Topology& topo = inst.topology;
    std::map<std::string, std::size_t> index;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_lines;

    enum class Section { None, Nodes, Edges, Connections };
    Section section = Section::None;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (toks.empty()) continue;

        if (toks.size() == 1 &&
            (toks[0] == "nodes" || toks[0] == "edges" || toks[0] == "connections")) {
            section = toks[0] == "nodes"     ? Section::Nodes
                      : toks[0] == "edges"   ? Section::Edges
                                             : Section::Connections;
            continue;
        }

        switch (section) {
            case Section::None:
                throw ParseError(lineno, "expected a section header (nodes/edges/connections)");
            case Section::Nodes:
                for (const std::string& name : toks) {
                    if (!valid_name(name))
                        throw ParseError(lineno, "invalid node name '" + name + "'");
                    if (index.count(name))
                        throw ParseError(lineno, "duplicate node '" + name + "'");
                    index[name] = topo.nodes.size();
                    topo.nodes.push_back(name);
                }
                break;
            case Section::Edges: {
                if (toks.size() < 2 || toks.size() > 3)
                    throw ParseError(lineno, "edge lines are 'u v [cost]'");
                auto lookup = [&](const std::string& name) {
                    auto it = index.find(name);
                    if (it == index.end())
                        throw ParseError(lineno, "unknown node '" + name + "'");
                    return it->second;
                };
                Edge e;
                e.u = lookup(toks[0]);
                e.v = lookup(toks[1]);
                if (e.u == e.v) throw ParseError(lineno, "self-loop edge");
                if (toks.size() == 3) {
                    try {
                        std::size_t used = 0;
                        e.cost = std::stoll(toks[2], &used);
                        if (used != toks[2].size()) throw std::invalid_argument("");
                    } catch (const std::exception&) {
                        throw ParseError(lineno, "invalid edge cost '" + toks[2] + "'");
                    }
                    if (e.cost <= 0) throw ParseError(lineno, "edge cost must be positive");
                }
                auto key = std::minmax(e.u, e.v);
                if (edge_lines.count({key.first, key.second}))
                    throw ParseError(lineno, "duplicate edge " + toks[0] + " " + toks[1]);
                edge_lines[{key.first, key.second}] = lineno;
                topo.edges.push_back(e);
                break;
            }
            case Section::Connections: {
                if (toks.size() != 2) throw ParseError(lineno, "connection lines are 's r'");
                auto lookup = [&](const std::string& name) {
                    auto it = index.find(name);
                    if (it == index.end())
                        throw ParseError(lineno, "unknown node '" + name + "'");
                    return it->second;
                };
                Connection c;
                c.src = lookup(toks[0]);
                c.dst = lookup(toks[1]);
                if (c.src == c.dst)
                    throw ParseError(lineno, "connection source equals destination");
                inst.connections.conns.push_back(c);
                break;
            }
        }
    }

    if (topo.nodes.empty()) throw Error("topology has no nodes");
    return inst;
}

ProvisioningInstance load_topology(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open topology file '" + path + "'");
    return parse_topology(in);
}

}  // namespace npc
