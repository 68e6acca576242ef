#include "npc/ilp.hpp"

#include <algorithm>

namespace npc {

std::size_t IlpModel::pair_index(std::size_t h, std::size_t l) const {
    if (h > l) std::swap(h, l);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (pairs[i].first == h && pairs[i].second == l) return i;
    throw Error("pair index out of range");
}

Rational IlpModel::objective_value(const std::vector<std::uint8_t>& assignment) const {
    if (assignment.size() != vars.size()) throw Error("assignment size mismatch");
    Rational total(0);
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (assignment[i]) total = total + objective[i];
    return total;
}

namespace {

class ModelBuilder {
public:
    ModelBuilder(const Topology& topo, const ConnectionSet& conns)
        : topo_(topo), conns_(conns) {}

    IlpModel build();

private:
    const Topology& topo_;
    const ConnectionSet& conns_;
    IlpModel m_;

    std::size_t add_var(VarKind kind, std::string name, std::size_t h = SIZE_MAX,
                        std::size_t l = SIZE_MAX, std::size_t arc = SIZE_MAX,
                        std::size_t node = SIZE_MAX, Rational obj = Rational(0)) {
        Variable v;
        v.kind = kind;
        v.h = h;
        v.l = l;
        v.arc = arc;
        v.node = node;
        v.name = std::move(name);
        m_.vars.push_back(std::move(v));
        m_.objective.push_back(obj);
        return m_.vars.size() - 1;
    }

    void add_constraint(std::string name, std::vector<Term> terms, Sense sense, Rational rhs) {
        m_.constraints.push_back(Constraint{std::move(name), std::move(terms), sense, rhs});
    }

    std::string arc_tag(std::size_t a) const {
        return topo_.nodes[topo_.arc_from(a)] + "_" + topo_.nodes[topo_.arc_to(a)];
    }

    void declare_variables();
    void working_constraints();
    void secondary_constraints();
    void circuit_constraints(bool s_side);
    void transitivity_constraints();
    void cost_constraints(bool s_side);
};

void ModelBuilder::declare_variables() {
    const std::size_t N = conns_.size();
    const std::size_t A = topo_.arc_count();
    m_.num_conns = N;
    m_.num_arcs = A;

    auto arc_grid = [&] { return std::vector<std::vector<std::size_t>>(N, std::vector<std::size_t>(A, SIZE_MAX)); };

    m_.idx_group.assign(N, std::vector<std::size_t>(N, SIZE_MAX));
    m_.idx_z = arc_grid();
    m_.idx_b = arc_grid();
    m_.idx_beta = arc_grid();
    m_.idx_p = arc_grid();
    m_.idx_q = arc_grid();
    m_.idx_pi = arc_grid();
    m_.idx_th = arc_grid();
    m_.idx_P.assign(N, SIZE_MAX);
    m_.idx_Q.assign(N, SIZE_MAX);

    // Branching order: groupings gate everything, then working paths, then
    // backup paths and circuits, with the cost bookkeeping last.
    for (std::size_t h = 0; h < N; ++h)
        for (std::size_t l = h + 1; l < N; ++l) {
            std::size_t idx = add_var(VarKind::Group,
                                      "n_" + std::to_string(h) + "_" + std::to_string(l), h, l);
            m_.idx_group[h][l] = m_.idx_group[l][h] = idx;
            m_.pairs.emplace_back(h, l);
        }

    for (std::size_t h = 0; h < N; ++h)
        for (std::size_t a = 0; a < A; ++a)
            m_.idx_z[h][a] = add_var(VarKind::Working, "z_" + std::to_string(h) + "_" + arc_tag(a),
                                     h, SIZE_MAX, a, SIZE_MAX, Rational(topo_.arc_cost(a)));

    for (std::size_t h = 0; h < N; ++h)
        for (std::size_t a = 0; a < A; ++a)
            m_.idx_b[h][a] = add_var(VarKind::Backup, "b_" + std::to_string(h) + "_" + arc_tag(a),
                                     h, SIZE_MAX, a);

    for (std::size_t h = 0; h < N; ++h)
        for (std::size_t a = 0; a < A; ++a)
            m_.idx_p[h][a] = add_var(VarKind::SCircuit, "p_" + std::to_string(h) + "_" + arc_tag(a),
                                     h, SIZE_MAX, a);

    for (std::size_t h = 0; h < N; ++h)
        for (std::size_t a = 0; a < A; ++a)
            m_.idx_q[h][a] = add_var(VarKind::RCircuit, "q_" + std::to_string(h) + "_" + arc_tag(a),
                                     h, SIZE_MAX, a);

    for (std::size_t h = 0; h < N; ++h)
        m_.idx_P[h] = add_var(VarKind::SNeeded, "P_" + std::to_string(h), h);
    for (std::size_t h = 0; h < N; ++h)
        m_.idx_Q[h] = add_var(VarKind::RNeeded, "Q_" + std::to_string(h), h);

    for (std::size_t h = 0; h < N; ++h)
        for (std::size_t a = 0; a < A; ++a)
            m_.idx_beta[h][a] =
                add_var(VarKind::SecondaryCost, "beta_" + std::to_string(h) + "_" + arc_tag(a), h,
                        SIZE_MAX, a, SIZE_MAX, Rational(topo_.arc_cost(a)));

    const std::size_t P = m_.pairs.size();
    m_.idx_Pn.assign(P, std::vector<std::size_t>(topo_.node_count(), SIZE_MAX));
    m_.idx_Qn.assign(P, std::vector<std::size_t>(topo_.node_count(), SIZE_MAX));
    m_.idx_Px.assign(P, std::vector<std::size_t>(A, SIZE_MAX));
    m_.idx_Qx.assign(P, std::vector<std::size_t>(A, SIZE_MAX));

    for (std::size_t pi = 0; pi < P; ++pi) {
        auto [h, l] = m_.pairs[pi];
        for (std::size_t j = 0; j < topo_.node_count(); ++j)
            m_.idx_Pn[pi][j] = add_var(VarKind::SJointNode,
                                       "Pn_" + std::to_string(h) + "_" + std::to_string(l) + "_" +
                                           topo_.nodes[j],
                                       h, l, SIZE_MAX, j);
    }
    for (std::size_t pi = 0; pi < P; ++pi) {
        auto [h, l] = m_.pairs[pi];
        for (std::size_t j = 0; j < topo_.node_count(); ++j)
            m_.idx_Qn[pi][j] = add_var(VarKind::RJointNode,
                                       "Qn_" + std::to_string(h) + "_" + std::to_string(l) + "_" +
                                           topo_.nodes[j],
                                       h, l, SIZE_MAX, j);
    }
    for (std::size_t pi = 0; pi < P; ++pi) {
        auto [h, l] = m_.pairs[pi];
        for (std::size_t a = 0; a < A; ++a)
            m_.idx_Px[pi][a] = add_var(VarKind::SShared,
                                       "Px_" + std::to_string(h) + "_" + std::to_string(l) + "_" +
                                           arc_tag(a),
                                       h, l, a);
    }
    for (std::size_t pi = 0; pi < P; ++pi) {
        auto [h, l] = m_.pairs[pi];
        for (std::size_t a = 0; a < A; ++a)
            m_.idx_Qx[pi][a] = add_var(VarKind::RShared,
                                       "Qx_" + std::to_string(h) + "_" + std::to_string(l) + "_" +
                                           arc_tag(a),
                                       h, l, a);
    }

    for (std::size_t h = 0; h < N; ++h)
        for (std::size_t a = 0; a < A; ++a)
            m_.idx_pi[h][a] = add_var(VarKind::SCost, "pi_" + std::to_string(h) + "_" + arc_tag(a),
                                      h, SIZE_MAX, a, SIZE_MAX,
                                      Rational(topo_.arc_cost(a), 2));
    for (std::size_t h = 0; h < N; ++h)
        for (std::size_t a = 0; a < A; ++a)
            m_.idx_th[h][a] = add_var(VarKind::RCost, "th_" + std::to_string(h) + "_" + arc_tag(a),
                                      h, SIZE_MAX, a, SIZE_MAX,
                                      Rational(topo_.arc_cost(a), 2));
}

// Group I: sources generate, destinations consume, flow continuity, and the
// span-disjointness of jointly protected working paths.
void ModelBuilder::working_constraints() {
    const std::size_t N = conns_.size();
    const std::size_t A = topo_.arc_count();

    for (std::size_t h = 0; h < N; ++h) {
        const std::size_t s = conns_.conns[h].src;
        const std::size_t r = conns_.conns[h].dst;
        const std::string hs = std::to_string(h);

        for (std::size_t a = 0; a < A; ++a) {
            if (topo_.arc_to(a) == s)
                add_constraint("w_no_in_src_" + hs + "_" + arc_tag(a),
                               {{m_.idx_z[h][a], Rational(1)}}, Sense::EQ, Rational(0));
            if (topo_.arc_from(a) == r)
                add_constraint("w_no_out_dst_" + hs + "_" + arc_tag(a),
                               {{m_.idx_z[h][a], Rational(1)}}, Sense::EQ, Rational(0));
        }

        std::vector<Term> out_src, in_dst;
        for (std::size_t a = 0; a < A; ++a) {
            if (topo_.arc_from(a) == s) out_src.push_back({m_.idx_z[h][a], Rational(1)});
            if (topo_.arc_to(a) == r) in_dst.push_back({m_.idx_z[h][a], Rational(1)});
        }
        add_constraint("w_src_" + hs, std::move(out_src), Sense::EQ, Rational(1));
        add_constraint("w_dst_" + hs, std::move(in_dst), Sense::EQ, Rational(1));

        for (std::size_t j = 0; j < topo_.node_count(); ++j) {
            if (j == s || j == r) continue;
            std::vector<Term> terms;
            for (std::size_t a = 0; a < A; ++a) {
                if (topo_.arc_to(a) == j) terms.push_back({m_.idx_z[h][a], Rational(1)});
                if (topo_.arc_from(a) == j) terms.push_back({m_.idx_z[h][a], Rational(-1)});
            }
            add_constraint("w_flow_" + hs + "_" + topo_.nodes[j], std::move(terms), Sense::EQ,
                           Rational(0));
        }
    }

    // z^h_ij + z^h_ji + z^l_ij + z^l_ji + n^{hl} <= 2, one row per span and pair.
    for (std::size_t h = 0; h < N; ++h)
        for (std::size_t l = h + 1; l < N; ++l)
            for (std::size_t e = 0; e < topo_.edges.size(); ++e) {
                std::size_t fwd = 2 * e, rev = 2 * e + 1;
                add_constraint("w_disjoint_" + std::to_string(h) + "_" + std::to_string(l) + "_" +
                                   arc_tag(fwd),
                               {{m_.idx_z[h][fwd], Rational(1)},
                                {m_.idx_z[h][rev], Rational(1)},
                                {m_.idx_z[l][fwd], Rational(1)},
                                {m_.idx_z[l][rev], Rational(1)},
                                {m_.idx_group[h][l], Rational(1)}},
                               Sense::LE, Rational(2));
            }
}

// Group II: the 1+1 secondary path machinery.  b is a path like z; beta
// carries its cost unless the connection is protected with someone.
void ModelBuilder::secondary_constraints() {
    const std::size_t N = conns_.size();
    const std::size_t A = topo_.arc_count();

    for (std::size_t h = 0; h < N; ++h) {
        const std::size_t s = conns_.conns[h].src;
        const std::size_t r = conns_.conns[h].dst;
        const std::string hs = std::to_string(h);

        for (std::size_t a = 0; a < A; ++a) {
            if (topo_.arc_to(a) == s)
                add_constraint("s_no_in_src_" + hs + "_" + arc_tag(a),
                               {{m_.idx_b[h][a], Rational(1)}}, Sense::EQ, Rational(0));
            if (topo_.arc_from(a) == r)
                add_constraint("s_no_out_dst_" + hs + "_" + arc_tag(a),
                               {{m_.idx_b[h][a], Rational(1)}}, Sense::EQ, Rational(0));
        }

        std::vector<Term> out_src, in_dst;
        for (std::size_t a = 0; a < A; ++a) {
            if (topo_.arc_from(a) == s) out_src.push_back({m_.idx_b[h][a], Rational(1)});
            if (topo_.arc_to(a) == r) in_dst.push_back({m_.idx_b[h][a], Rational(1)});
        }
        add_constraint("s_src_" + hs, std::move(out_src), Sense::EQ, Rational(1));
        add_constraint("s_dst_" + hs, std::move(in_dst), Sense::EQ, Rational(1));

        for (std::size_t j = 0; j < topo_.node_count(); ++j) {
            if (j == s || j == r) continue;
            std::vector<Term> terms;
            for (std::size_t a = 0; a < A; ++a) {
                if (topo_.arc_to(a) == j) terms.push_back({m_.idx_b[h][a], Rational(1)});
                if (topo_.arc_from(a) == j) terms.push_back({m_.idx_b[h][a], Rational(-1)});
            }
            add_constraint("s_flow_" + hs + "_" + topo_.nodes[j], std::move(terms), Sense::EQ,
                           Rational(0));
        }

        for (std::size_t a = 0; a < A; ++a) {
            // beta >= b - sum_l n^{hl}
            std::vector<Term> terms{{m_.idx_b[h][a], Rational(1)},
                                    {m_.idx_beta[h][a], Rational(-1)}};
            for (std::size_t l = 0; l < N; ++l)
                if (l != h) terms.push_back({m_.idx_group[h][l], Rational(-1)});
            add_constraint("s_cost_" + hs + "_" + arc_tag(a), std::move(terms), Sense::LE,
                           Rational(0));

            add_constraint("s_disjoint_" + hs + "_" + arc_tag(a),
                           {{m_.idx_beta[h][a], Rational(1)}, {m_.idx_z[h][a], Rational(1)}},
                           Sense::LE, Rational(1));
        }
    }
}

// Groups III and IV: circuit circulations through the sources (S side) or
// destinations (R side), disjoint from the group's working paths, with a
// joint node per protected pair.  The two sides differ only in the endpoint
// used, the indicator (gamma vs delta), and the variable family.
void ModelBuilder::circuit_constraints(bool s_side) {
    const std::size_t N = conns_.size();
    const std::size_t A = topo_.arc_count();
    const auto& idx_c = s_side ? m_.idx_p : m_.idx_q;
    const auto& idx_need = s_side ? m_.idx_P : m_.idx_Q;
    const auto& idx_joint = s_side ? m_.idx_Pn : m_.idx_Qn;
    const char* tag = s_side ? "p" : "q";

    auto indicator = [&](std::size_t h, std::size_t l) {
        return s_side ? conns_.same_source(h, l) : conns_.same_destination(h, l);
    };

    for (std::size_t h = 0; h < N; ++h) {
        const std::size_t hub = s_side ? conns_.conns[h].src : conns_.conns[h].dst;
        const std::string hs = std::to_string(h);

        // P^h >= n^{hl} - gamma^{hl}  (Q^h / delta on the R side)
        for (std::size_t l = 0; l < N; ++l) {
            if (l == h) continue;
            add_constraint(std::string(tag) + "_need_" + hs + "_" + std::to_string(l),
                           {{m_.idx_group[h][l], Rational(1)}, {idx_need[h], Rational(-1)}},
                           Sense::LE, Rational(indicator(h, l) ? 1 : 0));
        }

        std::vector<Term> out_hub, in_hub;
        for (std::size_t a = 0; a < A; ++a) {
            if (topo_.arc_from(a) == hub) out_hub.push_back({idx_c[h][a], Rational(1)});
            if (topo_.arc_to(a) == hub) in_hub.push_back({idx_c[h][a], Rational(1)});
        }
        out_hub.push_back({idx_need[h], Rational(-1)});
        in_hub.push_back({idx_need[h], Rational(-1)});
        add_constraint(std::string(tag) + "_hub_out_" + hs, std::move(out_hub), Sense::EQ,
                       Rational(0));
        add_constraint(std::string(tag) + "_hub_in_" + hs, std::move(in_hub), Sense::EQ,
                       Rational(0));

        // Circulation at every node.
        for (std::size_t j = 0; j < topo_.node_count(); ++j) {
            std::vector<Term> terms;
            for (std::size_t a = 0; a < A; ++a) {
                if (topo_.arc_to(a) == j) terms.push_back({idx_c[h][a], Rational(1)});
                if (topo_.arc_from(a) == j) terms.push_back({idx_c[h][a], Rational(-1)});
            }
            add_constraint(std::string(tag) + "_flow_" + hs + "_" + topo_.nodes[j],
                           std::move(terms), Sense::EQ, Rational(0));
        }

        // Own working path and the circuit may not share a span; the halved
        // opposite-direction terms let a circuit use both directions of a
        // free span.
        for (std::size_t a = 0; a < A; ++a) {
            add_constraint(std::string(tag) + "_wdisj_" + hs + "_" + arc_tag(a),
                           {{m_.idx_z[h][a], Rational(1)},
                            {idx_c[h][a], Rational(1, 2)},
                            {idx_c[h][topo_.reverse_arc(a)], Rational(1, 2)}},
                           Sense::LE, Rational(1));
        }

        // Partner circuits must avoid this working path when grouped.
        for (std::size_t l = 0; l < N; ++l) {
            if (l == h) continue;
            for (std::size_t a = 0; a < A; ++a)
                add_constraint(std::string(tag) + "_xdisj_" + hs + "_" + std::to_string(l) + "_" +
                                   arc_tag(a),
                               {{m_.idx_z[h][a], Rational(1)},
                                {idx_c[l][a], Rational(1, 2)},
                                {idx_c[l][topo_.reverse_arc(a)], Rational(1, 2)},
                                {m_.idx_group[h][l], Rational(1)}},
                               Sense::LE, Rational(2));
        }
    }

    // Joint-node requirements per protected pair.
    for (std::size_t pi = 0; pi < m_.pairs.size(); ++pi) {
        auto [h, l] = m_.pairs[pi];
        const std::string ps = std::to_string(h) + "_" + std::to_string(l);
        for (std::size_t j = 0; j < topo_.node_count(); ++j) {
            std::vector<Term> in_terms{{idx_joint[pi][j], Rational(-2)}};
            std::vector<Term> out_terms{{idx_joint[pi][j], Rational(-2)}};
            for (std::size_t a = 0; a < A; ++a) {
                if (topo_.arc_to(a) == j) {
                    in_terms.push_back({idx_c[h][a], Rational(1)});
                    in_terms.push_back({idx_c[l][a], Rational(1)});
                }
                if (topo_.arc_from(a) == j) {
                    out_terms.push_back({idx_c[h][a], Rational(1)});
                    out_terms.push_back({idx_c[l][a], Rational(1)});
                }
            }
            add_constraint(std::string(tag) + "_joint_in_" + ps + "_" + topo_.nodes[j],
                           std::move(in_terms), Sense::GE, Rational(0));
            add_constraint(std::string(tag) + "_joint_out_" + ps + "_" + topo_.nodes[j],
                           std::move(out_terms), Sense::GE, Rational(0));
        }
        std::vector<Term> cover{{m_.idx_group[h][l], Rational(-1)}};
        for (std::size_t j = 0; j < topo_.node_count(); ++j)
            cover.push_back({idx_joint[pi][j], Rational(1)});
        add_constraint(std::string(tag) + "_joint_" + ps, std::move(cover), Sense::GE,
                       Rational(indicator(h, l) ? -1 : 0));
    }
}

void ModelBuilder::transitivity_constraints() {
    const std::size_t N = conns_.size();
    for (std::size_t h = 0; h < N; ++h)
        for (std::size_t l = 0; l < N; ++l) {
            if (l == h) continue;
            for (std::size_t k = 0; k < N; ++k) {
                if (k == h || k == l || h > k) continue;
                // n^{hl} + n^{lk} - 1 <= n^{hk}
                add_constraint("trans_" + std::to_string(h) + "_" + std::to_string(l) + "_" +
                                   std::to_string(k),
                               {{m_.idx_group[h][l], Rational(1)},
                                {m_.idx_group[l][k], Rational(1)},
                                {m_.idx_group[h][k], Rational(-1)}},
                               Sense::LE, Rational(1));
            }
        }
}

// Group V: shared-link accounting.  A shared variable may be 1 only when
// both circuits use the arc and the pair is grouped; the cost variable of a
// connection is then relieved on arcs where a lower-numbered partner pays.
void ModelBuilder::cost_constraints(bool s_side) {
    const std::size_t N = conns_.size();
    const std::size_t A = topo_.arc_count();
    const auto& idx_c = s_side ? m_.idx_p : m_.idx_q;
    const auto& idx_shared = s_side ? m_.idx_Px : m_.idx_Qx;
    const auto& idx_cost = s_side ? m_.idx_pi : m_.idx_th;
    const char* tag = s_side ? "pc" : "qc";

    for (std::size_t pi = 0; pi < m_.pairs.size(); ++pi) {
        auto [h, l] = m_.pairs[pi];
        for (std::size_t a = 0; a < A; ++a)
            add_constraint(std::string(tag) + "_share_" + std::to_string(h) + "_" +
                               std::to_string(l) + "_" + arc_tag(a),
                           {{idx_shared[pi][a], Rational(1)},
                            {idx_c[h][a], Rational(-1, 3)},
                            {idx_c[l][a], Rational(-1, 3)},
                            {m_.idx_group[h][l], Rational(-1, 3)}},
                           Sense::LE, Rational(0));
    }

    for (std::size_t l = 0; l < N; ++l)
        for (std::size_t a = 0; a < A; ++a) {
            std::vector<Term> terms{{idx_c[l][a], Rational(1)}, {idx_cost[l][a], Rational(-1)}};
            for (std::size_t h = 0; h < l; ++h)
                terms.push_back({idx_shared[m_.pair_index(h, l)][a], Rational(-1)});
            add_constraint(std::string(tag) + "_cost_" + std::to_string(l) + "_" + arc_tag(a),
                           std::move(terms), Sense::LE, Rational(0));
        }
}

IlpModel ModelBuilder::build() {
    declare_variables();
    working_constraints();
    secondary_constraints();
    circuit_constraints(true);
    circuit_constraints(false);
    transitivity_constraints();
    cost_constraints(true);
    cost_constraints(false);
    return std::move(m_);
}

}  // namespace

IlpModel build_ilp(const Topology& topo, const ConnectionSet& conns) {
    if (conns.size() == 0) throw Error("instance has no connections");
    return ModelBuilder(topo, conns).build();
}

std::string check_feasible(const IlpModel& model, const std::vector<std::uint8_t>& assignment) {
    if (assignment.size() != model.vars.size()) throw Error("assignment size mismatch");
    for (const Constraint& c : model.constraints) {
        Rational lhs(0);
        for (const Term& t : c.terms)
            if (assignment[t.var]) lhs = lhs + t.coeff;
        bool ok = true;
        switch (c.sense) {
            case Sense::LE: ok = lhs <= c.rhs; break;
            case Sense::GE: ok = c.rhs <= lhs; break;
            case Sense::EQ: ok = lhs == c.rhs; break;
        }
        if (!ok) return c.name;
    }
    return {};
}

}  // namespace npc
