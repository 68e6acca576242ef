#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "npc/rational.hpp"
#include "npc/topology.hpp"

namespace npc {

enum class VarKind {
    Group,          // n^{hl}: connections h and l protected together
    Working,        // z^h_{ij}
    Backup,         // b^h_{ij}
    SCircuit,       // p^h_{ij}
    RCircuit,       // q^h_{ij}
    SNeeded,        // P^h
    RNeeded,        // Q^h
    SecondaryCost,  // beta^h_{ij}
    SJointNode,     // P^{hl}_j
    RJointNode,     // Q^{hl}_j
    SShared,        // script-P^{hl}_{ij}
    RShared,        // script-Q^{hl}_{ij}
    SCost,          // pi^h_{ij}
    RCost,          // theta^h_{ij}
};

struct Variable {
    VarKind kind;
    std::size_t h = SIZE_MAX;
    std::size_t l = SIZE_MAX;
    std::size_t arc = SIZE_MAX;
    std::size_t node = SIZE_MAX;
    std::string name;  // deterministic LP token
};

struct Term {
    std::size_t var;
    Rational coeff;
};

enum class Sense { LE, GE, EQ };

struct Constraint {
    std::string name;
    std::vector<Term> terms;
    Sense sense = Sense::LE;
    Rational rhs;
};

/// Binary linear program over structured variables.  Declaration order of
/// `vars` doubles as the branching order of the solver: group variables
/// first, then working paths, then the circuit and cost machinery.
struct IlpModel {
    std::vector<Variable> vars;
    std::vector<Constraint> constraints;
    std::vector<Rational> objective;  // minimization, one coefficient per var

    // Index maps (SIZE_MAX = absent).
    std::size_t num_conns = 0;
    std::size_t num_arcs = 0;
    std::vector<std::vector<std::size_t>> idx_group;  // [h][l], h < l
    std::vector<std::vector<std::size_t>> idx_z, idx_b, idx_beta, idx_p, idx_q, idx_pi, idx_th;
    std::vector<std::size_t> idx_P, idx_Q;
    std::vector<std::vector<std::size_t>> idx_Pn, idx_Qn;  // [pair][node]
    std::vector<std::vector<std::size_t>> idx_Px, idx_Qx;  // [pair][arc]
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // pair index -> (h, l)

    std::size_t pair_index(std::size_t h, std::size_t l) const;

    Rational objective_value(const std::vector<std::uint8_t>& assignment) const;
};

/// Emits the full provisioning model for the instance: working-path flow and
/// pairwise disjointness, 1+1 secondary paths with coding-aware cost, S and
/// R circuit circulations with joint-node requirements, transitive grouping,
/// and the shared-circuit cost accounting.  Objective: minimize
/// sum of cost * (z + beta + 0.5 pi + 0.5 theta).
IlpModel build_ilp(const Topology& topo, const ConnectionSet& conns);

/// Evaluates every constraint against a full 0/1 assignment; returns the
/// name of the first violated constraint, or empty when feasible.  This is
/// the replay validator: it shares nothing with the solver's propagation.
std::string check_feasible(const IlpModel& model, const std::vector<std::uint8_t>& assignment);

}  // namespace npc
