#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "overhang/distribution.hpp"
#include "overhang/errors.hpp"
#include "overhang/geometry.hpp"
#include "overhang/linear_feasibility.hpp"
#include "overhang/moves.hpp"

namespace overhang {

/// One point force within a contact interval: the force block
/// `contact.lower` applies upward on `contact.upper` at `position`.
struct ForceEntry {
    std::size_t contact; // index into contacts(stack)
    Rational position;
    Rational magnitude;
    friend bool operator==(const ForceEntry&, const ForceEntry&) = default;
};

/// How a point weight's mass is divided among the blocks carrying it.
/// Emitted only when a weight sits exactly on a seam shared by several
/// block tops; a uniquely supported weight loads its block implicitly.
struct WeightShare {
    std::size_t weight; // index into stack.weights
    std::size_t block;  // 1-based canonical block index
    Rational amount;
    friend bool operator==(const WeightShare&, const WeightShare&) = default;
};

/// Witness collection of nonnegative point forces proving balance; at most
/// two entries per contact, at the interval endpoints, when produced by
/// check_balance.
struct ForceCertificate {
    std::vector<ForceEntry> entries;
    std::vector<WeightShare> weight_shares;
    friend bool operator==(const ForceCertificate&,
                           const ForceCertificate&) = default;
};

/// The equilibrium feasibility system of a stack plus the meaning of its
/// variables and rows. Variables are candidate force magnitudes at the
/// endpoints of each contact interval (one variable for a degenerate
/// contact), followed by mass shares of multiply-supported point weights.
/// Rows come in pairs per block -- net force and net moment -- followed by
/// one mass-conservation row per shared weight. The table is unconstrained
/// and contributes no rows.
struct EquilibriumSystem {
    struct VarInfo {
        enum class Kind { ContactForce, WeightShare } kind;
        std::size_t contact = 0; // ContactForce: index into contact_list
        Rational position;       //   and the endpoint it acts at
        std::size_t weight = 0;  // WeightShare: weight index
        std::size_t block = 0;   //   and 1-based receiving block
    };
    LinearSystem system;
    std::vector<Contact> contact_list;
    std::vector<VarInfo> vars;
};

inline EquilibriumSystem equilibrium_system(const Stack& stack) {
    EquilibriumSystem eq;
    eq.contact_list = contacts(stack);
    const std::size_t n = stack.blocks.size();

    for (std::size_t c = 0; c < eq.contact_list.size(); ++c) {
        const Contact& ct = eq.contact_list[c];
        eq.vars.push_back({EquilibriumSystem::VarInfo::Kind::ContactForce, c,
                           ct.a, 0, 0});
        if (!ct.degenerate())
            eq.vars.push_back({EquilibriumSystem::VarInfo::Kind::ContactForce,
                               c, ct.b, 0, 0});
    }

    // Fixed loads from uniquely supported weights; share variables when a
    // weight touches several block tops at once.
    std::vector<Rational> load_mass(n, Rational(0));
    std::vector<Rational> load_torque(n, Rational(0));
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> shared;
    for (std::size_t w = 0; w < stack.weights.size(); ++w) {
        const PointWeight& pw = stack.weights[w];
        if (rests_on_table(pw))
            continue;
        auto sup = supporting_blocks(stack, pw);
        if (sup.empty())
            throw DanglingWeightError(w + 1);
        if (sup.size() == 1) {
            load_mass[sup[0] - 1] += pw.mass;
            load_torque[sup[0] - 1] += pw.mass * pw.x;
        } else {
            for (std::size_t b : sup)
                eq.vars.push_back(
                    {EquilibriumSystem::VarInfo::Kind::WeightShare, 0,
                     Rational(0), w, b});
            shared.emplace_back(w, std::move(sup));
        }
    }

    eq.system.num_vars = eq.vars.size();
    eq.system.rows.assign(2 * n + shared.size(),
                          {std::vector<Rational>(eq.system.num_vars),
                           Rational(0)});
    for (std::size_t i = 0; i < n; ++i) {
        eq.system.rows[2 * i].rhs = Rational(1) + load_mass[i];
        eq.system.rows[2 * i + 1].rhs =
            stack.blocks[i].x + Rational(1, 2) + load_torque[i];
    }

    for (std::size_t v = 0; v < eq.vars.size(); ++v) {
        const auto& info = eq.vars[v];
        if (info.kind == EquilibriumSystem::VarInfo::Kind::ContactForce) {
            const Contact& ct = eq.contact_list[info.contact];
            eq.system.rows[2 * (ct.upper - 1)].coeffs[v] = 1;
            eq.system.rows[2 * (ct.upper - 1) + 1].coeffs[v] = info.position;
            if (ct.lower >= 1) {
                eq.system.rows[2 * (ct.lower - 1)].coeffs[v] = -1;
                eq.system.rows[2 * (ct.lower - 1) + 1].coeffs[v] =
                    -info.position;
            }
        } else {
            eq.system.rows[2 * (info.block - 1)].coeffs[v] = -1;
            eq.system.rows[2 * (info.block - 1) + 1].coeffs[v] =
                -stack.weights[info.weight].x;
        }
    }
    for (std::size_t s = 0; s < shared.size(); ++s) {
        auto& row = eq.system.rows[2 * n + s];
        row.rhs = stack.weights[shared[s].first].mass;
        for (std::size_t v = 0; v < eq.vars.size(); ++v)
            if (eq.vars[v].kind ==
                    EquilibriumSystem::VarInfo::Kind::WeightShare &&
                eq.vars[v].weight == shared[s].first)
                row.coeffs[v] = 1;
    }
    return eq;
}

/// Balanced with an exact force certificate, or unbalanced with a Farkas
/// witness of the equilibrium system (one entry per row).
struct BalanceVerdict {
    bool balanced = false;
    ForceCertificate certificate;
    std::vector<Rational> farkas;
};

inline BalanceVerdict check_balance(const Stack& stack) {
    EquilibriumSystem eq = equilibrium_system(stack);
    FeasibilityResult fr = solve_feasibility(eq.system);
    BalanceVerdict verdict;
    verdict.balanced = fr.feasible;
    if (fr.feasible) {
        for (std::size_t v = 0; v < eq.vars.size(); ++v) {
            const auto& info = eq.vars[v];
            if (info.kind == EquilibriumSystem::VarInfo::Kind::ContactForce)
                verdict.certificate.entries.push_back(
                    {info.contact, info.position, fr.assignment[v]});
            else
                verdict.certificate.weight_shares.push_back(
                    {info.weight, info.block, fr.assignment[v]});
        }
    } else {
        verdict.farkas = std::move(fr.farkas);
    }
    return verdict;
}

/// Exact check that a certificate puts every block of the stack in
/// equilibrium: nonnegative magnitudes, positions inside their contact
/// intervals, weight shares consistent, and both balance equations holding
/// exactly per block.
inline bool verify_certificate(const Stack& stack,
                               const ForceCertificate& cert) {
    const std::vector<Contact> cts = contacts(stack);
    const std::size_t n = stack.blocks.size();
    for (const auto& e : cert.entries) {
        if (e.contact >= cts.size())
            throw IndexError("certificate entry names contact " +
                             std::to_string(e.contact));
        if (e.magnitude < 0)
            return false;
        if (e.position < cts[e.contact].a || e.position > cts[e.contact].b)
            return false;
    }

    std::vector<Rational> load_mass(n, Rational(0));
    std::vector<Rational> load_torque(n, Rational(0));
    std::vector<Rational> shared_total(stack.weights.size(), Rational(0));
    std::vector<bool> has_shares(stack.weights.size(), false);
    for (const auto& ws : cert.weight_shares) {
        if (ws.weight >= stack.weights.size() || ws.block < 1 ||
            ws.block > n)
            throw IndexError("weight share names a missing weight or block");
        if (ws.amount < 0)
            return false;
        auto sup = supporting_blocks(stack, stack.weights[ws.weight]);
        if (std::find(sup.begin(), sup.end(), ws.block) == sup.end())
            return false; // share assigned to a block not carrying it
        has_shares[ws.weight] = true;
        shared_total[ws.weight] += ws.amount;
        load_mass[ws.block - 1] += ws.amount;
        load_torque[ws.block - 1] += ws.amount * stack.weights[ws.weight].x;
    }
    for (std::size_t w = 0; w < stack.weights.size(); ++w) {
        const PointWeight& pw = stack.weights[w];
        if (rests_on_table(pw)) {
            if (has_shares[w])
                return false;
            continue;
        }
        if (has_shares[w]) {
            if (shared_total[w] != pw.mass)
                return false;
        } else {
            auto sup = supporting_blocks(stack, pw);
            if (sup.size() != 1)
                return false; // ambiguous load left unresolved
            load_mass[sup[0] - 1] += pw.mass;
            load_torque[sup[0] - 1] += pw.mass * pw.x;
        }
    }

    std::vector<Rational> up_force(n, Rational(0)), up_torque(n, Rational(0));
    std::vector<Rational> down_force(n, Rational(0)),
        down_torque(n, Rational(0));
    for (const auto& e : cert.entries) {
        const Contact& ct = cts[e.contact];
        up_force[ct.upper - 1] += e.magnitude;
        up_torque[ct.upper - 1] += e.magnitude * e.position;
        if (ct.lower >= 1) {
            down_force[ct.lower - 1] += e.magnitude;
            down_torque[ct.lower - 1] += e.magnitude * e.position;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (up_force[i] != Rational(1) + down_force[i] + load_mass[i])
            return false;
        if (up_torque[i] != stack.blocks[i].x + Rational(1, 2) +
                                down_torque[i] + load_torque[i])
            return false;
    }
    return true;
}

/// F_i: the forces crossing the i-th slice -- every upward force applied by
/// a block in {B_0..B_i} on a block in {B_{i+1}..B_n} -- as a distribution
/// over positions. Expects a verified certificate of a canonically ordered
/// stack. F_0 is the table's full load and acts at positions <= 0.
inline Distribution slice_forces(const Stack& stack,
                                 const ForceCertificate& cert,
                                 std::size_t i) {
    const std::vector<Contact> cts = contacts(stack);
    if (i > stack.blocks.size())
        throw IndexError("slice index exceeds block count");
    std::vector<MassPoint> pts;
    for (const auto& e : cert.entries) {
        if (e.contact >= cts.size())
            throw IndexError("certificate entry names contact " +
                             std::to_string(e.contact));
        const Contact& ct = cts[e.contact];
        if (ct.lower <= i && ct.upper > i)
            pts.push_back({e.position, e.magnitude});
    }
    return Distribution(std::move(pts));
}

/// mu_0 = F_0 plus the lossy moves of blocks B_1..B_{k-1}; replaying them
/// reproduces F_{k-1}, the slice just below block k. Move j acts on
/// [x_j, x_j + 1] and its applied delta is F_j - F_{j-1}; block j's own
/// unit weight is the loss at the interval center.
struct LossySequence {
    Distribution initial;
    std::vector<LossyMove> moves;
};

inline LossySequence to_lossy_sequence(const Stack& stack,
                                       const ForceCertificate& cert,
                                       std::size_t k) {
    if (k < 1 || k > stack.blocks.size())
        throw IndexError("block index out of range");
    if (!verify_certificate(stack, cert))
        throw NotBalancedError("certificate does not balance the stack");
    for (const auto& pw : stack.weights) {
        auto sup = supporting_blocks(stack, pw);
        for (std::size_t b : sup)
            if (b < k)
                throw PreconditionError(
                    "lossy conversion is defined for unit blocks only; a "
                    "point weight rests on block " +
                    std::to_string(b));
    }

    LossySequence seq;
    seq.initial = slice_forces(stack, cert, 0);
    Distribution prev = seq.initial;
    for (std::size_t j = 1; j < k; ++j) {
        Distribution cur = slice_forces(stack, cert, j);
        Rational a = stack.blocks[j - 1].x;
        SignedDistribution delta =
            cur.signed_view() - prev.signed_view() +
            SignedDistribution{{a + Rational(1, 2), 1}};
        seq.moves.emplace_back(Move(a, a + 1, std::move(delta)));
        prev = std::move(cur);
    }
    return seq;
}

/// 1-based index of the first block in canonical order achieving the
/// stack's overhang.
inline std::size_t most_overhanging_block(const Stack& stack) {
    if (stack.blocks.empty())
        throw EmptyStackError();
    std::size_t best = 0;
    for (std::size_t i = 1; i < stack.blocks.size(); ++i)
        if (stack.blocks[i].x > stack.blocks[best].x)
            best = i;
    return best + 1;
}

} // namespace overhang
