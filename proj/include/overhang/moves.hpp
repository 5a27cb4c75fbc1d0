#pragma once

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "overhang/distribution.hpp"
#include "overhang/errors.hpp"
#include "overhang/rational.hpp"

namespace overhang {

/// Mass redistribution within [a, b] that preserves total mass and torque:
/// a signed delta with M0 = M1 = 0 supported on the interval. Moves act on
/// unit intervals unless explicitly constructed wide.
class Move {
public:
    Move(Rational a, Rational b, SignedDistribution delta, bool wide = false)
        : a_(std::move(a)), b_(std::move(b)), delta_(std::move(delta)),
          wide_(wide) {
        if (b_ < a_)
            throw PreconditionError("move interval with b < a");
        if (!wide_ && b_ - a_ != 1)
            throw PreconditionError("move interval must have length 1");
        for (const auto& p : delta_.points())
            if (p.x < a_ || p.x > b_)
                throw PreconditionError("move delta outside its interval");
        if (!moment(delta_, 0).is_zero() || !moment(delta_, 1).is_zero())
            throw PreconditionError("move delta must have M0 = M1 = 0");
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const SignedDistribution& delta() const { return delta_; }
    bool wide() const { return wide_; }
    Rational center() const { return (a_ + b_) / 2; }

private:
    Rational a_, b_;
    SignedDistribution delta_;
    bool wide_;
};

/// A move whose applied delta additionally removes a unit point mass at the
/// interval center: the block's own weight, consumed by the move.
class LossyMove {
public:
    explicit LossyMove(Move move) : move_(std::move(move)) {}

    const Move& move() const { return move_; }
    const Rational& a() const { return move_.a(); }
    const Rational& b() const { return move_.b(); }
    Rational center() const { return move_.center(); }

    SignedDistribution applied_delta() const {
        return move_.delta() - SignedDistribution{{move_.center(), 1}};
    }

private:
    Move move_;
};

/// Pushes all mass strictly inside (a, b) onto the endpoints a and b,
/// preserving total mass and torque.
struct ExtremeMove {
    Rational a, b;
    ExtremeMove(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {
        if (!(a < b))
            throw PreconditionError("extreme move needs a < b");
    }
    Rational center() const { return (a + b) / 2; }
};

using AnyMove = std::variant<Move, LossyMove, ExtremeMove>;

inline Distribution apply_move(const Distribution& mu, const Move& v) {
    return to_distribution(mu.signed_view() + v.delta());
}

inline Distribution apply_lossy(const Distribution& mu, const LossyMove& v) {
    return to_distribution(mu.signed_view() + v.applied_delta());
}

inline Distribution apply_extreme(const Distribution& mu,
                                  const ExtremeMove& e) {
    Rational interior = 0, interior_torque = 0;
    std::vector<MassPoint> pts;
    for (const auto& p : mu.points()) {
        if (e.a < p.x && p.x < e.b) {
            interior += p.m;
            interior_torque += p.m * p.x;
        } else {
            pts.push_back(p);
        }
    }
    if (!interior.is_zero()) {
        Rational width = e.b - e.a;
        pts.push_back({e.a, (interior * e.b - interior_torque) / width});
        pts.push_back({e.b, (interior_torque - interior * e.a) / width});
    }
    return Distribution(std::move(pts));
}

inline Distribution apply_any(const Distribution& mu, const AnyMove& v) {
    return std::visit(
        [&](const auto& m) -> Distribution {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Move>)
                return apply_move(mu, m);
            else if constexpr (std::is_same_v<T, LossyMove>)
                return apply_lossy(mu, m);
            else
                return apply_extreme(mu, m);
        },
        v);
}

inline Rational center_of(const AnyMove& v) {
    return std::visit([](const auto& m) { return m.center(); }, v);
}

/// A sequence of distributions mu_0 .. mu_l under a sequence of moves; the
/// constructor applies each move, so every step is valid by construction.
class Trace {
public:
    explicit Trace(Distribution initial, std::vector<AnyMove> moves = {})
        : initial_(std::move(initial)) {
        const Distribution* cur = &initial_;
        steps_.reserve(moves.size());
        for (auto& v : moves) {
            Distribution next = apply_any(*cur, v);
            steps_.emplace_back(std::move(v), std::move(next));
            cur = &steps_.back().second;
        }
    }

    /// Assembles a trace without validating that each distribution is the
    /// image of its predecessor. For tests that plant violations.
    static Trace unchecked(Distribution initial,
                           std::vector<std::pair<AnyMove, Distribution>> steps) {
        Trace t(std::move(initial));
        t.steps_ = std::move(steps);
        return t;
    }

    const Distribution& initial() const { return initial_; }
    const std::vector<std::pair<AnyMove, Distribution>>& steps() const {
        return steps_;
    }
    std::size_t length() const { return steps_.size(); }
    const Distribution& final() const {
        return steps_.empty() ? initial_ : steps_.back().second;
    }
    const Distribution& at(std::size_t i) const {
        return i == 0 ? initial_ : steps_[i - 1].second;
    }

    bool plain_moves_only() const {
        for (const auto& [v, d] : steps_)
            if (!std::holds_alternative<Move>(v))
                return false;
        return true;
    }
    bool unit_moves_only() const {
        for (const auto& [v, d] : steps_) {
            if (const Move* mv = std::get_if<Move>(&v)) {
                if (mv->wide())
                    return false;
            } else if (const LossyMove* lm = std::get_if<LossyMove>(&v)) {
                if (lm->move().wide())
                    return false;
            } else {
                const auto& e = std::get<ExtremeMove>(v);
                if (e.b - e.a != 1)
                    return false;
            }
        }
        return true;
    }

private:
    Distribution initial_;
    std::vector<std::pair<AnyMove, Distribution>> steps_;
};

/// mu_max{x > a}: the largest right-tail mass any distribution of the trace
/// attains beyond a.
inline Rational mu_max(const Trace& trace, const Rational& a) {
    Rational best = mass_greater(trace.initial(), a);
    for (const auto& [v, d] : trace.steps())
        best = std::max(best, mass_greater(d, a));
    return best;
}

inline Rational mu_max_geq(const Trace& trace, const Rational& a) {
    Rational best = mass_geq(trace.initial(), a);
    for (const auto& [v, d] : trace.steps())
        best = std::max(best, mass_geq(d, a));
    return best;
}

/// Scan set for the weight-constrained decision: every move center and
/// every coordinate carrying mass anywhere in the trace, plus a probe below
/// the smallest and between consecutive breakpoints. Both sides of the
/// defining inequality are step functions of a, constant between these
/// points.
inline std::vector<Rational> weight_constraint_scan_points(const Trace& t) {
    std::vector<Rational> brk;
    for (const auto& [v, d] : t.steps())
        brk.push_back(center_of(v));
    for (const auto& p : t.initial().points())
        brk.push_back(p.x);
    for (const auto& [v, d] : t.steps())
        for (const auto& p : d.points())
            brk.push_back(p.x);
    std::sort(brk.begin(), brk.end());
    brk.erase(std::unique(brk.begin(), brk.end()), brk.end());
    if (brk.empty())
        return {};
    std::vector<Rational> scan;
    scan.push_back(brk.front() - 1);
    for (std::size_t i = 0; i < brk.size(); ++i) {
        scan.push_back(brk[i]);
        if (i + 1 < brk.size())
            scan.push_back((brk[i] + brk[i + 1]) / 2);
    }
    return scan;
}

/// Whether for every a the number of moves centered in (a, inf) is at most
/// mu_max{x > a}. Requires a trace of plain moves.
inline bool is_weight_constrained(const Trace& trace) {
    if (!trace.plain_moves_only())
        throw PreconditionError(
            "weight-constrained check requires plain moves");
    std::vector<Rational> centers;
    for (const auto& [v, d] : trace.steps())
        centers.push_back(std::get<Move>(v).center());
    for (const Rational& a : weight_constraint_scan_points(trace)) {
        long count = 0;
        for (const auto& c : centers)
            if (c > a)
                ++count;
        if (Rational(count) > mu_max(trace, a))
            return false;
    }
    return true;
}

} // namespace overhang
