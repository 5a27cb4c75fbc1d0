#pragma once

#include "overhang/distribution.hpp"
#include "overhang/moves.hpp"

namespace overhang {

/// Exact evaluation of S[mu]^2 <= (1/3) M2[mu] M0[mu]^3.
struct SpreadBound {
    Rational lhs; // S^2
    Rational rhs; // M2 M0^3 / 3
    bool ok;
};

inline SpreadBound check_spread_lemma(const Distribution& mu) {
    Rational s = spread(mu);
    Rational m0 = moment(mu, 0);
    SpreadBound r{s * s, moment(mu, 2) * m0 * m0 * m0 / 3, false};
    r.ok = r.lhs <= r.rhs;
    return r;
}

/// Exact evaluation of S[e mu] - S[mu] >= 3 (M2[e mu] - M2[mu])^2 for a
/// unit-width extreme move e.
struct ExtremeGainBound {
    Rational gain;  // spread gained by the extreme move
    Rational bound; // 3 (second-moment gain)^2
    bool ok;
};

inline ExtremeGainBound check_extreme_lemma(const Distribution& mu0,
                                            const ExtremeMove& e) {
    if (e.b - e.a != 1)
        throw PreconditionError("extreme-move bound requires a unit interval");
    Distribution mu1 = apply_extreme(mu0, e);
    Rational dm2 = moment(mu1, 2) - moment(mu0, 2);
    ExtremeGainBound r{spread(mu1) - spread(mu0), 3 * dm2 * dm2, false};
    r.ok = r.gain >= r.bound;
    return r;
}

} // namespace overhang
