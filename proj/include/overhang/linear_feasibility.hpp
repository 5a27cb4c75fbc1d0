#pragma once

#include <cstddef>
#include <vector>

#include "overhang/errors.hpp"
#include "overhang/rational.hpp"

namespace overhang {

/// Equality system A x = b over nonnegative variables x >= 0.
struct LinearSystem {
    struct Row {
        std::vector<Rational> coeffs;
        Rational rhs;
    };
    std::size_t num_vars = 0;
    std::vector<Row> rows;

    void check_shape() const {
        for (const auto& r : rows)
            if (r.coeffs.size() != num_vars)
                throw DimensionMismatchError("row width != num_vars");
    }
};

/// Either a nonnegative assignment satisfying every row exactly, or a
/// Farkas witness y (one entry per row) with y'A <= 0 componentwise and
/// y'b > 0, proving no such assignment exists.
struct FeasibilityResult {
    bool feasible = false;
    std::vector<Rational> assignment; // when feasible
    std::vector<Rational> farkas;     // when infeasible
};

inline bool verify_feasible(const LinearSystem& sys,
                            const std::vector<Rational>& assignment) {
    sys.check_shape();
    if (assignment.size() != sys.num_vars)
        throw DimensionMismatchError("assignment width != num_vars");
    for (const auto& x : assignment)
        if (x < 0)
            return false;
    for (const auto& row : sys.rows) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < sys.num_vars; ++j)
            if (!row.coeffs[j].is_zero() && !assignment[j].is_zero())
                lhs += row.coeffs[j] * assignment[j];
        if (lhs != row.rhs)
            return false;
    }
    return true;
}

inline bool verify_farkas(const LinearSystem& sys,
                          const std::vector<Rational>& witness) {
    sys.check_shape();
    if (witness.size() != sys.rows.size())
        throw DimensionMismatchError("witness length != row count");
    for (std::size_t j = 0; j < sys.num_vars; ++j) {
        Rational col = 0;
        for (std::size_t i = 0; i < sys.rows.size(); ++i)
            if (!witness[i].is_zero())
                col += witness[i] * sys.rows[i].coeffs[j];
        if (col > 0)
            return false;
    }
    Rational rhs = 0;
    for (std::size_t i = 0; i < sys.rows.size(); ++i)
        rhs += witness[i] * sys.rows[i].rhs;
    return rhs > 0;
}

/// Phase-1 simplex over exact rationals on a dense tableau. Entering
/// variable by most-negative reduced cost while pivots make progress,
/// switching permanently to Bland's rule after a long degenerate streak so
/// termination is guaranteed; ties always break toward the smallest index,
/// so the solve is deterministic. The returned certificate (assignment or
/// Farkas witness) always verifies exactly.
inline FeasibilityResult solve_feasibility(const LinearSystem& sys) {
    sys.check_shape();
    const std::size_t m = sys.rows.size();
    const std::size_t nv = sys.num_vars;
    const std::size_t cols = nv + m + 1; // vars, artificials, rhs
    const std::size_t rhs = nv + m;

    // Tableau rows 0..m-1 are constraints (signs flipped so rhs >= 0),
    // row m holds reduced costs of "minimize sum of artificials".
    std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(cols));
    std::vector<int> flip(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
        int s = sys.rows[i].rhs < 0 ? -1 : 1;
        flip[i] = s;
        for (std::size_t j = 0; j < nv; ++j)
            t[i][j] = s < 0 ? -sys.rows[i].coeffs[j] : sys.rows[i].coeffs[j];
        t[i][nv + i] = 1;
        t[i][rhs] = s < 0 ? -sys.rows[i].rhs : sys.rows[i].rhs;
    }
    for (std::size_t j = 0; j < nv; ++j)
        for (std::size_t i = 0; i < m; ++i)
            t[m][j] -= t[i][j];
    for (std::size_t i = 0; i < m; ++i)
        t[m][rhs] -= t[i][rhs];

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i)
        basis[i] = nv + i;

    std::vector<std::size_t> pivot_cols;
    auto pivot = [&](std::size_t r, std::size_t s) {
        pivot_cols.clear();
        const Rational p = t[r][s];
        for (std::size_t j = 0; j < cols; ++j)
            if (!t[r][j].is_zero()) {
                t[r][j] /= p;
                pivot_cols.push_back(j);
            }
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == r || t[i][s].is_zero())
                continue;
            const Rational f = t[i][s];
            for (std::size_t j : pivot_cols)
                t[i][j] -= f * t[r][j];
        }
        basis[r] = s;
    };

    bool blands = false;
    std::size_t degenerate_streak = 0;
    for (;;) {
        // entering column
        std::size_t enter = cols;
        if (blands) {
            for (std::size_t j = 0; j < nv + m; ++j)
                if (t[m][j] < 0) {
                    enter = j;
                    break;
                }
        } else {
            for (std::size_t j = 0; j < nv + m; ++j)
                if (t[m][j] < 0 && (enter == cols || t[m][j] < t[m][enter]))
                    enter = j;
        }
        if (enter == cols)
            break; // optimal

        // leaving row: minimum ratio, ties toward smallest basis index
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0)
                continue;
            Rational ratio = t[i][rhs] / t[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m)
            throw Error("phase-1 objective unbounded: corrupt tableau");

        if (best.is_zero()) {
            if (++degenerate_streak > 256)
                blands = true;
        } else {
            degenerate_streak = 0;
        }
        pivot(leave, enter);
    }

    FeasibilityResult res;
    if (t[m][rhs].is_zero()) {
        res.feasible = true;
        res.assignment.assign(nv, Rational(0));
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < nv)
                res.assignment[basis[i]] = t[i][rhs];
    } else {
        // Reduced cost under artificial column i is 1 - y_i for the dual
        // vector y of the flipped system.
        res.feasible = false;
        res.farkas.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            Rational y = Rational(1) - t[m][nv + i];
            res.farkas[i] = flip[i] < 0 ? -y : y;
        }
    }
    return res;
}

} // namespace overhang
