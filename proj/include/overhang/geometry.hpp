#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <vector>

#include "overhang/errors.hpp"
#include "overhang/rational.hpp"

namespace overhang {

/// Unit-length, unit-weight block; occupies [x, x+1] x [y, y+h].
struct Block {
    Rational x; // left edge
    Rational y; // bottom edge
    friend bool operator==(const Block&, const Block&) = default;
};

/// Arbitrary-mass load resting on a block top or on the table.
struct PointWeight {
    Rational x;
    Rational y;    // level of the surface it rests on
    Rational mass; // > 0
    friend bool operator==(const PointWeight&, const PointWeight&) = default;
};

/// 2D block stack on a table whose top-right corner is the origin; the
/// table occupies x <= 0, y <= 0. Canonical block order is (y, x)
/// ascending: bottom to top, left to right.
struct Stack {
    std::vector<Block> blocks;
    Rational height = 1; // common block height h; verdicts do not depend on it
    std::vector<PointWeight> weights;
    friend bool operator==(const Stack&, const Stack&) = default;
};

/// Interval [a, b] along which block `upper` rests on block `lower`
/// (lower = 0 means the table). Indices are 1-based in canonical order.
/// a = b is a single-point contact and is admitted.
struct Contact {
    std::size_t upper = 0;
    std::size_t lower = 0;
    Rational a, b;
    bool degenerate() const { return a == b; }
    friend bool operator==(const Contact&, const Contact&) = default;
};

inline bool rests_on_table(const PointWeight& w) {
    return w.y == 0 && w.x <= 0;
}

/// 1-based indices of the blocks whose top surface carries this weight.
/// Empty for table-resting weights.
inline std::vector<std::size_t> supporting_blocks(const Stack& stack,
                                                  const PointWeight& w) {
    std::vector<std::size_t> out;
    if (rests_on_table(w))
        return out;
    for (std::size_t j = 0; j < stack.blocks.size(); ++j) {
        const Block& b = stack.blocks[j];
        if (b.y + stack.height == w.y && b.x <= w.x && w.x <= b.x + 1)
            out.push_back(j + 1);
    }
    return out;
}

/// Sorts blocks into canonical order and checks all stack invariants:
/// positive height, pairwise disjoint interiors, positive point-weight
/// masses, and every weight supported by a block top or the table.
inline Stack validate(Stack stack) {
    if (stack.height <= 0)
        throw InvalidStackError("block height must be positive");
    auto& bs = stack.blocks;
    std::sort(bs.begin(), bs.end(), [](const Block& p, const Block& q) {
        if (p.y != q.y)
            return p.y < q.y;
        return p.x < q.x;
    });
    const Rational& h = stack.height;
    // Sorted by (y, x): only nearby blocks can overlap.
    for (std::size_t i = 0; i < bs.size(); ++i) {
        for (std::size_t j = i + 1; j < bs.size(); ++j) {
            if (bs[j].y - bs[i].y >= h)
                break;
            Rational dx = bs[j].x - bs[i].x;
            if (dx.abs() < 1)
                throw OverlapError(i + 1, j + 1);
        }
    }
    for (std::size_t w = 0; w < stack.weights.size(); ++w) {
        const auto& pw = stack.weights[w];
        if (pw.mass <= 0)
            throw InvalidStackError("point weight mass must be positive");
        if (!rests_on_table(pw) && supporting_blocks(stack, pw).empty())
            throw DanglingWeightError(w + 1);
    }
    return stack;
}

/// All rests-on contact intervals of a valid stack, upper index ascending
/// (table contact first for each block). a = max of left edges, b = min of
/// right edges; table contacts exist for blocks at y = 0 with x <= 0, and
/// may degenerate to the single point [0, 0].
inline std::vector<Contact> contacts(const Stack& stack) {
    const auto& bs = stack.blocks;
    const Rational& h = stack.height;
    std::map<Rational, std::vector<std::size_t>> by_level;
    for (std::size_t i = 0; i < bs.size(); ++i)
        by_level[bs[i].y].push_back(i);

    std::vector<Contact> out;
    for (std::size_t i = 0; i < bs.size(); ++i) {
        const Block& u = bs[i];
        if (u.y == 0 && u.x <= 0)
            out.push_back({i + 1, 0, u.x, std::min(u.x + 1, Rational(0))});
        auto it = by_level.find(u.y - h);
        if (it == by_level.end())
            continue;
        for (std::size_t j : it->second) {
            const Block& l = bs[j];
            Rational a = std::max(u.x, l.x);
            Rational b = std::min(u.x + 1, l.x + 1);
            if (a <= b)
                out.push_back({i + 1, j + 1, a, b});
        }
    }
    return out;
}

/// max over blocks of (right edge x + 1); the table edge sits at x = 0.
inline Rational overhang_of(const Stack& stack) {
    if (stack.blocks.empty())
        throw EmptyStackError();
    Rational best = stack.blocks.front().x;
    for (const auto& b : stack.blocks)
        best = std::max(best, b.x);
    return best + 1;
}

} // namespace overhang
