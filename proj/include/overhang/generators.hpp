#pragma once

#include <cstddef>

#include "overhang/geometry.hpp"

namespace overhang {

namespace detail {

/// A row of `count` adjacent blocks centered about x = 0 at the given level.
inline void emit_centered_row(Stack& s, std::size_t count, std::size_t level) {
    Rational left = Rational(-static_cast<long>(count), 2);
    for (std::size_t j = 0; j < count; ++j)
        s.blocks.push_back({left + Rational(static_cast<long>(j)),
                            s.height * Rational(static_cast<long>(level))});
}

} // namespace detail

/// Classic harmonic stack: one block per level, the k-th block from the top
/// extending 1/(2k) beyond the one below it. Overhang is half the n-th
/// harmonic number.
inline Stack gen_harmonic(std::size_t n, Rational h = 1) {
    Stack s;
    s.height = h;
    Rational right_edge = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        // block k (from the bottom) has right edge sum_{i=n-k+1}^{n} 1/(2i)
        right_edge += Rational(1, 2 * static_cast<long>(n - k + 1));
        s.blocks.push_back({right_edge - 1,
                            h * Rational(static_cast<long>(k - 1))});
    }
    return validate(std::move(s));
}

/// Brick-wall d-stack: a single block balanced at the table edge, topped for
/// r = 2..d by an r-slab of 2r-3 alternating r-rows and (r-1)-rows (r-rows
/// at bottom and top), every row contiguous and symmetric about x = 0.
/// Contains d(d-1)(2d-1)/3 + 1 blocks and overhangs by d/2.
inline Stack gen_brickwall(std::size_t d, Rational h = 1) {
    Stack s;
    s.height = h;
    std::size_t level = 0;
    detail::emit_centered_row(s, 1, level++);
    for (std::size_t r = 2; r <= d; ++r)
        for (std::size_t row = 0; row < 2 * r - 3; ++row)
            detail::emit_centered_row(s, row % 2 == 0 ? r : r - 1, level++);
    return validate(std::move(s));
}

/// Rows of 1, 2, ..., r blocks bottom to top, all centered about x = 0.
inline Stack gen_inverted_triangle(std::size_t r, Rational h = 1) {
    Stack s;
    s.height = h;
    for (std::size_t k = 1; k <= r; ++k)
        detail::emit_centered_row(s, k, k - 1);
    return validate(std::move(s));
}

/// Rows of 1, 2, ..., d-1, d, d-1, ..., 2, 1 blocks bottom to top (2d-1
/// rows), all centered about x = 0.
inline Stack gen_diamond(std::size_t d, Rational h = 1) {
    Stack s;
    s.height = h;
    std::size_t level = 0;
    for (std::size_t k = 1; k <= d; ++k)
        detail::emit_centered_row(s, k, level++);
    for (std::size_t k = d; k-- > 1;)
        detail::emit_centered_row(s, k, level++);
    return validate(std::move(s));
}

} // namespace overhang
