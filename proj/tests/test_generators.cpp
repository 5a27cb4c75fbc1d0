#include <catch2/catch_amalgamated.hpp>

#include "overhang/generators.hpp"

using namespace overhang;

namespace {

// Independent oracle: half the n-th harmonic number, summed term by term.
Rational half_harmonic(std::size_t n) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= n; ++i)
        acc += Rational(1, 2 * static_cast<long>(i));
    return acc;
}

} // namespace

TEST_CASE("harmonic stack: small cases") {
    Stack s1 = gen_harmonic(1);
    REQUIRE(s1.blocks.size() == 1);
    CHECK(s1.blocks[0] == Block{Rational(-1, 2), Rational(0)});

    Stack s2 = gen_harmonic(2);
    REQUIRE(s2.blocks.size() == 2);
    CHECK(s2.blocks[0].x + 1 == Rational(1, 4));
    CHECK(s2.blocks[1].x + 1 == Rational(3, 4));
    CHECK(overhang_of(s2) == Rational(3, 4));

    CHECK(overhang_of(gen_harmonic(4)) == Rational(25, 24));
}

TEST_CASE("harmonic stack: overhang equals half the harmonic sum") {
    for (std::size_t n = 1; n <= 100; ++n)
        CHECK(overhang_of(gen_harmonic(n)) == half_harmonic(n));
}

TEST_CASE("brick wall: block counts and overhang") {
    CHECK(gen_brickwall(1).blocks.size() == 1);
    CHECK(gen_brickwall(1).blocks[0] == Block{Rational(-1, 2), Rational(0)});

    CHECK(gen_brickwall(2).blocks.size() == 3);
    CHECK(overhang_of(gen_brickwall(2)) == Rational(1));

    CHECK(gen_brickwall(6).blocks.size() == 111);
    CHECK(overhang_of(gen_brickwall(6)) == Rational(3));

    for (long d = 1; d <= 12; ++d) {
        Stack s = gen_brickwall(static_cast<std::size_t>(d));
        CHECK(static_cast<long>(s.blocks.size()) ==
              d * (d - 1) * (2 * d - 1) / 3 + 1);
        CHECK(overhang_of(s) == Rational(d, 2));
    }
}

TEST_CASE("brick wall: rows alternate and stay symmetric") {
    Stack s = gen_brickwall(4);
    // levels: 1 | 2 | 3 2 3 | 4 3 4 3 4
    std::vector<std::size_t> row_sizes;
    Rational level = -1;
    for (const auto& b : s.blocks) {
        if (b.y != level) {
            row_sizes.push_back(0);
            level = b.y;
        }
        ++row_sizes.back();
    }
    CHECK(row_sizes ==
          std::vector<std::size_t>{1, 2, 3, 2, 3, 4, 3, 4, 3, 4});
    // each row symmetric about x = 0 and contiguous
    level = -1;
    Rational row_min, row_max;
    auto close_row = [&] {
        if (level != -1)
            CHECK(row_min == -row_max);
    };
    for (const auto& b : s.blocks) {
        if (b.y != level) {
            close_row();
            level = b.y;
            row_min = b.x;
            row_max = b.x + 1;
        } else {
            CHECK(b.x == row_max); // contiguous
            row_max = b.x + 1;
        }
    }
    close_row();
}

TEST_CASE("inverted triangle") {
    CHECK(gen_inverted_triangle(1).blocks.size() == 1);

    Stack s2 = gen_inverted_triangle(2);
    REQUIRE(s2.blocks.size() == 3);
    CHECK(s2.blocks[1].x == Rational(-1)); // row 2 spans [-1, 1]
    CHECK(s2.blocks[2].x + 1 == Rational(1));

    CHECK(gen_inverted_triangle(3).blocks.size() == 6);
}

TEST_CASE("diamond") {
    CHECK(gen_diamond(1).blocks.size() == 1);
    CHECK(gen_diamond(2).blocks.size() == 4);
    CHECK(gen_diamond(5).blocks.size() == 25);
}

TEST_CASE("generators produce canonical stacks") {
    std::vector<Stack> stacks = {gen_harmonic(7), gen_brickwall(5),
                                 gen_inverted_triangle(5), gen_diamond(4),
                                 gen_diamond(4, Rational(1, 3))};
    for (const Stack& s : stacks)
        CHECK(validate(s) == s);
}
