#include <catch2/catch_amalgamated.hpp>

#include "overhang/generators.hpp"
#include "overhang/geometry.hpp"
#include "support/random_gen.hpp"

using namespace overhang;

TEST_CASE("validate rejects overlapping interiors") {
    Stack s;
    s.blocks = {{Rational(0), Rational(0)}, {Rational(1, 2), Rational(0)}};
    CHECK_THROWS_AS(validate(s), OverlapError);
}

TEST_CASE("validate allows touching blocks") {
    Stack s;
    s.blocks = {{Rational(-1), Rational(0)}, {Rational(0), Rational(0)}};
    CHECK_NOTHROW(validate(s));
}

TEST_CASE("validate sorts into canonical order") {
    Stack s;
    s.blocks = {{Rational(-1, 2), Rational(1)}, {Rational(-1), Rational(0)}};
    Stack v = validate(s);
    CHECK(v.blocks[0] == Block{Rational(-1), Rational(0)});
    CHECK(v.blocks[1] == Block{Rational(-1, 2), Rational(1)});
}

TEST_CASE("validate checks point weights") {
    Stack s;
    s.blocks = {{Rational(-1), Rational(0)}};
    s.weights = {{Rational(-1, 2), Rational(1), Rational(3)}};
    CHECK_NOTHROW(validate(s)); // on the block top

    s.weights = {{Rational(-2), Rational(0), Rational(1)}};
    CHECK_NOTHROW(validate(s)); // on the table

    s.weights = {{Rational(5), Rational(2), Rational(1)}};
    CHECK_THROWS_AS(validate(s), DanglingWeightError); // floating

    s.weights = {{Rational(-1, 2), Rational(1), Rational(0)}};
    CHECK_THROWS_AS(validate(s), InvalidStackError); // nonpositive mass
}

TEST_CASE("contacts: two-block tower") {
    Stack s;
    s.blocks = {{Rational(-1, 2), Rational(0)}, {Rational(0), Rational(1)}};
    s = validate(s);
    auto cts = contacts(s);
    REQUIRE(cts.size() == 2);
    CHECK(cts[0] == Contact{1, 0, Rational(-1, 2), Rational(0)});
    CHECK(cts[1] == Contact{2, 1, Rational(0), Rational(1, 2)});
}

TEST_CASE("contacts: single block fully on table") {
    Stack s;
    s.blocks = {{Rational(-1), Rational(0)}};
    auto cts = contacts(validate(s));
    REQUIRE(cts.size() == 1);
    CHECK(cts[0] == Contact{1, 0, Rational(-1), Rational(0)});
}

TEST_CASE("contacts: table corner touch is a degenerate contact") {
    Stack s;
    s.blocks = {{Rational(-1), Rational(0)}, {Rational(0), Rational(0)}};
    auto cts = contacts(validate(s));
    REQUIRE(cts.size() == 2);
    CHECK(cts[0] == Contact{1, 0, Rational(-1), Rational(0)});
    CHECK(cts[1] == Contact{2, 0, Rational(0), Rational(0)});
    CHECK(cts[1].degenerate());
}

TEST_CASE("contacts: side-by-side blocks do not interact") {
    Stack s;
    s.blocks = {{Rational(-2), Rational(0)}, {Rational(-1), Rational(0)}};
    auto cts = contacts(validate(s));
    REQUIRE(cts.size() == 2);
    for (const auto& c : cts)
        CHECK(c.lower == 0);
}

TEST_CASE("contacts: block past the edge has no table contact") {
    Stack s;
    s.blocks = {{Rational(1, 4), Rational(0)}};
    CHECK(contacts(validate(s)).empty());
}

TEST_CASE("contact intervals satisfy the definition formulas") {
    // Recompute a/b independently for every rests-on pair, over generator
    // stacks, random translations, and a non-default height.
    testsupport::Rng rng(31);
    std::vector<Stack> stacks = {gen_harmonic(6), gen_brickwall(4),
                                 gen_inverted_triangle(4), gen_diamond(3),
                                 gen_harmonic(5, Rational(1, 3)),
                                 gen_brickwall(3, Rational(1, 3))};
    for (Stack base : stacks) {
        Rational dx = -rng.positive_rational(4, 4);
        for (auto& b : base.blocks)
            b.x += dx;
        Stack s = validate(base);
        auto cts = contacts(s);

        long expected = 0;
        for (std::size_t i = 0; i < s.blocks.size(); ++i) {
            const Block& u = s.blocks[i];
            if (u.y == 0 && u.x <= 0)
                ++expected;
            for (std::size_t j = 0; j < s.blocks.size(); ++j) {
                const Block& l = s.blocks[j];
                if (u.y != l.y + s.height)
                    continue;
                if (std::max(u.x, l.x) <= std::min(u.x + 1, l.x + 1))
                    ++expected;
            }
        }
        CHECK(static_cast<long>(cts.size()) == expected);

        for (const auto& c : cts) {
            const Block& u = s.blocks[c.upper - 1];
            REQUIRE(c.a <= c.b);
            if (c.lower == 0) {
                CHECK(u.y == 0);
                CHECK(c.a == u.x);
                CHECK(c.b == std::min(u.x + 1, Rational(0)));
            } else {
                const Block& l = s.blocks[c.lower - 1];
                CHECK(u.y == l.y + s.height);
                CHECK(c.a == std::max(u.x, l.x));
                CHECK(c.b == std::min(u.x + 1, l.x + 1));
            }
        }
    }
}

TEST_CASE("overhang") {
    Stack s;
    s.blocks = {{Rational(-1, 2), Rational(0)}};
    CHECK(overhang_of(validate(s)) == Rational(1, 2));
    CHECK(overhang_of(gen_harmonic(3)) == Rational(11, 12));
    CHECK(overhang_of(gen_brickwall(6)) == Rational(3));
    CHECK_THROWS_AS(overhang_of(Stack{}), EmptyStackError);
}
