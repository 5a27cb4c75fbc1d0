#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "overhang/distribution.hpp"
#include "overhang/moves.hpp"
#include "overhang/rational.hpp"

// Deterministic input generators for the property tests. Everything is
// seeded explicitly so failures replay.
namespace testsupport {

using overhang::Distribution;
using overhang::MassPoint;
using overhang::Move;
using overhang::Rational;
using overhang::SignedDistribution;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(eng_);
    }

    Rational rational(long num_range, long den_max) {
        return Rational(integer(-num_range, num_range), integer(1, den_max));
    }

    Rational positive_rational(long num_max, long den_max) {
        return Rational(integer(1, num_max), integer(1, den_max));
    }

    /// Rational drawn uniformly from the closed interval [lo, hi] on a grid
    /// of `steps` subdivisions.
    Rational between(const Rational& lo, const Rational& hi, long steps = 16) {
        long t = integer(0, steps);
        return lo + (hi - lo) * Rational(t, steps);
    }

    Distribution distribution(std::size_t max_points, long num_range = 8,
                              long den_max = 6) {
        std::size_t k = static_cast<std::size_t>(integer(1, max_points));
        std::vector<MassPoint> pts;
        for (std::size_t i = 0; i < k; ++i)
            pts.push_back(
                {rational(num_range, den_max), positive_rational(6, 4)});
        return Distribution(std::move(pts));
    }

    /// A random move applicable to mu: removes part of mu's mass inside a
    /// unit interval and reinserts it at one or two points of the interval
    /// with the same total and torque.
    Move applicable_move(const Distribution& mu) {
        Rational a;
        if (mu.empty() || integer(0, 3) == 0) {
            a = rational(6, 4);
        } else {
            const auto& pts = mu.points();
            const auto& anchor =
                pts[static_cast<std::size_t>(integer(0, pts.size() - 1))];
            a = anchor.x - Rational(integer(0, 4), 4);
        }
        Rational b = a + 1;

        std::vector<MassPoint> removed;
        Rational mass = 0, torque = 0;
        for (const auto& p : mu.points()) {
            if (p.x < a || p.x > b || integer(0, 2) == 0)
                continue;
            Rational take = p.m * Rational(integer(1, 4), 4);
            if (take.is_zero())
                continue;
            removed.push_back({p.x, -take});
            mass += take;
            torque += take * p.x;
        }
        if (mass.is_zero())
            return Move(a, b, SignedDistribution{});

        Rational c = torque / mass;
        std::vector<MassPoint> delta = removed;
        if (integer(0, 3) == 0) {
            delta.push_back({c, mass}); // merge at the centroid
        } else {
            Rational lo = between(a, c), hi = between(c, b);
            if (lo == hi) {
                delta.push_back({c, mass});
            } else {
                delta.push_back({lo, mass * (hi - c) / (hi - lo)});
                delta.push_back({hi, mass * (c - lo) / (hi - lo)});
            }
        }
        return Move(a, b, SignedDistribution(std::move(delta)));
    }

    /// A random basic split of mu: one point mass replaced by two or three
    /// points with the same total mass and center.
    Distribution basic_split(const Distribution& mu) {
        if (mu.empty())
            return mu;
        const auto& pts = mu.points();
        std::size_t i = static_cast<std::size_t>(integer(0, pts.size() - 1));
        Rational x = pts[i].x, m = pts[i].m;
        Rational left = x - positive_rational(4, 4);
        Rational right = x + positive_rational(4, 4);
        Rational ml = m * (right - x) / (right - left);
        Rational mr = m * (x - left) / (right - left);

        std::vector<MassPoint> out;
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i)
                out.push_back(pts[j]);
        if (integer(0, 2) == 0) {
            // keep a share in place, split the rest
            Rational keep = m * Rational(integer(1, 3), 4);
            Rational rest = m - keep;
            out.push_back({x, keep});
            out.push_back({left, rest * (right - x) / (right - left)});
            out.push_back({right, rest * (x - left) / (right - left)});
        } else {
            out.push_back({left, ml});
            out.push_back({right, mr});
        }
        return Distribution(std::move(out));
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

} // namespace testsupport
