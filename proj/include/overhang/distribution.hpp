#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "overhang/errors.hpp"
#include "overhang/rational.hpp"

namespace overhang {

struct MassPoint {
    Rational x;
    Rational m;
    friend bool operator==(const MassPoint&, const MassPoint&) = default;
};

namespace detail {

/// Sort by coordinate, merge equal coordinates, drop zero masses.
inline std::vector<MassPoint> coalesce(std::vector<MassPoint> pts) {
    std::sort(pts.begin(), pts.end(),
              [](const MassPoint& p, const MassPoint& q) { return p.x < q.x; });
    std::vector<MassPoint> out;
    for (auto& p : pts) {
        if (!out.empty() && out.back().x == p.x)
            out.back().m += p.m;
        else
            out.push_back(std::move(p));
    }
    std::erase_if(out, [](const MassPoint& p) { return p.m.is_zero(); });
    return out;
}

} // namespace detail

/// Discrete signed mass distribution: strictly increasing coordinates,
/// nonzero masses of either sign.
class SignedDistribution {
public:
    SignedDistribution() = default;
    explicit SignedDistribution(std::vector<MassPoint> pts)
        : pts_(detail::coalesce(std::move(pts))) {}
    SignedDistribution(std::initializer_list<MassPoint> pts)
        : SignedDistribution(std::vector<MassPoint>(pts)) {}

    const std::vector<MassPoint>& points() const { return pts_; }
    bool empty() const { return pts_.empty(); }
    std::size_t size() const { return pts_.size(); }

    Rational at(const Rational& x) const {
        auto it = std::lower_bound(
            pts_.begin(), pts_.end(), x,
            [](const MassPoint& p, const Rational& v) { return p.x < v; });
        return it != pts_.end() && it->x == x ? it->m : Rational(0);
    }

    friend SignedDistribution operator+(const SignedDistribution& a,
                                        const SignedDistribution& b) {
        std::vector<MassPoint> pts = a.pts_;
        pts.insert(pts.end(), b.pts_.begin(), b.pts_.end());
        return SignedDistribution(std::move(pts));
    }
    friend SignedDistribution operator-(const SignedDistribution& a,
                                        const SignedDistribution& b) {
        std::vector<MassPoint> pts = a.pts_;
        for (const auto& p : b.pts_)
            pts.push_back({p.x, -p.m});
        return SignedDistribution(std::move(pts));
    }

    friend bool operator==(const SignedDistribution&,
                           const SignedDistribution&) = default;

private:
    std::vector<MassPoint> pts_;
};

/// Discrete mass distribution: strictly increasing coordinates, all masses
/// positive. The empty distribution is admitted (lossy moves can consume
/// everything).
class Distribution {
public:
    Distribution() = default;
    explicit Distribution(std::vector<MassPoint> pts)
        : pts_(detail::coalesce(std::move(pts))) {
        for (const auto& p : pts_)
            if (p.m < 0)
                throw NotApplicableError("negative mass at x = " + p.x.str());
    }
    Distribution(std::initializer_list<MassPoint> pts)
        : Distribution(std::vector<MassPoint>(pts)) {}

    const std::vector<MassPoint>& points() const { return pts_; }
    bool empty() const { return pts_.empty(); }
    std::size_t size() const { return pts_.size(); }

    Rational at(const Rational& x) const { return signed_view().at(x); }

    SignedDistribution signed_view() const { return SignedDistribution(pts_); }

    friend bool operator==(const Distribution&, const Distribution&) = default;

private:
    std::vector<MassPoint> pts_;
};

/// Throws NotApplicableError if any coalesced mass is negative.
inline Distribution to_distribution(const SignedDistribution& s) {
    return Distribution(s.points());
}

// ---- moments, center, spread ------------------------------------------

template <class D>
Rational moment(const D& mu, unsigned j) {
    Rational acc = 0;
    for (const auto& p : mu.points()) {
        Rational xj = 1;
        for (unsigned t = 0; t < j; ++t)
            xj *= p.x;
        acc += p.m * xj;
    }
    return acc;
}

template <class D>
Rational center(const D& mu) {
    Rational m0 = moment(mu, 0);
    if (m0.is_zero())
        throw ZeroMassError();
    return moment(mu, 1) / m0;
}

/// S[mu] = sum_{i<j} |x_i - x_j| m_i m_j, via prefix sums over the sorted
/// points.
template <class D>
Rational spread(const D& mu) {
    Rational acc = 0, mass_before = 0, torque_before = 0;
    for (const auto& p : mu.points()) {
        acc += p.m * (p.x * mass_before - torque_before);
        mass_before += p.m;
        torque_before += p.m * p.x;
    }
    return acc;
}

// ---- tail and interval masses ------------------------------------------

template <class D>
Rational mass_greater(const D& mu, const Rational& a) {
    Rational acc = 0;
    for (const auto& p : mu.points())
        if (p.x > a)
            acc += p.m;
    return acc;
}

template <class D>
Rational mass_geq(const D& mu, const Rational& a) {
    Rational acc = 0;
    for (const auto& p : mu.points())
        if (p.x >= a)
            acc += p.m;
    return acc;
}

template <class D>
Rational mass_abs_geq(const D& mu, const Rational& a) {
    Rational acc = 0;
    for (const auto& p : mu.points())
        if (p.x.abs() >= a)
            acc += p.m;
    return acc;
}

template <class D>
Rational mass_in_open(const D& mu, const Rational& a, const Rational& b) {
    Rational acc = 0;
    for (const auto& p : mu.points())
        if (a < p.x && p.x < b)
            acc += p.m;
    return acc;
}

template <class D>
Rational total_mass(const D& mu) {
    return moment(mu, 0);
}

/// Restriction of mu to [a, b].
template <class D>
D restrict_to(const D& mu, const Rational& a, const Rational& b) {
    std::vector<MassPoint> pts;
    for (const auto& p : mu.points())
        if (a <= p.x && p.x <= b)
            pts.push_back(p);
    return D(std::move(pts));
}

} // namespace overhang
