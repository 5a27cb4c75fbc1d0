#pragma once

#include <cstddef>
#include <vector>

#include "overhang/distribution.hpp"
#include "overhang/linear_feasibility.hpp"

namespace overhang {

/// Whether nu is obtained from mu by one basic split: a single point mass
/// of mu replaced by a collection with the same total mass and center.
/// Equivalently (after coalescing): the difference nu - mu has zero total
/// mass, zero torque, and negative mass at no more than one coordinate --
/// the coordinate of the replaced point.
inline bool is_basic_split(const Distribution& mu, const Distribution& nu) {
    SignedDistribution diff = nu.signed_view() - mu.signed_view();
    if (diff.empty())
        return true;
    if (!moment(diff, 0).is_zero() || !moment(diff, 1).is_zero())
        return false;
    std::size_t negatives = 0;
    for (const auto& p : diff.points())
        if (p.m < 0)
            ++negatives;
    return negatives <= 1;
}

/// Decides the splitting order mu <= nu (nu reachable from mu by zero or
/// more basic splits). A sequence of basic splits composes into a transport
/// plan t_ij >= 0 sending each source point to target points of equal mass
/// and equal center (split the sources one by one and push the plans
/// together); conversely any such plan realizes nu by one direct basic
/// split per source point. So the order is decided by feasibility of
///   sum_j t_ij = m_i,  sum_i t_ij = m'_j,  sum_j t_ij x'_j = m_i x_i.
inline bool is_split_of(const Distribution& mu, const Distribution& nu) {
    if (moment(mu, 0) != moment(nu, 0) || moment(mu, 1) != moment(nu, 1))
        return false;
    const auto& src = mu.points();
    const auto& dst = nu.points();
    const std::size_t k = src.size(), l = dst.size();
    if (k == 0 || l == 0)
        return k == l; // equal moments already imply both empty or not

    LinearSystem sys;
    sys.num_vars = k * l;
    auto var = [&](std::size_t i, std::size_t j) { return i * l + j; };
    for (std::size_t i = 0; i < k; ++i) {
        LinearSystem::Row mass{std::vector<Rational>(sys.num_vars), src[i].m};
        LinearSystem::Row torque{std::vector<Rational>(sys.num_vars),
                                 src[i].m * src[i].x};
        for (std::size_t j = 0; j < l; ++j) {
            mass.coeffs[var(i, j)] = 1;
            torque.coeffs[var(i, j)] = dst[j].x;
        }
        sys.rows.push_back(std::move(mass));
        sys.rows.push_back(std::move(torque));
    }
    for (std::size_t j = 0; j < l; ++j) {
        LinearSystem::Row col{std::vector<Rational>(sys.num_vars), dst[j].m};
        for (std::size_t i = 0; i < k; ++i)
            col.coeffs[var(i, j)] = 1;
        sys.rows.push_back(std::move(col));
    }
    return solve_feasibility(sys).feasible;
}

} // namespace overhang
