#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "glab/boundary/growth.hpp"
#include "glab/cayley/bfs.hpp"
#include "glab/groups/model.hpp"

namespace glab {

using Rational = boost::multiprecision::cpp_rational;

// "p/q", "p" or a finite decimal like "0.35".
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& r);

struct ConeParams {
  Rational alpha = 0;
  std::uint64_t c = 0;
};

enum class ConeStatus { contained, not_contained, unresolved };

struct ConeResult {
  ConeStatus status = ConeStatus::unresolved;
  std::optional<std::int64_t> witness;  // n with d(v, g^n) <= alpha d(1, g^n) + c
  std::vector<std::int64_t> unresolved;  // n the ball could not decide
};

std::string to_string(ConeStatus status);

// Is v in the union over n in [1, n_range] of the balls around g^n with
// radius alpha d(1,g^n) + c? Distances beyond the ball radius R are only
// known to be >= R+1, which sometimes still decides an n.
template <GroupModel G>
ConeResult cone_contains(const G& group, const typename G::element_type& g, const ConeParams& params,
                         const typename G::element_type& v, const Ball& ball, std::int64_t n_range) {
  if (params.alpha < 0) throw DomainError("cone alpha must be nonnegative");
  if (!ball.complete()) throw BallError("cone test needs a complete ball");
  ConeResult result;
  const Rational beyond = ball.radius() + 1;
  const auto v_inverse = group.inverse(v);
  auto gn = group.identity();
  bool all_false = true;
  for (std::int64_t n = 1; n <= n_range; ++n) {
    gn = group.multiply(gn, g);
    auto to_orbit = distance(ball, group, group.multiply(v_inverse, gn));
    auto from_one = distance(ball, group, gn);
    // Lower bound on the right-hand side and whether it is exact.
    Rational radius = params.alpha * (from_one.within_radius ? Rational(from_one.distance) : beyond) +
                      Rational(params.c);
    if (to_orbit.within_radius) {
      if (Rational(to_orbit.distance) <= radius) {
        result.status = ConeStatus::contained;
        result.witness = n;
        return result;
      }
      if (from_one.within_radius) continue;
    } else if (from_one.within_radius && radius < beyond) {
      continue;
    }
    all_false = false;
    result.unresolved.push_back(n);
  }
  result.status = all_false ? ConeStatus::not_contained : ConeStatus::unresolved;
  return result;
}

struct BoundaryEstimate {
  std::string g;
  std::string h;
  std::int64_t range = 0;  // I
  std::vector<std::uint64_t> c_grid;
  std::vector<Rational> alpha_hat;  // per grid value
  Rational lower_bound = 0;
  double t_scale = 0.0;
  bool saturated = true;
  std::int64_t power_bound = 0;
  std::vector<std::int64_t> skipped_g;  // i with no resolvable partner power
  std::vector<std::int64_t> skipped_h;
  std::string note;
};

std::string to_json(const BoundaryEstimate& estimate);

namespace detail {

struct OrbitPoint {
  std::int64_t index;
  std::uint32_t norm;  // d(1, x^index) > 0
};

template <GroupModel G>
std::vector<std::pair<OrbitPoint, typename G::element_type>> orbit_in_ball(
    const G& group, const typename G::element_type& x, const Ball& ball, std::int64_t bound) {
  std::vector<std::pair<OrbitPoint, typename G::element_type>> points;
  auto power = group.identity();
  try {
    for (std::int64_t j = 1; j <= bound; ++j) {
      power = group.multiply(power, x);
      if (power == group.identity()) break;
      if (auto d = find_element(ball, group, power); d && *d > 0) {
        points.push_back({{j, *d}, power});
      }
    }
  } catch (const RepresentabilityError&) {
  }
  return points;
}

// Running maximum over i of a lower bound on
//   min over j >= 1 of (d(x^i, y^j) - c) / d(1, y^j), clamped to [0, 1].
// Partners resolved in the ball use the exact pair distance; unresolved
// pairs use d >= max(R+1, |d(1,y^j) - |x^i||); partners outside the ball
// have d(1,y^j) >= R+1, so the triangle inequality bounds their ratio by
// 1 - (|x^i| + c)/(R+1). An i with x^i outside the ball, or with no
// resolved partner, is skipped.
struct DirectionResult {
  std::vector<Rational> best;
  std::vector<std::int64_t> argbest;
};

template <GroupModel G>
DirectionResult one_direction(const G& group, const typename G::element_type& x,
                              const std::vector<std::pair<OrbitPoint, typename G::element_type>>& partners,
                              const Ball& ball, std::int64_t range,
                              const std::vector<std::uint64_t>& c_grid,
                              std::vector<std::int64_t>& skipped) {
  DirectionResult out{std::vector<Rational>(c_grid.size(), Rational(0)),
                      std::vector<std::int64_t>(c_grid.size(), 0)};
  const auto beyond = static_cast<std::int64_t>(ball.radius()) + 1;
  auto xi = group.identity();
  for (std::int64_t i = 1; i <= range; ++i) {
    xi = group.multiply(xi, x);
    auto own = find_element(ball, group, xi);
    if (!own) {
      skipped.push_back(i);
      continue;
    }
    const auto norm_x = static_cast<std::int64_t>(*own);
    const auto xi_inverse = group.inverse(xi);
    std::vector<std::int64_t> pair(partners.size());
    bool any = false;
    for (std::size_t p = 0; p < partners.size(); ++p) {
      auto q = query_element(ball, group, group.multiply(xi_inverse, partners[p].second));
      const auto norm_y = static_cast<std::int64_t>(partners[p].first.norm);
      if (q.within_radius) {
        pair[p] = q.distance;
        any = true;
      } else {
        pair[p] = std::max(beyond, norm_y > norm_x ? norm_y - norm_x : norm_x - norm_y);
      }
    }
    if (!any) {
      skipped.push_back(i);
      continue;
    }
    for (std::size_t c = 0; c < c_grid.size(); ++c) {
      const auto cc = static_cast<std::int64_t>(c_grid[c]);
      Rational lowest = Rational(1) - Rational(norm_x + cc, beyond);
      for (std::size_t p = 0; p < partners.size(); ++p) {
        lowest = std::min(lowest, Rational(pair[p] - cc, static_cast<std::int64_t>(partners[p].first.norm)));
      }
      lowest = std::clamp(lowest, Rational(0), Rational(1));
      if (lowest > out.best[c]) {
        out.best[c] = lowest;
        out.argbest[c] = i;
      }
    }
  }
  return out;
}

}  // namespace detail

// Finite-scale lower-bound certificate for s(g^inf, h^inf): the smallest
// alpha that the explored data forces for each c, symmetrized over both
// orbits and minimized over the c grid. Never claims convergence.
template <GroupModel G>
BoundaryEstimate estimate_s(const G& group, const typename G::element_type& g,
                            const typename G::element_type& h, const Ball& ball, std::int64_t range,
                            std::vector<std::uint64_t> c_grid, std::string g_text, std::string h_text,
                            std::int64_t power_bound = -1) {
  if (!ball.complete()) throw BallError("estimator needs a complete ball");
  if (ball.group_id() != group.id()) throw BallError("ball belongs to another group");
  if (c_grid.empty()) throw DomainError("empty c grid");
  BoundaryEstimate estimate;
  estimate.g = std::move(g_text);
  estimate.h = std::move(h_text);
  estimate.range = std::max<std::int64_t>(range, 0);
  estimate.c_grid = std::move(c_grid);
  estimate.power_bound = power_bound < 0 ? default_power_bound(ball) : power_bound;
  estimate.note =
      "lower-bound certificate: any alpha admitting cone containment in both directions "
      "with some c in the grid is at least lower_bound_s; s itself is an infimum over "
      "all c and is not computed";
  const auto& grid = estimate.c_grid;
  std::vector<Rational> best(grid.size(), Rational(0));
  std::vector<std::int64_t> argbest(grid.size(), 0);
  if (estimate.range > 0) {
    auto h_orbit = detail::orbit_in_ball(group, h, ball, estimate.power_bound);
    auto g_orbit = detail::orbit_in_ball(group, g, ball, estimate.power_bound);
    auto forward = detail::one_direction(group, g, h_orbit, ball, estimate.range, grid,
                                         estimate.skipped_g);
    auto backward = detail::one_direction(group, h, g_orbit, ball, estimate.range, grid,
                                          estimate.skipped_h);
    for (std::size_t c = 0; c < grid.size(); ++c) {
      best[c] = std::max(forward.best[c], backward.best[c]);
      argbest[c] = forward.best[c] >= backward.best[c] ? forward.argbest[c] : backward.argbest[c];
    }
  }
  estimate.alpha_hat = best;
  std::size_t chosen = 0;
  for (std::size_t c = 1; c < grid.size(); ++c) {
    if (best[c] < best[chosen]) chosen = c;
  }
  estimate.lower_bound = best[chosen];
  estimate.t_scale = std::sqrt(static_cast<double>(estimate.lower_bound));
  // Still rising at the edge when the maximum was first reached at i = I.
  estimate.saturated = estimate.range == 0 || argbest[chosen] < estimate.range;
  return estimate;
}

// estimate_s with h = g^-1; t_scale is the reported t figure.
template <GroupModel G>
BoundaryEstimate antipodal_lower_bound(const G& group, const typename G::element_type& g,
                                       const Ball& ball, std::int64_t range,
                                       std::vector<std::uint64_t> c_grid, std::string g_text,
                                       std::int64_t power_bound = -1) {
  std::string h_text = "(" + g_text + ")^-1";
  return estimate_s(group, g, group.inverse(g), ball, range, std::move(c_grid), std::move(g_text),
                    std::move(h_text), power_bound);
}

// sqrt(ln(gamma/delta) / ln((2d-1) gamma)), the lower bound on t between
// orbits whose growth rates gamma > delta > 1 differ, in a group with d
// generators.
double t_min(std::int64_t d, double gamma, double delta);

}  // namespace glab
