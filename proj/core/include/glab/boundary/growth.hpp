#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "glab/cayley/bfs.hpp"
#include "glab/error.hpp"
#include "glab/groups/model.hpp"

namespace glab {

// Distances of the powers g^i with |i| <= bound that lie in a ball.
struct PowerScan {
  std::int64_t bound = 0;
  bool explicit_bound = false;  // caller chose a bound below |entries|
  bool partial = false;         // representability limit hit before bound
  std::int64_t reached = 0;     // largest |i| actually examined
  std::string note;
  std::map<std::int64_t, std::uint32_t> in_ball;  // i -> d(1, g^i)
};

// Default scan bound: distinct powers of an infinite-order element are
// distinct elements, so at most |entries| of them fit in the ball.
inline std::int64_t default_power_bound(const Ball& ball) {
  return static_cast<std::int64_t>(ball.size());
}

template <GroupModel G>
PowerScan scan_powers(const G& group, const typename G::element_type& g, const Ball& ball,
                      std::int64_t bound = -1) {
  if (!ball.complete()) throw BallError("power scan needs a complete ball");
  if (ball.group_id() != group.id()) throw BallError("ball belongs to another group");
  PowerScan scan;
  scan.explicit_bound = bound >= 0 && bound < default_power_bound(ball);
  scan.bound = bound < 0 ? default_power_bound(ball) : bound;
  scan.in_ball[0] = 0;
  const auto g_inverse = group.inverse(g);
  auto forward = group.identity();
  auto backward = group.identity();
  try {
    for (std::int64_t i = 1; i <= scan.bound; ++i) {
      forward = group.multiply(forward, g);
      backward = group.multiply(backward, g_inverse);
      if (auto d = find_element(ball, group, forward)) scan.in_ball[i] = *d;
      if (auto d = find_element(ball, group, backward)) scan.in_ball[-i] = *d;
      scan.reached = i;
      if (forward == group.identity()) {
        scan.note = "element has finite order " + std::to_string(i);
        break;
      }
    }
  } catch (const RepresentabilityError& e) {
    scan.partial = true;
    scan.note = std::string("power scan stopped: ") + e.what();
  }
  return scan;
}

// w_g(n) = |{i : d(1, g^i) <= n}| for n = 0..radius.
struct GrowthTable {
  std::string group_id;
  std::string element;
  std::uint32_t radius = 0;
  std::int64_t power_bound = 0;
  bool explicit_bound = false;
  bool partial = false;
  std::vector<std::pair<std::uint32_t, std::uint64_t>> rows;
};

// Delta(r) = max{|i| : d(1, g^i) <= r}.
struct DistortionTable {
  std::string group_id;
  std::string element;
  std::uint32_t radius = 0;
  std::int64_t power_bound = 0;
  bool explicit_bound = false;
  bool partial = false;
  std::vector<std::pair<std::uint32_t, std::int64_t>> rows;
};

GrowthTable growth_from_scan(const PowerScan& scan, const Ball& ball, std::string element);
DistortionTable distortion_from_scan(const PowerScan& scan, const Ball& ball, std::string element);

template <GroupModel G>
GrowthTable growth(const G& group, const typename G::element_type& g, const Ball& ball,
                   std::string element, std::int64_t power_bound = -1) {
  return growth_from_scan(scan_powers(group, g, ball, power_bound), ball, std::move(element));
}

template <GroupModel G>
DistortionTable distortion(const G& group, const typename G::element_type& g, const Ball& ball,
                           std::string element, std::int64_t power_bound = -1) {
  return distortion_from_scan(scan_powers(group, g, ball, power_bound), ball, std::move(element));
}

std::string to_csv(const GrowthTable& table);
std::string to_csv(const DistortionTable& table);

// A failed instance of an inequality between table rows.
struct GrowthViolation {
  std::uint32_t k = 0;
  std::uint32_t n = 0;
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
};

// Pairs (k >= 2, n >= 1, kn <= radius) where w(kn) < k w(n).
std::vector<GrowthViolation> superadditivity_violations(const GrowthTable& table);
// Same for the nonzero powers: w(kn) - 1 < k (w(n) - 1). The shifted
// family (j-1) Delta(n) + i, i in P(n), shows this form always holds.
std::vector<GrowthViolation> shifted_superadditivity_violations(const GrowthTable& table);
// Rows with w(n) > |B(n)|.
std::vector<GrowthViolation> ball_cap_violations(const GrowthTable& table, const Ball& ball);

}  // namespace glab
