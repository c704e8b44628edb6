#include <cmath>
#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

#include "glab/arith/bigint.hpp"
#include "glab/boundary/growth.hpp"
#include "glab/boundary/metric.hpp"

namespace glab {

GrowthTable growth_from_scan(const PowerScan& scan, const Ball& ball, std::string element) {
  GrowthTable table{ball.group_id(), std::move(element), ball.radius(), scan.bound,
                    scan.explicit_bound, scan.partial, {}};
  std::vector<std::uint64_t> per_distance(ball.radius() + 1, 0);
  for (const auto& [i, d] : scan.in_ball) ++per_distance[d];
  std::uint64_t running = 0;
  for (std::uint32_t n = 0; n <= ball.radius(); ++n) {
    running += per_distance[n];
    table.rows.emplace_back(n, running);
  }
  return table;
}

DistortionTable distortion_from_scan(const PowerScan& scan, const Ball& ball, std::string element) {
  DistortionTable table{ball.group_id(), std::move(element), ball.radius(), scan.bound,
                        scan.explicit_bound, scan.partial, {}};
  std::vector<std::int64_t> per_distance(ball.radius() + 1, 0);
  for (const auto& [i, d] : scan.in_ball) {
    per_distance[d] = std::max<std::int64_t>(per_distance[d], i < 0 ? -i : i);
  }
  std::int64_t running = 0;
  for (std::uint32_t r = 0; r <= ball.radius(); ++r) {
    running = std::max(running, per_distance[r]);
    table.rows.emplace_back(r, running);
  }
  return table;
}

std::string to_csv(const GrowthTable& table) {
  std::ostringstream out;
  out << "n,w\n";
  for (const auto& [n, w] : table.rows) out << n << ',' << w << '\n';
  return out.str();
}

std::string to_csv(const DistortionTable& table) {
  std::ostringstream out;
  out << "r,delta\n";
  for (const auto& [r, delta] : table.rows) out << r << ',' << delta << '\n';
  return out.str();
}

namespace {

template <class Holds>
std::vector<GrowthViolation> scan_pairs(const GrowthTable& table, Holds holds) {
  std::vector<GrowthViolation> violations;
  for (std::uint32_t n = 1; n <= table.radius; ++n) {
    for (std::uint32_t k = 2; k * n <= table.radius; ++k) {
      std::uint64_t big = table.rows[k * n].second;
      std::uint64_t small = table.rows[n].second;
      auto [lhs, rhs] = holds(k, big, small);
      if (lhs < rhs) violations.push_back({k, n, lhs, rhs});
    }
  }
  return violations;
}

}  // namespace

std::vector<GrowthViolation> superadditivity_violations(const GrowthTable& table) {
  return scan_pairs(table, [](std::uint32_t k, std::uint64_t big, std::uint64_t small) {
    return std::pair{big, k * small};
  });
}

std::vector<GrowthViolation> shifted_superadditivity_violations(const GrowthTable& table) {
  return scan_pairs(table, [](std::uint32_t k, std::uint64_t big, std::uint64_t small) {
    return std::pair{big - 1, k * (small - 1)};
  });
}

std::vector<GrowthViolation> ball_cap_violations(const GrowthTable& table, const Ball& ball) {
  std::vector<GrowthViolation> violations;
  auto spheres = ball.sphere_sizes();
  std::uint64_t size = 0;
  for (const auto& [n, w] : table.rows) {
    size += n < spheres.size() ? spheres[n] : 0;
    if (w > size) violations.push_back({1, n, size, w});
  }
  return violations;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    BigInt num = parse_bigint(text.substr(0, slash));
    BigInt den = parse_bigint(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(parse_bigint(text));
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  if (digits.empty() || digits == "-" || text.size() == dot + 1) {
    throw ParseError("malformed decimal '" + text + "'");
  }
  BigInt scale = 1;
  for (std::size_t i = dot + 1; i < text.size(); ++i) scale *= 10;
  return Rational(parse_bigint(digits), scale);
}

std::string format_rational(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  if (den == 1) return to_decimal(num);
  return to_decimal(num) + "/" + to_decimal(den);
}

std::string to_string(ConeStatus status) {
  switch (status) {
    case ConeStatus::contained:
      return "contained";
    case ConeStatus::not_contained:
      return "not-contained";
    case ConeStatus::unresolved:
      return "unresolved";
  }
  return "unresolved";
}

std::string to_json(const BoundaryEstimate& estimate) {
  nlohmann::ordered_json j;
  j["pair"] = {estimate.g, estimate.h};
  j["I"] = estimate.range;
  j["c_grid"] = estimate.c_grid;
  auto& per_c = j["alpha_hat_per_c"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < estimate.c_grid.size(); ++i) {
    per_c.push_back({{"c", estimate.c_grid[i]}, {"alpha_hat", format_rational(estimate.alpha_hat[i])}});
  }
  j["lower_bound_s"] = format_rational(estimate.lower_bound);
  j["t_scale"] = estimate.t_scale;
  j["saturated"] = estimate.saturated;
  j["power_bound"] = estimate.power_bound;
  j["skipped_i_g"] = estimate.skipped_g;
  j["skipped_i_h"] = estimate.skipped_h;
  j["note"] = estimate.note;
  return j.dump(2);
}

double t_min(std::int64_t d, double gamma, double delta) {
  if (d < 1) throw DomainError("t_min needs d >= 1");
  if (!(delta > 1.0) || !(gamma > delta) || !std::isfinite(gamma)) {
    throw DomainError("t_min needs gamma > delta > 1");
  }
  return std::sqrt(std::log(gamma / delta) / std::log(static_cast<double>(2 * d - 1) * gamma));
}

}  // namespace glab
