#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <nlohmann/json.hpp>

#include "glab/boundary/growth.hpp"
#include "glab/boundary/metric.hpp"
#include "glab/cayley/bfs.hpp"
#include "glab/error.hpp"
#include "glab/groups/catalog.hpp"

using namespace glab;

namespace {

std::vector<std::uint64_t> w_values(const GrowthTable& table) {
  std::vector<std::uint64_t> out;
  for (const auto& [n, w] : table.rows) out.push_back(w);
  return out;
}

std::vector<std::uint64_t> grid(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (auto c = lo; c <= hi; ++c) out.push_back(c);
  return out;
}

}  // namespace

TEST(Growth, ZIsLinear) {
  ZdGroup z(1);
  Ball ball = build_ball(z, 6);
  auto table = growth(z, z.generator_power(0, 1), ball, "a");
  EXPECT_EQ(w_values(table), (std::vector<std::uint64_t>{1, 3, 5, 7, 9, 11, 13}));
  // w(0) = 1 counts the identity, so the unshifted inequality fails.
  EXPECT_FALSE(superadditivity_violations(table).empty());
  EXPECT_TRUE(shifted_superadditivity_violations(table).empty());
  EXPECT_TRUE(ball_cap_violations(table, ball).empty());
}

TEST(Growth, GpGeneratorJumpsAtSeven) {
  auto gp = make_gp(20);
  Ball ball = build_ball(gp, 7);
  auto table = growth(gp, gp.generator_power(0, 1), ball, "a");
  EXPECT_EQ(w_values(table), (std::vector<std::uint64_t>{1, 3, 5, 7, 9, 11, 13, 17}));
  EXPECT_EQ(superadditivity_violations(table).size(), 9U);
  EXPECT_TRUE(shifted_superadditivity_violations(table).empty());
  EXPECT_TRUE(ball_cap_violations(table, ball).empty());
  EXPECT_EQ(to_csv(table).substr(0, 4), "n,w\n");
}

TEST(Growth, ShiftedFormHoldsOnRandomElements) {
  auto h = make_h();
  Ball ball = build_ball(h, 5);
  std::mt19937_64 rng(41);
  for (int i = 0; i < 25; ++i) {
    Word w;
    for (int j = 0; j < 1 + static_cast<int>(rng() % 3); ++j) {
      w.push_back({static_cast<std::uint32_t>(rng() % 4), rng() % 2 ? 1 : -1});
    }
    auto g = evaluate(h, w);
    if (g == h.identity()) continue;
    auto table = growth(h, g, ball, format_word(w, h.alphabet()), 4000);
    EXPECT_TRUE(shifted_superadditivity_violations(table).empty()) << format_word(w, h.alphabet());
    EXPECT_TRUE(ball_cap_violations(table, ball).empty());
  }
}

TEST(Growth, NeedsCompleteBall) {
  auto h = make_h();
  BallOptions options;
  options.radius = 4;
  options.memory_cap = 50;
  Ball ball = build_ball(h, options);
  EXPECT_THROW(growth(h, h.generator_power(2, 1), ball, "t"), BallError);
  ZdGroup z(1);
  EXPECT_THROW(growth(z, z.generator_power(0, 1), build_ball(ZdGroup(2), 2), "a"), BallError);
}

TEST(Distortion, ZAndGp) {
  ZdGroup z(1);
  Ball ball = build_ball(z, 4);
  auto table = distortion(z, z.generator_power(0, 1), ball, "a");
  ASSERT_EQ(table.rows.size(), 5U);
  for (const auto& [r, delta] : table.rows) EXPECT_EQ(delta, static_cast<std::int64_t>(r));
  EXPECT_EQ(to_csv(table).substr(0, 8), "r,delta\n");
  auto gp = make_gp(20);
  Ball gp_ball = build_ball(gp, 7);
  auto gp_table = distortion(gp, gp.generator_power(0, 1), gp_ball, "a");
  EXPECT_EQ(gp_table.rows.back().second, 20);
}

TEST(Cone, ZExamples) {
  ZdGroup z(1);
  Ball ball = build_ball(z, 20);
  auto g = z.generator_power(0, 1);
  ConeParams params{Rational(1, 2), 0};
  auto miss = cone_contains(z, g, params, z.generator_power(0, -5), ball, 10);
  EXPECT_EQ(miss.status, ConeStatus::not_contained);
  auto hit = cone_contains(z, g, params, z.generator_power(0, 5), ball, 10);
  EXPECT_EQ(hit.status, ConeStatus::contained);
  ASSERT_TRUE(hit.witness.has_value());
  EXPECT_THROW(cone_contains(z, g, ConeParams{Rational(-1), 0}, g, ball, 3), DomainError);
}

TEST(Cone, GpExample) {
  auto gp = make_gp(20);
  Ball ball = build_ball(gp, 7);
  auto v = gp.generator_power(0, -3);
  auto result = cone_contains(gp, gp.generator_power(0, 1), ConeParams{Rational(12, 17), 5}, v, ball, 40);
  EXPECT_EQ(result.status, ConeStatus::contained);
  EXPECT_EQ(to_string(result.status), "contained");
}

TEST(Rationals, ParseAndFormat) {
  EXPECT_EQ(parse_rational("12/17"), Rational(12, 17));
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("0.35"), Rational(7, 20));
  EXPECT_EQ(parse_rational("-1.5"), Rational(-3, 2));
  EXPECT_EQ(format_rational(Rational(6, 4)), "3/2");
  EXPECT_EQ(format_rational(Rational(-2)), "-2");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1."), ParseError);
  EXPECT_THROW(parse_rational("x"), ParseError);
}

TEST(Estimator, EqualOrbitsGiveZero) {
  auto h = make_h();
  Ball ball = build_ball(h, 5);
  auto t = h.generator_power(2, 1);
  auto e = estimate_s(h, t, t, ball, 8, grid(0, 3), "t", "t");
  EXPECT_EQ(e.lower_bound, 0);
  EXPECT_EQ(e.alpha_hat.size(), 4U);
}

TEST(Estimator, ZAntipodalBound) {
  ZdGroup z(1);
  Ball ball = build_ball(z, 20);
  auto e = antipodal_lower_bound(z, z.generator_power(0, 1), ball, 20, grid(0, 2), "a");
  EXPECT_EQ(e.lower_bound, Rational(17, 21));
  EXPECT_NEAR(e.t_scale, std::sqrt(17.0 / 21.0), 1e-12);
  EXPECT_EQ(e.h, "(a)^-1");
  auto j = nlohmann::json::parse(to_json(e));
  for (const char* key : {"pair", "I", "c_grid", "alpha_hat_per_c", "lower_bound_s", "t_scale",
                          "saturated", "power_bound", "skipped_i_g", "skipped_i_h", "note"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["lower_bound_s"], "17/21");
}

TEST(Estimator, MonotoneInRange) {
  ZdGroup z(1);
  Ball ball = build_ball(z, 16);
  Rational last = 0;
  for (std::int64_t range = 0; range <= 16; range += 4) {
    auto e = antipodal_lower_bound(z, z.generator_power(0, 1), ball, range, grid(0, 2), "a");
    EXPECT_GE(e.lower_bound, last);
    EXPECT_GE(e.lower_bound, 0);
    EXPECT_LE(e.lower_bound, 1);
    last = e.lower_bound;
  }
  EXPECT_THROW(antipodal_lower_bound(z, z.generator_power(0, 1), ball, 3, {}, "a"), DomainError);
}

TEST(TMin, ValueAndDomain) {
  EXPECT_NEAR(t_min(2, 4.0, 2.0), std::sqrt(std::log(2.0) / std::log(12.0)), 1e-12);
  EXPECT_THROW(t_min(0, 4.0, 2.0), DomainError);
  EXPECT_THROW(t_min(2, 2.0, 2.0), DomainError);
  EXPECT_THROW(t_min(2, 4.0, 1.0), DomainError);
  EXPECT_THROW(t_min(2, INFINITY, 2.0), DomainError);
}
