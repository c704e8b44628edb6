#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "glab/cayley/bfs.hpp"
#include "glab/cayley/search.hpp"
#include "glab/error.hpp"
#include "glab/groups/catalog.hpp"

using namespace glab;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("glab-test-" + std::to_string(::getpid()) + "-" + name);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void spit(const fs::path& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << data;
}

}  // namespace

TEST(Ball, ZSpheres) {
  ZdGroup z(1);
  Ball ball = build_ball(z, 5);
  EXPECT_TRUE(ball.complete());
  EXPECT_EQ(ball.size(), 11U);
  EXPECT_EQ(ball.sphere_sizes(), (std::vector<std::uint64_t>{1, 2, 2, 2, 2, 2}));
  EXPECT_EQ(distance(ball, z, z.generator_power(0, -4)), DistanceQuery::exact(4));
  EXPECT_EQ(distance(ball, z, z.generator_power(0, 9)), DistanceQuery::beyond(5));
}

TEST(Ball, FreeGroupMatchesFormula) {
  FreeGroup f(2);
  Ball ball = build_ball(f, 5);
  auto spheres = ball.sphere_sizes();
  for (std::uint32_t n = 1; n <= 5; ++n) EXPECT_EQ(spheres[n], sphere_growth_cap(4, n));
  EXPECT_EQ(ball.ball_size(2), 17U);
}

TEST(Ball, HSpheres) {
  auto h = make_h();
  Ball ball = build_ball(h, 4);
  EXPECT_EQ(ball.sphere_sizes(), (std::vector<std::uint64_t>{1, 8, 56, 358, 2256}));
  EXPECT_EQ(ball.size(), 2679U);
}

TEST(Ball, MatchesExhaustiveSearch) {
  auto h = make_h();
  Ball ball = build_ball(h, 4);
  auto map = exhaustive_distance_map(h, 4);
  ASSERT_EQ(map.size(), ball.size());
  for (const auto& [key, d] : map) EXPECT_EQ(ball.find(key), std::optional<std::uint32_t>(d));
  auto gp = make_gp(20);
  Ball gp_ball = build_ball(gp, 5);
  auto gp_map = exhaustive_distance_map(gp, 5);
  ASSERT_EQ(gp_map.size(), gp_ball.size());
  for (const auto& [key, d] : gp_map) EXPECT_EQ(gp_ball.find(key), std::optional<std::uint32_t>(d));
}

TEST(Ball, WitnessesAreGeodesics) {
  auto gp = make_gp(20);
  Ball ball = build_ball(gp, 5);
  for (std::uint32_t i = 0; i < ball.size(); i += 7) {
    auto w = ball.witness(i);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(word_length(*w), ball.distance(i));
    EXPECT_EQ(gp.canonical_key(evaluate(gp, *w)), ball.key(i));
  }
}

TEST(Ball, DeterministicAcrossWorkerCounts) {
  auto h = make_h();
  BallOptions options;
  options.radius = 5;
  options.block_size = 256;
  options.threads = 1;
  Ball one = build_ball(h, options);
  options.threads = 3;
  Ball three = build_ball(h, options);
  ASSERT_EQ(one.size(), three.size());
  for (std::uint32_t i = 0; i < one.size(); ++i) {
    ASSERT_EQ(one.key(i), three.key(i));
    ASSERT_EQ(one.parent(i), three.parent(i));
  }
  EXPECT_EQ(ball_checksum(one), ball_checksum(three));
}

TEST(Ball, MemoryCapTruncates) {
  auto h = make_h();
  BallOptions options;
  options.radius = 5;
  options.memory_cap = 100;
  Ball ball = build_ball(h, options);
  EXPECT_FALSE(ball.complete());
  EXPECT_LE(ball.size(), 100U);
  EXPECT_THROW(distance(ball, h, h.generator_power(2, 5)), BallError);
  EXPECT_EQ(distance(ball, h, h.identity()), DistanceQuery::exact(0));
}

TEST(Ball, Truncation) {
  auto gp = make_gp(20);
  Ball big = build_ball(gp, 6);
  Ball small = big.truncated(4);
  Ball direct = build_ball(gp, 4);
  EXPECT_EQ(small.sorted_entries(), direct.sorted_entries());
  EXPECT_TRUE(small.complete());
  EXPECT_THROW(small.truncated(5), BallError);
}

TEST(Ball, InsertErrors) {
  Ball ball("zd:1", 3);
  ball.insert("x", 0);
  EXPECT_THROW(ball.insert("x", 1), BallError);
  EXPECT_THROW(ball.insert("y", 4), BallError);
  EXPECT_THROW(Ball("zd:1", 300), BallError);
}

TEST(Ball, GroupMismatch) {
  ZdGroup z(1);
  Ball ball = build_ball(ZdGroup(2), 2);
  EXPECT_THROW(distance(ball, z, z.identity()), BallError);
}

TEST(Ball, Geodesic) {
  auto gp = make_gp(20);
  Ball ball = build_ball(gp, 6);
  EXPECT_TRUE(is_geodesic(ball, gp, parse_word("t^-1 a^-1 t a t^-1 a t", gp.alphabet())));
  EXPECT_FALSE(is_geodesic(ball, gp, parse_word("a t t^-1", gp.alphabet())));
  EXPECT_THROW(is_geodesic(ball, gp, parse_word("a^9", gp.alphabet())), BallError);
}

TEST(BallFile, RoundTripIsBitExact) {
  auto h = make_h();
  Ball ball = build_ball(h, 3);
  auto first = temp_file("a.ball");
  auto second = temp_file("b.ball");
  save_ball(ball, first);
  Ball loaded = load_ball(first);
  EXPECT_EQ(loaded.group_id(), "h");
  EXPECT_EQ(loaded.radius(), 3U);
  EXPECT_TRUE(loaded.complete());
  EXPECT_FALSE(loaded.has_witnesses());
  EXPECT_EQ(loaded.sorted_entries(), ball.sorted_entries());
  save_ball(loaded, second);
  EXPECT_EQ(slurp(first), slurp(second));
  EXPECT_EQ(slurp(first).rfind("#cayley-ball v1 group=h radius=3 entries=423 complete=1 checksum=", 0), 0U);
  fs::remove(first);
  fs::remove(second);
}

TEST(BallFile, CorruptionIsRejected) {
  ZdGroup z(2);
  Ball ball = build_ball(z, 3);
  auto path = temp_file("c.ball");
  save_ball(ball, path);
  const std::string good = slurp(path);
  auto expect_rejected = [&](const std::string& data) {
    spit(path, data);
    EXPECT_THROW(load_ball(path), BallError);
  };
  std::string flipped = good;
  auto tab = flipped.find('\t', flipped.find('\n'));
  flipped[tab + 1] = flipped[tab + 1] == '1' ? '2' : '1';
  expect_rejected(flipped);
  expect_rejected("#not-a-ball" + good.substr(good.find(' ')));
  std::string version = good;
  version.replace(version.find(" v1 "), 4, " v2 ");
  expect_rejected(version);
  expect_rejected(good.substr(0, good.size() - 5));
  std::string no_field = good;
  no_field.erase(no_field.find(" radius="), std::string(" radius=3").size());
  expect_rejected(no_field);
  fs::remove(path);
  EXPECT_THROW(load_ball(temp_file("missing.ball")), BallError);
}

TEST(Search, MinWordForAToTheP) {
  auto gp = make_gp(20);
  auto w = exhaustive_min_word(gp, gp.generator_power(0, 20), 7);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(word_length(*w), 7U);
  EXPECT_FALSE(exhaustive_min_word(gp, gp.generator_power(0, 20), 6).has_value());
}

TEST(Search, Budget) {
  EXPECT_EQ(reduced_word_count(2, 3), 4U * 3U * 3U);
  auto gp = make_gp(20);
  EXPECT_THROW(exhaustive_min_word(gp, gp.identity(), 30), BudgetError);
  EXPECT_THROW(check_search_budget(2, 10, 10), BudgetError);
}

TEST(Threads, EnvironmentCap) {
  ::setenv("GLAB_THREADS", "1", 1);
  EXPECT_EQ(resolve_threads(8), 1U);
  ::unsetenv("GLAB_THREADS");
  EXPECT_GE(resolve_threads(0), 1U);
}
