#include <gtest/gtest.h>

#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "glab/arith/tower.hpp"
#include "glab/error.hpp"
#include "glab/groups/catalog.hpp"

using namespace glab;
using boost::multiprecision::cpp_rational;

namespace {

Word random_word(std::mt19937_64& rng, std::size_t generators, std::size_t length) {
  Word w;
  for (std::size_t i = 0; i < length; ++i) {
    w.push_back({static_cast<std::uint32_t>(rng() % generators), rng() % 2 ? 1 : -1});
  }
  return w;
}

// BS(1,p) as affine maps z -> p^-k z + q.
struct Affine {
  cpp_rational scale = 1;
  cpp_rational shift = 0;
  friend bool operator==(const Affine&, const Affine&) = default;
};

Affine compose(const Affine& f, const Affine& g) { return {f.scale * g.scale, f.scale * g.shift + f.shift}; }

Affine affine_eval(const Word& w, std::uint32_t p) {
  Affine result;
  for (const auto& s : w.syllables()) {
    const std::int64_t n = s.exponent < 0 ? -s.exponent : s.exponent;
    Affine step;
    if (s.generator == 0) {
      step.shift = s.exponent < 0 ? -1 : 1;
    } else {
      step.scale = s.exponent < 0 ? cpp_rational(p) : cpp_rational(1, p);
    }
    for (std::int64_t i = 0; i < n; ++i) result = compose(result, step);
  }
  return result;
}

Affine affine_of(const BsGroup& g, const BsElement& e) {
  cpp_rational q(e.q.num, boost::multiprecision::pow(BigInt(g.p()), static_cast<unsigned>(e.q.denom_exp)));
  auto k = *to_int64(e.k);
  cpp_rational scale = 1;
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) scale *= k > 0 ? cpp_rational(1, g.p()) : cpp_rational(g.p());
  return {scale, q};
}

template <class G>
void expect_relators_trivial(const G& group, std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  const auto k = group.alphabet().size();
  for (const auto& r : relators_of(group)) {
    EXPECT_EQ(evaluate(group, r), group.identity()) << format_word(r, group.alphabet());
  }
  for (int i = 0; i < trials; ++i) {
    Word base = random_word(rng, k, rng() % 9);
    Word conj = random_word(rng, k, rng() % 4);
    const auto& rs = relators_of(group);
    Word r = rs[rng() % rs.size()];
    if (rng() % 2) r = inverse(r);
    Word inserted = concat(concat(base, concat(concat(conj, r), inverse(conj))), random_word(rng, k, 3));
    Word plain = concat(base, Word(std::vector<Syllable>(inserted.syllables().end() - 3, inserted.syllables().end())));
    EXPECT_EQ(group.canonical_key(evaluate(group, inserted)), group.canonical_key(evaluate(group, plain)))
        << format_word(inserted, group.alphabet());
  }
}

template <class G>
void expect_homomorphism(const G& group, std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  const auto k = group.alphabet().size();
  for (int i = 0; i < trials; ++i) {
    Word u = random_word(rng, k, rng() % 10);
    Word v = random_word(rng, k, rng() % 10);
    auto gu = evaluate(group, u);
    auto gv = evaluate(group, v);
    EXPECT_EQ(evaluate(group, concat(u, v)), group.multiply(gu, gv));
    EXPECT_EQ(evaluate(group, inverse(u)), group.inverse(gu));
    EXPECT_EQ(group.multiply(gu, group.inverse(gu)), group.identity());
    EXPECT_EQ(evaluate(group, free_reduce(u)), gu);
  }
}

}  // namespace

TEST(BaumslagSolitar, EvaluationExample) {
  BsGroup bs(2);
  auto g = evaluate(bs, parse_word("a^3 x^2 a^5 x^-2", bs.alphabet()));
  EXPECT_EQ(bs.ring().format(g.q), "17/2^2");
  EXPECT_EQ(g.k, 0);
}

TEST(BaumslagSolitar, AgreesWithAffineModel) {
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {2U, 3U, 20U}) {
    BsGroup bs(p);
    for (int i = 0; i < 300; ++i) {
      Word w = random_word(rng, 2, rng() % 14);
      EXPECT_EQ(affine_of(bs, evaluate(bs, w)), affine_eval(w, p)) << format_word(w, bs.alphabet());
    }
  }
}

TEST(BaumslagSolitar, KeyRoundTrip) {
  BsGroup bs(20);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    auto g = evaluate(bs, random_word(rng, 2, rng() % 12));
    EXPECT_EQ(bs.parse_key(bs.canonical_key(g)), g);
  }
  EXPECT_THROW(bs.parse_key("q=1"), ParseError);
  EXPECT_THROW(bs.parse_key("q=1;k=x"), ParseError);
}

TEST(BaumslagSolitar, PowersOfXTransversal) {
  BsGroup bs(20);
  std::mt19937_64 rng(13);
  for (std::int64_t step : {1, 2, 3}) {
    BsPowersOfX oracle{step};
    for (int i = 0; i < 200; ++i) {
      auto g = evaluate(bs, random_word(rng, 2, rng() % 10));
      auto r = g;
      BigInt m = oracle.extract(bs, r);
      EXPECT_EQ(bs.multiply(oracle.power(bs, m), r), g);
      if (r.q.num != 0) {
        auto v = bs.ring().valuation(r.q);
        EXPECT_GE(v, 0);
        EXPECT_LT(v, step);
      } else {
        EXPECT_GE(r.k, 0);
        EXPECT_LT(r.k, step);
      }
      auto again = r;
      EXPECT_EQ(oracle.extract(bs, again), 0);
      EXPECT_EQ(again, r);
    }
  }
}

TEST(BaumslagSolitar, Membership) {
  BsGroup bs(20);
  EXPECT_EQ(membership(BsPowersOfA{}, bs, bs.a_power(7)), BigInt(7));
  EXPECT_FALSE(membership(BsPowersOfA{}, bs, bs.x_power(1)).has_value());
  EXPECT_EQ(membership(BsPowersOfX{2}, bs, bs.x_power(6)), BigInt(3));
  EXPECT_FALSE(membership(BsPowersOfX{2}, bs, bs.x_power(3)).has_value());
}

TEST(SimpleGroups, ZdAndFree) {
  ZdGroup z2(2);
  auto g = evaluate(z2, parse_word("a^3 b a^-1 b^-4", z2.alphabet()));
  EXPECT_EQ(g, (std::vector<std::int64_t>{2, -3}));
  FreeGroup f(2);
  EXPECT_EQ(f.canonical_key(evaluate(f, parse_word("a b b^-1 a", f.alphabet()))),
            f.canonical_key(f.generator_power(0, 2)));
  expect_relators_trivial(z2, 1, 100);
  expect_homomorphism(z2, 2, 100);
  expect_homomorphism(f, 3, 100);
}

TEST(Gp, W1IsAToTheP) {
  auto gp = make_gp(20);
  auto g = evaluate(gp, parse_word("t^-1 a^-1 t a t^-1 a t", gp.alphabet()));
  EXPECT_EQ(gp.as_generator_power(g), BigInt(20));
  EXPECT_TRUE(equal_in_group(gp, parse_word("t^-1 a^-1 t a t^-1 a t", gp.alphabet()),
                             parse_word("a^20", gp.alphabet())));
}

TEST(Gp, RelatorsAndHomomorphism) {
  auto gp = make_gp(20);
  expect_relators_trivial(gp, 4, 300);
  expect_homomorphism(gp, 5, 300);
}

TEST(Gp, PerturbedModelBreaksTheRelator) {
  auto bad = make_gp_perturbed(20, 21);
  bool broken = false;
  for (const auto& r : relators_of(bad)) broken = broken || !(evaluate(bad, r) == bad.identity());
  EXPECT_TRUE(broken);
}

TEST(Gp, UnrepresentableIntermediateIsReported) {
  // Normal form a^2 x^(20^20) t^-1 x^-20: the key is fine, but inverting
  // the head needs 20^(20^20).
  auto gp = make_gp(20);
  Word w = parse_word("a^2 t^-3 a^-1 t a^-1 t^-1 a t^2 a", gp.alphabet());
  auto g = evaluate(gp, w);
  EXPECT_EQ(gp.canonical_key(g), "q=2;k=" + to_decimal(ipow(BigInt(20), 20)) + "|t^-1|q=0;k=-20");
  EXPECT_THROW(gp.inverse(g), RepresentabilityError);
}

TEST(Gp, PinchOrderDoesNotMatter) {
  auto gp = make_gp(20);
  auto h2 = make_h2();
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    Word w = random_word(rng, 2, rng() % 12);
    auto expected = evaluate(gp, w);
    EXPECT_EQ(gp.reduce_word(w, PinchOrder::innermost), expected) << format_word(w, gp.alphabet());
    EXPECT_EQ(gp.reduce_word(w, PinchOrder::outermost), expected) << format_word(w, gp.alphabet());
    Word v = random_word(rng, 3, rng() % 12);
    auto expected2 = evaluate(h2, v);
    EXPECT_EQ(h2.reduce_word(v, PinchOrder::innermost), expected2);
    EXPECT_EQ(h2.reduce_word(v, PinchOrder::outermost), expected2);
  }
}

TEST(H2, RelatorsAndHomomorphism) {
  auto h2 = make_h2();
  expect_relators_trivial(h2, 6, 300);
  expect_homomorphism(h2, 7, 300);
}

TEST(H, RelatorsAndHomomorphism) {
  auto h = make_h();
  expect_relators_trivial(h, 8, 300);
  expect_homomorphism(h, 9, 300);
}

TEST(H, ForwardPowers) {
  auto h = make_h();
  auto at = evaluate(h, parse_word("a t", h.alphabet()));
  for (std::int64_t k = 1; k <= 10; ++k) {
    std::int64_t m = (std::int64_t{1} << (k + 1)) - 2;
    Word rhs({{2, k}, {0, m}});
    EXPECT_EQ(power(h, at, k), evaluate(h, rhs)) << k;
  }
}

TEST(H, StableLettersAreNotPowersOfEachOther) {
  auto h = make_h();
  auto t = h.generator_power(2, 1);
  auto s = h.generator_power(1, 1);
  EXPECT_FALSE(is_power_of(h, t, s, 50).has_value());
  EXPECT_EQ(is_power_of(h, t, power(h, t, 7), 50), std::optional<std::int64_t>(7));
}

TEST(Catalog, GroupIds) {
  EXPECT_EQ(std::visit([](const auto& g) { return g.id(); }, make_group("gp:20")), "gp:20");
  EXPECT_EQ(group_p(make_group("bs:7")), 7U);
  EXPECT_EQ(group_p(make_group("h")), 0U);
  EXPECT_THROW(make_group("nope"), ParseError);
  EXPECT_THROW(make_group("bs:1"), Error);
  EXPECT_THROW(make_group("gp:x"), ParseError);
  EXPECT_THROW(make_group("zd:0"), Error);
}
