#include <gtest/gtest.h>

#include <random>

#include "glab/error.hpp"
#include "glab/words/indexed_word.hpp"
#include "glab/words/word.hpp"

using namespace glab;

namespace {

const Alphabet at({"a", "t"});

Word random_reduced(std::mt19937_64& rng, std::size_t length) {
  std::vector<Letter> letters;
  while (letters.size() < length) {
    Letter l{static_cast<std::uint32_t>(rng() % 2), static_cast<std::int8_t>(rng() % 2 ? 1 : -1)};
    if (!letters.empty() && letters.back().generator == l.generator && letters.back().sign == -l.sign) continue;
    letters.push_back(l);
  }
  return from_letters(letters);
}

}  // namespace

TEST(Word, ParseAndFormat) {
  Word w = parse_word("t^-1 a^-1 t a t^-1 a t", at);
  EXPECT_EQ(word_length(w), 7U);
  EXPECT_EQ(format_word(w, at), "t^-1 a^-1 t a t^-1 a t");
  EXPECT_EQ(format_word(parse_word("a^3 t^-2", at), at), "a^3 t^-2");
  EXPECT_EQ(format_word(Word{}, at), "");
  EXPECT_TRUE(parse_word("", at).empty());
}

TEST(Word, ParseErrors) {
  EXPECT_THROW(parse_word("b", at), ParseError);
  EXPECT_THROW(parse_word("a^", at), ParseError);
  EXPECT_THROW(parse_word("a^0", at), ParseError);
  EXPECT_THROW(parse_word("a^x", at), ParseError);
  EXPECT_THROW(Alphabet({"a", "a"}), ParseError);
}

TEST(Word, FreeReduction) {
  EXPECT_EQ(free_reduce(parse_word("a t t^-1 a^-1", at)), Word{});
  EXPECT_EQ(free_reduce(parse_word("a a^2 t", at)), parse_word("a^3 t", at));
  EXPECT_FALSE(is_reduced(parse_word("a a", at)));
  EXPECT_TRUE(is_reduced(parse_word("a^2 t a^-1", at)));
}

TEST(Word, InverseAndProduct) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    Word u = random_reduced(rng, rng() % 12);
    Word v = random_reduced(rng, rng() % 12);
    EXPECT_EQ(multiply_reduced(u, inverse(u)), Word{});
    EXPECT_EQ(inverse(inverse(u)), u);
    EXPECT_EQ(multiply_reduced(u, v), free_reduce(concat(u, v)));
    EXPECT_EQ(from_letters(to_letters(u)), u);
    EXPECT_EQ(exponent_sum(concat(u, v), 1), exponent_sum(u, 1) + exponent_sum(v, 1));
  }
}

TEST(IndexedWord, WorkedExampleByRule) {
  Word v = parse_word("t^-2 a t^4 a^2 t^-3 a^-5 t a", at);
  IndexedWord image = psi_inverse(v);
  EXPECT_EQ(format_indexed(image), "a[2] a[-2]^2 a[1]^-5 a[0]");
  EXPECT_EQ(psi(image), v);
}

TEST(IndexedWord, ParseAndFormat) {
  auto v = parse_indexed("a[2] a[-2]^2 a[1]^5 a[0]");
  ASSERT_EQ(v.syllables().size(), 4U);
  EXPECT_EQ(v.syllables()[1], (IndexedSyllable{-2, 2}));
  EXPECT_EQ(format_indexed(v), "a[2] a[-2]^2 a[1]^5 a[0]");
  EXPECT_THROW(parse_indexed("a[1"), ParseError);
  EXPECT_THROW(parse_indexed("b[1]"), ParseError);
  EXPECT_THROW(parse_indexed("a[x]"), ParseError);
}

TEST(IndexedWord, PsiOfSmallWords) {
  EXPECT_EQ(psi(parse_indexed("a[0]")), parse_word("a", at));
  EXPECT_EQ(psi(parse_indexed("a[1]^-1 a[0] a[1]")), parse_word("t^-1 a^-1 t a t^-1 a t", at));
  EXPECT_EQ(psi(IndexedWord{}), Word{});
}

TEST(IndexedWord, UnbalancedWordRejected) {
  EXPECT_THROW(psi_inverse(parse_word("t a", at)), DomainError);
}

TEST(IndexedWord, PsiInvertsOnBalancedWords) {
  std::mt19937_64 rng(20201014);
  int checked = 0;
  while (checked < 2000) {
    Word w = random_reduced(rng, rng() % 31);
    if (exponent_sum(w, 1) != 0) continue;
    ++checked;
    auto v = psi_inverse(w);
    EXPECT_EQ(psi(v), w);
    EXPECT_TRUE(is_reduced(v) || word_length(psi(v)) <= word_length(w));
  }
}

TEST(IndexedWord, IndexQueries) {
  auto v = parse_indexed("a[2] a[-2]^2 a[1]^5 a[0]");
  EXPECT_TRUE(contains_index(v, -2));
  EXPECT_FALSE(contains_index(v, 3));
  EXPECT_TRUE(contains_index_at_least(v, 2));
  EXPECT_FALSE(contains_index_at_least(v, 3));
  EXPECT_EQ(max_index(v), 2);
  EXPECT_EQ(word_length(v), 9U);
  EXPECT_EQ(free_reduce(parse_indexed("a[1] a[1]^-1 a[0]")), parse_indexed("a[0]"));
  EXPECT_EQ(inverse(parse_indexed("a[1]^2 a[0]")), parse_indexed("a[0]^-1 a[1]^-2"));
}
