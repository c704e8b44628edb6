#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "glab/groups/model.hpp"
#include "glab/words/word.hpp"

namespace glab {

// Names a, b, c, ... for up to 26 generators, g1, g2, ... beyond.
Alphabet default_alphabet(std::size_t rank);

// Z^d with the standard basis.
class ZdGroup {
 public:
  using element_type = std::vector<std::int64_t>;

  explicit ZdGroup(std::size_t dimension);

  std::string id() const { return "zd:" + std::to_string(dimension_); }
  const Alphabet& alphabet() const noexcept { return alphabet_; }

  element_type identity() const { return element_type(dimension_, 0); }
  element_type multiply(const element_type& lhs, const element_type& rhs) const;
  element_type inverse(const element_type& g) const;
  element_type generator_power(std::uint32_t generator, std::int64_t exponent) const;
  void right_multiply_generator(element_type& g, std::uint32_t generator, int sign) const;
  std::string canonical_key(const element_type& g) const;
  std::vector<Word> relators() const;

 private:
  std::size_t dimension_;
  Alphabet alphabet_;
};

// The free group; elements are freely reduced words.
class FreeGroup {
 public:
  using element_type = Word;

  explicit FreeGroup(std::size_t rank);

  std::string id() const { return "free:" + std::to_string(rank_); }
  const Alphabet& alphabet() const noexcept { return alphabet_; }

  Word identity() const { return {}; }
  Word multiply(const Word& lhs, const Word& rhs) const { return multiply_reduced(lhs, rhs); }
  Word inverse(const Word& g) const { return glab::inverse(g); }
  Word generator_power(std::uint32_t generator, std::int64_t exponent) const {
    return Word::letter(generator, exponent);
  }
  void right_multiply_generator(Word& g, std::uint32_t generator, int sign) const {
    g.append_reduced(generator, sign);
  }
  std::string canonical_key(const Word& g) const;
  std::vector<Word> relators() const { return {}; }

 private:
  std::size_t rank_;
  Alphabet alphabet_;
};

}  // namespace glab
