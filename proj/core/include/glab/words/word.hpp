#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace glab {

// Ordered, distinct generator names. Inverses are implicit.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t index) const { return names_.at(index); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
};

struct Syllable {
  std::uint32_t generator = 0;
  std::int64_t exponent = 1;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// A single generator or inverse generator.
struct Letter {
  std::uint32_t generator = 0;
  std::int8_t sign = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

// Run-length encoded word. Not necessarily freely reduced; use free_reduce.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Syllable> syllables)
      : syllables_(std::move(syllables)) {}

  static Word letter(std::uint32_t generator, std::int64_t exponent = 1) {
    return Word({Syllable{generator, exponent}});
  }

  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  bool empty() const noexcept { return syllables_.empty(); }

  // Raw append, no merging.
  void push_back(Syllable s) { syllables_.push_back(s); }

  // Append and cancel against the tail, keeping a reduced word reduced.
  void append_reduced(std::uint32_t generator, std::int64_t exponent);
  void append_reduced(const Word& other);

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Syllable> syllables_;
};

Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string format_word(const Word& w, const Alphabet& alphabet);

Word free_reduce(const Word& w);
bool is_reduced(const Word& w);
std::uint64_t word_length(const Word& w);
Word inverse(const Word& w);
// Concatenation without reduction.
Word concat(const Word& u, const Word& v);
// Reduced product of two words.
Word multiply_reduced(const Word& u, const Word& v);

std::vector<Letter> to_letters(const Word& w);
Word from_letters(const std::vector<Letter>& letters);

// Sum of exponents of one generator.
std::int64_t exponent_sum(const Word& w, std::uint32_t generator);

}  // namespace glab
