#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "glab/words/word.hpp"

namespace glab {

// A word in the letters a_i = t^-i a t^i, i any integer.
struct IndexedSyllable {
  std::int64_t index = 0;
  std::int64_t exponent = 1;

  friend bool operator==(const IndexedSyllable&, const IndexedSyllable&) = default;
};

class IndexedWord {
 public:
  IndexedWord() = default;
  explicit IndexedWord(std::vector<IndexedSyllable> syllables)
      : syllables_(std::move(syllables)) {}

  const std::vector<IndexedSyllable>& syllables() const noexcept {
    return syllables_;
  }
  bool empty() const noexcept { return syllables_.empty(); }
  void push_back(IndexedSyllable s) { syllables_.push_back(s); }
  void append_reduced(std::int64_t index, std::int64_t exponent);

  friend bool operator==(const IndexedWord&, const IndexedWord&) = default;

 private:
  std::vector<IndexedSyllable> syllables_;
};

// Positions of the letters a and t in the two-letter alphabet the rewriting
// works over.
struct PsiLetters {
  std::uint32_t a = 0;
  std::uint32_t t = 1;
};

// "a[2] a[-2]^2 a[1]^5 a[0]"
std::string format_indexed(const IndexedWord& v);
IndexedWord parse_indexed(std::string_view text);

IndexedWord free_reduce(const IndexedWord& v);
bool is_reduced(const IndexedWord& v);
std::uint64_t word_length(const IndexedWord& v);
IndexedWord inverse(const IndexedWord& v);

// Replace each a_i^e by t^-i a^e t^i and freely reduce.
Word psi(const IndexedWord& v, PsiLetters letters = {});

// Label every a-syllable by (#t^-1 - #t) to its left and drop the t letters.
// Requires equal numbers of t and t^-1; throws DomainError otherwise.
IndexedWord psi_inverse(const Word& w, PsiLetters letters = {});

bool contains_index(const IndexedWord& v, std::int64_t index);
bool contains_index_at_least(const IndexedWord& v, std::int64_t index);
std::int64_t max_index(const IndexedWord& v);

}  // namespace glab
