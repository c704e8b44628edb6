#include "glab/words/indexed_word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

#include "glab/error.hpp"

namespace glab {

void IndexedWord::append_reduced(std::int64_t index, std::int64_t exponent) {
  if (exponent == 0) return;
  if (!syllables_.empty() && syllables_.back().index == index) {
    syllables_.back().exponent += exponent;
    if (syllables_.back().exponent == 0) syllables_.pop_back();
    return;
  }
  syllables_.push_back({index, exponent});
}

std::string format_indexed(const IndexedWord& v) {
  std::string text;
  for (const auto& s : v.syllables()) {
    if (!text.empty()) text += ' ';
    text += "a[";
    text += std::to_string(s.index);
    text += ']';
    if (s.exponent != 1) {
      text += '^';
      text += std::to_string(s.exponent);
    }
  }
  return text;
}

IndexedWord parse_indexed(std::string_view text) {
  IndexedWord result;
  std::size_t pos = 0;
  auto parse_int = [&](std::string_view digits, std::string_view token) {
    std::int64_t value = 0;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw ParseError("malformed indexed token '" + std::string(token) + "'");
    }
    return value;
  };
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view token = text.substr(pos, end - pos);
    pos = end;
    if (token.size() < 4 || token.substr(0, 2) != "a[") {
      throw ParseError("malformed indexed token '" + std::string(token) + "'");
    }
    auto close = token.find(']');
    if (close == std::string_view::npos) {
      throw ParseError("malformed indexed token '" + std::string(token) + "'");
    }
    std::int64_t index = parse_int(token.substr(2, close - 2), token);
    std::int64_t exponent = 1;
    std::string_view rest = token.substr(close + 1);
    if (!rest.empty()) {
      if (rest.front() != '^') {
        throw ParseError("malformed indexed token '" + std::string(token) + "'");
      }
      exponent = parse_int(rest.substr(1), token);
      if (exponent == 0) throw ParseError("zero exponent in '" + std::string(token) + "'");
    }
    result.push_back({index, exponent});
  }
  return result;
}

IndexedWord free_reduce(const IndexedWord& v) {
  IndexedWord result;
  for (const auto& s : v.syllables()) result.append_reduced(s.index, s.exponent);
  return result;
}

bool is_reduced(const IndexedWord& v) {
  const auto& s = v.syllables();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].exponent == 0) return false;
    if (i > 0 && s[i].index == s[i - 1].index) return false;
  }
  return true;
}

std::uint64_t word_length(const IndexedWord& v) {
  std::uint64_t length = 0;
  for (const auto& s : v.syllables()) {
    length += static_cast<std::uint64_t>(s.exponent < 0 ? -s.exponent : s.exponent);
  }
  return length;
}

IndexedWord inverse(const IndexedWord& v) {
  std::vector<IndexedSyllable> reversed;
  for (auto it = v.syllables().rbegin(); it != v.syllables().rend(); ++it) {
    reversed.push_back({it->index, -it->exponent});
  }
  return IndexedWord(std::move(reversed));
}

Word psi(const IndexedWord& v, PsiLetters letters) {
  Word result;
  for (const auto& s : v.syllables()) {
    result.append_reduced(letters.t, -s.index);
    result.append_reduced(letters.a, s.exponent);
    result.append_reduced(letters.t, s.index);
  }
  return result;
}

IndexedWord psi_inverse(const Word& w, PsiLetters letters) {
  if (exponent_sum(w, letters.t) != 0) {
    throw DomainError("word has unequal numbers of t and t^-1 letters");
  }
  IndexedWord result;
  std::int64_t index = 0;
  for (const auto& s : w.syllables()) {
    if (s.generator == letters.t) {
      index -= s.exponent;
    } else if (s.generator == letters.a) {
      result.append_reduced(index, s.exponent);
    } else {
      throw DomainError("word uses a generator other than a and t");
    }
  }
  return result;
}

bool contains_index(const IndexedWord& v, std::int64_t index) {
  return std::any_of(v.syllables().begin(), v.syllables().end(),
                     [&](const IndexedSyllable& s) { return s.index == index; });
}

bool contains_index_at_least(const IndexedWord& v, std::int64_t index) {
  return std::any_of(v.syllables().begin(), v.syllables().end(),
                     [&](const IndexedSyllable& s) { return s.index >= index; });
}

std::int64_t max_index(const IndexedWord& v) {
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (const auto& s : v.syllables()) best = std::max(best, s.index);
  return best;
}

}  // namespace glab
