#include "glab/words/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <set>

#include "glab/error.hpp"

namespace glab {

namespace {

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name.front())) && name.front() != '_') {
    return false;
  }
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw ParseError("alphabet must be nonempty");
  std::set<std::string_view> seen;
  for (const auto& name : names_) {
    if (!valid_name(name)) throw ParseError("invalid generator name '" + name + "'");
    if (!seen.insert(name).second) {
      throw ParseError("duplicate generator name '" + name + "'");
    }
  }
}

std::optional<std::size_t> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

void Word::append_reduced(std::uint32_t generator, std::int64_t exponent) {
  if (exponent == 0) return;
  if (!syllables_.empty() && syllables_.back().generator == generator) {
    syllables_.back().exponent += exponent;
    if (syllables_.back().exponent == 0) syllables_.pop_back();
    return;
  }
  syllables_.push_back({generator, exponent});
}

void Word::append_reduced(const Word& other) {
  for (const auto& s : other.syllables()) append_reduced(s.generator, s.exponent);
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  Word result;
  std::size_t pos = 0;
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !is_space(text[end])) ++end;
    std::string_view token = text.substr(pos, end - pos);
    pos = end;

    std::string_view name = token;
    std::int64_t exponent = 1;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      name = token.substr(0, caret);
      std::string_view digits = token.substr(caret + 1);
      if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exponent);
      if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw ParseError("malformed exponent in token '" + std::string(token) + "'");
      }
      if (exponent == 0) {
        throw ParseError("zero exponent in token '" + std::string(token) + "'");
      }
    }
    auto generator = alphabet.find(name);
    if (!generator) throw ParseError("unknown generator '" + std::string(name) + "'");
    result.push_back({static_cast<std::uint32_t>(*generator), exponent});
  }
  return result;
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  std::string text;
  for (const auto& s : w.syllables()) {
    if (!text.empty()) text += ' ';
    text += alphabet.name(s.generator);
    if (s.exponent != 1) {
      text += '^';
      text += std::to_string(s.exponent);
    }
  }
  return text;
}

Word free_reduce(const Word& w) {
  Word result;
  for (const auto& s : w.syllables()) result.append_reduced(s.generator, s.exponent);
  return result;
}

bool is_reduced(const Word& w) {
  const auto& s = w.syllables();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].exponent == 0) return false;
    if (i > 0 && s[i].generator == s[i - 1].generator) return false;
  }
  return true;
}

std::uint64_t word_length(const Word& w) {
  std::uint64_t length = 0;
  for (const auto& s : w.syllables()) {
    length += static_cast<std::uint64_t>(s.exponent < 0 ? -s.exponent : s.exponent);
  }
  return length;
}

Word inverse(const Word& w) {
  std::vector<Syllable> reversed;
  reversed.reserve(w.syllables().size());
  for (auto it = w.syllables().rbegin(); it != w.syllables().rend(); ++it) {
    reversed.push_back({it->generator, -it->exponent});
  }
  return Word(std::move(reversed));
}

Word concat(const Word& u, const Word& v) {
  std::vector<Syllable> joined = u.syllables();
  joined.insert(joined.end(), v.syllables().begin(), v.syllables().end());
  return Word(std::move(joined));
}

Word multiply_reduced(const Word& u, const Word& v) {
  Word result = free_reduce(u);
  result.append_reduced(v);
  return result;
}

std::vector<Letter> to_letters(const Word& w) {
  std::vector<Letter> letters;
  letters.reserve(word_length(w));
  for (const auto& s : w.syllables()) {
    std::int8_t sign = s.exponent < 0 ? -1 : 1;
    std::int64_t count = s.exponent < 0 ? -s.exponent : s.exponent;
    for (std::int64_t i = 0; i < count; ++i) letters.push_back({s.generator, sign});
  }
  return letters;
}

Word from_letters(const std::vector<Letter>& letters) {
  Word result;
  for (const auto& l : letters) result.append_reduced(l.generator, l.sign);
  return result;
}

std::int64_t exponent_sum(const Word& w, std::uint32_t generator) {
  std::int64_t sum = 0;
  for (const auto& s : w.syllables()) {
    if (s.generator == generator) sum += s.exponent;
  }
  return sum;
}

}  // namespace glab
