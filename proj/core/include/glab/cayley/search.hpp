#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "glab/error.hpp"
#include "glab/groups/model.hpp"

namespace glab {

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

// Reduced words of length exactly n over k generators: 2k (2k-1)^(n-1).
// Saturates at UINT64_MAX.
std::uint64_t reduced_word_count(std::size_t generators, std::uint32_t n);

// Throws BudgetError when words of length max_length exceed the budget.
void check_search_budget(std::size_t generators, std::uint32_t max_length, std::uint64_t budget);

// Visit every freely reduced word of length <= max_length (depth first,
// letters in generator order then inverses) with its value. The visitor
// returns false to prune below the current word.
template <GroupModel G, class Visitor>
void enumerate_reduced_words(const G& group, std::uint32_t max_length, Visitor&& visit,
                             std::uint64_t budget = kDefaultSearchBudget) {
  const std::size_t k = group.alphabet().size();
  check_search_budget(k, max_length, budget);
  std::vector<Letter> word;
  auto recurse = [&](auto& self, const typename G::element_type& value) -> void {
    if (!visit(static_cast<const std::vector<Letter>&>(word), value)) return;
    if (word.size() == max_length) return;
    for (int sign : {1, -1}) {
      for (std::uint32_t g = 0; g < k; ++g) {
        if (!word.empty() && word.back().generator == g && word.back().sign == -sign) continue;
        auto next = value;
        group.right_multiply_generator(next, g, sign);
        word.push_back({g, static_cast<std::int8_t>(sign)});
        self(self, next);
        word.pop_back();
      }
    }
  };
  recurse(recurse, group.identity());
}

// Shortest word (by iterative deepening) evaluating to target, if one of
// length <= max_length exists.
template <GroupModel G>
std::optional<Word> exhaustive_min_word(const G& group, const typename G::element_type& target,
                                        std::uint32_t max_length,
                                        std::uint64_t budget = kDefaultSearchBudget) {
  check_search_budget(group.alphabet().size(), max_length, budget);
  for (std::uint32_t length = 0; length <= max_length; ++length) {
    std::optional<Word> found;
    enumerate_reduced_words(
        group, length,
        [&](const std::vector<Letter>& w, const typename G::element_type& value) {
          if (found) return false;
          if (w.size() == length && value == target) found = from_letters(w);
          return true;
        },
        budget);
    if (found) return found;
  }
  return std::nullopt;
}

// Key -> word distance for every element reached by a word of length
// <= max_length. Exact for distances <= max_length.
template <GroupModel G>
std::unordered_map<std::string, std::uint32_t> exhaustive_distance_map(
    const G& group, std::uint32_t max_length, std::uint64_t budget = kDefaultSearchBudget) {
  std::unordered_map<std::string, std::uint32_t> result;
  enumerate_reduced_words(
      group, max_length,
      [&](const std::vector<Letter>& w, const typename G::element_type& value) {
        auto d = static_cast<std::uint32_t>(w.size());
        auto [it, inserted] = result.emplace(group.canonical_key(value), d);
        if (!inserted && d < it->second) it->second = d;
        return true;
      },
      budget);
  return result;
}

}  // namespace glab
