#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <thread>

#include "glab/cayley/bfs.hpp"
#include "glab/cayley/search.hpp"

namespace glab {

unsigned resolve_threads(unsigned requested) {
  unsigned n = requested != 0 ? requested : std::max(1U, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("GLAB_THREADS")) {
    unsigned limit = 0;
    auto [ptr, ec] = std::from_chars(cap, cap + std::strlen(cap), limit);
    if (ec == std::errc() && limit > 0) n = std::min(n, limit);
  }
  return n;
}

std::vector<Letter> generator_letters(std::size_t alphabet_size) {
  std::vector<Letter> letters;
  for (int sign : {1, -1}) {
    for (std::uint32_t g = 0; g < alphabet_size; ++g) {
      letters.push_back({g, static_cast<std::int8_t>(sign)});
    }
  }
  return letters;
}

std::uint64_t reduced_word_count(std::size_t generators, std::uint32_t n) {
  if (n == 0) return 1;
  if (generators == 0) return 0;
  const std::uint64_t first = 2 * generators;
  std::uint64_t count = first;
  for (std::uint32_t i = 1; i < n; ++i) {
    if (count > std::numeric_limits<std::uint64_t>::max() / (first - 1)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    count *= first - 1;
  }
  return count;
}

void check_search_budget(std::size_t generators, std::uint32_t max_length, std::uint64_t budget) {
  auto count = reduced_word_count(generators, max_length);
  if (count > budget) {
    throw BudgetError("exhaustive search over " + std::to_string(count) +
                      " words of length " + std::to_string(max_length) + " exceeds budget " +
                      std::to_string(budget));
  }
}

}  // namespace glab
