#include "glab/lab/constructors.hpp"

#include <bit>

#include "glab/error.hpp"

namespace glab::lab {

Word build_wk(std::uint32_t k) {
  using namespace gp_letters;
  Word w = Word::letter(a);
  for (std::uint32_t i = 0; i < k; ++i) {
    Word next;
    next.append_reduced(t, -1);
    next.append_reduced(inverse(w));
    next.append_reduced(t, 1);
    next.append_reduced(a, 1);
    next.append_reduced(t, -1);
    next.append_reduced(w);
    next.append_reduced(t, 1);
    w = std::move(next);
  }
  return w;
}

IndexedWord build_wk_prime(std::uint32_t k) {
  IndexedWord w({{0, 1}});
  for (std::uint32_t i = 1; i <= k; ++i) {
    const auto previous = static_cast<std::int64_t>(i) - 1;
    IndexedWord next;
    for (const auto& s : w.syllables()) {
      if (s.index != previous) {
        next.append_reduced(s.index, s.exponent);
        continue;
      }
      // a_{i-1}^e -> a_i^-1 a_{i-1}^e a_i
      next.append_reduced(i, -1);
      next.append_reduced(s.index, s.exponent);
      next.append_reduced(i, 1);
    }
    w = std::move(next);
  }
  return w;
}

Word shortcut_sk(std::uint64_t k) {
  using namespace h_letters;
  if (k == 0) throw DomainError("shortcut_sk needs k >= 1");
  const int m = 63 - std::countl_zero(k);
  Word w;
  for (int i = 0; i < m; ++i) {
    if ((k >> i) & 1U) w.append_reduced(s, 1);
    w.append_reduced(x, -1);
  }
  w.append_reduced(s, 1);
  if (m > 0) w.append_reduced(x, m);
  return w;
}

Word shortcut_g1inv_g2(std::uint64_t k) {
  using namespace h_letters;
  if (k == 0) throw DomainError("shortcut_g1inv_g2 needs k >= 1");
  Word power = shortcut_sk(k + 1);
  Word w = inverse(power);
  w.append_reduced(a, 1);
  w.append_reduced(power);
  w.append_reduced(a, -2);
  return w;
}

BigInt tower_bound(std::uint32_t p, std::uint32_t k, std::uint32_t L) {
  if (k == 0) throw DomainError("tower bound needs k >= 1");
  BigInt value = L;
  for (std::uint32_t i = 1; i < k; ++i) {
    auto exponent = to_int64(value);
    if (!exponent || *exponent > 4'000'000) {
      throw RepresentabilityError("tower bound too large to materialize");
    }
    value = ipow(BigInt(p), static_cast<std::uint64_t>(*exponent));
  }
  return value;
}

}  // namespace glab::lab
