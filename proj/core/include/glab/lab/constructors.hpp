#pragma once

#include <cstdint>

#include "glab/arith/bigint.hpp"
#include "glab/words/indexed_word.hpp"
#include "glab/words/word.hpp"

namespace glab::lab {

// Generator positions in the alphabets used by the catalog groups.
namespace gp_letters {
inline constexpr std::uint32_t a = 0;
inline constexpr std::uint32_t t = 1;
}  // namespace gp_letters

namespace h_letters {
inline constexpr std::uint32_t a = 0;
inline constexpr std::uint32_t s = 1;
inline constexpr std::uint32_t t = 2;
inline constexpr std::uint32_t x = 3;
}  // namespace h_letters

// w_0 = a, w_{i+1} = t^-1 w_i^-1 t a t^-1 w_i t (free-reduced), over {a, t}.
// Represents a^(tower of k p's) in G_p, length 3 2^(k+1) - 5 for k >= 1.
Word build_wk(std::uint32_t k);

// w'_0 = a_0; w'_i conjugates every a_{i-1} of w'_{i-1} by a_i.
// psi(w'_k) = w_k, length 2^(k+1) - 1.
IndexedWord build_wk_prime(std::uint32_t k);

// (prod_{i<m} s^{k_i} x^-1) s x^m over {a, s, t, x}, where k_m ... k_0 is
// the binary expansion of k. Represents s^k in H.
Word shortcut_sk(std::uint64_t k);

// s^-(k+1) a s^(k+1) a^-2 with both s-powers written via shortcut_sk.
// Represents t^-k (a t)^k = a^(2^(k+1) - 2) in H.
Word shortcut_g1inv_g2(std::uint64_t k);

// p^(p^(...^L)) with k - 1 copies of p (k = 1 gives L).
BigInt tower_bound(std::uint32_t p, std::uint32_t k, std::uint32_t L);

}  // namespace glab::lab
