#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glab/arith/padic.hpp"
#include "glab/groups/model.hpp"
#include "glab/words/word.hpp"

namespace glab {

// a^q x^k in BS(1,p) = Z[1/p] x Z, with x^-1 a x = a^p.
struct BsElement {
  PAdicRational q;
  BigInt k = 0;

  friend bool operator==(const BsElement&, const BsElement&) = default;
};

// <a, x | x^-1 a x = a^p>. Multiplication:
//   (q1, k1)(q2, k2) = (q1 + q2 p^-k1, k1 + k2).
class BsGroup {
 public:
  using element_type = BsElement;

  explicit BsGroup(std::uint32_t p, Alphabet alphabet = Alphabet({"a", "x"}),
                   std::size_t digit_budget = kDefaultDigitBudget);

  std::string id() const { return "bs:" + std::to_string(ring_.p()); }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const PAdicRing& ring() const noexcept { return ring_; }
  std::uint32_t p() const noexcept { return ring_.p(); }

  BsElement identity() const { return {}; }
  BsElement multiply(const BsElement& lhs, const BsElement& rhs) const;
  BsElement inverse(const BsElement& g) const;
  BsElement generator_power(std::uint32_t generator, std::int64_t exponent) const;
  void right_multiply_generator(BsElement& g, std::uint32_t generator, int sign) const;
  std::string canonical_key(const BsElement& g) const;
  BsElement parse_key(std::string_view key) const;
  std::size_t key_size_lower_bound(const BsElement& g) const {
    return 5 + decimal_length_lower_bound(g.q.num) + decimal_length_lower_bound(g.k);
  }

  BsElement a_power(const BigInt& n) const { return {ring_.make(n), 0}; }
  BsElement x_power(BigInt n) const { return {{}, std::move(n)}; }

  std::vector<Word> relators() const;

  std::optional<BigInt> as_generator_power(const BsElement& g) const;
  std::uint32_t probe_generator() const noexcept { return 0; }

 private:
  // q p^e; the exponent must fit in 64 bits unless q = 0.
  PAdicRational shift(const PAdicRational& q, const BigInt& e) const;

  Alphabet alphabet_;
  PAdicRing ring_;
};

// <a>: representatives have fractional first coordinate in [0,1).
struct BsPowersOfA {
  BigInt extract(const BsGroup& group, BsElement& g) const;
  BsElement power(const BsGroup& group, const BigInt& m) const;
};

// <x^step>: representatives have q of p-adic valuation in [0, step)
// (second coordinate in [0, step) when q = 0).
struct BsPowersOfX {
  std::int64_t step = 1;

  BigInt extract(const BsGroup& group, BsElement& g) const;
  BsElement power(const BsGroup& group, const BigInt& m) const;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);

}  // namespace glab
