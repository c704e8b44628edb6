#include "glab/groups/baumslag_solitar.hpp"

#include <limits>

#include "glab/error.hpp"

namespace glab {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t sum = 0;
  if (__builtin_add_overflow(a, b, &sum)) {
    throw RepresentabilityError("64-bit exponent overflow");
  }
  return sum;
}

BsGroup::BsGroup(std::uint32_t p, Alphabet alphabet, std::size_t digit_budget)
    : alphabet_(std::move(alphabet)), ring_(p, digit_budget) {
  if (alphabet_.size() != 2) throw ParseError("BS(1,p) needs exactly two generators");
}

PAdicRational BsGroup::shift(const PAdicRational& q, const BigInt& e) const {
  if (q.num == 0) return q;
  auto small = to_int64(e);
  if (!small) throw RepresentabilityError("p-power exponent exceeds 64-bit range");
  return ring_.scale(q, *small);
}

BsElement BsGroup::multiply(const BsElement& lhs, const BsElement& rhs) const {
  return {ring_.add(lhs.q, shift(rhs.q, -lhs.k)), lhs.k + rhs.k};
}

BsElement BsGroup::inverse(const BsElement& g) const {
  return {ring_.negate(shift(g.q, g.k)), -g.k};
}

BsElement BsGroup::generator_power(std::uint32_t generator, std::int64_t exponent) const {
  if (generator == 0) return {ring_.make(exponent), 0};
  return {{}, exponent};
}

void BsGroup::right_multiply_generator(BsElement& g, std::uint32_t generator, int sign) const {
  if (generator == 0) {
    g.q = ring_.add(g.q, shift(ring_.make(sign), -g.k));
  } else {
    g.k += sign;
  }
}

std::string BsGroup::canonical_key(const BsElement& g) const {
  std::string key = "q=";
  key += ring_.format(g.q);
  key += ";k=";
  key += to_decimal(g.k);
  return key;
}

BsElement BsGroup::parse_key(std::string_view key) const {
  auto separator = key.find(";k=");
  if (key.substr(0, 2) != "q=" || separator == std::string_view::npos) {
    throw ParseError("malformed BS key '" + std::string(key) + "'");
  }
  BsElement g;
  g.q = ring_.parse(key.substr(2, separator - 2));
  auto k_text = std::string(key.substr(separator + 3));
  try {
    g.k = parse_bigint(k_text);
  } catch (const ParseError&) {
    throw ParseError("malformed BS key '" + std::string(key) + "'");
  }
  return g;
}

std::vector<Word> BsGroup::relators() const {
  // x^-1 a x a^-p
  return {Word({{1, -1}, {0, 1}, {1, 1}, {0, -static_cast<std::int64_t>(p())}})};
}

std::optional<BigInt> BsGroup::as_generator_power(const BsElement& g) const {
  if (g.k != 0 || !ring_.is_integer(g.q)) return std::nullopt;
  return g.q.num;
}

BigInt BsPowersOfA::extract(const BsGroup& group, BsElement& g) const {
  // a^m (q, k) = (m + q, k)
  if (group.ring().is_integer(g.q)) {
    BigInt m = std::move(g.q.num);
    g.q = {};
    return m;
  }
  BigInt m = group.ring().floor(g.q);
  if (m != 0) g.q = group.ring().fractional(g.q);
  return m;
}

BsElement BsPowersOfA::power(const BsGroup& group, const BigInt& m) const {
  return group.a_power(m);
}

BigInt BsPowersOfX::extract(const BsGroup& group, BsElement& g) const {
  // x^j (q p^j, k - j) = (q, k), so the coset of (q, k) holds
  // (q p^j, k - j) for j in step Z. The representative is the one whose
  // q has valuation in [0, step), or second coordinate in [0, step) when
  // q = 0. Normalizing k instead would force numerators like p^k.
  if (g.q.num == 0) {
    BigInt j = floor_div(g.k, BigInt(step)) * step;
    if (j == 0) return 0;
    g.k -= j;
    return j / step;
  }
  std::int64_t v = group.ring().valuation(g.q);
  std::int64_t remainder = v % step;
  if (remainder < 0) remainder += step;
  std::int64_t j = remainder - v;
  if (j == 0) return 0;
  g.q = group.ring().scale(g.q, j);
  g.k -= j;
  return BigInt(j / step);
}

BsElement BsPowersOfX::power(const BsGroup& group, const BigInt& m) const {
  return group.x_power(m * step);
}

}  // namespace glab
