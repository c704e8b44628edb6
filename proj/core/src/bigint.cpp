#include "glab/arith/bigint.hpp"

#include <charconv>
#include <limits>

#include "glab/error.hpp"

namespace glab {

namespace {
const BigInt kInt64Min = std::numeric_limits<std::int64_t>::min();
const BigInt kInt64Max = std::numeric_limits<std::int64_t>::max();
}  // namespace

std::optional<std::int64_t> to_int64(const BigInt& value) {
  if (value < kInt64Min || value > kInt64Max) return std::nullopt;
  return value.convert_to<std::int64_t>();
}

std::string to_decimal(const BigInt& value) {
  if (auto small = to_int64(value)) {
    char buffer[24];
    auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), *small);
    return std::string(buffer, end);
  }
  return value.str();
}

BigInt parse_bigint(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw ParseError("empty integer literal");
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c < '0' || c > '9') {
      throw ParseError("malformed integer literal '" + std::string(text) + "'");
    }
    value *= 10;
    value += c - '0';
  }
  return negative ? BigInt(-value) : value;
}

std::size_t decimal_length_lower_bound(const BigInt& value) {
  if (value == 0) return 1;
  // 2^m <= |value| gives at least floor(m log10 2) + 1 digits; the limb
  // count gives such an m without touching the digits.
  const auto limbs = static_cast<std::uint64_t>(value.backend().size());
  const std::uint64_t m = (limbs - 1) * 8 * sizeof(boost::multiprecision::limb_type);
  return static_cast<std::size_t>(m * 30102 / 100000 + 1) + (value < 0 ? 1 : 0);
}

std::size_t decimal_digits(const BigInt& value) {
  if (value == 0) return 1;
  BigInt magnitude = abs(value);
  if (auto small = to_int64(magnitude)) {
    std::size_t digits = 0;
    for (std::int64_t v = *small; v != 0; v /= 10) ++digits;
    return digits;
  }
  return magnitude.str().size();
}

BigInt floor_div(const BigInt& numerator, const BigInt& divisor) {
  BigInt quotient;
  BigInt remainder;
  boost::multiprecision::divide_qr(numerator, divisor, quotient, remainder);
  if (remainder < 0) quotient -= 1;
  return quotient;
}

BigInt ipow(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt square = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent != 0) square *= square;
  }
  return result;
}

}  // namespace glab
