#include "glab/arith/padic.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "glab/error.hpp"

namespace glab {

namespace {
constexpr std::int64_t kCachedPowers = 128;
}

PAdicRing::PAdicRing(std::uint32_t p, std::size_t digit_budget)
    : p_(p), digit_budget_(digit_budget) {
  if (p < 2) throw DomainError("p must be at least 2");
  // log2(10) rounded up; the bit test is a conservative pre-filter.
  budget_bits_ = static_cast<std::size_t>(
      std::ceil(static_cast<double>(digit_budget) * 3.3219280948873623));
  if ((p & (p - 1)) == 0) {
    while ((1U << log2_p_) < p) ++log2_p_;
  }
  powers_.reserve(kCachedPowers);
  BigInt value = 1;
  for (std::int64_t e = 0; e < kCachedPowers; ++e) {
    powers_.push_back(value);
    value *= p_;
  }
}

BigInt PAdicRing::power(std::int64_t e) const {
  if (e < 0) throw DomainError("negative exponent in PAdicRing::power");
  if (e < kCachedPowers) return powers_[static_cast<std::size_t>(e)];
  return powers_[kCachedPowers - 1] * ipow(BigInt(p_), e - kCachedPowers + 1);
}

PAdicRational PAdicRing::canonical(PAdicRational x) const {
  if (x.num == 0) return {};
  if (x.denom_exp < 0) {
    x.num = times_power(x.num, -x.denom_exp);
    x.denom_exp = 0;
    return x;
  }
  if (log2_p_ != 0 && x.denom_exp > 0) {
    const auto zeros = static_cast<std::int64_t>(boost::multiprecision::lsb(abs(x.num)) / log2_p_);
    const auto cancel = std::min(zeros, x.denom_exp);
    if (cancel > 0) {
      x.num >>= static_cast<std::uint64_t>(cancel) * log2_p_;  // exact, so the sign is safe
      x.denom_exp -= cancel;
    }
    return x;
  }
  while (x.denom_exp > 0) {
    BigInt quotient;
    BigInt remainder;
    boost::multiprecision::divide_qr(x.num, BigInt(p_), quotient, remainder);
    if (remainder != 0) break;
    x.num = std::move(quotient);
    --x.denom_exp;
  }
  return x;
}

bool PAdicRing::is_canonical(const PAdicRational& x) const {
  if (x.denom_exp < 0) return false;
  if (x.num == 0) return x.denom_exp == 0;
  return x.denom_exp == 0 || x.num % p_ != 0;
}

PAdicRational PAdicRing::make(BigInt num, std::int64_t denom_exp) const {
  return canonical(PAdicRational{std::move(num), denom_exp});
}

PAdicRational PAdicRing::add(const PAdicRational& x,
                             const PAdicRational& y) const {
  if (x.num == 0) return y;
  if (y.num == 0) return x;
  PAdicRational result;
  if (x.denom_exp == y.denom_exp) {
    result.num = x.num + y.num;
    result.denom_exp = x.denom_exp;
    result = canonical(std::move(result));
  } else if (x.denom_exp > y.denom_exp) {
    // Exactly one operand has a p-free numerator at the top exponent, so the
    // sum is already canonical.
    result.num = x.num + times_power(y.num, x.denom_exp - y.denom_exp);
    result.denom_exp = x.denom_exp;
  } else {
    result.num = times_power(x.num, y.denom_exp - x.denom_exp) + y.num;
    result.denom_exp = y.denom_exp;
  }
  check_budget(result);
  return result;
}

PAdicRational PAdicRing::negate(PAdicRational x) const {
  x.num = -x.num;
  return x;
}

PAdicRational PAdicRing::subtract(const PAdicRational& x,
                                  const PAdicRational& y) const {
  return add(x, negate(y));
}

PAdicRational PAdicRing::multiply(const PAdicRational& x,
                                  const PAdicRational& y) const {
  auto result = canonical(PAdicRational{x.num * y.num, x.denom_exp + y.denom_exp});
  check_budget(result);
  return result;
}

PAdicRational PAdicRing::scale(PAdicRational x, std::int64_t e) const {
  if (x.num == 0 || e == 0) return x;
  if (e > 0) {
    if (x.denom_exp >= e) {
      x.denom_exp -= e;
    } else {
      x.num = times_power(x.num, e - x.denom_exp);
      x.denom_exp = 0;
      check_budget(x);
    }
    return x;
  }
  if (x.denom_exp > 0) {
    x.denom_exp -= e;
    return x;
  }
  x.denom_exp = -e;
  return canonical(std::move(x));
}

std::int64_t PAdicRing::valuation(const PAdicRational& x) const {
  if (x.num == 0) throw DomainError("valuation of zero");
  if (x.denom_exp > 0) return -x.denom_exp;
  std::int64_t v = 0;
  BigInt n = x.num;
  BigInt quotient;
  BigInt remainder;
  for (;;) {
    boost::multiprecision::divide_qr(n, BigInt(p_), quotient, remainder);
    if (remainder != 0) return v;
    n = std::move(quotient);
    ++v;
  }
}

BigInt PAdicRing::times_power(const BigInt& num, std::int64_t e) const {
  if (e == 0) return num;
  if (log2_p_ != 0) return num << (static_cast<std::uint64_t>(e) * log2_p_);
  return num * power(e);
}

BigInt PAdicRing::floor_div_power(const BigInt& num, std::int64_t e) const {
  if (log2_p_ == 0) return floor_div(num, power(e));
  const auto bits = static_cast<std::uint64_t>(e) * log2_p_;
  if (num >= 0) return num >> bits;
  // Shifts of cpp_int act on the magnitude, so round the negative case by hand.
  BigInt magnitude = -num;
  BigInt quotient = magnitude >> bits;
  if ((quotient << bits) != magnitude) ++quotient;
  return -quotient;
}

BigInt PAdicRing::floor(const PAdicRational& x) const {
  if (x.denom_exp <= 0) return times_power(x.num, -x.denom_exp);
  return floor_div_power(x.num, x.denom_exp);
}

PAdicRational PAdicRing::fractional(const PAdicRational& x) const {
  if (x.denom_exp <= 0) return {};
  BigInt quotient = floor_div_power(x.num, x.denom_exp);
  return PAdicRational{x.num - times_power(quotient, x.denom_exp), x.denom_exp};
}

std::string PAdicRing::format(const PAdicRational& x) const {
  std::string text = to_decimal(x.num);
  if (x.denom_exp != 0) {
    text += '/';
    text += std::to_string(p_);
    text += '^';
    text += std::to_string(x.denom_exp);
  }
  return text;
}

PAdicRational PAdicRing::parse(std::string_view text) const {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return make(parse_bigint(text), 0);
  BigInt num = parse_bigint(text.substr(0, slash));
  auto denom = text.substr(slash + 1);
  auto caret = denom.find('^');
  if (caret == std::string_view::npos) {
    throw ParseError("expected num/p^e, got '" + std::string(text) + "'");
  }
  std::uint32_t base = 0;
  std::int64_t exponent = 0;
  auto base_text = denom.substr(0, caret);
  auto exp_text = denom.substr(caret + 1);
  auto [bend, bec] = std::from_chars(base_text.data(),
                                     base_text.data() + base_text.size(), base);
  auto [eend, eec] = std::from_chars(exp_text.data(),
                                     exp_text.data() + exp_text.size(), exponent);
  if (bec != std::errc() || bend != base_text.data() + base_text.size() ||
      eec != std::errc() || eend != exp_text.data() + exp_text.size() ||
      exponent < 0) {
    throw ParseError("malformed p-adic rational '" + std::string(text) + "'");
  }
  if (base != p_) {
    throw ParseError("rational '" + std::string(text) + "' uses base " +
                     std::to_string(base) + ", ring has p=" + std::to_string(p_));
  }
  return make(std::move(num), exponent);
}

void PAdicRing::check_budget(const PAdicRational& x) const {
  if (x.num == 0) return;
  std::size_t bits = boost::multiprecision::msb(abs(x.num)) + 1;
  if (bits + 4 <= budget_bits_) return;
  if (decimal_digits(x.num) > digit_budget_) {
    throw RepresentabilityError("p-adic numerator exceeds digit budget of " +
                                std::to_string(digit_budget_) + " digits");
  }
}

}  // namespace glab
