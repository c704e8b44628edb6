#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "glab/arith/bigint.hpp"

namespace glab {

inline constexpr std::size_t kDefaultDigitBudget = 1'000'000;

// An element num / p^denom_exp of Z[1/p]. The prime-like base p is not
// stored; it lives in the PAdicRing that produced the value. Canonical form:
// denom_exp == 0 or p does not divide num (and zero is 0/p^0).
struct PAdicRational {
  BigInt num = 0;
  std::int64_t denom_exp = 0;

  friend bool operator==(const PAdicRational&, const PAdicRational&) = default;
};

class PAdicRing {
 public:
  explicit PAdicRing(std::uint32_t p,
                     std::size_t digit_budget = kDefaultDigitBudget);

  std::uint32_t p() const noexcept { return p_; }
  std::size_t digit_budget() const noexcept { return digit_budget_; }

  PAdicRational make(BigInt num, std::int64_t denom_exp = 0) const;
  PAdicRational canonical(PAdicRational x) const;
  bool is_canonical(const PAdicRational& x) const;

  PAdicRational add(const PAdicRational& x, const PAdicRational& y) const;
  PAdicRational negate(PAdicRational x) const;
  PAdicRational subtract(const PAdicRational& x, const PAdicRational& y) const;
  PAdicRational multiply(const PAdicRational& x, const PAdicRational& y) const;

  // x * p^e.
  PAdicRational scale(PAdicRational x, std::int64_t e) const;

  bool is_integer(const PAdicRational& x) const noexcept {
    return x.denom_exp == 0;
  }
  // p-adic valuation of a nonzero canonical value.
  std::int64_t valuation(const PAdicRational& x) const;

  BigInt floor(const PAdicRational& x) const;
  // x - floor(x), in [0, 1).
  PAdicRational fractional(const PAdicRational& x) const;

  // "num/p^e", with "/p^e" omitted when e == 0.
  std::string format(const PAdicRational& x) const;
  PAdicRational parse(std::string_view text) const;

  // p^e for e >= 0.
  BigInt power(std::int64_t e) const;

  // Throws RepresentabilityError when |num| has more decimal digits than
  // the budget allows.
  void check_budget(const PAdicRational& x) const;

 private:
  std::uint32_t p_;
  std::size_t digit_budget_;
  std::size_t budget_bits_;
  std::vector<BigInt> powers_;
  unsigned log2_p_ = 0;  // nonzero when p is a power of two
  // num p^e and floor(num / p^e) for e >= 0, by shifts when possible.
  BigInt times_power(const BigInt& num, std::int64_t e) const;
  BigInt floor_div_power(const BigInt& num, std::int64_t e) const;
};

}  // namespace glab
