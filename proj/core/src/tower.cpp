#include "glab/arith/tower.hpp"

#include <cmath>

#include "glab/error.hpp"

namespace glab {

std::string TowerExponent::describe() const {
  if (value) return to_decimal(*value);
  return "^" + std::to_string(height) + " " + std::to_string(base);
}

TowerExponent tower(std::uint32_t p, std::uint32_t height,
                    std::size_t digit_budget) {
  if (p < 2) throw DomainError("tower base must be at least 2");
  TowerExponent result{height, p, BigInt(1)};
  const double log10p = std::log10(static_cast<double>(p));
  BigInt current = 1;
  for (std::uint32_t level = 0; level < height; ++level) {
    // digits(p^current) = floor(current * log10 p) + 1
    auto exponent = to_int64(current);
    if (!exponent) {
      result.value.reset();
      return result;
    }
    double estimate = static_cast<double>(*exponent) * log10p + 1.0;
    if (estimate > static_cast<double>(digit_budget) + 2.0) {
      result.value.reset();
      return result;
    }
    current = ipow(BigInt(p), static_cast<std::uint64_t>(*exponent));
    if (decimal_digits(current) > digit_budget) {
      result.value.reset();
      return result;
    }
  }
  result.value = std::move(current);
  return result;
}

}  // namespace glab
