#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "glab/arith/bigint.hpp"
#include "glab/arith/padic.hpp"

namespace glab {

// The tower p^(p^(...^p)) of height k. Height 0 is 1 and height 1 is p.
// The exact value is kept only when it fits the digit budget.
struct TowerExponent {
  std::uint32_t height = 0;
  std::uint32_t base = 2;
  std::optional<BigInt> value;

  bool representable() const noexcept { return value.has_value(); }
  std::string describe() const;
};

TowerExponent tower(std::uint32_t p, std::uint32_t height,
                    std::size_t digit_budget = kDefaultDigitBudget);

}  // namespace glab
