#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace glab {

using BigInt = boost::multiprecision::cpp_int;

std::string to_decimal(const BigInt& value);
BigInt parse_bigint(std::string_view text);

// Number of decimal digits of |value|; zero has one digit.
std::size_t decimal_digits(const BigInt& value);
// A cheap lower bound on to_decimal(value).size(), from the bit length.
std::size_t decimal_length_lower_bound(const BigInt& value);

// Floor division and the matching nonnegative remainder (divisor > 0).
BigInt floor_div(const BigInt& numerator, const BigInt& divisor);

BigInt ipow(const BigInt& base, std::uint64_t exponent);

std::optional<std::int64_t> to_int64(const BigInt& value);

}  // namespace glab
