#pragma once

#include <concepts>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>

#include "glab/arith/bigint.hpp"
#include "glab/words/word.hpp"

namespace glab {

// A group with a solved word problem: canonical elements, a finite
// generating alphabet, and a canonical key that is equal for two elements
// iff they are equal in the group.
template <class G>
concept GroupModel = requires(const G& group, typename G::element_type& mutable_element,
                              const typename G::element_type& element,
                              std::uint32_t generator, std::int64_t exponent, int sign) {
  typename G::element_type;
  { group.id() } -> std::convertible_to<std::string>;
  { group.alphabet() } -> std::convertible_to<const Alphabet&>;
  { group.identity() } -> std::same_as<typename G::element_type>;
  { group.multiply(element, element) } -> std::same_as<typename G::element_type>;
  { group.inverse(element) } -> std::same_as<typename G::element_type>;
  { group.generator_power(generator, exponent) } -> std::same_as<typename G::element_type>;
  { group.right_multiply_generator(mutable_element, generator, sign) };
  { group.canonical_key(element) } -> std::same_as<std::string>;
  { element == element } -> std::convertible_to<bool>;
};

// A cyclic subgroup C = <c> of a group G, given by a right transversal:
// extract() rewrites g in place to its coset representative r and returns
// m with g = c^m r. The trivial coset is represented by the identity.
template <class O, class G>
concept CyclicSubgroupOracle = requires(const O& oracle, const G& group,
                                        typename G::element_type& element,
                                        const BigInt& m) {
  { oracle.extract(group, element) } -> std::same_as<BigInt>;
  { oracle.power(group, m) } -> std::same_as<typename G::element_type>;
};

template <class G, class O>
  requires GroupModel<G> && CyclicSubgroupOracle<O, G>
std::optional<BigInt> membership(const O& oracle, const G& group,
                                 typename G::element_type element) {
  BigInt m = oracle.extract(group, element);
  if (element == group.identity()) return m;
  return std::nullopt;
}

template <GroupModel G>
typename G::element_type evaluate(const G& group, const Word& w) {
  auto result = group.identity();
  for (const auto& s : w.syllables()) {
    std::int64_t count = s.exponent < 0 ? -s.exponent : s.exponent;
    if (count <= 4) {
      int sign = s.exponent < 0 ? -1 : 1;
      for (std::int64_t i = 0; i < count; ++i) {
        group.right_multiply_generator(result, s.generator, sign);
      }
    } else {
      result = group.multiply(result, group.generator_power(s.generator, s.exponent));
    }
  }
  return result;
}

template <GroupModel G>
bool equal_in_group(const G& group, const Word& u, const Word& v) {
  return evaluate(group, u) == evaluate(group, v);
}

// g^n by repeated squaring.
template <GroupModel G>
typename G::element_type power(const G& group, const typename G::element_type& g,
                               const BigInt& n) {
  auto base = n < 0 ? group.inverse(g) : g;
  BigInt remaining = abs(n);
  auto result = group.identity();
  while (remaining != 0) {
    if ((remaining & 1) != 0) result = group.multiply(result, base);
    remaining >>= 1;
    if (remaining != 0) base = group.multiply(base, base);
  }
  return result;
}

template <GroupModel G>
typename G::element_type power(const G& group, const typename G::element_type& g,
                               std::int64_t n) {
  return power(group, g, BigInt(n));
}

// Models that bound the length of canonical_key without building it.
template <class G>
concept HasKeySizeBound = requires(const G& group, const typename G::element_type& e) {
  { group.key_size_lower_bound(e) } -> std::convertible_to<std::size_t>;
};

template <GroupModel G>
std::size_t key_size_lower_bound(const G& group, const typename G::element_type& e) {
  if constexpr (HasKeySizeBound<G>) {
    return group.key_size_lower_bound(e);
  } else {
    return 0;
  }
}

// Models that can read off a^n directly from the canonical form.
template <class G>
concept HasPowerProbe = requires(const G& group, const typename G::element_type& e) {
  { group.as_generator_power(e) } -> std::same_as<std::optional<BigInt>>;
  { group.probe_generator() } -> std::convertible_to<std::uint32_t>;
};

// Some i with |i| <= bound and g^i == h.
template <GroupModel G>
std::optional<std::int64_t> is_power_of(const G& group, const typename G::element_type& g,
                                        const typename G::element_type& h,
                                        std::int64_t bound) {
  if constexpr (HasPowerProbe<G>) {
    if (g == group.generator_power(group.probe_generator(), 1)) {
      auto n = group.as_generator_power(h);
      if (!n) return std::nullopt;
      auto small = to_int64(*n);
      if (!small || std::llabs(*small) > bound) return std::nullopt;
      return *small;
    }
  }
  if (h == group.identity()) return 0;
  auto forward = group.identity();
  auto backward = group.identity();
  const auto g_inverse = group.inverse(g);
  for (std::int64_t i = 1; i <= bound; ++i) {
    forward = group.multiply(forward, g);
    if (forward == h) return i;
    backward = group.multiply(backward, g_inverse);
    if (backward == h) return -i;
  }
  return std::nullopt;
}

}  // namespace glab
