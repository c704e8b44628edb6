#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "glab/error.hpp"
#include "glab/groups/model.hpp"
#include "glab/words/word.hpp"

namespace glab {

// c^m r1 r2 ... rn with ri nontrivial right coset representatives of <c>,
// alternating between the two factors.
template <class E1, class E2>
struct AmalgamElement {
  BigInt central = 0;
  std::vector<std::variant<E1, E2>> factors;

  friend bool operator==(const AmalgamElement&, const AmalgamElement&) = default;
};

// side 0 is the amalgamated generator c; sides 1 and 2 name a generator of
// the corresponding factor by its index there.
struct AmalgamGenerator {
  std::string name;
  int side = 0;
  std::uint32_t index = 0;
};

// G1 *_C G2 for an infinite cyclic C embedded in both factors through the
// oracles O1 and O2.
template <GroupModel G1, GroupModel G2, CyclicSubgroupOracle<G1> O1,
          CyclicSubgroupOracle<G2> O2>
class AmalgamGroup {
 public:
  using first_element = typename G1::element_type;
  using second_element = typename G2::element_type;
  using element_type = AmalgamElement<first_element, second_element>;

  AmalgamGroup(std::string id, G1 first, G2 second, O1 first_oracle, O2 second_oracle,
               std::vector<AmalgamGenerator> generators, std::vector<Word> relators = {})
      : id_(std::move(id)),
        first_(std::move(first)),
        second_(std::move(second)),
        first_oracle_(std::move(first_oracle)),
        second_oracle_(std::move(second_oracle)),
        generators_(std::move(generators)),
        relators_(std::move(relators)),
        first_identity_(first_.identity()),
        second_identity_(second_.identity()) {
    std::vector<std::string> names;
    for (const auto& g : generators_) {
      names.push_back(g.name);
      if (g.side < 0 || g.side > 2) throw ParseError("amalgam generator side must be 0, 1 or 2");
    }
    alphabet_ = Alphabet(std::move(names));
  }

  std::string id() const { return id_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const G1& first() const noexcept { return first_; }
  const G2& second() const noexcept { return second_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }

  element_type identity() const { return {}; }

  void right_multiply_first(element_type& g, const first_element& h) const {
    right_multiply_factor<0>(g, h);
  }
  void right_multiply_second(element_type& g, const second_element& h) const {
    right_multiply_factor<1>(g, h);
  }
  void right_multiply_central(element_type& g, const BigInt& m) const {
    absorb(g, g.factors.size(), m);
  }

  void right_multiply_generator(element_type& g, std::uint32_t generator, int sign) const {
    const auto& info = generators_[generator];
    if (info.side == 0) {
      absorb(g, g.factors.size(), BigInt(sign));
    } else if (info.side == 1) {
      right_multiply_factor_generator<0>(g, info.index, sign);
    } else {
      right_multiply_factor_generator<1>(g, info.index, sign);
    }
  }

  element_type multiply(const element_type& lhs, const element_type& rhs) const {
    element_type result = lhs;
    absorb(result, result.factors.size(), rhs.central);
    for (const auto& factor : rhs.factors) {
      if (factor.index() == 0) {
        right_multiply_factor<0>(result, std::get<0>(factor));
      } else {
        right_multiply_factor<1>(result, std::get<1>(factor));
      }
    }
    return result;
  }

  element_type inverse(const element_type& g) const {
    element_type result;
    for (auto it = g.factors.rbegin(); it != g.factors.rend(); ++it) {
      if (it->index() == 0) {
        right_multiply_factor<0>(result, first_.inverse(std::get<0>(*it)));
      } else {
        right_multiply_factor<1>(result, second_.inverse(std::get<1>(*it)));
      }
    }
    absorb(result, result.factors.size(), -g.central);
    return result;
  }

  element_type generator_power(std::uint32_t generator, std::int64_t exponent) const {
    const auto& info = generators_.at(generator);
    element_type result;
    if (info.side == 0) {
      result.central = exponent;
    } else if (info.side == 1) {
      right_multiply_factor<0>(result, first_.generator_power(info.index, exponent));
    } else {
      right_multiply_factor<1>(result, second_.generator_power(info.index, exponent));
    }
    return result;
  }

  std::string canonical_key(const element_type& g) const {
    std::string key = "c=" + to_decimal(g.central);
    for (const auto& factor : g.factors) {
      if (factor.index() == 0) {
        key += "*1(";
        key += first_.canonical_key(std::get<0>(factor));
      } else {
        key += "*2(";
        key += second_.canonical_key(std::get<1>(factor));
      }
      key += ')';
    }
    return key;
  }

  std::size_t key_size_lower_bound(const element_type& g) const {
    std::size_t size = 2 + decimal_length_lower_bound(g.central);
    for (const auto& factor : g.factors) {
      size += 4;
      if (factor.index() == 0) {
        size += glab::key_size_lower_bound(first_, std::get<0>(factor));
      } else {
        size += glab::key_size_lower_bound(second_, std::get<1>(factor));
      }
    }
    return size;
  }

 private:
  template <std::size_t Side>
  const auto& factor_group() const {
    if constexpr (Side == 0) {
      return first_;
    } else {
      return second_;
    }
  }
  template <std::size_t Side>
  const auto& factor_oracle() const {
    if constexpr (Side == 0) {
      return first_oracle_;
    } else {
      return second_oracle_;
    }
  }
  template <std::size_t Side>
  const auto& factor_identity() const {
    if constexpr (Side == 0) {
      return first_identity_;
    } else {
      return second_identity_;
    }
  }

  // Multiply factors[count-1] (or the central power when count == 0) on the
  // right by c^m and push the produced central parts leftward.
  void absorb(element_type& g, std::size_t count, BigInt m) const {
    while (m != 0 && count > 0) {
      auto& factor = g.factors[count - 1];
      if (factor.index() == 0) {
        m = absorb_into<0>(std::get<0>(factor), m);
      } else {
        m = absorb_into<1>(std::get<1>(factor), m);
      }
      --count;
    }
    if (m != 0) g.central += m;
  }

  template <std::size_t Side, class E>
  BigInt absorb_into(E& factor, const BigInt& m) const {
    const auto& group = factor_group<Side>();
    const auto& oracle = factor_oracle<Side>();
    factor = group.multiply(factor, oracle.power(group, m));
    return oracle.extract(group, factor);
  }

  template <std::size_t Side, class E>
  void right_multiply_factor(element_type& g, const E& h) const {
    const auto& group = factor_group<Side>();
    if (!g.factors.empty() && g.factors.back().index() == Side) {
      auto& last = std::get<Side>(g.factors.back());
      last = group.multiply(last, h);
      renormalize_tail<Side>(g);
      return;
    }
    E rep = h;
    BigInt m = factor_oracle<Side>().extract(group, rep);
    absorb(g, g.factors.size(), std::move(m));
    if (!(rep == factor_identity<Side>())) g.factors.emplace_back(std::in_place_index<Side>, std::move(rep));
  }

  template <std::size_t Side>
  void right_multiply_factor_generator(element_type& g, std::uint32_t index, int sign) const {
    const auto& group = factor_group<Side>();
    if (!g.factors.empty() && g.factors.back().index() == Side) {
      group.right_multiply_generator(std::get<Side>(g.factors.back()), index, sign);
      renormalize_tail<Side>(g);
      return;
    }
    auto rep = factor_identity<Side>();
    group.right_multiply_generator(rep, index, sign);
    BigInt m = factor_oracle<Side>().extract(group, rep);
    absorb(g, g.factors.size(), std::move(m));
    if (!(rep == factor_identity<Side>())) g.factors.emplace_back(std::in_place_index<Side>, std::move(rep));
  }

  // The last factor (on Side) was multiplied on the right within its factor
  // group. Split off its central part, which sits to the left of the
  // representative, and move it further left.
  template <std::size_t Side>
  void renormalize_tail(element_type& g) const {
    auto& last = std::get<Side>(g.factors.back());
    BigInt m = factor_oracle<Side>().extract(factor_group<Side>(), last);
    if (last == factor_identity<Side>()) {
      g.factors.pop_back();
      absorb(g, g.factors.size(), std::move(m));
    } else {
      absorb(g, g.factors.size() - 1, std::move(m));
    }
  }

  std::string id_;
  G1 first_;
  G2 second_;
  O1 first_oracle_;
  O2 second_oracle_;
  std::vector<AmalgamGenerator> generators_;
  std::vector<Word> relators_;
  Alphabet alphabet_;
  first_element first_identity_;
  second_element second_identity_;
};

}  // namespace glab
