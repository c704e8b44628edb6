#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "glab/groups/amalgam.hpp"
#include "glab/groups/baumslag_solitar.hpp"
#include "glab/groups/hnn.hpp"
#include "glab/groups/simple_groups.hpp"

namespace glab {

// <a, t | t^-1 a^-1 t a t^-1 a t = a^p>, as the HNN extension of
// BS(1,p) = <a, x> with t^-1 a t = x.
using GpGroup = HnnGroup<BsGroup, BsPowersOfA, BsPowersOfX>;

// <a, s, x | s^-1 a s = a^2, x^-1 s x = s^2>, the HNN extension of
// BS(1,2) = <a, s> with associated subgroups <s> and <s^2>.
using H2Group = HnnGroup<BsGroup, BsPowersOfX, BsPowersOfX>;

// <a, s, t, x | t^-1 a t = a^2, s^-1 a s = a^2, x^-1 s x = s^2>
//   = BS(1,2) *_<a> H2 with BS(1,2) = <a, t>.
using HGroup = AmalgamGroup<BsGroup, H2Group, BsPowersOfA, HnnHeadOracle<BsPowersOfA>>;

GpGroup make_gp(std::uint32_t p, std::size_t digit_budget = kDefaultDigitBudget);

// Same alphabet and relator words as make_gp(p), but the base group uses
// base_p. Used to check that verifiers notice a wrong relation.
GpGroup make_gp_perturbed(std::uint32_t p, std::uint32_t base_p);

H2Group make_h2(std::size_t digit_budget = kDefaultDigitBudget);
HGroup make_h(std::size_t digit_budget = kDefaultDigitBudget);

using AnyGroup = std::variant<ZdGroup, FreeGroup, BsGroup, GpGroup, H2Group, HGroup>;

// "zd:N", "free:N", "bs:P", "gp:P", "h2", "h".
AnyGroup make_group(std::string_view id, std::size_t digit_budget = kDefaultDigitBudget);

// The p parameter for bs:P and gp:P, zero otherwise.
std::uint32_t group_p(const AnyGroup& group);

template <class G>
std::vector<Word> relators_of(const G& group) {
  return group.relators();
}

}  // namespace glab
