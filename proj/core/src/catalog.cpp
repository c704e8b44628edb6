#include "glab/groups/catalog.hpp"

#include <charconv>

#include "glab/error.hpp"

namespace glab {

namespace {

std::vector<Word> parse_all(const std::vector<std::string>& texts, const Alphabet& alphabet) {
  std::vector<Word> words;
  for (const auto& text : texts) words.push_back(parse_word(text, alphabet));
  return words;
}

GpGroup build_gp(std::uint32_t relator_p, std::uint32_t base_p, std::size_t digit_budget) {
  BsGroup base(base_p, Alphabet({"a", "x"}), digit_budget);
  std::vector<HnnGenerator> generators{{"a", 0U}, {"t", std::nullopt}};
  Alphabet alphabet({"a", "t"});
  auto relators = parse_all(
      {"t^-1 a^-1 t a t^-1 a t a^-" + std::to_string(relator_p)}, alphabet);
  return GpGroup("gp:" + std::to_string(relator_p), std::move(base), BsPowersOfA{},
                 BsPowersOfX{1}, std::move(generators), std::move(relators));
}

std::uint32_t parse_parameter(std::string_view text, std::string_view id) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("malformed group id '" + std::string(id) + "'");
  }
  return value;
}

}  // namespace

GpGroup make_gp(std::uint32_t p, std::size_t digit_budget) {
  return build_gp(p, p, digit_budget);
}

GpGroup make_gp_perturbed(std::uint32_t p, std::uint32_t base_p) {
  return build_gp(p, base_p, kDefaultDigitBudget);
}

H2Group make_h2(std::size_t digit_budget) {
  BsGroup base(2, Alphabet({"a", "s"}), digit_budget);
  std::vector<HnnGenerator> generators{{"a", 0U}, {"s", 1U}, {"x", std::nullopt}};
  Alphabet alphabet({"a", "s", "x"});
  auto relators = parse_all({"s^-1 a s a^-2", "x^-1 s x s^-2"}, alphabet);
  return H2Group("h2", std::move(base), BsPowersOfX{1}, BsPowersOfX{2},
                 std::move(generators), std::move(relators));
}

HGroup make_h(std::size_t digit_budget) {
  BsGroup first(2, Alphabet({"a", "t"}), digit_budget);
  H2Group second = make_h2(digit_budget);
  std::vector<AmalgamGenerator> generators{{"a", 0, 0}, {"s", 2, 1}, {"t", 1, 1}, {"x", 2, 2}};
  Alphabet alphabet({"a", "s", "t", "x"});
  auto relators = parse_all({"t^-1 a t a^-2", "s^-1 a s a^-2", "x^-1 s x s^-2"}, alphabet);
  return HGroup("h", std::move(first), std::move(second), BsPowersOfA{},
                HnnHeadOracle<BsPowersOfA>{}, std::move(generators), std::move(relators));
}

AnyGroup make_group(std::string_view id, std::size_t digit_budget) {
  if (id == "h") return make_h(digit_budget);
  if (id == "h2") return make_h2(digit_budget);
  auto colon = id.find(':');
  if (colon == std::string_view::npos) throw ParseError("unknown group id '" + std::string(id) + "'");
  auto kind = id.substr(0, colon);
  auto value = parse_parameter(id.substr(colon + 1), id);
  if (kind == "zd") return ZdGroup(value);
  if (kind == "free") return FreeGroup(value);
  if (kind == "bs") return BsGroup(value, Alphabet({"a", "x"}), digit_budget);
  if (kind == "gp") return make_gp(value, digit_budget);
  throw ParseError("unknown group id '" + std::string(id) + "'");
}

std::uint32_t group_p(const AnyGroup& group) {
  if (const auto* bs = std::get_if<BsGroup>(&group)) return bs->p();
  if (const auto* gp = std::get_if<GpGroup>(&group)) return gp->base().p();
  return 0;
}

}  // namespace glab
