#include "glab/groups/simple_groups.hpp"

#include "glab/error.hpp"
#include "glab/groups/baumslag_solitar.hpp"

namespace glab {

Alphabet default_alphabet(std::size_t rank) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rank; ++i) {
    names.push_back(rank <= 26 ? std::string(1, static_cast<char>('a' + i))
                               : "g" + std::to_string(i + 1));
  }
  return Alphabet(std::move(names));
}

ZdGroup::ZdGroup(std::size_t dimension)
    : dimension_(dimension), alphabet_(default_alphabet(dimension)) {
  if (dimension == 0) throw DomainError("Z^d needs d >= 1");
}

ZdGroup::element_type ZdGroup::multiply(const element_type& lhs,
                                        const element_type& rhs) const {
  element_type result(dimension_);
  for (std::size_t i = 0; i < dimension_; ++i) result[i] = checked_add(lhs[i], rhs[i]);
  return result;
}

ZdGroup::element_type ZdGroup::inverse(const element_type& g) const {
  element_type result(dimension_);
  for (std::size_t i = 0; i < dimension_; ++i) result[i] = checked_add(0, -g[i]);
  return result;
}

ZdGroup::element_type ZdGroup::generator_power(std::uint32_t generator,
                                               std::int64_t exponent) const {
  element_type result(dimension_, 0);
  result.at(generator) = exponent;
  return result;
}

void ZdGroup::right_multiply_generator(element_type& g, std::uint32_t generator,
                                       int sign) const {
  g[generator] = checked_add(g[generator], sign);
}

std::string ZdGroup::canonical_key(const element_type& g) const {
  std::string key = "(";
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i > 0) key += ',';
    key += std::to_string(g[i]);
  }
  key += ')';
  return key;
}

std::vector<Word> ZdGroup::relators() const {
  std::vector<Word> result;
  for (std::uint32_t i = 0; i < dimension_; ++i) {
    for (std::uint32_t j = i + 1; j < dimension_; ++j) {
      result.push_back(Word({{i, -1}, {j, -1}, {i, 1}, {j, 1}}));
    }
  }
  return result;
}

FreeGroup::FreeGroup(std::size_t rank) : rank_(rank), alphabet_(default_alphabet(rank)) {
  if (rank == 0) throw DomainError("free group needs rank >= 1");
}

std::string FreeGroup::canonical_key(const Word& g) const {
  std::string key = "w=";
  key += format_word(g, alphabet_);
  return key;
}

}  // namespace glab
