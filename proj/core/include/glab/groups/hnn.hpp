#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glab/error.hpp"
#include "glab/groups/model.hpp"
#include "glab/words/word.hpp"

namespace glab {

template <class BaseElement>
struct HnnFactor {
  std::int8_t sign = 1;
  BaseElement rep;

  friend bool operator==(const HnnFactor&, const HnnFactor&) = default;
};

// head t^e1 g1 t^e2 g2 ... t^en gn. Each gi (i >= 1) is the transversal
// representative of its coset: of A when ei = -1, of B when ei = +1.
template <class BaseElement>
struct HnnElement {
  BaseElement head;
  std::vector<HnnFactor<BaseElement>> tail;

  friend bool operator==(const HnnElement&, const HnnElement&) = default;
};

// One generator of the extension: either a base generator or the stable letter.
struct HnnGenerator {
  std::string name;
  std::optional<std::uint32_t> base_generator;
};

enum class PinchOrder { innermost, outermost };

// <base, t | t^-1 a^m t = b^m> for cyclic subgroups A = <a>, B = <b> of the
// base group. Elements are kept in Britton normal form, with subgroup parts
// pushed to the left: t^-1 a^m = b^m t^-1 and t b^m = a^m t.
template <GroupModel Base, CyclicSubgroupOracle<Base> OracleA,
          CyclicSubgroupOracle<Base> OracleB>
class HnnGroup {
 public:
  using base_element = typename Base::element_type;
  using element_type = HnnElement<base_element>;

  HnnGroup(std::string id, Base base, OracleA a, OracleB b,
           std::vector<HnnGenerator> generators, std::vector<Word> relators = {})
      : id_(std::move(id)),
        base_(std::move(base)),
        a_(std::move(a)),
        b_(std::move(b)),
        generators_(std::move(generators)),
        relators_(std::move(relators)),
        base_identity_(base_.identity()) {
    std::vector<std::string> names;
    std::size_t stable_count = 0;
    for (const auto& g : generators_) {
      names.push_back(g.name);
      if (!g.base_generator) {
        stable_name_ = g.name;
        ++stable_count;
      } else if (*g.base_generator >= base_.alphabet().size()) {
        throw ParseError("HNN generator '" + g.name + "' maps to a missing base generator");
      }
    }
    if (stable_count != 1) throw ParseError("HNN extension needs exactly one stable letter");
    alphabet_ = Alphabet(std::move(names));
  }

  std::string id() const { return id_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const Base& base() const noexcept { return base_; }
  const OracleA& oracle_a() const noexcept { return a_; }
  const OracleB& oracle_b() const noexcept { return b_; }
  const std::string& stable_name() const noexcept { return stable_name_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }

  element_type identity() const { return {base_identity_, {}}; }

  element_type from_base(base_element g) const { return {std::move(g), {}}; }

  void right_multiply_base(element_type& g, const base_element& h) const {
    if (g.tail.empty()) {
      g.head = base_.multiply(g.head, h);
      return;
    }
    g.tail.back().rep = base_.multiply(g.tail.back().rep, h);
    normalize_from(g, g.tail.size());
  }

  void right_multiply_stable(element_type& g, int sign) const {
    if (!g.tail.empty() && g.tail.back().sign == -sign && g.tail.back().rep == base_identity_) {
      g.tail.pop_back();
      return;
    }
    g.tail.push_back({static_cast<std::int8_t>(sign), base_identity_});
  }

  void right_multiply_generator(element_type& g, std::uint32_t generator, int sign) const {
    const auto& info = generators_[generator];
    if (!info.base_generator) {
      right_multiply_stable(g, sign);
      return;
    }
    if (g.tail.empty()) {
      base_.right_multiply_generator(g.head, *info.base_generator, sign);
      return;
    }
    base_.right_multiply_generator(g.tail.back().rep, *info.base_generator, sign);
    normalize_from(g, g.tail.size());
  }

  element_type multiply(const element_type& lhs, const element_type& rhs) const {
    element_type result = lhs;
    right_multiply_base(result, rhs.head);
    for (const auto& factor : rhs.tail) {
      right_multiply_stable(result, factor.sign);
      right_multiply_base(result, factor.rep);
    }
    return result;
  }

  element_type inverse(const element_type& g) const {
    element_type result = identity();
    for (auto it = g.tail.rbegin(); it != g.tail.rend(); ++it) {
      right_multiply_base(result, base_.inverse(it->rep));
      right_multiply_stable(result, -it->sign);
    }
    right_multiply_base(result, base_.inverse(g.head));
    return result;
  }

  element_type generator_power(std::uint32_t generator, std::int64_t exponent) const {
    const auto& info = generators_.at(generator);
    if (info.base_generator) {
      return from_base(base_.generator_power(*info.base_generator, exponent));
    }
    element_type result = identity();
    int sign = exponent < 0 ? -1 : 1;
    for (std::int64_t i = 0; i != exponent; i += sign) right_multiply_stable(result, sign);
    return result;
  }

  std::string canonical_key(const element_type& g) const {
    std::string key = base_.canonical_key(g.head);
    for (const auto& factor : g.tail) {
      key += '|';
      key += stable_name_;
      key += factor.sign > 0 ? "^1|" : "^-1|";
      key += base_.canonical_key(factor.rep);
    }
    return key;
  }

  std::size_t key_size_lower_bound(const element_type& g) const {
    std::size_t size = glab::key_size_lower_bound(base_, g.head);
    for (const auto& factor : g.tail) {
      size += 4 + stable_name_.size() + glab::key_size_lower_bound(base_, factor.rep);
    }
    return size;
  }

  std::size_t stable_letter_count(const element_type& g) const noexcept {
    return g.tail.size();
  }

  std::optional<BigInt> as_generator_power(const element_type& g) const
    requires HasPowerProbe<Base>
  {
    if (!g.tail.empty()) return std::nullopt;
    return base_.as_generator_power(g.head);
  }

  std::uint32_t probe_generator() const
    requires HasPowerProbe<Base>
  {
    for (std::uint32_t i = 0; i < generators_.size(); ++i) {
      if (generators_[i].base_generator == base_.probe_generator()) return i;
    }
    throw Error("probe generator is not a generator of the extension");
  }

  // Independent route to the normal form: collect the word into base
  // segments separated by stable letters, delete pinches t^-1 a^m t and
  // t b^m t^-1 in the given order until none remain, then push subgroup
  // parts leftward from the right end.
  element_type reduce_word(const Word& w, PinchOrder order) const {
    std::vector<base_element> segments{base_identity_};
    std::vector<std::int8_t> signs;
    for (const auto& s : w.syllables()) {
      const auto& info = generators_.at(s.generator);
      if (info.base_generator) {
        segments.back() = base_.multiply(
            segments.back(), base_.generator_power(*info.base_generator, s.exponent));
        continue;
      }
      std::int8_t sign = s.exponent < 0 ? -1 : 1;
      std::int64_t count = s.exponent < 0 ? -s.exponent : s.exponent;
      for (std::int64_t i = 0; i < count; ++i) {
        signs.push_back(sign);
        segments.push_back(base_identity_);
      }
    }

    // Segment i sits between signs[i-1] and signs[i].
    auto pinch_at = [&](std::size_t i) -> std::optional<base_element> {
      if (signs[i - 1] != -signs[i]) return std::nullopt;
      if (signs[i - 1] < 0) {
        auto m = membership(a_, base_, segments[i]);
        if (!m) return std::nullopt;
        return b_.power(base_, *m);
      }
      auto m = membership(b_, base_, segments[i]);
      if (!m) return std::nullopt;
      return a_.power(base_, *m);
    };
    auto remove_pinch = [&](std::size_t i, const base_element& image) {
      segments[i - 1] = base_.multiply(base_.multiply(segments[i - 1], image), segments[i + 1]);
      segments.erase(segments.begin() + static_cast<std::ptrdiff_t>(i),
                     segments.begin() + static_cast<std::ptrdiff_t>(i + 2));
      signs.erase(signs.begin() + static_cast<std::ptrdiff_t>(i - 1),
                  signs.begin() + static_cast<std::ptrdiff_t>(i + 1));
    };

    bool changed = true;
    while (changed) {
      changed = false;
      const std::size_t n = signs.size();
      if (n < 2) break;
      if (order == PinchOrder::innermost) {
        for (std::size_t i = 1; i < n; ++i) {
          if (auto image = pinch_at(i)) {
            remove_pinch(i, *image);
            changed = true;
            break;
          }
        }
      } else {
        for (std::size_t i = n - 1; i >= 1; --i) {
          if (auto image = pinch_at(i)) {
            remove_pinch(i, *image);
            changed = true;
            break;
          }
        }
      }
    }

    for (std::size_t i = signs.size(); i >= 1; --i) {
      BigInt m = signs[i - 1] < 0 ? a_.extract(base_, segments[i]) : b_.extract(base_, segments[i]);
      if (m != 0) {
        auto moved = signs[i - 1] < 0 ? b_.power(base_, m) : a_.power(base_, m);
        segments[i - 1] = base_.multiply(segments[i - 1], moved);
      }
    }
    element_type result{segments.front(), {}};
    for (std::size_t i = 0; i < signs.size(); ++i) {
      result.tail.push_back({signs[i], std::move(segments[i + 1])});
    }
    return result;
  }

 private:
  // Factor `position` (1-based) has been multiplied on the right; restore
  // the transversal condition from there leftward.
  void normalize_from(element_type& g, std::size_t position) const {
    while (position >= 1) {
      auto& factor = g.tail[position - 1];
      BigInt m = factor.sign < 0 ? a_.extract(base_, factor.rep) : b_.extract(base_, factor.rep);
      if (m == 0) return;
      auto moved = factor.sign < 0 ? b_.power(base_, m) : a_.power(base_, m);
      base_element& previous = position == 1 ? g.head : g.tail[position - 2].rep;
      previous = base_.multiply(previous, moved);
      --position;
    }
  }

  std::string id_;
  Base base_;
  OracleA a_;
  OracleB b_;
  std::vector<HnnGenerator> generators_;
  std::vector<Word> relators_;
  Alphabet alphabet_;
  std::string stable_name_;
  base_element base_identity_;
};

// A cyclic subgroup of the base group, viewed inside an HNN extension. Only
// the head is affected by left multiplication with base elements.
template <class BaseOracle>
struct HnnHeadOracle {
  BaseOracle base_oracle;

  template <class Hnn>
  BigInt extract(const Hnn& group, typename Hnn::element_type& g) const {
    return base_oracle.extract(group.base(), g.head);
  }

  template <class Hnn>
  typename Hnn::element_type power(const Hnn& group, const BigInt& m) const {
    return group.from_base(base_oracle.power(group.base(), m));
  }
};

}  // namespace glab
