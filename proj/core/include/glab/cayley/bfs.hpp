#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "glab/cayley/ball.hpp"
#include "glab/error.hpp"
#include "glab/groups/model.hpp"

namespace glab {

struct BallOptions {
  std::uint32_t radius = 0;
  std::uint64_t memory_cap = kDefaultMemoryCap;  // max entries
  unsigned threads = 0;                          // 0: hardware, capped by GLAB_THREADS
  std::size_t block_size = 1U << 14U;
};

// Worker count after applying the GLAB_THREADS cap.
unsigned resolve_threads(unsigned requested);

// Generators in alphabet order, then their inverses in the same order.
std::vector<Letter> generator_letters(std::size_t alphabet_size);

namespace detail {

template <class E>
struct Candidate {
  std::string key;
  std::uint32_t parent;
  Letter letter;
  E element;
};

}  // namespace detail

// Breadth-first ball around the identity. Layers are expanded in blocks:
// workers compute neighbours of disjoint slices of a block against the
// read-only visited set, and the results are merged sequentially in
// frontier order, so the ball (including witnesses) does not depend on
// the thread count. Stops with complete() == false at the memory cap.
template <GroupModel G>
Ball build_ball(const G& group, const BallOptions& options) {
  using E = typename G::element_type;
  Ball ball(group.id(), options.radius);
  const auto letters = generator_letters(group.alphabet().size());
  const unsigned workers = resolve_threads(options.threads);
  const std::size_t block = std::max<std::size_t>(options.block_size, 1);

  if (options.memory_cap == 0) return ball;
  std::vector<E> frontier{group.identity()};
  std::vector<std::uint32_t> frontier_index{ball.insert(group.canonical_key(frontier[0]), 0)};

  auto expand = [&](std::size_t begin, std::size_t end, std::vector<detail::Candidate<E>>& out) {
    for (std::size_t i = begin; i < end; ++i) {
      const std::uint32_t parent = frontier_index[i];
      const bool root = ball.parent(parent) == kNoParent;
      const Letter back = ball.last_letter(parent);
      for (const Letter& letter : letters) {
        // The neighbour through the inverse of the incoming letter is the parent.
        if (!root && letter.generator == back.generator && letter.sign == -back.sign) continue;
        E next = frontier[i];
        group.right_multiply_generator(next, letter.generator, letter.sign);
        std::string key = group.canonical_key(next);
        if (ball.contains(key)) continue;
        out.push_back({std::move(key), parent, letter, std::move(next)});
      }
    }
  };

  for (std::uint32_t layer = 0; layer < options.radius; ++layer) {
    const bool keep = layer + 1 < options.radius;
    std::vector<E> next_frontier;
    std::vector<std::uint32_t> next_index;
    for (std::size_t start = 0; start < frontier.size(); start += block) {
      const std::size_t stop = std::min(frontier.size(), start + block);
      const std::size_t span = stop - start;
      const unsigned used = static_cast<unsigned>(std::min<std::size_t>(workers, (span + 63) / 64));
      std::vector<std::vector<detail::Candidate<E>>> results(std::max(used, 1U));
      if (used <= 1) {
        expand(start, stop, results[0]);
      } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(used);
        for (unsigned w = 0; w < used; ++w) {
          std::size_t b = start + span * w / used;
          std::size_t e = start + span * (w + 1) / used;
          pool.emplace_back([&, w, b, e] {
            try {
              expand(b, e, results[w]);
            } catch (...) {
              errors[w] = std::current_exception();
            }
          });
        }
        for (auto& t : pool) t.join();
        for (auto& err : errors) {
          if (err) std::rethrow_exception(err);
        }
      }
      for (auto& part : results) {
        for (auto& c : part) {
          if (ball.contains(c.key)) continue;
          if (ball.size() >= options.memory_cap) {
            ball.set_complete(false);
            return ball;
          }
          auto index = ball.insert(c.key, layer + 1, c.parent, c.letter);
          if (keep) {
            next_frontier.push_back(std::move(c.element));
            next_index.push_back(index);
          }
        }
      }
    }
    frontier = std::move(next_frontier);
    frontier_index = std::move(next_index);
    if (frontier.empty() && keep) break;
  }
  ball.set_complete(true);
  return ball;
}

template <GroupModel G>
Ball build_ball(const G& group, std::uint32_t radius) {
  BallOptions options;
  options.radius = radius;
  return build_ball(group, options);
}

// Ball lookups that skip formatting keys too long to be stored.
template <GroupModel G>
std::optional<std::uint32_t> find_element(const Ball& ball, const G& group,
                                          const typename G::element_type& g) {
  if (key_size_lower_bound(group, g) > ball.max_key_size()) return std::nullopt;
  return ball.find(group.canonical_key(g));
}

template <GroupModel G>
DistanceQuery query_element(const Ball& ball, const G& group, const typename G::element_type& g) {
  if (ball.complete() && key_size_lower_bound(group, g) > ball.max_key_size()) {
    return DistanceQuery::beyond(ball.radius());
  }
  return ball.query(group.canonical_key(g));
}

template <GroupModel G>
DistanceQuery distance(const Ball& ball, const G& group, const typename G::element_type& g) {
  if (ball.group_id() != group.id()) {
    throw BallError("ball was built for '" + ball.group_id() + "', not '" + group.id() + "'");
  }
  return query_element(ball, group, g);
}

// d(g, h) = |g^-1 h|, by left invariance.
template <GroupModel G>
DistanceQuery pair_distance(const Ball& ball, const G& group, const typename G::element_type& g,
                            const typename G::element_type& h) {
  return distance(ball, group, group.multiply(group.inverse(g), h));
}

// A word is geodesic iff its value is not reached by a strictly shorter
// path; needs a ball of radius at least length - 1.
template <GroupModel G>
bool is_geodesic(const Ball& ball, const G& group, const Word& w) {
  const auto length = word_length(w);
  if (length == 0) return true;
  if (ball.radius() + 1 < length) {
    throw BallError("geodesic check needs a ball of radius >= " + std::to_string(length - 1));
  }
  auto q = distance(ball, group, evaluate(group, w));
  return !(q.within_radius && q.distance < length);
}

}  // namespace glab
