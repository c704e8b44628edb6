#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "glab/words/word.hpp"

namespace glab {

inline constexpr std::uint32_t kNoParent = 0xFFFFFFFFU;
inline constexpr std::uint64_t kDefaultMemoryCap = 20'000'000;

// Append-only storage for key bytes; string_views into it stay valid.
class KeyArena {
 public:
  std::string_view store(std::string_view key);
  std::size_t bytes() const noexcept { return used_total_; }

 private:
  static constexpr std::size_t kBlockSize = 1U << 20U;
  std::vector<std::unique_ptr<char[]>> blocks_;
  std::size_t used_in_block_ = kBlockSize;
  std::size_t used_total_ = 0;
};

// Result of a distance query against a finite ball.
struct DistanceQuery {
  bool within_radius = false;
  std::uint32_t distance = 0;  // exact when within_radius, else the radius

  static DistanceQuery exact(std::uint32_t d) { return {true, d}; }
  static DistanceQuery beyond(std::uint32_t radius) { return {false, radius}; }
  friend bool operator==(const DistanceQuery&, const DistanceQuery&) = default;
};

// The ball B(r) around the identity: canonical key -> BFS distance, with a
// parent pointer and last letter per entry so witness words can be
// rebuilt. Entries are stored in BFS order, so each layer is contiguous.
class Ball {
 public:
  Ball(std::string group_id, std::uint32_t radius);
  Ball(Ball&&) noexcept = default;
  Ball& operator=(Ball&&) noexcept = default;

  const std::string& group_id() const noexcept { return group_id_; }
  std::uint32_t radius() const noexcept { return radius_; }
  bool complete() const noexcept { return complete_; }
  std::size_t size() const noexcept { return keys_.size(); }
  bool has_witnesses() const noexcept { return has_witnesses_; }

  std::optional<std::uint32_t> index_of(std::string_view key) const;
  std::optional<std::uint32_t> find(std::string_view key) const;
  bool contains(std::string_view key) const { return index_.count(key) != 0; }

  std::string_view key(std::uint32_t index) const { return keys_[index]; }
  std::uint32_t distance(std::uint32_t index) const { return distances_[index]; }
  std::uint32_t parent(std::uint32_t index) const { return parents_[index]; }
  Letter last_letter(std::uint32_t index) const;

  // Word read along parent pointers; nullopt for balls loaded from disk.
  std::optional<Word> witness(std::uint32_t index) const;
  std::optional<Word> witness(std::string_view key) const;

  // Number of entries at each distance 0..radius.
  std::vector<std::uint64_t> sphere_sizes() const;
  // Number of entries at distance <= n.
  std::uint64_t ball_size(std::uint32_t n) const;

  // The sub-ball of radius r <= radius(); entries are a prefix in BFS order.
  Ball truncated(std::uint32_t r) const;

  // Entries ordered bytewise by key.
  std::vector<std::pair<std::string_view, std::uint32_t>> sorted_entries() const;

  // Builder interface.
  std::uint32_t insert(std::string_view key, std::uint32_t distance,
                       std::uint32_t parent = kNoParent, Letter letter = {});
  void set_complete(bool complete) noexcept { complete_ = complete; }
  void set_has_witnesses(bool value) noexcept { has_witnesses_ = value; }
  void reserve(std::size_t entries);

  // Distance of a key, or an error on truncated balls when the key is
  // missing (absence proves nothing there).
  DistanceQuery query(std::string_view key) const;

  // Length of the longest stored key.
  std::size_t max_key_size() const noexcept { return max_key_size_; }

 private:
  std::string group_id_;
  std::uint32_t radius_;
  bool complete_ = false;
  bool has_witnesses_ = true;
  std::unique_ptr<KeyArena> arena_ = std::make_unique<KeyArena>();
  std::vector<std::string_view> keys_;
  std::vector<std::uint8_t> distances_;
  std::vector<std::uint32_t> parents_;
  std::vector<std::uint32_t> letters_;
  std::unordered_map<std::string_view, std::uint32_t> index_;
  std::size_t max_key_size_ = 0;
};

void save_ball(const Ball& ball, const std::string& path);
Ball load_ball(const std::string& path);

// FNV-1a over the serialized entry lines.
std::uint64_t ball_checksum(const Ball& ball);

// |sphere(1)| (|sphere(1)| - 1)^(n-1) for each n >= 1, saturating.
std::uint64_t sphere_growth_cap(std::uint64_t first_sphere, std::uint32_t n);

}  // namespace glab
