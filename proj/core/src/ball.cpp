#include "glab/cayley/ball.hpp"

#include <algorithm>
#include <charconv>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>

#include "glab/error.hpp"

namespace glab {

std::string_view KeyArena::store(std::string_view key) {
  if (key.size() > kBlockSize) {
    // Oversized keys get a private block placed behind the current one.
    auto block = std::make_unique<char[]>(key.size());
    std::memcpy(block.get(), key.data(), key.size());
    std::string_view view(block.get(), key.size());
    blocks_.insert(blocks_.empty() ? blocks_.end() : blocks_.end() - 1, std::move(block));
    used_total_ += key.size();
    return view;
  }
  if (used_in_block_ + key.size() > kBlockSize) {
    blocks_.push_back(std::make_unique<char[]>(kBlockSize));
    used_in_block_ = 0;
  }
  char* target = blocks_.back().get() + used_in_block_;
  std::memcpy(target, key.data(), key.size());
  used_in_block_ += key.size();
  used_total_ += key.size();
  return {target, key.size()};
}

Ball::Ball(std::string group_id, std::uint32_t radius)
    : group_id_(std::move(group_id)), radius_(radius) {
  if (radius > 255) throw BallError("ball radius above 255 is not supported");
}

void Ball::reserve(std::size_t entries) {
  keys_.reserve(entries);
  distances_.reserve(entries);
  parents_.reserve(entries);
  letters_.reserve(entries);
  index_.reserve(entries);
}

std::optional<std::uint32_t> Ball::index_of(std::string_view key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::uint32_t> Ball::find(std::string_view key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return distances_[it->second];
}

Letter Ball::last_letter(std::uint32_t index) const {
  std::uint32_t code = letters_[index];
  return {code >> 1U, static_cast<std::int8_t>((code & 1U) != 0 ? -1 : 1)};
}

std::optional<Word> Ball::witness(std::uint32_t index) const {
  if (!has_witnesses_) return std::nullopt;
  std::vector<Letter> reversed;
  while (parents_[index] != kNoParent) {
    reversed.push_back(last_letter(index));
    index = parents_[index];
  }
  std::reverse(reversed.begin(), reversed.end());
  return from_letters(reversed);
}

std::optional<Word> Ball::witness(std::string_view key) const {
  auto index = index_of(key);
  if (!index) return std::nullopt;
  return witness(*index);
}

std::vector<std::uint64_t> Ball::sphere_sizes() const {
  std::vector<std::uint64_t> sizes(radius_ + 1, 0);
  for (auto d : distances_) ++sizes[d];
  return sizes;
}

std::uint64_t Ball::ball_size(std::uint32_t n) const {
  std::uint64_t count = 0;
  for (auto d : distances_) count += d <= n ? 1 : 0;
  return count;
}

Ball Ball::truncated(std::uint32_t r) const {
  if (r > radius_) throw BallError("cannot enlarge a ball by truncation");
  Ball result(group_id_, r);
  std::size_t count = 0;
  while (count < keys_.size() && distances_[count] <= r) ++count;
  result.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    result.insert(keys_[i], distances_[i], parents_[i], last_letter(static_cast<std::uint32_t>(i)));
  }
  result.complete_ = complete_;
  result.has_witnesses_ = has_witnesses_;
  return result;
}

std::vector<std::pair<std::string_view, std::uint32_t>> Ball::sorted_entries() const {
  std::vector<std::pair<std::string_view, std::uint32_t>> entries;
  entries.reserve(keys_.size());
  for (std::size_t i = 0; i < keys_.size(); ++i) entries.emplace_back(keys_[i], distances_[i]);
  std::sort(entries.begin(), entries.end());
  return entries;
}

std::uint32_t Ball::insert(std::string_view key, std::uint32_t distance, std::uint32_t parent,
                           Letter letter) {
  if (distance > radius_) throw BallError("entry distance exceeds ball radius");
  if (keys_.size() >= std::numeric_limits<std::uint32_t>::max() - 1) {
    throw BallError("ball exceeds 2^32 entries");
  }
  auto stored = arena_->store(key);
  auto index = static_cast<std::uint32_t>(keys_.size());
  auto [it, inserted] = index_.emplace(stored, index);
  if (!inserted) throw BallError("duplicate key in ball: " + std::string(key));
  keys_.push_back(stored);
  max_key_size_ = std::max(max_key_size_, key.size());
  distances_.push_back(static_cast<std::uint8_t>(distance));
  parents_.push_back(parent);
  letters_.push_back((letter.generator << 1U) | (letter.sign < 0 ? 1U : 0U));
  return index;
}

DistanceQuery Ball::query(std::string_view key) const {
  if (auto d = find(key)) return DistanceQuery::exact(*d);
  if (!complete_) {
    throw BallError("element not found in truncated ball; rebuild with a larger memory cap");
  }
  return DistanceQuery::beyond(radius_);
}

namespace {

constexpr std::string_view kMagic = "#cayley-ball";
constexpr std::string_view kVersion = "v1";

struct Fnv1a {
  std::uint64_t state = 0xcbf29ce484222325ULL;
  void update(std::string_view bytes) {
    for (unsigned char c : bytes) {
      state ^= c;
      state *= 0x100000001b3ULL;
    }
  }
};

std::string entry_line(std::string_view key, std::uint32_t distance) {
  std::string line(key);
  line += '\t';
  line += std::to_string(distance);
  line += '\n';
  return line;
}

std::string hex64(std::uint64_t value) {
  char buffer[17];
  auto [end, ec] = std::to_chars(buffer, buffer + 16, value, 16);
  std::string digits(buffer, end);
  return std::string(16 - digits.size(), '0') + digits;
}

std::string header_field(const std::string& header, std::string_view name) {
  std::string needle = " " + std::string(name) + "=";
  auto pos = header.find(needle);
  if (pos == std::string::npos) throw BallError("ball header lacks field '" + std::string(name) + "'");
  pos += needle.size();
  auto end = header.find(' ', pos);
  return header.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
}

std::uint64_t parse_unsigned(const std::string& text, std::string_view what, int base = 10) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, base);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw BallError("malformed " + std::string(what) + " in ball file: '" + text + "'");
  }
  return value;
}

}  // namespace

std::uint64_t ball_checksum(const Ball& ball) {
  Fnv1a hash;
  for (const auto& [key, distance] : ball.sorted_entries()) hash.update(entry_line(key, distance));
  return hash.state;
}

void save_ball(const Ball& ball, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw BallError("cannot open '" + path + "' for writing");
  auto entries = ball.sorted_entries();
  Fnv1a hash;
  std::string body;
  body.reserve(entries.size() * 32);
  for (const auto& [key, distance] : entries) {
    auto line = entry_line(key, distance);
    hash.update(line);
    body += line;
  }
  out << kMagic << ' ' << kVersion << " group=" << ball.group_id() << " radius=" << ball.radius()
      << " entries=" << entries.size() << " complete=" << (ball.complete() ? 1 : 0)
      << " checksum=" << hex64(hash.state) << '\n';
  out << body;
  if (!out) throw BallError("write to '" + path + "' failed");
}

Ball load_ball(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw BallError("cannot open '" + path + "'");
  std::string header;
  if (!std::getline(in, header)) throw BallError("empty ball file '" + path + "'");
  if (header.rfind(std::string(kMagic) + " ", 0) != 0) {
    throw BallError("'" + path + "' is not a cayley ball file (bad magic header)");
  }
  std::string version = header.substr(kMagic.size() + 1, header.find(' ', kMagic.size() + 1) -
                                                             (kMagic.size() + 1));
  if (version != kVersion) {
    throw BallError("unsupported ball format version '" + version + "' (this reader handles " +
                    std::string(kVersion) + ")");
  }
  std::string group = header_field(header, "group");
  auto radius = parse_unsigned(header_field(header, "radius"), "radius");
  auto count = parse_unsigned(header_field(header, "entries"), "entries");
  auto complete_text = header_field(header, "complete");
  if (complete_text != "0" && complete_text != "1") throw BallError("malformed complete flag");
  auto checksum = parse_unsigned(header_field(header, "checksum"), "checksum", 16);
  if (radius > 255) throw BallError("ball radius above 255 is not supported");

  Ball ball(group, static_cast<std::uint32_t>(radius));
  ball.reserve(count);
  ball.set_has_witnesses(false);
  Fnv1a hash;
  std::string line;
  std::string previous;
  std::uint64_t read = 0;
  while (std::getline(in, line)) {
    auto tab = line.rfind('\t');
    if (tab == std::string::npos) throw BallError("malformed ball entry line " + std::to_string(read + 2));
    std::string key = line.substr(0, tab);
    auto distance = parse_unsigned(line.substr(tab + 1), "distance");
    if (read > 0 && !(previous < key)) throw BallError("ball entries are not strictly sorted by key");
    hash.update(line);
    hash.update("\n");
    ball.insert(key, static_cast<std::uint32_t>(distance));
    previous = std::move(key);
    ++read;
  }
  if (read != count) {
    throw BallError("ball file declares " + std::to_string(count) + " entries but holds " +
                    std::to_string(read));
  }
  if (hash.state != checksum) throw BallError("ball file checksum mismatch");
  ball.set_complete(complete_text == "1");
  return ball;
}

std::uint64_t sphere_growth_cap(std::uint64_t first_sphere, std::uint32_t n) {
  if (n == 0) return 1;
  std::uint64_t cap = first_sphere;
  for (std::uint32_t i = 1; i < n; ++i) {
    if (first_sphere <= 1) break;
    if (cap > std::numeric_limits<std::uint64_t>::max() / (first_sphere - 1)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    cap *= first_sphere - 1;
  }
  return cap;
}

}  // namespace glab
