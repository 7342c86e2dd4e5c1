#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cylbij/partition.hpp"

namespace cylbij {

/// Binary string π_1 … π_T, 1-indexed. A one is a horizontal boundary step,
/// a zero a vertical one. Cylindric constructions additionally require at
/// least one zero and one one (see `is_cylindric`).
class Profile {
 public:
  Profile() = default;
  explicit Profile(std::vector<std::uint8_t> bits);

  /// Any 0/1 string, including the empty one.
  static Profile parse(std::string_view text);
  /// Like parse(), but rejects strings without both a 0 and a 1.
  static Profile parse_cylindric(std::string_view text);
  /// 0^zeros 1^ones and 1^ones 0^zeros.
  static Profile min_for(int zeros, int ones);
  static Profile max_for(int zeros, int ones);

  int length() const noexcept { return static_cast<int>(bits_.size()); }
  int zeros() const noexcept { return zeros_; }
  int ones() const noexcept { return length() - zeros_; }
  bool is_cylindric() const noexcept { return zeros() > 0 && ones() > 0; }

  /// π_i for 1 ≤ i ≤ T.
  int at(int i) const;
  /// Periodic extension: π_{t+T} = π_t for every integer t.
  int bit(long t) const noexcept;

  /// Number of zeros / ones among positions 1..t of the periodic extension;
  /// negative for t < 0, so differences count any window.
  long zeros_through(long t) const noexcept;
  long ones_through(long t) const noexcept { return t - zeros_through(t); }

  /// Positions (1..T) holding a one / a zero, increasing.
  std::vector<int> one_positions() const;
  std::vector<int> zero_positions() const;

  /// Copy with positions i and i+1 (cyclic) exchanged.
  Profile swapped(int i) const;

  friend bool operator==(const Profile&, const Profile&) = default;
  friend auto operator<=>(const Profile& a, const Profile& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::vector<std::uint8_t> bits_;
  int zeros_ = 0;
};

std::string to_string(const Profile& p);

/// Throws ErrorKind::invalid_profile unless p has a zero and a one.
void require_cylindric(const Profile& p);

/// Pairs (i, j), i < j, π_i = 1, π_j = 0, in lexicographic order.
std::vector<std::pair<int, int>> inversions(const Profile& p);

/// π ≺ π′: π′ is π with one adjacent "01" turned into "10". Throws
/// ErrorKind::incomparable_profiles when lengths or contents differ.
bool profile_covers(const Profile& lower, const Profile& upper);

/// σ(π)_i = π_{(i mod T)+1}: every bit moves one place earlier, cyclically.
Profile rotate_profile(const Profile& p);

/// Minimal profile of λ, read along the boundary from the top-right corner
/// to the bottom-left corner. (5,3,3,2) ↦ 110100110; ∅ ↦ empty string.
Profile partition_to_profile(const Partition& lambda);
/// Inverse reading: the partition whose boxes are the inversions of π.
Partition profile_to_partition(const Profile& p);

}  // namespace cylbij
