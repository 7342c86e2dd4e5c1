#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cylbij {

/// Integer partition, stored as its positive parts in weakly decreasing
/// order. Trailing zeros are stripped on construction, so (3,1,0) == (3,1).
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// Builds the partition whose conjugate is `columns` (column heights).
  static Partition from_columns(std::span<const int> columns);

  std::span<const int> parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  long weight() const noexcept { return weight_; }

  /// Part i (0-based); 0 past the end.
  int part(std::size_t i) const noexcept {
    return i < parts_.size() ? parts_[i] : 0;
  }

  Partition conjugate() const;
  /// Column heights, i.e. the parts of the conjugate.
  std::vector<int> columns() const;

  /// Young-diagram containment: other ⊆ *this.
  bool contains(const Partition& other) const noexcept;

  friend bool operator==(const Partition& a, const Partition& b) noexcept {
    return a.parts_ == b.parts_;
  }
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) noexcept {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  long weight_ = 0;
};

/// "[5,3,3,2]"; the empty partition is "[]".
std::string to_string(const Partition& p);
/// Accepts "[5,3,3,2]", "5,3,3,2", "[]" and "" (whitespace ignored).
Partition parse_partition(std::string_view text);

/// outer/inner is a horizontal strip: inner ⊆ outer and no column of outer
/// is more than one box longer than the same column of inner.
bool is_horizontal_strip(const Partition& outer, const Partition& inner);

/// All λ ⊇ μ with λ/μ a horizontal strip and |λ| − |μ| ≤ max_size.
/// Includes μ itself. Sorted by (weight, parts).
std::vector<Partition> add_horizontal_strips(const Partition& mu,
                                             long max_size);

/// All μ ⊆ λ with λ/μ a horizontal strip. Includes λ itself.
/// Sorted by (weight, parts).
std::vector<Partition> remove_horizontal_strips(const Partition& lambda);

/// Every partition of n, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);
/// Every partition of size ≤ max_weight, ordered by weight first.
std::vector<Partition> partitions_up_to(int max_weight);

}  // namespace cylbij
