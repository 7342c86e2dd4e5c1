#pragma once

#include <string>
#include <vector>

#include "cylbij/partition.hpp"
#include "cylbij/profile.hpp"

namespace cylbij {

/// Cylindric plane partition (μ⁰, …, μᵀ) with μ⁰ = μᵀ. For every k,
/// π_k = 1 means μᵏ/μᵏ⁻¹ is a horizontal strip and π_k = 0 means μᵏ⁻¹/μᵏ is.
class CylindricPlanePartition {
 public:
  /// Validates every step; throws ErrorKind::invalid_cpp naming the first
  /// offending position.
  CylindricPlanePartition(Profile profile, std::vector<Partition> slices);

  /// (γ, γ, …, γ).
  static CylindricPlanePartition constant(const Profile& profile,
                                          const Partition& gamma);

  const Profile& profile() const noexcept { return profile_; }
  /// All T+1 slices μ⁰ … μᵀ.
  const std::vector<Partition>& slices() const noexcept { return slices_; }
  const Partition& slice(int k) const { return slices_.at(k); }

  friend bool operator==(const CylindricPlanePartition&,
                         const CylindricPlanePartition&) = default;

 private:
  Profile profile_;
  std::vector<Partition> slices_;
};

/// Empty string when valid, otherwise a description of the first violation.
std::string check_cpp(const Profile& profile,
                      const std::vector<Partition>& slices);

/// |μ¹| + … + |μᵀ| (μ⁰ is not counted).
long cpp_weight(const CylindricPlanePartition& c);
/// (|μ¹|, …, |μᵀ|).
std::vector<long> cpp_refined_weight(const CylindricPlanePartition& c);

/// Profile σ(π), slices (μ¹, …, μᵀ, μ¹).
CylindricPlanePartition rotate_cpp(const CylindricPlanePartition& c);

/// "[[3,2,2],[5,3,2],…]".
std::string to_string(const CylindricPlanePartition& c);

}  // namespace cylbij
