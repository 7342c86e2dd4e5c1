#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cylbij/profile.hpp"

namespace cylbij {

/// Cylindric inversion coordinates of a box: π_i = 1, π_j = 0, and k is the
/// winding number (k ≥ 1 when j < i). Ordered by (k, i, j).
struct CylCoord {
  int i = 0;
  int j = 0;
  int k = 0;

  friend bool operator==(const CylCoord&, const CylCoord&) = default;
  friend std::strong_ordering operator<=>(const CylCoord& a,
                                          const CylCoord& b) {
    if (auto c = a.k <=> b.k; c != 0) return c;
    if (auto c = a.i <=> b.i; c != 0) return c;
    return a.j <=> b.j;
  }
};

std::string to_string(const CylCoord& c);

/// A box of the universal cover: unrolled profile positions a < b with
/// π_a = 1 and π_b = 0. Translating both by T gives the same cylinder box.
struct UnrolledBox {
  long a = 0;
  long b = 0;
  friend bool operator==(const UnrolledBox&, const UnrolledBox&) = default;
};

/// Throws ErrorKind::invalid_coordinate naming the violated constraint.
void validate_coord(const Profile& p, const CylCoord& c);
/// The representative with 1 ≤ a ≤ T.
UnrolledBox lift(const Profile& p, const CylCoord& c);
/// Inverse of lift(), accepting any translate.
CylCoord normalize(const Profile& p, const UnrolledBox& box);

/// j − i + kT.
long hook(const Profile& p, const CylCoord& c);

/// Every box with hook ≤ max_hook, sorted by (k, i, j).
std::vector<CylCoord> boxes_up_to_hook(const Profile& p, long max_hook);

/// Index d ∈ 1..T of the diagonal containing the box. Diagonal d passes
/// through the boundary vertex between steps d and d+1, which is where the
/// slice μᵈ of a cylindric plane partition is read.
int diagonal_of(const Profile& p, const CylCoord& c);

/// Number of lifts of `box` lying in the hook of `owner` (arm, leg and the
/// box itself). Long hooks wrap around the cylinder, so this can exceed 1.
int hook_multiplicity(const Profile& p, const CylCoord& box,
                      const CylCoord& owner);

/// Arbitrarily labelled cylindric diagram: finitely many boxes carrying a
/// positive label; every other box is labelled 0.
class LabelledCylindricDiagram {
 public:
  using Labels = std::map<CylCoord, long>;

  explicit LabelledCylindricDiagram(Profile profile);
  /// Zero labels are dropped; negative labels and invalid coordinates throw
  /// ErrorKind::invalid_alcd.
  LabelledCylindricDiagram(Profile profile, Labels labels);

  const Profile& profile() const noexcept { return profile_; }
  const Labels& labels() const noexcept { return labels_; }
  bool empty() const noexcept { return labels_.empty(); }
  long label(const CylCoord& c) const;
  /// Overwrites a label; 0 erases the entry.
  void set_label(const CylCoord& c, long value);

  friend bool operator==(const LabelledCylindricDiagram&,
                         const LabelledCylindricDiagram&) = default;

 private:
  Profile profile_;
  Labels labels_;
};

/// Σ lab(b)·hook(b).
long alcd_weight(const LabelledCylindricDiagram& d);
/// Σ over boxes b′ of lab(b′) times the multiplicity of b in hook(b′).
long cohook_weight(const LabelledCylindricDiagram& d, const CylCoord& b);
/// Σ over the boxes b of diagonal k of cohook_weight(d, b).
long diag_weight(const LabelledCylindricDiagram& d, int k);
/// diag_weight for k = 1..T, stored at index k-1.
std::vector<long> diag_weights(const LabelledCylindricDiagram& d);
/// Smallest k such that every box with winding number ≥ k is unlabelled.
int depth(const LabelledCylindricDiagram& d);

/// The box with hook 1 at positions (i, i+1), cyclically; (T,1,1) for i = T.
CylCoord inside_corner(const Profile& p, int i);

/// Removes the inside corner at positions (i, i+1) of a diagram whose profile
/// has bits (1, 0) there. Returns the removed label and the diagram over the
/// profile with those two bits exchanged; every other box keeps its place in
/// the plane, so boxes in the corner's row or column get a shorter hook.
std::pair<long, LabelledCylindricDiagram> remove_inside_corner(
    const LabelledCylindricDiagram& d, int i);

/// Inverse of remove_inside_corner: the profile must have bits (0, 1) at
/// (i, i+1); the new corner box receives label m.
LabelledCylindricDiagram add_inside_corner(long m,
                                           const LabelledCylindricDiagram& d,
                                           int i);

/// Same boxes over σ(π); hook lengths are unchanged.
LabelledCylindricDiagram rotate_alcd(const LabelledCylindricDiagram& d);

}  // namespace cylbij
