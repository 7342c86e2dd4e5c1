#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cylbij/cpp.hpp"
#include "cylbij/cylindric_diagram.hpp"

namespace cylbij {

/// Vertex of the cylindric poset 𝔊(n,m) = ℤ² / ⟨(n,−m)⟩, stored by its
/// representative with 0 ≤ x < n.
struct CylVertex {
  long x = 0;
  long y = 0;
  friend bool operator==(const CylVertex&, const CylVertex&) = default;
  friend auto operator<=>(const CylVertex&, const CylVertex&) = default;
};

std::string to_string(const CylVertex& v);

/// The poset 𝔊(n,m) with covers (x,y) ⋖ (x+1,y) and (x,y) ⋖ (x,y+1).
class CylindricPoset {
 public:
  CylindricPoset(int zeros, int ones);
  explicit CylindricPoset(const Profile& p);

  int zeros() const noexcept { return n_; }
  int ones() const noexcept { return m_; }

  CylVertex canonical(long x, long y) const;
  CylVertex canonical(const CylVertex& v) const { return canonical(v.x, v.y); }

  /// {vertices covering v, vertices covered by v}; two each, possibly equal.
  std::pair<std::vector<CylVertex>, std::vector<CylVertex>> covers(
      const CylVertex& v) const;

  /// The unit square with bottom u: (u; (x+1,y), (x,y+1); (x+1,y+1)).
  struct Face {
    CylVertex bottom, right, top_left, apex;
  };
  Face face_above(const CylVertex& u) const;
  Face face_below(const CylVertex& apex) const;

 private:
  int n_;
  int m_;
};

/// A closed path of T steps in 𝔊(n,m). A one-step goes (x,y) → (x,y+1), a
/// zero-step (x,y) → (x−1,y); labels[k] sits on vertices[k], k = 0..T.
struct CylPath {
  Profile profile;
  std::vector<CylVertex> vertices;
  std::vector<Partition> labels;
  friend bool operator==(const CylPath&, const CylPath&) = default;
};

/// Order in which peaks are visited inside one sweep. Both produce the same
/// diagram; the choice exists to test that.
enum class SweepOrder { ascending, descending };

/// Cylindric growth diagram between an upper path labelled by a cylindric
/// plane partition and a lower path labelled by a constant partition γ.
class CylindricGrowthDiagram {
 public:
  struct FaceRecord {
    CylCoord box;
    long label = 0;
    friend bool operator==(const FaceRecord&, const FaceRecord&) = default;
  };

  /// Fill down from the upper boundary with burge_down.
  static CylindricGrowthDiagram from_cpp(
      const CylindricPlanePartition& c,
      SweepOrder order = SweepOrder::descending);

  /// Fill up from (γ, 𝔡) with burge_up.
  static CylindricGrowthDiagram from_pair(const Partition& gamma,
                                          const LabelledCylindricDiagram& d);

  const Profile& profile() const noexcept { return profile_; }
  const CylindricPoset& poset() const noexcept { return poset_; }
  const Partition& gamma() const noexcept { return gamma_; }
  const CylPath& upper() const noexcept { return upper_; }
  const CylPath& lower() const noexcept { return lower_; }
  /// Paths at every sweep boundary, upper first, lower last.
  const std::vector<CylPath>& sweep_paths() const noexcept { return sweeps_; }
  const std::map<CylVertex, Partition>& vertex_labels() const noexcept {
    return vertices_;
  }
  /// Faces keyed by apex, including zero-labelled ones.
  const std::map<CylVertex, FaceRecord>& faces() const noexcept {
    return faces_;
  }

  /// Overwrite a stored label; used to build deliberately broken diagrams.
  void set_vertex_label(const CylVertex& v, Partition label);
  void set_face_label(const CylVertex& apex, long label);

  friend bool operator==(const CylindricGrowthDiagram& a,
                         const CylindricGrowthDiagram& b) {
    return a.profile_ == b.profile_ && a.gamma_ == b.gamma_ &&
           a.upper_ == b.upper_ && a.lower_ == b.lower_ &&
           a.vertices_ == b.vertices_ && a.faces_ == b.faces_;
  }

 private:
  explicit CylindricGrowthDiagram(const Profile& p);

  Profile profile_;
  CylindricPoset poset_;
  Partition gamma_;
  CylPath upper_;
  CylPath lower_;
  std::vector<CylPath> sweeps_;
  std::map<CylVertex, Partition> vertices_;
  std::map<CylVertex, FaceRecord> faces_;

  friend class GrowthBuilder;
};

/// Labels along the upper path.
CylindricPlanePartition read_cpp(const CylindricGrowthDiagram& g);
/// (γ, nonzero face labels addressed by their boxes).
std::pair<Partition, LabelledCylindricDiagram> read_pair(
    const CylindricGrowthDiagram& g);

/// The CPP read along a path.
CylindricPlanePartition path_cpp(const CylPath& path);

/// Empty iff every stored edge is a horizontal strip, the lower path is
/// constant γ and every stored face satisfies burge_up. Each entry names the
/// edge or face and the failed condition.
std::vector<std::string> validate(const CylindricGrowthDiagram& g);

/// Box of the universal cover under the face with this apex, read against
/// the upper path of profile p (apex of box (a,b) is (x_{b−1}, y_a)).
CylCoord box_of_apex(const Profile& p, const CylVertex& apex);
/// Apex of the face of a box, as a canonical vertex.
CylVertex apex_of_box(const Profile& p, const CylCoord& box);

/// Text view: one line per sweep path, then the nonzero faces.
std::string render(const CylindricGrowthDiagram& g);

}  // namespace cylbij
