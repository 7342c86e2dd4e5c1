#include "cylbij/growth_diagram.hpp"

#include <algorithm>
#include <sstream>

#include "cylbij/error.hpp"
#include "cylbij/local_rule.hpp"

namespace cylbij {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Unrolled position of the r-th one (or zero) of the periodic profile.
long nth_position(const std::vector<int>& positions, long r, long T) {
  const long count = static_cast<long>(positions.size());
  const long q = floor_div(r - 1, count);
  return positions[r - q * count - 1] + q * T;
}

}  // namespace

std::string to_string(const CylVertex& v) {
  return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

CylindricPoset::CylindricPoset(int zeros, int ones) : n_(zeros), m_(ones) {
  if (n_ < 1 || m_ < 1)
    throw Error(ErrorKind::invalid_profile,
                "the cylindric poset needs at least one zero and one one");
}

CylindricPoset::CylindricPoset(const Profile& p)
    : CylindricPoset(p.zeros(), p.ones()) {}

CylVertex CylindricPoset::canonical(long x, long y) const {
  const long q = floor_div(x, n_);
  return {x - q * n_, y + q * m_};
}

std::pair<std::vector<CylVertex>, std::vector<CylVertex>>
CylindricPoset::covers(const CylVertex& v) const {
  return {{canonical(v.x + 1, v.y), canonical(v.x, v.y + 1)},
          {canonical(v.x - 1, v.y), canonical(v.x, v.y - 1)}};
}

CylindricPoset::Face CylindricPoset::face_above(const CylVertex& u) const {
  return {canonical(u), canonical(u.x + 1, u.y), canonical(u.x, u.y + 1),
          canonical(u.x + 1, u.y + 1)};
}

CylindricPoset::Face CylindricPoset::face_below(const CylVertex& apex) const {
  return face_above({apex.x - 1, apex.y - 1});
}

CylCoord box_of_apex(const Profile& p, const CylVertex& apex) {
  require_cylindric(p);
  const long T = p.length();
  const long a = nth_position(p.one_positions(), apex.y, T);
  const long b = nth_position(p.zero_positions(), 1 - apex.x, T);
  if (a >= b)
    throw Error(ErrorKind::invalid_coordinate,
                "vertex " + to_string(apex) + " is not the apex of a face below "
                "the upper path of " + to_string(p));
  return normalize(p, {a, b});
}

CylVertex apex_of_box(const Profile& p, const CylCoord& box) {
  const auto u = lift(p, box);
  return CylindricPoset(p).canonical(1 - p.zeros_through(u.b), p.ones_through(u.a));
}

CylindricPlanePartition path_cpp(const CylPath& path) {
  return {path.profile, path.labels};
}

// Mutable state of a path being lowered or raised: the original identity of
// every current step (periodic: s_{t+T} = s_t + T), the labels on the
// vertices and the position of vertex 0.
class GrowthBuilder {
 public:
  struct Move {
    int t;
    CylVertex apex;
    CylCoord box;
  };

  explicit GrowthBuilder(CylindricGrowthDiagram& g)
      : g_(g), p_(g.profile_), T_(p_.length()), s_(T_ + 1), mu_(T_ + 1) {
    for (int t = 1; t <= T_; ++t) s_[t] = t;
  }

  void set_labels(std::vector<Partition> mu) { mu_ = std::move(mu); }
  void fill_labels(const Partition& gamma) {
    std::fill(mu_.begin(), mu_.end(), gamma);
  }

  int bit(int t) const {
    return t <= T_ ? p_.bit(s_[t]) : p_.bit(s_[t - T_] + T_);
  }
  long step(int t) const { return t <= T_ ? s_[t] : s_[t - T_] + T_; }

  CylVertex vertex(int t) const {
    long x = x0_, y = y0_;
    for (int u = 1; u <= t; ++u) {
      if (bit(u) == 1)
        ++y;
      else
        --x;
    }
    return g_.poset_.canonical(x, y);
  }

  CylPath path() const {
    std::vector<std::uint8_t> bits;
    std::vector<CylVertex> vs;
    for (int t = 1; t <= T_; ++t) bits.push_back(static_cast<std::uint8_t>(bit(t)));
    for (int t = 0; t <= T_; ++t) vs.push_back(vertex(t));
    return {Profile(std::move(bits)), std::move(vs), mu_};
  }

  bool constant() const {
    return std::all_of(mu_.begin(), mu_.end(),
                       [&](const Partition& q) { return q == mu_[0]; });
  }

  // Box removed by lowering the peak at t, if t is a peak.
  std::optional<CylCoord> peak_box(int t) const {
    if (bit(t) != 1 || bit(t + 1) != 0) return std::nullopt;
    return normalize(p_, {step(t), step(t + 1)});
  }

  // Lowers the peak at t: the vertex moves by (−1,−1) and the two steps swap.
  Move lower(int t) {
    const auto box = *peak_box(t);
    const auto apex = vertex(t);
    if (box_of_apex(p_, apex) != box)
      throw Error(ErrorKind::internal,
                  "face at " + to_string(apex) + " disagrees with box " +
                      to_string(box));
    swap(t);
    if (t == T_) {
      --x0_;
      --y0_;
    }
    return {t, apex, box};
  }

  // Inverse of lower().
  void raise(int t) {
    if (bit(t) != 0 || bit(t + 1) != 1)
      throw Error(ErrorKind::internal, "raise at a non-valley");
    swap(t);
    if (t == T_) {
      ++x0_;
      ++y0_;
    }
  }

  const Partition& alpha(int t) const { return mu_[t - 1]; }
  const Partition& beta(int t) const { return t == T_ ? mu_[1] : mu_[t + 1]; }
  const Partition& label(int t) const { return mu_[t]; }
  void set_label(int t, const Partition& q) {
    mu_[t] = q;
    if (t == T_) mu_[0] = q;
  }

 private:
  void swap(int t) {
    if (t < T_) {
      std::swap(s_[t], s_[t + 1]);
    } else {
      const long last = s_[T_];
      s_[T_] = s_[1] + T_;
      s_[1] = last - T_;
    }
  }

  CylindricGrowthDiagram& g_;
  const Profile& p_;
  int T_;
  std::vector<long> s_;
  std::vector<Partition> mu_;
  long x0_ = 0;
  long y0_ = 0;
};

CylindricGrowthDiagram::CylindricGrowthDiagram(const Profile& p)
    : profile_((require_cylindric(p), p)), poset_(p) {}

void CylindricGrowthDiagram::set_vertex_label(const CylVertex& v,
                                              Partition label) {
  vertices_[poset_.canonical(v)] = std::move(label);
}

void CylindricGrowthDiagram::set_face_label(const CylVertex& apex, long label) {
  auto it = faces_.find(poset_.canonical(apex));
  if (it == faces_.end())
    throw Error(ErrorKind::invalid_coordinate,
                "no stored face with apex " + to_string(apex));
  it->second.label = label;
}

namespace {

std::vector<int> sweep_positions(int T, SweepOrder order) {
  std::vector<int> ts(T);
  for (int t = 0; t < T; ++t) ts[t] = t + 1;
  if (order == SweepOrder::descending) std::reverse(ts.begin(), ts.end());
  return ts;
}

}  // namespace

CylindricGrowthDiagram CylindricGrowthDiagram::from_cpp(
    const CylindricPlanePartition& c, SweepOrder order) {
  CylindricGrowthDiagram g(c.profile());
  GrowthBuilder b(g);
  const int T = c.profile().length();
  b.set_labels(c.slices());
  g.upper_ = b.path();
  g.sweeps_.push_back(g.upper_);
  for (int t = 0; t < T; ++t) g.vertices_[g.upper_.vertices[t]] = c.slice(t);

  const long bound = cpp_weight(c) + 2;
  const auto ts = sweep_positions(T, order);
  for (int K = 0; !b.constant(); ++K) {
    if (K > bound)
      throw Error(ErrorKind::internal,
                  "fill-down did not stabilize within " + std::to_string(bound) +
                      " sweeps for " + to_string(c));
    for (bool progress = true; progress;) {
      progress = false;
      for (int t : ts) {
        const auto box = b.peak_box(t);
        if (!box || box->k != K) continue;
        const auto out = burge_down(b.alpha(t), b.beta(t), b.label(t));
        const auto move = b.lower(t);
        b.set_label(t, out.nu);
        const auto bottom = g.poset_.face_below(move.apex).bottom;
        if (!g.vertices_.emplace(bottom, out.nu).second)
          throw Error(ErrorKind::internal,
                      "vertex " + to_string(bottom) + " reached twice");
        g.faces_[move.apex] = {move.box, out.label};
        progress = true;
      }
    }
    g.sweeps_.push_back(b.path());
  }
  g.lower_ = g.sweeps_.back();
  g.gamma_ = g.lower_.labels[0];
  return g;
}

CylindricGrowthDiagram CylindricGrowthDiagram::from_pair(
    const Partition& gamma, const LabelledCylindricDiagram& d) {
  CylindricGrowthDiagram g(d.profile());
  GrowthBuilder b(g);
  const int T = d.profile().length();
  const int K = depth(d);
  g.gamma_ = gamma;

  // Positions only: remove every box of winding number below K.
  std::vector<GrowthBuilder::Move> moves;
  std::vector<std::size_t> boundaries;
  const auto ts = sweep_positions(T, SweepOrder::descending);
  for (int k = 0; k < K; ++k) {
    boundaries.push_back(moves.size());
    for (bool progress = true; progress;) {
      progress = false;
      for (int t : ts) {
        const auto box = b.peak_box(t);
        if (!box || box->k != k) continue;
        moves.push_back(b.lower(t));
        progress = true;
      }
    }
  }

  // Replay upwards from the constant lower path.
  b.fill_labels(gamma);
  g.lower_ = b.path();
  std::vector<CylPath> sweeps = {g.lower_};
  for (int t = 0; t < T; ++t) g.vertices_[g.lower_.vertices[t]] = gamma;
  for (std::size_t idx = moves.size(); idx-- > 0;) {
    const auto& move = moves[idx];
    const long label = d.label(move.box);
    b.raise(move.t);
    const auto lambda =
        burge_up(b.alpha(move.t), b.beta(move.t), label, b.label(move.t));
    b.set_label(move.t, lambda);
    if (!g.vertices_.emplace(move.apex, lambda).second)
      throw Error(ErrorKind::internal,
                  "vertex " + to_string(move.apex) + " reached twice");
    g.faces_[move.apex] = {move.box, label};
    for (auto n = std::count(boundaries.begin(), boundaries.end(), idx); n > 0; --n)
      sweeps.push_back(b.path());
  }
  g.upper_ = b.path();
  std::reverse(sweeps.begin(), sweeps.end());
  g.sweeps_ = std::move(sweeps);
  return g;
}

CylindricPlanePartition read_cpp(const CylindricGrowthDiagram& g) {
  return path_cpp(g.upper());
}

std::pair<Partition, LabelledCylindricDiagram> read_pair(
    const CylindricGrowthDiagram& g) {
  LabelledCylindricDiagram d(g.profile());
  for (const auto& [apex, face] : g.faces())
    if (face.label != 0) d.set_label(face.box, face.label);
  return {g.gamma(), std::move(d)};
}

std::vector<std::string> validate(const CylindricGrowthDiagram& g) {
  std::vector<std::string> out;
  const auto& poset = g.poset();
  const auto& labels = g.vertex_labels();
  auto find = [&](const CylVertex& v) -> const Partition* {
    auto it = labels.find(v);
    return it == labels.end() ? nullptr : &it->second;
  };

  for (const auto& [v, lower] : labels) {
    for (const auto& w : poset.covers(v).first) {
      const Partition* upper = find(w);
      if (upper && !is_horizontal_strip(*upper, lower))
        out.push_back("condition (1): edge " + to_string(v) + " -> " +
                      to_string(w) + " has " + to_string(*upper) + "/" +
                      to_string(lower) + ", not a horizontal strip");
    }
  }

  for (std::size_t t = 0; t < g.lower().vertices.size(); ++t) {
    const auto& v = g.lower().vertices[t];
    const Partition* q = find(v);
    if (!q || *q != g.gamma())
      out.push_back("condition (2): lower-path vertex " + to_string(v) +
                    " is not labelled " + to_string(g.gamma()));
  }

  for (const auto& [apex, face] : g.faces()) {
    const auto f = poset.face_below(apex);
    const Partition* mu = find(f.bottom);
    const Partition* alpha = find(f.right);
    const Partition* beta = find(f.top_left);
    const Partition* lambda = find(f.apex);
    const auto where = "condition (3): face with apex " + to_string(apex);
    if (!mu || !alpha || !beta || !lambda) {
      out.push_back(where + " has an unlabelled corner");
      continue;
    }
    try {
      const auto up = burge_up(*alpha, *beta, face.label, *mu);
      if (up != *lambda)
        out.push_back(where + ": burge_up gives " + to_string(up) +
                      ", apex is labelled " + to_string(*lambda));
    } catch (const Error& e) {
      out.push_back(where + ": " + e.what());
    }
  }
  return out;
}

std::string render(const CylindricGrowthDiagram& g) {
  std::ostringstream os;
  os << "profile " << to_string(g.profile()) << ", gamma "
     << to_string(g.gamma()) << ", poset G(" << g.poset().zeros() << ","
     << g.poset().ones() << ")\n";
  for (std::size_t k = 0; k < g.sweep_paths().size(); ++k) {
    const auto& path = g.sweep_paths()[k];
    os << (k == 0 ? "upper " : k + 1 == g.sweep_paths().size() ? "lower "
                                                                 : "sweep ")
       << to_string(path.profile) << ":";
    for (std::size_t t = 0; t < path.labels.size(); ++t)
      os << ' ' << to_string(path.vertices[t]) << to_string(path.labels[t]);
    os << '\n';
  }
  // Grid of vertex labels: rows by y (top first), columns by x.
  long ymin = 0, ymax = 0;
  bool first = true;
  std::size_t width = 2;
  for (const auto& [v, lab] : g.vertex_labels()) {
    ymin = first ? v.y : std::min(ymin, v.y);
    ymax = first ? v.y : std::max(ymax, v.y);
    first = false;
    width = std::max(width, to_string(lab).size());
  }
  os << "vertices (row y, columns x = 0.." << g.poset().zeros() - 1 << "):\n";
  for (long y = ymax; y >= ymin && !first; --y) {
    std::string row = "  y=" + std::to_string(y);
    row.resize(8, ' ');
    for (long x = 0; x < g.poset().zeros(); ++x) {
      auto it = g.vertex_labels().find({x, y});
      std::string cell = it == g.vertex_labels().end() ? "." : to_string(it->second);
      cell.resize(width + 1, ' ');
      row += cell;
    }
    os << row << '\n';
  }
  os << "faces (apex, box, label):\n";
  for (const auto& [apex, face] : g.faces())
    if (face.label != 0)
      os << "  " << to_string(apex) << ' ' << to_string(face.box) << ' '
         << face.label << '\n';
  return os.str();
}

}  // namespace cylbij
