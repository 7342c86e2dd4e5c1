#include "cylbij/cylindric_diagram.hpp"

#include <algorithm>
#include <set>

#include "cylbij/error.hpp"

namespace cylbij {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Exchanges every lift of position i with the following position.
long swap_position(long t, int i, long T) {
  long r = t % T;
  if (r <= 0) r += T;
  if (r == i) return t + 1;
  if (r == i % T + 1) return t - 1;
  return t;
}

}  // namespace

std::string to_string(const CylCoord& c) {
  return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + "," +
         std::to_string(c.k) + ")";
}

void validate_coord(const Profile& p, const CylCoord& c) {
  const int T = p.length();
  const auto where = to_string(c) + " for profile " + to_string(p);
  if (c.i < 1 || c.i > T || c.j < 1 || c.j > T)
    throw Error(ErrorKind::invalid_coordinate,
                "position out of range 1.." + std::to_string(T) + " in " +
                    where);
  if (p.at(c.i) != 1)
    throw Error(ErrorKind::invalid_coordinate, "π_i ≠ 1 in " + where);
  if (p.at(c.j) != 0)
    throw Error(ErrorKind::invalid_coordinate, "π_j ≠ 0 in " + where);
  if (c.k < (c.j < c.i ? 1 : 0))
    throw Error(ErrorKind::invalid_coordinate,
                "k out of range (need k ≥ " + std::to_string(c.j < c.i ? 1 : 0) +
                    ") in " + where);
}

UnrolledBox lift(const Profile& p, const CylCoord& c) {
  validate_coord(p, c);
  return {c.i, c.j + static_cast<long>(c.k) * p.length()};
}

CylCoord normalize(const Profile& p, const UnrolledBox& box) {
  const long T = p.length();
  if (box.a >= box.b || p.bit(box.a) != 1 || p.bit(box.b) != 0)
    throw Error(ErrorKind::internal, "not a box of profile " + to_string(p));
  const long shift = floor_div(box.a - 1, T) * T;
  const long a = box.a - shift;
  const long b = box.b - shift;
  const long k = floor_div(b - 1, T);
  return {static_cast<int>(a), static_cast<int>(b - k * T), static_cast<int>(k)};
}

long hook(const Profile& p, const CylCoord& c) {
  validate_coord(p, c);
  return c.j - c.i + static_cast<long>(c.k) * p.length();
}

std::vector<CylCoord> boxes_up_to_hook(const Profile& p, long max_hook) {
  require_cylindric(p);
  std::vector<CylCoord> out;
  const long T = p.length();
  for (int i : p.one_positions())
    for (int j : p.zero_positions())
      for (long k = j < i ? 1 : 0; j - i + k * T <= max_hook; ++k)
        out.push_back({i, j, static_cast<int>(k)});
  std::sort(out.begin(), out.end());
  return out;
}

int diagonal_of(const Profile& p, const CylCoord& c) {
  const auto box = lift(p, c);
  const long T = p.length();
  const long vertex = box.a + p.zeros_through(box.b) - p.zeros_through(box.a) - 1;
  long d = (vertex - 1) % T;
  if (d < 0) d += T;
  return static_cast<int>(d + 1);
}

int hook_multiplicity(const Profile& p, const CylCoord& box,
                      const CylCoord& owner) {
  const auto b = lift(p, box);
  const auto o = lift(p, owner);
  const long T = p.length();
  int count = 0;
  // Column of the owner: lifts (o.a, b') with b' ≤ o.b.
  if ((o.a - b.a) % T == 0) {
    const long s = (o.a - b.a) / T;
    if (b.b + s * T <= o.b) ++count;
  }
  // Row of the owner: lifts (a', o.b) with a' ≥ o.a; skip the owner itself.
  if ((o.b - b.b) % T == 0) {
    const long s = (o.b - b.b) / T;
    if (b.a + s * T >= o.a && b.a + s * T != o.a) ++count;
  }
  return count;
}

LabelledCylindricDiagram::LabelledCylindricDiagram(Profile profile)
    : profile_(std::move(profile)) {
  require_cylindric(profile_);
}

LabelledCylindricDiagram::LabelledCylindricDiagram(Profile profile,
                                                   Labels labels)
    : LabelledCylindricDiagram(std::move(profile)) {
  for (const auto& [coord, value] : labels) {
    try {
      validate_coord(profile_, coord);
    } catch (const Error& e) {
      throw Error(ErrorKind::invalid_alcd, e.what());
    }
    if (value < 0)
      throw Error(ErrorKind::invalid_alcd,
                  "negative label at " + to_string(coord));
    if (value > 0) labels_.emplace(coord, value);
  }
}

long LabelledCylindricDiagram::label(const CylCoord& c) const {
  auto it = labels_.find(c);
  return it == labels_.end() ? 0 : it->second;
}

void LabelledCylindricDiagram::set_label(const CylCoord& c, long value) {
  validate_coord(profile_, c);
  if (value < 0)
    throw Error(ErrorKind::invalid_alcd, "negative label at " + to_string(c));
  if (value == 0)
    labels_.erase(c);
  else
    labels_[c] = value;
}

long alcd_weight(const LabelledCylindricDiagram& d) {
  long w = 0;
  for (const auto& [c, value] : d.labels()) w += value * hook(d.profile(), c);
  return w;
}

long cohook_weight(const LabelledCylindricDiagram& d, const CylCoord& b) {
  validate_coord(d.profile(), b);
  long w = 0;
  for (const auto& [owner, value] : d.labels())
    w += value * hook_multiplicity(d.profile(), b, owner);
  return w;
}

std::vector<long> diag_weights(const LabelledCylindricDiagram& d) {
  const auto& p = d.profile();
  // Only boxes inside some labelled hook can have a nonzero cohook.
  std::set<CylCoord> candidates;
  for (const auto& [owner, value] : d.labels()) {
    const auto o = lift(p, owner);
    for (long t = o.a + 1; t <= o.b; ++t)
      if (p.bit(t) == 0) candidates.insert(normalize(p, {o.a, t}));
    for (long t = o.a; t < o.b; ++t)
      if (p.bit(t) == 1) candidates.insert(normalize(p, {t, o.b}));
  }
  std::vector<long> out(p.length(), 0);
  for (const auto& b : candidates)
    out[diagonal_of(p, b) - 1] += cohook_weight(d, b);
  return out;
}

long diag_weight(const LabelledCylindricDiagram& d, int k) {
  if (k < 1 || k > d.profile().length())
    throw Error(ErrorKind::invalid_coordinate,
                "diagonal index " + std::to_string(k) + " outside 1.." +
                    std::to_string(d.profile().length()));
  return diag_weights(d)[k - 1];
}

int depth(const LabelledCylindricDiagram& d) {
  int deepest = 0;
  for (const auto& [c, value] : d.labels()) deepest = std::max(deepest, c.k + 1);
  return deepest;
}

CylCoord inside_corner(const Profile& p, int i) {
  const int T = p.length();
  if (i < 1 || i > T)
    throw Error(ErrorKind::invalid_coordinate,
                "corner position " + std::to_string(i) + " outside 1.." +
                    std::to_string(T));
  return normalize(p, {i, static_cast<long>(i) + 1});
}

std::pair<long, LabelledCylindricDiagram> remove_inside_corner(
    const LabelledCylindricDiagram& d, int i) {
  const auto& upper = d.profile();
  const int T = upper.length();
  if (i < 1 || i > T || upper.at(i) != 1 || upper.at(i % T + 1) != 0)
    throw Error(ErrorKind::not_inside_corner,
                "positions (" + std::to_string(i) + "," +
                    std::to_string(i % T + 1) + ") of " + to_string(upper) +
                    " are not an inside corner (need bits 1,0)");
  const auto corner = inside_corner(upper, i);
  const Profile lower = upper.swapped(i);
  LabelledCylindricDiagram out(lower);
  for (const auto& [c, value] : d.labels()) {
    if (c == corner) continue;
    const auto box = lift(upper, c);
    out.set_label(normalize(lower, {swap_position(box.a, i, T),
                                    swap_position(box.b, i, T)}),
                  value);
  }
  return {d.label(corner), std::move(out)};
}

LabelledCylindricDiagram add_inside_corner(long m,
                                           const LabelledCylindricDiagram& d,
                                           int i) {
  const auto& lower = d.profile();
  const int T = lower.length();
  if (i < 1 || i > T || lower.at(i) != 0 || lower.at(i % T + 1) != 1)
    throw Error(ErrorKind::cannot_add_inversion,
                "cannot add inversion here: positions (" + std::to_string(i) +
                    "," + std::to_string(i % T + 1) + ") of " +
                    to_string(lower) + " need bits 0,1");
  if (m < 0)
    throw Error(ErrorKind::invalid_alcd, "negative corner label");
  const Profile upper = lower.swapped(i);
  LabelledCylindricDiagram out(upper);
  for (const auto& [c, value] : d.labels()) {
    const auto box = lift(lower, c);
    out.set_label(normalize(upper, {swap_position(box.a, i, T),
                                    swap_position(box.b, i, T)}),
                  value);
  }
  out.set_label(inside_corner(upper, i), m);
  return out;
}

LabelledCylindricDiagram rotate_alcd(const LabelledCylindricDiagram& d) {
  const Profile rotated = rotate_profile(d.profile());
  LabelledCylindricDiagram out(rotated);
  for (const auto& [c, value] : d.labels()) {
    const auto box = lift(d.profile(), c);
    out.set_label(normalize(rotated, {box.a - 1, box.b - 1}), value);
  }
  return out;
}

}  // namespace cylbij
