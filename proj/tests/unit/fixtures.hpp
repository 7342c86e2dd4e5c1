#pragma once

#include <random>
#include <vector>

#include "cylbij/cpp.hpp"
#include "cylbij/cylindric_diagram.hpp"

namespace fixtures {

using namespace cylbij;

// The running example. Its slices and labels fit 11010; see README.
inline Profile example_profile() { return Profile::parse("11010"); }

inline CylindricPlanePartition example_cpp() {
  return {example_profile(),
          {{3, 2, 2}, {5, 3, 2}, {6, 4, 3, 2}, {4, 3, 2}, {4, 3, 2, 1}, {3, 2, 2}}};
}

inline LabelledCylindricDiagram example_alcd() {
  return {example_profile(),
          {{{4, 5, 0}, 1}, {{2, 3, 0}, 5}, {{1, 5, 0}, 1}, {{1, 3, 1}, 1},
           {{1, 5, 1}, 1}}};
}

// Every cylindric profile of length 2..max_length.
inline std::vector<Profile> small_profiles(int max_length) {
  std::vector<Profile> out;
  for (int T = 2; T <= max_length; ++T)
    for (int mask = 0; mask < (1 << T); ++mask) {
      std::vector<std::uint8_t> bits;
      for (int t = 0; t < T; ++t) bits.push_back((mask >> t) & 1);
      Profile p(bits);
      if (p.is_cylindric()) out.push_back(p);
    }
  return out;
}

inline LabelledCylindricDiagram random_alcd(const Profile& p, long max_hook,
                                            int boxes, std::mt19937& rng) {
  const auto pool = boxes_up_to_hook(p, max_hook);
  LabelledCylindricDiagram d(p);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<long> lab(1, 4);
  for (int b = 0; b < boxes; ++b) d.set_label(pool[pick(rng)], lab(rng));
  return d;
}

}  // namespace fixtures
