#include <random>
#include <set>

#include "cylbij/error.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cylbij;

namespace {

std::multiset<long> hooks(const LabelledCylindricDiagram& d) {
  std::multiset<long> out;
  for (const auto& [c, lab] : d.labels())
    for (long t = 0; t < lab; ++t) out.insert(hook(d.profile(), c));
  return out;
}

}  // namespace

TEST_CASE("hook lengths") {
  const auto p = fixtures::example_profile();
  CHECK(hook(p, {4, 5, 0}) == 1);
  CHECK(hook(p, {4, 3, 1}) == 4);
  CHECK(hook(p, {1, 3, 3}) == 17);
  CHECK_THROWS_AS(hook(p, {3, 5, 0}), Error);
  CHECK_THROWS_AS(hook(p, {1, 2, 0}), Error);
  CHECK_THROWS_AS(hook(p, {4, 3, 0}), Error);
  CHECK_THROWS_AS(hook(p, {9, 3, 0}), Error);

  for (const auto& q : fixtures::small_profiles(6)) {
    std::multiset<long> k0, inv;
    for (const auto& c : boxes_up_to_hook(q, 3 * q.length())) {
      REQUIRE(hook(q, c) >= 1);
      if (c.k == 0) k0.insert(hook(q, c));
    }
    for (auto [i, j] : inversions(q)) inv.insert(j - i);
    REQUIRE(k0 == inv);
  }
}

TEST_CASE("boxes_up_to_hook") {
  using V = std::vector<CylCoord>;
  CHECK(boxes_up_to_hook(Profile::parse("10"), 6) ==
        V{{1, 2, 0}, {1, 2, 1}, {1, 2, 2}});
  CHECK(boxes_up_to_hook(fixtures::example_profile(), 1) ==
        V{{2, 3, 0}, {4, 5, 0}});
  CHECK(boxes_up_to_hook(fixtures::example_profile(), 0).empty());
}

TEST_CASE("running example weights") {
  const auto d = fixtures::example_alcd();
  CHECK(alcd_weight(d) == oracle::frozen::kExampleWeight);
  CHECK(depth(d) == oracle::frozen::kExampleDepth);
  CHECK(cohook_weight(d, {2, 3, 0}) == oracle::frozen::kExampleCohook230);
  CHECK(diag_weights(d) == oracle::frozen::kExampleDiagWeights);
  CHECK(oracle::diag_weights(d) == oracle::frozen::kExampleDiagWeights);
  long sum = 0;
  for (int k = 1; k <= 5; ++k) sum += diag_weight(d, k);
  CHECK(sum == 26);
}

TEST_CASE("small diagrams") {
  const auto p = fixtures::example_profile();
  LabelledCylindricDiagram empty(p);
  CHECK(alcd_weight(empty) == 0);
  CHECK(depth(empty) == 0);
  CHECK(cohook_weight(empty, {1, 3, 0}) == 0);
  for (int k = 1; k <= 5; ++k) CHECK(diag_weight(empty, k) == 0);

  LabelledCylindricDiagram corner(p, {{{2, 3, 0}, 7}});
  CHECK(alcd_weight(corner) == 7);
  CHECK(cohook_weight(corner, {2, 3, 0}) == 7);
  CHECK(diag_weights(corner) == std::vector<long>{0, 7, 0, 0, 0});

  LabelledCylindricDiagram deep(p, {{{1, 3, 3}, 1}});
  CHECK(depth(deep) == 4);

  CHECK_THROWS_AS(LabelledCylindricDiagram(p, {{{3, 5, 0}, 1}}), Error);
  CHECK_THROWS_AS(LabelledCylindricDiagram(p, {{{2, 3, 0}, -1}}), Error);
  CHECK(LabelledCylindricDiagram(p, {{{2, 3, 0}, 0}}).empty());
}

TEST_CASE("weights against oracles on random diagrams") {
  std::mt19937 rng(12345);
  for (const auto& p : fixtures::small_profiles(5)) {
    for (int rep = 0; rep < 20; ++rep) {
      const auto d = fixtures::random_alcd(p, 2 * p.length() + 3, 4, rng);
      const auto w = diag_weights(d);
      REQUIRE(w == oracle::diag_weights(d));
      long sum = 0;
      for (long v : w) sum += v;
      REQUIRE(sum == alcd_weight(d));
      for (const auto& b : boxes_up_to_hook(p, 2 * p.length() + 3))
        REQUIRE(cohook_weight(d, b) == oracle::cohook(d, b));
    }
  }
}

TEST_CASE("inside corners") {
  const auto p = fixtures::example_profile();
  // 11010 has inside corners at 2 (bits 1,0) and 4 (bits 1,0).
  LabelledCylindricDiagram only(p, {{{2, 3, 0}, 4}});
  auto [m, rest] = remove_inside_corner(only, 2);
  CHECK(m == 4);
  CHECK(rest.empty());
  CHECK(rest.profile() == Profile::parse("10110"));
  CHECK(add_inside_corner(4, rest, 2) == only);
  CHECK(add_inside_corner(0, rest, 2) == LabelledCylindricDiagram(p));
  CHECK_THROWS_AS(remove_inside_corner(only, 1), Error);
  CHECK_THROWS_AS(add_inside_corner(1, only, 2), Error);

  // Cyclic corner at T: 01011 has bits (1,0) at positions 5 and 1.
  const auto q = Profile::parse("01011");
  CHECK(inside_corner(q, 5) == CylCoord{5, 1, 1});
  LabelledCylindricDiagram wrap(q, {{{5, 1, 1}, 3}, {{2, 3, 0}, 1}});
  auto [m2, rest2] = remove_inside_corner(wrap, 5);
  CHECK(m2 == 3);
  CHECK(rest2.profile() == Profile::parse("11010"));
  CHECK(add_inside_corner(3, rest2, 5) == wrap);

  auto [m3, rest3] = remove_inside_corner(fixtures::example_alcd(), 4);
  CHECK(m3 == 1);
  CHECK(add_inside_corner(m3, rest3, 4) == fixtures::example_alcd());
}

TEST_CASE("inside-corner diagonal law, exhaustive over small diagrams") {
  std::mt19937 rng(7);
  for (const auto& p : fixtures::small_profiles(4)) {
    for (int i = 1; i <= p.length(); ++i) {
      if (p.at(i) != 1 || p.at(i % p.length() + 1) != 0) continue;
      const int T = p.length();
      for (int rep = 0; rep < 60; ++rep) {
        const auto d1 = fixtures::random_alcd(p, 2 * T + 2, 1 + rep % 4, rng);
        auto [m, d] = remove_inside_corner(d1, i);
        REQUIRE(add_inside_corner(m, d, i) == d1);
        const auto w1 = diag_weights(d1);
        const auto w = diag_weights(d);
        const int prev = (i + T - 2) % T, here = i - 1, next = i % T;
        REQUIRE(w1[here] == m + w[prev] + w[next] - w[here]);
        for (int k = 0; k < T; ++k)
          if (k != here) REQUIRE(w1[k] == w[k]);
      }
    }
  }
}

TEST_CASE("rotation") {
  std::mt19937 rng(99);
  for (const auto& p : fixtures::small_profiles(5)) {
    CHECK(rotate_alcd(LabelledCylindricDiagram(p)).profile() == rotate_profile(p));
    for (int rep = 0; rep < 10; ++rep) {
      const auto d = fixtures::random_alcd(p, 3 * p.length(), 5, rng);
      auto r = rotate_alcd(d);
      REQUIRE(hooks(r) == hooks(d));
      REQUIRE(alcd_weight(r) == alcd_weight(d));
      const auto w = diag_weights(d);
      const auto wr = diag_weights(r);
      const int T = p.length();
      for (int k = 0; k < T; ++k) REQUIRE(wr[k] == w[(k + 1) % T]);
      for (int t = 1; t < T; ++t) r = rotate_alcd(r);
      REQUIRE(r == d);
    }
  }
}
