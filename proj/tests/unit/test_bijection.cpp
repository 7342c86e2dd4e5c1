#include "cylbij/bijection.hpp"
#include "cylbij/local_rule.hpp"
#include "cylbij/series.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cylbij;

TEST_CASE("base cases") {
  const auto p = fixtures::example_profile();
  const Partition gamma{3, 1};
  CHECK(psi(gamma, LabelledCylindricDiagram(p)) ==
        CylindricPlanePartition::constant(p, gamma));
  auto [g, d] = phi(CylindricPlanePartition::constant(p, gamma));
  CHECK(g == gamma);
  CHECK(d.empty());
}

TEST_CASE("single corner label") {
  const auto p = fixtures::example_profile();
  for (int i : {2, 4}) {
    for (long m = 1; m <= 3; ++m) {
      LabelledCylindricDiagram d(p);
      d.set_label(inside_corner(p, i), m);
      const auto c = psi({}, d);
      for (int k = 0; k <= 5; ++k) {
        if (k == i)
          CHECK(c.slice(k) == burge_up({}, {}, m, {}));
        else
          CHECK(c.slice(k).empty());
      }
    }
  }
}

TEST_CASE("running example") {
  const auto c = psi({3, 2}, fixtures::example_alcd());
  CHECK(c == fixtures::example_cpp());
  CHECK(cpp_weight(c) == 51);
  CHECK(check_strong_weight({3, 2}, fixtures::example_alcd(), c));
  auto [gamma, d] = phi(c);
  CHECK(gamma == Partition{3, 2});
  CHECK(d == fixtures::example_alcd());
}

TEST_CASE("strong weight negative control") {
  const auto c = fixtures::example_cpp();
  const auto report = check_strong_weight({3, 1}, fixtures::example_alcd(), c);
  CHECK_FALSE(report);
  REQUIRE(report.k.has_value());
  CHECK(*report.k == 1);
  CHECK(report.slice_size == 10);
  CHECK(report.expected == 9);
  CHECK(report.message().find("k=1") != std::string::npos);
}

TEST_CASE("exhaustive bijectivity and strong weight") {
  for (const auto& p : fixtures::small_profiles(5)) {
    const long bound = p.length() <= 4 ? 10 : 8;
    long count = 0;
    for_each_cpp(p, bound, [&](const CylindricPlanePartition& c) {
      auto [gamma, d] = phi(c);
      REQUIRE(check_strong_weight(gamma, d, c));
      REQUIRE(psi(gamma, d) == c);
      ++count;
    });
    long pairs = 0;
    for_each_pair(p, bound, [&](const Partition& gamma, const LabelledCylindricDiagram& d) {
      const auto c = psi(gamma, d);
      REQUIRE(cpp_weight(c) == p.length() * gamma.weight() + alcd_weight(d));
      auto back = phi(c);
      REQUIRE(back.first == gamma);
      REQUIRE(back.second == d);
      ++pairs;
    });
    REQUIRE(count == pairs);
  }
}

TEST_CASE("rotation compatibility") {
  for (const auto& p : fixtures::small_profiles(4)) {
    for_each_cpp(p, 7, [&](const CylindricPlanePartition& c) {
      auto [gamma, d] = phi(c);
      auto [gamma_r, d_r] = phi(rotate_cpp(c));
      REQUIRE(gamma_r == gamma);
      REQUIRE(alcd_weight(d_r) == alcd_weight(rotate_alcd(d)));
    });
  }
}
