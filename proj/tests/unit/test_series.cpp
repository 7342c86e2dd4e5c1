#include "cylbij/series.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cylbij;

namespace {

// p(n) by Euler's pentagonal recurrence.
std::vector<long> partition_numbers(int n) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const long sign = k % 2 ? 1 : -1;
      p[m] += sign * p[m - g1];
      if (g2 <= m) p[m] += sign * p[m - g2];
    }
  return p;
}

TruncatedSeries from_longs(const std::vector<long>& v) {
  std::vector<Coefficient> c(v.begin(), v.end());
  return TruncatedSeries(static_cast<int>(v.size()) - 1, c);
}

}  // namespace

TEST_CASE("series arithmetic") {
  auto a = TruncatedSeries::one(12);
  a.mul_geometric(2).mul_geometric(3);
  auto b = TruncatedSeries::one(12);
  b.mul_geometric(3).mul_geometric(2);
  CHECK(a == b);
  a.mul_binomial(2).mul_binomial(3);
  CHECK(a == TruncatedSeries::one(12));
  auto g = TruncatedSeries::one(5);
  g.mul_geometric(1);
  CHECK(to_string(g) == "1,1,1,1,1,1");
  CHECK(to_string(g * g) == "1,2,3,4,5,6");
  CHECK(to_string(g + g) == "2,2,2,2,2,2");
  CHECK(first_mismatch(g, g) == -1);
  CHECK(first_mismatch(g, g + g) == 0);

  // Coefficients beyond 64 bits stay exact.
  auto big = TruncatedSeries::one(400);
  for (int h = 1; h <= 400; ++h) big.mul_geometric(h);
  CHECK(big[400].str() == "6727090051741041926");
  auto bigger = big * big;
  CHECK(bigger[400] > Coefficient(std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("profile 10 gives partition numbers") {
  const auto expected = from_longs(partition_numbers(10));
  const auto p = Profile::parse("10");
  CHECK(enumerate_cpp_series(p, 10) == expected);
  CHECK(enumerate_pairs_series(p, 10) == expected);
  CHECK(borodin_rhs_series(p, 10) == expected);
  CHECK(to_string(expected) == "1,1,2,3,5,7,11,15,22,30,42");
}

TEST_CASE("constant terms and trivial cases") {
  for (const auto& p : fixtures::small_profiles(4)) {
    CHECK(enumerate_cpp_series(p, 3)[0] == 1);
    CHECK(enumerate_pairs_series(p, 3)[0] == 1);
    CHECK(borodin_rhs_series(p, 3)[0] == 1);
  }
  const auto rpp = enumerate_rpp_series(Profile::parse("10"), 5);
  CHECK(to_string(rpp) == "1,1,1,1,1,1");
  CHECK(stanley_rhs_series(Profile::parse("10"), 5) == rpp);
  CHECK(enumerate_rpp_series(Profile::min_for(3, 2), 7) == TruncatedSeries::one(7));
  CHECK(stanley_rhs_series(Profile::min_for(3, 2), 7) == TruncatedSeries::one(7));
}

TEST_CASE("triple agreement") {
  for (const auto& p : fixtures::small_profiles(5)) {
    const auto lhs = enumerate_cpp_series(p, 12);
    REQUIRE(lhs == enumerate_pairs_series(p, 12));
    REQUIRE(lhs == borodin_rhs_series(p, 12));
    REQUIRE(lhs == enumerate_cpp_series(rotate_profile(p), 12));
  }
  for (const char* s : {"101010", "110100", "011001"}) {
    const auto p = Profile::parse(s);
    const auto lhs = enumerate_cpp_series(p, 10);
    REQUIRE(lhs == enumerate_pairs_series(p, 10));
    REQUIRE(lhs == borodin_rhs_series(p, 10));
  }
  CHECK(enumerate_cpp_series(Profile::parse("0011"), 10) ==
        borodin_rhs_series(Profile::parse("0011"), 10));
  CHECK(enumerate_cpp_series(Profile::parse("0110"), 10) ==
        borodin_rhs_series(Profile::parse("0110"), 10));
}

TEST_CASE("enumerators match the series") {
  for (const auto& p : fixtures::small_profiles(4)) {
    std::vector<long> cpps(9, 0), pairs(9, 0);
    for_each_cpp(p, 8, [&](const CylindricPlanePartition& c) { ++cpps[cpp_weight(c)]; });
    for_each_pair(p, 8, [&](const Partition& g, const LabelledCylindricDiagram& d) {
      ++pairs[p.length() * g.weight() + alcd_weight(d)];
    });
    REQUIRE(from_longs(cpps) == enumerate_cpp_series(p, 8));
    REQUIRE(from_longs(pairs) == enumerate_cpp_series(p, 8));
  }
}

TEST_CASE("refined weight multisets agree") {
  for (const auto& p : fixtures::small_profiles(4))
    REQUIRE(cpp_refined_weights(p, 9) == pair_refined_weights(p, 9));
  const auto p = Profile::parse("11010");
  CHECK(cpp_refined_weights(p, 8) == pair_refined_weights(p, 8));
}

TEST_CASE("stanley agreement") {
  for (int T = 1; T <= 6; ++T)
    for (int mask = 0; mask < (1 << T); ++mask) {
      std::vector<std::uint8_t> bits;
      for (int t = 0; t < T; ++t) bits.push_back((mask >> t) & 1);
      const Profile p(bits);
      REQUIRE(enumerate_rpp_series(p, 10) == stanley_rhs_series(p, 10));
    }
  CHECK(enumerate_rpp_series(Profile::parse("1100"), 8) ==
        stanley_rhs_series(Profile::parse("1100"), 8));
}

TEST_CASE("result does not depend on the thread count") {
  const auto p = Profile::parse("11010");
  const auto one = enumerate_cpp_series(p, 10, 1);
  CHECK(enumerate_cpp_series(p, 10, 3) == one);
  CHECK(enumerate_cpp_series(p, 10, 8) == one);
}
