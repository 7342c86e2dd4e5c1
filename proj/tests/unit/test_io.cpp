#include "cylbij/bijection.hpp"
#include "cylbij/error.hpp"
#include "cylbij/io.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cylbij;

TEST_CASE("json round trips") {
  const auto c = fixtures::example_cpp();
  CHECK(cpp_to_json(c) ==
        R"({"profile":"11010","slices":[[3,2,2],[5,3,2],[6,4,3,2],[4,3,2],[4,3,2,1],[3,2,2]]})");
  CHECK(cpp_from_json(cpp_to_json(c)) == c);

  const auto d = fixtures::example_alcd();
  CHECK(alcd_from_json(alcd_to_json(d)) == d);
  CHECK(alcd_to_json(d) ==
        R"({"labels":[[1,5,0,1],[2,3,0,5],[4,5,0,1],[1,3,1,1],[1,5,1,1]],"profile":"11010"})");

  const auto text = pair_to_json({3, 2}, d);
  CHECK(text ==
        R"({"profile":"11010","gamma":[3,2],"alcd":[[1,5,0,1],[2,3,0,5],[4,5,0,1],[1,3,1,1],[1,5,1,1]]})");
  const auto pair = pair_from_json(text);
  CHECK(pair.gamma == Partition{3, 2});
  CHECK(pair.alcd == d);

  CHECK(std::holds_alternative<CylindricPlanePartition>(object_from_json(cpp_to_json(c))));
  CHECK(std::holds_alternative<PairInput>(object_from_json(text)));
  CHECK(std::holds_alternative<LabelledCylindricDiagram>(object_from_json(alcd_to_json(d))));

  // unmap(map(x)) is byte-identical after canonicalization.
  const auto mapped = cpp_to_json(psi(pair.gamma, pair.alcd));
  auto [g2, d2] = phi(cpp_from_json(mapped));
  CHECK(pair_to_json(g2, d2) == text);
}

TEST_CASE("json diagnostics") {
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return std::pair{e.kind(), std::string(e.what())};
    }
    return std::pair{ErrorKind::internal, std::string("no error")};
  };
  auto [k1, m1] = kind_of([] { cpp_from_json(R"({"profile":"10","slices":[[1],)"); });
  CHECK(k1 == ErrorKind::parse_error);
  CHECK(m1.find("line") != std::string::npos);
  auto [k2, m2] = kind_of([] { cpp_from_json(R"({"slices":[]})"); });
  CHECK(m2.find("\"profile\"") != std::string::npos);
  auto [k3, m3] = kind_of([] { cpp_from_json(R"({"profile":"10","slices":[[2],[1],[2]]})"); });
  CHECK(k3 == ErrorKind::invalid_cpp);
  CHECK(m3.find("step 1") != std::string::npos);
  auto [k4, m4] = kind_of([] { alcd_from_json(R"({"profile":"11010","labels":[[3,5,0,1]]})"); });
  CHECK(k4 == ErrorKind::parse_error);
  CHECK(m4.find("labels") != std::string::npos);
  auto [k5, m5] = kind_of([] { pair_from_json(R"({"profile":"11010","gamma":[1,2],"alcd":[]})"); });
  CHECK(m5.find("gamma") != std::string::npos);
  auto [k6, m6] = kind_of([] { alcd_from_json(R"({"profile":"11010","labels":[[2,3,0]]})"); });
  CHECK(m6.find("labels[0]") != std::string::npos);
  CHECK_THROWS_AS(object_from_json("[1,2]"), Error);
  CHECK_THROWS_AS(cpp_from_json(R"({"profile":"111","slices":[]})"), Error);
}

TEST_CASE("text views") {
  const auto view = render_alcd(fixtures::example_alcd());
  CHECK(view.find("weight 26, depth 2") != std::string::npos);
  CHECK(view.find("diagonal weights: 5 10 4 5 2") != std::string::npos);
  const auto hooks = render_hooks(fixtures::example_profile(), 4);
  CHECK(hooks.find("  4  5  0     1") != std::string::npos);
  CHECK(hooks.find("  4  3  1     4") != std::string::npos);
  CHECK(hooks.find("  1  5  0     4") != std::string::npos);
  CHECK(render_hooks(fixtures::example_profile(), 0) == "  i  j  k  hook\n");
  CHECK(render_cpp(fixtures::example_cpp()).find("weight 51") != std::string::npos);
}
