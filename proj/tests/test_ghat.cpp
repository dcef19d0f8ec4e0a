#include "doctest.h"
#include "expected_tables.hpp"
#include "spinindex/error.hpp"
#include "spinindex/ghat.hpp"

using namespace spinindex;

TEST_SUITE("ghat") {
  TEST_CASE("distinguished elements") {
    const auto& G = GhatGroup::instance();
    CHECK(G.order(G.s()) == 2);
    CHECK(G.order(G.minus_one()) == 2);
    CHECK(G.order(G.sigma_star()) == 4);
    CHECK(G.class_of(G.s()).name == "[1×2]");
    CHECK(G.class_of(G.sigma_star()).name == "[1×1]");
    CHECK(G.class_of(G.minus_one()).name == "2×2");
    CHECK(G.class_of(G.identity()).name == "1×1");
  }

  TEST_CASE("product rule on the coset") {
    const auto& G = GhatGroup::instance();
    const auto& g = BinaryIcosahedralGroup::instance();
    const GhatElement x{g.generator(0), g.generator(1), true};
    const GhatElement y{g.generator(1), g.identity(), false};
    const auto xy = G.mul(x, y);
    CHECK(xy.coset);
    CHECK(xy.p == g.generator(0));
    CHECK(xy.q == g.mul(g.generator(1), g.alpha(g.generator(1))));
    CHECK(G.mul(G.s(), G.s()) == G.identity());
  }

  TEST_CASE("classes match the frozen table row for row") {
    const auto& G = GhatGroup::instance();
    REQUIRE(G.class_count() == expected::kGhatClasses.size());
    for (std::size_t c = 0; c < G.class_count(); ++c) {
      const auto& cls = G.classes()[c];
      const auto& row = expected::kGhatClasses[c];
      CAPTURE(cls.name);
      CHECK(cls.name == row.name);
      CHECK(cls.order == row.ord);
      CHECK(cls.size() == static_cast<std::size_t>(row.size));
      CHECK(G.classes()[G.minus_class(c)].name == row.minus);
    }
    CHECK(G.subgroup_class_count() == 45);
  }

  TEST_CASE("class lookup by name") {
    const auto& G = GhatGroup::instance();
    CHECK(G.classes()[G.class_index_by_name("5A×10B+10A×5B")].size() == 288);
    CHECK_THROWS_AS((void)G.class_index_by_name("7×7"), ParseError);
  }

  TEST_CASE("power maps") {
    const auto& G = GhatGroup::instance();
    const auto c = G.class_index_by_name("[1×1]");
    CHECK(G.power_class(c, 2) == G.class_index_by_name("2×2"));
    const auto d = G.class_index_by_name("[1×2]");
    CHECK(G.power_class(d, 2) == G.class_index_by_name("1×1"));
  }

  TEST_CASE("element names") {
    const auto& g = BinaryIcosahedralGroup::instance();
    CHECK(class_name({g.identity(), g.minus_one(), false}) == "1×2+2×1");
  }
}
