#include <set>

#include "doctest.h"
#include "spinindex/error.hpp"
#include "spinindex/icosa.hpp"
#include "spinindex/reptheory.hpp"

using namespace spinindex;

TEST_SUITE("icosa") {
  TEST_CASE("120 unit icosians closed under multiplication") {
    const auto& g = BinaryIcosahedralGroup::instance();
    REQUIRE(g.elements().size() == 120);
    std::set<std::string> seen;
    for (const auto& q : g.elements()) {
      CHECK(q.norm2() == GoldenNumber(1));
      seen.insert(to_string(q));
    }
    CHECK(seen.size() == 120);
    CHECK(enumerate_2I().size() == 120);
  }

  TEST_CASE("class sizes, orders and real parts") {
    const std::array<int, 9> sizes = {1, 1, 20, 30, 12, 12, 20, 12, 12};
    const std::array<int, 9> orders = {1, 2, 3, 4, 5, 5, 6, 10, 10};
    for (auto c : kIcosaClasses) {
      CHECK(class_size(c) == sizes[index_of(c)]);
      CHECK(class_element_order(c) == orders[index_of(c)]);
    }
    CHECK(class_real_part(IcosaClass::C1) == GoldenNumber(1));
    CHECK(class_real_part(IcosaClass::C4) == GoldenNumber(0));
    CHECK(class_real_part(IcosaClass::C3) == GoldenNumber::rational(-1, 2));
    CHECK(class_real_part(IcosaClass::C10A) == GoldenNumber::tau() / 2);
  }

  TEST_CASE("labels round trip") {
    for (auto c : kIcosaClasses) CHECK(parse_class_label(class_label(c)) == c);
    for (auto r : kIcosaReps) CHECK(parse_rep_label(rep_label(r)) == r);
    CHECK(parse_rep_label("3'") == IcosaRep::R3p);
    CHECK_THROWS_AS((void)parse_class_label("7"), ParseError);
  }

  TEST_CASE("membership") {
    const auto& g = BinaryIcosahedralGroup::instance();
    CHECK_THROWS_AS((void)g.index_of({GoldenNumber::rational(3, 5), GoldenNumber::rational(4, 5), 0, 0}),
                    MembershipError);
    CHECK(g.class_of(GoldenQuaternion::real(-1)) == IcosaClass::C2);
  }

  TEST_CASE("alpha is an outer automorphism of order 4") {
    const auto& g = BinaryIcosahedralGroup::instance();
    const auto g1 = g.generator(0), g2 = g.generator(1);
    CHECK(g.alpha(g1) == g.power(g1, 3));
    CHECK(g.alpha(g2) == g.power(g2, 7));
    CHECK(g.class_of(g.alpha(g.class_representative(IcosaClass::C5A))) == IcosaClass::C5B);
    for (auto c : kIcosaClasses) {
      CHECK(g.class_of(g.alpha(g.class_representative(c))) == class_twist(c));
    }
  }

  TEST_CASE("character table of 2I from constructions") {
    for (auto r : kIcosaReps) {
      const auto& chi = character_2I(r);
      for (auto c : kIcosaClasses) CHECK(chi[index_of(c)] == GoldenComplex(char_2I(r, c)));
      CHECK(irrep_2I(r).dimension() == static_cast<std::size_t>(rep_dim(r)));
    }
    CHECK(char_2I(IcosaRep::R2, IcosaClass::C10A) == GoldenNumber::tau());
    CHECK(char_2I(IcosaRep::R6, IcosaClass::C2) == GoldenNumber(-6));
  }
}
