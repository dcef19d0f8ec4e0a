#include <cmath>

#include "doctest.h"
#include "spinindex/error.hpp"
#include "spinindex/spinindex.hpp"

using namespace spinindex;

namespace {

const GhatClass& named(const char* name) {
  const auto& G = GhatGroup::instance();
  return G.classes()[G.class_index_by_name(name)];
}

std::vector<DavisRow> bundled_rows() { return parse_davis_rows(bundled_davis_json()); }

}  // namespace

TEST_SUITE("spinindex") {
  TEST_CASE("nu at the apex for diagonal matrices") {
    const auto& g = BinaryIcosahedralGroup::instance();
    const auto& p = g.element(g.class_representative(IcosaClass::C10A));
    const auto& q = g.element(g.class_representative(IcosaClass::C1));
    // 1 / (2 (tau/2 - 1))
    const auto nu = nu_diag_4d(p, q);
    CHECK(nu.re() * (GoldenNumber::tau() - 2) == GoldenNumber(1));
    CHECK(nu.im().is_zero());
    CHECK_THROWS_AS((void)nu_diag_4d(p, p), NonIsolatedFixedPoint);
    CHECK_THROWS_AS((void)nu_diag_4d(GoldenQuaternion::real(2), q), DomainError);
  }

  TEST_CASE("nu at a moved fixed point equals nu at the apex") {
    const auto& g = BinaryIcosahedralGroup::instance();
    const auto phi = SpinMatrix4<GoldenNumber>::diag(g.element(g.generator(0)), GoldenQuaternion::one());
    const auto h = boost4({0, 1, 0, 0});
    const HyperboloidPoint4<GoldenNumber> apex = {0, 0, 0, 0, 1};
    const auto at_apex = nu_isolated_4d({apex, phi});
    const IsolatedFixedPoint4 moved{eta4(h) * apex, h * phi * h.group_inverse()};
    CHECK(nu_isolated_4d(moved) == at_apex);
    CHECK_THROWS_AS((void)nu_isolated_4d({apex, h}), InconsistentInput);
  }

  TEST_CASE("nu in dimension 2 is imaginary") {
    const auto nu = nu_diag_2d(GoldenComplex::i());
    CHECK(nu == GoldenComplex(0, GoldenNumber::rational(-1, 2)));
    CHECK_THROWS_AS((void)nu_diag_2d(GoldenComplex(1)), NonIsolatedFixedPoint);
    const auto h = boost2(GoldenComplex::i());
    const HyperboloidPoint2<GoldenNumber> apex = {0, 0, 1};
    const auto phi = SpinMatrix2<GoldenComplex>::diag(GoldenComplex::i());
    CHECK(nu_isolated_2d(h * phi * h.group_inverse(), eta2(h) * apex) == nu);
  }

  TEST_CASE("exact values agree with the numeric oracle") {
    const auto probes = standard_nu_probes_4d();
    CHECK(probes.size() >= 20);
    for (const auto& p : probes) {
      CAPTURE(p.label);
      const SpinMatrix4<double> m{quaternion_cast<double>(p.point.phi_hat.a), quaternion_cast<double>(p.point.phi_hat.b),
                                  quaternion_cast<double>(p.point.phi_hat.c), quaternion_cast<double>(p.point.phi_hat.d)};
      HyperboloidPoint4<double> x{};
      for (int i = 0; i < 5; ++i) x[i] = p.point.x[i].to_double();
      CHECK(std::abs(nu_isolated_4d(p.point).re().to_double() - nu_numeric_oracle(m, x)) < 1e-9);
    }
  }

  TEST_CASE("oracle rejects non-isolated fixed points") {
    const auto phi = SpinMatrix4<double>::diag(Quaternion<double>{0, 1, 0, 0}, Quaternion<double>{0, 0, 1, 0});
    CHECK_THROWS_AS((void)nu_numeric_oracle(phi, {0, 0, 0, 0, 1}), NonIsolatedFixedPoint);
  }

  TEST_CASE("two fixed point classes") {
    CHECK(two_fixed_point_spin(named("1×3+3×1")).is_zero());
    CHECK(two_fixed_point_spin(named("1×10A+10B×1")) == GoldenNumber::sqrt5());
    CHECK(two_fixed_point_spin(named("3×5A+5B×3")) == -GoldenNumber::sqrt5());
    CHECK_THROWS_AS((void)two_fixed_point_spin(named("[1×4]")), NotApplicable);
    const auto rows = bundled_rows();
    const auto& G = GhatGroup::instance();
    CHECK(spin_number_two_fp(G.class_index_by_name("4×5B+5A×4"), rows) == GoldenComplex(GoldenNumber::sqrt5()));
    CHECK_THROWS_AS((void)spin_number_two_fp(G.class_index_by_name("5A×5B"), rows), NotApplicable);
  }

  TEST_CASE("bundled data parses") {
    const auto rows = bundled_rows();
    CHECK(rows.size() == 34);
    CHECK_FALSE(rows.front().fp_count.has_value());
    CHECK(rows.front().provenance == Provenance::TrivialIdentity);
    for (auto p : {Provenance::TrivialIdentity, Provenance::ComputedTwoFixedPoints, Provenance::ForcedZeroSelfMinus,
                   Provenance::ForcedZeroSurface, Provenance::Recorded}) {
      CHECK(parse_provenance(provenance_label(p)) == p);
    }
    CHECK_THROWS_AS((void)parse_davis_rows("{\"version\": 1}"), ParseError);
    CHECK_THROWS_AS((void)parse_davis_rows("not json"), ParseError);
  }

  TEST_CASE("spin character over all 54 classes") {
    const auto table = davis_spin_character(bundled_rows());
    const auto& G = GhatGroup::instance();
    REQUIRE(table.entries.size() == 54);
    int derived = 0;
    for (const auto& e : table.entries) {
      CHECK(table.entries[G.minus_class(e.class_index)].spin == -e.spin);
      if (e.via_minus) ++derived;
    }
    CHECK(derived == 20);
    CHECK(table.entries[G.class_index_by_name("2×10B+10A×2")].spin == GoldenNumber(-5) * GoldenNumber::sqrt5());
  }

  TEST_CASE("inconsistent data is rejected") {
    auto rows = bundled_rows();
    SUBCASE("wrong computed value") {
      for (auto& r : rows) {
        if (r.name == "3×4+4×3") r.spin = GoldenNumber::sqrt5();
      }
      CHECK_THROWS_AS((void)davis_spin_character(rows), DataInconsistency);
    }
    SUBCASE("nonzero self-minus value") {
      for (auto& r : rows) {
        if (r.name == "4×4") r.spin = GoldenNumber(1);
      }
      CHECK_THROWS_AS((void)davis_spin_character(rows), DataInconsistency);
    }
    SUBCASE("wrong size") {
      rows[3].size += 1;
      CHECK_THROWS_AS((void)davis_spin_character(rows), DataInconsistency);
    }
    SUBCASE("missing row") {
      rows.pop_back();
      CHECK_THROWS_AS((void)davis_spin_character(rows), DataInconsistency);
    }
    SUBCASE("recorded value breaks integrality") {
      for (auto& r : rows) {
        if (r.name == "1×5A+5B×1") r.spin += GoldenNumber(1);
        if (r.name == "1×5B+5A×1") r.spin -= GoldenNumber(1);
      }
      CHECK_THROWS_AS((void)decompose_davis_index(davis_spin_character(rows)), DataInconsistency);
    }
  }

  TEST_CASE("the index is a difference of two 12-dimensional irreducibles") {
    const auto d = decompose_davis_index(davis_spin_character(bundled_rows()));
    const auto& table = chartable_ghat();
    REQUIRE(d.positive.has_value());
    REQUIRE(d.negative.has_value());
    CHECK(table[*d.positive].label.name() == "(2′⊗3′)⊕(3⊗2)");
    CHECK(table[*d.negative].label.name() == "(2⊗3)⊕(3′⊗2′)");
    CHECK(d.norm == GoldenComplex(2));
    CHECK(d.min_total_dimension == 24);
    CHECK(d.dimension_step == 8);
    int nonzero = 0;
    for (long m : d.multiplicities) nonzero += m != 0;
    CHECK(nonzero == 2);
  }
}
