#include <algorithm>

#include "doctest.h"
#include "expected_tables.hpp"
#include "spinindex/error.hpp"
#include "spinindex/reptheory.hpp"

using namespace spinindex;

TEST_SUITE("reptheory") {
  TEST_CASE("constructed representations are homomorphisms") {
    for (auto r : kIcosaReps) CHECK(irrep_2I(r).is_homomorphism());
    CHECK(tensor(irrep_2I(IcosaRep::R2), irrep_2I(IcosaRep::R2p)).dimension() == 4);
    CHECK(sym_power(rep2_of_2I(), 3).dimension() == 4);
  }

  TEST_CASE("galois conjugation swaps primed irreducibles") {
    CHECK(character_of(galois_rep(irrep_2I(IcosaRep::R3))) == character_2I(IcosaRep::R3p));
  }

  TEST_CASE("twisted partners") {
    CHECK(twisted_partner(IcosaRep::R2, IcosaRep::R3) == std::pair{IcosaRep::R3p, IcosaRep::R2p});
    CHECK(twisted_partner(IcosaRep::R3, IcosaRep::R3p) == std::pair{IcosaRep::R3, IcosaRep::R3p});
    CHECK_THROWS_AS((void)extend_character(IcosaRep::R2, IcosaRep::R3, 1), NotExtendable);
  }

  TEST_CASE("extensions differ by sign on the coset") {
    const auto plus = extend_character(IcosaRep::R2, IcosaRep::R2p, 1);
    const auto minus = extend_character(IcosaRep::R2, IcosaRep::R2p, -1);
    const auto& G = GhatGroup::instance();
    for (std::size_t c = 0; c < G.class_count(); ++c) {
      if (G.classes()[c].coset) {
        CHECK(plus[c] == -minus[c]);
      } else {
        CHECK(plus[c] == minus[c]);
      }
    }
    CHECK(plus[G.class_index(G.s())] == GoldenComplex(2));
  }

  TEST_CASE("character table matches the frozen list") {
    const auto& table = chartable_ghat();
    REQUIRE(table.size() == expected::kGhatIrreps.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
      CAPTURE(table[i].label.name());
      CHECK(table[i].label.name() == expected::kGhatIrreps[i].name);
      CHECK(table[i].dimension == expected::kGhatIrreps[i].dim);
      CHECK(table[i].spinorial == expected::kGhatIrreps[i].spinorial);
    }
    CHECK(irrep_index_by_name("(2′⊗3′)⊕(3⊗2)") == 7);
    CHECK_THROWS_AS((void)irrep_index_by_name("7⊗7"), ParseError);
  }

  TEST_CASE("orthogonality relations") {
    const auto report = check_orthogonality(chartable_ghat());
    CHECK(report.rows_orthonormal);
    CHECK(report.columns_orthogonal);
    CHECK(report.dimension_sum);
  }

  TEST_CASE("spinorial means odd under -1") {
    const auto& G = GhatGroup::instance();
    const auto m = G.class_index(G.minus_one());
    for (const auto& chi : chartable_ghat()) {
      CHECK(chi.values[m] == (chi.spinorial ? -GoldenComplex(chi.dimension) : GoldenComplex(chi.dimension)));
    }
  }

  TEST_CASE("decomposition of a character recovers it") {
    const auto& table = chartable_ghat();
    ClassFunction f = table[3].values;
    for (std::size_t c = 0; c < f.size(); ++c) f[c] = f[c] - table[20].values[c];
    const auto m = decompose(f);
    for (std::size_t i = 0; i < m.size(); ++i) {
      CHECK(m[i] == GoldenComplex(i == 3 ? 1 : (i == 20 ? -1 : 0)));
    }
  }
}
