#include "doctest.h"
#include "spinindex/error.hpp"
#include "spinindex/icosa.hpp"
#include "spinindex/quatmat.hpp"
#include "spinindex/spinindex.hpp"

using namespace spinindex;

TEST_SUITE("quatmat") {
  TEST_CASE("quaternion units") {
    const GoldenQuaternion i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
    CHECK(i * j == k);
    CHECK(j * i == -k);
    CHECK(i * i == GoldenQuaternion::real(-1));
    const GoldenQuaternion q{1, 2, GoldenNumber::tau(), 3};
    CHECK(q * q.inverse() == GoldenQuaternion::one());
  }

  TEST_CASE("eta4 of a diagonal matrix is a rotation") {
    const auto& g = BinaryIcosahedralGroup::instance();
    const auto a = SpinMatrix4<GoldenNumber>::diag(g.element(g.generator(0)), g.element(g.generator(1)));
    const auto m = eta4(a);
    CHECK(is_orthochronous_lorentz(m));
    CHECK(m(4, 4) == GoldenNumber(1));
    for (int i = 0; i < 4; ++i) CHECK(m(4, i).is_zero());
  }

  TEST_CASE("eta4 rejects matrices outside SU(1,1;H)") {
    const SpinMatrix4<GoldenNumber> bad{GoldenQuaternion::real(2), GoldenQuaternion::zero(), GoldenQuaternion::zero(),
                                        GoldenQuaternion::one()};
    CHECK_FALSE(bad.is_su11());
    CHECK_THROWS_AS((void)eta4(bad), InvalidElement);
  }

  TEST_CASE("boosts move the apex and respect the ball action") {
    const auto b = boost4({0, 1, 0, 0});
    CHECK(b.is_su11());
    const HyperboloidPoint4<GoldenNumber> apex = {0, 0, 0, 0, 1};
    const auto x = eta4(b) * apex;
    CHECK(x[4] > GoldenNumber(1));
    CHECK(zeta(act_ball(b, GoldenQuaternion::zero())) == x);
  }

  TEST_CASE("Davis involution lift") {
    const auto s = davis_sigma_data();
    CHECK(s.sigma_hat.has_mu());
    CHECK(s.sigma_hat.is_su11());
    CHECK(entry_relations_hold(s.sigma_hat));
    CHECK(entry_relations_hold(boost4({0, 1, 0, 0})));
    CHECK(eta4(s.sigma_hat) == s.sigma);
    CHECK(s.sigma_hat * s.sigma_hat == -ScaledSpinMatrix4());
    CHECK(s.sigma * s.sigma == LorentzMatrix5<QuadExtNumber>::identity());
  }

  TEST_CASE("alpha and beta lifts") {
    for (int i : {1, 2}) {
      CHECK(verify_lift(alpha_hat(i), alpha_matrix(i)));
      CHECK(verify_lift(beta_hat(i), beta_matrix(i)));
      CHECK(verify_lift(-alpha_hat(i), alpha_matrix(i)));
    }
    CHECK_FALSE(verify_lift(alpha_hat(1), alpha_matrix(2)));
    CHECK_THROWS_AS((void)alpha_hat(3), DomainError);
  }

  TEST_CASE("eta2 on SU(1,1;C)") {
    const auto u = GoldenComplex(GoldenNumber::rational(3, 5), GoldenNumber::rational(4, 5));
    const auto a = SpinMatrix2<GoldenComplex>::diag(u) * boost2(GoldenComplex::i());
    const auto b = boost2(u);
    CHECK(eta2(a * b) == eta2(a) * eta2(b));
    CHECK(is_orthochronous_lorentz(eta2(a)));
    CHECK(zeta2(act_disk(b, GoldenComplex(GoldenNumber::rational(1, 3)))) ==
          eta2(b) * zeta2(GoldenComplex(GoldenNumber::rational(1, 3))));
  }

  TEST_CASE("stereographic projection") {
    const GoldenQuaternion q{GoldenNumber::rational(1, 3), 0, GoldenNumber::rational(-1, 4), 0};
    const auto x = zeta(q);
    CHECK(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3] - x[4] * x[4] == GoldenNumber(-1));
    CHECK(zeta_inv(x) == q);
    CHECK_THROWS_AS((void)zeta(GoldenQuaternion::one()), DomainError);
  }
}
