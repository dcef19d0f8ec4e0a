#include "spinindex/quatmat.hpp"

#include <cmath>

namespace spinindex {

std::string to_string(const GoldenQuaternion& q) {
  return "[" + q.q0.to_compact() + ", " + q.q1.to_compact() + ", " + q.q2.to_compact() + ", " +
         q.q3.to_compact() + "]";
}

namespace {

Quaternion<QuadExtNumber> lift(const GoldenQuaternion& q) {
  return {QuadExtNumber(q.q0), QuadExtNumber(q.q1), QuadExtNumber(q.q2), QuadExtNumber(q.q3)};
}

Quaternion<QuadExtNumber> scaled(const Quaternion<QuadExtNumber>& q, const GoldenNumber& s) {
  return q * QuadExtNumber(s);
}

}  // namespace

ScaledSpinMatrix4::ScaledSpinMatrix4(const SpinMatrix4<GoldenNumber>& x)
    : body_{lift(x.a), lift(x.b), lift(x.c), lift(x.d)} {}

GoldenNumber ScaledSpinMatrix4::mu_squared() {
  return GoldenNumber(BigRational(-1, 4), BigRational(1, 4));
}

ScaledSpinMatrix4 operator*(const ScaledSpinMatrix4& x, const ScaledSpinMatrix4& y) {
  ScaledSpinMatrix4::Body body = x.body_ * y.body_;
  if (x.has_mu_ && y.has_mu_) {
    const GoldenNumber s = ScaledSpinMatrix4::mu_squared();
    body = {scaled(body.a, s), scaled(body.b, s), scaled(body.c, s), scaled(body.d, s)};
    return {std::move(body), false};
  }
  return {std::move(body), x.has_mu_ != y.has_mu_};
}

bool ScaledSpinMatrix4::is_su11() const {
  // scale * (B* J B) == J
  using Q = Quaternion<QuadExtNumber>;
  const QuadExtNumber s(quadratic_scale());
  const Q& a = body_.a;
  const Q& b = body_.b;
  const Q& c = body_.c;
  const Q& d = body_.d;
  return (a.conj() * a - c.conj() * c) * s == Q::one() &&
         (a.conj() * b - c.conj() * d).is_zero() && (b.conj() * b - d.conj() * d) * s == -Q::one();
}

LorentzMatrix5<QuadExtNumber> eta4(const ScaledSpinMatrix4& x) {
  if (!x.is_su11()) throw InvalidElement("matrix is not in SU(1,1;H)");
  auto m = eta4_unchecked(x.body());
  if (x.has_mu()) m = QuadExtNumber(ScaledSpinMatrix4::mu_squared()) * m;
  return m;
}

bool entry_relations_hold(const ScaledSpinMatrix4& x) { return entry_relations_hold(x.body()); }

bool verify_lift(const ScaledSpinMatrix4& x, const LorentzMatrix5<QuadExtNumber>& target) {
  return x.is_su11() && eta4(x) == target;
}

SpinMatrix4<double> to_numeric(const ScaledSpinMatrix4& x) {
  auto m = spin_matrix_cast<double>(x.body());
  if (x.has_mu()) {
    const double mu = std::sqrt(ScaledSpinMatrix4::mu_squared().to_double());
    m = {m.a * mu, m.b * mu, m.c * mu, m.d * mu};
  }
  return m;
}

}  // namespace spinindex
