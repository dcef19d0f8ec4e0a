#pragma once
// Quaternions, the spin groups SU(1,1;H) and SU(1,1;C), their double covers
// onto SO+(4,1) and SO+(2,1), and the ball/hyperboloid models.
//
// Everything is templated on the scalar so the same code runs exactly over
// GoldenNumber / QuadExtNumber and numerically over double.

#include <array>
#include <complex>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>

#include "spinindex/error.hpp"
#include "spinindex/golden.hpp"

namespace spinindex {

template <class T>
struct Quaternion {
  T q0{}, q1{}, q2{}, q3{};

  static Quaternion one() { return {T(1), T(0), T(0), T(0)}; }
  static Quaternion zero() { return {T(0), T(0), T(0), T(0)}; }
  static Quaternion real(const T& x) { return {x, T(0), T(0), T(0)}; }

  const T& re() const { return q0; }
  Quaternion conj() const { return {q0, -q1, -q2, -q3}; }
  T norm2() const { return q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3; }
  bool is_zero() const {
    return spinindex::is_zero(q0) && spinindex::is_zero(q1) && spinindex::is_zero(q2) &&
           spinindex::is_zero(q3);
  }
  Quaternion inverse() const {
    const T n = norm2();
    if (spinindex::is_zero(n)) throw DivisionByZero();
    const T inv = T(1) / n;
    return conj() * inv;
  }

  Quaternion operator-() const { return {-q0, -q1, -q2, -q3}; }
  friend Quaternion operator+(const Quaternion& x, const Quaternion& y) {
    return {x.q0 + y.q0, x.q1 + y.q1, x.q2 + y.q2, x.q3 + y.q3};
  }
  friend Quaternion operator-(const Quaternion& x, const Quaternion& y) {
    return {x.q0 - y.q0, x.q1 - y.q1, x.q2 - y.q2, x.q3 - y.q3};
  }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.q0 * b.q0 - a.q1 * b.q1 - a.q2 * b.q2 - a.q3 * b.q3,
            a.q0 * b.q1 + a.q1 * b.q0 + a.q2 * b.q3 - a.q3 * b.q2,
            a.q0 * b.q2 - a.q1 * b.q3 + a.q2 * b.q0 + a.q3 * b.q1,
            a.q0 * b.q3 + a.q1 * b.q2 - a.q2 * b.q1 + a.q3 * b.q0};
  }
  friend Quaternion operator*(const Quaternion& x, const T& s) {
    return {x.q0 * s, x.q1 * s, x.q2 * s, x.q3 * s};
  }
  friend Quaternion operator*(const T& s, const Quaternion& x) { return x * s; }
  friend bool operator==(const Quaternion& x, const Quaternion& y) {
    return x.q0 == y.q0 && x.q1 == y.q1 && x.q2 == y.q2 && x.q3 == y.q3;
  }
  friend bool operator!=(const Quaternion& x, const Quaternion& y) { return !(x == y); }
};

using GoldenQuaternion = Quaternion<GoldenNumber>;

/// Coordinatewise conversion, e.g. Quaternion<GoldenNumber> -> Quaternion<double>.
template <class To, class From>
Quaternion<To> quaternion_cast(const Quaternion<From>& q) {
  if constexpr (std::is_same_v<To, double>) {
    return {to_double(q.q0), to_double(q.q1), to_double(q.q2), to_double(q.q3)};
  } else {
    return {To(q.q0), To(q.q1), To(q.q2), To(q.q3)};
  }
}

std::string to_string(const GoldenQuaternion& q);

// ---------------------------------------------------------------------------
// Square real matrices (Lorentz matrices live here).

template <class T, std::size_t N>
struct SquareMatrix {
  std::array<std::array<T, N>, N> m{};

  static SquareMatrix identity() {
    SquareMatrix r;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) r.m[i][j] = T(i == j ? 1 : 0);
    }
    return r;
  }
  static SquareMatrix diagonal(const std::array<T, N>& d) {
    SquareMatrix r = identity();
    for (std::size_t i = 0; i < N; ++i) r.m[i][i] = d[i];
    return r;
  }

  T& operator()(std::size_t i, std::size_t j) { return m[i][j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return m[i][j]; }

  SquareMatrix transpose() const {
    SquareMatrix r;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) r.m[i][j] = m[j][i];
    }
    return r;
  }

  friend SquareMatrix operator*(const SquareMatrix& x, const SquareMatrix& y) {
    SquareMatrix r;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) {
        T acc(0);
        for (std::size_t k = 0; k < N; ++k) acc += x.m[i][k] * y.m[k][j];
        r.m[i][j] = acc;
      }
    }
    return r;
  }
  friend std::array<T, N> operator*(const SquareMatrix& x, const std::array<T, N>& v) {
    std::array<T, N> r{};
    for (std::size_t i = 0; i < N; ++i) {
      T acc(0);
      for (std::size_t k = 0; k < N; ++k) acc += x.m[i][k] * v[k];
      r[i] = acc;
    }
    return r;
  }
  friend SquareMatrix operator*(const T& s, const SquareMatrix& x) {
    SquareMatrix r = x;
    for (auto& row : r.m) {
      for (auto& e : row) e = s * e;
    }
    return r;
  }
  friend bool operator==(const SquareMatrix& x, const SquareMatrix& y) { return x.m == y.m; }
  friend bool operator!=(const SquareMatrix& x, const SquareMatrix& y) { return !(x == y); }

  /// Determinant by fraction-producing elimination (T must be a field).
  T determinant() const {
    auto a = m;
    T det(1);
    for (std::size_t col = 0; col < N; ++col) {
      std::size_t pivot = col;
      while (pivot < N && spinindex::is_zero(a[pivot][col])) ++pivot;
      if (pivot == N) return T(0);
      if (pivot != col) {
        std::swap(a[pivot], a[col]);
        det = -det;
      }
      det = det * a[col][col];
      const T inv = T(1) / a[col][col];
      for (std::size_t r = col + 1; r < N; ++r) {
        if (spinindex::is_zero(a[r][col])) continue;
        const T f = a[r][col] * inv;
        for (std::size_t c = col; c < N; ++c) a[r][c] -= f * a[col][c];
      }
    }
    return det;
  }
};

template <class T>
using LorentzMatrix5 = SquareMatrix<T, 5>;
template <class T>
using LorentzMatrix3 = SquareMatrix<T, 3>;

/// M^T J M == J with J = diag(1,...,1,-1), M[N-1][N-1] >= 1 and det M == 1.
template <class T, std::size_t N>
bool is_orthochronous_lorentz(const SquareMatrix<T, N>& x) {
  std::array<T, N> sig{};
  for (std::size_t i = 0; i < N; ++i) sig[i] = T(i + 1 == N ? -1 : 1);
  const auto j = SquareMatrix<T, N>::diagonal(sig);
  if (x.transpose() * j * x != j) return false;
  if (sign_of(T(x.m[N - 1][N - 1] - T(1))) < 0) return false;
  return x.determinant() == T(1);
}

// ---------------------------------------------------------------------------
// SU(1,1;H)

template <class T>
struct SpinMatrix4 {
  Quaternion<T> a, b, c, d;

  static SpinMatrix4 identity() {
    return {Quaternion<T>::one(), Quaternion<T>::zero(), Quaternion<T>::zero(), Quaternion<T>::one()};
  }
  static SpinMatrix4 diag(const Quaternion<T>& p, const Quaternion<T>& q) {
    return {p, Quaternion<T>::zero(), Quaternion<T>::zero(), q};
  }

  friend SpinMatrix4 operator*(const SpinMatrix4& x, const SpinMatrix4& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
  }
  SpinMatrix4 operator-() const { return {-a, -b, -c, -d}; }
  SpinMatrix4 conj_transpose() const { return {a.conj(), c.conj(), b.conj(), d.conj()}; }
  /// J A* J, the inverse of an element of SU(1,1;H).
  SpinMatrix4 group_inverse() const { return {a.conj(), -c.conj(), -b.conj(), d.conj()}; }

  /// A* J A == J.
  bool is_su11() const {
    const auto one = Quaternion<T>::one();
    return a.conj() * a - c.conj() * c == one && a.conj() * b - c.conj() * d == Quaternion<T>::zero() &&
           b.conj() * b - d.conj() * d == -one;
  }

  friend bool operator==(const SpinMatrix4& x, const SpinMatrix4& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator!=(const SpinMatrix4& x, const SpinMatrix4& y) { return !(x == y); }
};

template <class To, class From>
SpinMatrix4<To> spin_matrix_cast(const SpinMatrix4<From>& x) {
  return {quaternion_cast<To>(x.a), quaternion_cast<To>(x.b), quaternion_cast<To>(x.c),
          quaternion_cast<To>(x.d)};
}

/// The closed-form entries of eta4, applied without checking membership in
/// SU(1,1;H). Every entry is a homogeneous quadratic in the coordinates of A.
template <class T>
LorentzMatrix5<T> eta4_unchecked(const SpinMatrix4<T>& x) {
  const T &a0 = x.a.q0, &a1 = x.a.q1, &a2 = x.a.q2, &a3 = x.a.q3;
  const T &b0 = x.b.q0, &b1 = x.b.q1, &b2 = x.b.q2, &b3 = x.b.q3;
  const T &c0 = x.c.q0, &c1 = x.c.q1, &c2 = x.c.q2, &c3 = x.c.q3;
  const T &d0 = x.d.q0, &d1 = x.d.q1, &d2 = x.d.q2, &d3 = x.d.q3;
  const T two(2);
  LorentzMatrix5<T> m;
  m(0, 0) = b0 * c0 + b1 * c1 + b2 * c2 + b3 * c3 + a0 * d0 + a1 * d1 + a2 * d2 + a3 * d3;
  m(0, 1) = b1 * c0 - b0 * c1 - b3 * c2 + b2 * c3 - a1 * d0 + a0 * d1 + a3 * d2 - a2 * d3;
  m(0, 2) = b2 * c0 + b3 * c1 - b0 * c2 - b1 * c3 - a2 * d0 - a3 * d1 + a0 * d2 + a1 * d3;
  m(0, 3) = b3 * c0 - b2 * c1 + b1 * c2 - b0 * c3 - a3 * d0 + a2 * d1 - a1 * d2 + a0 * d3;
  m(0, 4) = two * (b0 * d0 + b1 * d1 + b2 * d2 + b3 * d3);
  m(1, 0) = b1 * c0 - b0 * c1 + b3 * c2 - b2 * c3 + a1 * d0 - a0 * d1 + a3 * d2 - a2 * d3;
  m(1, 1) = -b0 * c0 - b1 * c1 + b2 * c2 + b3 * c3 + a0 * d0 + a1 * d1 - a2 * d2 - a3 * d3;
  m(1, 2) = b3 * c0 - b2 * c1 - b1 * c2 + b0 * c3 - a3 * d0 + a2 * d1 + a1 * d2 - a0 * d3;
  m(1, 3) = -b2 * c0 - b3 * c1 - b0 * c2 - b1 * c3 + a2 * d0 + a3 * d1 + a0 * d2 + a1 * d3;
  m(1, 4) = two * (b1 * d0 - b0 * d1 + b3 * d2 - b2 * d3);
  m(2, 0) = b2 * c0 - b3 * c1 - b0 * c2 + b1 * c3 + a2 * d0 - a3 * d1 - a0 * d2 + a1 * d3;
  m(2, 1) = -b3 * c0 - b2 * c1 - b1 * c2 - b0 * c3 + a3 * d0 + a2 * d1 + a1 * d2 + a0 * d3;
  m(2, 2) = -b0 * c0 + b1 * c1 - b2 * c2 + b3 * c3 + a0 * d0 - a1 * d1 + a2 * d2 - a3 * d3;
  m(2, 3) = b1 * c0 + b0 * c1 - b3 * c2 - b2 * c3 - a1 * d0 - a0 * d1 + a3 * d2 + a2 * d3;
  m(2, 4) = two * (b2 * d0 - b3 * d1 - b0 * d2 + b1 * d3);
  m(3, 0) = b3 * c0 + b2 * c1 - b1 * c2 - b0 * c3 + a3 * d0 + a2 * d1 - a1 * d2 - a0 * d3;
  m(3, 1) = b2 * c0 - b3 * c1 + b0 * c2 - b1 * c3 - a2 * d0 + a3 * d1 - a0 * d2 + a1 * d3;
  m(3, 2) = -b1 * c0 - b0 * c1 - b3 * c2 - b2 * c3 + a1 * d0 + a0 * d1 + a3 * d2 + a2 * d3;
  m(3, 3) = -b0 * c0 + b1 * c1 + b2 * c2 - b3 * c3 + a0 * d0 - a1 * d1 - a2 * d2 + a3 * d3;
  m(3, 4) = two * (b3 * d0 + b2 * d1 - b1 * d2 - b0 * d3);
  m(4, 0) = two * (a0 * b0 + a1 * b1 + a2 * b2 + a3 * b3);
  m(4, 1) = two * (-a1 * b0 + a0 * b1 + a3 * b2 - a2 * b3);
  m(4, 2) = two * (-a2 * b0 - a3 * b1 + a0 * b2 + a1 * b3);
  m(4, 3) = two * (-a3 * b0 + a2 * b1 - a1 * b2 + a0 * b3);
  m(4, 4) = a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3 + b0 * b0 + b1 * b1 + b2 * b2 + b3 * b3;
  return m;
}

/// The double cover SU(1,1;H) -> SO+(4,1). Throws InvalidElement unless
/// A* J A == J holds exactly.
template <class T>
LorentzMatrix5<T> eta4(const SpinMatrix4<T>& x) {
  if (!x.is_su11()) throw InvalidElement("matrix is not in SU(1,1;H)");
  return eta4_unchecked(x);
}

/// |a| = |d|, |b| = |c|, conj(b) a = conj(d) c and c conj(a) = d conj(b).
template <class T>
bool entry_relations_hold(const SpinMatrix4<T>& x) {
  return x.a.norm2() == x.d.norm2() && x.b.norm2() == x.c.norm2() &&
         x.b.conj() * x.a == x.d.conj() * x.c && x.c * x.a.conj() == x.d * x.b.conj();
}

template <class T>
bool verify_lift(const SpinMatrix4<T>& x, const LorentzMatrix5<T>& target) {
  return x.is_su11() && eta4_unchecked(x) == target;
}

// ---------------------------------------------------------------------------
// Elements with a factored scalar mu = sqrt(tau - 1) / 2.
//
// The lift of the Davis involution has entries mu * (Q(tau) + Q(tau) kappa).
// Since mu^2 = (tau - 1)/4 lies in Q(tau) and every quantity we need is
// quadratic in the entries, it suffices to track the parity of the mu power.

class ScaledSpinMatrix4 {
 public:
  using Body = SpinMatrix4<QuadExtNumber>;

  ScaledSpinMatrix4() : body_(Body::identity()) {}
  ScaledSpinMatrix4(Body body, bool has_mu) : body_(std::move(body)), has_mu_(has_mu) {}
  explicit ScaledSpinMatrix4(const SpinMatrix4<GoldenNumber>& x);

  /// (tau - 1) / 4
  static GoldenNumber mu_squared();

  const Body& body() const { return body_; }
  bool has_mu() const { return has_mu_; }

  /// Value of mu^(2k) that multiplies quadratic expressions in the body.
  GoldenNumber quadratic_scale() const { return has_mu_ ? mu_squared() : GoldenNumber(1); }

  bool is_su11() const;
  ScaledSpinMatrix4 group_inverse() const { return {body_.group_inverse(), has_mu_}; }
  ScaledSpinMatrix4 operator-() const { return {-body_, has_mu_}; }
  friend ScaledSpinMatrix4 operator*(const ScaledSpinMatrix4& x, const ScaledSpinMatrix4& y);
  friend bool operator==(const ScaledSpinMatrix4& x, const ScaledSpinMatrix4& y) {
    return x.has_mu_ == y.has_mu_ && x.body_ == y.body_;
  }

 private:
  Body body_;
  bool has_mu_ = false;
};

LorentzMatrix5<QuadExtNumber> eta4(const ScaledSpinMatrix4& x);
bool entry_relations_hold(const ScaledSpinMatrix4& x);
bool verify_lift(const ScaledSpinMatrix4& x, const LorentzMatrix5<QuadExtNumber>& target);
SpinMatrix4<double> to_numeric(const ScaledSpinMatrix4& x);

// ---------------------------------------------------------------------------
// SU(1,1;C)

inline const GoldenNumber& re_part(const GoldenComplex& z) { return z.re(); }
inline const GoldenNumber& im_part(const GoldenComplex& z) { return z.im(); }
inline double re_part(const std::complex<double>& z) { return z.real(); }
inline double im_part(const std::complex<double>& z) { return z.imag(); }
inline GoldenComplex conj_of(const GoldenComplex& z) { return z.conj(); }
inline std::complex<double> conj_of(const std::complex<double>& z) { return std::conj(z); }
inline bool is_zero(const std::complex<double>& z) { return z == 0.0; }

template <class C>
struct SpinMatrix2 {
  using Real = std::decay_t<decltype(re_part(std::declval<C>()))>;
  C a, b, c, d;

  static SpinMatrix2 identity() { return {C(1), C(0), C(0), C(1)}; }
  static SpinMatrix2 diag(const C& u) { return {u, C(0), C(0), conj_of(u)}; }

  friend SpinMatrix2 operator*(const SpinMatrix2& x, const SpinMatrix2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
  }
  SpinMatrix2 operator-() const { return {-a, -b, -c, -d}; }
  /// J A* J
  SpinMatrix2 group_inverse() const { return {conj_of(a), -conj_of(c), -conj_of(b), conj_of(d)}; }

  /// A* J A == J and det A == 1.
  bool is_su11() const {
    return conj_of(a) * a - conj_of(c) * c == C(1) && conj_of(a) * b - conj_of(c) * d == C(0) &&
           conj_of(b) * b - conj_of(d) * d == C(-1) && a * d - b * c == C(1);
  }
  friend bool operator==(const SpinMatrix2& x, const SpinMatrix2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

template <class C>
LorentzMatrix3<typename SpinMatrix2<C>::Real> eta2_unchecked(const SpinMatrix2<C>& x) {
  using R = typename SpinMatrix2<C>::Real;
  const R a1 = re_part(x.a), a2 = im_part(x.a);
  const R b1 = re_part(x.b), b2 = im_part(x.b);
  const R one(1), two(2);
  LorentzMatrix3<R> m;
  m(0, 0) = one - two * a2 * a2 + two * b1 * b1;
  m(0, 1) = -two * a1 * a2 + two * b1 * b2;
  m(0, 2) = two * a1 * b1 - two * a2 * b2;
  m(1, 0) = two * a1 * a2 + two * b1 * b2;
  m(1, 1) = one - two * a2 * a2 + two * b2 * b2;
  m(1, 2) = two * a1 * b2 + two * a2 * b1;
  m(2, 0) = two * a1 * b1 + two * a2 * b2;
  m(2, 1) = two * a1 * b2 - two * a2 * b1;
  m(2, 2) = one + two * b1 * b1 + two * b2 * b2;
  return m;
}

template <class C>
LorentzMatrix3<typename SpinMatrix2<C>::Real> eta2(const SpinMatrix2<C>& x) {
  if (!x.is_su11()) throw InvalidElement("matrix is not in SU(1,1;C)");
  return eta2_unchecked(x);
}

template <class C>
bool verify_lift(const SpinMatrix2<C>& x, const LorentzMatrix3<typename SpinMatrix2<C>::Real>& target) {
  return x.is_su11() && eta2_unchecked(x) == target;
}

// ---------------------------------------------------------------------------
// Conformal ball <-> hyperboloid, signature (+,+,+,+,-).

template <class T>
using HyperboloidPoint4 = std::array<T, 5>;
template <class T>
using HyperboloidPoint2 = std::array<T, 3>;

/// Stereographic projection from the unit ball in H onto the upper sheet.
template <class T>
HyperboloidPoint4<T> zeta(const Quaternion<T>& q) {
  const T n = q.norm2();
  const T denom = T(1) - n;
  if (sign_of(denom) <= 0) throw DomainError("point is not inside the unit ball");
  const T s = T(2) / denom;
  return {s * q.q0, s * q.q1, s * q.q2, s * q.q3, (T(1) + n) / denom};
}

template <class T>
Quaternion<T> zeta_inv(const HyperboloidPoint4<T>& x) {
  if (sign_of(T(x[4] - T(1))) < 0) throw DomainError("point is not on the upper sheet");
  const T s = T(1) / (T(1) + x[4]);
  return {s * x[0], s * x[1], s * x[2], s * x[3]};
}

/// (aq + b)(cq + d)^-1
template <class T>
Quaternion<T> act_ball(const SpinMatrix4<T>& x, const Quaternion<T>& q) {
  if (sign_of(T(T(1) - q.norm2())) <= 0) throw DomainError("point is not inside the unit ball");
  const Quaternion<T> den = x.c * q + x.d;
  return (x.a * q + x.b) * den.inverse();
}

template <class C>
HyperboloidPoint2<typename SpinMatrix2<C>::Real> zeta2(const C& z) {
  using R = typename SpinMatrix2<C>::Real;
  const R n = re_part(z) * re_part(z) + im_part(z) * im_part(z);
  const R denom = R(1) - n;
  if (sign_of(denom) <= 0) throw DomainError("point is not inside the unit disk");
  const R s = R(2) / denom;
  return {s * re_part(z), s * im_part(z), (R(1) + n) / denom};
}

template <class C>
C zeta2_inv(const HyperboloidPoint2<typename SpinMatrix2<C>::Real>& x) {
  using R = typename SpinMatrix2<C>::Real;
  if (sign_of(R(x[2] - R(1))) < 0) throw DomainError("point is not on the upper sheet");
  const R s = R(1) / (R(1) + x[2]);
  return C(s * x[0], s * x[1]);
}

template <class C>
C act_disk(const SpinMatrix2<C>& x, const C& z) {
  return (x.a * z + x.b) / (x.c * z + x.d);
}

}  // namespace spinindex
