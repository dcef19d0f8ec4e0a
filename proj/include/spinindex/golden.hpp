#pragma once
// Exact arithmetic in Q, Q(tau), Q(tau)(i) and Q(tau)(sqrt d).
//
// tau is the golden ratio, tau^2 = tau + 1. Every number is stored in the
// basis {1, tau} with reduced rational coefficients, so two values are equal
// iff their components are identical.

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace spinindex {

using BigRational = mpq_class;

/// num/den in lowest terms; throws DivisionByZero for den == 0.
BigRational make_rational(long num, long den = 1);
int sign(const BigRational& x);
/// Rational square root if x is the square of a rational.
std::optional<BigRational> rational_sqrt(const BigRational& x);
/// "n/d", always with an explicit denominator.
std::string rational_to_canonical(const BigRational& x);
/// "n" or "n/d".
std::string rational_to_compact(const BigRational& x);
BigRational parse_rational(std::string_view text);

class GoldenNumber {
 public:
  GoldenNumber() = default;
  GoldenNumber(long a) : a_(a) {}  // NOLINT: integers embed implicitly
  GoldenNumber(BigRational a, BigRational b = 0);

  static GoldenNumber tau() { return {0, 1}; }
  /// sqrt(5) = 2 tau - 1.
  static GoldenNumber sqrt5() { return {-1, 2}; }
  static GoldenNumber rational(long num, long den) { return {make_rational(num, den), 0}; }

  const BigRational& a() const { return a_; }
  const BigRational& b() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  bool is_integer() const;

  GoldenNumber operator-() const { return {BigRational(-a_), BigRational(-b_)}; }
  GoldenNumber& operator+=(const GoldenNumber& y);
  GoldenNumber& operator-=(const GoldenNumber& y);
  GoldenNumber& operator*=(const GoldenNumber& y);
  GoldenNumber& operator/=(const GoldenNumber& y);

  GoldenNumber inverse() const;
  /// tau -> 1 - tau.
  GoldenNumber galois() const;
  /// x * galois(x) = a^2 + ab - b^2.
  BigRational norm() const;
  /// Sign of the real value a + b * 1.618..., decided exactly.
  int sign() const;
  double to_double() const;
  std::optional<GoldenNumber> sqrt() const;

  /// "a_num/a_den + b_num/b_den*t"
  std::string to_string() const;
  /// Short form such as "2*t-1", "1/2", "-t".
  std::string to_compact() const;
  /// Accepts both the canonical and the compact forms.
  static GoldenNumber parse(std::string_view text);

  friend bool operator==(const GoldenNumber& x, const GoldenNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const GoldenNumber& x, const GoldenNumber& y) { return !(x == y); }
  /// Ordering of the real embedding.
  friend bool operator<(const GoldenNumber& x, const GoldenNumber& y) { return (x - y).sign() < 0; }
  friend bool operator>(const GoldenNumber& x, const GoldenNumber& y) { return y < x; }
  friend bool operator<=(const GoldenNumber& x, const GoldenNumber& y) { return !(y < x); }
  friend bool operator>=(const GoldenNumber& x, const GoldenNumber& y) { return !(x < y); }

  friend GoldenNumber operator+(GoldenNumber x, const GoldenNumber& y) { return x += y; }
  friend GoldenNumber operator-(GoldenNumber x, const GoldenNumber& y) { return x -= y; }
  friend GoldenNumber operator*(GoldenNumber x, const GoldenNumber& y) { return x *= y; }
  friend GoldenNumber operator/(GoldenNumber x, const GoldenNumber& y) { return x /= y; }

 private:
  BigRational a_{0};
  BigRational b_{0};
};

std::ostream& operator<<(std::ostream& os, const GoldenNumber& x);

GoldenNumber golden_mul(const GoldenNumber& x, const GoldenNumber& y);
GoldenNumber golden_inverse(const GoldenNumber& x);
GoldenNumber galois_conjugate(const GoldenNumber& x);
double real_embed(const GoldenNumber& x);

/// x + y i with x, y in Q(tau).
class GoldenComplex {
 public:
  GoldenComplex() = default;
  GoldenComplex(long re) : re_(re) {}  // NOLINT
  GoldenComplex(GoldenNumber re, GoldenNumber im = {}) : re_(std::move(re)), im_(std::move(im)) {}

  static GoldenComplex i() { return {0, 1}; }

  const GoldenNumber& re() const { return re_; }
  const GoldenNumber& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GoldenComplex conj() const { return {re_, -im_}; }
  /// re^2 + im^2
  GoldenNumber abs2() const { return re_ * re_ + im_ * im_; }
  GoldenComplex inverse() const;
  GoldenComplex galois() const { return {re_.galois(), im_.galois()}; }

  GoldenComplex operator-() const { return {-re_, -im_}; }
  GoldenComplex& operator+=(const GoldenComplex& y);
  GoldenComplex& operator-=(const GoldenComplex& y);
  GoldenComplex& operator*=(const GoldenComplex& y);
  GoldenComplex& operator/=(const GoldenComplex& y) { return *this *= y.inverse(); }

  std::string to_compact() const;

  friend bool operator==(const GoldenComplex& x, const GoldenComplex& y) {
    return x.re_ == y.re_ && x.im_ == y.im_;
  }
  friend bool operator!=(const GoldenComplex& x, const GoldenComplex& y) { return !(x == y); }
  friend GoldenComplex operator+(GoldenComplex x, const GoldenComplex& y) { return x += y; }
  friend GoldenComplex operator-(GoldenComplex x, const GoldenComplex& y) { return x -= y; }
  friend GoldenComplex operator*(GoldenComplex x, const GoldenComplex& y) { return x *= y; }
  friend GoldenComplex operator/(GoldenComplex x, const GoldenComplex& y) { return x /= y; }

 private:
  GoldenNumber re_;
  GoldenNumber im_;
};

std::ostream& operator<<(std::ostream& os, const GoldenComplex& x);

/// base + ext * kappa with kappa^2 = radicand.
///
/// A value whose ext part is zero lies in Q(tau), which every tower contains,
/// so it combines with any radicand. Two values with nonzero ext parts must
/// share the radicand or the operation throws TowerMismatch.
class QuadExtNumber {
 public:
  QuadExtNumber() = default;
  QuadExtNumber(long base) : base_(base) {}  // NOLINT
  QuadExtNumber(GoldenNumber base) : base_(std::move(base)) {}  // NOLINT
  QuadExtNumber(GoldenNumber base, GoldenNumber ext, GoldenNumber radicand);

  /// kappa itself in the tower with the given radicand.
  static QuadExtNumber root(const GoldenNumber& radicand) { return {0, 1, radicand}; }

  const GoldenNumber& base() const { return base_; }
  const GoldenNumber& ext() const { return ext_; }
  const GoldenNumber& radicand() const { return radicand_; }
  bool is_zero() const { return base_.is_zero() && ext_.is_zero(); }
  bool in_base_field() const { return ext_.is_zero(); }

  QuadExtNumber operator-() const;
  QuadExtNumber& operator+=(const QuadExtNumber& y);
  QuadExtNumber& operator-=(const QuadExtNumber& y);
  QuadExtNumber& operator*=(const QuadExtNumber& y);
  QuadExtNumber& operator/=(const QuadExtNumber& y) { return *this *= y.inverse(); }
  QuadExtNumber inverse() const;
  /// Exact sign of the real embedding (requires radicand > 0).
  int sign() const;
  double to_double() const;
  std::string to_compact() const;

  friend bool operator==(const QuadExtNumber& x, const QuadExtNumber& y);
  friend bool operator!=(const QuadExtNumber& x, const QuadExtNumber& y) { return !(x == y); }
  friend QuadExtNumber operator+(QuadExtNumber x, const QuadExtNumber& y) { return x += y; }
  friend QuadExtNumber operator-(QuadExtNumber x, const QuadExtNumber& y) { return x -= y; }
  friend QuadExtNumber operator*(QuadExtNumber x, const QuadExtNumber& y) { return x *= y; }
  friend QuadExtNumber operator/(QuadExtNumber x, const QuadExtNumber& y) { return x /= y; }

 private:
  const GoldenNumber& shared_radicand(const QuadExtNumber& y) const;

  GoldenNumber base_;
  GoldenNumber ext_;
  GoldenNumber radicand_;
};

std::ostream& operator<<(std::ostream& os, const QuadExtNumber& x);

QuadExtNumber quadext_mul(const QuadExtNumber& x, const QuadExtNumber& y);

// Uniform helpers used by the generic matrix and quaternion code.
inline double to_double(double x) { return x; }
inline double to_double(const GoldenNumber& x) { return x.to_double(); }
inline double to_double(const QuadExtNumber& x) { return x.to_double(); }
inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const GoldenNumber& x) { return x.is_zero(); }
inline bool is_zero(const GoldenComplex& x) { return x.is_zero(); }
inline bool is_zero(const QuadExtNumber& x) { return x.is_zero(); }
inline int sign_of(const BigRational& x) { return sgn(x); }
inline int sign_of(double x) { return (x > 0) - (x < 0); }
inline int sign_of(const GoldenNumber& x) { return x.sign(); }
inline int sign_of(const QuadExtNumber& x) { return x.sign(); }

}  // namespace spinindex

template <>
struct std::hash<spinindex::GoldenNumber> {
  std::size_t operator()(const spinindex::GoldenNumber& x) const noexcept {
    return std::hash<std::string>{}(x.to_string());
  }
};
