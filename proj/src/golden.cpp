#include "spinindex/golden.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "spinindex/error.hpp"

namespace spinindex {

namespace {

const double kTau = (1.0 + std::sqrt(5.0)) / 2.0;

// Sign of u + v * sqrt(r) for rationals-or-goldens u, v and r > 0.
template <class T>
int sign_plus_root(const T& u, const T& v, const T& r) {
  const int su = sign_of(u);
  const int sv = sign_of(v);
  if (sv == 0) return su;
  if (su == 0) return sv;
  if (su == sv) return su;
  // Opposite signs: compare u^2 with v^2 r.
  const int cmp = sign_of(T(u * u - v * v * r));
  return cmp > 0 ? su : (cmp < 0 ? sv : 0);
}

}  // namespace

BigRational make_rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

int sign(const BigRational& x) { return sgn(x); }

std::optional<BigRational> rational_sqrt(const BigRational& x) {
  if (sgn(x) < 0) return std::nullopt;
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn;
  mpz_class rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  BigRational r(rn, rd);
  r.canonicalize();
  return r;
}

std::string rational_to_canonical(const BigRational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string rational_to_compact(const BigRational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

BigRational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty rational");
  if (s.front() == '+') s.erase(s.begin());
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    }
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw ParseError("bad rational: " + std::string(text));
  mpz_class d(den);
  if (d == 0) throw DivisionByZero();
  BigRational r{mpz_class(num), d};
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// GoldenNumber

GoldenNumber::GoldenNumber(BigRational a, BigRational b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

bool GoldenNumber::is_integer() const { return is_rational() && a_.get_den() == 1; }

GoldenNumber& GoldenNumber::operator+=(const GoldenNumber& y) {
  a_ += y.a_;
  b_ += y.b_;
  return *this;
}

GoldenNumber& GoldenNumber::operator-=(const GoldenNumber& y) {
  a_ -= y.a_;
  b_ -= y.b_;
  return *this;
}

GoldenNumber& GoldenNumber::operator*=(const GoldenNumber& y) {
  if (sgn(y.b_) == 0) {
    a_ *= y.a_;
    b_ *= y.a_;
    return *this;
  }
  if (sgn(b_) == 0) {
    b_ = a_ * y.b_;
    a_ *= y.a_;
    return *this;
  }
  // (a + b t)(c + d t) = (ac + bd) + (ad + bc + bd) t
  const BigRational bd = b_ * y.b_;
  const BigRational a = a_ * y.a_ + bd;
  const BigRational b = a_ * y.b_ + b_ * y.a_ + bd;
  a_ = a;
  b_ = b;
  return *this;
}

GoldenNumber& GoldenNumber::operator/=(const GoldenNumber& y) { return *this *= y.inverse(); }

BigRational GoldenNumber::norm() const { return BigRational(a_ * a_ + a_ * b_ - b_ * b_); }

GoldenNumber GoldenNumber::inverse() const {
  const BigRational n = norm();
  if (sgn(n) == 0) throw DivisionByZero();
  const GoldenNumber g = galois();
  return {BigRational(g.a_ / n), BigRational(g.b_ / n)};
}

GoldenNumber GoldenNumber::galois() const { return {BigRational(a_ + b_), BigRational(-b_)}; }

int GoldenNumber::sign() const {
  // a + b t = (a + b/2) + (b/2) sqrt 5
  const BigRational u = a_ + b_ / 2;
  const BigRational v = b_ / 2;
  return sign_plus_root<BigRational>(u, v, BigRational(5));
}

double GoldenNumber::to_double() const { return a_.get_d() + b_.get_d() * kTau; }

std::optional<GoldenNumber> GoldenNumber::sqrt() const {
  if (is_zero()) return GoldenNumber{};
  if (sign() < 0) return std::nullopt;
  // s = x + y t with s^2 = this. N(s)^2 = N(this) and
  // (s + s')^2 = trace(this) + 2 N(s), s' the Galois conjugate.
  const auto root_norm = rational_sqrt(norm());
  if (!root_norm) return std::nullopt;
  const BigRational trace = 2 * a_ + b_;
  for (const BigRational& n : {*root_norm, BigRational(-*root_norm)}) {
    const auto t = rational_sqrt(BigRational(trace + 2 * n));
    if (!t) continue;
    for (const BigRational& tr : {*t, BigRational(-*t)}) {
      // s + s' = 2x + y = tr, and 2xy + y^2 = y (2x + y) = b.
      std::optional<GoldenNumber> candidate;
      if (sgn(tr) != 0) {
        const BigRational y = b_ / tr;
        candidate = GoldenNumber(BigRational((tr - y) / 2), y);
      } else if (sgn(b_) == 0) {
        // s = y (t - 1/2) = y sqrt(5)/2, so s^2 = 5 y^2 / 4.
        if (const auto y = rational_sqrt(BigRational(4 * a_ / 5))) {
          candidate = GoldenNumber(BigRational(-*y / 2), *y);
        }
      }
      if (candidate && *candidate * *candidate == *this) {
        return candidate->sign() < 0 ? -*candidate : *candidate;
      }
    }
  }
  return std::nullopt;
}

std::string GoldenNumber::to_string() const {
  return rational_to_canonical(a_) + " + " + rational_to_canonical(b_) + "*t";
}

std::string GoldenNumber::to_compact() const {
  if (is_zero()) return "0";
  std::string out;
  if (sgn(a_) != 0) out = rational_to_compact(a_);
  if (sgn(b_) != 0) {
    const BigRational mag = abs(b_);
    std::string term = mag == 1 ? "t" : rational_to_compact(mag) + "*t";
    if (sgn(b_) < 0) {
      out += "-" + term;
    } else {
      out += (out.empty() ? "" : "+") + term;
    }
  }
  return out;
}

GoldenNumber GoldenNumber::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty golden number");
  BigRational a = 0;
  BigRational b = 0;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int term_sign = 1;
    // A leading sign, possibly doubled as in "+ -1/2*t".
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') term_sign = -term_sign;
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw ParseError("bad golden number: " + std::string(text));
    bool is_tau = false;
    if (term.back() == 't') {
      is_tau = true;
      term.pop_back();
      if (!term.empty() && term.back() == '*') term.pop_back();
      if (term.empty()) term = "1";
    }
    BigRational coeff = parse_rational(term);
    if (term_sign < 0) coeff = -coeff;
    (is_tau ? b : a) += coeff;
    pos = end;
  }
  return {a, b};
}

std::ostream& operator<<(std::ostream& os, const GoldenNumber& x) { return os << x.to_compact(); }

GoldenNumber golden_mul(const GoldenNumber& x, const GoldenNumber& y) { return x * y; }
GoldenNumber golden_inverse(const GoldenNumber& x) { return x.inverse(); }
GoldenNumber galois_conjugate(const GoldenNumber& x) { return x.galois(); }
double real_embed(const GoldenNumber& x) { return x.to_double(); }

// ---------------------------------------------------------------------------
// GoldenComplex

GoldenComplex& GoldenComplex::operator+=(const GoldenComplex& y) {
  re_ += y.re_;
  im_ += y.im_;
  return *this;
}

GoldenComplex& GoldenComplex::operator-=(const GoldenComplex& y) {
  re_ -= y.re_;
  im_ -= y.im_;
  return *this;
}

GoldenComplex& GoldenComplex::operator*=(const GoldenComplex& y) {
  if (im_.is_zero() && y.im_.is_zero()) {
    re_ *= y.re_;
    return *this;
  }
  GoldenNumber re = re_ * y.re_ - im_ * y.im_;
  GoldenNumber im = re_ * y.im_ + im_ * y.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GoldenComplex GoldenComplex::inverse() const {
  if (is_zero()) throw DivisionByZero();
  const GoldenNumber n = abs2().inverse();
  return {re_ * n, -im_ * n};
}

std::string GoldenComplex::to_compact() const {
  if (im_.is_zero()) return re_.to_compact();
  std::string im = "(" + im_.to_compact() + ")*i";
  if (re_.is_zero()) return im;
  return "(" + re_.to_compact() + ")+" + im;
}

std::ostream& operator<<(std::ostream& os, const GoldenComplex& x) { return os << x.to_compact(); }

// ---------------------------------------------------------------------------
// QuadExtNumber

QuadExtNumber::QuadExtNumber(GoldenNumber base, GoldenNumber ext, GoldenNumber radicand)
    : base_(std::move(base)), ext_(std::move(ext)), radicand_(std::move(radicand)) {}

const GoldenNumber& QuadExtNumber::shared_radicand(const QuadExtNumber& y) const {
  if (ext_.is_zero()) return y.radicand_;
  if (y.ext_.is_zero()) return radicand_;
  if (radicand_ != y.radicand_) {
    throw TowerMismatch("quadratic extensions with radicands " + radicand_.to_compact() + " and " +
                        y.radicand_.to_compact());
  }
  return radicand_;
}

QuadExtNumber QuadExtNumber::operator-() const { return {-base_, -ext_, radicand_}; }

QuadExtNumber& QuadExtNumber::operator+=(const QuadExtNumber& y) {
  radicand_ = shared_radicand(y);
  base_ += y.base_;
  ext_ += y.ext_;
  return *this;
}

QuadExtNumber& QuadExtNumber::operator-=(const QuadExtNumber& y) {
  radicand_ = shared_radicand(y);
  base_ -= y.base_;
  ext_ -= y.ext_;
  return *this;
}

QuadExtNumber& QuadExtNumber::operator*=(const QuadExtNumber& y) {
  const GoldenNumber d = shared_radicand(y);
  GoldenNumber base = base_ * y.base_;
  if (!ext_.is_zero() && !y.ext_.is_zero()) base += ext_ * y.ext_ * d;
  GoldenNumber ext = base_ * y.ext_ + ext_ * y.base_;
  base_ = std::move(base);
  ext_ = std::move(ext);
  radicand_ = d;
  return *this;
}

QuadExtNumber QuadExtNumber::inverse() const {
  if (ext_.is_zero()) return QuadExtNumber(base_.inverse());
  const GoldenNumber n = base_ * base_ - ext_ * ext_ * radicand_;
  if (n.is_zero()) throw DivisionByZero();
  const GoldenNumber ninv = n.inverse();
  return {base_ * ninv, -ext_ * ninv, radicand_};
}

int QuadExtNumber::sign() const {
  if (ext_.is_zero()) return base_.sign();
  if (radicand_.sign() <= 0) throw DomainError("sign of a non-real quadratic extension element");
  return sign_plus_root<GoldenNumber>(base_, ext_, radicand_);
}

double QuadExtNumber::to_double() const {
  if (ext_.is_zero()) return base_.to_double();
  return base_.to_double() + ext_.to_double() * std::sqrt(radicand_.to_double());
}

std::string QuadExtNumber::to_compact() const {
  if (ext_.is_zero()) return base_.to_compact();
  std::string k = "(" + ext_.to_compact() + ")*k";
  if (base_.is_zero()) return k;
  return "(" + base_.to_compact() + ")+" + k;
}

bool operator==(const QuadExtNumber& x, const QuadExtNumber& y) {
  if (x.base_ != y.base_ || x.ext_ != y.ext_) return false;
  return x.ext_.is_zero() || x.radicand_ == y.radicand_;
}

std::ostream& operator<<(std::ostream& os, const QuadExtNumber& x) { return os << x.to_compact(); }

QuadExtNumber quadext_mul(const QuadExtNumber& x, const QuadExtNumber& y) { return x * y; }

}  // namespace spinindex
