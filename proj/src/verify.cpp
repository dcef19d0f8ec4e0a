#include "spinindex/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "spinindex/error.hpp"
#include "spinindex/ghat.hpp"
#include "spinindex/golden.hpp"
#include "spinindex/icosa.hpp"
#include "spinindex/quatmat.hpp"
#include "spinindex/reptheory.hpp"
#include "spinindex/spinindex.hpp"

namespace spinindex {

namespace {

using Check = std::function<std::string()>;

// A check returns its detail string and throws CheckFailed on failure.
struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw CheckFailed(what);
}

std::mt19937& rng() {
  static thread_local std::mt19937 gen;
  return gen;
}

GoldenNumber random_golden() {
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 7);
  return {make_rational(num(rng()), den(rng())), make_rational(num(rng()), den(rng()))};
}

SpinMatrix4<double> numeric(const SpinMatrix4<GoldenNumber>& x) {
  return {quaternion_cast<double>(x.a), quaternion_cast<double>(x.b), quaternion_cast<double>(x.c),
          quaternion_cast<double>(x.d)};
}

template <std::size_t N>
std::array<double, N> numeric(const std::array<GoldenNumber, N>& x) {
  std::array<double, N> r{};
  for (std::size_t i = 0; i < N; ++i) r[i] = x[i].to_double();
  return r;
}

std::complex<double> numeric(const GoldenComplex& z) { return {z.re().to_double(), z.im().to_double()}; }

// Random words in SU(1,1;H) over icosian diagonals, the order-10 twists and boosts.
std::vector<SpinMatrix4<GoldenNumber>> word_letters_4d() {
  const auto& g = BinaryIcosahedralGroup::instance();
  std::vector<SpinMatrix4<GoldenNumber>> letters = {
      SpinMatrix4<GoldenNumber>::diag(g.element(g.generator(0)), g.element(g.generator(1))),
      SpinMatrix4<GoldenNumber>::diag(g.element(g.generator(1)), GoldenQuaternion::one()),
      alpha_hat(1),
      beta_hat(2),
      boost4(GoldenQuaternion::one()),
      boost4({0, 0, 1, 0}),
  };
  const std::size_t n = letters.size();
  for (std::size_t i = 0; i < n; ++i) letters.push_back(letters[i].group_inverse());
  return letters;
}

SpinMatrix4<GoldenNumber> random_word_4d(const std::vector<SpinMatrix4<GoldenNumber>>& letters, int max_len) {
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::uniform_int_distribution<int> len(1, max_len);
  auto w = SpinMatrix4<GoldenNumber>::identity();
  for (int k = len(rng()); k > 0; --k) w = w * letters[pick(rng())];
  return w;
}

SpinMatrix2<GoldenComplex> random_word_2d(int max_len) {
  const std::vector<SpinMatrix2<GoldenComplex>> letters = {
      SpinMatrix2<GoldenComplex>::diag(GoldenComplex(GoldenNumber::rational(3, 5), GoldenNumber::rational(4, 5))),
      SpinMatrix2<GoldenComplex>::diag(GoldenComplex::i()),
      boost2(GoldenComplex(1)),
      boost2(GoldenComplex::i()),
      boost2(GoldenComplex(-1)),
  };
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::uniform_int_distribution<int> len(1, max_len);
  auto w = SpinMatrix2<GoldenComplex>::identity();
  for (int k = len(rng()); k > 0; --k) w = w * letters[pick(rng())];
  return w;
}

// ---------------------------------------------------------------------------
// exactfield

std::string check_tau_relations() {
  const GoldenNumber t = GoldenNumber::tau();
  expect(t * t == t + GoldenNumber(1), "tau^2 != tau + 1");
  expect(t.galois() == GoldenNumber(1) - t, "galois(tau) != 1 - tau");
  expect(GoldenNumber::sqrt5() * GoldenNumber::sqrt5() == GoldenNumber(5), "sqrt5^2 != 5");
  expect(t.norm() == BigRational(-1), "N(tau) != -1");
  expect(t.sign() > 0 && t.galois().sign() < 0, "sign of tau or its conjugate is wrong");
  return "tau^2 = tau + 1, N(tau) = -1, sqrt5^2 = 5";
}

std::string check_field_axioms() {
  constexpr int kSamples = 300;
  for (int n = 0; n < kSamples; ++n) {
    const GoldenNumber x = random_golden(), y = random_golden(), z = random_golden();
    expect((x + y) * z == x * z + y * z, "distributivity fails at " + x.to_compact());
    expect((x * y) * z == x * (y * z), "associativity fails at " + x.to_compact());
    expect((x * y).galois() == x.galois() * y.galois(), "galois is not multiplicative");
    expect((x * y).norm() == x.norm() * y.norm(), "norm is not multiplicative");
    if (!x.is_zero()) expect(x * x.inverse() == GoldenNumber(1), "x * x^-1 != 1 at " + x.to_compact());
    const int s = (x - y).sign();
    const double d = x.to_double() - y.to_double();
    expect(s == (d > 1e-12 ? 1 : (d < -1e-12 ? -1 : s)), "exact sign disagrees with floating point");
  }
  bool threw = false;
  try {
    (void)GoldenNumber().inverse();
  } catch (const DivisionByZero&) {
    threw = true;
  }
  expect(threw, "inverting 0 did not throw");
  return std::to_string(kSamples) + " random triples";
}

std::string check_golden_parse_roundtrip() {
  constexpr int kSamples = 200;
  for (int n = 0; n < kSamples; ++n) {
    const GoldenNumber x = random_golden();
    expect(GoldenNumber::parse(x.to_string()) == x, "to_string round trip fails for " + x.to_string());
    expect(GoldenNumber::parse(x.to_compact()) == x, "to_compact round trip fails for " + x.to_compact());
  }
  return std::to_string(kSamples) + " values";
}

std::string check_quadratic_tower() {
  const GoldenNumber d = kappa_squared();
  const QuadExtNumber kappa = QuadExtNumber::root(d);
  expect(kappa * kappa == QuadExtNumber(d), "kappa^2 != 1 + 3 tau");
  for (int n = 0; n < 100; ++n) {
    const QuadExtNumber x(random_golden(), random_golden(), d);
    if (x.is_zero()) continue;
    expect(x * x.inverse() == QuadExtNumber(1), "x * x^-1 != 1 in Q(tau, kappa)");
    const double v = x.base().to_double() + x.ext().to_double() * std::sqrt(d.to_double());
    expect(std::abs(v - x.to_double()) < 1e-9, "real embedding is wrong");
    if (std::abs(v) > 1e-9) expect(x.sign() == (v > 0 ? 1 : -1), "exact sign disagrees with floating point");
  }
  bool threw = false;
  try {
    (void)(QuadExtNumber::root(d) * QuadExtNumber::root(GoldenNumber(2)));
  } catch (const TowerMismatch&) {
    threw = true;
  }
  expect(threw, "mixing radicands did not throw");
  return "kappa^2 = 1 + 3 tau, inverses, signs, tower mismatch";
}

// ---------------------------------------------------------------------------
// quatmat

std::string check_eta4_homomorphism() {
  const auto letters = word_letters_4d();
  constexpr int kPairs = 200;
  for (int n = 0; n < kPairs; ++n) {
    const auto a = random_word_4d(letters, 3);
    const auto b = random_word_4d(letters, 3);
    expect(a.is_su11() && b.is_su11(), "word left SU(1,1;H)");
    expect(eta4(a * b) == eta4(a) * eta4(b), "eta4(AB) != eta4(A) eta4(B)");
  }
  return std::to_string(kPairs) + " word pairs";
}

std::string check_eta4_lorentz_and_sign() {
  const auto letters = word_letters_4d();
  constexpr int kWords = 60;
  for (int n = 0; n < kWords; ++n) {
    const auto a = random_word_4d(letters, 4);
    const auto m = eta4(a);
    expect(is_orthochronous_lorentz(m), "eta4 output is not in SO+(4,1)");
    expect(eta4(-a) == m, "eta4(-A) != eta4(A)");
  }
  return std::to_string(kWords) + " words";
}

std::string check_eta2_homomorphism() {
  constexpr int kPairs = 200;
  for (int n = 0; n < kPairs; ++n) {
    const auto a = random_word_2d(4);
    const auto b = random_word_2d(4);
    const auto m = eta2(a);
    expect(eta2(a * b) == m * eta2(b), "eta2(AB) != eta2(A) eta2(B)");
    expect(is_orthochronous_lorentz(m), "eta2 output is not in SO+(2,1)");
    expect(eta2(-a) == m, "eta2(-A) != eta2(A)");
  }
  return std::to_string(kPairs) + " word pairs";
}

std::string check_ball_equivariance() {
  const auto letters = word_letters_4d();
  constexpr int kSamples = 40;
  std::uniform_int_distribution<long> num(-3, 3);
  for (int n = 0; n < kSamples; ++n) {
    const auto a = random_word_4d(letters, 2);
    const GoldenQuaternion q{make_rational(num(rng()), 8), make_rational(num(rng()), 8), make_rational(num(rng()), 8),
                             make_rational(num(rng()), 8)};
    expect(zeta(act_ball(a, q)) == eta4(a) * zeta(q), "zeta(A.q) != eta4(A) zeta(q)");
    expect(zeta_inv(zeta(q)) == q, "zeta_inv(zeta(q)) != q");
  }
  const auto s = davis_sigma_data();
  const auto sigma_num = to_numeric(s.sigma_hat);
  double worst = 0;
  std::uniform_real_distribution<double> coord(-0.4, 0.4);
  for (int n = 0; n < kSamples; ++n) {
    const Quaternion<double> q{coord(rng()), coord(rng()), coord(rng()), coord(rng())};
    const auto lhs = zeta(act_ball(sigma_num, q));
    std::array<double, 5> rhs{};
    const auto zq = zeta(q);
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 5; ++j) rhs[i] += s.sigma(i, j).to_double() * zq[j];
    }
    for (std::size_t i = 0; i < 5; ++i) worst = std::max(worst, std::abs(lhs[i] - rhs[i]));
  }
  expect(worst < 1e-9, "sigma-hat ball action deviates by " + std::to_string(worst));
  std::ostringstream out;
  out << kSamples << " exact samples; sigma-hat numeric deviation " << worst;
  return out.str();
}

std::string check_davis_lifts() {
  const auto s = davis_sigma_data();
  expect(s.sigma_hat.is_su11(), "sigma-hat is not in SU(1,1;H)");
  expect(is_orthochronous_lorentz(s.sigma), "sigma is not in SO+(4,1)");
  expect(eta4(s.sigma_hat) == s.sigma, "eta4(sigma-hat) != sigma");
  expect(s.sigma_hat * s.sigma_hat == -ScaledSpinMatrix4(), "sigma-hat^2 != -I");
  for (int i : {1, 2}) {
    expect(verify_lift(alpha_hat(i), alpha_matrix(i)), "eta4(alpha-hat) != alpha for i = " + std::to_string(i));
    expect(verify_lift(beta_hat(i), beta_matrix(i)), "eta4(beta-hat) != beta for i = " + std::to_string(i));
    expect(is_orthochronous_lorentz(alpha_matrix(i)) && is_orthochronous_lorentz(beta_matrix(i)),
           "alpha or beta is not in SO+(4,1)");
  }
  return "sigma, alpha_1, alpha_2, beta_1, beta_2";
}

// ---------------------------------------------------------------------------
// icosa

std::string check_icosa_classes() {
  const auto& g = BinaryIcosahedralGroup::instance();
  expect(g.elements().size() == 120, "2I has " + std::to_string(g.elements().size()) + " elements");
  std::array<int, kIcosaClassCount> sizes{};
  for (IcosianIndex x = 0; x < 120; ++x) {
    const IcosaClass c = g.class_of(x);
    ++sizes[index_of(c)];
    expect(g.element(x).norm2() == GoldenNumber(1), "element is not a unit quaternion");
    expect(g.element(x).re() == class_real_part(c), "real part disagrees with class table");
    expect(g.order(x) == class_element_order(c), "element order disagrees with class table");
  }
  const std::array<int, kIcosaClassCount> expected = {1, 1, 20, 30, 12, 12, 20, 12, 12};
  for (auto c : kIcosaClasses) {
    expect(sizes[index_of(c)] == expected[index_of(c)] && class_size(c) == expected[index_of(c)],
           "size of class " + std::string(class_label(c)));
  }
  for (IcosianIndex x = 0; x < 120; ++x) {
    for (IcosianIndex y = 0; y < 120; ++y) {
      expect(g.class_of(g.mul(g.mul(y, x), g.inv(y))) == g.class_of(x), "classes are not conjugation invariant");
    }
  }
  return "120 elements, sizes 1,1,20,30,12,12,20,12,12";
}

std::string check_icosa_words() {
  const auto& g = BinaryIcosahedralGroup::instance();
  for (IcosianIndex x = 0; x < 120; ++x) {
    IcosianIndex acc = g.identity();
    for (std::size_t letter : g.word_decompose(x, g.generators())) acc = g.mul(acc, g.generators()[letter]);
    expect(acc == x, "word decomposition does not evaluate back");
  }
  bool threw = false;
  try {
    (void)g.index_of({GoldenNumber::rational(1, 3), 0, 0, 0});
  } catch (const MembershipError&) {
    threw = true;
  }
  expect(threw, "non-icosian accepted");
  return "all 120 words";
}

std::string check_icosa_character_table() {
  int count = 0;
  for (const IcosaRep rep : kIcosaReps) {
    const auto& computed = character_2I(rep);
    for (auto c : kIcosaClasses) {
      expect(computed[index_of(c)] == GoldenComplex(char_2I(rep, c)),
             "chi_" + std::string(rep_label(rep)) + "(" + std::string(class_label(c)) + ")");
      ++count;
    }
    expect(irrep_2I(rep).is_homomorphism(), std::string(rep_label(rep)) + " is not a homomorphism");
  }
  return std::to_string(count) + " values";
}

std::string check_alpha() {
  const auto& g = BinaryIcosahedralGroup::instance();
  for (IcosianIndex x = 0; x < 120; ++x) {
    for (IcosianIndex y = 0; y < 120; ++y) {
      expect(g.alpha(g.mul(x, y)) == g.mul(g.alpha(x), g.alpha(y)), "alpha is not a homomorphism");
    }
  }
  const IcosianIndex k = g.index_of({0, 0, 0, 1});
  for (IcosianIndex x = 0; x < 120; ++x) {
    const IcosianIndex a2 = g.alpha(g.alpha(x));
    expect(g.alpha(g.alpha(a2)) == x, "alpha^4 != id");
    expect(a2 == g.mul(g.mul(k, x), g.inv(k)), "alpha^2 is not conjugation by k");
    expect(g.alpha_inv(g.alpha(x)) == x, "alpha_inv is not inverse");
  }
  const IcosianIndex w = g.class_representative(IcosaClass::C10A);
  expect(g.class_of(g.alpha(w)) == IcosaClass::C10B, "alpha does not send 10A to 10B");
  return "14400 pairs, alpha^4 = id, alpha^2 = conj by k, 10A -> 10B";
}

// ---------------------------------------------------------------------------
// ghat

std::string check_ghat_structure() {
  const auto& G = GhatGroup::instance();
  std::size_t total = 0, self_minus = 0;
  for (std::size_t c = 0; c < G.class_count(); ++c) {
    total += G.classes()[c].size();
    if (G.minus_class(c) == c) ++self_minus;
    expect(G.minus_class(G.minus_class(c)) == c, "minus pairing is not an involution");
    expect(G.classes()[c].order == G.order(G.classes()[c].representative), "class order");
  }
  expect(total == 28800, "class sizes sum to " + std::to_string(total));
  expect(G.class_count() == 54, std::to_string(G.class_count()) + " classes");
  expect(self_minus == 14, std::to_string(self_minus) + " self-minus classes");
  expect(G.mul(G.s(), G.s()) == G.identity(), "s^2 != 1");
  expect(G.mul(G.minus_one(), G.minus_one()) == G.identity(), "(-1)^2 != 1");

  std::uniform_int_distribution<int> el(0, 119), co(0, 1);
  auto random_element = [&] {
    return GhatElement{static_cast<IcosianIndex>(el(rng())), static_cast<IcosianIndex>(el(rng())), co(rng()) == 1};
  };
  for (int n = 0; n < 2000; ++n) {
    const auto x = random_element(), y = random_element(), z = random_element();
    expect(G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z)), "multiplication is not associative");
    expect(G.mul(x, G.inverse(x)) == G.identity(), "inverse");
    expect(G.mul(G.minus_one(), x) == G.mul(x, G.minus_one()), "-1 is not central");
    expect(G.class_index(G.mul(G.mul(y, x), G.inverse(y))) == G.class_index(x), "class not conjugation invariant");
  }
  return "order 28800, 54 classes, 14 self-minus";
}

std::string check_ghat_table_columns() {
  const auto& G = GhatGroup::instance();
  const auto rows = parse_davis_rows(bundled_davis_json());
  for (const auto& row : rows) {
    const auto c = G.class_index_by_name(row.name);
    const auto& cls = G.classes()[c];
    expect(cls.order == row.order, row.name + ": order");
    expect(cls.size() == row.size, row.name + ": size");
    expect(G.classes()[G.minus_class(c)].name == row.minus, row.name + ": minus class");
    const auto m = G.minus_class(c);
    expect(G.classes()[m].size() == cls.size(), row.name + ": minus class size");
  }
  return std::to_string(rows.size()) + " listed rows and their minus classes";
}

// ---------------------------------------------------------------------------
// reptheory

std::string check_chartable_shape() {
  const auto& table = chartable_ghat();
  std::vector<int> spin, plain;
  long sum = 0;
  for (const auto& chi : table) {
    (chi.spinorial ? spin : plain).push_back(chi.dimension);
    sum += static_cast<long>(chi.dimension) * chi.dimension;
    expect(chi.values[0] == GoldenComplex(chi.dimension), chi.label.name() + ": value at 1 != dimension");
  }
  std::sort(spin.begin(), spin.end());
  const std::vector<int> expected = {4, 4, 8, 12, 12, 12, 12, 12, 16, 16, 20, 20, 24, 24, 32, 36, 36, 40, 48, 60};
  expect(table.size() == 54, std::to_string(table.size()) + " irreducibles");
  expect(spin == expected, "spinorial dimension multiset");
  expect(plain.size() == 34, std::to_string(plain.size()) + " nonspinorial irreducibles");
  expect(sum == 28800, "sum of squared dimensions is " + std::to_string(sum));
  return "20 spinorial + 34 nonspinorial, sum dim^2 = 28800";
}

std::string check_chartable_orthogonality() {
  const auto report = check_orthogonality(chartable_ghat());
  expect(report.ok(), report.detail);
  return "rows orthonormal, columns orthogonal";
}

std::string check_twisted_partners() {
  const auto& g = BinaryIcosahedralGroup::instance();
  int invariant = 0;
  for (const IcosaRep r1 : kIcosaReps) {
    for (const IcosaRep r2 : kIcosaReps) {
      const auto [t1, t2] = twisted_partner(r1, r2);
      expect(t1 == rep_prime(r2) && t2 == rep_prime(r1), "twisted partner of " + std::string(rep_label(r1)) + "⊗" +
                                                             std::string(rep_label(r2)));
      for (IcosianIndex p = 0; p < 120; p += 7) {
        for (IcosianIndex q = 0; q < 120; q += 11) {
          const GoldenComplex lhs = character_2I(t1)[index_of(g.class_of(p))] * character_2I(t2)[index_of(g.class_of(q))];
          const GoldenComplex rhs = character_2I(r1)[index_of(g.class_of(g.alpha_inv(q)))] *
                                    character_2I(r2)[index_of(g.class_of(g.alpha(p)))];
          expect(lhs == rhs, "twisted character mismatch");
        }
      }
      if (t1 == r1 && t2 == r2) ++invariant;
    }
  }
  expect(invariant == 9, std::to_string(invariant) + " s-invariant products");
  return "81 products, 9 s-invariant";
}

// ---------------------------------------------------------------------------
// spinindex

std::string check_nu_oracle_4d() {
  const auto probes = standard_nu_probes_4d();
  double worst = 0;
  for (const auto& p : probes) {
    const double exact = nu_isolated_4d(p.point).re().to_double();
    worst = std::max(worst, std::abs(exact - nu_numeric_oracle(numeric(p.point.phi_hat), numeric(p.point.x))));
  }
  expect(probes.size() >= 20, "too few probes");
  expect(worst < 1e-9, "deviation " + std::to_string(worst));
  std::ostringstream out;
  out << probes.size() << " probes, max deviation " << worst;
  return out.str();
}

std::string check_nu_oracle_2d() {
  const auto probes = standard_nu_probes_2d();
  double worst = 0;
  for (const auto& p : probes) {
    const auto exact = nu_isolated_2d(p.phi_hat, p.x);
    expect(exact.re().is_zero(), "2-D spin value is not imaginary");
    const SpinMatrix2<std::complex<double>> m{numeric(p.phi_hat.a), numeric(p.phi_hat.b), numeric(p.phi_hat.c),
                                              numeric(p.phi_hat.d)};
    worst = std::max(worst, std::abs(numeric(exact) - nu_numeric_oracle_2d(m, numeric(p.x))));
  }
  expect(worst < 1e-9, "deviation " + std::to_string(worst));
  std::ostringstream out;
  out << probes.size() << " probes, max deviation " << worst;
  return out.str();
}

std::string check_two_fixed_point_rows() {
  const auto& G = GhatGroup::instance();
  const auto rows = load_davis_rows();
  int count = 0;
  for (const auto& row : rows) {
    if (row.provenance != Provenance::ComputedTwoFixedPoints) continue;
    const auto value = two_fixed_point_spin(G.classes()[G.class_index_by_name(row.name)]);
    expect(value == row.spin, row.name + ": " + value.to_compact() + " vs listed " + row.spin.to_compact());
    const auto& v = value;
    expect(v.is_zero() || v == GoldenNumber::sqrt5() || v == -GoldenNumber::sqrt5(), row.name + ": not 0 or ±√5");
    ++count;
  }
  const auto anchor = [&](const char* name) {
    return two_fixed_point_spin(G.classes()[G.class_index_by_name(name)]);
  };
  expect(anchor("1×3+3×1").is_zero(), "1×3+3×1 is not 0");
  expect(anchor("1×10A+10B×1") == GoldenNumber::sqrt5(), "1×10A+10B×1 is not √5");
  return std::to_string(count) + " rows";
}

std::string check_spin_character() {
  const auto& G = GhatGroup::instance();
  const auto table = davis_spin_character();
  expect(table.entries.size() == 54, "spin table has " + std::to_string(table.entries.size()) + " entries");
  for (std::size_t c = 0; c < 54; ++c) {
    const auto m = G.minus_class(c);
    expect(table.entries[m].spin == -table.entries[c].spin, table.entries[c].name + ": antisymmetry");
    if (m == c) expect(table.entries[c].spin.is_zero(), table.entries[c].name + ": self-minus but nonzero");
  }
  return "54 entries, antisymmetric, self-minus zero";
}

std::string check_decomposition() {
  const auto d = decompose_davis_index();
  const auto& table = chartable_ghat();
  expect(d.positive && d.negative, "not a difference of two irreducibles");
  const auto& pos = table[*d.positive];
  const auto& neg = table[*d.negative];
  expect(pos.label.name() == "(2′⊗3′)⊕(3⊗2)", "positive part is " + pos.label.name());
  expect(neg.label.name() == "(2⊗3)⊕(3′⊗2′)", "negative part is " + neg.label.name());
  expect(pos.spinorial && neg.spinorial && pos.dimension == 12 && neg.dimension == 12, "dimensions");
  expect(d.norm == GoldenComplex(2), "norm is " + d.norm.to_compact());
  return "+ " + pos.label.name() + ", − " + neg.label.name() + ", norm 2";
}

std::string check_corruption_detected() {
  int detected = 0, tried = 0;
  const auto rows = parse_davis_rows(bundled_davis_json());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].provenance != Provenance::Recorded) continue;
    auto bad = rows;
    bad[i].spin += GoldenNumber(1);
    ++tried;
    try {
      (void)decompose_davis_index(davis_spin_character(bad));
    } catch (const DataInconsistency&) {
      ++detected;
    }
  }
  expect(tried > 0 && detected == tried, std::to_string(detected) + " of " + std::to_string(tried) + " detected");
  return std::to_string(tried) + " perturbed recorded rows rejected";
}

const std::map<std::string, Check>& registry() {
  static const std::map<std::string, Check> checks = {
      {"exactfield.field_axioms", check_field_axioms},
      {"exactfield.parse_roundtrip", check_golden_parse_roundtrip},
      {"exactfield.quadratic_tower", check_quadratic_tower},
      {"exactfield.tau_relations", check_tau_relations},
      {"quatmat.ball_equivariance", check_ball_equivariance},
      {"quatmat.davis_lifts", check_davis_lifts},
      {"quatmat.eta2_homomorphism", check_eta2_homomorphism},
      {"quatmat.eta4_homomorphism", check_eta4_homomorphism},
      {"quatmat.eta4_lorentz_sign", check_eta4_lorentz_and_sign},
      {"icosa.alpha", check_alpha},
      {"icosa.character_table", check_icosa_character_table},
      {"icosa.classes", check_icosa_classes},
      {"icosa.words", check_icosa_words},
      {"ghat.structure", check_ghat_structure},
      {"ghat.table_columns", check_ghat_table_columns},
      {"reptheory.chartable_shape", check_chartable_shape},
      {"reptheory.orthogonality", check_chartable_orthogonality},
      {"reptheory.twisted_partners", check_twisted_partners},
      {"spinindex.corruption_detected", check_corruption_detected},
      {"spinindex.decomposition", check_decomposition},
      {"spinindex.nu_oracle_2d", check_nu_oracle_2d},
      {"spinindex.nu_oracle_4d", check_nu_oracle_4d},
      {"spinindex.spin_character", check_spin_character},
      {"spinindex.two_fixed_point_rows", check_two_fixed_point_rows},
  };
  return checks;
}

}  // namespace

std::vector<std::string> verification_check_names() {
  std::vector<std::string> names;
  for (const auto& [name, check] : registry()) names.push_back(name);
  return names;
}

CheckResult run_check(const std::string& name) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw DomainError("unknown check: " + name);
  std::seed_seq seed(name.begin(), name.end());
  rng().seed(seed);
  CheckResult result{name, false, ""};
  try {
    result.detail = it->second();
    result.passed = true;
  } catch (const std::exception& e) {
    result.detail = e.what();
  }
  return result;
}

std::vector<CheckResult> run_verification_suite() {
  std::vector<CheckResult> results;
  for (const auto& name : verification_check_names()) results.push_back(run_check(name));
  return results;
}

}  // namespace spinindex
