#include "spinindex/spinindex.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "spinindex/error.hpp"

namespace spinindex {

namespace {

GoldenNumber half_golden(long a, long b) { return {make_rational(a, 2), make_rational(b, 2)}; }

bool is_unit(const GoldenQuaternion& q) { return q.norm2() == GoldenNumber(1); }

bool on_hyperboloid(const HyperboloidPoint4<GoldenNumber>& x) {
  const GoldenNumber form = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3] - x[4] * x[4];
  return form == GoldenNumber(-1) && x[4].sign() > 0;
}

bool on_hyperboloid(const HyperboloidPoint2<GoldenNumber>& x) {
  return x[0] * x[0] + x[1] * x[1] - x[2] * x[2] == GoldenNumber(-1) && x[2].sign() > 0;
}

GoldenNumber half_inverse(const GoldenNumber& denom, const char* what) {
  if (denom.is_zero()) throw NonIsolatedFixedPoint(what);
  return (GoldenNumber(2) * denom).inverse();
}

// Rows of a matrix written as one half of integer pairs (a, b) = a + b tau.
using HalfRows = std::array<std::array<std::pair<long, long>, 5>, 5>;

LorentzMatrix5<GoldenNumber> from_half_rows(const HalfRows& rows) {
  LorentzMatrix5<GoldenNumber> m;
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) m(i, j) = half_golden(rows[i][j].first, rows[i][j].second);
  }
  return m;
}

GoldenQuaternion twist_generator(int i) {
  if (i != 1 && i != 2) throw DomainError("generator index must be 1 or 2");
  const long s = i == 1 ? 1 : -1;
  return {half_golden(0, 1), half_golden(1, 0), half_golden(-s, s), 0};
}

}  // namespace

SpinValue nu_diag_4d(const GoldenQuaternion& p, const GoldenQuaternion& q) {
  if (!is_unit(p) || !is_unit(q)) throw DomainError("diagonal entries must be unit quaternions");
  return {half_inverse(p.re() - q.re(), "Re(p) = Re(q): the fixed point is not isolated")};
}

SpinValue nu_isolated_4d(const IsolatedFixedPoint4& fp) {
  if (!on_hyperboloid(fp.x)) throw InconsistentInput("point is not on the upper sheet of the hyperboloid");
  const auto phi = eta4(fp.phi_hat);
  if (phi * fp.x != fp.x) throw InconsistentInput("the point is not fixed");
  const GoldenNumber denom = fp.phi_hat.a.re() - fp.phi_hat.d.re();
  return {fp.x[4] * half_inverse(denom, "Re(A11) = Re(A22): the fixed point is not isolated")};
}

SpinValue nu_diag_2d(const GoldenComplex& u) {
  if (u.abs2() != GoldenNumber(1)) throw DomainError("diagonal entry must be a unit complex number");
  // 1 / (2 Im(u) i) = -i / (2 Im(u))
  return {GoldenNumber(), -half_inverse(u.im(), "Im(u) = 0: the fixed point is not isolated")};
}

SpinValue nu_isolated_2d(const SpinMatrix2<GoldenComplex>& phi_hat, const HyperboloidPoint2<GoldenNumber>& x) {
  if (!on_hyperboloid(x)) throw InconsistentInput("point is not on the upper sheet of the hyperboloid");
  const auto phi = eta2(phi_hat);
  if (phi * x != x) throw InconsistentInput("the point is not fixed");
  return {GoldenNumber(), -x[2] * half_inverse(phi_hat.a.im(), "Im(A11) = 0: the fixed point is not isolated")};
}

SpinMatrix4<GoldenNumber> boost4(const GoldenQuaternion& u) {
  if (!is_unit(u)) throw DomainError("boost direction must be a unit quaternion");
  const GoldenNumber c = GoldenNumber::rational(5, 4);
  const GoldenNumber s = GoldenNumber::rational(3, 4);
  return {GoldenQuaternion::real(c), u * s, u.conj() * s, GoldenQuaternion::real(c)};
}

SpinMatrix2<GoldenComplex> boost2(const GoldenComplex& u) {
  if (u.abs2() != GoldenNumber(1)) throw DomainError("boost direction must be a unit complex number");
  const GoldenComplex c(GoldenNumber::rational(5, 4));
  const GoldenComplex s(GoldenNumber::rational(3, 4));
  return {c, u * s, u.conj() * s, c};
}

std::vector<NuProbe4> standard_nu_probes_4d() {
  const auto& g = BinaryIcosahedralGroup::instance();
  const HyperboloidPoint4<GoldenNumber> apex = {0, 0, 0, 0, 1};
  std::vector<NuProbe4> diagonal;
  for (auto x : kIcosaClasses) {
    for (auto y : kIcosaClasses) {
      if (class_real_part(x) == class_real_part(y)) continue;
      const auto& p = g.element(g.class_representative(x));
      const auto& q = g.element(g.class_representative(y));
      diagonal.push_back({"diag(" + std::string(class_label(x)) + "," + std::string(class_label(y)) + ")",
                          {apex, SpinMatrix4<GoldenNumber>::diag(p, q)}});
    }
  }
  const std::vector<GoldenQuaternion> directions = {
      GoldenQuaternion::one(),
      {0, 1, 0, 0},
      {0, 0, 0, 1},
      g.element(g.generator(0)),
      g.element(g.generator(1)),
      {half_golden(1, 0), half_golden(1, 0), half_golden(-1, 0), half_golden(1, 0)},
  };
  std::vector<NuProbe4> out = diagonal;
  for (std::size_t k = 0; k < diagonal.size(); k += 3) {
    SpinMatrix4<GoldenNumber> h = boost4(directions[k % directions.size()]);
    std::string label = "B" + std::to_string(k % directions.size());
    if (k % 2 == 1) {
      h = h * boost4(directions[(k + 1) % directions.size()]);
      label += "B" + std::to_string((k + 1) % directions.size());
    }
    const auto& base = diagonal[k].point;
    const HyperboloidPoint4<GoldenNumber> x = eta4(h) * base.x;
    out.push_back({label + " " + diagonal[k].label, {x, h * base.phi_hat * h.group_inverse()}});
  }
  return out;
}

std::vector<NuProbe2> standard_nu_probes_2d() {
  auto rational_unit = [](long a, long b, long c) {
    return GoldenComplex(GoldenNumber::rational(a, c), GoldenNumber::rational(b, c));
  };
  const std::vector<GoldenComplex> units = {
      GoldenComplex::i(),     -GoldenComplex::i(),      rational_unit(3, 4, 5),
      rational_unit(-3, 4, 5), rational_unit(5, -12, 13), rational_unit(8, 15, 17),
      rational_unit(-20, -21, 29)};
  const std::vector<GoldenComplex> directions = {GoldenComplex(1), GoldenComplex::i(), rational_unit(3, 4, 5),
                                                 rational_unit(-12, 5, 13)};
  const HyperboloidPoint2<GoldenNumber> apex = {0, 0, 1};
  std::vector<NuProbe2> out;
  for (const auto& u : units) out.push_back({"diag(" + u.to_compact() + ")", SpinMatrix2<GoldenComplex>::diag(u), apex});
  for (std::size_t k = 0; k < units.size(); ++k) {
    const auto h = boost2(directions[k % directions.size()]) * boost2(directions[(k + 1) % directions.size()]);
    const HyperboloidPoint2<GoldenNumber> x = eta2(h) * apex;
    out.push_back({"conjugated diag(" + units[k].to_compact() + ")",
                   h * SpinMatrix2<GoldenComplex>::diag(units[k]) * h.group_inverse(), x});
  }
  return out;
}

// ---------------------------------------------------------------------------

GoldenNumber kappa_squared() { return {1, 3}; }

DavisSigma davis_sigma_data() {
  const GoldenNumber d = kappa_squared();
  auto g = [](long a, long b) { return QuadExtNumber(GoldenNumber(BigRational(a), BigRational(b))); };
  auto k = [&](long a, long b) { return QuadExtNumber(0, GoldenNumber(BigRational(a), BigRational(b)), d); };
  DavisSigma out;
  auto& s = out.sigma;
  s.m = {{{g(-4, -7), g(-1, -3), 0, g(-1, -1), k(2, 3)},
          {g(-1, -3), g(-1, -1), 0, 0, k(1, 1)},
          {0, 0, 1, 0, 0},
          {g(-1, -1), 0, 0, 0, k(1, 0)},
          {k(-2, -3), k(-1, -1), 0, k(-1, 0), g(5, 8)}}};
  using Q = Quaternion<QuadExtNumber>;
  const Q a{0, k(1, 1), k(1, 0), k(0, -1)};
  const Q b{g(0, 1), g(-1, -3), 0, g(1, 2)};
  const Q c{g(0, 1), g(1, 3), 0, g(-1, -2)};
  const Q dd{0, k(-1, -1), k(1, 0), k(0, 1)};
  out.sigma_hat = ScaledSpinMatrix4({a, b, c, dd}, true);
  return out;
}

SpinMatrix4<GoldenNumber> alpha_hat(int i) {
  return SpinMatrix4<GoldenNumber>::diag(twist_generator(i), GoldenQuaternion::one());
}

SpinMatrix4<GoldenNumber> beta_hat(int i) {
  return SpinMatrix4<GoldenNumber>::diag(GoldenQuaternion::one(), twist_generator(i));
}

LorentzMatrix5<GoldenNumber> alpha_matrix(int i) {
  static const HalfRows a1 = {{{{{0, 1}, {-1, 0}, {1, -1}, {0, 0}, {0, 0}}},
                               {{{1, 0}, {0, 1}, {0, 0}, {-1, 1}, {0, 0}}},
                               {{{-1, 1}, {0, 0}, {0, 1}, {-1, 0}, {0, 0}}},
                               {{{0, 0}, {1, -1}, {1, 0}, {0, 1}, {0, 0}}},
                               {{{0, 0}, {0, 0}, {0, 0}, {0, 0}, {2, 0}}}}};
  static const HalfRows a2 = {{{{{0, 1}, {-1, 0}, {-1, 1}, {0, 0}, {0, 0}}},
                               {{{1, 0}, {0, 1}, {0, 0}, {1, -1}, {0, 0}}},
                               {{{1, -1}, {0, 0}, {0, 1}, {-1, 0}, {0, 0}}},
                               {{{0, 0}, {-1, 1}, {1, 0}, {0, 1}, {0, 0}}},
                               {{{0, 0}, {0, 0}, {0, 0}, {0, 0}, {2, 0}}}}};
  if (i != 1 && i != 2) throw DomainError("generator index must be 1 or 2");
  return from_half_rows(i == 1 ? a1 : a2);
}

LorentzMatrix5<GoldenNumber> beta_matrix(int i) {
  static const HalfRows b1 = {{{{{0, 1}, {1, 0}, {-1, 1}, {0, 0}, {0, 0}}},
                               {{{-1, 0}, {0, 1}, {0, 0}, {-1, 1}, {0, 0}}},
                               {{{1, -1}, {0, 0}, {0, 1}, {-1, 0}, {0, 0}}},
                               {{{0, 0}, {1, -1}, {1, 0}, {0, 1}, {0, 0}}},
                               {{{0, 0}, {0, 0}, {0, 0}, {0, 0}, {2, 0}}}}};
  static const HalfRows b2 = {{{{{0, 1}, {1, 0}, {1, -1}, {0, 0}, {0, 0}}},
                               {{{-1, 0}, {0, 1}, {0, 0}, {1, -1}, {0, 0}}},
                               {{{-1, 1}, {0, 0}, {0, 1}, {-1, 0}, {0, 0}}},
                               {{{0, 0}, {-1, 1}, {1, 0}, {0, 1}, {0, 0}}},
                               {{{0, 0}, {0, 0}, {0, 0}, {0, 0}, {2, 0}}}}};
  if (i != 1 && i != 2) throw DomainError("generator index must be 1 or 2");
  return from_half_rows(i == 1 ? b1 : b2);
}

// ---------------------------------------------------------------------------

std::string_view provenance_label(Provenance p) {
  switch (p) {
    case Provenance::TrivialIdentity: return "trivial-identity";
    case Provenance::ComputedTwoFixedPoints: return "computed-two-fixed-points";
    case Provenance::ForcedZeroSelfMinus: return "forced-zero-self-minus";
    case Provenance::ForcedZeroSurface: return "forced-zero-surface";
    case Provenance::Recorded: return "recorded";
  }
  return {};
}

Provenance parse_provenance(std::string_view label) {
  for (auto p : {Provenance::TrivialIdentity, Provenance::ComputedTwoFixedPoints, Provenance::ForcedZeroSelfMinus,
                 Provenance::ForcedZeroSurface, Provenance::Recorded}) {
    if (provenance_label(p) == label) return p;
  }
  throw ParseError("unknown provenance: " + std::string(label));
}

GoldenNumber two_fixed_point_spin(const GhatClass& c) {
  if (c.coset) throw NotApplicable("class " + c.name + " lies outside 2I x 2I");
  const IcosaClass x = c.left;
  const IcosaClass y = c.right;
  const IcosaClass y_star = class_twist(y);
  const IcosaClass x_star = class_twist(x);
  const char* why = "equal real parts: the fixed points are not isolated";
  return half_inverse(class_real_part(x) - class_real_part(y), why) +
         half_inverse(class_real_part(y_star) - class_real_part(x_star), why);
}

SpinValue spin_number_two_fp(std::size_t class_index, const std::vector<DavisRow>& rows) {
  const auto& group = GhatGroup::instance();
  if (class_index >= group.class_count()) throw DomainError("class index out of range");
  const GhatClass& c = group.classes()[class_index];
  const auto it = std::find_if(rows.begin(), rows.end(), [&](const DavisRow& r) { return r.name == c.name; });
  if (it == rows.end() || it->fp_count != 2 || c.coset) {
    throw NotApplicable("class " + c.name + " is not listed with exactly two fixed points");
  }
  return {two_fixed_point_spin(c)};
}

ClassFunction DavisSpinTable::character() const {
  ClassFunction f;
  f.reserve(entries.size());
  for (const auto& e : entries) f.emplace_back(e.spin);
  return f;
}

DavisSpinTable davis_spin_character(const std::vector<DavisRow>& rows) {
  const auto& group = GhatGroup::instance();
  const std::size_t n = group.class_count();
  std::vector<std::optional<DavisSpinEntry>> slots(n);

  for (const auto& row : rows) {
    std::size_t c;
    try {
      c = group.class_index_by_name(row.name);
    } catch (const ParseError&) {
      throw DataInconsistency("data row names no class of the group: " + row.name);
    }
    const GhatClass& cls = group.classes()[c];
    if (row.order != cls.order || row.size != cls.size()) {
      throw DataInconsistency("order or size of " + row.name + " disagrees with the group");
    }
    if (group.classes()[group.minus_class(c)].name != row.minus) {
      throw DataInconsistency("minus class of " + row.name + " is " + group.classes()[group.minus_class(c)].name +
                              ", data says " + row.minus);
    }
    if (slots[c]) throw DataInconsistency("duplicate data row " + row.name);

    GoldenNumber value = row.spin;
    auto require_zero = [&](const char* why) {
      if (!row.spin.is_zero()) throw DataInconsistency(row.name + ": " + why + " but data gives " + row.spin.to_compact());
    };
    switch (row.provenance) {
      case Provenance::TrivialIdentity:
        if (!(cls.representative == group.identity())) throw DataInconsistency(row.name + " is not the identity class");
        require_zero("the identity has spin number 0");
        break;
      case Provenance::ComputedTwoFixedPoints:
        if (row.fp_count != 2) throw DataInconsistency(row.name + " is marked computed without two fixed points");
        value = two_fixed_point_spin(cls);
        if (value != row.spin) {
          throw DataInconsistency(row.name + ": computed " + value.to_compact() + ", data gives " + row.spin.to_compact());
        }
        break;
      case Provenance::ForcedZeroSelfMinus:
        if (group.minus_class(c) != c) throw DataInconsistency(row.name + " is not its own minus class");
        require_zero("self-minus classes have spin number 0");
        break;
      case Provenance::ForcedZeroSurface:
        if (row.fp_count) throw DataInconsistency(row.name + " is marked as a surface fixed set but has finitely many points");
        require_zero("surface components contribute 0");
        break;
      case Provenance::Recorded:
        break;
    }
    slots[c] = DavisSpinEntry{c, cls.name, cls.order, cls.size(), row.fp_count, value, row.provenance, false};
  }

  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t m = group.minus_class(c);
    if (slots[c] && slots[m] && slots[m]->spin != -slots[c]->spin) {
      throw DataInconsistency("spin numbers of " + slots[c]->name + " and its minus class are not opposite");
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    if (slots[c]) continue;
    const std::size_t m = group.minus_class(c);
    if (!slots[m] || slots[m]->via_minus) throw DataInconsistency("no data for " + group.classes()[c].name);
    DavisSpinEntry e = *slots[m];
    e.class_index = c;
    e.name = group.classes()[c].name;
    e.order = group.classes()[c].order;
    e.size = group.classes()[c].size();
    e.spin = -e.spin;
    e.via_minus = true;
    slots[c] = std::move(e);
  }

  DavisSpinTable table;
  for (auto& s : slots) table.entries.push_back(std::move(*s));
  return table;
}

DavisSpinTable davis_spin_character() { return davis_spin_character(load_davis_rows()); }

DavisIndexDecomposition decompose_davis_index(const DavisSpinTable& table) {
  const auto& irreps = chartable_ghat();
  const auto coeffs = decompose(table.character());
  DavisIndexDecomposition out;
  std::vector<std::size_t> plus, minus;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const GoldenComplex& m = coeffs[i];
    if (!m.is_real() || !m.re().is_integer()) {
      throw DataInconsistency("multiplicity of " + irreps[i].label.name() + " is " + m.to_compact() +
                              ", not an integer: spin data and character table disagree");
    }
    const long v = m.re().a().get_num().get_si();
    out.multiplicities.push_back(v);
    if (v == 1) plus.push_back(i);
    if (v == -1) minus.push_back(i);
  }
  out.norm = inner_product(table.character(), table.character());
  long nonzero = std::count_if(out.multiplicities.begin(), out.multiplicities.end(), [](long v) { return v != 0; });
  if (plus.size() == 1 && minus.size() == 1 && nonzero == 2) {
    out.positive = plus[0];
    out.negative = minus[0];
    int step = 0;
    for (const auto& chi : irreps) {
      if (chi.spinorial) step = std::gcd(step, chi.dimension);
    }
    out.min_total_dimension = irreps[plus[0]].dimension + irreps[minus[0]].dimension;
    out.dimension_step = 2 * step;
  }
  return out;
}

DavisIndexDecomposition decompose_davis_index() { return decompose_davis_index(davis_spin_character()); }

}  // namespace spinindex
