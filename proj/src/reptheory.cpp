#include "spinindex/reptheory.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "spinindex/error.hpp"

namespace spinindex {

namespace {

const BinaryIcosahedralGroup& two_i() { return BinaryIcosahedralGroup::instance(); }

using Monomial = std::vector<int>;
using Polynomial = std::map<Monomial, GoldenComplex>;

void monomials(std::size_t vars, int degree, Monomial& prefix, std::vector<Monomial>& out) {
  if (prefix.size() + 1 == vars) {
    prefix.push_back(degree);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = degree; e >= 0; --e) {
    prefix.push_back(e);
    monomials(vars, degree - e, prefix, out);
    prefix.pop_back();
  }
}

Polynomial multiply(const Polynomial& x, const Polynomial& y) {
  Polynomial r;
  for (const auto& [mx, cx] : x) {
    for (const auto& [my, cy] : y) {
      Monomial m = mx;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += my[i];
      r[m] += cx * cy;
    }
  }
  return r;
}

ExactMatrix sym_power_matrix(const ExactMatrix& m, int k, const std::vector<Monomial>& basis) {
  const std::size_t d = m.rows();
  std::vector<Polynomial> columns(d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) {
      if (m(i, j).is_zero()) continue;
      Monomial e(d, 0);
      e[i] = 1;
      columns[j][e] = m(i, j);
    }
  }
  std::map<Monomial, std::size_t> position;
  for (std::size_t n = 0; n < basis.size(); ++n) position[basis[n]] = n;

  ExactMatrix r(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    Polynomial image{{Monomial(d, 0), GoldenComplex(1)}};
    for (std::size_t j = 0; j < d; ++j) {
      for (int e = 0; e < basis[col][j]; ++e) image = multiply(image, columns[j]);
    }
    for (const auto& [mono, coeff] : image) {
      if (!coeff.is_zero()) r(position.at(mono), col) = coeff;
    }
  }
  (void)k;
  return r;
}

/// T with T * source(g) == target_of(g) * T for both generators g, where the
/// target images are supplied per generator.
std::vector<std::vector<GoldenComplex>> intertwiner_space(const std::array<ExactMatrix, 2>& source,
                                                          const std::array<ExactMatrix, 2>& target) {
  const std::size_t rows = target[0].rows();
  const std::size_t cols = source[0].rows();
  ExactMatrix system(2 * rows * cols, rows * cols);
  for (std::size_t g = 0; g < 2; ++g) {
    const ExactMatrix& b = source[g];
    const ExactMatrix& a = target[g];
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t l = 0; l < cols; ++l) {
        const std::size_t eq = g * rows * cols + i * cols + l;
        for (std::size_t j = 0; j < cols; ++j) system(eq, i * cols + j) += b(j, l);
        for (std::size_t k = 0; k < rows; ++k) system(eq, k * cols + l) -= a(i, k);
      }
    }
  }
  return system.nullspace();
}

ExactMatrix reshape(const std::vector<GoldenComplex>& v, std::size_t rows, std::size_t cols) {
  ExactMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
  }
  return m;
}

std::string pair_name(const std::pair<IcosaRep, IcosaRep>& p) {
  return std::string(rep_label(p.first)) + "⊗" + std::string(rep_label(p.second));
}

auto pair_key(const std::pair<IcosaRep, IcosaRep>& p) { return std::pair{index_of(p.first), index_of(p.second)}; }

GoldenComplex product_value(IcosaRep r1, IcosaRep r2, IcosianIndex p, IcosianIndex q) {
  const auto& g = two_i();
  return character_2I(r1)[index_of(g.class_of(p))] * character_2I(r2)[index_of(g.class_of(q))];
}

}  // namespace

MatrixRep::MatrixRep(std::array<ExactMatrix, 2> generator_images)
    : dimension_(generator_images[0].rows()), generators_(std::move(generator_images)) {
  for (const auto& m : generators_) {
    if (m.rows() != dimension_ || m.cols() != dimension_) throw InconsistentInput("generator images differ in shape");
  }
  const auto& g = two_i();
  images_.resize(BinaryIcosahedralGroup::kOrder);
  images_[g.identity()] = ExactMatrix::identity(dimension_);
  const auto& order = g.bfs_order();
  for (std::size_t k = 1; k < order.size(); ++k) {
    const auto edge = g.spanning_tree()[order[k]];
    images_[order[k]] = images_[edge.parent] * generators_[edge.generator_slot];
  }
}

bool MatrixRep::is_homomorphism() const {
  const auto& g = two_i();
  if (images_[g.identity()] != ExactMatrix::identity(dimension_)) return false;
  for (std::size_t x = 0; x < BinaryIcosahedralGroup::kOrder; ++x) {
    for (int slot = 0; slot < 2; ++slot) {
      const auto xi = static_cast<IcosianIndex>(x);
      if (images_[g.mul(xi, g.generator(slot))] != images_[xi] * generators_[slot]) return false;
    }
  }
  return true;
}

MatrixRep trivial_rep_2I() { return MatrixRep({ExactMatrix::identity(1), ExactMatrix::identity(1)}); }

MatrixRep rep2_of_2I() {
  auto psi = [](const GoldenQuaternion& q) {
    const GoldenComplex a(q.q0, q.q1);
    const GoldenComplex b(q.q2, q.q3);
    return ExactMatrix::from_rows({{a, b}, {-b.conj(), a.conj()}});
  };
  const auto& g = two_i();
  return MatrixRep({psi(g.element(g.generator(0))), psi(g.element(g.generator(1)))});
}

MatrixRep sym_power(const MatrixRep& r, int k) {
  if (k < 0) throw DomainError("symmetric power needs k >= 0");
  std::vector<Monomial> basis;
  Monomial prefix;
  monomials(r.dimension(), k, prefix, basis);
  const auto& gens = r.generator_images();
  return MatrixRep({sym_power_matrix(gens[0], k, basis), sym_power_matrix(gens[1], k, basis)});
}

MatrixRep galois_rep(const MatrixRep& r) {
  const auto& gens = r.generator_images();
  return MatrixRep({gens[0].galois(), gens[1].galois()});
}

MatrixRep tensor(const MatrixRep& r1, const MatrixRep& r2) {
  const auto& a = r1.generator_images();
  const auto& b = r2.generator_images();
  return MatrixRep({kronecker(a[0], b[0]), kronecker(a[1], b[1])});
}

const MatrixRep& irrep_2I(IcosaRep label) {
  static const std::vector<MatrixRep> reps = [] {
    const MatrixRep two = rep2_of_2I();
    const MatrixRep two_p = galois_rep(two);
    const MatrixRep three = sym_power(two, 2);
    std::vector<MatrixRep> out;
    out.push_back(trivial_rep_2I());
    out.push_back(two);
    out.push_back(two_p);
    out.push_back(three);
    out.push_back(galois_rep(three));
    out.push_back(tensor(two, two_p));
    out.push_back(sym_power(two, 3));
    out.push_back(sym_power(two, 4));
    out.push_back(sym_power(two, 5));
    return out;
  }();
  return reps[index_of(label)];
}

IcosaCharacter character_of(const MatrixRep& r) {
  const auto& g = two_i();
  IcosaCharacter chi;
  std::array<bool, kIcosaClassCount> seen{};
  for (std::size_t x = 0; x < BinaryIcosahedralGroup::kOrder; ++x) {
    const auto xi = static_cast<IcosianIndex>(x);
    const std::size_t c = index_of(g.class_of(xi));
    const GoldenComplex t = r.trace(xi);
    if (!seen[c]) {
      chi[c] = t;
      seen[c] = true;
    } else if (chi[c] != t) {
      throw DataInconsistency("trace is not a class function");
    }
  }
  return chi;
}

const IcosaCharacter& character_2I(IcosaRep label) {
  static const std::vector<IcosaCharacter> table = [] {
    std::vector<IcosaCharacter> out;
    for (auto r : kIcosaReps) out.push_back(character_of(irrep_2I(r)));
    return out;
  }();
  return table[index_of(label)];
}

GoldenComplex inner_product(const ClassFunction& f, const ClassFunction& g) {
  const auto& classes = GhatGroup::instance().classes();
  if (f.size() != classes.size() || g.size() != classes.size()) {
    throw InconsistentInput("class function has the wrong number of entries");
  }
  GoldenComplex sum;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (f[c].is_zero() || g[c].is_zero()) continue;
    sum += GoldenComplex(static_cast<long>(classes[c].size())) * f[c] * g[c].conj();
  }
  return sum * GoldenComplex(GoldenNumber::rational(1, static_cast<long>(GhatGroup::kOrder)));
}

std::string GhatIrrepLabel::name() const {
  switch (kind) {
    case Kind::Induced: return "(" + pair_name(first) + ")⊕(" + pair_name(second) + ")";
    case Kind::ExtendedPlus: return pair_name(first);
    case Kind::ExtendedMinus: return "−(" + pair_name(first) + ")";
  }
  return {};
}

std::pair<IcosaRep, IcosaRep> twisted_partner(IcosaRep r1, IcosaRep r2) {
  const auto& chi1 = character_2I(r1);
  const auto& chi2 = character_2I(r2);
  for (auto a : kIcosaReps) {
    for (auto b : kIcosaReps) {
      bool same = true;
      for (auto x : kIcosaClasses) {
        for (auto y : kIcosaClasses) {
          const GoldenComplex twisted = chi1[index_of(class_twist(y))] * chi2[index_of(class_twist(x))];
          if (character_2I(a)[index_of(x)] * character_2I(b)[index_of(y)] != twisted) {
            same = false;
            break;
          }
        }
        if (!same) break;
      }
      if (same) return {a, b};
    }
  }
  throw DataInconsistency("twisted character is not a product of irreducibles");
}

ClassFunction induce_character(IcosaRep r1, IcosaRep r2) {
  const auto& group = GhatGroup::instance();
  const auto& g = two_i();
  ClassFunction out;
  out.reserve(group.class_count());
  for (const auto& c : group.classes()) {
    if (c.coset) {
      out.emplace_back();
      continue;
    }
    const IcosianIndex p = c.representative.p;
    const IcosianIndex q = c.representative.q;
    out.push_back(product_value(r1, r2, p, q) + product_value(r1, r2, g.alpha_inv(q), g.alpha(p)));
  }
  return out;
}

ClassFunction extend_character(IcosaRep r1, IcosaRep r2, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("extension sign must be +1 or -1");
  if (twisted_partner(r1, r2) != std::pair{r1, r2}) {
    throw NotExtendable(pair_name({r1, r2}) + " is not invariant under the twist");
  }
  const auto& g = two_i();
  const MatrixRep& rho1 = irrep_2I(r1);
  const MatrixRep& rho2 = irrep_2I(r2);
  const std::size_t d1 = rho1.dimension();
  const std::size_t d2 = rho2.dimension();

  // T1 rho2(q) = rho1(alpha^-1 q) T1 and T2 rho1(p) = rho2(alpha p) T2; then
  // S(v ⊗ w) = T1 w ⊗ T2 v intertwines the twist and S^2 = (T1 T2)^2.
  std::array<ExactMatrix, 2> src2, dst1, src1, dst2;
  for (int k = 0; k < 2; ++k) {
    const IcosianIndex gen = g.generator(k);
    src2[k] = rho2(gen);
    dst1[k] = rho1(g.alpha_inv(gen));
    src1[k] = rho1(gen);
    dst2[k] = rho2(g.alpha(gen));
  }
  const auto space1 = intertwiner_space(src2, dst1);
  const auto space2 = intertwiner_space(src1, dst2);
  if (space1.size() != 1 || space2.size() != 1) {
    throw NotExtendable("intertwiner space of " + pair_name({r1, r2}) + " is not one-dimensional");
  }
  const ExactMatrix t1 = reshape(space1[0], d1, d2);
  ExactMatrix t2 = reshape(space2[0], d2, d1);
  const ExactMatrix prod = t1 * t2;
  const GoldenComplex lambda = prod(0, 0);
  if (lambda.is_zero() || prod != lambda * ExactMatrix::identity(d1)) {
    throw FieldObstruction("Schur scalar of " + pair_name({r1, r2}) + " is not a nonzero multiple of the identity");
  }
  t2 = lambda.inverse() * t2;

  const auto& group = GhatGroup::instance();
  ClassFunction out;
  out.reserve(group.class_count());
  for (const auto& c : group.classes()) {
    const IcosianIndex p = c.representative.p;
    const IcosianIndex q = c.representative.q;
    if (!c.coset) {
      out.push_back(product_value(r1, r2, p, q));
    } else {
      const GoldenComplex t = (rho1(p) * t1 * rho2(q) * t2).trace();
      out.push_back(sign > 0 ? t : -t);
    }
  }
  return out;
}

const std::vector<GhatCharacter>& chartable_ghat() {
  static const std::vector<GhatCharacter> table = [] {
    const auto& group = GhatGroup::instance();
    const std::size_t id_class = group.class_index(group.identity());
    const std::size_t minus_class = group.class_index(group.minus_one());
    std::vector<GhatCharacter> out;
    auto add = [&](GhatIrrepLabel label, ClassFunction values) {
      GhatCharacter chi;
      chi.label = label;
      const GoldenComplex dim = values[id_class];
      if (!dim.is_real() || !dim.re().is_integer()) throw DataInconsistency("non-integral character degree");
      chi.dimension = static_cast<int>(dim.re().a().get_num().get_si());
      chi.spinorial = values[minus_class] == -dim;
      chi.values = std::move(values);
      out.push_back(std::move(chi));
    };
    for (auto r1 : kIcosaReps) {
      for (auto r2 : kIcosaReps) {
        const std::pair<IcosaRep, IcosaRep> theta{r1, r2};
        const auto partner = twisted_partner(r1, r2);
        if (partner == theta) {
          add({GhatIrrepLabel::Kind::ExtendedPlus, theta, theta}, extend_character(r1, r2, 1));
          add({GhatIrrepLabel::Kind::ExtendedMinus, theta, theta}, extend_character(r1, r2, -1));
        } else if (pair_key(theta) < pair_key(partner)) {
          add({GhatIrrepLabel::Kind::Induced, theta, partner}, induce_character(r1, r2));
        }
      }
    }
    std::stable_sort(out.begin(), out.end(), [](const GhatCharacter& a, const GhatCharacter& b) {
      return std::tuple{!a.spinorial, a.dimension, pair_key(a.label.first), a.label.kind} <
             std::tuple{!b.spinorial, b.dimension, pair_key(b.label.first), b.label.kind};
    });
    return out;
  }();
  return table;
}

std::size_t irrep_index_by_name(const std::string& name) {
  const auto& table = chartable_ghat();
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i].label.name() == name) return i;
  }
  throw ParseError("unknown irreducible: " + name);
}

std::vector<GoldenComplex> decompose(const ClassFunction& f) {
  std::vector<GoldenComplex> out;
  for (const auto& chi : chartable_ghat()) out.push_back(inner_product(f, chi.values));
  return out;
}

OrthogonalityReport check_orthogonality(const std::vector<GhatCharacter>& table) {
  OrthogonalityReport report;
  const auto& classes = GhatGroup::instance().classes();
  const std::size_t n = table.size();
  for (std::size_t i = 0; i < n && report.rows_orthonormal; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const GoldenComplex ip = inner_product(table[i].values, table[j].values);
      if (ip != GoldenComplex(i == j ? 1 : 0)) {
        report.rows_orthonormal = false;
        report.detail += "<" + table[i].label.name() + ", " + table[j].label.name() + "> = " + ip.to_compact() + "; ";
        break;
      }
    }
  }
  for (std::size_t c = 0; c < classes.size() && report.columns_orthogonal; ++c) {
    for (std::size_t d = c; d < classes.size(); ++d) {
      GoldenComplex sum;
      for (const auto& chi : table) sum += chi.values[c] * chi.values[d].conj();
      const long expected = c == d ? static_cast<long>(GhatGroup::kOrder / classes[c].size()) : 0;
      if (sum != GoldenComplex(expected)) {
        report.columns_orthogonal = false;
        report.detail += "column sum " + classes[c].name + ", " + classes[d].name + " = " + sum.to_compact() + "; ";
        break;
      }
    }
  }
  long dim_sq = 0;
  for (const auto& chi : table) dim_sq += static_cast<long>(chi.dimension) * chi.dimension;
  report.dimension_sum = dim_sq == static_cast<long>(GhatGroup::kOrder) && n == classes.size();
  if (!report.dimension_sum) report.detail += "sum of squared degrees = " + std::to_string(dim_sq) + "; ";
  return report;
}

}  // namespace spinindex
