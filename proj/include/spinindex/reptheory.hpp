#pragma once
// Exact representations of 2I and the character table of the semidirect
// product (2I x 2I) semidirect <s>.

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "spinindex/exact_matrix.hpp"
#include "spinindex/ghat.hpp"
#include "spinindex/icosa.hpp"

namespace spinindex {

/// A representation of 2I fixed by the images of the two standard generators
/// and extended to every element along the group's spanning tree.
class MatrixRep {
 public:
  explicit MatrixRep(std::array<ExactMatrix, 2> generator_images);

  std::size_t dimension() const { return dimension_; }
  const std::array<ExactMatrix, 2>& generator_images() const { return generators_; }
  const ExactMatrix& operator()(IcosianIndex x) const { return images_[x]; }
  GoldenComplex trace(IcosianIndex x) const { return images_[x].trace(); }

  /// R(1) = I and R(x g) = R(x) R(g) for all x in 2I and both generators.
  bool is_homomorphism() const;

 private:
  std::size_t dimension_;
  std::array<ExactMatrix, 2> generators_;
  std::vector<ExactMatrix> images_;
};

MatrixRep trivial_rep_2I();
/// a + b j  ->  [[a, b], [-conj(b), conj(a)]] with a = q0 + q1 i, b = q2 + q3 i.
MatrixRep rep2_of_2I();
MatrixRep sym_power(const MatrixRep& r, int k);
MatrixRep galois_rep(const MatrixRep& r);
MatrixRep tensor(const MatrixRep& r1, const MatrixRep& r2);
/// The named irreducible, built from rep2 by the constructions above.
const MatrixRep& irrep_2I(IcosaRep label);

/// Values of a class function of 2I indexed by IcosaClass.
using IcosaCharacter = std::array<GoldenComplex, kIcosaClassCount>;
/// Throws DataInconsistency if the trace is not constant on a class.
IcosaCharacter character_of(const MatrixRep& r);
/// Character of irrep_2I(label), memoized.
const IcosaCharacter& character_2I(IcosaRep label);

/// Values indexed by the canonical class order of GhatGroup.
using ClassFunction = std::vector<GoldenComplex>;

/// (1/|G|) sum |C| f(C) conj(g(C)).
GoldenComplex inner_product(const ClassFunction& f, const ClassFunction& g);

struct GhatIrrepLabel {
  enum class Kind { Induced, ExtendedPlus, ExtendedMinus };
  Kind kind = Kind::Induced;
  std::pair<IcosaRep, IcosaRep> first;
  /// The twisted partner; equal to `first` for extensions.
  std::pair<IcosaRep, IcosaRep> second;

  /// "(2′⊗3′)⊕(3⊗2)", "3⊗3′" or "−(3⊗3′)".
  std::string name() const;
  friend bool operator==(const GhatIrrepLabel&, const GhatIrrepLabel&) = default;
};

struct GhatCharacter {
  GhatIrrepLabel label;
  int dimension = 0;
  bool spinorial = false;
  ClassFunction values;
};

/// The product theta' of 2I x 2I irreducibles with theta'(p, q) =
/// theta(alpha^-1 q, alpha p), identified by comparing characters.
std::pair<IcosaRep, IcosaRep> twisted_partner(IcosaRep r1, IcosaRep r2);

/// Induction of r1 ⊗ r2 from 2I x 2I.
ClassFunction induce_character(IcosaRep r1, IcosaRep r2);
/// One of the two extensions of an s-invariant r1 ⊗ r2; sign +1 takes the
/// value +dim(r1) at s. Throws NotExtendable if r1 ⊗ r2 is not s-invariant.
ClassFunction extend_character(IcosaRep r1, IcosaRep r2, int sign);

/// All 54 irreducible characters: the 20 spinorial ones first, each group
/// sorted by (dimension, first pair, kind).
const std::vector<GhatCharacter>& chartable_ghat();
/// Position in chartable_ghat() of the irreducible with this name.
std::size_t irrep_index_by_name(const std::string& name);

/// Multiplicities <f, chi_i> in chartable_ghat() order.
std::vector<GoldenComplex> decompose(const ClassFunction& f);

struct OrthogonalityReport {
  bool rows_orthonormal = true;
  bool columns_orthogonal = true;
  bool dimension_sum = true;
  std::string detail;
  bool ok() const { return rows_orthonormal && columns_orthogonal && dimension_sum; }
};
OrthogonalityReport check_orthogonality(const std::vector<GhatCharacter>& table);

}  // namespace spinindex
