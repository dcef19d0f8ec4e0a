#pragma once
// Fixed-point contributions to spin numbers, the Davis manifold constants,
// and the decomposition of the Davis spin character into irreducibles.

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spinindex/ghat.hpp"
#include "spinindex/golden.hpp"
#include "spinindex/quatmat.hpp"
#include "spinindex/reptheory.hpp"

namespace spinindex {

/// Real in dimension 4, purely imaginary in dimension 2.
using SpinValue = GoldenComplex;

/// 1 / (2 (Re p - Re q)) for the fixed point of diag(p, q) at the apex.
SpinValue nu_diag_4d(const GoldenQuaternion& p, const GoldenQuaternion& q);

struct IsolatedFixedPoint4 {
  HyperboloidPoint4<GoldenNumber> x;
  SpinMatrix4<GoldenNumber> phi_hat;
};
/// x5 / (2 (Re phi_hat_11 - Re phi_hat_22)).
SpinValue nu_isolated_4d(const IsolatedFixedPoint4& fp);

/// 1 / (2 Im(u) i) for diag(u, conj u).
SpinValue nu_diag_2d(const GoldenComplex& u);
/// x3 / (2 Im(phi_hat_11) i).
SpinValue nu_isolated_2d(const SpinMatrix2<GoldenComplex>& phi_hat, const HyperboloidPoint2<GoldenNumber>& x);

/// Floating-point nu from the spinor trace difference over |det(I - dphi)|,
/// with the rotation angles taken from eigenvalues.
double nu_numeric_oracle(const SpinMatrix4<double>& phi_hat, const HyperboloidPoint4<double>& x);
std::complex<double> nu_numeric_oracle_2d(const SpinMatrix2<std::complex<double>>& phi_hat,
                                          const HyperboloidPoint2<double>& x);

/// [[5/4, 3u/4], [3 conj(u)/4, 5/4]] for a unit quaternion u; moves e5.
SpinMatrix4<GoldenNumber> boost4(const GoldenQuaternion& u);
SpinMatrix2<GoldenComplex> boost2(const GoldenComplex& u);

struct NuProbe4 {
  std::string label;
  IsolatedFixedPoint4 point;
};
struct NuProbe2 {
  std::string label;
  SpinMatrix2<GoldenComplex> phi_hat;
  HyperboloidPoint2<GoldenNumber> x;
};
/// Diagonal probes at the apex and conjugates of them by boosts.
std::vector<NuProbe4> standard_nu_probes_4d();
std::vector<NuProbe2> standard_nu_probes_2d();

// ---------------------------------------------------------------------------
// Davis manifold constants.

/// kappa^2 = 1 + 3 tau.
GoldenNumber kappa_squared();

struct DavisSigma {
  LorentzMatrix5<QuadExtNumber> sigma;
  ScaledSpinMatrix4 sigma_hat;
};
DavisSigma davis_sigma_data();

/// The order-10 generators of the two 2I factors (i = 1, 2) and their images.
SpinMatrix4<GoldenNumber> alpha_hat(int i);
SpinMatrix4<GoldenNumber> beta_hat(int i);
LorentzMatrix5<GoldenNumber> alpha_matrix(int i);
LorentzMatrix5<GoldenNumber> beta_matrix(int i);

// ---------------------------------------------------------------------------
// The spin character of the Davis manifold.

enum class Provenance {
  TrivialIdentity,
  ComputedTwoFixedPoints,
  ForcedZeroSelfMinus,
  ForcedZeroSurface,
  Recorded,
};
std::string_view provenance_label(Provenance p);
Provenance parse_provenance(std::string_view label);

/// One row of the bundled class table.
struct DavisRow {
  std::string name;
  int order = 0;
  std::size_t size = 0;
  std::optional<int> fp_count;  // empty for infinitely many
  GoldenNumber spin;
  Provenance provenance = Provenance::Recorded;
  std::string minus;
};

/// Parses the JSON table; throws ParseError on malformed input.
std::vector<DavisRow> parse_davis_rows(std::string_view json_text);
/// The table from $SPININDEX_DATA if set, else the bundled copy.
std::vector<DavisRow> load_davis_rows();
/// The bundled JSON text.
std::string_view bundled_davis_json();

/// Sum over the two fixed points of x×y+y*×x*:
/// 1/(2(Re x - Re y)) + 1/(2(Re y* - Re x*)).
GoldenNumber two_fixed_point_spin(const GhatClass& c);
/// The same, restricted to classes listed with exactly two fixed points.
/// Throws NotApplicable otherwise.
SpinValue spin_number_two_fp(std::size_t class_index, const std::vector<DavisRow>& rows);

struct DavisSpinEntry {
  std::size_t class_index = 0;
  std::string name;
  int order = 0;
  std::size_t size = 0;
  std::optional<int> fp_count;
  GoldenNumber spin;
  Provenance provenance = Provenance::Recorded;
  /// Entry obtained by negating the value of its minus class.
  bool via_minus = false;
};

struct DavisSpinTable {
  std::vector<DavisSpinEntry> entries;  // canonical class order
  ClassFunction character() const;
};

/// Validates the rows against the group, recomputes every derivable value and
/// throws DataInconsistency if a recorded value disagrees.
DavisSpinTable davis_spin_character(const std::vector<DavisRow>& rows);
DavisSpinTable davis_spin_character();

struct DavisIndexDecomposition {
  std::vector<long> multiplicities;  // chartable_ghat() order
  /// The irreducibles with multiplicity +1 and -1, when there is exactly one of each.
  std::optional<std::size_t> positive;
  std::optional<std::size_t> negative;
  GoldenComplex norm;
  /// dim of the full harmonic spinor space is min_total_dimension + k * dimension_step.
  int min_total_dimension = 0;
  int dimension_step = 0;
};
/// Throws DataInconsistency unless every multiplicity is an integer.
DavisIndexDecomposition decompose_davis_index(const DavisSpinTable& table);
DavisIndexDecomposition decompose_davis_index();

}  // namespace spinindex
