// One line per acceptance criterion; exit status 1 if any fails.

#include <iostream>
#include <string>
#include <vector>

#include "expected_tables.hpp"
#include "spinindex/ghat.hpp"
#include "spinindex/reptheory.hpp"
#include "spinindex/verify.hpp"

using namespace spinindex;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> checks;
  bool (*extra)(std::string&) = nullptr;
};

bool classes_match_frozen(std::string& detail) {
  const auto& G = GhatGroup::instance();
  for (std::size_t c = 0; c < G.class_count(); ++c) {
    const auto& cls = G.classes()[c];
    const auto& row = expected::kGhatClasses[c];
    if (cls.name != row.name || cls.order != row.ord || cls.size() != static_cast<std::size_t>(row.size) ||
        G.classes()[G.minus_class(c)].name != row.minus) {
      detail = "row " + std::to_string(c) + " (" + cls.name + ") differs";
      return false;
    }
  }
  detail = "54 rows match";
  return true;
}

bool irreps_match_frozen(std::string& detail) {
  const auto& table = chartable_ghat();
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i].label.name() != expected::kGhatIrreps[i].name || table[i].dimension != expected::kGhatIrreps[i].dim) {
      detail = "irreducible " + table[i].label.name() + " differs";
      return false;
    }
  }
  detail = "constructor list matches";
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "2I reconstruction", {"icosa.classes", "icosa.words"}},
      {2, "2I character table", {"icosa.character_table"}},
      {3, "alpha automorphism", {"icosa.alpha"}},
      {4, "G-hat structure", {"ghat.structure", "ghat.table_columns"}, classes_match_frozen},
      {5, "G-hat character table", {"reptheory.chartable_shape", "reptheory.orthogonality", "reptheory.twisted_partners"},
       irreps_match_frozen},
      {6, "eta properties", {"quatmat.eta4_homomorphism", "quatmat.eta4_lorentz_sign", "quatmat.davis_lifts",
                             "quatmat.eta2_homomorphism", "quatmat.ball_equivariance"}},
      {7, "spin numbers, computable subset", {"spinindex.two_fixed_point_rows", "spinindex.spin_character"}},
      {8, "G-hat index decomposition", {"spinindex.decomposition"}},
      {9, "nu oracle agreement", {"spinindex.nu_oracle_4d", "spinindex.nu_oracle_2d"}},
      {10, "recorded fixed-point data (consumed, not recomputed; consistency checked)",
       {"spinindex.corruption_detected", "spinindex.decomposition"}},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    bool ok = true;
    std::string detail;
    for (const auto& name : c.checks) {
      const auto r = run_check(name);
      if (!detail.empty()) detail += "; ";
      detail += r.name + ": " + r.detail;
      ok = ok && r.passed;
    }
    if (c.extra) {
      std::string extra;
      ok = c.extra(extra) && ok;
      detail += "; " + extra;
    }
    if (!ok) ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << " (" << c.title << "): " << detail << "\n";
  }
  return failures == 0 ? 0 : 1;
}
