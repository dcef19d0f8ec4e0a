#pragma once
// The order-28800 group (2I x 2I) semidirect <s>, where s swaps the factors
// through alpha: s (p, q) s^-1 = (alpha^-1 q, alpha p) and s^2 = 1.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "spinindex/icosa.hpp"

namespace spinindex {

struct GhatElement {
  IcosianIndex p = 0;
  IcosianIndex q = 0;
  bool coset = false;

  friend bool operator==(const GhatElement&, const GhatElement&) = default;
};

struct GhatClass {
  GhatElement representative;
  std::vector<std::uint32_t> members;  // encoded ids, ascending
  std::string name;
  int order = 0;
  bool coset = false;
  /// For subgroup classes, the lexicographically smaller of the two labels
  /// x×y and y*×x* naming it; for coset classes, (1, x) of "[1×x]".
  IcosaClass left = IcosaClass::C1;
  IcosaClass right = IcosaClass::C1;

  std::size_t size() const { return members.size(); }
  /// Only one label x×y (the class is closed under the twist).
  bool single_term() const;
};

class GhatGroup {
 public:
  static constexpr std::size_t kOrder = 28800;

  static const GhatGroup& instance();

  static std::uint32_t encode(const GhatElement& g) {
    return (g.coset ? 14400u : 0u) + 120u * g.p + g.q;
  }
  static GhatElement decode(std::uint32_t id) {
    return {static_cast<IcosianIndex>((id % 14400) / 120), static_cast<IcosianIndex>(id % 120), id >= 14400};
  }

  GhatElement mul(const GhatElement& x, const GhatElement& y) const;
  GhatElement inverse(const GhatElement& x) const;
  GhatElement power(const GhatElement& x, int k) const;
  int order(const GhatElement& x) const;

  GhatElement identity() const;
  GhatElement minus_one() const;
  GhatElement s() const;
  /// (1, -1, s): the element covering the order-two deck swap.
  GhatElement sigma_star() const;

  /// Classes in canonical order: the 20 classes c with -c != c whose label
  /// sorts first, then their negatives in the same order, then the 14
  /// classes with -c == c. Each block is sorted by (order, size, label).
  const std::vector<GhatClass>& classes() const { return classes_; }
  std::size_t class_count() const { return classes_.size(); }
  std::size_t class_index(const GhatElement& g) const { return class_of_[encode(g)]; }
  const GhatClass& class_of(const GhatElement& g) const { return classes_[class_index(g)]; }
  /// Throws ParseError for unknown names.
  std::size_t class_index_by_name(std::string_view name) const;
  /// Class of (-1, -1) * g for g in class c.
  std::size_t minus_class(std::size_t c) const { return minus_[c]; }
  /// Class of g^k for g in class c.
  std::size_t power_class(std::size_t c, int k) const;
  /// Number of classes contained in 2I x 2I.
  std::size_t subgroup_class_count() const { return subgroup_count_; }

 private:
  GhatGroup();

  std::vector<GhatClass> classes_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::size_t> minus_;
  std::size_t subgroup_count_ = 0;
};

/// Name of the class of g, e.g. "3×4+4×3" or "[1×2]".
std::string class_name(const GhatElement& g);

}  // namespace spinindex
