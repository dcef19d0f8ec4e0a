#pragma once
// The binary icosahedral group 2I: its 120 unit quaternions, conjugacy
// classes, character table, and the order-4 outer automorphism alpha used to
// build the semidirect product.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "spinindex/golden.hpp"
#include "spinindex/quatmat.hpp"

namespace spinindex {

/// Position of an element in the fixed enumeration of 2I (0..119).
using IcosianIndex = std::uint8_t;

/// Conjugacy classes of 2I, named by element order.
enum class IcosaClass : std::uint8_t { C1, C2, C3, C4, C5A, C5B, C6, C10A, C10B };
inline constexpr std::size_t kIcosaClassCount = 9;
inline constexpr std::array<IcosaClass, kIcosaClassCount> kIcosaClasses = {
    IcosaClass::C1,  IcosaClass::C2, IcosaClass::C3,   IcosaClass::C4,  IcosaClass::C5A,
    IcosaClass::C5B, IcosaClass::C6, IcosaClass::C10A, IcosaClass::C10B};

std::string_view class_label(IcosaClass c);
IcosaClass parse_class_label(std::string_view label);
/// The common real part of every element in the class.
GoldenNumber class_real_part(IcosaClass c);
int class_element_order(IcosaClass c);
int class_size(IcosaClass c);
/// Image of the class under alpha: swaps 5A/5B and 10A/10B.
IcosaClass class_twist(IcosaClass c);
/// Class of -q for q in c.
IcosaClass class_negated(IcosaClass c);
inline std::size_t index_of(IcosaClass c) { return static_cast<std::size_t>(c); }

/// Irreducible representations of 2I, named by dimension.
enum class IcosaRep : std::uint8_t { R1, R2, R2p, R3, R3p, R4, R4p, R5, R6 };
inline constexpr std::size_t kIcosaRepCount = 9;
inline constexpr std::array<IcosaRep, kIcosaRepCount> kIcosaReps = {
    IcosaRep::R1, IcosaRep::R2,  IcosaRep::R2p, IcosaRep::R3, IcosaRep::R3p,
    IcosaRep::R4, IcosaRep::R4p, IcosaRep::R5,  IcosaRep::R6};

/// "1", "2", "2′", ... (U+2032 for the prime).
std::string_view rep_label(IcosaRep r);
/// Accepts "2'" as well as "2′".
IcosaRep parse_rep_label(std::string_view label);
int rep_dim(IcosaRep r);
/// 2 <-> 2', 3 <-> 3', all others fixed.
IcosaRep rep_prime(IcosaRep r);
inline std::size_t index_of(IcosaRep r) { return static_cast<std::size_t>(r); }

/// The tabulated character value of `rep` on class `cls`.
GoldenNumber char_2I(IcosaRep rep, IcosaClass cls);

class BinaryIcosahedralGroup {
 public:
  static constexpr std::size_t kOrder = 120;

  /// Built once on first use; immutable afterwards.
  static const BinaryIcosahedralGroup& instance();

  const GoldenQuaternion& element(IcosianIndex i) const { return elements_[i]; }
  const std::vector<GoldenQuaternion>& elements() const { return elements_; }
  std::optional<IcosianIndex> find(const GoldenQuaternion& q) const;
  /// Throws MembershipError for quaternions outside 2I.
  IcosianIndex index_of(const GoldenQuaternion& q) const;

  IcosianIndex identity() const { return identity_; }
  IcosianIndex minus_one() const { return minus_one_; }
  IcosianIndex mul(IcosianIndex x, IcosianIndex y) const { return mul_[x * kOrder + y]; }
  IcosianIndex inv(IcosianIndex x) const { return inv_[x]; }
  IcosianIndex negate(IcosianIndex x) const { return mul(minus_one_, x); }
  IcosianIndex power(IcosianIndex x, int k) const;
  int order(IcosianIndex x) const;

  IcosaClass class_of(IcosianIndex x) const { return class_[x]; }
  IcosaClass class_of(const GoldenQuaternion& q) const { return class_of(index_of(q)); }
  /// First element of the class in enumeration order.
  IcosianIndex class_representative(IcosaClass c) const { return class_rep_[spinindex::index_of(c)]; }

  /// tau/2 + i/2 + (tau-1)/2 j and tau/2 + i/2 + (1-tau)/2 j, both of order 10.
  IcosianIndex generator(int which) const { return generators_[which]; }
  std::span<const IcosianIndex> generators() const { return generators_; }

  /// Shortest word (as positions into `gens`) whose product is `target`.
  std::vector<std::size_t> word_decompose(IcosianIndex target,
                                          std::span<const IcosianIndex> gens) const;

  /// The automorphism fixed by alpha(g1) = g1^3 and alpha(g2) = g2^7.
  IcosianIndex alpha(IcosianIndex x) const { return alpha_[x]; }
  IcosianIndex alpha_inv(IcosianIndex x) const { return alpha_inv_[x]; }

  /// Breadth-first spanning tree from the identity over right multiplication by
  /// the two generators: parent element and generator slot for each element
  /// (the identity maps to itself with slot -1). Used to extend maps defined
  /// on generators.
  struct TreeEdge {
    IcosianIndex parent;
    int generator_slot;
  };
  const std::vector<TreeEdge>& spanning_tree() const { return tree_; }
  /// Elements in BFS order, identity first.
  const std::vector<IcosianIndex>& bfs_order() const { return bfs_order_; }

 private:
  BinaryIcosahedralGroup();

  std::vector<GoldenQuaternion> elements_;
  std::unordered_map<std::string, IcosianIndex> lookup_;
  std::vector<IcosianIndex> mul_;
  std::vector<IcosianIndex> inv_;
  std::vector<IcosaClass> class_;
  std::array<IcosianIndex, kIcosaClassCount> class_rep_{};
  std::array<IcosianIndex, 2> generators_{};
  std::vector<TreeEdge> tree_;
  std::vector<IcosianIndex> bfs_order_;
  std::vector<IcosianIndex> alpha_;
  std::vector<IcosianIndex> alpha_inv_;
  IcosianIndex identity_ = 0;
  IcosianIndex minus_one_ = 0;
};

/// The 120 icosians in enumeration order.
std::vector<GoldenQuaternion> enumerate_2I();
IcosaClass class_of(const GoldenQuaternion& q);
GoldenQuaternion alpha(const GoldenQuaternion& q);

}  // namespace spinindex
