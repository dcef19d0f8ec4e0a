#include "spinindex/icosa.hpp"

#include <algorithm>
#include <deque>

#include "spinindex/error.hpp"

namespace spinindex {

namespace {

constexpr std::array<std::string_view, kIcosaClassCount> kClassLabels = {
    "1", "2", "3", "4", "5A", "5B", "6", "10A", "10B"};
constexpr std::array<int, kIcosaClassCount> kClassOrders = {1, 2, 3, 4, 5, 5, 6, 10, 10};
constexpr std::array<int, kIcosaClassCount> kClassSizes = {1, 1, 20, 30, 12, 12, 20, 12, 12};

constexpr std::array<std::string_view, kIcosaRepCount> kRepLabels = {
    "1", "2", "2′", "3", "3′", "4", "4′", "5", "6"};
constexpr std::array<int, kIcosaRepCount> kRepDims = {1, 2, 2, 3, 3, 4, 4, 5, 6};

GoldenNumber half(long a, long b) { return {make_rational(a, 2), make_rational(b, 2)}; }

// Character table of 2I; rows follow IcosaRep, columns IcosaClass.
// Entries are written as (a, b) meaning a + b tau.
struct Entry {
  long a;
  long b;
};
constexpr Entry kCharTable[kIcosaRepCount][kIcosaClassCount] = {
    {{1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}},
    {{2, 0}, {-2, 0}, {-1, 0}, {0, 0}, {-1, 1}, {0, -1}, {1, 0}, {0, 1}, {1, -1}},
    {{2, 0}, {-2, 0}, {-1, 0}, {0, 0}, {0, -1}, {-1, 1}, {1, 0}, {1, -1}, {0, 1}},
    {{3, 0}, {3, 0}, {0, 0}, {-1, 0}, {1, -1}, {0, 1}, {0, 0}, {0, 1}, {1, -1}},
    {{3, 0}, {3, 0}, {0, 0}, {-1, 0}, {0, 1}, {1, -1}, {0, 0}, {1, -1}, {0, 1}},
    {{4, 0}, {4, 0}, {1, 0}, {0, 0}, {-1, 0}, {-1, 0}, {1, 0}, {-1, 0}, {-1, 0}},
    {{4, 0}, {-4, 0}, {1, 0}, {0, 0}, {-1, 0}, {-1, 0}, {-1, 0}, {1, 0}, {1, 0}},
    {{5, 0}, {5, 0}, {-1, 0}, {1, 0}, {0, 0}, {0, 0}, {-1, 0}, {0, 0}, {0, 0}},
    {{6, 0}, {-6, 0}, {0, 0}, {0, 0}, {1, 0}, {1, 0}, {0, 0}, {-1, 0}, {-1, 0}},
};

std::string key_of(const GoldenQuaternion& q) {
  return q.q0.to_string() + "|" + q.q1.to_string() + "|" + q.q2.to_string() + "|" + q.q3.to_string();
}

bool is_even_permutation(const std::array<int, 4>& p) {
  int inversions = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) inversions += p[i] > p[j];
  }
  return inversions % 2 == 0;
}

}  // namespace

std::string_view class_label(IcosaClass c) { return kClassLabels[index_of(c)]; }

IcosaClass parse_class_label(std::string_view label) {
  for (auto c : kIcosaClasses) {
    if (class_label(c) == label) return c;
  }
  throw ParseError("unknown 2I class label: " + std::string(label));
}

GoldenNumber class_real_part(IcosaClass c) {
  switch (c) {
    case IcosaClass::C1: return 1;
    case IcosaClass::C2: return -1;
    case IcosaClass::C3: return half(-1, 0);
    case IcosaClass::C4: return 0;
    case IcosaClass::C5A: return half(-1, 1);
    case IcosaClass::C5B: return half(0, -1);
    case IcosaClass::C6: return half(1, 0);
    case IcosaClass::C10A: return half(0, 1);
    case IcosaClass::C10B: return half(1, -1);
  }
  return 0;
}

int class_element_order(IcosaClass c) { return kClassOrders[index_of(c)]; }
int class_size(IcosaClass c) { return kClassSizes[index_of(c)]; }

IcosaClass class_twist(IcosaClass c) {
  switch (c) {
    case IcosaClass::C5A: return IcosaClass::C5B;
    case IcosaClass::C5B: return IcosaClass::C5A;
    case IcosaClass::C10A: return IcosaClass::C10B;
    case IcosaClass::C10B: return IcosaClass::C10A;
    default: return c;
  }
}

IcosaClass class_negated(IcosaClass c) {
  const GoldenNumber re = -class_real_part(c);
  for (auto d : kIcosaClasses) {
    if (class_real_part(d) == re) return d;
  }
  return c;
}

std::string_view rep_label(IcosaRep r) { return kRepLabels[index_of(r)]; }

IcosaRep parse_rep_label(std::string_view label) {
  std::string norm(label);
  if (!norm.empty() && norm.back() == '\'') norm = norm.substr(0, norm.size() - 1) + "′";
  for (auto r : kIcosaReps) {
    if (rep_label(r) == norm) return r;
  }
  throw ParseError("unknown 2I representation label: " + std::string(label));
}

int rep_dim(IcosaRep r) { return kRepDims[index_of(r)]; }

IcosaRep rep_prime(IcosaRep r) {
  switch (r) {
    case IcosaRep::R2: return IcosaRep::R2p;
    case IcosaRep::R2p: return IcosaRep::R2;
    case IcosaRep::R3: return IcosaRep::R3p;
    case IcosaRep::R3p: return IcosaRep::R3;
    default: return r;
  }
}

GoldenNumber char_2I(IcosaRep rep, IcosaClass cls) {
  const Entry e = kCharTable[index_of(rep)][index_of(cls)];
  return {BigRational(e.a), BigRational(e.b)};
}

std::vector<GoldenQuaternion> enumerate_2I() {
  std::vector<GoldenQuaternion> out;
  out.reserve(BinaryIcosahedralGroup::kOrder);
  // +-1, +-i, +-j, +-k
  for (int axis = 0; axis < 4; ++axis) {
    for (int s : {1, -1}) {
      std::array<GoldenNumber, 4> v{};
      v[axis] = s;
      out.push_back({v[0], v[1], v[2], v[3]});
    }
  }
  // (+-1 +-i +-j +-k)/2
  for (int mask = 0; mask < 16; ++mask) {
    std::array<GoldenNumber, 4> v{};
    for (int k = 0; k < 4; ++k) v[k] = GoldenNumber::rational((mask >> k) & 1 ? -1 : 1, 2);
    out.push_back({v[0], v[1], v[2], v[3]});
  }
  // (0 +-i +-tau j +-tau^-1 k)/2 under even permutations of the coordinates.
  const std::array<GoldenNumber, 4> base = {0, half(1, 0), half(0, 1), half(-1, 1)};
  std::array<int, 4> perm = {0, 1, 2, 3};
  do {
    if (!is_even_permutation(perm)) continue;
    for (int mask = 0; mask < 8; ++mask) {
      std::array<GoldenNumber, 4> v{};
      for (int k = 0; k < 4; ++k) {
        GoldenNumber x = base[k];
        if (k > 0 && ((mask >> (k - 1)) & 1)) x = -x;
        v[perm[k]] = x;
      }
      out.push_back({v[0], v[1], v[2], v[3]});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

const BinaryIcosahedralGroup& BinaryIcosahedralGroup::instance() {
  static const BinaryIcosahedralGroup group;
  return group;
}

BinaryIcosahedralGroup::BinaryIcosahedralGroup() : elements_(enumerate_2I()) {
  const std::size_t n = elements_.size();
  for (std::size_t i = 0; i < n; ++i) lookup_.emplace(key_of(elements_[i]), static_cast<IcosianIndex>(i));
  if (lookup_.size() != kOrder) throw Error("2I enumeration produced duplicates");

  identity_ = index_of(GoldenQuaternion::one());
  minus_one_ = index_of(-GoldenQuaternion::one());

  mul_.resize(n * n);
  inv_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mul_[i * n + j] = index_of(elements_[i] * elements_[j]);
      if (mul_[i * n + j] == identity_) inv_[i] = static_cast<IcosianIndex>(j);
    }
  }

  class_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (auto c : kIcosaClasses) {
      if (elements_[i].q0 == class_real_part(c)) {
        class_[i] = c;
        found = true;
        break;
      }
    }
    if (!found) throw Error("icosian with unexpected real part");
  }
  for (auto c : kIcosaClasses) {
    const auto it = std::find(class_.begin(), class_.end(), c);
    class_rep_[spinindex::index_of(c)] = static_cast<IcosianIndex>(it - class_.begin());
  }

  generators_[0] = index_of({half(0, 1), half(1, 0), half(-1, 1), 0});
  generators_[1] = index_of({half(0, 1), half(1, 0), half(1, -1), 0});

  tree_.assign(n, TreeEdge{0, -2});
  tree_[identity_] = {identity_, -1};
  bfs_order_.push_back(identity_);
  for (std::size_t head = 0; head < bfs_order_.size(); ++head) {
    const IcosianIndex x = bfs_order_[head];
    for (int slot = 0; slot < 2; ++slot) {
      const IcosianIndex y = mul(x, generators_[slot]);
      if (tree_[y].generator_slot != -2) continue;
      tree_[y] = {x, slot};
      bfs_order_.push_back(y);
    }
  }
  if (bfs_order_.size() != n) throw Error("generators do not generate 2I");

  const std::array<IcosianIndex, 2> images = {power(generators_[0], 3), power(generators_[1], 7)};
  alpha_.assign(n, identity_);
  for (std::size_t k = 1; k < n; ++k) {
    const IcosianIndex x = bfs_order_[k];
    alpha_[x] = mul(alpha_[tree_[x].parent], images[tree_[x].generator_slot]);
  }
  alpha_inv_.assign(n, identity_);
  for (std::size_t i = 0; i < n; ++i) alpha_inv_[alpha_[i]] = static_cast<IcosianIndex>(i);
}

std::optional<IcosianIndex> BinaryIcosahedralGroup::find(const GoldenQuaternion& q) const {
  const auto it = lookup_.find(key_of(q));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

IcosianIndex BinaryIcosahedralGroup::index_of(const GoldenQuaternion& q) const {
  if (auto i = find(q)) return *i;
  throw MembershipError("quaternion " + to_string(q) + " is not in 2I");
}

IcosianIndex BinaryIcosahedralGroup::power(IcosianIndex x, int k) const {
  if (k < 0) return power(inv(x), -k);
  IcosianIndex r = identity_;
  for (int i = 0; i < k; ++i) r = mul(r, x);
  return r;
}

int BinaryIcosahedralGroup::order(IcosianIndex x) const {
  int k = 1;
  for (IcosianIndex y = x; y != identity_; y = mul(y, x)) ++k;
  return k;
}

std::vector<std::size_t> BinaryIcosahedralGroup::word_decompose(
    IcosianIndex target, std::span<const IcosianIndex> gens) const {
  // BFS over right multiplication; parent pointers give a shortest word.
  std::vector<int> via(kOrder, -1);
  std::vector<IcosianIndex> parent(kOrder, identity_);
  std::vector<bool> seen(kOrder, false);
  std::deque<IcosianIndex> queue{identity_};
  seen[identity_] = true;
  while (!queue.empty() && !seen[target]) {
    const IcosianIndex x = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const IcosianIndex y = mul(x, gens[g]);
      if (seen[y]) continue;
      seen[y] = true;
      parent[y] = x;
      via[y] = static_cast<int>(g);
      queue.push_back(y);
    }
  }
  if (!seen[target]) {
    throw WordDecompositionError("element " + to_string(element(target)) +
                                 " is not in the subgroup generated by the given elements");
  }
  std::vector<std::size_t> word;
  for (IcosianIndex x = target; x != identity_; x = parent[x]) word.push_back(static_cast<std::size_t>(via[x]));
  std::reverse(word.begin(), word.end());
  return word;
}

IcosaClass class_of(const GoldenQuaternion& q) { return BinaryIcosahedralGroup::instance().class_of(q); }

GoldenQuaternion alpha(const GoldenQuaternion& q) {
  const auto& g = BinaryIcosahedralGroup::instance();
  return g.element(g.alpha(g.index_of(q)));
}

}  // namespace spinindex
