#include "spinindex/ghat.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "spinindex/error.hpp"

namespace spinindex {

namespace {

const BinaryIcosahedralGroup& two_i() { return BinaryIcosahedralGroup::instance(); }

std::pair<IcosaClass, IcosaClass> twisted_partner(IcosaClass x, IcosaClass y) {
  return {class_twist(y), class_twist(x)};
}

std::string label_of(IcosaClass x, IcosaClass y) {
  return std::string(class_label(x)) + "×" + std::string(class_label(y));
}

}  // namespace

bool GhatClass::single_term() const {
  return coset || twisted_partner(left, right) == std::pair{left, right};
}

const GhatGroup& GhatGroup::instance() {
  static const GhatGroup group;
  return group;
}

GhatElement GhatGroup::mul(const GhatElement& x, const GhatElement& y) const {
  const auto& g = two_i();
  if (!x.coset) return {g.mul(x.p, y.p), g.mul(x.q, y.q), y.coset};
  return {g.mul(x.p, g.alpha_inv(y.q)), g.mul(x.q, g.alpha(y.p)), !y.coset};
}

GhatElement GhatGroup::inverse(const GhatElement& x) const {
  const auto& g = two_i();
  if (!x.coset) return {g.inv(x.p), g.inv(x.q), false};
  return {g.alpha_inv(g.inv(x.q)), g.alpha(g.inv(x.p)), true};
}

GhatElement GhatGroup::power(const GhatElement& x, int k) const {
  if (k < 0) return power(inverse(x), -k);
  GhatElement r = identity();
  for (int i = 0; i < k; ++i) r = mul(r, x);
  return r;
}

int GhatGroup::order(const GhatElement& x) const {
  int k = 1;
  for (GhatElement y = x; !(y == identity()); y = mul(y, x)) ++k;
  return k;
}

GhatElement GhatGroup::identity() const { return {two_i().identity(), two_i().identity(), false}; }
GhatElement GhatGroup::minus_one() const { return {two_i().minus_one(), two_i().minus_one(), false}; }
GhatElement GhatGroup::s() const { return {two_i().identity(), two_i().identity(), true}; }
GhatElement GhatGroup::sigma_star() const { return {two_i().identity(), two_i().minus_one(), true}; }

GhatGroup::GhatGroup() {
  const auto& g = two_i();
  const std::vector<GhatElement> conjugators = {
      {g.generator(0), g.identity(), false},
      {g.generator(1), g.identity(), false},
      {g.identity(), g.generator(0), false},
      {g.identity(), g.generator(1), false},
      s()};
  std::vector<GhatElement> conj_inv;
  for (const auto& c : conjugators) conj_inv.push_back(inverse(c));

  constexpr std::uint32_t kUnassigned = 0xffffffffu;
  std::vector<std::uint32_t> raw_class(kOrder, kUnassigned);
  std::vector<GhatClass> raw;
  for (std::uint32_t id = 0; id < kOrder; ++id) {
    if (raw_class[id] != kUnassigned) continue;
    const auto cls = static_cast<std::uint32_t>(raw.size());
    GhatClass c;
    c.representative = decode(id);
    c.coset = c.representative.coset;
    c.order = order(c.representative);
    std::vector<std::uint32_t> stack{id};
    raw_class[id] = cls;
    while (!stack.empty()) {
      const std::uint32_t cur = stack.back();
      stack.pop_back();
      c.members.push_back(cur);
      const GhatElement x = decode(cur);
      for (std::size_t k = 0; k < conjugators.size(); ++k) {
        const std::uint32_t y = encode(mul(mul(conjugators[k], x), conj_inv[k]));
        if (raw_class[y] == kUnassigned) {
          raw_class[y] = cls;
          stack.push_back(y);
        }
      }
    }
    std::sort(c.members.begin(), c.members.end());
    raw.push_back(std::move(c));
  }

  // Names. A subgroup class containing (p, q) is labelled by the classes of p
  // and q together with the twisted pair; a coset class by -q' for a member
  // (1, q', s).
  for (auto& c : raw) {
    if (!c.coset) {
      const IcosaClass x = g.class_of(c.representative.p);
      const IcosaClass y = g.class_of(c.representative.q);
      auto first = std::pair{x, y};
      auto second = twisted_partner(x, y);
      if (second < first) std::swap(first, second);
      c.left = first.first;
      c.right = first.second;
      c.name = label_of(first.first, first.second);
      if (first != second) c.name += "+" + label_of(second.first, second.second);
    } else {
      const auto it = std::find_if(c.members.begin(), c.members.end(),
                                   [&](std::uint32_t m) { return decode(m).p == g.identity(); });
      if (it == c.members.end()) throw Error("coset class without a (1, q, s) member");
      c.left = IcosaClass::C1;
      c.right = g.class_of(g.negate(decode(*it).q));
      c.name = "[" + label_of(IcosaClass::C1, c.right) + "]";
    }
  }

  const std::size_t n = raw.size();
  std::vector<std::size_t> raw_minus(n);
  for (std::size_t i = 0; i < n; ++i) raw_minus[i] = raw_class[encode(mul(minus_one(), raw[i].representative))];

  auto key = [&](std::size_t i) {
    const auto& c = raw[i];
    return std::tuple{c.order, c.members.size(), c.coset, index_of(c.left), index_of(c.right)};
  };
  auto by_key = [&](std::size_t a, std::size_t b) { return key(a) < key(b); };

  std::vector<std::size_t> positives, self_paired;
  for (std::size_t i = 0; i < n; ++i) {
    if (raw_minus[i] == i) {
      self_paired.push_back(i);
    } else {
      const auto& c = raw[i];
      const auto& m = raw[raw_minus[i]];
      if (std::pair{c.left, c.right} < std::pair{m.left, m.right}) positives.push_back(i);
    }
  }
  std::sort(positives.begin(), positives.end(), by_key);
  std::sort(self_paired.begin(), self_paired.end(), by_key);
  std::vector<std::size_t> order_list = positives;
  for (std::size_t i : positives) order_list.push_back(raw_minus[i]);
  order_list.insert(order_list.end(), self_paired.begin(), self_paired.end());
  if (order_list.size() != n) throw Error("class ordering lost classes");

  std::vector<std::size_t> new_index(n);
  for (std::size_t k = 0; k < n; ++k) new_index[order_list[k]] = k;
  classes_.reserve(n);
  minus_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    classes_.push_back(std::move(raw[order_list[k]]));
    minus_[k] = new_index[raw_minus[order_list[k]]];
    if (!classes_.back().coset) ++subgroup_count_;
  }
  class_of_.resize(kOrder);
  for (std::uint32_t id = 0; id < kOrder; ++id) class_of_[id] = static_cast<std::uint32_t>(new_index[raw_class[id]]);
}

std::size_t GhatGroup::class_index_by_name(std::string_view name) const {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (classes_[i].name == name) return i;
  }
  throw ParseError("unknown class name: " + std::string(name));
}

std::size_t GhatGroup::power_class(std::size_t c, int k) const {
  return class_index(power(classes_[c].representative, k));
}

std::string class_name(const GhatElement& g) { return GhatGroup::instance().class_of(g).name; }

}  // namespace spinindex
