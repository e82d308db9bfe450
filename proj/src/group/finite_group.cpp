#include "jordan/group/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "jordan/errors.hpp"

namespace jordan {

namespace {

constexpr std::size_t kCayleyTableLimit = 1024;

}  // namespace

GroupPtr FiniteGroup::closure(std::vector<GroupElement> generators, std::size_t cap) {
  if (generators.empty()) throw InvalidSpec("closure needs at least one generator");
  for (const auto& g : generators)
    if (!g.compatible_with(generators.front()))
      throw KindMismatch("generators differ in kind or shape");

  std::unordered_set<GroupElement, GroupElementHash> seen;
  std::deque<GroupElement> queue;
  GroupElement e = generators.front().identity_like();
  seen.insert(e);
  queue.push_back(e);
  while (!queue.empty()) {
    GroupElement x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      GroupElement y = x * g;
      if (seen.insert(y).second) {
        if (seen.size() > cap) throw CapExceeded(cap);
        queue.push_back(std::move(y));
      }
    }
  }

  auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  group->cap_ = cap;
  group->elements_.assign(seen.begin(), seen.end());
  std::sort(group->elements_.begin(), group->elements_.end());
  group->generators_ = std::move(generators);
  group->build_tables();
  return group;
}

void FiniteGroup::build_tables() {
  const std::size_t n = elements_.size();
  index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) index_.emplace(elements_[i], static_cast<ElemIndex>(i));
  identity_ = index_.at(elements_.front().identity_like());
  for (const auto& g : generators_) generator_indices_.push_back(index_.at(g));

  if (n <= kCayleyTableLimit) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        table_[a * n + b] = static_cast<std::uint16_t>(index_.at(elements_[a] * elements_[b]));
  }

  inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) inverse_[i] = index_.at(elements_[i].inverse());

  conj_.assign(generators_.size(), std::vector<ElemIndex>(n));
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    const GroupElement& g = generators_[k];
    const GroupElement gi = g.inverse();
    for (std::size_t i = 0; i < n; ++i) conj_[k][i] = index_.at(g * elements_[i] * gi);
  }

  orders_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (orders_[i] != 0) continue;
    std::size_t ord = 1;
    ElemIndex x = static_cast<ElemIndex>(i);
    while (x != identity_) {
      x = product(x, static_cast<ElemIndex>(i));
      ++ord;
    }
    orders_[i] = ord;
  }

  // Conjugacy classes are orbits under conjugation by the generators.
  constexpr ElemIndex kUnset = static_cast<ElemIndex>(-1);
  class_of_.assign(n, kUnset);
  for (std::size_t i = 0; i < n; ++i) {
    if (class_of_[i] != kUnset) continue;
    const ElemIndex rep = static_cast<ElemIndex>(i);
    std::size_t size = 0;
    std::vector<ElemIndex> stack{rep};
    class_of_[rep] = rep;
    while (!stack.empty()) {
      ElemIndex x = stack.back();
      stack.pop_back();
      ++size;
      for (const auto& table : conj_) {
        ElemIndex y = table[x];
        if (class_of_[y] == kUnset) {
          class_of_[y] = rep;
          stack.push_back(y);
        }
      }
    }
    class_reps_.push_back(rep);
    class_sizes_.push_back(size);
  }
}

ElemIndex FiniteGroup::product(ElemIndex a, ElemIndex b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  return index_.at(elements_[a] * elements_[b]);
}

ElemIndex FiniteGroup::index_of(const GroupElement& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) throw std::out_of_range("element not in group: " + g.to_string());
  return it->second;
}

std::size_t FiniteGroup::class_size(ElemIndex rep) const {
  auto it = std::lower_bound(class_reps_.begin(), class_reps_.end(), rep);
  if (it == class_reps_.end() || *it != rep) throw std::out_of_range("not a class representative");
  return class_sizes_[static_cast<std::size_t>(it - class_reps_.begin())];
}

}  // namespace jordan
