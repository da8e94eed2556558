#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mingen/group.hpp"

namespace mingen {

/// A materialized subgroup of some Group: its generators plus the full,
/// sorted element list and a membership bitmap.
class Subgroup {
 public:
  Subgroup() = default;

  /// Builds from a (not necessarily sorted) complete element list.
  Subgroup(std::size_t parent_order, std::vector<Element> generators, std::vector<Element> elements,
           std::optional<bool> normal = std::nullopt)
    : gens_(std::move(generators)), elements_(std::move(elements)), bits_((parent_order + 63) / 64, 0),
      normal_(normal) {
    std::sort(elements_.begin(), elements_.end());
    for (auto x : elements_)
      bits_[x >> 6] |= std::uint64_t{1} << (x & 63);
  }

  static Subgroup trivial(std::size_t parent_order) { return Subgroup(parent_order, {}, {0}, true); }

  std::size_t order() const noexcept { return elements_.size(); }
  bool is_trivial() const noexcept { return elements_.size() == 1; }
  bool contains(Element x) const noexcept { return (bits_[x >> 6] >> (x & 63)) & 1; }
  std::span<const Element> elements() const noexcept { return elements_; }
  std::span<const Element> generators() const noexcept { return gens_; }
  /// Normality as established by whoever built the subgroup, if known.
  std::optional<bool> is_normal() const noexcept { return normal_; }

  bool is_subset_of(const Subgroup& other) const noexcept {
    if (order() > other.order())
      return false;
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & ~other.bits_[i])
        return false;
    return true;
  }

  bool operator==(const Subgroup& other) const noexcept { return bits_ == other.bits_; }

  std::span<const std::uint64_t> bits() const noexcept { return bits_; }

 private:
  std::vector<Element> gens_;
  std::vector<Element> elements_;
  std::vector<std::uint64_t> bits_;
  std::optional<bool> normal_;
};

/// Canonical order: by order, then lexicographically by sorted elements.
inline bool canonical_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order())
    return a.order() < b.order();
  auto x = a.elements(), y = b.elements();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

/// Scratch state for repeated closures over the same group. Membership uses
/// epoch stamps so resetting is O(1).
class ClosureWorkspace {
 public:
  explicit ClosureWorkspace(std::size_t n) : stamp_(n, 0) {}

  void reset() {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    members_.clear();
  }
  bool contains(Element x) const { return stamp_[x] == epoch_; }
  void add(Element x) {
    stamp_[x] = epoch_;
    members_.push_back(x);
  }
  std::vector<Element>& members() { return members_; }
  std::size_t size() const { return members_.size(); }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<Element> members_;
};

namespace detail {

// Extends the subgroup currently held in `ws` (members closed under
// multiplication, generated by `gens` minus the last entry) by gens.back().
// The member list stays a union of right cosets H*r of the old subgroup H,
// and new cosets are discovered by multiplying coset representatives by all
// generators. Stops early once the closure exceeds `stop_above` elements.
inline void extend_closure(const Group& G, ClosureWorkspace& ws, std::span<const Element> gens,
                           std::size_t stop_above) {
  Element x = gens.back();
  if (ws.contains(x))
    return;
  auto& m = ws.members();
  const std::size_t old = m.size();
  std::vector<Element> reps{0};
  auto add_coset = [&](Element r) {
    for (std::size_t i = 0; i < old; ++i)
      ws.add(G.mul(m[i], r));
  };
  add_coset(x);
  reps.push_back(x);
  for (std::size_t i = 1; i < reps.size(); ++i) {
    if (m.size() > stop_above)
      return;
    for (auto s : gens) {
      Element y = G.mul(reps[i], s);
      if (!ws.contains(y)) {
        add_coset(y);
        reps.push_back(y);
      }
    }
  }
}

inline void closure_into(const Group& G, ClosureWorkspace& ws, std::span<const Element> gens,
                         std::size_t stop_above) {
  ws.reset();
  ws.add(0);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    detail::extend_closure(G, ws, gens.first(i + 1), stop_above);
    if (ws.size() > stop_above)
      return;
  }
}

}  // namespace detail

/// Smallest subgroup containing `gens`.
inline Subgroup closure(const Group& G, std::span<const Element> gens) {
  ClosureWorkspace ws(G.order());
  detail::closure_into(G, ws, gens, G.order());
  std::vector<Element> kept;
  for (auto g : gens)
    if (g != 0 && std::find(kept.begin(), kept.end(), g) == kept.end())
      kept.push_back(g);
  return Subgroup(G.order(), std::move(kept), ws.members());
}

inline Subgroup closure(const Group& G, std::initializer_list<Element> gens) {
  return closure(G, std::span<const Element>(gens.begin(), gens.size()));
}

/// Whether `gens` generates G. A proper subgroup has at most n/2 elements, so
/// the closure stops as soon as it passes that.
inline bool generates(const Group& G, std::span<const Element> gens, ClosureWorkspace& ws) {
  const std::size_t n = G.order();
  if (n == 1)
    return true;
  detail::closure_into(G, ws, gens, n / 2);
  return ws.size() > n / 2;
}

inline bool is_generating_set(std::span<const Element> gens, const Group& G) {
  ClosureWorkspace ws(G.order());
  return generates(G, gens, ws);
}

inline bool is_generating_set(std::initializer_list<Element> gens, const Group& G) {
  return is_generating_set(std::span<const Element>(gens.begin(), gens.size()), G);
}

/// Smallest subgroup containing H and the extra elements.
inline Subgroup join(const Group& G, const Subgroup& H, std::span<const Element> extra,
                     std::optional<bool> normal = std::nullopt) {
  std::vector<Element> gens(H.generators().begin(), H.generators().end());
  for (auto x : extra)
    if (!H.contains(x))
      gens.push_back(x);
  ClosureWorkspace ws(G.order());
  detail::closure_into(G, ws, gens, G.order());
  return Subgroup(G.order(), std::move(gens), ws.members(), normal);
}

inline bool is_normal_subgroup(const Group& G, const Subgroup& H) {
  for (auto g : G.generators())
    for (auto h : H.generators())
      if (!H.contains(G.conj(h, g)))
        return false;
  return true;
}

inline Subgroup whole_group(const Group& G) {
  std::vector<Element> all(G.order());
  for (std::size_t i = 0; i < all.size(); ++i)
    all[i] = static_cast<Element>(i);
  return Subgroup(G.order(), {G.generators().begin(), G.generators().end()}, std::move(all), true);
}

inline Subgroup intersection(const Group& G, const Subgroup& A, const Subgroup& B) {
  std::vector<Element> common;
  for (auto x : A.elements())
    if (B.contains(x))
      common.push_back(x);
  // greedy generators of the intersection
  std::vector<Element> gens;
  ClosureWorkspace ws(G.order());
  ws.reset();
  ws.add(0);
  for (auto x : common)
    if (!ws.contains(x)) {
      gens.push_back(x);
      detail::extend_closure(G, ws, gens, G.order());
    }
  std::optional<bool> normal;
  if (A.is_normal() == true && B.is_normal() == true)
    normal = true;
  return Subgroup(G.order(), std::move(gens), std::move(common), normal);
}

}  // namespace mingen
