#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

#include "mingen/arith.hpp"
#include "mingen/subgroup.hpp"

namespace mingen {

inline constexpr std::size_t kDefaultMaxLattice = 10000;

/// Conjugacy classes, each sorted, ordered by smallest member.
inline std::vector<std::vector<Element>> conjugacy_classes(const Group& G) {
  std::vector<char> seen(G.order(), 0);
  std::vector<std::vector<Element>> classes;
  for (Element x = 0; x < G.order(); ++x) {
    if (seen[x])
      continue;
    std::vector<Element> cls{x};
    seen[x] = 1;
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (auto g : G.generators()) {
        auto y = G.conj(cls[i], g);
        if (!seen[y]) {
          seen[y] = 1;
          cls.push_back(y);
        }
      }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

namespace detail {

// Closes `gens` (already inside ws's closure) under conjugation by G's
// generators. Conjugating the generators of the current closure by the
// generators of G is enough: once g^-1 H g is inside H for each generator g,
// H is normal.
inline Subgroup normal_closure_from(const Group& G, std::vector<Element> gens) {
  ClosureWorkspace ws(G.order());
  ws.reset();
  ws.add(0);
  std::vector<Element> kept;
  auto push = [&](Element x) {
    if (ws.contains(x))
      return;
    kept.push_back(x);
    extend_closure(G, ws, kept, G.order());
  };
  for (auto s : gens)
    push(s);
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (auto g : G.generators())
      push(G.conj(kept[i], g));
  return Subgroup(G.order(), std::move(kept), ws.members(), true);
}

struct SubgroupHash {
  std::size_t operator()(std::span<const std::uint64_t> bits) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto w : bits)
      h = (h ^ w) * 1099511628211ull + (h >> 7);
    return h;
  }
};

// Set of subgroups with identity by element set.
class SubgroupSet {
 public:
  bool insert(Subgroup H) {
    auto h = SubgroupHash{}(H.bits());
    auto [lo, hi] = index_.equal_range(h);
    for (auto it = lo; it != hi; ++it)
      if (items_[it->second] == H)
        return false;
    index_.emplace(h, items_.size());
    items_.push_back(std::move(H));
    return true;
  }
  std::vector<Subgroup>& items() { return items_; }

 private:
  std::vector<Subgroup> items_;
  std::unordered_multimap<std::size_t, std::size_t> index_;
};

inline std::vector<Subgroup> inclusion_minimal(std::vector<Subgroup> candidates) {
  std::sort(candidates.begin(), candidates.end(), canonical_less);
  std::vector<Subgroup> out;
  for (auto& c : candidates) {
    bool minimal = true;
    for (const auto& o : out)
      if (o.is_subset_of(c)) {
        minimal = false;
        break;
      }
    if (minimal)
      out.push_back(std::move(c));
  }
  return out;
}

}  // namespace detail

inline Subgroup normal_closure(const Group& G, std::span<const Element> S) {
  std::vector<Element> gens;
  for (auto s : S)
    if (s != 0)
      gens.push_back(s);
  return detail::normal_closure_from(G, std::move(gens));
}

inline Subgroup normal_closure(const Group& G, std::initializer_list<Element> S) {
  return normal_closure(G, std::span<const Element>(S.begin(), S.size()));
}

/// Distinct normal closures of single non-identity elements, one per
/// conjugacy class, in canonical order.
inline std::vector<Subgroup> class_normal_closures(const Group& G) {
  detail::SubgroupSet set;
  auto classes = conjugacy_classes(G);
  for (std::size_t i = 1; i < classes.size(); ++i)
    set.insert(normal_closure(G, {classes[i].front()}));
  auto out = std::move(set.items());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

/// Inclusion-minimal nontrivial normal subgroups: every minimal normal
/// subgroup is the normal closure of any of its non-identity elements.
inline std::vector<Subgroup> minimal_normal_subgroups(const Group& G) {
  if (G.is_trivial())
    throw Error(ErrorKind::trivial_group, "the trivial group has no minimal normal subgroups");
  return detail::inclusion_minimal(class_normal_closures(G));
}

/// All normal subgroups, as the join-closure of the single-class normal
/// closures together with the trivial subgroup.
inline std::vector<Subgroup> normal_subgroup_lattice(const Group& G, std::size_t max_lattice = kDefaultMaxLattice) {
  detail::SubgroupSet set;
  set.insert(Subgroup::trivial(G.order()));
  for (auto& H : class_normal_closures(G))
    set.insert(std::move(H));
  auto& items = set.items();
  if (items.size() > max_lattice)
    throw Error(ErrorKind::lattice_too_large, "more than " + std::to_string(max_lattice) + " normal subgroups");
  for (std::size_t i = 1; i < items.size(); ++i)
    for (std::size_t j = 1; j < i; ++j) {
      if (items[j].is_subset_of(items[i]) || items[i].is_subset_of(items[j]))
        continue;
      Subgroup J = join(G, items[i], items[j].generators(), true);
      if (set.insert(std::move(J)) && items.size() > max_lattice)
        throw Error(ErrorKind::lattice_too_large, "more than " + std::to_string(max_lattice) + " normal subgroups");
    }
  std::vector<Subgroup> out = items;
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

/// Intersection of all maximal normal subgroups.
inline Subgroup maximal_normal_intersection(const Group& G, std::size_t max_lattice = kDefaultMaxLattice) {
  if (G.is_trivial())
    throw Error(ErrorKind::trivial_group, "the trivial group has no maximal normal subgroups");
  auto lattice = normal_subgroup_lattice(G, max_lattice);
  std::vector<const Subgroup*> proper;
  for (const auto& H : lattice)
    if (H.order() < G.order())
      proper.push_back(&H);
  Subgroup J = whole_group(G);
  for (auto* M : proper) {
    bool maximal = true;
    for (auto* K : proper)
      if (K->order() > M->order() && M->is_subset_of(*K)) {
        maximal = false;
        break;
      }
    if (maximal)
      J = intersection(G, J, *M);
  }
  return J;
}

/// Tie-breaking among candidate minimal normal subgroups: canonical order by
/// default, or a seeded uniform choice.
class TieBreak {
 public:
  TieBreak() = default;
  explicit TieBreak(std::uint64_t seed) : rng_(std::mt19937_64(seed)) {}

  std::size_t pick(std::size_t count) {
    if (!rng_ || count <= 1)
      return 0;
    return std::uniform_int_distribution<std::size_t>(0, count - 1)(*rng_);
  }

 private:
  std::optional<std::mt19937_64> rng_;
};

/// Normal subgroups H of G with A < H <= within and H/A minimal normal in
/// G/A, in canonical order. `A` and `within` must be normal in G.
inline std::vector<Subgroup> minimal_normal_over(const Group& G, const Subgroup& A, const Subgroup& within) {
  detail::SubgroupSet set;
  for (const auto& cls : conjugacy_classes(G)) {
    auto x = cls.front();
    if (A.contains(x) || !within.contains(x))
      continue;
    std::vector<Element> gens(A.generators().begin(), A.generators().end());
    gens.push_back(x);
    set.insert(detail::normal_closure_from(G, std::move(gens)));
  }
  return detail::inclusion_minimal(std::move(set.items()));
}

struct LayerRecord {
  std::size_t order = 1;
  bool abelian = true;
  /// Elements of the upper group whose cosets generate the layer.
  std::vector<Element> layer_generators;
};

/// G = groups[0] > groups[1] > ... > groups[m] = 1, each normal in G;
/// layers[i] describes groups[i] / groups[i+1].
struct ChiefSeries {
  std::vector<Subgroup> groups;
  std::vector<LayerRecord> layers;

  std::size_t length() const noexcept { return layers.size(); }

  std::vector<std::size_t> layer_orders() const {
    std::vector<std::size_t> out;
    for (const auto& l : layers)
      out.push_back(l.order);
    return out;
  }
};

namespace detail {

inline LayerRecord describe_layer(const Group& G, const Subgroup& upper, const Subgroup& lower) {
  LayerRecord rec;
  rec.order = upper.order() / lower.order();
  ClosureWorkspace ws(G.order());
  detail::closure_into(G, ws, lower.generators(), G.order());
  std::vector<Element> gens(lower.generators().begin(), lower.generators().end());
  for (auto x : upper.elements()) {
    if (ws.contains(x))
      continue;
    rec.layer_generators.push_back(x);
    gens.push_back(x);
    detail::extend_closure(G, ws, gens, G.order());
  }
  for (auto a : rec.layer_generators)
    for (auto b : rec.layer_generators)
      if (!lower.contains(G.commutator(a, b))) {
        rec.abelian = false;
        return rec;
      }
  return rec;
}

}  // namespace detail

/// Chief series grown from the bottom: starting at A = 1, repeatedly adjoin
/// a minimal normal subgroup of G/A until A = G.
inline ChiefSeries chief_series(const Group& G, TieBreak tie = {}) {
  std::vector<Subgroup> bottom_up{Subgroup::trivial(G.order())};
  const Subgroup all = whole_group(G);
  while (bottom_up.back().order() < G.order()) {
    auto candidates = minimal_normal_over(G, bottom_up.back(), all);
    if (candidates.empty())
      throw Error(ErrorKind::internal, "no minimal normal subgroup above a proper normal subgroup");
    bottom_up.push_back(std::move(candidates[tie.pick(candidates.size())]));
  }
  ChiefSeries cs;
  cs.groups.assign(bottom_up.rbegin(), bottom_up.rend());
  for (std::size_t i = 0; i + 1 < cs.groups.size(); ++i)
    cs.layers.push_back(detail::describe_layer(G, cs.groups[i], cs.groups[i + 1]));
  return cs;
}

inline bool is_abelian(const Group& G) {
  auto gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (G.mul(gens[i], gens[j]) != G.mul(gens[j], gens[i]))
        return false;
  return true;
}

inline bool is_abelian(const Group& G, const Subgroup& H) {
  auto gens = H.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (G.mul(gens[i], gens[j]) != G.mul(gens[j], gens[i]))
        return false;
  return true;
}

inline bool is_simple(const Group& G) {
  if (G.is_trivial())
    return false;
  for (const auto& cls : conjugacy_classes(G)) {
    if (cls.front() == 0)
      continue;
    if (normal_closure(G, {cls.front()}).order() != G.order())
      return false;
  }
  return true;
}

/// Solvable iff every chief layer is abelian.
inline bool is_solvable(const Group& G) {
  for (const auto& layer : chief_series(G).layers)
    if (!layer.abelian)
      return false;
  return true;
}

struct Classification {
  bool abelian = false;
  bool simple = false;
  bool solvable = false;
};

inline Classification classify(const Group& G) { return {is_abelian(G), is_simple(G), is_solvable(G)}; }

inline Subgroup center(const Group& G) {
  std::vector<Element> z;
  for (Element x = 0; x < G.order(); ++x) {
    bool central = true;
    for (auto g : G.generators())
      if (G.mul(x, g) != G.mul(g, x)) {
        central = false;
        break;
      }
    if (central)
      z.push_back(x);
  }
  auto sub = Subgroup(G.order(), {}, z);
  return intersection(G, whole_group(G), sub);
}

/// Normal closure of the commutators of pairs of generators, which equals
/// the subgroup generated by all commutators.
inline Subgroup derived_subgroup(const Group& G) {
  std::vector<Element> comms;
  auto gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      comms.push_back(G.commutator(gens[i], gens[j]));
  return normal_closure(G, comms);
}

inline Subgroup socle(const Group& G) {
  auto mins = minimal_normal_subgroups(G);
  std::vector<Element> gens;
  for (const auto& M : mins)
    gens.insert(gens.end(), M.generators().begin(), M.generators().end());
  return detail::normal_closure_from(G, std::move(gens));
}

/// Basis of an abelian subgroup H of G: elements x_1..x_r with
/// H = <x_1> x ... x <x_r> and |x_{i+1}| dividing |x_i| (invariant factors),
/// so r = d(H).
inline std::vector<Element> abelian_basis(const Group& G, const Subgroup& H) {
  if (!is_abelian(G, H))
    throw Error(ErrorKind::not_abelian, "abelian_basis needs an abelian group");
  if (H.is_trivial())
    return {};
  std::map<std::uint64_t, std::vector<Element>> by_prime;  // prime -> p-primary basis, orders non-increasing
  std::uint64_t rest = H.order();
  while (rest > 1) {
    auto p = smallest_prime_divisor(rest);
    while (rest % p == 0)
      rest /= p;
    std::vector<Element> sylow;
    for (auto x : H.elements()) {
      auto o = G.element_order(x);
      while (o % p == 0)
        o /= p;
      if (o == 1)
        sylow.push_back(x);
    }
    // Greedy: take an element whose order modulo the span so far is maximal
    // and equals its own order. Such a lift exists because earlier picks had
    // maximal order, which keeps the span a direct summand.
    std::vector<Element> basis;
    ClosureWorkspace ws(G.order());
    ws.reset();
    ws.add(0);
    while (ws.size() < sylow.size()) {
      auto coset_order = [&](Element y) {
        std::uint64_t k = 1;
        for (Element z = y; !ws.contains(z); z = G.mul(z, y))
          ++k;
        return k;
      };
      std::uint64_t best = 0;
      for (auto y : sylow)
        best = std::max(best, coset_order(y));
      std::optional<Element> pick;
      for (auto y : sylow)
        if (coset_order(y) == best && G.element_order(y) == best) {
          pick = y;
          break;
        }
      if (!pick)
        throw Error(ErrorKind::internal, "no order-preserving lift while building an abelian basis");
      basis.push_back(*pick);
      detail::extend_closure(G, ws, basis, G.order());
    }
    by_prime[p] = std::move(basis);
  }
  std::size_t rank = 0;
  for (const auto& [p, b] : by_prime)
    rank = std::max(rank, b.size());
  std::vector<Element> out(rank, 0);
  for (const auto& [p, b] : by_prime)
    for (std::size_t i = 0; i < b.size(); ++i)
      out[i] = G.mul(out[i], b[i]);
  return out;
}

inline std::vector<Element> abelian_basis(const Group& A) { return abelian_basis(A, whole_group(A)); }

enum class FactorKind { abelian_prime_cyclic, nonabelian_simple };

struct SimpleFactorization {
  std::vector<Subgroup> factors;
  std::vector<FactorKind> kinds;
};

/// Splits a product of simple groups into its simple direct factors, sorted by
/// non-increasing order. The nonabelian factors are the nonabelian minimal
/// normal subgroups; the abelian ones come from the center's basis.
inline SimpleFactorization decompose_product_of_simples(const Group& G) {
  SimpleFactorization out;
  if (G.is_trivial())
    return out;
  std::vector<std::pair<Subgroup, FactorKind>> found;
  for (auto& M : minimal_normal_subgroups(G))
    if (!is_abelian(G, M))
      found.emplace_back(std::move(M), FactorKind::nonabelian_simple);
  const Subgroup Z = center(G);
  for (auto b : abelian_basis(G, Z)) {
    auto m = G.element_order(b);
    auto rest = m;
    while (rest > 1) {
      auto q = smallest_prime_divisor(rest);
      rest /= q;
      if (rest % q == 0)
        throw Error(ErrorKind::not_product_of_simples, "center has an element of order divisible by " +
                                                           std::to_string(q) + "^2");
      found.emplace_back(closure(G, {G.power(b, m / q)}), FactorKind::abelian_prime_cyclic);
    }
  }
  std::uint64_t product = 1;
  std::vector<Element> gens;
  for (const auto& [F, kind] : found) {
    product *= F.order();
    gens.insert(gens.end(), F.generators().begin(), F.generators().end());
  }
  if (product != G.order() || closure(G, gens).order() != G.order())
    throw Error(ErrorKind::not_product_of_simples, "simple normal factors do not multiply to the group");
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.first.order() != b.first.order())
      return a.first.order() > b.first.order();
    return canonical_less(a.first, b.first);
  });
  for (auto& [F, kind] : found) {
    out.factors.push_back(Subgroup(G.order(), {F.generators().begin(), F.generators().end()},
                                   {F.elements().begin(), F.elements().end()}, true));
    out.kinds.push_back(kind);
  }
  return out;
}

}  // namespace mingen
