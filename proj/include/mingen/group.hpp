#pragma once

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mingen/error.hpp"

namespace mingen {

/// Index of a group element. Index 0 is the identity in every backend.
using Element = std::uint32_t;

/// A point moved by a permutation, 0-based.
using Point = std::uint16_t;

enum class Backend { cayley, perm_enumerated, quotient };

inline const char* to_string(Backend b) {
  switch (b) {
    case Backend::cayley: return "cayley";
    case Backend::perm_enumerated: return "perm-enumerated";
    case Backend::quotient: return "quotient";
  }
  return "?";
}

/// Groups up to this order get a materialized multiplication table whatever
/// their backend; larger ones multiply on the fly.
inline constexpr std::size_t kTableLimit = 4096;

/// Exhaustive associativity check is used up to this order, Light's test
/// over a generating set above it.
inline constexpr std::size_t kAssociativityExhaustive = 512;

inline constexpr std::size_t kDefaultMaxOrder = 200000;

/// First violated group axiom of a candidate Cayley table, if any.
struct TableDiagnostic {
  ErrorKind kind;
  std::string message;
};

/// Finite group with elements indexed 0..n-1 and identity 0.
///
/// A Group is a cheap handle to immutable shared state, so copies are free and
/// concurrent reads are safe. Three backends sit behind the same interface:
///  - cayley: an explicit n x n table;
///  - perm-enumerated: the elements of a permutation group, materialized by
///    closure, with products formed by composition and index lookup;
///  - quotient: cosets of a normal subgroup, always expressed relative to a
///    non-quotient root group so that quotients never nest.
class Group {
 public:
  /// The trivial group.
  Group() : Group(from_table_unchecked(1, {0})) {}

  static Group from_table(std::size_t n, std::vector<Element> table);
  static Group from_table_unchecked(std::size_t n, std::vector<Element> table);

  /// Enumerates the group generated by `gens` (each an image array on
  /// `degree` points, composition applies the left factor first).
  static Group from_permutations(std::size_t degree, const std::vector<std::vector<Point>>& gens,
                                 std::size_t max_order = kDefaultMaxOrder);

  /// Quotient backend. `root_to_elem` maps each root element to its coset,
  /// `elem_to_root` picks a representative per coset. Used by quotient_group().
  static Group make_quotient(Group root, std::vector<Element> root_to_elem,
                             std::vector<Element> elem_to_root);

  /// Re-indexes a subgroup (sorted element list containing 0) as its own
  /// Cayley-table group.
  static Group from_subgroup(const Group& parent, std::span<const Element> sorted_elements);

  std::size_t order() const noexcept { return d_->n; }
  Element identity() const noexcept { return 0; }
  Backend backend() const noexcept { return d_->backend; }
  bool is_trivial() const noexcept { return d_->n == 1; }

  Element mul(Element a, Element b) const {
    const Data& d = *d_;
    if (!d.table.empty())
      return d.table[static_cast<std::size_t>(a) * d.n + b];
    return slow_mul(a, b);
  }

  Element inv(Element a) const { return d_->inverse[a]; }

  Element conj(Element x, Element g) const { return mul(inv(g), mul(x, g)); }

  Element commutator(Element a, Element b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }

  /// A small generating set, fixed at construction.
  std::span<const Element> generators() const noexcept { return d_->generators; }

  bool has_table() const noexcept { return !d_->table.empty(); }

  // Flattening support: every group is a non-quotient group or a quotient of
  // exactly one non-quotient root.
  Group root() const;
  Element to_root(Element a) const;
  Element from_root(Element r) const;

  /// Permutation backend only: degree and image array of element `a`.
  std::size_t degree() const noexcept { return d_->perm ? d_->perm->degree : 0; }
  std::span<const Point> permutation(Element a) const {
    const auto& p = *d_->perm;
    return {p.images.data() + static_cast<std::size_t>(a) * p.degree, p.degree};
  }
  /// Permutation backend only: index of an image array, if it is a member.
  std::optional<Element> find_permutation(std::span<const Point> image) const;

  Element power(Element a, std::uint64_t k) const {
    Element r = 0;
    for (; k; k >>= 1) {
      if (k & 1)
        r = mul(r, a);
      a = mul(a, a);
    }
    return r;
  }

  std::uint64_t element_order(Element a) const {
    std::uint64_t k = 1;
    for (Element x = a; x != 0; x = mul(x, a))
      ++k;
    return k;
  }

  bool same_as(const Group& other) const noexcept { return d_ == other.d_; }

 private:
  struct PermData {
    std::size_t degree = 0;
    std::vector<Point> images;
    std::unordered_map<std::string, Element> index;
  };
  struct QuotientData;
  struct Data {
    std::size_t n = 1;
    Backend backend = Backend::cayley;
    std::vector<Element> table;
    std::vector<Element> inverse;
    std::vector<Element> generators;
    std::optional<PermData> perm;
    std::shared_ptr<const QuotientData> quotient;
  };

  explicit Group(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  Element slow_mul(Element a, Element b) const;
  static void fill_table_from_right_mult(Data& d, const std::vector<Element>& right_mult,
                                         std::span<const Element> gens);
  static std::vector<Element> greedy_generators(const Data& d);

  std::shared_ptr<const Data> d_;
};

struct Group::QuotientData {
  Group root;
  std::vector<Element> root_to_elem;
  std::vector<Element> elem_to_root;
};

inline Group Group::root() const { return d_->quotient ? d_->quotient->root : *this; }
inline Element Group::to_root(Element a) const { return d_->quotient ? d_->quotient->elem_to_root[a] : a; }
inline Element Group::from_root(Element r) const { return d_->quotient ? d_->quotient->root_to_elem[r] : r; }

namespace detail {

inline std::string perm_key(std::span<const Point> image) {
  std::string key(image.size() * sizeof(Point), '\0');
  std::memcpy(key.data(), image.data(), key.size());
  return key;
}

}  // namespace detail

/// Checks closure, identity at index 0, Latin-square rows and columns, and
/// associativity. Returns the first violation found.
inline std::optional<TableDiagnostic> validate_table(std::size_t n, std::span<const Element> table) {
  if (n == 0)
    return TableDiagnostic{ErrorKind::parse_error, "order must be positive"};
  if (table.size() != n * n)
    return TableDiagnostic{ErrorKind::parse_error, "table must have n*n entries"};
  auto at = [&](std::size_t x, std::size_t y) { return table[x * n + y]; };
  for (std::size_t i = 0; i < n * n; ++i)
    if (table[i] >= n)
      return TableDiagnostic{ErrorKind::parse_error,
                             "entry " + std::to_string(table[i]) + " at row " + std::to_string(i / n) +
                                 " out of range"};
  // locate a two-sided identity
  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = at(e, x) == x && at(x, e) == x;
    if (ok)
      identity = e;
  }
  if (!identity)
    return TableDiagnostic{ErrorKind::not_a_group, "no identity element (row/column of 0 is not identity)"};
  if (*identity != 0)
    return TableDiagnostic{ErrorKind::identity_not_zero,
                           "identity is element " + std::to_string(*identity) + ", expected 0"};
  std::vector<std::size_t> seen(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::size_t y = 0; y < n; ++y) {
      auto v = at(x, y);
      if (seen[v] != n)
        return TableDiagnostic{ErrorKind::not_a_group,
                               "row " + std::to_string(x) + " repeats " + std::to_string(v) + " at columns " +
                                   std::to_string(seen[v]) + " and " + std::to_string(y)};
      seen[v] = y;
    }
  }
  for (std::size_t y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::size_t x = 0; x < n; ++x) {
      auto v = at(x, y);
      if (seen[v] != n)
        return TableDiagnostic{ErrorKind::not_a_group,
                               "column " + std::to_string(y) + " repeats " + std::to_string(v) + " at rows " +
                                   std::to_string(seen[v]) + " and " + std::to_string(x)};
      seen[v] = x;
    }
  }
  auto violation = [&](std::size_t x, std::size_t a, std::size_t y) {
    return TableDiagnostic{ErrorKind::not_a_group, "associativity fails for (" + std::to_string(x) + ", " +
                                                       std::to_string(a) + ", " + std::to_string(y) + ")"};
  };
  if (n <= kAssociativityExhaustive) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t y = 0; y < n; ++y)
          if (at(at(x, a), y) != at(x, at(a, y)))
            return violation(x, a, y);
    return std::nullopt;
  }
  // Light's test: the elements a with (xa)y = x(ay) for all x, y form a
  // submagma, so checking a generating set of the table's magma suffices.
  std::vector<char> in(n, 0);
  std::vector<std::size_t> members{0}, gens;
  in[0] = 1;
  for (std::size_t g = 1; g < n; ++g) {
    if (in[g])
      continue;
    gens.push_back(g);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (auto s : gens) {
        auto v = at(members[i], s);
        if (!in[v]) {
          in[v] = 1;
          members.push_back(v);
        }
      }
  }
  for (auto a : gens)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (at(at(x, a), y) != at(x, at(a, y)))
          return violation(x, a, y);
  return std::nullopt;
}

inline Group Group::from_table(std::size_t n, std::vector<Element> table) {
  if (auto diag = validate_table(n, table))
    throw Error(diag->kind, diag->message);
  return from_table_unchecked(n, std::move(table));
}

inline Group Group::from_table_unchecked(std::size_t n, std::vector<Element> table) {
  auto d = std::make_shared<Data>();
  d->n = n;
  d->backend = Backend::cayley;
  d->table = std::move(table);
  d->inverse.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (d->table[x * n + y] == 0) {
        d->inverse[x] = static_cast<Element>(y);
        break;
      }
  d->generators = greedy_generators(*d);
  return Group(std::move(d));
}

// Greedy generating set in increasing index order; for a group of order n it
// has at most log2(n) elements since every kept element at least doubles the
// closure.
inline std::vector<Element> Group::greedy_generators(const Data& d) {
  std::vector<char> in(d.n, 0);
  std::vector<Element> members{0}, gens;
  in[0] = 1;
  for (Element g = 1; g < d.n; ++g) {
    if (in[g])
      continue;
    gens.push_back(g);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (auto s : gens) {
        auto v = d.table[static_cast<std::size_t>(members[i]) * d.n + s];
        if (!in[v]) {
          in[v] = 1;
          members.push_back(v);
        }
      }
  }
  return gens;
}

inline void Group::fill_table_from_right_mult(Data& d, const std::vector<Element>& right_mult,
                                              std::span<const Element> gens) {
  const std::size_t n = d.n, k = gens.size();
  // spanning tree of the Cayley graph: y = parent[y] * gens[via[y]]
  std::vector<Element> order{0}, parent(n, 0), via(n, 0);
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t s = 0; s < k; ++s) {
      auto y = right_mult[static_cast<std::size_t>(order[i]) * k + s];
      if (!seen[y]) {
        seen[y] = 1;
        parent[y] = order[i];
        via[y] = static_cast<Element>(s);
        order.push_back(y);
      }
    }
  if (order.size() != n)
    throw Error(ErrorKind::internal, "generators do not reach every element");
  d.table.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    Element* row = d.table.data() + x * n;
    row[0] = static_cast<Element>(x);
    for (std::size_t i = 1; i < n; ++i) {
      auto y = order[i];
      row[y] = right_mult[static_cast<std::size_t>(row[parent[y]]) * k + via[y]];
    }
  }
}

inline Group Group::from_permutations(std::size_t degree, const std::vector<std::vector<Point>>& gens,
                                      std::size_t max_order) {
  if (degree == 0)
    throw Error(ErrorKind::bad_params, "permutation degree must be positive");
  auto d = std::make_shared<Data>();
  d->backend = Backend::perm_enumerated;
  PermData pd;
  pd.degree = degree;
  std::vector<Point> id(degree);
  for (std::size_t i = 0; i < degree; ++i)
    id[i] = static_cast<Point>(i);
  pd.images = id;
  pd.index.emplace(detail::perm_key(id), 0);

  // distinct non-identity generators, in input order
  std::vector<std::vector<Point>> uniq;
  for (const auto& g : gens) {
    if (g == id || std::find(uniq.begin(), uniq.end(), g) != uniq.end())
      continue;
    uniq.push_back(g);
  }
  const std::size_t k = uniq.size();
  std::vector<Element> right_mult;
  std::vector<Point> buf(degree);
  for (std::size_t i = 0; i * degree < pd.images.size(); ++i) {
    for (std::size_t s = 0; s < k; ++s) {
      const Point* x = pd.images.data() + i * degree;
      for (std::size_t p = 0; p < degree; ++p)
        buf[p] = uniq[s][x[p]];
      auto key = detail::perm_key(buf);
      auto it = pd.index.find(key);
      Element idx;
      if (it == pd.index.end()) {
        idx = static_cast<Element>(pd.images.size() / degree);
        if (static_cast<std::size_t>(idx) + 1 > max_order)
          throw Error(ErrorKind::order_exceeded,
                      "permutation group order exceeds max_order " + std::to_string(max_order));
        pd.index.emplace(std::move(key), idx);
        pd.images.insert(pd.images.end(), buf.begin(), buf.end());
      } else {
        idx = it->second;
      }
      right_mult.push_back(idx);
    }
  }
  d->n = pd.images.size() / degree;
  for (const auto& g : uniq)
    d->generators.push_back(pd.index.at(detail::perm_key(g)));
  d->inverse.assign(d->n, 0);
  for (std::size_t i = 0; i < d->n; ++i) {
    const Point* x = pd.images.data() + i * degree;
    for (std::size_t p = 0; p < degree; ++p)
      buf[x[p]] = static_cast<Point>(p);
    d->inverse[i] = pd.index.at(detail::perm_key(buf));
  }
  if (d->n <= kTableLimit)
    fill_table_from_right_mult(*d, right_mult, d->generators);
  d->perm = std::move(pd);
  return Group(std::move(d));
}

inline Group Group::make_quotient(Group root, std::vector<Element> root_to_elem, std::vector<Element> elem_to_root) {
  auto d = std::make_shared<Data>();
  d->backend = Backend::quotient;
  d->n = elem_to_root.size();
  auto q = std::make_shared<QuotientData>();
  q->root = std::move(root);
  q->root_to_elem = std::move(root_to_elem);
  q->elem_to_root = std::move(elem_to_root);
  d->inverse.resize(d->n);
  for (std::size_t c = 0; c < d->n; ++c)
    d->inverse[c] = q->root_to_elem[q->root.inv(q->elem_to_root[c])];
  for (auto g : q->root.generators()) {
    auto c = q->root_to_elem[g];
    if (c != 0 && std::find(d->generators.begin(), d->generators.end(), c) == d->generators.end())
      d->generators.push_back(c);
  }
  d->quotient = q;
  if (d->n <= kTableLimit) {
    const std::size_t k = d->generators.size();
    std::vector<Element> right_mult(d->n * k);
    for (std::size_t c = 0; c < d->n; ++c)
      for (std::size_t s = 0; s < k; ++s)
        right_mult[c * k + s] =
            q->root_to_elem[q->root.mul(q->elem_to_root[c], q->elem_to_root[d->generators[s]])];
    fill_table_from_right_mult(*d, right_mult, d->generators);
  }
  return Group(std::move(d));
}

inline Group Group::from_subgroup(const Group& parent, std::span<const Element> sorted_elements) {
  const std::size_t m = sorted_elements.size();
  if (m == 0 || sorted_elements.front() != 0)
    throw Error(ErrorKind::internal, "subgroup element list must start with the identity");
  if (m > 4 * kTableLimit)
    throw Error(ErrorKind::order_exceeded, "subgroup too large to tabulate");
  std::unordered_map<Element, Element> pos;
  for (std::size_t i = 0; i < m; ++i)
    pos.emplace(sorted_elements[i], static_cast<Element>(i));
  std::vector<Element> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto it = pos.find(parent.mul(sorted_elements[i], sorted_elements[j]));
      if (it == pos.end())
        throw Error(ErrorKind::internal, "element list is not closed under multiplication");
      table[i * m + j] = it->second;
    }
  return from_table_unchecked(m, std::move(table));
}

inline std::optional<Element> Group::find_permutation(std::span<const Point> image) const {
  if (!d_->perm)
    return std::nullopt;
  auto it = d_->perm->index.find(detail::perm_key(image));
  if (it == d_->perm->index.end())
    return std::nullopt;
  return it->second;
}

inline Element Group::slow_mul(Element a, Element b) const {
  const Data& d = *d_;
  if (d.quotient) {
    const auto& q = *d.quotient;
    return q.root_to_elem[q.root.mul(q.elem_to_root[a], q.elem_to_root[b])];
  }
  const auto& p = *d.perm;
  thread_local std::string key;
  key.resize(p.degree * sizeof(Point));
  const Point* x = p.images.data() + static_cast<std::size_t>(a) * p.degree;
  const Point* y = p.images.data() + static_cast<std::size_t>(b) * p.degree;
  for (std::size_t i = 0; i < p.degree; ++i) {
    Point v = y[x[i]];
    std::memcpy(key.data() + i * sizeof(Point), &v, sizeof(Point));
  }
  return p.index.find(key)->second;
}

}  // namespace mingen
