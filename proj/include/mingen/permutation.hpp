#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "mingen/group.hpp"

namespace mingen {

/// Image array of a permutation on 0..n-1.
using Perm = std::vector<Point>;

/// A permutation group given by generators: degree plus image arrays. The
/// product x*y applies x first, then y (points are acted on from the right).
struct PermutationDesc {
  std::size_t degree = 1;
  std::vector<Perm> generators;

  bool operator==(const PermutationDesc&) const = default;
};

inline Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), Point{0});
  return p;
}

inline bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i)
      return false;
  return true;
}

inline Perm compose(const Perm& x, const Perm& y) {
  Perm r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    r[i] = y[x[i]];
  return r;
}

inline Perm inverse(const Perm& x) {
  Perm r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    r[x[i]] = static_cast<Point>(i);
  return r;
}

/// Builds a permutation of degree n from disjoint cycles of 0-based points.
inline Perm from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles) {
  Perm p = identity_perm(n);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i)
      p[c[i]] = c[(i + 1) % c.size()];
  return p;
}

/// Right-regular action of a group on its own elements.
inline PermutationDesc regular_perm(const Group& G) {
  if (G.order() > 0xFFFF)
    throw Error(ErrorKind::bad_params, "group too large for a regular representation");
  PermutationDesc out{G.order(), {}};
  for (auto g : G.generators()) {
    Perm p(G.order());
    for (Element x = 0; x < G.order(); ++x)
      p[x] = static_cast<Point>(G.mul(x, g));
    out.generators.push_back(std::move(p));
  }
  return out;
}

/// M x K on disjoint points: M on 0..deg(M)-1, K on the following deg(K).
/// The generators are those of M followed by those of K.
inline PermutationDesc disjoint_product(const PermutationDesc& M, const PermutationDesc& K) {
  const std::size_t n = M.degree + K.degree;
  PermutationDesc out{n, {}};
  for (const auto& g : M.generators) {
    Perm p = identity_perm(n);
    std::copy(g.begin(), g.end(), p.begin());
    out.generators.push_back(std::move(p));
  }
  for (const auto& g : K.generators) {
    Perm p = identity_perm(n);
    for (std::size_t i = 0; i < K.degree; ++i)
      p[M.degree + i] = static_cast<Point>(M.degree + g[i]);
    out.generators.push_back(std::move(p));
  }
  return out;
}

/// Reason the descriptor is invalid, or nullopt.
inline std::optional<std::string> validate(const PermutationDesc& desc) {
  if (desc.degree == 0)
    return "degree must be positive";
  if (desc.degree > 0xFFFF)
    return "degree too large";
  for (std::size_t g = 0; g < desc.generators.size(); ++g) {
    const auto& p = desc.generators[g];
    if (p.size() != desc.degree)
      return "generator " + std::to_string(g) + " has " + std::to_string(p.size()) + " images, expected " +
             std::to_string(desc.degree);
    std::vector<std::size_t> seen(desc.degree, desc.degree);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] >= desc.degree)
        return "generator " + std::to_string(g) + " image " + std::to_string(p[i] + 1) + " out of range at position " +
               std::to_string(i + 1);
      if (seen[p[i]] != desc.degree)
        return "generator " + std::to_string(g) + " repeats image " + std::to_string(p[i] + 1) + " at positions " +
               std::to_string(seen[p[i]] + 1) + " and " + std::to_string(i + 1);
      seen[p[i]] = i;
    }
  }
  return std::nullopt;
}

inline Group enumerate_permutation_group(const PermutationDesc& desc, std::size_t max_order = kDefaultMaxOrder) {
  if (auto why = validate(desc))
    throw Error(ErrorKind::not_a_permutation, *why);
  return Group::from_permutations(desc.degree, desc.generators, max_order);
}

/// Orbits of the generated group, each sorted, ordered by smallest point.
inline std::vector<std::vector<Point>> orbits(const PermutationDesc& desc) {
  std::vector<int> owner(desc.degree, -1);
  std::vector<std::vector<Point>> out;
  for (std::size_t start = 0; start < desc.degree; ++start) {
    if (owner[start] >= 0)
      continue;
    std::vector<Point> orbit{static_cast<Point>(start)};
    owner[start] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto& g : desc.generators) {
        Point y = g[orbit[i]];
        if (owner[y] < 0) {
          owner[y] = static_cast<int>(out.size());
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

inline bool is_transitive(const PermutationDesc& desc) { return orbits(desc).size() == 1; }

struct PrimitivityResult {
  bool primitive = true;
  /// A nontrivial block when not primitive.
  std::vector<Point> block;
};

namespace detail {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

// Smallest block containing points 0 and beta (Atkinson's refinement).
inline std::vector<Point> minimal_block(const PermutationDesc& desc, Point beta) {
  UnionFind uf(desc.degree);
  std::vector<std::pair<std::size_t, std::size_t>> queue{{0, beta}};
  uf.unite(0, beta);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    auto [a, b] = queue[q];
    for (const auto& g : desc.generators) {
      std::size_t ga = g[a], gb = g[b];
      if (uf.unite(ga, gb))
        queue.emplace_back(ga, gb);
    }
  }
  std::vector<Point> block;
  auto root = uf.find(0);
  for (std::size_t i = 0; i < desc.degree; ++i)
    if (uf.find(i) == root)
      block.push_back(static_cast<Point>(i));
  return block;
}

}  // namespace detail

inline PrimitivityResult is_primitive(const PermutationDesc& desc) {
  if (!is_transitive(desc))
    throw Error(ErrorKind::not_transitive, "primitivity is defined for transitive groups");
  for (std::size_t beta = 1; beta < desc.degree; ++beta) {
    auto block = detail::minimal_block(desc, static_cast<Point>(beta));
    if (block.size() < desc.degree)
      return {false, std::move(block)};
  }
  return {true, {}};
}

/// Reduces a generating set of a subgroup of S_n to at most n-1 generators of
/// the same group.
///
/// Every kept generator g is labelled by the edge {i, i^g}, i the least point g
/// moves, and the labelled edges always form a forest on the n points. A new
/// generator whose edge closes a cycle is combined with the generators along
/// that cycle into a product fixing the cycle's least vertex and every point
/// below it; one generator on the cycle is traded for that product, which is
/// then filtered in turn. Each trade raises the least moved point, so the
/// process terminates.
inline PermutationDesc jerrum_filter(const PermutationDesc& desc) {
  if (auto why = validate(desc))
    throw Error(ErrorKind::not_a_permutation, *why);
  const std::size_t n = desc.degree;
  struct Labelled {
    Perm perm;
    std::size_t a, b;  // a = least moved point, b = a^perm
  };
  std::vector<Labelled> kept;

  auto label = [](Perm p) -> std::optional<Labelled> {
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] != i) {
        std::size_t b = p[i];
        return Labelled{std::move(p), i, b};
      }
    return std::nullopt;
  };

  // path between two vertices in the forest as a list of (kept index, forward?)
  auto forest_path = [&](std::size_t from, std::size_t to) -> std::optional<std::vector<std::pair<std::size_t, bool>>> {
    std::vector<long> prev_edge(n, -1);
    std::vector<std::size_t> prev_vertex(n, n);
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> queue{from};
    seen[from] = 1;
    for (std::size_t q = 0; q < queue.size() && !seen[to]; ++q) {
      auto v = queue[q];
      for (std::size_t e = 0; e < kept.size(); ++e) {
        std::size_t w;
        if (kept[e].a == v)
          w = kept[e].b;
        else if (kept[e].b == v)
          w = kept[e].a;
        else
          continue;
        if (!seen[w]) {
          seen[w] = 1;
          prev_edge[w] = static_cast<long>(e);
          prev_vertex[w] = v;
          queue.push_back(w);
        }
      }
    }
    if (!seen[to])
      return std::nullopt;
    std::vector<std::pair<std::size_t, bool>> path;
    for (std::size_t v = to; v != from; v = prev_vertex[v]) {
      auto e = static_cast<std::size_t>(prev_edge[v]);
      // traversing prev_vertex[v] -> v; forward if that is a -> b
      path.emplace_back(e, kept[e].a == prev_vertex[v]);
    }
    std::reverse(path.begin(), path.end());
    return path;
  };

  for (const auto& input : desc.generators) {
    auto current = label(input);
    while (current) {
      auto path = forest_path(current->b, current->a);
      if (!path) {
        kept.push_back(std::move(*current));
        break;
      }
      // Cycle: a -(current)-> b -(path)-> a. Edge list with the new generator
      // as index kept.size().
      struct Step {
        std::size_t edge;
        bool forward;
        std::size_t from;
      };
      std::vector<Step> cycle;
      const std::size_t fresh = kept.size();
      cycle.push_back({fresh, true, current->a});
      std::size_t v = current->b;
      for (auto [e, fwd] : *path) {
        cycle.push_back({e, fwd, v});
        v = fwd ? kept[e].b : kept[e].a;
      }
      auto edge_perm = [&](std::size_t e) -> const Perm& { return e == fresh ? current->perm : kept[e].perm; };
      // rotate so the walk starts at the least vertex
      auto least = std::min_element(cycle.begin(), cycle.end(),
                                    [](const Step& x, const Step& y) { return x.from < y.from; });
      std::rotate(cycle.begin(), least, cycle.end());
      Perm product = identity_perm(n);
      for (const auto& s : cycle)
        product = compose(product, s.forward ? edge_perm(s.edge) : inverse(edge_perm(s.edge)));
      // trade the first edge on the cycle for the product
      std::size_t dropped = cycle.front().edge;
      if (dropped != fresh) {
        kept[dropped] = std::move(*current);
      }
      current = label(std::move(product));
    }
  }
  PermutationDesc out{n, {}};
  for (auto& k : kept)
    out.generators.push_back(std::move(k.perm));
  return out;
}

}  // namespace mingen
