#pragma once

#include <algorithm>
#include <vector>

#include "mingen/subgroup.hpp"

namespace mingen {

/// G/A as a group in its own right, with the maps back and forth.
///
/// Coset 0 is A itself, cosets are numbered by their smallest member and each
/// representative is that smallest member. The quotient handle is flattened:
/// it always multiplies through the non-quotient root of `parent`.
struct QuotientView {
  Group parent;
  Subgroup kernel;
  Group quotient;
  /// coset index -> representative in parent
  std::vector<Element> reps;
  /// parent element -> coset index
  std::vector<Element> project;

  Element lift(Element coset) const { return reps[coset]; }
  Element image(Element x) const { return project[x]; }
};

/// One representative per coset of a normal subgroup, ordered by smallest
/// member; the representative of A is the identity.
inline std::vector<Element> cosets(const Group& G, const Subgroup& A) {
  if (A.is_normal() != true && !is_normal_subgroup(G, A))
    throw Error(ErrorKind::not_normal, "subgroup is not normal");
  std::vector<char> done(G.order(), 0);
  std::vector<Element> reps;
  for (Element x = 0; x < G.order(); ++x) {
    if (done[x])
      continue;
    reps.push_back(x);
    for (auto a : A.elements())
      done[G.mul(x, a)] = 1;
  }
  return reps;
}

inline QuotientView quotient_group(const Group& G, const Subgroup& A) {
  if (A.is_normal() != true && !is_normal_subgroup(G, A))
    throw Error(ErrorKind::not_normal, "subgroup is not normal");
  QuotientView v{G, A, Group(), {}, {}};
  v.project.assign(G.order(), 0);
  std::vector<char> done(G.order(), 0);
  for (Element x = 0; x < G.order(); ++x) {
    if (done[x])
      continue;
    auto c = static_cast<Element>(v.reps.size());
    v.reps.push_back(x);
    for (auto a : A.elements()) {
      auto y = G.mul(x, a);
      done[y] = 1;
      v.project[y] = c;
    }
  }
  const Group root = G.root();
  std::vector<Element> root_to_elem(root.order());
  for (Element r = 0; r < root.order(); ++r)
    root_to_elem[r] = v.project[G.from_root(r)];
  std::vector<Element> elem_to_root(v.reps.size());
  for (std::size_t c = 0; c < v.reps.size(); ++c)
    elem_to_root[c] = G.to_root(v.reps[c]);
  v.quotient = Group::make_quotient(root, std::move(root_to_elem), std::move(elem_to_root));
  return v;
}

/// Representatives in the parent of the given cosets.
inline std::vector<Element> pull_back(const QuotientView& view, std::span<const Element> cosets) {
  std::vector<Element> out;
  out.reserve(cosets.size());
  for (auto c : cosets)
    out.push_back(view.reps[c]);
  return out;
}

/// Image of a subgroup of the parent under the projection.
inline Subgroup project_subgroup(const QuotientView& view, const Subgroup& H) {
  std::vector<Element> gens;
  for (auto h : H.generators()) {
    auto c = view.project[h];
    if (c != 0 && std::find(gens.begin(), gens.end(), c) == gens.end())
      gens.push_back(c);
  }
  std::vector<char> seen(view.quotient.order(), 0);
  std::vector<Element> elems;
  for (auto h : H.elements()) {
    auto c = view.project[h];
    if (!seen[c]) {
      seen[c] = 1;
      elems.push_back(c);
    }
  }
  return Subgroup(view.quotient.order(), std::move(gens), std::move(elems), H.is_normal());
}

/// Moves an element between two groups that share a root (for instance G/H
/// and (G/A)/(H/A)): the target coset of the source's root representative.
inline Element transfer(const Group& from, const Group& to, Element x) { return to.from_root(from.to_root(x)); }

}  // namespace mingen
