#pragma once

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "mingen/arith.hpp"
#include "mingen/quotient.hpp"
#include "mingen/result.hpp"
#include "mingen/search.hpp"
#include "mingen/structure.hpp"

namespace mingen {

struct LiftOptions {
  unsigned threads = 1;
  /// Re-check that the layer is a minimal normal subgroup before lifting.
  bool verify_layer = true;
};

/// Lifting a generating set of group/N to one of group through a minimal
/// normal subgroup N.
struct LiftProblem {
  Group group;
  Subgroup layer;
  /// g_1..g_t in group; their cosets form a minimum generating set of group/N.
  std::vector<Element> upstairs;
  bool layer_abelian = true;
  /// e_1..e_m generating N (used by the abelian replacement step).
  std::vector<Element> layer_generators;
};

namespace detail {

inline std::vector<Element> greedy_generators(const Group& G, const Subgroup& H) {
  ClosureWorkspace ws(G.order());
  ws.reset();
  ws.add(0);
  std::vector<Element> gens;
  for (auto x : H.elements())
    if (!ws.contains(x)) {
      gens.push_back(x);
      extend_closure(G, ws, gens, G.order());
    }
  return gens;
}

inline MinGenResult finish(const Group& G, std::vector<Element> witness, std::string algorithm,
                           std::uint64_t candidates) {
  MinGenResult r;
  r.d = witness.size();
  r.witness = std::move(witness);
  r.algorithm = std::move(algorithm);
  r.candidates_tried = candidates;
  r.p = G.order() > 1 ? smallest_prime_divisor(G.order()) : 0;
  return r;
}

// Scan for a two-element generating set {x, y} of a nonabelian simple group,
// x the least non-identity element, y ascending.
inline MinGenResult simple_scan(const Group& G) {
  if (G.is_trivial())
    return finish(G, {}, "simple", 0);
  ClosureWorkspace ws(G.order());
  if (is_abelian(G)) {
    std::vector<Element> w{1};
    if (!generates(G, w, ws))
      throw Error(ErrorKind::not_simple, "abelian group is not of prime order");
    return finish(G, std::move(w), "simple", 1);
  }
  std::uint64_t tried = 0;
  for (Element y = 0; y < G.order(); ++y) {
    ++tried;
    std::vector<Element> w{1, y};
    if (generates(G, w, ws))
      return finish(G, std::move(w), "simple", tried);
  }
  throw Error(ErrorKind::internal, "no y with <x, y> = G in a nonabelian simple group");
}

}  // namespace detail

/// Minimum generating set of a simple group: d = 0, 1 or 2.
inline MinGenResult simple_group_mingen(const Group& G) {
  if (!G.is_trivial() && !is_simple(G))
    throw Error(ErrorKind::not_simple, "group is not simple");
  return detail::simple_scan(G);
}

/// Lift through an abelian minimal normal layer. Tries, in order: the
/// upstairs elements themselves; every single replacement g_i -> g_i e_j in
/// lexicographic (i, j) order; finally the upstairs elements plus the least
/// non-identity element of the layer, which always generates.
inline MinGenResult abelian_lift(const LiftProblem& p) {
  if (!p.layer_abelian)
    throw Error(ErrorKind::layer_not_abelian, "abelian_lift needs an abelian layer");
  const Group& G = p.group;
  ClosureWorkspace ws(G.order());
  std::uint64_t tried = 1;
  if (generates(G, p.upstairs, ws))
    return detail::finish(G, p.upstairs, "abelian-lift", tried);
  std::vector<Element> trial;
  for (std::size_t i = 0; i < p.upstairs.size(); ++i)
    for (auto e : p.layer_generators) {
      trial = p.upstairs;
      trial[i] = G.mul(trial[i], e);
      ++tried;
      if (generates(G, trial, ws))
        return detail::finish(G, std::move(trial), "abelian-lift", tried);
    }
  trial = p.upstairs;
  trial.push_back(p.layer.elements()[1]);
  ++tried;
  if (!generates(G, trial, ws))
    throw Error(ErrorKind::internal, "upstairs generators plus a layer element fail to generate");
  return detail::finish(G, std::move(trial), "abelian-lift", tried);
}

/// Worst-case candidate count of nonabelian_lift for layer order m and t
/// upstairs generators: m^t + m^2 + m^(t+1), saturated.
inline std::uint64_t nonabelian_lift_budget(std::uint64_t m, std::size_t t) {
  return saturating_add(saturating_add(checked_pow(m, t), checked_pow(m, 2)), checked_pow(m, t + 1));
}

/// Lift through a nonabelian minimal normal layer N by tuple search over N:
///  (a) <g_1 x_1, ..., g_t x_t>            over N^t
///  (b) <x_1 g_1, g_2, ..., g_t, x_2>      over N^2
///  (c) <g_1 x_1, ..., g_t x_t, x_{t+1}>   over N^(t+1)
/// Phase (a) succeeds iff d(G) = t; otherwise one of (b), (c) yields t+1.
inline MinGenResult nonabelian_lift(const LiftProblem& p, unsigned threads = 1) {
  if (p.layer_abelian)
    throw Error(ErrorKind::layer_abelian, "abelian layers go through abelian_lift");
  const std::size_t t = p.upstairs.size();
  if (t == 0)
    throw Error(ErrorKind::bad_params, "nonabelian_lift needs t >= 1");
  const Group& G = p.group;
  const auto N = p.layer.elements();
  const std::uint64_t m = N.size();
  const auto g = p.upstairs;
  std::uint64_t tried = 0;

  auto run = [&](std::size_t width, auto build) -> std::optional<std::vector<Element>> {
    const std::uint64_t count = checked_pow(m, width);
    if (count == std::numeric_limits<std::uint64_t>::max())
      throw Error(ErrorKind::order_exceeded, "tuple search space overflows");
    auto hit = first_success(count, G.order(), threads, [&](std::uint64_t idx, ClosureWorkspace& ws) {
      thread_local std::vector<std::size_t> digits;
      thread_local std::vector<Element> set;
      decode_tuple(idx, m, width, digits);
      build(digits, set);
      return generates(G, set, ws);
    });
    if (!hit) {
      tried += count;
      return std::nullopt;
    }
    tried += *hit + 1;
    std::vector<std::size_t> digits;
    std::vector<Element> set;
    decode_tuple(*hit, m, width, digits);
    build(digits, set);
    return set;
  };

  auto phase_a = [&](const std::vector<std::size_t>& x, std::vector<Element>& set) {
    set.resize(t);
    for (std::size_t i = 0; i < t; ++i)
      set[i] = G.mul(g[i], N[x[i]]);
  };
  auto phase_b = [&](const std::vector<std::size_t>& x, std::vector<Element>& set) {
    set.assign(g.begin(), g.end());
    set[0] = G.mul(N[x[0]], g[0]);
    set.push_back(N[x[1]]);
  };
  auto phase_c = [&](const std::vector<std::size_t>& x, std::vector<Element>& set) {
    set.resize(t + 1);
    for (std::size_t i = 0; i < t; ++i)
      set[i] = G.mul(g[i], N[x[i]]);
    set[t] = N[x[t]];
  };

  if (auto w = run(t, phase_a))
    return detail::finish(G, std::move(*w), "nonabelian-lift:a", tried);
  if (auto w = run(2, phase_b))
    return detail::finish(G, std::move(*w), "nonabelian-lift:b", tried);
  if (auto w = run(t + 1, phase_c))
    return detail::finish(G, std::move(*w), "nonabelian-lift:c", tried);
  throw Error(ErrorKind::internal, "SearchExhausted: no lift of size t or t+1 found");
}

/// Checks that N is a minimal normal subgroup of G.
inline bool is_minimal_normal(const Group& G, const Subgroup& N) {
  if (N.is_trivial() || !is_normal_subgroup(G, N))
    return false;
  for (const auto& cls : conjugacy_classes(G)) {
    if (cls.front() == 0 || !N.contains(cls.front()))
      continue;
    if (normal_closure(G, {cls.front()}).order() != N.order())
      return false;
  }
  return true;
}

/// Given a minimum generating set of view.quotient = group/N (as cosets),
/// produce one of group = view.parent, with N = view.kernel minimal normal.
inline MinGenResult lift_through_layer(const QuotientView& view, const MinGenResult& upstairs,
                                       const LiftOptions& opts = {}) {
  const Group& G = view.parent;
  const Subgroup& N = view.kernel;
  if (opts.verify_layer && !is_minimal_normal(G, N))
    throw Error(ErrorKind::bad_params, "layer is not a minimal normal subgroup");
  if (!is_generating_set(upstairs.witness, view.quotient))
    throw Error(ErrorKind::bad_params, "upstairs witness does not generate the quotient");

  StageRecord stage;
  stage.group_order = G.order();
  stage.layer_order = N.order();
  stage.t = upstairs.d;
  stage.abelian = is_abelian(G, N);

  MinGenResult r;
  if (upstairs.d == 0) {
    // G/N trivial: N = G is minimal normal in itself, hence simple.
    r = detail::simple_scan(G);
    stage.route = "simple-scan";
    stage.bound = G.order();
  } else {
    LiftProblem prob{G, N, pull_back(view, upstairs.witness), stage.abelian, {}};
    if (stage.abelian) {
      prob.layer_generators = detail::greedy_generators(G, N);
      r = abelian_lift(prob);
      stage.route = "abelian-lift";
      stage.bound = 2 + upstairs.d * prob.layer_generators.size();
    } else {
      r = nonabelian_lift(prob, opts.threads);
      stage.route = r.algorithm;
      stage.tuple_search = true;
      stage.bound = nonabelian_lift_budget(N.order(), upstairs.d);
    }
  }
  stage.candidates = r.candidates_tried;
  stage.d = r.d;
  if (r.d < upstairs.d || r.d > std::max<std::size_t>(2, upstairs.d + 1))
    throw Error(ErrorKind::internal, "lift violates d(G/N) <= d(G) <= max(2, d(G/N)+1)");
  if (stage.candidates > stage.bound)
    throw Error(ErrorKind::internal, "lift exceeded its candidate budget");
  if (!is_generating_set(r.witness, G))
    throw Error(ErrorKind::internal, "lifted witness does not generate");
  r.stages.push_back(stage);
  return r;
}

}  // namespace mingen
