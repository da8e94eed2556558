#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mingen/arith.hpp"
#include "mingen/lifting.hpp"
#include "mingen/permutation.hpp"
#include "mingen/quotient.hpp"
#include "mingen/structure.hpp"

namespace mingen {

struct AlgoConfig {
  std::size_t max_order = kDefaultMaxOrder;
  /// Nonabelian chief factors of order at most chi_l put a group in chi(l).
  std::uint64_t chi_l = 60;
  /// d_primitive runs the general algorithm directly at or below this order.
  std::uint64_t primitive_small_threshold = 10000;
  /// Random tie-breaking among minimal normal subgroups; canonical if unset.
  std::optional<std::uint64_t> seed;
  std::size_t max_lattice = kDefaultMaxLattice;
  unsigned threads = 1;
};

namespace detail {

inline void check_order(std::size_t n, const AlgoConfig& cfg) {
  if (n > cfg.max_order)
    throw Error(ErrorKind::order_exceeded,
                "group order " + std::to_string(n) + " exceeds max_order " + std::to_string(cfg.max_order));
}

inline TieBreak tie_break(const AlgoConfig& cfg) { return cfg.seed ? TieBreak(*cfg.seed) : TieBreak(); }

inline void verify_witness(const MinGenResult& r, const Group& G) {
  if (r.d != r.witness.size() || !is_generating_set(r.witness, G))
    throw Error(ErrorKind::internal, r.algorithm + " produced a witness that does not generate the group");
}

// Lifts a minimum generating set down a chain of normal subgroups of G,
// 1 = chain[0] < chain[1] < ... < chain[k], each chain[i+1]/chain[i] minimal
// normal in G/chain[i]. `top` holds elements of G whose images form a minimum
// generating set of G/chain[k]. Every stage is handed to `check` together
// with the order of the group it generated. Witnesses are elements of G.
template <class Check>
MinGenResult lift_along_chain(const Group& G, const std::vector<Subgroup>& chain, std::vector<Element> top,
                              const std::string& algorithm, const LiftOptions& opts, Check&& check) {
  MinGenResult acc;
  acc.witness = std::move(top);
  acc.d = acc.witness.size();
  for (std::size_t i = chain.size() - 1; i-- > 0;) {
    auto outer = quotient_group(G, chain[i]);
    auto layer = project_subgroup(outer, chain[i + 1]);
    auto inner = quotient_group(outer.quotient, layer);
    MinGenResult up;
    for (auto g : acc.witness)
      up.witness.push_back(inner.project[outer.project[g]]);
    up.d = up.witness.size();
    auto r = lift_through_layer(inner, up, opts);
    check(r.stages.back(), outer.quotient.order());
    acc.candidates_tried += r.candidates_tried;
    acc.stages.push_back(r.stages.back());
    acc.witness.clear();
    for (auto x : r.witness)
      acc.witness.push_back(outer.reps[x]);
    acc.d = acc.witness.size();
  }
  acc.algorithm = algorithm;
  acc.p = G.order() > 1 ? smallest_prime_divisor(G.order()) : 0;
  verify_witness(acc, G);
  return acc;
}

inline std::vector<Subgroup> bottom_up(const ChiefSeries& cs) { return {cs.groups.rbegin(), cs.groups.rend()}; }

}  // namespace detail

/// Exhaustive search: subsets by increasing size, then lexicographically,
/// up to size ceil(log_p n). Returns the lexicographically least witness.
inline MinGenResult mingen_brute(const Group& G, const AlgoConfig& cfg = {}) {
  detail::check_order(G.order(), cfg);
  const std::size_t n = G.order();
  if (n == 1)
    return detail::finish(G, {}, "brute", 0);
  const std::uint64_t p = smallest_prime_divisor(n);
  std::size_t cap = 0;
  for (std::uint64_t pk = 1; pk < n; pk *= p)
    ++cap;

  ClosureWorkspace ws(n);
  std::uint64_t tried = 0;
  std::vector<Element> set;
  std::vector<Subgroup> prefix{Subgroup::trivial(n)};

  // A set containing an element of the subgroup its predecessors generate
  // spans the same subgroup as a smaller set, which was already rejected.
  auto dfs = [&](auto&& self, std::size_t size, Element start) -> bool {
    const std::size_t level = set.size();
    for (Element x = start; x < n; ++x) {
      if (prefix[level].contains(x))
        continue;
      set.push_back(x);
      if (level + 1 == size) {
        ++tried;
        if (generates(G, set, ws))
          return true;
      } else {
        prefix.resize(level + 1);
        prefix.push_back(closure(G, set));
        if (self(self, size, x + 1))
          return true;
      }
      set.pop_back();
    }
    return false;
  };
  for (std::size_t size = 1; size <= cap; ++size) {
    set.clear();
    prefix.resize(1);
    if (dfs(dfs, size, 1)) {
      auto r = detail::finish(G, set, "brute", tried);
      detail::verify_witness(r, G);
      return r;
    }
  }
  throw Error(ErrorKind::internal, "no generating set of size at most log_p n");
}

/// Recursion on a minimal normal subgroup: d(G/N) first, then one lift
/// through N. The lift count at each level is checked against
/// ceil(m^((1/4) log_p m + 1)), m the order of the group at that level.
inline MinGenResult mingen_general(const Group& G, const AlgoConfig& cfg = {}) {
  detail::check_order(G.order(), cfg);
  auto cs = chief_series(G, detail::tie_break(cfg));
  return detail::lift_along_chain(G, detail::bottom_up(cs), {}, "general", {cfg.threads, true},
                                  [](const StageRecord& s, std::size_t level_order) {
                                    if (s.candidates > quarter_exponent_bound(level_order))
                                      throw Error(ErrorKind::internal, "lift exceeded the quarter-exponent bound");
                                  });
}

/// Stages over the simple factors S_1, ..., S_r sorted by non-increasing
/// order: stage i generates G/<S_{i+1}, ..., S_r> = S_1 x ... x S_i by
/// lifting through S_i. Each stage is checked against n^2.
inline MinGenResult mingen_product_of_simples(const Group& G, const AlgoConfig& cfg = {}) {
  detail::check_order(G.order(), cfg);
  auto fact = decompose_product_of_simples(G);
  const std::size_t r = fact.factors.size();
  // chain[j] = <S_{r-j+1}, ..., S_r>
  std::vector<Subgroup> chain{Subgroup::trivial(G.order())};
  for (std::size_t j = 1; j <= r; ++j)
    chain.push_back(join(G, chain.back(), fact.factors[r - j].generators(), true));
  const std::uint64_t n2 = checked_pow(G.order(), 2);
  return detail::lift_along_chain(G, chain, {}, "simple-product", {cfg.threads, true},
                                  [n2](const StageRecord& s, std::size_t) {
                                    if (s.candidates > n2)
                                      throw Error(ErrorKind::internal, "product stage exceeded n^2 candidates");
                                  });
}

/// d(G) from factor values ds[i] = d(factors[i]): max(max ds, d(G/J)), J the
/// intersection of the maximal normal subgroups. With `validate`, each ds[i]
/// is checked against an exhaustive search on its factor.
inline std::size_t d_direct_product(const Group& G, const std::vector<Subgroup>& factors,
                                    const std::vector<std::size_t>& ds, const AlgoConfig& cfg = {},
                                    bool validate = false) {
  detail::check_order(G.order(), cfg);
  if (factors.size() != ds.size())
    throw Error(ErrorKind::bad_params, "one d value per factor is required");
  std::uint64_t product = 1;
  std::vector<Element> gens;
  for (const auto& F : factors) {
    if (!is_normal_subgroup(G, F))
      throw Error(ErrorKind::not_direct_product, "a factor is not normal");
    product *= F.order();
    gens.insert(gens.end(), F.generators().begin(), F.generators().end());
  }
  if (product != G.order() || closure(G, gens).order() != G.order())
    throw Error(ErrorKind::not_direct_product, "factors do not form an internal direct product");
  if (validate)
    for (std::size_t i = 0; i < factors.size(); ++i) {
      auto sub = Group::from_subgroup(G, factors[i].elements());
      if (mingen_brute(sub, cfg).d != ds[i])
        throw Error(ErrorKind::bad_factor_d, "factor " + std::to_string(i) + " has d != " + std::to_string(ds[i]));
    }
  std::size_t d = ds.empty() ? 0 : *std::max_element(ds.begin(), ds.end());
  if (G.is_trivial())
    return d;
  auto J = maximal_normal_intersection(G, cfg.max_lattice);
  auto top = quotient_group(G, J);
  return std::max(d, mingen_product_of_simples(top.quotient, cfg).d);
}

/// Solvable groups: every chief layer is abelian, so each lift is the
/// polynomial replacement search.
inline MinGenResult mingen_solvable(const Group& G, const AlgoConfig& cfg = {}) {
  detail::check_order(G.order(), cfg);
  auto cs = chief_series(G, detail::tie_break(cfg));
  for (const auto& layer : cs.layers)
    if (!layer.abelian)
      throw Error(ErrorKind::not_solvable, "group has a nonabelian chief factor of order " +
                                               std::to_string(layer.order));
  return detail::lift_along_chain(G, detail::bottom_up(cs), {}, "solvable", {cfg.threads, true},
                                  [](const StageRecord& s, std::size_t) {
                                    if (!s.abelian || s.tuple_search)
                                      throw Error(ErrorKind::internal, "solvable path ran a tuple search");
                                  });
}

inline MinGenResult mingen_solvable_perm(const PermutationDesc& desc, const AlgoConfig& cfg = {}) {
  return mingen_solvable(enumerate_permutation_group(desc, cfg.max_order), cfg);
}

/// d(M x K) for solvable M and a group K with known minimum generating set
/// k_gens. Only layers inside M x 1 are lifted through; the top quotient
/// (M x K)/(M x 1) = K is seeded with k_gens. Witness elements index the
/// enumeration of disjoint_product(M, {K.degree, k_gens}).
inline MinGenResult mingen_solvable_times_known(const PermutationDesc& M, const PermutationDesc& K,
                                                const std::vector<Perm>& k_gens, const AlgoConfig& cfg = {}) {
  const Group Kg = enumerate_permutation_group(K, cfg.max_order);
  for (const auto& g : k_gens)
    if (g.size() != K.degree || !Kg.find_permutation(g))
      throw Error(ErrorKind::bad_known_gens, "a known generator is not an element of K");
  PermutationDesc k_desc{K.degree, k_gens};
  std::vector<Element> k_idx;
  for (const auto& g : k_gens)
    k_idx.push_back(*Kg.find_permutation(g));
  if (!is_generating_set(k_idx, Kg))
    throw Error(ErrorKind::bad_known_gens, "known generators do not generate K");
  if (mingen_brute(Kg, cfg).d != k_gens.size())
    throw Error(ErrorKind::bad_known_gens, "known generating set is not minimum");

  const Group Mg = enumerate_permutation_group(M, cfg.max_order);
  if (!is_solvable(Mg))
    throw Error(ErrorKind::not_solvable, "M is not solvable");

  const auto product = disjoint_product(M, k_desc);
  const Group G = enumerate_permutation_group(product, cfg.max_order);
  std::vector<Element> m_part, k_part;
  for (std::size_t i = 0; i < product.generators.size(); ++i) {
    auto x = *G.find_permutation(product.generators[i]);
    (i < M.generators.size() ? m_part : k_part).push_back(x);
  }
  const Subgroup all = whole_group(G);
  Subgroup top = join(G, Subgroup::trivial(G.order()), m_part, true);
  std::vector<Subgroup> chain{Subgroup::trivial(G.order())};
  TieBreak tie = detail::tie_break(cfg);
  while (chain.back().order() < top.order()) {
    auto candidates = minimal_normal_over(G, chain.back(), top);
    chain.push_back(std::move(candidates[tie.pick(candidates.size())]));
  }
  return detail::lift_along_chain(G, chain, k_part, "solvable-times-known", {cfg.threads, true},
                                  [](const StageRecord& s, std::size_t) {
                                    if (!s.abelian || s.tuple_search)
                                      throw Error(ErrorKind::internal, "solvable layer ran a tuple search");
                                  });
}

struct PrimitiveResult {
  std::size_t d = 0;
  /// "small-order", "unique-minimal-normal" or "general"
  std::string branch;
};

/// d(G) for a primitive permutation group, without a witness. Small groups
/// go straight to the general algorithm; a nonabelian group with a unique
/// minimal normal subgroup H has d(G) = max(2, d(G/H)).
inline PrimitiveResult d_primitive(const PermutationDesc& desc, const AlgoConfig& cfg = {}) {
  if (auto why = validate(desc))
    throw Error(ErrorKind::not_a_permutation, *why);
  if (!is_primitive(desc).primitive)
    throw Error(ErrorKind::not_primitive, "group has a nontrivial block");
  const Group G = enumerate_permutation_group(desc, cfg.max_order);
  if (G.order() <= cfg.primitive_small_threshold)
    return {mingen_general(G, cfg).d, "small-order"};
  if (!G.is_trivial() && !is_abelian(G)) {
    auto minimal = minimal_normal_subgroups(G);
    if (minimal.size() == 1) {
      auto top = quotient_group(G, minimal.front());
      return {std::max<std::size_t>(2, mingen_general(top.quotient, cfg).d), "unique-minimal-normal"};
    }
  }
  return {mingen_general(G, cfg).d, "general"};
}

/// Top-down along a chief series, one lift per layer. Reports whether every
/// nonabelian layer has order at most cfg.chi_l.
inline MinGenResult mingen_chief(const Group& G, const AlgoConfig& cfg = {}) {
  detail::check_order(G.order(), cfg);
  auto cs = chief_series(G, detail::tie_break(cfg));
  bool member = true;
  for (const auto& layer : cs.layers)
    if (!layer.abelian && layer.order > cfg.chi_l)
      member = false;
  auto r = detail::lift_along_chain(G, detail::bottom_up(cs), {}, "chief", {cfg.threads, true},
                                    [](const StageRecord& s, std::size_t) {
                                      if (s.tuple_search && s.candidates > nonabelian_lift_budget(s.layer_order, s.t))
                                        throw Error(ErrorKind::internal, "chief stage exceeded its tuple budget");
                                    });
  r.chi_l_member = member;
  return r;
}

/// As above for a permutation group; also checks d <= degree - 1.
inline MinGenResult mingen_chief(const PermutationDesc& desc, const AlgoConfig& cfg = {}) {
  auto r = mingen_chief(enumerate_permutation_group(desc, cfg.max_order), cfg);
  if (r.d + 1 > desc.degree && r.d > 0)
    throw Error(ErrorKind::internal, "d exceeds degree - 1");
  return r;
}

struct WreathResult {
  std::size_t d = 0;
  /// d((H/H') wr G) = max(d(H/H') + 1, d(G))
  std::size_t d_abelianized = 0;
  std::size_t d_H = 0;
  std::size_t d_H_abelianized = 0;
  std::size_t d_G = 0;
};

/// d(H wr G) for solvable H and primitive G of degree n, when
/// gcd(|H/H'|, |G|) = 1:
///   max(d((H/H') wr G), ceil((d(H) - 2) / n) + 2).
inline WreathResult d_wreath(const PermutationDesc& H, const PermutationDesc& G, const AlgoConfig& cfg = {}) {
  const Group Hg = enumerate_permutation_group(H, cfg.max_order);
  if (Hg.is_trivial())
    throw Error(ErrorKind::bad_params, "H must be nontrivial");
  if (!is_solvable(Hg))
    throw Error(ErrorKind::not_solvable, "H is not solvable");
  const Group Gg = enumerate_permutation_group(G, cfg.max_order);
  const auto ab = quotient_group(Hg, derived_subgroup(Hg));
  if (std::gcd<std::uint64_t, std::uint64_t>(ab.quotient.order(), Gg.order()) != 1)
    throw Error(ErrorKind::gcd_condition_fails, "gcd(|H/H'|, |G|) = " +
                                                    std::to_string(std::gcd<std::uint64_t, std::uint64_t>(
                                                        ab.quotient.order(), Gg.order())));
  WreathResult w;
  w.d_G = d_primitive(G, cfg).d;
  w.d_H_abelianized = abelian_basis(ab.quotient).size();
  w.d_H = mingen_solvable(Hg, cfg).d;
  w.d_abelianized = std::max(w.d_H_abelianized + 1, w.d_G);
  const std::size_t n = G.degree;
  // ceil((d_H - 2) / n) + 2 = ceil((d_H - 2 + 2n) / n), numerator >= 0
  const std::size_t term = (w.d_H + 2 * n - 2 + n - 1) / n;
  w.d = std::max(w.d_abelianized, term);
  return w;
}

enum class Algo { automatic, brute, general, simple_product, solvable, primitive, chief, wreath };

inline const char* to_string(Algo a) {
  switch (a) {
    case Algo::automatic: return "auto";
    case Algo::brute: return "brute";
    case Algo::general: return "general";
    case Algo::simple_product: return "simple-product";
    case Algo::solvable: return "solvable";
    case Algo::primitive: return "primitive";
    case Algo::chief: return "chief";
    case Algo::wreath: return "wreath";
  }
  return "?";
}

inline std::optional<Algo> parse_algo(const std::string& s) {
  for (auto a : {Algo::automatic, Algo::brute, Algo::general, Algo::simple_product, Algo::solvable, Algo::primitive,
                 Algo::chief, Algo::wreath})
    if (s == to_string(a))
      return a;
  return std::nullopt;
}

using GroupInput = std::variant<Group, PermutationDesc>;

struct DispatchResult {
  /// The group the witness indexes into.
  Group group;
  std::size_t d = 0;
  /// Absent for algorithms that only compute d.
  std::optional<MinGenResult> result;
  std::string algorithm;
  std::string branch;
};

/// Runs the requested algorithm. Auto mode takes the product-of-simples
/// route when the group splits into simple factors with a nonabelian one,
/// the solvable route when solvable, and the chief-series route otherwise.
/// Every witness is re-verified. Wreath needs two inputs: see d_wreath.
inline DispatchResult dispatch(const GroupInput& input, Algo algo, const AlgoConfig& cfg = {}) {
  if (algo == Algo::wreath)
    throw Error(ErrorKind::bad_params, "wreath needs a base group and a top group");
  const PermutationDesc* desc = std::get_if<PermutationDesc>(&input);
  if (algo == Algo::primitive) {
    auto pr = d_primitive(desc ? *desc : regular_perm(std::get<Group>(input)), cfg);
    Group g = desc ? Group() : std::get<Group>(input);
    if (desc)
      g = enumerate_permutation_group(*desc, cfg.max_order);
    return {g, pr.d, std::nullopt, "primitive", pr.branch};
  }
  Group G = desc ? enumerate_permutation_group(*desc, cfg.max_order) : std::get<Group>(input);
  detail::check_order(G.order(), cfg);
  std::string branch;
  if (algo == Algo::automatic) {
    algo = Algo::chief;
    try {
      auto fact = decompose_product_of_simples(G);
      if (std::find(fact.kinds.begin(), fact.kinds.end(), FactorKind::nonabelian_simple) != fact.kinds.end())
        algo = Algo::simple_product;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::not_product_of_simples)
        throw;
    }
    if (algo == Algo::chief && is_solvable(G))
      algo = Algo::solvable;
    branch = std::string("auto:") + to_string(algo);
  }
  MinGenResult r;
  switch (algo) {
    case Algo::brute: r = mingen_brute(G, cfg); break;
    case Algo::general: r = mingen_general(G, cfg); break;
    case Algo::simple_product: r = mingen_product_of_simples(G, cfg); break;
    case Algo::solvable: r = mingen_solvable(G, cfg); break;
    case Algo::chief: r = desc ? mingen_chief(*desc, cfg) : mingen_chief(G, cfg); break;
    default: throw Error(ErrorKind::internal, "unreachable algorithm");
  }
  detail::verify_witness(r, G);
  return {G, r.d, r, r.algorithm, branch};
}

}  // namespace mingen
