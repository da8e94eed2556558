// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "mingen/mingen.hpp"
#include "oracle.hpp"

using namespace mingen;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok)
    throw Failure{what};
}

std::size_t oracle_d(const Group& G) { return oracle::min_gen(corpus::table(G)).d; }

PermutationDesc perm_of(const std::string& spec) { return as_permutations(make_fixture(spec)); }

bool decomposes(const Group& G) {
  try {
    decompose_product_of_simples(G);
    return true;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::not_product_of_simples)
      throw;
    return false;
  }
}

void witness_ok(const MinGenResult& r, const Group& G, const std::string& label) {
  require(r.witness.size() == r.d, label + ": witness size differs from d");
  require(oracle::generates(corpus::table(G), {r.witness.begin(), r.witness.end()}),
          label + ": witness does not generate");
}

// 1. d of the trivial group is 0 on every path.
std::string trivial_group() {
  const Group T;
  const PermutationDesc P{1, {}};
  require(mingen_brute(T).d == 0, "brute");
  require(mingen_general(T).d == 0, "general");
  require(mingen_product_of_simples(T).d == 0, "simple-product");
  require(mingen_solvable(T).d == 0, "solvable");
  require(mingen_solvable_perm(P).d == 0, "solvable (perm)");
  require(mingen_chief(T).d == 0, "chief");
  require(mingen_chief(P).d == 0, "chief (perm)");
  require(d_primitive(P).d == 0, "primitive");
  require(d_direct_product(T, {}, {}) == 0, "direct product");
  require(mingen_solvable_times_known(P, P, {}).d == 0, "solvable x known");
  require(simple_group_mingen(T).d == 0, "simple");
  for (auto a : {Algo::automatic, Algo::brute, Algo::general, Algo::solvable, Algo::chief, Algo::primitive})
    require(dispatch(P, a).d == 0, std::string("dispatch ") + to_string(a));
  return "11 entry points and 6 dispatch routes return 0";
}

// 2. Every applicable algorithm agrees with exhaustive search on the corpus.
std::string oracle_corpus() {
  std::size_t groups = 0, runs = 0;
  for (const auto& spec : corpus::small_groups()) {
    const auto file = make_fixture(spec);
    const Group G = to_group(file);
    require(G.order() <= 200, spec + ": order above 200");
    const auto truth = mingen_brute(G);
    witness_ok(truth, G, spec + " brute");
    auto check = [&](const MinGenResult& r, const std::string& name) {
      require(r.d == truth.d, spec + ": " + name + " gives " + std::to_string(r.d) + ", brute " +
                                  std::to_string(truth.d));
      ++runs;
    };
    auto general = mingen_general(G);
    witness_ok(general, G, spec + " general");
    check(general, "general");
    auto chief = mingen_chief(G);
    witness_ok(chief, G, spec + " chief");
    check(chief, "chief");
    if (is_solvable(G)) {
      auto desc = as_permutations(file);
      auto r = mingen_solvable_perm(desc);
      auto E = enumerate_permutation_group(desc);
      witness_ok(r, E, spec + " solvable");
      check(r, "solvable");
    }
    if (decomposes(G)) {
      auto r = mingen_product_of_simples(G);
      witness_ok(r, G, spec + " simple-product");
      check(r, "simple-product");
    }
    ++groups;
  }
  require(groups >= 40, "corpus has fewer than 40 groups");
  return std::to_string(groups) + " groups, " + std::to_string(runs) + " runs match brute force";
}

// 3. d(A5) = 2 and d(A5 x A5) = 2 through the product-of-simples path.
std::string a5_powers() {
  auto A5 = corpus::group("alternating 5");
  auto A5A5 = corpus::group("direct_product (alternating 5) (alternating 5)");
  require(A5A5.order() == 3600, "A5 x A5 enumeration has order " + std::to_string(A5A5.order()));
  auto a = mingen_product_of_simples(A5);
  auto b = mingen_product_of_simples(A5A5);
  require(a.d == 2, "d(A5) = " + std::to_string(a.d));
  require(b.d == 2, "d(A5 x A5) = " + std::to_string(b.d));
  require(is_generating_set(b.witness, A5A5), "A5 x A5 witness does not generate");
  return "d(A5) = 2, d(A5 x A5) = 2 on the order-3600 enumeration";
}

// 4. d(G/N) <= d(G) <= max(2, d(G/N) + 1) for every minimal normal N.
std::string sandwich() {
  std::size_t pairs = 0;
  for (const auto& spec : corpus::small_groups()) {
    auto G = corpus::group(spec);
    if (G.is_trivial())
      continue;
    auto T = corpus::table(G);
    const auto d = oracle::min_gen(T).d;
    for (const auto& N : oracle::minimal_normal_subgroups(T)) {
      const auto dq = oracle::min_gen(oracle::quotient(T, N)).d;
      require(dq <= d && d <= std::max<std::size_t>(2, dq + 1),
              spec + ": d(G/N) = " + std::to_string(dq) + ", d(G) = " + std::to_string(d));
      ++pairs;
    }
    for (const auto& N : minimal_normal_subgroups(G)) {
      auto view = quotient_group(G, N);
      auto up = mingen_brute(view.quotient);
      auto r = lift_through_layer(view, up);
      require(up.d <= r.d && r.d <= std::max<std::size_t>(2, up.d + 1), spec + ": lift leaves the sandwich");
      require(r.d == d, spec + ": lift gives " + std::to_string(r.d));
    }
  }
  return std::to_string(pairs) + " (G, N) pairs, oracle and lift both within bounds";
}

// 5. Per-level lift candidates in mingen_general stay under ceil(m^((1/4) log_p m + 1)).
std::string quarter_exponent() {
  std::size_t stages = 0;
  std::uint64_t worst_num = 0, worst_den = 1;
  for (const auto& spec : corpus::small_groups()) {
    auto G = corpus::group(spec);
    auto r = mingen_general(G);
    for (const auto& s : r.stages) {
      const auto bound = quarter_exponent_bound(s.group_order);
      require(s.candidates <= bound, spec + ": " + std::to_string(s.candidates) + " candidates at level order " +
                                         std::to_string(s.group_order) + ", bound " + std::to_string(bound));
      require(bound <= quarter_exponent_bound(G.order()), spec + ": level bound above the top-level bound");
      if (s.candidates * worst_den > worst_num * bound) {
        worst_num = s.candidates;
        worst_den = bound;
      }
      ++stages;
    }
  }
  std::ostringstream out;
  out << stages << " stages within bound, tightest " << worst_num << "/" << worst_den;
  return out.str();
}

// 6. Product-of-simples stages stay under n^2.
std::string product_counter() {
  std::ostringstream out;
  for (const char* spec : {"direct_product (alternating 5) (alternating 5)", "elementary_abelian 2 4"}) {
    auto G = corpus::group(spec);
    auto r = mingen_product_of_simples(G);
    const std::uint64_t n2 = std::uint64_t{G.order()} * G.order();
    std::uint64_t worst = 0;
    for (const auto& s : r.stages) {
      require(s.candidates <= n2, std::string(spec) + ": stage above n^2");
      worst = std::max(worst, s.candidates);
    }
    out << spec << ": max stage " << worst << " <= " << n2 << "; ";
  }
  auto s = out.str();
  return s.substr(0, s.size() - 2);
}

// 7. d_direct_product equals exhaustive search on products of order <= 720.
std::string direct_products() {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"symmetric 3", "cyclic 2"},  {"cyclic 2", "cyclic 2"},       {"symmetric 3", "symmetric 3"},
      {"quaternion", "cyclic 2"},   {"alternating 4", "cyclic 3"},  {"dihedral 4", "cyclic 2"},
      {"symmetric 4", "cyclic 2"},  {"cyclic 6", "cyclic 6"},       {"alternating 5", "cyclic 2"},
      {"alternating 5", "cyclic 3"}, {"alternating 4", "alternating 4"}, {"symmetric 4", "symmetric 3"},
      {"alternating 5", "symmetric 3"}, {"symmetric 5", "symmetric 3"},
  };
  std::size_t count = 0;
  for (const auto& [x, y] : pairs) {
    auto X = perm_of(x), Y = perm_of(y);
    auto desc = disjoint_product(X, Y);
    auto G = enumerate_permutation_group(desc);
    require(G.order() <= 720, x + " x " + y + ": order above 720");
    std::vector<Element> a, b;
    for (std::size_t i = 0; i < desc.generators.size(); ++i)
      (i < X.generators.size() ? a : b).push_back(*G.find_permutation(desc.generators[i]));
    std::vector<Subgroup> factors{closure(G, a), closure(G, b)};
    std::vector<std::size_t> ds;
    for (const auto& F : factors)
      ds.push_back(oracle_d(Group::from_subgroup(G, F.elements())));
    const auto d = d_direct_product(G, factors, ds);
    const auto truth = mingen_brute(G).d;
    require(d == truth, x + " x " + y + ": formula " + std::to_string(d) + ", brute " + std::to_string(truth));
    ++count;
  }
  require(count >= 10, "fewer than 10 products");
  return std::to_string(count) + " products match brute force";
}

// 8. The solvable path never searches tuples and matches the oracle.
std::string solvable_purity() {
  std::size_t stages = 0;
  for (const char* spec : {"symmetric 4", "dihedral 6", "wreath (wreath (cyclic 2) (cyclic 2)) (cyclic 2)"}) {
    auto desc = perm_of(spec);
    auto r = mingen_solvable_perm(desc);
    for (const auto& s : r.stages) {
      require(s.abelian && !s.tuple_search, std::string(spec) + ": nonabelian or tuple stage");
      ++stages;
    }
    auto G = enumerate_permutation_group(desc);
    require(r.d == oracle_d(G), std::string(spec) + ": d differs from oracle");
    witness_ok(r, G, spec);
  }
  return std::to_string(stages) + " layer lifts, all abelian replacement searches";
}

// 9. d_primitive on S5, A5 and Z5; the unique-minimal-normal branch fires for S5.
std::string primitive() {
  struct Case {
    const char* name;
    PermutationDesc desc;
    std::size_t expected;
  };
  const std::vector<Case> cases = {{"S5", symmetric_perm(5), 2},
                                   {"A5", alternating_perm(5), 2},
                                   {"Z5", regular_perm(cyclic_table(5)), 1}};
  for (const auto& c : cases) {
    auto r = d_primitive(c.desc);
    require(r.d == c.expected, std::string(c.name) + ": d = " + std::to_string(r.d));
    auto G = enumerate_permutation_group(c.desc);
    auto regular = enumerate_permutation_group(regular_perm(G));
    require(oracle_d(regular) == r.d, std::string(c.name) + ": disagrees with the regular representation");
  }
  AlgoConfig cfg;
  cfg.primitive_small_threshold = 100;
  auto s5 = d_primitive(symmetric_perm(5), cfg);
  require(s5.branch == "unique-minimal-normal", "S5 took branch " + s5.branch);
  require(s5.d == 2, "S5 via the unique minimal normal subgroup gives " + std::to_string(s5.d));
  return "S5 = 2, A5 = 2, Z5 = 1; S5 with threshold 100 via unique-minimal-normal";
}

// 10. Chief factor orders do not depend on tie-breaking.
std::string jordan_holder() {
  for (const char* spec : {"symmetric 4", "symmetric 5", "cyclic 6", "direct_product (alternating 5) (alternating 5)"}) {
    auto G = corpus::group(spec);
    auto ref = chief_series(G).layer_orders();
    std::sort(ref.begin(), ref.end());
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      auto got = chief_series(G, TieBreak(seed)).layer_orders();
      std::sort(got.begin(), got.end());
      require(got == ref, std::string(spec) + ": seed " + std::to_string(seed) + " changes the factor orders");
    }
  }
  return "4 groups x 20 seeds give identical factor-order multisets";
}

// 11. The filter leaves at most n - 1 = 5 generators of the same group in S6.
std::string jerrum() {
  std::mt19937_64 rng(20261016);
  std::size_t max_out = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> count(1, 12);
    PermutationDesc desc{6, {}};
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
      Perm p(6);
      std::iota(p.begin(), p.end(), Point{0});
      std::shuffle(p.begin(), p.end(), rng);
      // bias towards proper subgroups: fix some points
      std::uniform_int_distribution<int> fix(0, 3);
      for (int f = fix(rng); f > 0; --f) {
        auto it = std::find(p.begin(), p.end(), static_cast<Point>(f));
        std::iter_swap(it, p.begin() + f);
      }
      desc.generators.push_back(std::move(p));
    }
    auto out = jerrum_filter(desc);
    require(out.generators.size() <= 5, "trial " + std::to_string(trial) + ": " +
                                            std::to_string(out.generators.size()) + " generators");
    const auto before = enumerate_permutation_group(desc).order();
    const auto after = enumerate_permutation_group(out).order();
    require(before == after, "trial " + std::to_string(trial) + ": order " + std::to_string(before) + " -> " +
                                 std::to_string(after));
    max_out = std::max(max_out, out.generators.size());
  }
  return "100 sets, at most " + std::to_string(max_out) + " generators kept, orders preserved";
}

// 12. d(Z3 wr Z2) from the formula matches exhaustive search on the order-18 group.
std::string wreath() {
  auto w = d_wreath(regular_perm(cyclic_table(3)), regular_perm(cyclic_table(2)));
  auto G = corpus::group("wreath (cyclic 3) (cyclic 2)");
  require(G.order() == 18, "wreath fixture has order " + std::to_string(G.order()));
  const auto brute = mingen_brute(G).d;
  require(w.d == brute, "formula " + std::to_string(w.d) + ", brute " + std::to_string(brute));
  require(w.d == oracle_d(G), "oracle disagrees");
  return "formula and brute force both give " + std::to_string(w.d);
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    std::function<std::string()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "trivial group has d = 0", 1, trivial_group},
      {2, "oracle corpus", 600, oracle_corpus},
      {3, "d(A5) = d(A5 x A5) = 2", 300, a5_powers},
      {4, "minimal normal sandwich", 600, sandwich},
      {5, "quarter-exponent counter", 600, quarter_exponent},
      {6, "product stage counter", 600, product_counter},
      {7, "direct product formula", 600, direct_products},
      {8, "solvable path purity", 60, solvable_purity},
      {9, "primitive path", 120, primitive},
      {10, "chief factor invariance", 600, jordan_holder},
      {11, "generator filter bound", 600, jerrum},
      {12, "wreath formula", 600, wreath},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = true;
    try {
      detail = c.run();
    } catch (const Failure& f) {
      pass = false;
      detail = f.what;
    } catch (const std::exception& e) {
      pass = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (pass && secs > c.limit_seconds) {
      pass = false;
      detail += " (took longer than " + std::to_string(static_cast<int>(c.limit_seconds)) + " s)";
    }
    std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << "  " << c.title << " -- " << detail
              << " [" << secs << " s]" << std::endl;
    failed += !pass;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
