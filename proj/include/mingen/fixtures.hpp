#pragma once

#include <string>
#include <vector>

#include "mingen/arith.hpp"
#include "mingen/io.hpp"

namespace mingen {

/// Z_n as a Cayley table.
inline Group cyclic_table(std::size_t n) {
  if (n == 0 || n > kTableLimit)
    throw Error(ErrorKind::bad_params, "cyclic needs 1 <= n <= " + std::to_string(kTableLimit));
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t[x * n + y] = static_cast<Element>((x + y) % n);
  return Group::from_table_unchecked(n, std::move(t));
}

/// (Z_p)^k as a Cayley table; element i has base-p digits as coordinates.
inline Group elementary_abelian_table(std::size_t p, std::size_t k) {
  if (!is_prime(p))
    throw Error(ErrorKind::bad_params, "elementary_abelian needs a prime p");
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) {
    n *= p;
    if (n > kTableLimit)
      throw Error(ErrorKind::bad_params, "elementary_abelian order exceeds " + std::to_string(kTableLimit));
  }
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t r = 0, place = 1;
      for (std::size_t a = x, b = y; place < n; a /= p, b /= p, place *= p)
        r += ((a % p + b % p) % p) * place;
      t[x * n + y] = static_cast<Element>(r);
    }
  return Group::from_table_unchecked(n, std::move(t));
}

/// Q_8 as a Cayley table: 0 = 1, 1 = -1, 2 = i, 3 = -i, 4 = j, 5 = -j, 6 = k, 7 = -k.
inline Group quaternion_table() {
  // unit products of 1, i, j, k as (sign, unit)
  const int unit[4][4][2] = {
      {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
      {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
      {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
      {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
  };
  std::vector<Element> t(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int sx = x % 2 ? -1 : 1, sy = y % 2 ? -1 : 1;
      const auto& u = unit[x / 2][y / 2];
      int sign = sx * sy * u[0];
      t[x * 8 + y] = static_cast<Element>(2 * u[1] + (sign < 0 ? 1 : 0));
    }
  return Group::from_table_unchecked(8, std::move(t));
}

/// Dihedral group of order 2n on the vertices of an n-gon.
inline PermutationDesc dihedral_perm(std::size_t n) {
  if (n < 3 || n > 0xFFFF)
    throw Error(ErrorKind::bad_params, "dihedral needs n >= 3");
  Perm rot(n), ref(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<Point>((i + 1) % n);
    ref[i] = static_cast<Point>((n - i) % n);
  }
  return {n, {rot, ref}};
}

inline PermutationDesc symmetric_perm(std::size_t n) {
  if (n == 0 || n > 0xFFFF)
    throw Error(ErrorKind::bad_params, "symmetric needs n >= 1");
  PermutationDesc d{n, {}};
  if (n >= 2)
    d.generators.push_back(from_cycles(n, {{0, 1}}));
  if (n >= 3) {
    std::vector<Point> cyc(n);
    for (std::size_t i = 0; i < n; ++i)
      cyc[i] = static_cast<Point>(i);
    d.generators.push_back(from_cycles(n, {cyc}));
  }
  return d;
}

inline PermutationDesc alternating_perm(std::size_t n) {
  if (n == 0 || n > 0xFFFF)
    throw Error(ErrorKind::bad_params, "alternating needs n >= 1");
  PermutationDesc d{n, {}};
  if (n >= 3)
    d.generators.push_back(from_cycles(n, {{0, 1, 2}}));
  if (n >= 4) {
    // an even long cycle: 1..n for odd n, 2..n for even n
    std::vector<Point> cyc;
    for (std::size_t i = n % 2 ? 0 : 1; i < n; ++i)
      cyc.push_back(static_cast<Point>(i));
    d.generators.push_back(from_cycles(n, {cyc}));
  }
  return d;
}

inline PermutationDesc as_permutations(const GroupFile& f) {
  return f.format == Format::perm ? f.perm : regular_perm(f.table);
}

/// X x Y: a Cayley table when both are tables, otherwise permutations on
/// disjoint points.
inline GroupFile direct_product_fixture(const GroupFile& X, const GroupFile& Y) {
  if (X.format == Format::cayley && Y.format == Format::cayley) {
    const std::size_t a = X.table.order(), b = Y.table.order(), n = a * b;
    if (n > kTableLimit)
      throw Error(ErrorKind::bad_params, "direct product table exceeds order " + std::to_string(kTableLimit));
    std::vector<Element> t(n * n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        t[x * n + y] = static_cast<Element>(X.table.mul(x / b, y / b) * b + Y.table.mul(x % b, y % b));
    return {Format::cayley, Group::from_table_unchecked(n, std::move(t)), {}};
  }
  const auto P = as_permutations(X), Q = as_permutations(Y);
  if (P.degree + Q.degree > 0xFFFF)
    throw Error(ErrorKind::bad_params, "degree too large");
  return {Format::perm, Group(), disjoint_product(P, Q)};
}

/// X wr Y in its imprimitive action: Y (degree k) permutes k blocks of
/// deg(X) points, X acts on the first block. Point b*deg(X) + i is point i
/// of block b.
inline GroupFile wreath_fixture(const GroupFile& X, const GroupFile& Y) {
  const auto P = as_permutations(X), Q = as_permutations(Y);
  const std::size_t m = P.degree, k = Q.degree, n = m * k;
  if (n > 0xFFFF)
    throw Error(ErrorKind::bad_params, "degree too large");
  PermutationDesc out{n, {}};
  for (const auto& g : P.generators) {
    Perm p = identity_perm(n);
    std::copy(g.begin(), g.end(), p.begin());
    out.generators.push_back(std::move(p));
  }
  for (const auto& h : Q.generators) {
    Perm p(n);
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t i = 0; i < m; ++i)
        p[b * m + i] = static_cast<Point>(h[b] * m + i);
    out.generators.push_back(std::move(p));
  }
  return {Format::perm, Group(), std::move(out)};
}

namespace detail {

// Splits "(a b) c" into "(", "a", "b", ")", "c".
inline std::vector<std::string> fixture_tokens(const std::string& spec) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty())
      out.push_back(std::move(cur));
    cur.clear();
  };
  for (char c : spec) {
    if (c == '(' || c == ')') {
      flush();
      out.emplace_back(1, c);
    } else if (c == ' ' || c == '\t' || c == '\n' || c == ',') {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

struct FixtureParser {
  std::vector<std::string> toks;
  std::size_t pos = 0;

  const std::string& next(const char* what) {
    if (pos >= toks.size())
      throw Error(ErrorKind::bad_params, std::string("fixture spec ended, expected ") + what);
    return toks[pos++];
  }

  std::size_t number() {
    const auto& t = next("a number");
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size())
      throw Error(ErrorKind::bad_params, "expected a number, got '" + t + "'");
    return v;
  }

  GroupFile group() {
    const std::string family = next("a family name");
    if (family == "(") {
      auto g = group();
      if (next("')'") != ")")
        throw Error(ErrorKind::bad_params, "unbalanced parentheses in fixture spec");
      return g;
    }
    if (family == "cyclic")
      return {Format::cayley, cyclic_table(number()), {}};
    if (family == "elementary_abelian") {
      auto p = number();
      auto k = number();
      return {Format::cayley, elementary_abelian_table(p, k), {}};
    }
    if (family == "quaternion")
      return {Format::cayley, quaternion_table(), {}};
    if (family == "dihedral")
      return {Format::perm, Group(), dihedral_perm(number())};
    if (family == "symmetric")
      return {Format::perm, Group(), symmetric_perm(number())};
    if (family == "alternating")
      return {Format::perm, Group(), alternating_perm(number())};
    if (family == "direct_product") {
      auto x = group();
      auto y = group();
      return direct_product_fixture(x, y);
    }
    if (family == "wreath") {
      auto x = group();
      auto y = group();
      return wreath_fixture(x, y);
    }
    if (family == "regular") {
      auto x = group();
      return {Format::perm, Group(), regular_perm(to_group(x))};
    }
    throw Error(ErrorKind::bad_params, "unknown fixture family '" + family + "'");
  }
};

}  // namespace detail

/// Builds a fixture from a spec such as "direct_product (alternating 5)
/// (cyclic 2)". Families: cyclic n, dihedral n, symmetric n, alternating n,
/// elementary_abelian p k, quaternion, direct_product X Y, wreath X Y,
/// regular X. Parentheses are optional.
inline GroupFile make_fixture(const std::string& spec) {
  detail::FixtureParser parser{detail::fixture_tokens(spec)};
  auto g = parser.group();
  if (parser.pos != parser.toks.size())
    throw Error(ErrorKind::bad_params, "trailing tokens in fixture spec starting at '" + parser.toks[parser.pos] + "'");
  return g;
}

}  // namespace mingen
