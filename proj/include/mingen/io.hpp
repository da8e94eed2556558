#pragma once

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mingen/group.hpp"
#include "mingen/permutation.hpp"

namespace mingen {

// Cayley format:       "cayley n", then n rows of n 0-based indices (row x, column y holds x*y).
// Permutation format:  "perm n k", then k rows of n 1-based images.

enum class Format { cayley, perm };

inline const char* to_string(Format f) { return f == Format::cayley ? "cayley" : "perm"; }

/// A parsed group file.
struct GroupFile {
  Format format = Format::cayley;
  /// Set when format == cayley.
  Group table;
  /// Set when format == perm.
  PermutationDesc perm;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
      ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
      ++j;
    if (j > i)
      out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

// Non-blank lines, each split into tokens, with 1-based line numbers.
struct Lines {
  std::vector<std::vector<std::string_view>> rows;
  std::vector<std::size_t> numbers;
};

inline Lines tokenize(std::string_view text) {
  Lines out;
  std::size_t number = 0, start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    ++number;
    auto toks = split_ws(text.substr(start, end - start));
    if (!toks.empty()) {
      out.rows.push_back(std::move(toks));
      out.numbers.push_back(number);
    }
    start = end + 1;
  }
  return out;
}

inline std::uint64_t parse_uint(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw Error(ErrorKind::parse_error,
                "line " + std::to_string(line) + ": expected a non-negative integer, got '" + std::string(tok) + "'");
  return v;
}

}  // namespace detail

/// Parses and validates a Cayley table file.
inline Group parse_cayley(std::string_view text) {
  auto lines = detail::tokenize(text);
  if (lines.rows.empty() || lines.rows[0].size() != 2 || lines.rows[0][0] != "cayley")
    throw Error(ErrorKind::parse_error, "expected header 'cayley n'");
  const auto n = detail::parse_uint(lines.rows[0][1], lines.numbers[0]);
  if (n == 0)
    throw Error(ErrorKind::parse_error, "line " + std::to_string(lines.numbers[0]) + ": order must be positive");
  if (n > kTableLimit * 4)
    throw Error(ErrorKind::order_exceeded, "Cayley tables are limited to order " + std::to_string(kTableLimit * 4));
  if (lines.rows.size() != n + 1)
    throw Error(ErrorKind::parse_error,
                "expected " + std::to_string(n) + " rows, found " + std::to_string(lines.rows.size() - 1));
  std::vector<Element> table;
  table.reserve(n * n);
  for (std::size_t r = 1; r <= n; ++r) {
    if (lines.rows[r].size() != n)
      throw Error(ErrorKind::parse_error, "line " + std::to_string(lines.numbers[r]) + ": expected " +
                                              std::to_string(n) + " entries, found " +
                                              std::to_string(lines.rows[r].size()));
    for (auto tok : lines.rows[r]) {
      auto v = detail::parse_uint(tok, lines.numbers[r]);
      if (v >= n)
        throw Error(ErrorKind::parse_error, "line " + std::to_string(lines.numbers[r]) + ": entry " +
                                                std::to_string(v) + " out of range");
      table.push_back(static_cast<Element>(v));
    }
  }
  return Group::from_table(n, std::move(table));
}

/// Parses and validates a permutation generator file.
inline PermutationDesc parse_perm(std::string_view text) {
  auto lines = detail::tokenize(text);
  if (lines.rows.empty() || lines.rows[0].size() != 3 || lines.rows[0][0] != "perm")
    throw Error(ErrorKind::parse_error, "expected header 'perm n k'");
  const auto n = detail::parse_uint(lines.rows[0][1], lines.numbers[0]);
  const auto k = detail::parse_uint(lines.rows[0][2], lines.numbers[0]);
  if (n == 0)
    throw Error(ErrorKind::parse_error, "line " + std::to_string(lines.numbers[0]) + ": degree must be positive");
  if (n > 0xFFFF)
    throw Error(ErrorKind::parse_error, "degree too large");
  if (lines.rows.size() != k + 1)
    throw Error(ErrorKind::parse_error,
                "expected " + std::to_string(k) + " generator rows, found " + std::to_string(lines.rows.size() - 1));
  PermutationDesc desc{n, {}};
  for (std::size_t r = 1; r <= k; ++r) {
    if (lines.rows[r].size() != n)
      throw Error(ErrorKind::parse_error, "line " + std::to_string(lines.numbers[r]) + ": expected " +
                                              std::to_string(n) + " images, found " +
                                              std::to_string(lines.rows[r].size()));
    Perm p;
    for (auto tok : lines.rows[r]) {
      auto v = detail::parse_uint(tok, lines.numbers[r]);
      if (v == 0 || v > n)
        throw Error(ErrorKind::not_a_permutation, "line " + std::to_string(lines.numbers[r]) + ": image " +
                                                      std::to_string(v) + " out of range 1.." + std::to_string(n));
      p.push_back(static_cast<Point>(v - 1));
    }
    desc.generators.push_back(std::move(p));
  }
  if (auto why = validate(desc))
    throw Error(ErrorKind::not_a_permutation, *why);
  return desc;
}

/// Detects the format from the header keyword.
inline GroupFile parse_group_file(std::string_view text) {
  auto lines = detail::tokenize(text);
  if (lines.rows.empty())
    throw Error(ErrorKind::parse_error, "empty input");
  GroupFile f;
  if (lines.rows[0][0] == "cayley") {
    f.format = Format::cayley;
    f.table = parse_cayley(text);
  } else if (lines.rows[0][0] == "perm") {
    f.format = Format::perm;
    f.perm = parse_perm(text);
  } else {
    throw Error(ErrorKind::parse_error, "unknown format '" + std::string(lines.rows[0][0]) + "'");
  }
  return f;
}

inline std::string serialize_cayley(const Group& G) {
  const std::size_t n = G.order();
  std::string out = "cayley " + std::to_string(n) + "\n";
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (y)
        out += ' ';
      out += std::to_string(G.mul(x, y));
    }
    out += '\n';
  }
  return out;
}

inline std::string serialize_perm(const PermutationDesc& desc) {
  std::string out = "perm " + std::to_string(desc.degree) + " " + std::to_string(desc.generators.size()) + "\n";
  for (const auto& g : desc.generators) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i)
        out += ' ';
      out += std::to_string(g[i] + 1);
    }
    out += '\n';
  }
  return out;
}

inline std::string serialize(const GroupFile& f) {
  return f.format == Format::cayley ? serialize_cayley(f.table) : serialize_perm(f.perm);
}

/// The group a file describes, enumerating permutation input.
inline Group to_group(const GroupFile& f, std::size_t max_order = kDefaultMaxOrder) {
  return f.format == Format::cayley ? f.table : enumerate_permutation_group(f.perm, max_order);
}

/// One-based image list of a permutation, for reports.
inline std::vector<std::size_t> one_based(std::span<const Point> p) {
  std::vector<std::size_t> out;
  for (auto x : p)
    out.push_back(x + std::size_t{1});
  return out;
}

}  // namespace mingen
