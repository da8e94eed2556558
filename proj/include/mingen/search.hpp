#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "mingen/subgroup.hpp"

namespace mingen {

/// Smallest index i in [0, count) with pred(i, workspace) true.
///
/// With several threads the index range is handed out in chunks; a thread
/// abandons chunks that start past the best success so far, so the result is
/// the same as the sequential scan.
template <class Pred>
std::optional<std::uint64_t> first_success(std::uint64_t count, std::size_t group_order, unsigned threads,
                                           Pred&& pred) {
  if (threads <= 1 || count < 1024) {
    ClosureWorkspace ws(group_order);
    for (std::uint64_t i = 0; i < count; ++i)
      if (pred(i, ws))
        return i;
    return std::nullopt;
  }
  constexpr std::uint64_t chunk = 256;
  std::atomic<std::uint64_t> best{count};
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    ClosureWorkspace ws(group_order);
    for (;;) {
      std::uint64_t start = next.fetch_add(1) * chunk;
      if (start >= count || start >= best.load())
        return;
      std::uint64_t stop = std::min(count, start + chunk);
      for (std::uint64_t i = start; i < stop && i < best.load(); ++i)
        if (pred(i, ws)) {
          std::uint64_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          break;
        }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back(worker);
  pool.clear();
  auto b = best.load();
  if (b < count)
    return b;
  return std::nullopt;
}

/// Decodes a tuple index into `width` digits base `radix`, most significant
/// first, so increasing indices enumerate tuples lexicographically.
inline void decode_tuple(std::uint64_t index, std::uint64_t radix, std::size_t width, std::vector<std::size_t>& out) {
  out.resize(width);
  for (std::size_t k = width; k-- > 0;) {
    out[k] = static_cast<std::size_t>(index % radix);
    index /= radix;
  }
}

}  // namespace mingen
