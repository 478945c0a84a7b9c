#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace cscrystal::detail {

/// Splits [0, n) into contiguous chunks, evaluates `partial(begin, end)` on
/// each (one thread per chunk) and folds the results in chunk order.
template <class T, class Partial>
T chunked_sum(std::size_t n, unsigned threads, T zero, Partial partial) {
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(threads, n));
  if (chunks == 1) return n == 0 ? zero : partial(std::size_t{0}, n);
  std::vector<T> results(chunks, zero);
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = n * c / chunks;
    const std::size_t end = n * (c + 1) / chunks;
    pool.emplace_back([&results, &partial, c, begin, end] { results[c] = partial(begin, end); });
  }
  for (auto& th : pool) th.join();
  T total = std::move(zero);
  for (auto& r : results) total += r;
  return total;
}

}  // namespace cscrystal::detail
