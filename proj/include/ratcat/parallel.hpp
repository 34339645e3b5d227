#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace ratcat {

// 0 (or negative) means "all hardware threads".
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Folds items[i] into per-chunk accumulators (contiguous, fixed chunking) and
// merges the chunks in index order. With an exact commutative accumulator
// the result does not depend on the thread count.
template <class Acc, class Item, class Fold, class Merge>
Acc parallel_reduce(const std::vector<Item>& items, int threads, const Acc& zero, Fold fold, Merge merge) {
  const std::size_t n = items.size();
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(resolve_threads(threads)),
                                                    std::max<std::size_t>(n, 1));
  std::vector<Acc> partial(workers, zero);
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](std::size_t w) {
    try {
      const std::size_t lo = n * w / workers, hi = n * (w + 1) / workers;
      for (std::size_t i = lo; i < hi; ++i) fold(partial[w], items[i]);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Acc total = zero;
  for (auto& p : partial) merge(total, p);
  return total;
}

}  // namespace ratcat
