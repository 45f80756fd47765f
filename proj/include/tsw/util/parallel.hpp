#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <vector>

namespace tsw {

// Worker count from TSW_THREADS (default 1, clamped to [1, 64]).
std::size_t worker_count();

// Runs body(0..n-1) on worker_count() threads. Work is split by index, so
// results written to slot i do not depend on the schedule. The first
// exception (lowest index) is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F f) {
  std::vector<std::optional<T>> slots(n);
  parallel_for(n, [&](std::size_t i) { slots[i].emplace(f(i)); });
  std::vector<T> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace tsw
