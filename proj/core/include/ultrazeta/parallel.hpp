#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace ultrazeta {

// Worker count: ULTRAZETA_THREADS when set, else the hardware concurrency.
unsigned thread_count();

// Runs body(begin, end) over fixed contiguous chunks of [0, count). Chunk
// boundaries depend only on count and thread_count(), so callers that reduce
// per-chunk results in chunk order get scheduling-independent answers.
void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body);

template <class T, class F>
std::vector<T> parallel_map(std::size_t count, F f) {
  std::vector<T> out(count);
  parallel_for(count, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) out[i] = f(i);
  });
  return out;
}

}  // namespace ultrazeta
