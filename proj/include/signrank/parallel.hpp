#ifndef SIGNRANK_PARALLEL_HPP
#define SIGNRANK_PARALLEL_HPP

#include <cstdlib>
#include <thread>
#include <vector>

namespace signrank {

// Worker cap: SIGNRANK_THREADS when set, hardware concurrency otherwise.
inline unsigned worker_count() {
  if (const char* env = std::getenv("SIGNRANK_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Runs fn(begin, end) over a fixed partition of [0, count). The partition
// depends only on count and the worker cap, so aggregation by chunk index is
// deterministic.
template <typename Fn>
void parallel_chunks(size_t count, Fn&& fn) {
  const unsigned workers = worker_count();
  if (count == 0) return;
  if (workers <= 1 || count == 1) {
    fn(size_t{0}, count);
    return;
  }
  const unsigned chunks = static_cast<unsigned>(std::min<size_t>(workers, count));
  std::vector<std::thread> threads;
  threads.reserve(chunks);
  const size_t step = (count + chunks - 1) / chunks;
  for (unsigned c = 0; c < chunks; ++c) {
    const size_t begin = c * step;
    const size_t end = std::min(count, begin + step);
    if (begin >= end) break;
    threads.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace signrank

#endif
