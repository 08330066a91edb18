#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <random>
#include <thread>
#include <vector>

namespace noisetune {

/// splitmix64 step; decent avalanche, used only for deriving seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic RNG stream derived from a base seed plus up to three
/// stream indices (trajectory, sample, iteration...). Streams with
/// different indices are independent, so adding work items never
/// perturbs existing ones.
inline std::mt19937_64 rng_stream(std::uint64_t seed, std::uint64_t a = 0,
                                  std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t s = splitmix64(seed);
  s = splitmix64(s ^ splitmix64(a));
  s = splitmix64(s ^ splitmix64(b));
  s = splitmix64(s ^ splitmix64(c));
  return std::mt19937_64(s);
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

/// Runs fn(i) for i in [0, n). With n_threads <= 1 runs serially in
/// index order. Work items must be independent; callers keep results in
/// per-index slots and reduce in index order afterwards, so parallel and
/// serial execution produce identical results.
template <typename Fn>
void parallel_for_items(int n, int n_threads, Fn&& fn) {
  if (n <= 0) return;
  if (n_threads <= 1 || n == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= n) return;
      fn(i);
    }
  };
  int workers = std::min(n_threads, n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace noisetune
