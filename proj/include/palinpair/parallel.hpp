#pragma once

#include <cstdint>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

namespace palinpair::detail {

inline unsigned resolve_jobs(unsigned requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

/// Splits [0, total) into contiguous chunks, evaluates them on worker
/// threads, and merges the per-chunk results in chunk order, so the combined
/// result does not depend on scheduling.
template <typename R, typename Fn, typename Merge>
R parallel_chunked(std::uint64_t total, unsigned jobs, Fn per_chunk, Merge merge) {
  jobs = resolve_jobs(jobs);
  if (jobs <= 1 || total < 2 * jobs) return per_chunk(0, total);

  std::vector<R> results(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  const std::uint64_t chunk = (total + jobs - 1) / jobs;
  for (unsigned t = 0; t < jobs; ++t) {
    std::uint64_t lo = std::min<std::uint64_t>(total, t * chunk);
    std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
    workers.emplace_back([&, t, lo, hi] {
      try {
        results[t] = per_chunk(lo, hi);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  R acc = std::move(results[0]);
  for (unsigned t = 1; t < jobs; ++t) merge(acc, std::move(results[t]));
  return acc;
}

}  // namespace palinpair::detail
