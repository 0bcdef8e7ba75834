#pragma once

#include <cstdint>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

namespace ccc::detail {

/// Splits [0, total) into at most `parts` contiguous, nearly equal ranges.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> split_range(std::uint64_t total,
                                                                        unsigned parts) {
  if (parts == 0) parts = 1;
  if (total < parts) parts = static_cast<unsigned>(total == 0 ? 1 : total);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  out.reserve(parts);
  const std::uint64_t base = total / parts, extra = total % parts;
  std::uint64_t begin = 0;
  for (unsigned i = 0; i < parts; ++i) {
    const std::uint64_t len = base + (i < extra ? 1 : 0);
    out.emplace_back(begin, begin + len);
    begin += len;
  }
  return out;
}

/// Runs job(0..count-1), one thread per index beyond the first, which runs
/// inline. Rethrows the first exception in index order.
template <class Job>
void run_parallel(std::size_t count, Job&& job) {
  std::vector<std::exception_ptr> errors(count);
  auto guarded = [&](std::size_t i) {
    try {
      job(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(count > 0 ? count - 1 : 0);
  for (std::size_t i = 1; i < count; ++i) pool.emplace_back(guarded, i);
  if (count > 0) guarded(0);
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace ccc::detail
