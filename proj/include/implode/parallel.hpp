#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <random>
#include <vector>

namespace implode {

// Serial is the reference path; Parallel fans independent iterations out
// over OpenMP threads. Both produce identical results, ordered by index.
enum class Exec { Serial, Parallel };

// Generator for sample `index` of a seeded run. Each sample owns its stream,
// so results do not depend on scheduling.
inline std::mt19937_64 sample_rng(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

// out[i] = fn(i) for i in [0, n). An exception thrown by fn is rethrown
// after the loop; with several, the one with the lowest index wins.
template <typename T, typename Fn>
std::vector<T> map_indices(std::size_t n, Exec exec, Fn&& fn) {
  std::vector<T> out(n);
  if (exec == Exec::Parallel) {
    std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
      const auto k = static_cast<std::size_t>(i);
      try {
        out[k] = fn(k);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  } else {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
  }
  return out;
}

}  // namespace implode
