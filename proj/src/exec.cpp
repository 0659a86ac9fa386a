#include "wogsym/exec.hpp"

#include <atomic>
#include <limits>

#include "wogsym/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wogsym {

namespace {
std::atomic<Exec> g_exec{Exec::Parallel};
}

Exec default_exec() noexcept { return g_exec.load(std::memory_order_relaxed); }
void set_default_exec(Exec exec) noexcept { g_exec.store(exec, std::memory_order_relaxed); }

int max_threads() noexcept {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_threads(int n) noexcept {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

IntegerBox::IntegerBox(std::vector<std::uint32_t> upper) : upper_(std::move(upper)) {
  for (auto u : upper_) {
    const std::uint64_t extent = static_cast<std::uint64_t>(u) + 1;
    if (size_ > std::numeric_limits<std::uint64_t>::max() / extent) {
      throw ResourceError("integer box too large to address");
    }
    size_ *= extent;
  }
}

void IntegerBox::point(std::uint64_t index, std::vector<std::uint32_t>& out) const {
  out.resize(upper_.size());
  for (std::size_t k = upper_.size(); k-- > 0;) {
    const std::uint64_t extent = static_cast<std::uint64_t>(upper_[k]) + 1;
    out[k] = static_cast<std::uint32_t>(index % extent);
    index /= extent;
  }
}

}  // namespace wogsym
