#pragma once

// Execution policy for the data-parallel kernels (box scans, subset
// enumerations). Every kernel keeps a plain serial loop as the reference
// implementation; the OpenMP path must produce identical output.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace wogsym {

enum class Exec { Serial, Parallel };

/// Default policy for library entry points that do not take one.
Exec default_exec() noexcept;
void set_default_exec(Exec exec) noexcept;

/// Number of OpenMP threads, 1 when built without OpenMP.
int max_threads() noexcept;
void set_threads(int n) noexcept;

/// Mixed-radix box [0, upper_0] x ... x [0, upper_{s-1}] addressed by a flat
/// index, first coordinate most significant.
class IntegerBox {
 public:
  explicit IntegerBox(std::vector<std::uint32_t> upper);

  std::uint64_t size() const noexcept { return size_; }
  std::size_t dims() const noexcept { return upper_.size(); }
  void point(std::uint64_t index, std::vector<std::uint32_t>& out) const;

 private:
  std::vector<std::uint32_t> upper_;
  std::uint64_t size_ = 1;
};

}  // namespace wogsym
