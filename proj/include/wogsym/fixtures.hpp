#pragma once

// Named small instances with fully worked answers, and the self-check run by
// `wogsym examples`.

#include <string>
#include <string_view>
#include <vector>

#include "wogsym/wog.hpp"

namespace wogsym::fixtures {

/// 4-cycle 1->2<-3->4<-1, weights (1,2,1,2): I = (t1t2^2, t3t2^2, t3t4^2, t1t4^2).
WeightedOrientedGraph four_cycle_heavy_sinks();
/// Directed triangle 1->2->3->1, all weights 2: I = (t1t2^2, t2t3^2, t3t1^2).
WeightedOrientedGraph heavy_directed_triangle();
/// Triangle 1->2, 2->3, 1->3, weights (1,2,1): I = (t1t2^2, t2t3, t1t3).
WeightedOrientedGraph triangle_heavy_middle();
/// Triangle 3->1, 2->1, 2->3, weights (2,1,1): I = (t3t1^2, t2t1^2, t2t3).
WeightedOrientedGraph triangle_heavy_sink();
/// Path 1->2->3, weights (1,2,1): I = (t1t2^2, t2t3).
WeightedOrientedGraph path_heavy_middle();
/// Directed cycle 1->2->...->len->1 with unit weights.
WeightedOrientedGraph directed_cycle(std::size_t len);

/// Normaliz-style constraint block of Q(I) for four_cycle_heavy_sinks.
std::string_view four_cycle_constraint_block();

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Every fixture assertion, in a fixed order.
std::vector<Check> run_example_checks();

}  // namespace wogsym::fixtures
