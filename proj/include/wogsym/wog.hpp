#pragma once

// Weighted oriented graphs: edge ideals, Alexander duals, strong vertex
// covers, and the combinatorial classification of I(D)^n == I(D)^(n).
//
// Vertices are numbered 1..s everywhere. A vertex with no edges counts as
// both a source and a sink.

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "wogsym/decomposition.hpp"
#include "wogsym/exec.hpp"
#include "wogsym/monomial.hpp"

namespace wogsym {

using Vertex = std::size_t;
using VertexSet = std::vector<Vertex>;  // sorted, 1-based

struct DirectedEdge {
  Vertex from = 0;
  Vertex to = 0;
  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
  friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

class WeightedOrientedGraph {
 public:
  WeightedOrientedGraph() = default;
  /// Throws ValidationError on self loops, out-of-range endpoints, an
  /// underlying edge given twice, or a zero weight.
  WeightedOrientedGraph(std::size_t numVertices, std::vector<Exponent> weights,
                        std::vector<DirectedEdge> edges);

  std::size_t num_vertices() const noexcept { return weights_.size(); }
  const std::vector<Exponent>& weights() const noexcept { return weights_; }
  Exponent weight(Vertex v) const { return weights_.at(v - 1); }
  /// Sorted.
  const std::vector<DirectedEdge>& edges() const noexcept { return edges_; }

  const VertexSet& out_neighbors(Vertex v) const { return out_.at(v - 1); }
  const VertexSet& in_neighbors(Vertex v) const { return in_.at(v - 1); }
  /// Underlying undirected neighbourhood N_G(v).
  const VertexSet& neighbors(Vertex v) const { return und_.at(v - 1); }

  bool is_source(Vertex v) const { return in_neighbors(v).empty(); }
  bool is_sink(Vertex v) const { return out_neighbors(v).empty(); }
  bool is_normalized() const;

  friend bool operator==(const WeightedOrientedGraph& a, const WeightedOrientedGraph& b) {
    return a.weights_ == b.weights_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Exponent> weights_;
  std::vector<DirectedEdge> edges_;
  std::vector<VertexSet> out_, in_, und_;
};

/// Graph text format: `vertices s`, `weights w1 .. ws`, then `edge i j`
/// lines (i -> j). `#` comments and blank lines are ignored.
WeightedOrientedGraph parse_graph(std::string_view text);
std::string format_graph(const WeightedOrientedGraph& graph);

/// Source weights forced to 1; the edge ideal does not see them.
WeightedOrientedGraph normalize(const WeightedOrientedGraph& graph);

MonomialIdeal edge_ideal(const WeightedOrientedGraph& graph);

struct AlexanderDual {
  IrreducibleDecomposition components;  // (t_i, t_j^{w_j}) per edge
  MonomialIdeal ideal;                  // J(D)
};
AlexanderDual alexander_dual(const WeightedOrientedGraph& graph);

struct VertexRoles {
  VertexSet sinks;
  VertexSet sources;
  VertexSet vPlus;  // weight >= 2
  bool allVPlusSinks = true;
};
VertexRoles vertex_roles(const WeightedOrientedGraph& graph);

struct UnderlyingProps {
  bool isBipartite = true;
  bool hasTriangle = false;
  std::optional<std::size_t> oddGirth;
};
UnderlyingProps underlying_props(const WeightedOrientedGraph& graph);

struct CoverPartition {
  VertexSet cover;
  VertexSet l1;  // some out-neighbour outside C
  VertexSet l2;
  VertexSet l3;  // whole neighbourhood inside C
};

bool is_vertex_cover(const WeightedOrientedGraph& graph, const VertexSet& cover);
bool is_minimal_vertex_cover(const WeightedOrientedGraph& graph, const VertexSet& cover);
CoverPartition cover_partition(const WeightedOrientedGraph& graph, const VertexSet& cover);

bool is_strong_cover(const WeightedOrientedGraph& graph, const VertexSet& cover);

inline constexpr std::size_t kDefaultCoverVertexLimit = 22;

/// All strong vertex covers, sorted (smaller first, then lexicographic).
/// Serial: full subset scan. Parallel: pruned depth-first search split over
/// prefixes of the vertex order.
std::vector<VertexSet> strong_covers(const WeightedOrientedGraph& graph,
                                     std::size_t vertexLimit = kDefaultCoverVertexLimit,
                                     Exec exec = default_exec());

IrreducibleIdeal cover_ideal(const WeightedOrientedGraph& graph, const VertexSet& cover);
/// Intersection of I_C over the strong covers, checked against edge_ideal
/// and returned irredundant.
IrreducibleDecomposition decomposition_via_covers(
    const WeightedOrientedGraph& graph, std::size_t vertexLimit = kDefaultCoverVertexLimit);

struct IrrelevantReport {
  bool maximalIsAssociated = false;  // m in Ass(I(D)), via decomposition
  bool fullSetIsStrong = false;      // V(D) strong cover
  bool outNeighborhoodCovers = false;  // N^+(V^+) == V(D)
  bool value = false;
};
/// Evaluates all three equivalent criteria; throws ConsistencyError if they
/// disagree.
IrrelevantReport irrelevant_in_ass(const WeightedOrientedGraph& graph);

struct Classification {
  bool square = true;     // I^2 == I^(2)
  bool allPowers = true;  // I^n == I^(n) for all n
  std::optional<bool> ntf;  // only when I(D) has no embedded primes
};
Classification classify(const WeightedOrientedGraph& graph);

/// u + w(v) e_v + w(x) e_x for the first v in V^+ that is neither source nor
/// sink, with u its first in-neighbour and x its first out-neighbour.
std::optional<ExponentVector> non_sink_witness(const WeightedOrientedGraph& graph);

/// Mask form of a vertex set (bit v-1 for vertex v).
std::uint64_t to_mask(const VertexSet& set);
VertexSet from_mask(std::uint64_t mask, std::size_t numVertices);

}  // namespace wogsym
