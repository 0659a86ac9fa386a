#include "wogsym/wog.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <deque>
#include <limits>
#include <set>
#include <sstream>
#include <string>

#include "wogsym/errors.hpp"

namespace wogsym {

namespace {

constexpr std::size_t kMaskBits = 63;

void require_normalized(const WeightedOrientedGraph& graph) {
  if (!graph.is_normalized()) {
    throw DomainError("graph is not normalized: every source must have weight 1");
  }
}

void require_vertices(const WeightedOrientedGraph& graph, const VertexSet& set) {
  for (auto v : set) {
    if (v == 0 || v > graph.num_vertices()) {
      throw DomainError("vertex " + std::to_string(v) + " outside 1.." +
                        std::to_string(graph.num_vertices()));
    }
  }
}

VertexSet sorted_unique(VertexSet set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

bool contains(const VertexSet& set, Vertex v) { return std::binary_search(set.begin(), set.end(), v); }

// Bit masks of the neighbourhoods, for the enumeration kernels.
struct MaskGraph {
  std::size_t s = 0;
  std::vector<std::uint64_t> out, in, und;
  std::uint64_t heavy = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;

  explicit MaskGraph(const WeightedOrientedGraph& g) : s(g.num_vertices()), out(s), in(s), und(s) {
    for (const auto& e : g.edges()) {
      const auto a = e.from - 1;
      const auto b = e.to - 1;
      out[a] |= 1ULL << b;
      in[b] |= 1ULL << a;
      und[a] |= 1ULL << b;
      und[b] |= 1ULL << a;
      edges.emplace_back(1ULL << a, 1ULL << b);
    }
    for (std::size_t v = 0; v < s; ++v)
      if (g.weights()[v] >= 2) heavy |= 1ULL << v;
  }

  bool covers(std::uint64_t c) const {
    return std::all_of(edges.begin(), edges.end(),
                       [c](const auto& e) { return (c & e.first) || (c & e.second); });
  }

  // Assumes c is a cover. Minimal covers have L3 empty, so the second
  // clause of the definition subsumes the first.
  bool strong(std::uint64_t c) const {
    std::uint64_t l1 = 0, l3 = 0;
    for (std::size_t x = 0; x < s; ++x) {
      if (!(c >> x & 1)) continue;
      if (out[x] & ~c) l1 |= 1ULL << x;
      if (!(und[x] & ~c)) l3 |= 1ULL << x;
    }
    const std::uint64_t l23 = c & ~l1;
    for (std::size_t x = 0; x < s; ++x) {
      if (!(l3 >> x & 1)) continue;
      if (!(in[x] & l23 & heavy)) return false;
    }
    return true;
  }
};

void dfs_covers(const MaskGraph& g, std::size_t k, std::uint64_t chosen,
                std::vector<std::uint64_t>& out) {
  if (k == g.s) {
    if (g.strong(chosen)) out.push_back(chosen);
    return;
  }
  const std::uint64_t decided = (1ULL << k) - 1;
  const bool forced = (g.und[k] & decided & ~chosen) != 0;
  dfs_covers(g, k + 1, chosen | 1ULL << k, out);
  if (!forced) dfs_covers(g, k + 1, chosen, out);
}

bool cover_order(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<unsigned long long> parse_numbers(std::istringstream& in, std::size_t line) {
  std::vector<unsigned long long> values;
  std::string token;
  while (in >> token) {
    unsigned long long v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("expected a natural number, got '" + token + "'", line);
    }
    values.push_back(v);
  }
  return values;
}

}  // namespace

WeightedOrientedGraph::WeightedOrientedGraph(std::size_t numVertices, std::vector<Exponent> weights,
                                             std::vector<DirectedEdge> edges)
    : weights_(std::move(weights)), edges_(std::move(edges)) {
  if (weights_.size() != numVertices) {
    throw ValidationError("expected " + std::to_string(numVertices) + " weights, got " +
                          std::to_string(weights_.size()));
  }
  for (std::size_t v = 0; v < numVertices; ++v) {
    if (weights_[v] == 0) throw ValidationError("vertex " + std::to_string(v + 1) + " has weight 0");
  }
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const auto& e : edges_) {
    if (e.from == 0 || e.to == 0 || e.from > numVertices || e.to > numVertices) {
      throw ValidationError("edge (" + std::to_string(e.from) + "," + std::to_string(e.to) +
                            ") has an endpoint outside 1.." + std::to_string(numVertices));
    }
    if (e.from == e.to) throw ValidationError("self loop at vertex " + std::to_string(e.from));
    if (!seen.emplace(std::min(e.from, e.to), std::max(e.from, e.to)).second) {
      throw ValidationError("underlying edge {" + std::to_string(e.from) + "," +
                            std::to_string(e.to) + "} given twice");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  out_.resize(numVertices);
  in_.resize(numVertices);
  und_.resize(numVertices);
  for (const auto& e : edges_) {
    out_[e.from - 1].push_back(e.to);
    in_[e.to - 1].push_back(e.from);
    und_[e.from - 1].push_back(e.to);
    und_[e.to - 1].push_back(e.from);
  }
  for (auto* lists : {&out_, &in_, &und_}) {
    for (auto& l : *lists) std::sort(l.begin(), l.end());
  }
}

bool WeightedOrientedGraph::is_normalized() const {
  for (Vertex v = 1; v <= num_vertices(); ++v) {
    if (is_source(v) && weight(v) != 1) return false;
  }
  return true;
}

WeightedOrientedGraph parse_graph(std::string_view text) {
  std::optional<std::size_t> numVertices;
  std::optional<std::vector<Exponent>> weights;
  std::vector<DirectedEdge> edges;
  std::vector<std::size_t> edgeLines;
  std::set<std::pair<Vertex, Vertex>> seen;

  std::size_t lineNo = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    auto line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++lineNo;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) {
      if (eol == text.size()) break;
      continue;
    }
    std::istringstream in{std::string(line)};
    std::string keyword;
    in >> keyword;
    const auto values = parse_numbers(in, lineNo);
    if (keyword == "vertices") {
      if (numVertices) throw ParseError("'vertices' given twice", lineNo);
      if (values.size() != 1) throw ParseError("'vertices' takes one count", lineNo);
      if (values[0] > kMaskBits) {
        throw ParseError("at most " + std::to_string(kMaskBits) + " vertices supported", lineNo);
      }
      numVertices = values[0];
    } else if (keyword == "weights") {
      if (!numVertices) throw ParseError("'weights' before 'vertices'", lineNo);
      if (weights) throw ParseError("'weights' given twice", lineNo);
      if (values.size() != *numVertices) {
        throw ParseError("expected " + std::to_string(*numVertices) + " weights, got " +
                             std::to_string(values.size()),
                         lineNo);
      }
      weights.emplace();
      for (auto w : values) {
        if (w == 0) throw ParseError("weights must be positive", lineNo);
        if (w > std::numeric_limits<Exponent>::max()) throw ParseError("weight too large", lineNo);
        weights->push_back(static_cast<Exponent>(w));
      }
    } else if (keyword == "edge") {
      if (!numVertices) throw ParseError("'edge' before 'vertices'", lineNo);
      if (values.size() != 2) throw ParseError("'edge' takes two vertices", lineNo);
      const auto a = values[0];
      const auto b = values[1];
      if (a == 0 || b == 0 || a > *numVertices || b > *numVertices) {
        throw ParseError("edge endpoint outside 1.." + std::to_string(*numVertices), lineNo);
      }
      if (a == b) throw ParseError("self loop at vertex " + std::to_string(a), lineNo);
      if (!seen.emplace(std::min(a, b), std::max(a, b)).second) {
        throw ParseError("underlying edge {" + std::to_string(a) + "," + std::to_string(b) +
                             "} already given",
                         lineNo);
      }
      edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    } else {
      throw ParseError("unknown keyword '" + keyword + "'", lineNo);
    }
    if (eol == text.size()) break;
  }
  if (!numVertices) throw ParseError("missing 'vertices' line");
  if (!weights) weights.emplace(*numVertices, 1);
  return WeightedOrientedGraph(*numVertices, std::move(*weights), std::move(edges));
}

std::string format_graph(const WeightedOrientedGraph& graph) {
  std::ostringstream out;
  out << "vertices " << graph.num_vertices() << "\nweights";
  for (auto w : graph.weights()) out << ' ' << w;
  out << '\n';
  for (const auto& e : graph.edges()) out << "edge " << e.from << ' ' << e.to << '\n';
  return out.str();
}

WeightedOrientedGraph normalize(const WeightedOrientedGraph& graph) {
  auto weights = graph.weights();
  for (Vertex v = 1; v <= graph.num_vertices(); ++v) {
    if (graph.is_source(v)) weights[v - 1] = 1;
  }
  return WeightedOrientedGraph(graph.num_vertices(), std::move(weights), graph.edges());
}

MonomialIdeal edge_ideal(const WeightedOrientedGraph& graph) {
  const std::size_t s = graph.num_vertices();
  std::vector<ExponentVector> gens;
  for (const auto& e : graph.edges()) {
    ExponentVector g(s);
    g[e.from - 1] = 1;
    g[e.to - 1] = graph.weight(e.to);
    gens.push_back(std::move(g));
  }
  return minimalize(std::move(gens), s);
}

AlexanderDual alexander_dual(const WeightedOrientedGraph& graph) {
  if (graph.edges().empty()) throw DomainError("the Alexander dual needs at least one edge");
  const std::size_t s = graph.num_vertices();
  std::vector<IrreducibleIdeal> components;
  for (const auto& e : graph.edges()) {
    ExponentVector alpha(s);
    alpha[e.from - 1] = 1;
    alpha[e.to - 1] = graph.weight(e.to);
    components.emplace_back(std::move(alpha));
  }
  AlexanderDual dual;
  dual.components = make_irredundant(s, std::move(components));
  dual.ideal = dual.components.intersection();
  return dual;
}

VertexRoles vertex_roles(const WeightedOrientedGraph& graph) {
  require_normalized(graph);
  VertexRoles roles;
  for (Vertex v = 1; v <= graph.num_vertices(); ++v) {
    if (graph.is_sink(v)) roles.sinks.push_back(v);
    if (graph.is_source(v)) roles.sources.push_back(v);
    if (graph.weight(v) >= 2) {
      roles.vPlus.push_back(v);
      if (!graph.is_sink(v)) roles.allVPlusSinks = false;
    }
  }
  return roles;
}

UnderlyingProps underlying_props(const WeightedOrientedGraph& graph) {
  UnderlyingProps props;
  const std::size_t s = graph.num_vertices();
  constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();

  for (const auto& e : graph.edges()) {
    const auto& a = graph.neighbors(e.from);
    const auto& b = graph.neighbors(e.to);
    std::vector<Vertex> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (!common.empty()) {
      props.hasTriangle = true;
      break;
    }
  }

  // From every root: an edge joining two vertices at equal BFS depth closes
  // an odd closed walk of length 2*depth+1; the minimum over roots is the
  // odd girth.
  std::vector<std::size_t> dist(s);
  for (Vertex root = 1; root <= s; ++root) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[root - 1] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (auto v : graph.neighbors(u)) {
        if (dist[v - 1] == kUnseen) {
          dist[v - 1] = dist[u - 1] + 1;
          queue.push_back(v);
        }
      }
    }
    for (const auto& e : graph.edges()) {
      const auto da = dist[e.from - 1];
      if (da != kUnseen && da == dist[e.to - 1]) {
        const std::size_t len = 2 * da + 1;
        if (!props.oddGirth || len < *props.oddGirth) props.oddGirth = len;
      }
    }
  }
  props.isBipartite = !props.oddGirth.has_value();
  return props;
}

bool is_vertex_cover(const WeightedOrientedGraph& graph, const VertexSet& cover) {
  const auto c = sorted_unique(cover);
  require_vertices(graph, c);
  return std::all_of(graph.edges().begin(), graph.edges().end(), [&](const DirectedEdge& e) {
    return contains(c, e.from) || contains(c, e.to);
  });
}

bool is_minimal_vertex_cover(const WeightedOrientedGraph& graph, const VertexSet& cover) {
  const auto c = sorted_unique(cover);
  if (!is_vertex_cover(graph, c)) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    VertexSet smaller = c;
    smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
    if (is_vertex_cover(graph, smaller)) return false;
  }
  return true;
}

CoverPartition cover_partition(const WeightedOrientedGraph& graph, const VertexSet& cover) {
  const auto c = sorted_unique(cover);
  if (!is_vertex_cover(graph, c)) throw DomainError("not a vertex cover of the underlying graph");
  CoverPartition part;
  part.cover = c;
  for (auto x : c) {
    const auto& outs = graph.out_neighbors(x);
    const auto& nbrs = graph.neighbors(x);
    const bool leaks = std::any_of(outs.begin(), outs.end(), [&](Vertex y) { return !contains(c, y); });
    const bool closed = std::all_of(nbrs.begin(), nbrs.end(), [&](Vertex y) { return contains(c, y); });
    if (leaks) {
      part.l1.push_back(x);
    } else if (closed) {
      part.l3.push_back(x);
    } else {
      part.l2.push_back(x);
    }
  }
  return part;
}

bool is_strong_cover(const WeightedOrientedGraph& graph, const VertexSet& cover) {
  require_normalized(graph);
  const auto part = cover_partition(graph, cover);
  VertexSet l23;
  std::set_union(part.l2.begin(), part.l2.end(), part.l3.begin(), part.l3.end(),
                 std::back_inserter(l23));
  const bool heavyInNeighbors = std::all_of(part.l3.begin(), part.l3.end(), [&](Vertex x) {
    const auto& ins = graph.in_neighbors(x);
    return std::any_of(ins.begin(), ins.end(),
                       [&](Vertex y) { return contains(l23, y) && graph.weight(y) >= 2; });
  });
  const bool minimal = is_minimal_vertex_cover(graph, part.cover);
  if (minimal && !(part.l3.empty() && heavyInNeighbors)) {
    throw ConsistencyError("minimal vertex cover with nonempty L3");
  }
  return minimal || heavyInNeighbors;
}

std::vector<VertexSet> strong_covers(const WeightedOrientedGraph& graph, std::size_t vertexLimit,
                                     Exec exec) {
  require_normalized(graph);
  const std::size_t s = graph.num_vertices();
  if (s > vertexLimit || s > kMaskBits) {
    throw ResourceError("strong cover enumeration over " + std::to_string(s) +
                        " vertices exceeds the limit of " +
                        std::to_string(std::min(vertexLimit, kMaskBits)) +
                        "; raise it with --max-covers");
  }
  const MaskGraph g(graph);
  std::vector<std::uint64_t> masks;

  if (exec == Exec::Serial) {
    const std::uint64_t total = 1ULL << s;
    for (std::uint64_t c = 0; c < total; ++c) {
      if (g.covers(c) && g.strong(c)) masks.push_back(c);
    }
  } else {
    // Expand the first few vertices into independent prefix tasks.
    const std::size_t depth = std::min<std::size_t>(s, 12);
    std::vector<std::uint64_t> prefixes{0};
    for (std::size_t k = 0; k < depth; ++k) {
      std::vector<std::uint64_t> next;
      const std::uint64_t decided = (1ULL << k) - 1;
      for (auto p : prefixes) {
        next.push_back(p | 1ULL << k);
        if (!(g.und[k] & decided & ~p)) next.push_back(p);
      }
      prefixes = std::move(next);
    }
    const auto count = static_cast<std::int64_t>(prefixes.size());
#pragma omp parallel
    {
      std::vector<std::uint64_t> local;
#pragma omp for schedule(dynamic, 16) nowait
      for (std::int64_t i = 0; i < count; ++i) {
        dfs_covers(g, depth, prefixes[static_cast<std::size_t>(i)], local);
      }
#pragma omp critical(wogsym_cover_merge)
      masks.insert(masks.end(), local.begin(), local.end());
    }
  }

  std::vector<VertexSet> covers;
  covers.reserve(masks.size());
  for (auto m : masks) covers.push_back(from_mask(m, s));
  std::sort(covers.begin(), covers.end(), cover_order);
  return covers;
}

IrreducibleIdeal cover_ideal(const WeightedOrientedGraph& graph, const VertexSet& cover) {
  if (!is_strong_cover(graph, cover)) throw DomainError("cover ideal needs a strong vertex cover");
  const auto part = cover_partition(graph, cover);
  ExponentVector alpha(graph.num_vertices());
  for (auto x : part.l1) alpha[x - 1] = 1;
  for (auto x : part.l2) alpha[x - 1] = graph.weight(x);
  for (auto x : part.l3) alpha[x - 1] = graph.weight(x);
  return IrreducibleIdeal(std::move(alpha));
}

IrreducibleDecomposition decomposition_via_covers(const WeightedOrientedGraph& graph,
                                                  std::size_t vertexLimit) {
  const auto ideal = edge_ideal(graph);
  if (ideal.is_zero()) throw DomainError("edgeless graph: the edge ideal is zero");
  std::vector<IrreducibleIdeal> components;
  for (const auto& c : strong_covers(graph, vertexLimit)) components.push_back(cover_ideal(graph, c));
  auto dec = make_irredundant(graph.num_vertices(), std::move(components));
  if (dec.intersection() != ideal) {
    throw ConsistencyError("intersection of the strong-cover ideals differs from I(D)");
  }
  return dec;
}

IrrelevantReport irrelevant_in_ass(const WeightedOrientedGraph& graph) {
  require_normalized(graph);
  const std::size_t s = graph.num_vertices();
  IrrelevantReport report;
  const auto ideal = edge_ideal(graph);
  if (ideal.is_proper_nonzero()) {
    const auto ass = associated_primes(ideal);
    report.maximalIsAssociated =
        std::find(ass.begin(), ass.end(), MonomialPrime::maximal(s)) != ass.end();
  }
  VertexSet all;
  for (Vertex v = 1; v <= s; ++v) all.push_back(v);
  report.fullSetIsStrong = s > 0 && is_strong_cover(graph, all);

  std::set<Vertex> reached;
  for (Vertex x = 1; x <= s; ++x) {
    if (graph.weight(x) < 2) continue;
    for (auto y : graph.out_neighbors(x)) reached.insert(y);
  }
  report.outNeighborhoodCovers = s > 0 && reached.size() == s;

  if (report.maximalIsAssociated != report.fullSetIsStrong ||
      report.fullSetIsStrong != report.outNeighborhoodCovers) {
    throw ConsistencyError("criteria for m in Ass(I(D)) disagree");
  }
  report.value = report.maximalIsAssociated;
  return report;
}

Classification classify(const WeightedOrientedGraph& graph) {
  const auto roles = vertex_roles(graph);
  const auto props = underlying_props(graph);
  Classification result;
  result.square = roles.allVPlusSinks && !props.hasTriangle;
  result.allPowers = roles.allVPlusSinks && props.isBipartite;
  const auto ideal = edge_ideal(graph);
  if (!ideal.is_proper_nonzero() || embedded_primes(ideal).empty()) result.ntf = result.allPowers;
  return result;
}

std::optional<ExponentVector> non_sink_witness(const WeightedOrientedGraph& graph) {
  require_normalized(graph);
  for (Vertex v = 1; v <= graph.num_vertices(); ++v) {
    if (graph.weight(v) < 2 || graph.is_source(v) || graph.is_sink(v)) continue;
    const Vertex u = graph.in_neighbors(v).front();
    const Vertex x = graph.out_neighbors(v).front();
    ExponentVector f(graph.num_vertices());
    f[u - 1] = 1;
    f[v - 1] = graph.weight(v);
    f[x - 1] = graph.weight(x);
    return f;
  }
  return std::nullopt;
}

std::uint64_t to_mask(const VertexSet& set) {
  std::uint64_t m = 0;
  for (auto v : set) {
    if (v == 0 || v > kMaskBits) throw DomainError("vertex " + std::to_string(v) + " not maskable");
    m |= 1ULL << (v - 1);
  }
  return m;
}

VertexSet from_mask(std::uint64_t mask, std::size_t numVertices) {
  VertexSet set;
  for (std::size_t v = 0; v < numVertices; ++v)
    if (mask >> v & 1) set.push_back(v + 1);
  return set;
}

}  // namespace wogsym
