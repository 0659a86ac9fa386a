#include "wogsym/polyhedra.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "wogsym/errors.hpp"
#include "wogsym/symbolic.hpp"

namespace wogsym {

namespace {

void check_limits(const CoveringFormPolyhedron& p, const PolyhedronLimits& limits) {
  if (p.columns().empty()) throw DomainError("covering polyhedron without constraint columns");
  if (p.dim() > limits.maxDim) {
    throw ResourceError("dimension " + std::to_string(p.dim()) + " exceeds the limit of " +
                        std::to_string(limits.maxDim) + "; raise it with --max-vars");
  }
  if (p.columns().size() > limits.maxColumns) {
    throw ResourceError(std::to_string(p.columns().size()) +
                        " constraint columns exceed the limit of " +
                        std::to_string(limits.maxColumns) + "; raise it with --max-constraints");
  }
}

void require_proper_nonzero(const MonomialIdeal& ideal) {
  if (!ideal.is_proper_nonzero()) throw DomainError("expected a proper nonzero monomial ideal");
}

// Row r of the constraint system: e_r for r < s, otherwise a column.
struct ConstraintRows {
  std::size_t s;
  const std::vector<RationalVector>& columns;

  std::size_t count() const { return s + columns.size(); }
  Rational coeff(std::size_t row, std::size_t k) const {
    if (row < s) return row == k ? Rational(1) : Rational(0);
    return columns[row - s][k];
  }
  Rational rhs(std::size_t row) const { return row < s ? Rational(0) : Rational(1); }
};

// Exact solve of the square system on `rows`; nullopt when singular.
std::optional<RationalVector> solve(const ConstraintRows& sys, const std::vector<std::size_t>& rows) {
  const std::size_t s = sys.s;
  std::vector<RationalVector> m(s, RationalVector(s + 1));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t k = 0; k < s; ++k) m[i][k] = sys.coeff(rows[i], k);
    m[i][s] = sys.rhs(rows[i]);
  }
  for (std::size_t col = 0; col < s; ++col) {
    std::size_t pivot = col;
    while (pivot < s && m[pivot][col] == 0) ++pivot;
    if (pivot == s) return std::nullopt;
    std::swap(m[pivot], m[col]);
    for (std::size_t r = 0; r < s; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational factor = m[r][col] / m[col][col];
      for (std::size_t k = col; k <= s; ++k) m[r][k] -= factor * m[col][k];
    }
  }
  RationalVector x(s);
  for (std::size_t i = 0; i < s; ++i) x[i] = m[i][s] / m[i][i];
  return x;
}

bool feasible(const CoveringFormPolyhedron& p, const RationalVector& x) { return p.contains(x); }

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

// k-subset of {0..n-1} with lexicographic rank `rank`.
void unrank_combination(std::uint64_t rank, std::size_t n, std::size_t k, std::vector<std::size_t>& out) {
  out.resize(k);
  std::size_t next = 0;
  for (std::size_t i = 0; i < k; ++i) {
    while (true) {
      const auto block = binomial(n - next - 1, k - i - 1);
      if (rank < block) break;
      rank -= block;
      ++next;
    }
    out[i] = next++;
  }
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

using Found = std::map<RationalVector, std::pair<std::uint64_t, std::vector<std::size_t>>>;

void record(Found& found, RationalVector x, std::uint64_t rank, const std::vector<std::size_t>& rows) {
  auto it = found.find(x);
  if (it == found.end()) {
    found.emplace(std::move(x), std::make_pair(rank, rows));
  } else if (rank < it->second.first) {
    it->second = {rank, rows};
  }
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

std::int64_t checked_i64(const boost::multiprecision::mpz_int& z) {
  if (z > std::numeric_limits<std::int64_t>::max() / 4 || z < 0) {
    throw ResourceError("closure inequality coefficients too large for the box scan");
  }
  return z.convert_to<std::int64_t>();
}

}  // namespace

std::string format_rational(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string format_rational_vector(const RationalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += format_rational(v[i]);
  }
  return out + ')';
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  try {
    auto valid = [](const std::string& part) {
      auto body = part;
      if (!body.empty() && body.front() == '-') body.erase(0, 1);
      return !body.empty() && std::all_of(body.begin(), body.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    if (slash == std::string::npos) {
      if (!valid(s)) throw ParseError("bad rational '" + s + "'");
      return Rational(boost::multiprecision::mpz_int(s));
    }
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!valid(num) || !valid(den)) throw ParseError("bad rational '" + s + "'");
    boost::multiprecision::mpz_int d(den);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rational(boost::multiprecision::mpz_int(num), d);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const ParseError*>(&e)) throw;
    throw ParseError("bad rational '" + s + "'");
  }
}

CoveringFormPolyhedron::CoveringFormPolyhedron(std::size_t dim, std::vector<RationalVector> columns)
    : dim_(dim), columns_(std::move(columns)) {
  for (const auto& col : columns_) {
    if (col.size() != dim_) {
      throw DimensionError("column of length " + std::to_string(col.size()) + " in dimension " +
                           std::to_string(dim_));
    }
    for (const auto& c : col) {
      if (c < 0) throw DomainError("covering form needs nonnegative columns");
    }
  }
}

bool CoveringFormPolyhedron::contains(const RationalVector& x) const {
  if (x.size() != dim_) throw DimensionError("point of the wrong dimension");
  for (const auto& xi : x)
    if (xi < 0) return false;
  for (const auto& col : columns_)
    if (dot(x, col) < 1) return false;
  return true;
}

CoveringFormPolyhedron with_vertices(CoveringFormPolyhedron p, const PolyhedronLimits& limits) {
  p.vertices_ = enumerate_vertices(p, limits);
  return p;
}

std::vector<BasicSolution> basic_feasible_solutions(const CoveringFormPolyhedron& p,
                                                    const PolyhedronLimits& limits, Exec exec) {
  check_limits(p, limits);
  const ConstraintRows sys{p.dim(), p.columns()};
  const std::size_t n = sys.count();
  const std::size_t s = p.dim();
  Found found;

  if (exec == Exec::Serial) {
    std::vector<std::size_t> rows(s);
    std::iota(rows.begin(), rows.end(), 0);
    std::uint64_t rank = 0;
    do {
      if (auto x = solve(sys, rows); x && feasible(p, *x)) record(found, std::move(*x), rank, rows);
      ++rank;
    } while (next_combination(rows, n));
  } else {
    const auto total = static_cast<std::int64_t>(binomial(n, s));
#pragma omp parallel
    {
      Found local;
      std::vector<std::size_t> rows;
#pragma omp for schedule(dynamic, 64) nowait
      for (std::int64_t r = 0; r < total; ++r) {
        unrank_combination(static_cast<std::uint64_t>(r), n, s, rows);
        if (auto x = solve(sys, rows); x && feasible(p, *x)) {
          record(local, std::move(*x), static_cast<std::uint64_t>(r), rows);
        }
      }
#pragma omp critical(wogsym_bfs_merge)
      for (auto& [x, cert] : local) record(found, x, cert.first, cert.second);
    }
  }

  std::vector<BasicSolution> out;
  out.reserve(found.size());
  for (auto& [x, cert] : found) out.push_back({x, cert.second});
  return out;
}

bool check_certificate(const CoveringFormPolyhedron& p, const BasicSolution& bfs) {
  const ConstraintRows sys{p.dim(), p.columns()};
  if (bfs.point.size() != p.dim() || bfs.tightRows.size() != p.dim()) return false;
  if (!p.contains(bfs.point)) return false;
  for (auto row : bfs.tightRows) {
    if (row >= sys.count()) return false;
    Rational lhs = 0;
    for (std::size_t k = 0; k < p.dim(); ++k) lhs += sys.coeff(row, k) * bfs.point[k];
    if (lhs != sys.rhs(row)) return false;
  }
  // Independence: the tight system has a unique solution.
  auto x = solve(sys, bfs.tightRows);
  return x && *x == bfs.point;
}

std::vector<RationalVector> enumerate_vertices(const CoveringFormPolyhedron& p,
                                               const PolyhedronLimits& limits, Exec exec) {
  if (p.cached_vertices()) return *p.cached_vertices();
  std::vector<RationalVector> vertices;
  for (auto& bfs : basic_feasible_solutions(p, limits, exec)) vertices.push_back(std::move(bfs.point));
  return vertices;
}

RationalVector to_rational(const ExponentVector& a) {
  RationalVector r;
  r.reserve(a.size());
  for (auto c : a) r.emplace_back(c);
  return r;
}

RationalVector inverse_exponent(const ExponentVector& alpha) {
  RationalVector r(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] != 0) r[i] = Rational(1, alpha[i]);
  }
  return r;
}

CoveringFormPolyhedron covering_polyhedron(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal);
  std::vector<RationalVector> columns;
  for (const auto& g : ideal.gens()) columns.push_back(to_rational(g));
  return CoveringFormPolyhedron(ideal.num_vars(), std::move(columns));
}

CoveringFormPolyhedron newton_hrep(const MonomialIdeal& ideal, const PolyhedronLimits& limits) {
  return CoveringFormPolyhedron(ideal.num_vars(), enumerate_vertices(covering_polyhedron(ideal), limits));
}

bool in_newton_polyhedron(const MonomialIdeal& ideal, const RationalVector& x,
                          const PolyhedronLimits& limits) {
  return newton_hrep(ideal, limits).contains(x);
}

std::vector<ExponentVector> newton_vertices(const MonomialIdeal& ideal, const PolyhedronLimits& limits) {
  require_proper_nonzero(ideal);
  std::vector<ExponentVector> result;
  const auto& gens = ideal.gens();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens.size() == 1) {
      result.push_back(gens[i]);
      break;
    }
    std::vector<ExponentVector> others;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    const auto rest = minimalize(std::move(others), ideal.num_vars());
    // Strict: v_i lies outside NP(rest), i.e. violates some facet inequality.
    if (!in_newton_polyhedron(rest, to_rational(gens[i]), limits)) result.push_back(gens[i]);
  }
  return result;
}

CoveringFormPolyhedron irreducible_polyhedron(const IrreducibleDecomposition& dec) {
  if (dec.components.empty()) throw DomainError("irreducible polyhedron of an empty decomposition");
  std::vector<RationalVector> columns;
  for (const auto& q : dec.components) columns.push_back(inverse_exponent(q.alpha()));
  return CoveringFormPolyhedron(dec.ambient, std::move(columns));
}

bool polyhedra_equal(const CoveringFormPolyhedron& p, const CoveringFormPolyhedron& q,
                     const PolyhedronLimits& limits) {
  if (p.dim() != q.dim()) {
    throw DimensionError("polyhedra of dimensions " + std::to_string(p.dim()) + " and " +
                         std::to_string(q.dim()));
  }
  return enumerate_vertices(p, limits) == enumerate_vertices(q, limits);
}

MonomialIdeal integral_closure_power(const MonomialIdeal& ideal, unsigned n,
                                     const PolyhedronLimits& limits, Exec exec) {
  require_proper_nonzero(ideal);
  if (n == 0) throw DomainError("power index must be at least 1");
  const std::size_t s = ideal.num_vars();
  const auto vertices = enumerate_vertices(covering_polyhedron(ideal), limits, exec);

  // a.u >= n  <=>  a.(L u) >= n L with L the lcm of u's denominators.
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<std::int64_t> thresholds;
  for (const auto& u : vertices) {
    boost::multiprecision::mpz_int l = 1;
    for (const auto& c : u) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(c));
    std::vector<std::int64_t> row(s);
    for (std::size_t k = 0; k < s; ++k) {
      row[k] = checked_i64(boost::multiprecision::numerator(u[k]) * (l / boost::multiprecision::denominator(u[k])));
    }
    rows.push_back(std::move(row));
    thresholds.push_back(checked_i64(l * n));
  }

  std::vector<std::uint32_t> upper(s, 0);
  for (const auto& g : ideal.gens()) {
    for (std::size_t k = 0; k < s; ++k) {
      const auto bound = static_cast<std::uint64_t>(g[k]) * n;
      if (bound > std::numeric_limits<std::uint32_t>::max()) throw ResourceError("closure box too large");
      upper[k] = std::max(upper[k], static_cast<std::uint32_t>(bound));
    }
  }
  const IntegerBox box(upper);
  if (box.size() > limits.maxBoxPoints) {
    throw ResourceError("closure scan of " + std::to_string(box.size()) +
                        " points exceeds the limit of " + std::to_string(limits.maxBoxPoints));
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    long double worst = 0;
    for (std::size_t k = 0; k < s; ++k) worst += static_cast<long double>(rows[r][k]) * upper[k];
    if (worst > static_cast<long double>(std::numeric_limits<std::int64_t>::max() / 2)) {
      throw ResourceError("closure inequality sums overflow 64-bit range");
    }
  }

  auto inside = [&](const std::vector<std::uint32_t>& a) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::int64_t acc = 0;
      for (std::size_t k = 0; k < s; ++k) acc += rows[r][k] * static_cast<std::int64_t>(a[k]);
      if (acc < thresholds[r]) return false;
    }
    return true;
  };
  // The region is an up-set, so a is minimal iff no a - e_k is inside.
  auto minimal_inside = [&](std::vector<std::uint32_t>& a) {
    if (!inside(a)) return false;
    for (std::size_t k = 0; k < s; ++k) {
      if (a[k] == 0) continue;
      --a[k];
      const bool below = inside(a);
      ++a[k];
      if (below) return false;
    }
    return true;
  };

  const auto total = static_cast<std::int64_t>(box.size());
  std::vector<ExponentVector> gens;
  if (exec == Exec::Serial) {
    std::vector<std::uint32_t> a;
    for (std::int64_t idx = 0; idx < total; ++idx) {
      box.point(static_cast<std::uint64_t>(idx), a);
      if (minimal_inside(a)) gens.emplace_back(std::vector<Exponent>(a.begin(), a.end()));
    }
  } else {
#pragma omp parallel
    {
      std::vector<ExponentVector> local;
      std::vector<std::uint32_t> a;
#pragma omp for schedule(static) nowait
      for (std::int64_t idx = 0; idx < total; ++idx) {
        box.point(static_cast<std::uint64_t>(idx), a);
        if (minimal_inside(a)) local.emplace_back(std::vector<Exponent>(a.begin(), a.end()));
      }
#pragma omp critical(wogsym_closure_merge)
      gens.insert(gens.end(), local.begin(), local.end());
    }
  }
  return minimalize(std::move(gens), s);
}

bool is_normal_up_to(const MonomialIdeal& ideal, unsigned bound, const PolyhedronLimits& limits) {
  require_proper_nonzero(ideal);
  MonomialIdeal current = ideal;
  for (unsigned n = 1; n <= bound; ++n) {
    if (n > 1) current = multiply(current, ideal);
    if (integral_closure_power(ideal, n, limits) != current) return false;
  }
  return true;
}

ClosureIntersectionReport closure_intersection_check(const MonomialIdeal& ideal, unsigned bound,
                                                     const PolyhedronLimits& limits) {
  ClosureIntersectionReport report;
  const auto dec = irreducible_decomposition(ideal);
  if (!dec.is_minimal()) {
    report.skipReason = "irreducible decomposition is not minimal (repeated radicals)";
    return report;
  }
  report.evaluated = true;
  report.holds = true;
  for (unsigned n = 1; n <= bound; ++n) {
    const auto lhs = integral_closure_power(ideal, n, limits);
    std::vector<MonomialIdeal> parts;
    for (const auto& q : dec.components) parts.push_back(integral_closure_power(q.to_ideal(), n, limits));
    const bool ok = intersect(parts) == lhs;
    report.perPower.push_back(ok);
    report.holds = report.holds && ok;
  }
  return report;
}

PolyhedralReport polyhedral_consequences(const MonomialIdeal& ideal, unsigned bound,
                                         bool powersEqual, const PolyhedronLimits& limits) {
  PolyhedralReport report;
  const auto dec = irreducible_decomposition(ideal);
  report.closure = closure_intersection_check(ideal, bound, limits);
  report.closureIntersection = report.closure.evaluated && report.closure.holds;
  report.newtonEqualsIrreducible =
      polyhedra_equal(newton_hrep(ideal, limits), irreducible_polyhedron(dec), limits);
  report.vertices = enumerate_vertices(covering_polyhedron(ideal), limits);
  for (const auto& q : dec.components) report.inverses.push_back(inverse_exponent(q.alpha()));
  std::sort(report.inverses.begin(), report.inverses.end());
  report.verticesAreInverses = report.vertices == report.inverses;

  report.asserted = powersEqual && report.closure.evaluated;
  if (report.asserted &&
      !(report.closureIntersection && report.newtonEqualsIrreducible && report.verticesAreInverses)) {
    throw ConsistencyError("I^n == I^(n) held up to the bound but a polyhedral consequence failed");
  }
  return report;
}

AlexanderNtfReport alexander_ntf_check(const WeightedOrientedGraph& graph, unsigned bound,
                                       const PolyhedronLimits& limits) {
  const auto dual = alexander_dual(graph);
  AlexanderNtfReport report;
  report.powersEqual = true;
  for (unsigned n = 1; n <= bound && report.powersEqual; ++n) {
    report.powersEqual = symbolic_power_min(dual.ideal, n) == power(dual.ideal, n);
  }
  report.normal = is_normal_up_to(dual.ideal, bound, limits);
  report.newtonEqualsIrreducible =
      polyhedra_equal(newton_hrep(dual.ideal, limits), irreducible_polyhedron(dual.components), limits);
  const bool rhs = report.normal && report.newtonEqualsIrreducible;
  if (rhs == report.powersEqual) {
    report.value = rhs;
  } else {
    report.caveat = "sides disagree at n <= " + std::to_string(bound) +
                    "; both are only verified up to this bound";
  }
  return report;
}

std::string format_normaliz(const CoveringFormPolyhedron& p, const std::vector<RationalVector>* vertices) {
  std::ostringstream out;
  const std::size_t s = p.dim();
  out << "amb_space " << s << '\n';
  out << "constraints " << s + p.columns().size() << '\n';
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t k = 0; k < s; ++k) out << (k ? " " : "") << (i == k ? 1 : 0);
    out << " >= 0\n";
  }
  for (const auto& col : p.columns()) {
    for (std::size_t k = 0; k < s; ++k) out << (k ? " " : "") << format_rational(col[k]);
    out << " >= 1\n";
  }
  if (vertices) {
    out << "VerticesOfPolyhedron\n";
    for (const auto& v : *vertices) {
      for (std::size_t k = 0; k < v.size(); ++k) out << (k ? " " : "") << format_rational(v[k]);
      out << '\n';
    }
  }
  return out.str();
}

CoveringFormPolyhedron parse_normaliz(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineNo = 0;
  std::optional<std::size_t> dim;
  std::optional<std::size_t> expected;
  std::size_t seenRows = 0;
  std::vector<bool> nonneg;
  std::vector<RationalVector> columns;

  auto read_count = [&](std::istringstream& ls, const char* what) {
    std::size_t v = 0;
    if (!(ls >> v)) throw ParseError(std::string("expected a count after '") + what + "'", lineNo);
    return v;
  };

  while (std::getline(in, line)) {
    ++lineNo;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "amb_space") {
      dim = read_count(ls, "amb_space");
      nonneg.assign(*dim, false);
      continue;
    }
    if (first == "constraints") {
      if (!dim) throw ParseError("'constraints' before 'amb_space'", lineNo);
      expected = read_count(ls, "constraints");
      continue;
    }
    if (!expected || seenRows == *expected) {
      // Output keywords such as VerticesOfPolyhedron end the constraint block.
      if (expected && seenRows == *expected) break;
      throw ParseError("unexpected '" + first + "' before the constraint block", lineNo);
    }
    std::vector<std::string> tokens{first};
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.size() != *dim + 2 || tokens[*dim] != ">=") {
      throw ParseError("expected " + std::to_string(*dim) + " coefficients, '>=' and a right-hand side",
                       lineNo);
    }
    RationalVector row;
    for (std::size_t k = 0; k < *dim; ++k) {
      try {
        row.push_back(parse_rational(tokens[k]));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), lineNo);
      }
    }
    Rational rhs;
    try {
      rhs = parse_rational(tokens[*dim + 1]);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineNo);
    }
    ++seenRows;
    if (rhs == 0) {
      std::size_t nonzero = 0, where = 0;
      for (std::size_t k = 0; k < *dim; ++k) {
        if (row[k] != 0) {
          ++nonzero;
          where = k;
        }
      }
      if (nonzero != 1 || row[where] < 0) {
        throw ParseError("homogeneous rows must be coordinate constraints x_i >= 0", lineNo);
      }
      nonneg[where] = true;
    } else if (rhs > 0) {
      for (auto& c : row) {
        if (c < 0) throw ParseError("covering rows need nonnegative coefficients", lineNo);
        c /= rhs;
      }
      columns.push_back(std::move(row));
    } else {
      throw ParseError("negative right-hand side is not in covering form", lineNo);
    }
  }
  if (!dim) throw ParseError("missing 'amb_space'");
  if (!expected || seenRows != *expected) {
    throw ParseError("constraint block ended after " + std::to_string(seenRows) + " rows");
  }
  for (std::size_t k = 0; k < *dim; ++k) {
    if (!nonneg[k]) throw ParseError("missing x" + std::to_string(k + 1) + " >= 0: not in covering form");
  }
  return CoveringFormPolyhedron(*dim, std::move(columns));
}

}  // namespace wogsym
