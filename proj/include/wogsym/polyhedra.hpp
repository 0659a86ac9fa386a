#pragma once

// Covering-form polyhedra {x >= 0, x.col_j >= 1} over exact rationals:
// vertex enumeration by basic feasible solutions, covering / Newton /
// irreducible polyhedra of monomial ideals, and integral closures of powers.

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wogsym/decomposition.hpp"
#include "wogsym/exec.hpp"
#include "wogsym/monomial.hpp"
#include "wogsym/wog.hpp"

namespace wogsym {

using Rational = boost::multiprecision::mpq_rational;
/// Entries are always in lowest terms (GMP keeps them canonical).
using RationalVector = std::vector<Rational>;

/// `p/q`, or `p` when q == 1.
std::string format_rational(const Rational& r);
/// `(0,1/2,0,1/2)`.
std::string format_rational_vector(const RationalVector& v);
Rational parse_rational(std::string_view text);

struct PolyhedronLimits {
  std::size_t maxDim = 8;
  std::size_t maxColumns = 24;
  /// Integer points scanned by integral_closure_power.
  std::uint64_t maxBoxPoints = 50'000'000;
};

/// One vertex together with the s linearly independent constraints tight at
/// it. Row r < s is x_r >= 0; row s + j is x.col_j >= 1.
struct BasicSolution {
  RationalVector point;
  std::vector<std::size_t> tightRows;
};

class CoveringFormPolyhedron {
 public:
  CoveringFormPolyhedron() = default;
  /// Rejects negative entries and columns of the wrong length.
  CoveringFormPolyhedron(std::size_t dim, std::vector<RationalVector> columns);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<RationalVector>& columns() const noexcept { return columns_; }
  bool contains(const RationalVector& x) const;

  /// Vertex set attached by with_vertices(); enumerate_vertices reuses it.
  const std::optional<std::vector<RationalVector>>& cached_vertices() const noexcept {
    return vertices_;
  }
  friend CoveringFormPolyhedron with_vertices(CoveringFormPolyhedron p, const PolyhedronLimits& limits);

 private:
  std::size_t dim_ = 0;
  std::vector<RationalVector> columns_;
  std::optional<std::vector<RationalVector>> vertices_;
};

/// Every basic feasible solution, one certificate per distinct point (the
/// lexicographically first row subset), sorted by point.
std::vector<BasicSolution> basic_feasible_solutions(const CoveringFormPolyhedron& p,
                                                    const PolyhedronLimits& limits = {},
                                                    Exec exec = default_exec());
bool check_certificate(const CoveringFormPolyhedron& p, const BasicSolution& bfs);

/// Sorted lexicographically.
std::vector<RationalVector> enumerate_vertices(const CoveringFormPolyhedron& p,
                                               const PolyhedronLimits& limits = {},
                                               Exec exec = default_exec());

RationalVector to_rational(const ExponentVector& a);
/// alpha^{-1}: 1/alpha_i on the support, 0 elsewhere.
RationalVector inverse_exponent(const ExponentVector& alpha);

/// Q(I): the minimal generators as columns.
CoveringFormPolyhedron covering_polyhedron(const MonomialIdeal& ideal);
/// NP(I) written as Q(B) with the vertices of Q(I) as columns.
CoveringFormPolyhedron newton_hrep(const MonomialIdeal& ideal, const PolyhedronLimits& limits = {});
/// The minimal generators that are vertices of NP(I).
std::vector<ExponentVector> newton_vertices(const MonomialIdeal& ideal,
                                            const PolyhedronLimits& limits = {});
bool in_newton_polyhedron(const MonomialIdeal& ideal, const RationalVector& x,
                          const PolyhedronLimits& limits = {});
/// IP(I): columns alpha_i^{-1} of the irreducible components.
CoveringFormPolyhedron irreducible_polyhedron(const IrreducibleDecomposition& dec);

/// Vertex-set equality, sound because both share the recession cone R_+^s.
bool polyhedra_equal(const CoveringFormPolyhedron& p, const CoveringFormPolyhedron& q,
                     const PolyhedronLimits& limits = {});

/// Minimal monomials t^a with a.u >= n for every vertex u of Q(I), found by
/// scanning the box 0 <= a_k <= n * max_i v_{i,k}.
MonomialIdeal integral_closure_power(const MonomialIdeal& ideal, unsigned n,
                                     const PolyhedronLimits& limits = {},
                                     Exec exec = default_exec());

bool is_normal_up_to(const MonomialIdeal& ideal, unsigned bound,
                     const PolyhedronLimits& limits = {});

struct ClosureIntersectionReport {
  bool evaluated = false;
  std::string skipReason;
  /// perPower[k]: closure(I^{k+1}) == cap_i closure(q_i^{k+1}).
  std::vector<bool> perPower;
  bool holds = false;
};
ClosureIntersectionReport closure_intersection_check(const MonomialIdeal& ideal, unsigned bound,
                                                     const PolyhedronLimits& limits = {});

struct PolyhedralReport {
  bool closureIntersection = false;
  bool newtonEqualsIrreducible = false;
  bool verticesAreInverses = false;
  bool asserted = false;  // the powers hypothesis held, so all three were required
  std::vector<RationalVector> vertices;  // of Q(I)
  std::vector<RationalVector> inverses;  // alpha_i^{-1}, sorted
  ClosureIntersectionReport closure;
};
/// `powersEqual`: whether I^n == I^(n) held for n <= bound. When it did, a
/// failing condition throws ConsistencyError.
PolyhedralReport polyhedral_consequences(const MonomialIdeal& ideal, unsigned bound,
                                         bool powersEqual, const PolyhedronLimits& limits = {});

struct AlexanderNtfReport {
  bool powersEqual = false;  // J^n == J^(n) for n <= bound
  bool normal = false;       // J^n integrally closed for n <= bound
  bool newtonEqualsIrreducible = false;
  std::optional<bool> value;  // set when both sides agree
  std::string caveat;
};
AlexanderNtfReport alexander_ntf_check(const WeightedOrientedGraph& graph, unsigned bound,
                                       const PolyhedronLimits& limits = {});

/// Constraint block in the Normaliz input syntax, optionally followed by a
/// `VerticesOfPolyhedron` block.
std::string format_normaliz(const CoveringFormPolyhedron& p,
                            const std::vector<RationalVector>* vertices = nullptr);
/// Reads `amb_space`, `constraints` and `row >= rhs` lines. Every row must
/// be either a coordinate x_i >= 0 or nonnegative with positive rhs; all s
/// coordinate rows must be present. Trailing keyword lines are ignored.
CoveringFormPolyhedron parse_normaliz(std::string_view text);

}  // namespace wogsym
