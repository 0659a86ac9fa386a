#pragma once

// Exact monomial-ideal arithmetic over exponent vectors.
//
// Every ideal is stored by its minimal generators G(I), sorted in the
// canonical graded order, so two ideals are equal iff their generator
// sequences are equal.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace wogsym {

using Exponent = std::uint32_t;

/// A point of N^s, i.e. the exponent of the monomial t^a.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t numVars) : coords_(numVars, 0) {}
  ExponentVector(std::initializer_list<Exponent> coords) : coords_(coords) {}
  explicit ExponentVector(std::vector<Exponent> coords) : coords_(std::move(coords)) {}

  /// value * e_var, with `var` 0-based.
  static ExponentVector unit(std::size_t numVars, std::size_t var, Exponent value = 1);

  std::size_t size() const noexcept { return coords_.size(); }
  Exponent operator[](std::size_t i) const { return coords_[i]; }
  Exponent& operator[](std::size_t i) { return coords_[i]; }
  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }
  const std::vector<Exponent>& coords() const noexcept { return coords_; }

  std::uint64_t degree() const noexcept;
  std::size_t support_size() const noexcept;
  bool is_zero() const noexcept { return support_size() == 0; }

  /// Componentwise <=, i.e. t^this divides t^other.
  bool divides(const ExponentVector& other) const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<Exponent> coords_;
};

/// Checked sum; throws std::overflow_error when an entry leaves Exponent range.
ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
/// k * a, checked like operator+.
ExponentVector scale(const ExponentVector& a, Exponent k);
/// Componentwise max (exponent of the lcm).
ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
/// Componentwise max(a - b, 0).
ExponentVector monus(const ExponentVector& a, const ExponentVector& b);
/// Every positive entry replaced by 1.
ExponentVector support_vector(const ExponentVector& a);

/// Canonical order: total degree, then lexicographically descending, so that
/// t1 sorts before t2 and t1*t2^2 before t2^2*t3.
bool canonical_less(const ExponentVector& a, const ExponentVector& b);

class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  static MonomialIdeal zero(std::size_t numVars);
  static MonomialIdeal unit(std::size_t numVars);

  std::size_t num_vars() const noexcept { return numVars_; }
  const std::vector<ExponentVector>& gens() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_zero(); }
  bool is_proper_nonzero() const noexcept { return !is_zero() && !is_unit(); }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  friend MonomialIdeal minimalize(std::vector<ExponentVector> gens, std::size_t numVars);
  std::size_t numVars_ = 0;
  std::vector<ExponentVector> gens_;
};

/// Divisibility antichain of `gens`, canonically sorted.
MonomialIdeal minimalize(std::vector<ExponentVector> gens, std::size_t numVars);

bool contains_monomial(const MonomialIdeal& ideal, const ExponentVector& a);
/// I subset of J.
bool is_subset(const MonomialIdeal& lhs, const MonomialIdeal& rhs);

MonomialIdeal sum(const MonomialIdeal& lhs, const MonomialIdeal& rhs);
MonomialIdeal multiply(const MonomialIdeal& lhs, const MonomialIdeal& rhs);
MonomialIdeal power(const MonomialIdeal& ideal, unsigned n);
MonomialIdeal intersect(const MonomialIdeal& lhs, const MonomialIdeal& rhs);
/// Left fold of the binary intersection. Empty input is rejected.
MonomialIdeal intersect(std::span<const MonomialIdeal> ideals);
MonomialIdeal colon_monomial(const MonomialIdeal& ideal, const ExponentVector& f);
MonomialIdeal radical(const MonomialIdeal& ideal);

/// q_alpha = (t_i^{alpha_i} : alpha_i >= 1).
class IrreducibleIdeal {
 public:
  explicit IrreducibleIdeal(ExponentVector alpha);

  const ExponentVector& alpha() const noexcept { return alpha_; }
  std::size_t num_vars() const noexcept { return alpha_.size(); }
  MonomialIdeal to_ideal() const;

  friend bool operator==(const IrreducibleIdeal&, const IrreducibleIdeal&) = default;

 private:
  ExponentVector alpha_;
};

/// Canonical order on components: by alpha under canonical_less.
bool canonical_less(const IrreducibleIdeal& a, const IrreducibleIdeal& b);

/// Prime generated by a set of variables; `support` holds 1-based indices.
class MonomialPrime {
 public:
  MonomialPrime() = default;
  MonomialPrime(std::size_t numVars, std::vector<std::size_t> support);

  static MonomialPrime maximal(std::size_t numVars);
  static MonomialPrime of_support(const ExponentVector& a);

  std::size_t num_vars() const noexcept { return numVars_; }
  const std::vector<std::size_t>& support() const noexcept { return support_; }
  bool contains_variable(std::size_t var1) const;
  bool is_subset_of(const MonomialPrime& other) const;
  MonomialIdeal to_ideal() const;

  friend bool operator==(const MonomialPrime&, const MonomialPrime&) = default;
  /// Smaller support first, then lexicographic.
  friend std::strong_ordering operator<=>(const MonomialPrime& a, const MonomialPrime& b);

 private:
  std::size_t numVars_ = 0;
  std::vector<std::size_t> support_;
};

}  // namespace wogsym
