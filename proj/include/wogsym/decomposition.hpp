#pragma once

// Irredundant irreducible decomposition of monomial ideals and the prime
// sets read off from it.

#include <map>
#include <optional>
#include <vector>

#include "wogsym/exec.hpp"
#include "wogsym/monomial.hpp"

namespace wogsym {

struct IrreducibleDecomposition {
  std::size_t ambient = 0;
  /// Pairwise distinct, canonically sorted, irredundant.
  std::vector<IrreducibleIdeal> components;

  MonomialIdeal intersection() const;
  /// Radicals of the components pairwise distinct.
  bool is_minimal() const;

  friend bool operator==(const IrreducibleDecomposition&, const IrreducibleDecomposition&) = default;
};

/// Which variable of a mixed generator the splitting step peels off.
/// The irredundant result does not depend on it.
enum class SplitVariable { Least, Greatest };

/// Splits I = (I + t_i^{a_i}) cap (I + t^a / t_i^{a_i}) on the canonically
/// least mixed generator until every branch is generated by pure powers,
/// then drops redundant components. Results for SplitVariable::Least are
/// memoized process-wide.
IrreducibleDecomposition irreducible_decomposition(const MonomialIdeal& ideal,
                                                   SplitVariable rule = SplitVariable::Least);

/// Drops every component containing another one, scanning in descending
/// canonical order. Duplicates collapse to one.
IrreducibleDecomposition make_irredundant(std::size_t ambient,
                                          std::vector<IrreducibleIdeal> components);

void clear_decomposition_cache();

/// Pure powers t_j^{v_ij} over all generators, canonically sorted.
std::vector<ExponentVector> exponent_duality(const MonomialIdeal& ideal);

std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal);
std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& ideal);
std::vector<MonomialPrime> embedded_primes(const MonomialIdeal& ideal);
/// Maximal elements of Ass(I) under inclusion.
std::vector<MonomialPrime> maximal_associated_primes(const MonomialIdeal& ideal);

/// Brute force: every f in [0, bound]^s with (I : f) prime, keyed by that
/// prime; the witness kept is the first in scan order.
std::map<MonomialPrime, ExponentVector> colon_prime_witnesses(const MonomialIdeal& ideal,
                                                              Exponent bound,
                                                              Exec exec = default_exec());

/// Some f with entries <= bound and (I : f) = p, if any. Test oracle for
/// associated_primes.
std::optional<ExponentVector> ass_witness_oracle(const MonomialIdeal& ideal,
                                                 const MonomialPrime& prime, Exponent bound,
                                                 Exec exec = default_exec());

}  // namespace wogsym
