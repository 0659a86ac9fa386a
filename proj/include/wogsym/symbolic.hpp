#pragma once

// Localization at monomial primes and the two symbolic powers
//   I^(n) : intersection over the minimal primes of I,
//   I^<n> : intersection over the maximal associated primes of I.

#include <optional>
#include <vector>

#include "wogsym/monomial.hpp"

namespace wogsym {

/// Default bound standing in for "all n >= 1".
inline constexpr unsigned kDefaultPowerBound = 4;

/// I S_p cap S: variables outside p set to 1.
MonomialIdeal localize(const MonomialIdeal& ideal, const MonomialPrime& prime);

MonomialIdeal symbolic_power_min(const MonomialIdeal& ideal, unsigned n);
MonomialIdeal symbolic_power_ass(const MonomialIdeal& ideal, unsigned n);
/// I^<n> with the intersection taken over all of Ass(I). Agrees with
/// symbolic_power_ass; kept as a cross-check.
MonomialIdeal symbolic_power_all_ass(const MonomialIdeal& ideal, unsigned n);

struct SymbolicPowerReport {
  unsigned n = 1;
  MonomialIdeal ordinary;     // I^n
  MonomialIdeal assPower;     // I^<n>
  MonomialIdeal minPower;     // I^(n)
  bool equalMin = false;      // I^n == I^(n)
  bool equalAss = false;      // I^n == I^<n>
  /// Minimal generators of I^(n) outside I^n.
  std::vector<ExponentVector> witnesses;
};

SymbolicPowerReport compare_powers(const MonomialIdeal& ideal, unsigned n);

struct TorsionFreeReport {
  unsigned bound = 1;
  /// assPerPower[k] = Ass(I^{k+1}).
  std::vector<std::vector<MonomialPrime>> assPerPower;
  bool ntf = false;
  /// Present when I has no embedded primes: whether I^n == I^(n) for all
  /// n <= bound, which must equal `ntf`.
  std::optional<bool> powersAgree;
};

/// Ass(I^n) == Ass(I) for n = 1..N. Throws ConsistencyError if the cross-check
/// against the powers disagrees on an ideal without embedded primes.
TorsionFreeReport is_ntf_up_to(const MonomialIdeal& ideal, unsigned bound);

}  // namespace wogsym
