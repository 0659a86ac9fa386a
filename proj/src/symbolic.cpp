#include "wogsym/symbolic.hpp"

#include <string>

#include "wogsym/decomposition.hpp"
#include "wogsym/errors.hpp"

namespace wogsym {

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal) {
  if (!ideal.is_proper_nonzero()) {
    throw DomainError("symbolic powers need a proper nonzero ideal");
  }
}

// Localization is a ring map, so (I S_p cap S)^n == I^n S_p cap S and the
// primary components can be powered after localizing. Each prime's power is
// independent; the fold runs in prime order for a schedule-free result.
MonomialIdeal intersect_localized_powers(const MonomialIdeal& ideal,
                                         const std::vector<MonomialPrime>& primes, unsigned n) {
  std::vector<MonomialIdeal> parts(primes.size());
  const auto count = static_cast<std::int64_t>(primes.size());
#pragma omp parallel for schedule(dynamic, 1) if (count > 1)
  for (std::int64_t i = 0; i < count; ++i) {
    parts[static_cast<std::size_t>(i)] = power(localize(ideal, primes[static_cast<std::size_t>(i)]), n);
  }
  return intersect(parts);
}

}  // namespace

MonomialIdeal localize(const MonomialIdeal& ideal, const MonomialPrime& prime) {
  if (prime.support().empty()) throw DomainError("cannot localize at the empty prime");
  if (prime.num_vars() != ideal.num_vars()) {
    throw DimensionError("prime in " + std::to_string(prime.num_vars()) +
                         " variables, ideal in " + std::to_string(ideal.num_vars()));
  }
  std::vector<ExponentVector> gens;
  gens.reserve(ideal.size());
  for (auto g : ideal.gens()) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!prime.contains_variable(i + 1)) g[i] = 0;
    }
    gens.push_back(std::move(g));
  }
  return minimalize(std::move(gens), ideal.num_vars());
}

MonomialIdeal symbolic_power_min(const MonomialIdeal& ideal, unsigned n) {
  require_proper_nonzero(ideal);
  if (n == 0) throw DomainError("symbolic power index must be at least 1");
  return intersect_localized_powers(ideal, minimal_primes(ideal), n);
}

MonomialIdeal symbolic_power_ass(const MonomialIdeal& ideal, unsigned n) {
  require_proper_nonzero(ideal);
  if (n == 0) throw DomainError("symbolic power index must be at least 1");
  return intersect_localized_powers(ideal, maximal_associated_primes(ideal), n);
}

MonomialIdeal symbolic_power_all_ass(const MonomialIdeal& ideal, unsigned n) {
  require_proper_nonzero(ideal);
  if (n == 0) throw DomainError("symbolic power index must be at least 1");
  return intersect_localized_powers(ideal, associated_primes(ideal), n);
}

SymbolicPowerReport compare_powers(const MonomialIdeal& ideal, unsigned n) {
  SymbolicPowerReport report;
  report.n = n;
  report.minPower = symbolic_power_min(ideal, n);
  report.assPower = symbolic_power_ass(ideal, n);
  report.ordinary = power(ideal, n);
  report.equalMin = report.minPower == report.ordinary;
  report.equalAss = report.assPower == report.ordinary;
  for (const auto& g : report.minPower.gens()) {
    if (!contains_monomial(report.ordinary, g)) report.witnesses.push_back(g);
  }
  return report;
}

TorsionFreeReport is_ntf_up_to(const MonomialIdeal& ideal, unsigned bound) {
  require_proper_nonzero(ideal);
  if (bound == 0) throw DomainError("power bound must be at least 1");
  TorsionFreeReport report;
  report.bound = bound;
  const auto base = associated_primes(ideal);
  report.ntf = true;
  MonomialIdeal current = ideal;
  for (unsigned n = 1; n <= bound; ++n) {
    if (n > 1) current = multiply(current, ideal);
    auto ass = associated_primes(current);
    if (ass != base) report.ntf = false;
    report.assPerPower.push_back(std::move(ass));
  }
  if (embedded_primes(ideal).empty()) {
    bool agree = true;
    for (unsigned n = 1; n <= bound && agree; ++n) {
      agree = symbolic_power_min(ideal, n) == power(ideal, n);
    }
    report.powersAgree = agree;
    if (agree != report.ntf) {
      throw ConsistencyError("Ass(I^n) stability and I^n == I^(n) disagree on an ideal without "
                             "embedded primes");
    }
  }
  return report;
}

}  // namespace wogsym
