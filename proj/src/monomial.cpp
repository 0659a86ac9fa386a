#include "wogsym/monomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "wogsym/errors.hpp"

namespace wogsym {

namespace {

void require_same_length(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) {
    throw DimensionError("exponent vectors of length " + std::to_string(a.size()) + " and " +
                         std::to_string(b.size()));
  }
}

void require_same_vars(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.num_vars() != b.num_vars()) {
    throw DimensionError("ideals in " + std::to_string(a.num_vars()) + " and " +
                         std::to_string(b.num_vars()) + " variables");
  }
}

void require_vars(const MonomialIdeal& ideal, const ExponentVector& a) {
  if (ideal.num_vars() != a.size()) {
    throw DimensionError("monomial of length " + std::to_string(a.size()) +
                         " against an ideal in " + std::to_string(ideal.num_vars()) +
                         " variables");
  }
}

Exponent checked_add(Exponent x, Exponent y) {
  if (y > std::numeric_limits<Exponent>::max() - x) {
    throw std::overflow_error("exponent overflow");
  }
  return x + y;
}

}  // namespace

ExponentVector ExponentVector::unit(std::size_t numVars, std::size_t var, Exponent value) {
  ExponentVector e(numVars);
  e.coords_.at(var) = value;
  return e;
}

std::uint64_t ExponentVector::degree() const noexcept {
  std::uint64_t d = 0;
  for (auto c : coords_) d += c;
  return d;
}

std::size_t ExponentVector::support_size() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(coords_.begin(), coords_.end(), [](Exponent c) { return c != 0; }));
}

bool ExponentVector::divides(const ExponentVector& other) const {
  require_same_length(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] > other.coords_[i]) return false;
  }
  return true;
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  require_same_length(a, b);
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

ExponentVector scale(const ExponentVector& a, Exponent k) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto prod = static_cast<std::uint64_t>(a[i]) * k;
    if (prod > std::numeric_limits<Exponent>::max()) throw std::overflow_error("exponent overflow");
    r[i] = static_cast<Exponent>(prod);
  }
  return r;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  require_same_length(a, b);
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

ExponentVector monus(const ExponentVector& a, const ExponentVector& b) {
  require_same_length(a, b);
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] - b[i] : 0;
  return r;
}

ExponentVector support_vector(const ExponentVector& a) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] ? 1 : 0;
  return r;
}

bool canonical_less(const ExponentVector& a, const ExponentVector& b) {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  return b < a;
}

MonomialIdeal MonomialIdeal::zero(std::size_t numVars) {
  MonomialIdeal z;
  z.numVars_ = numVars;
  return z;
}

MonomialIdeal MonomialIdeal::unit(std::size_t numVars) {
  return minimalize({ExponentVector(numVars)}, numVars);
}

MonomialIdeal minimalize(std::vector<ExponentVector> gens, std::size_t numVars) {
  for (const auto& g : gens) {
    if (g.size() != numVars) {
      throw DimensionError("generator of length " + std::to_string(g.size()) + " in " +
                           std::to_string(numVars) + " variables");
    }
  }
  std::sort(gens.begin(), gens.end(),
            [](const ExponentVector& a, const ExponentVector& b) { return canonical_less(a, b); });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  // A divisor has degree <= its multiple, so it always precedes it.
  std::vector<ExponentVector> kept;
  kept.reserve(gens.size());
  for (auto& g : gens) {
    const bool redundant = std::any_of(kept.begin(), kept.end(),
                                       [&](const ExponentVector& k) { return k.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  MonomialIdeal ideal;
  ideal.numVars_ = numVars;
  ideal.gens_ = std::move(kept);
  return ideal;
}

bool contains_monomial(const MonomialIdeal& ideal, const ExponentVector& a) {
  require_vars(ideal, a);
  return std::any_of(ideal.gens().begin(), ideal.gens().end(),
                     [&](const ExponentVector& g) { return g.divides(a); });
}

bool is_subset(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  require_same_vars(lhs, rhs);
  return std::all_of(lhs.gens().begin(), lhs.gens().end(),
                     [&](const ExponentVector& g) { return contains_monomial(rhs, g); });
}

MonomialIdeal sum(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  require_same_vars(lhs, rhs);
  std::vector<ExponentVector> gens = lhs.gens();
  gens.insert(gens.end(), rhs.gens().begin(), rhs.gens().end());
  return minimalize(std::move(gens), lhs.num_vars());
}

MonomialIdeal multiply(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  require_same_vars(lhs, rhs);
  std::vector<ExponentVector> gens;
  gens.reserve(lhs.size() * rhs.size());
  for (const auto& v : lhs.gens())
    for (const auto& w : rhs.gens()) gens.push_back(v + w);
  return minimalize(std::move(gens), lhs.num_vars());
}

MonomialIdeal power(const MonomialIdeal& ideal, unsigned n) {
  if (n == 0) throw DomainError("power exponent must be at least 1");
  MonomialIdeal result = ideal;
  for (unsigned k = 1; k < n; ++k) result = multiply(result, ideal);
  return result;
}

MonomialIdeal intersect(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  require_same_vars(lhs, rhs);
  std::vector<ExponentVector> gens;
  gens.reserve(lhs.size() * rhs.size());
  for (const auto& v : lhs.gens())
    for (const auto& w : rhs.gens()) gens.push_back(lcm(v, w));
  return minimalize(std::move(gens), lhs.num_vars());
}

MonomialIdeal intersect(std::span<const MonomialIdeal> ideals) {
  if (ideals.empty()) throw DomainError("intersection of no ideals");
  MonomialIdeal result = ideals.front();
  for (const auto& next : ideals.subspan(1)) result = intersect(result, next);
  return result;
}

MonomialIdeal colon_monomial(const MonomialIdeal& ideal, const ExponentVector& f) {
  require_vars(ideal, f);
  std::vector<ExponentVector> gens;
  gens.reserve(ideal.size());
  for (const auto& v : ideal.gens()) gens.push_back(monus(v, f));
  return minimalize(std::move(gens), ideal.num_vars());
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<ExponentVector> gens;
  gens.reserve(ideal.size());
  for (const auto& v : ideal.gens()) gens.push_back(support_vector(v));
  return minimalize(std::move(gens), ideal.num_vars());
}

IrreducibleIdeal::IrreducibleIdeal(ExponentVector alpha) : alpha_(std::move(alpha)) {
  if (alpha_.is_zero()) throw DomainError("irreducible ideal needs a nonzero exponent vector");
}

MonomialIdeal IrreducibleIdeal::to_ideal() const {
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < alpha_.size(); ++i) {
    if (alpha_[i] != 0) gens.push_back(ExponentVector::unit(alpha_.size(), i, alpha_[i]));
  }
  return minimalize(std::move(gens), alpha_.size());
}

bool canonical_less(const IrreducibleIdeal& a, const IrreducibleIdeal& b) {
  return canonical_less(a.alpha(), b.alpha());
}

MonomialPrime::MonomialPrime(std::size_t numVars, std::vector<std::size_t> support)
    : numVars_(numVars), support_(std::move(support)) {
  std::sort(support_.begin(), support_.end());
  support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
  for (auto v : support_) {
    if (v == 0 || v > numVars_) {
      throw DimensionError("variable t" + std::to_string(v) + " outside t1..t" +
                           std::to_string(numVars_));
    }
  }
}

MonomialPrime MonomialPrime::maximal(std::size_t numVars) {
  std::vector<std::size_t> all(numVars);
  for (std::size_t i = 0; i < numVars; ++i) all[i] = i + 1;
  return MonomialPrime(numVars, std::move(all));
}

MonomialPrime MonomialPrime::of_support(const ExponentVector& a) {
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i]) vars.push_back(i + 1);
  return MonomialPrime(a.size(), std::move(vars));
}

bool MonomialPrime::contains_variable(std::size_t var1) const {
  return std::binary_search(support_.begin(), support_.end(), var1);
}

bool MonomialPrime::is_subset_of(const MonomialPrime& other) const {
  return std::includes(other.support_.begin(), other.support_.end(), support_.begin(),
                       support_.end());
}

MonomialIdeal MonomialPrime::to_ideal() const {
  std::vector<ExponentVector> gens;
  for (auto v : support_) gens.push_back(ExponentVector::unit(numVars_, v - 1));
  return minimalize(std::move(gens), numVars_);
}

std::strong_ordering operator<=>(const MonomialPrime& a, const MonomialPrime& b) {
  if (auto c = a.numVars_ <=> b.numVars_; c != 0) return c;
  if (auto c = a.support_.size() <=> b.support_.size(); c != 0) return c;
  return a.support_ <=> b.support_;
}

}  // namespace wogsym
