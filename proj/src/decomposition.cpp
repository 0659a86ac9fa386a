#include "wogsym/decomposition.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <string>

#include "wogsym/errors.hpp"

namespace wogsym {

namespace {

using Leaves = std::set<ExponentVector>;
using SplitMemo = std::map<std::vector<ExponentVector>, Leaves>;

void require_proper_nonzero(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw DomainError("the zero ideal has no irreducible decomposition");
  if (ideal.is_unit()) throw DomainError("the unit ideal has no irreducible decomposition");
}

const Leaves& split(const MonomialIdeal& ideal, SplitVariable rule, SplitMemo& memo) {
  if (auto it = memo.find(ideal.gens()); it != memo.end()) return it->second;

  const auto& gens = ideal.gens();
  auto mixed = std::find_if(gens.begin(), gens.end(),
                            [](const ExponentVector& g) { return g.support_size() >= 2; });
  Leaves leaves;
  if (mixed == gens.end()) {
    // All pure powers in distinct variables: the ideal is q_alpha.
    ExponentVector alpha(ideal.num_vars());
    for (const auto& g : gens) alpha = alpha + g;
    leaves.insert(std::move(alpha));
  } else {
    const ExponentVector& a = *mixed;
    std::size_t var = 0;
    if (rule == SplitVariable::Least) {
      while (a[var] == 0) ++var;
    } else {
      var = a.size() - 1;
      while (a[var] == 0) --var;
    }
    const std::size_t s = ideal.num_vars();
    ExponentVector rest = a;
    rest[var] = 0;
    const auto left = minimalize(
        [&] {
          auto g = gens;
          g.push_back(ExponentVector::unit(s, var, a[var]));
          return g;
        }(),
        s);
    const auto right = minimalize(
        [&] {
          auto g = gens;
          g.push_back(rest);
          return g;
        }(),
        s);
    const auto& l = split(left, rule, memo);
    leaves.insert(l.begin(), l.end());
    const auto& r = split(right, rule, memo);
    leaves.insert(r.begin(), r.end());
  }
  return memo.emplace(ideal.gens(), std::move(leaves)).first->second;
}

// q_beta is inside q_alpha iff supp(beta) <= supp(alpha) and alpha <= beta there.
bool irreducible_subset(const ExponentVector& beta, const ExponentVector& alpha) {
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta[i] == 0) continue;
    if (alpha[i] == 0 || alpha[i] > beta[i]) return false;
  }
  return true;
}

struct DecompositionCache {
  std::shared_mutex mutex;
  std::map<std::pair<std::size_t, std::vector<ExponentVector>>, IrreducibleDecomposition> table;
  static constexpr std::size_t kMaxEntries = 4096;
};

DecompositionCache& cache() {
  static DecompositionCache instance;
  return instance;
}

}  // namespace

MonomialIdeal IrreducibleDecomposition::intersection() const {
  if (components.empty()) return MonomialIdeal::unit(ambient);
  MonomialIdeal result = components.front().to_ideal();
  for (std::size_t i = 1; i < components.size(); ++i) {
    result = intersect(result, components[i].to_ideal());
  }
  return result;
}

bool IrreducibleDecomposition::is_minimal() const {
  std::set<ExponentVector> radicals;
  for (const auto& q : components) {
    if (!radicals.insert(support_vector(q.alpha())).second) return false;
  }
  return true;
}

IrreducibleDecomposition make_irredundant(std::size_t ambient,
                                          std::vector<IrreducibleIdeal> components) {
  std::sort(components.begin(), components.end(),
            [](const IrreducibleIdeal& a, const IrreducibleIdeal& b) { return canonical_less(a, b); });
  components.erase(std::unique(components.begin(), components.end()), components.end());

  // Monomial ideals form a distributive lattice, so an irreducible component
  // is redundant exactly when it contains one of the other components.
  std::vector<bool> dropped(components.size(), false);
  for (std::size_t j = components.size(); j-- > 0;) {
    for (std::size_t i = 0; i < components.size(); ++i) {
      if (i == j || dropped[i]) continue;
      if (irreducible_subset(components[i].alpha(), components[j].alpha())) {
        dropped[j] = true;
        break;
      }
    }
  }
  IrreducibleDecomposition dec;
  dec.ambient = ambient;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (!dropped[i]) dec.components.push_back(std::move(components[i]));
  }
  return dec;
}

IrreducibleDecomposition irreducible_decomposition(const MonomialIdeal& ideal, SplitVariable rule) {
  require_proper_nonzero(ideal);
  const bool cached = rule == SplitVariable::Least;
  std::pair key{ideal.num_vars(), ideal.gens()};
  if (cached) {
    std::shared_lock lock(cache().mutex);
    if (auto it = cache().table.find(key); it != cache().table.end()) return it->second;
  }

  SplitMemo memo;
  const auto& leaves = split(ideal, rule, memo);
  std::vector<IrreducibleIdeal> components;
  components.reserve(leaves.size());
  for (const auto& alpha : leaves) components.emplace_back(alpha);
  auto dec = make_irredundant(ideal.num_vars(), std::move(components));

  if (cached) {
    std::unique_lock lock(cache().mutex);
    if (cache().table.size() >= DecompositionCache::kMaxEntries) cache().table.clear();
    cache().table.insert_or_assign(std::move(key), dec);
  }
  return dec;
}

void clear_decomposition_cache() {
  std::unique_lock lock(cache().mutex);
  cache().table.clear();
}

std::vector<ExponentVector> exponent_duality(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal);
  std::vector<ExponentVector> powers;
  for (const auto& g : ideal.gens()) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g[j] >= 1) powers.push_back(ExponentVector::unit(g.size(), j, g[j]));
    }
  }
  std::sort(powers.begin(), powers.end(),
            [](const ExponentVector& a, const ExponentVector& b) { return canonical_less(a, b); });
  powers.erase(std::unique(powers.begin(), powers.end()), powers.end());
  return powers;
}

std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal) {
  const auto dec = irreducible_decomposition(ideal);
  std::set<MonomialPrime> primes;
  for (const auto& q : dec.components) primes.insert(MonomialPrime::of_support(q.alpha()));
  return {primes.begin(), primes.end()};
}

std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& ideal) {
  const auto ass = associated_primes(ideal);
  std::vector<MonomialPrime> result;
  for (const auto& p : ass) {
    const bool embedded = std::any_of(ass.begin(), ass.end(), [&](const MonomialPrime& other) {
      return other != p && other.is_subset_of(p);
    });
    if (!embedded) result.push_back(p);
  }
  return result;
}

std::vector<MonomialPrime> embedded_primes(const MonomialIdeal& ideal) {
  const auto ass = associated_primes(ideal);
  std::vector<MonomialPrime> result;
  for (const auto& p : ass) {
    const bool embedded = std::any_of(ass.begin(), ass.end(), [&](const MonomialPrime& other) {
      return other != p && other.is_subset_of(p);
    });
    if (embedded) result.push_back(p);
  }
  return result;
}

std::vector<MonomialPrime> maximal_associated_primes(const MonomialIdeal& ideal) {
  const auto ass = associated_primes(ideal);
  std::vector<MonomialPrime> result;
  for (const auto& p : ass) {
    const bool dominated = std::any_of(ass.begin(), ass.end(), [&](const MonomialPrime& other) {
      return other != p && p.is_subset_of(other);
    });
    if (!dominated) result.push_back(p);
  }
  return result;
}

std::map<MonomialPrime, ExponentVector> colon_prime_witnesses(const MonomialIdeal& ideal,
                                                              Exponent bound, Exec exec) {
  const std::size_t s = ideal.num_vars();
  const IntegerBox box(std::vector<std::uint32_t>(s, bound));
  const auto total = static_cast<std::int64_t>(box.size());

  // (I : f) is prime iff all of its generators are single variables.
  auto probe = [&](std::int64_t index, std::vector<std::uint32_t>& scratch,
                   std::map<MonomialPrime, std::int64_t>& found) {
    box.point(static_cast<std::uint64_t>(index), scratch);
    const auto colon = colon_monomial(ideal, ExponentVector(scratch));
    if (colon.is_zero() || colon.is_unit()) return;
    for (const auto& g : colon.gens()) {
      if (g.degree() != 1) return;
    }
    std::vector<std::size_t> support;
    for (const auto& g : colon.gens()) {
      for (std::size_t i = 0; i < s; ++i)
        if (g[i]) support.push_back(i + 1);
    }
    found.try_emplace(MonomialPrime(s, std::move(support)), index);
  };

  std::map<MonomialPrime, std::int64_t> first;
  if (exec == Exec::Serial) {
    std::vector<std::uint32_t> scratch;
    for (std::int64_t idx = 0; idx < total; ++idx) probe(idx, scratch, first);
  } else {
#pragma omp parallel
    {
      std::map<MonomialPrime, std::int64_t> local;
      std::vector<std::uint32_t> scratch;
#pragma omp for schedule(dynamic, 256) nowait
      for (std::int64_t idx = 0; idx < total; ++idx) probe(idx, scratch, local);
#pragma omp critical(wogsym_colon_merge)
      for (const auto& [p, idx] : local) {
        auto [it, inserted] = first.try_emplace(p, idx);
        if (!inserted) it->second = std::min(it->second, idx);
      }
    }
  }

  std::map<MonomialPrime, ExponentVector> witnesses;
  std::vector<std::uint32_t> scratch;
  for (const auto& [p, idx] : first) {
    box.point(static_cast<std::uint64_t>(idx), scratch);
    witnesses.emplace(p, ExponentVector(scratch));
  }
  return witnesses;
}

std::optional<ExponentVector> ass_witness_oracle(const MonomialIdeal& ideal,
                                                 const MonomialPrime& prime, Exponent bound,
                                                 Exec exec) {
  if (prime.num_vars() != ideal.num_vars()) {
    throw DimensionError("prime and ideal live in different rings");
  }
  const auto witnesses = colon_prime_witnesses(ideal, bound, exec);
  if (auto it = witnesses.find(prime); it != witnesses.end()) return it->second;
  return std::nullopt;
}

}  // namespace wogsym
