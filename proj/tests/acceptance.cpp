// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "wogsym/cli.hpp"
#include "wogsym/decomposition.hpp"
#include "wogsym/fixtures.hpp"
#include "wogsym/polyhedra.hpp"
#include "wogsym/symbolic.hpp"
#include "wogsym/text.hpp"
#include "wogsym/wog.hpp"

using namespace wogsym;
namespace fx = wogsym::fixtures;

namespace {

// Collects failure notes for one criterion.
struct Gate {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

IrreducibleDecomposition components(std::size_t s, std::initializer_list<const char*> parts) {
  std::vector<IrreducibleIdeal> qs;
  for (const char* p : parts) {
    ExponentVector alpha(s);
    const auto ideal = parse_ideal(p, s);
    for (const auto& g : ideal.gens()) {
      for (std::size_t i = 0; i < s; ++i) alpha[i] += g[i];
    }
    qs.emplace_back(alpha);
  }
  return make_irredundant(s, qs);
}

std::vector<RationalVector> rationals(std::initializer_list<const char*> rows) {
  std::vector<RationalVector> out;
  for (const char* row : rows) {
    RationalVector v;
    std::string text(row);
    std::istringstream in(text.substr(1, text.size() - 2));
    std::string item;
    while (std::getline(in, item, ',')) v.push_back(parse_rational(item));
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool in_sym_not_power(const MonomialIdeal& i, unsigned n, const ExponentVector& f) {
  return contains_monomial(symbolic_power_min(i, n), f) && !contains_monomial(power(i, n), f);
}

void four_cycle(Gate& g) {
  const auto d = fx::four_cycle_heavy_sinks();
  const auto i = edge_ideal(d);
  g.expect(i == parse_ideal("t1*t2^2, t3*t2^2, t3*t4^2, t1*t4^2"), "edge ideal");
  g.expect(irreducible_decomposition(i) == components(4, {"t1, t3", "t2^2, t4^2"}), "decomposition");
  for (unsigned n = 1; n <= 4; ++n) {
    const auto p = power(i, n);
    g.expect(p == symbolic_power_ass(i, n) && p == symbolic_power_min(i, n), "powers at n=" + std::to_string(n));
  }
  g.expect(contains_monomial(integral_closure_power(i, 1), {1, 1, 0, 1}) && !contains_monomial(i, {1, 1, 0, 1}),
           "t1*t2*t4 in closure(I) \\ I");
  g.expect(enumerate_vertices(covering_polyhedron(i)) == rationals({"(1,0,1,0)", "(0,1/2,0,1/2)"}),
           "vertices of Q(I)");
  const auto dual = alexander_dual(d);
  g.expect(dual.ideal == parse_ideal("t1*t3, t2^2*t4^2"), "J(D)");
  g.expect(irreducible_decomposition(dual.ideal) ==
               components(4, {"t1, t2^2", "t3, t2^2", "t3, t4^2", "t1, t4^2"}),
           "four components of J(D)");
  g.expect(is_normal_up_to(dual.ideal, 3), "J(D) normal up to 3");
  g.expect(polyhedra_equal(newton_hrep(dual.ideal), irreducible_polyhedron(irreducible_decomposition(dual.ideal))),
           "NP(J) = IP(J)");
  g.expect(enumerate_vertices(covering_polyhedron(dual.ideal)) ==
               rationals({"(1,1/2,0,0)", "(0,1/2,1,0)", "(0,0,1,1/2)", "(1,0,0,1/2)"}),
           "vertices of Q(J)");
}

void heavy_triangle(Gate& g) {
  const auto d = fx::heavy_directed_triangle();
  const auto i = edge_ideal(d);
  g.expect(irreducible_decomposition(i) == components(3, {"t1^2, t2", "t1, t3^2", "t2^2, t3", "t1^2, t2^2, t3^2"}),
           "decomposition");
  const auto r = irrelevant_in_ass(d);
  g.expect(r.maximalIsAssociated && r.fullSetIsStrong && r.outNeighborhoodCovers, "m in Ass three ways");
  g.expect(symbolic_power_min(i, 1) != i, "I^(1) != I");
  for (unsigned n = 1; n <= 3; ++n) g.expect(symbolic_power_ass(i, n) == power(i, n), "I^<n> at n=" + std::to_string(n));
}

void triangle_middle(Gate& g) {
  const auto d = fx::triangle_heavy_middle();
  const auto i = edge_ideal(d);
  g.expect(irreducible_decomposition(i) == components(3, {"t1, t2", "t1, t3", "t2^2, t3"}), "decomposition");
  g.expect(in_sym_not_power(i, 2, {1, 2, 1}), "t1*t2^2*t3 in I^(2) \\ I^2");
  const auto c = classify(d);
  g.expect(!c.square, "square=false");
  g.expect(!vertex_roles(d).allVPlusSinks && non_sink_witness(d) == ExponentVector{1, 2, 1}, "V+ non-sink cause");
}

void triangle_sink(Gate& g) {
  const auto d = fx::triangle_heavy_sink();
  const auto i = edge_ideal(d);
  g.expect(irreducible_decomposition(i) == components(3, {"t1^2, t2", "t1^2, t3", "t2, t3"}), "decomposition");
  g.expect(in_sym_not_power(i, 2, {2, 1, 1}), "t1^2*t2*t3 in I^(2) \\ I^2");
  const auto roles = vertex_roles(d);
  g.expect(roles.vPlus == VertexSet{1} && roles.allVPlusSinks, "V+ = {t1} all sinks");
  g.expect(underlying_props(d).hasTriangle && !classify(d).square, "square=false via triangle");
  g.expect(!non_sink_witness(d), "non-sink clause silent");
}

void path(Gate& g) {
  const auto d = fx::path_heavy_middle();
  const auto i = edge_ideal(d);
  g.expect(irreducible_decomposition(i) == components(3, {"t2", "t2^2, t3", "t1, t3"}), "decomposition");
  g.expect(localize(i, MonomialPrime(3, {2, 3})) == parse_ideal("t2^2, t2*t3", 3), "localization at (t2,t3)");
  g.expect(localize(i, MonomialPrime(3, {1, 3})) == parse_ideal("t1, t3", 3), "localization at (t1,t3)");
  g.expect(in_sym_not_power(i, 2, {1, 2, 1}), "t1*t2^2*t3 in I^(2) \\ I^2");
  for (unsigned n = 1; n <= 3; ++n) g.expect(symbolic_power_ass(i, n) == power(i, n), "I^<n> at n=" + std::to_string(n));
}

std::vector<WeightedOrientedGraph> random_population() {
  oracle::Random rng(2024);
  std::vector<WeightedOrientedGraph> out;
  for (int k = 0; k < 200; ++k) out.push_back(rng.graph(6, 3));
  return out;
}

void square_biconditional(Gate& g) {
  for (const auto& d : random_population()) {
    try {
      const bool predicted = vertex_roles(d).allVPlusSinks && !underlying_props(d).hasTriangle;
      g.expect(compare_powers(edge_ideal(d), 2).equalMin == predicted, format_graph(d));
    } catch (const std::exception& e) {
      g.expect(false, std::string("exception: ") + e.what());
    }
  }
}

void all_powers_surrogate(Gate& g) {
  std::size_t tested = 0;
  for (const auto& d : random_population()) {
    try {
      const auto props = underlying_props(d);
      if (props.oddGirth && *props.oddGirth > 5) continue;
      ++tested;
      const bool predicted = vertex_roles(d).allVPlusSinks && props.isBipartite;
      bool equal = true;
      const auto i = edge_ideal(d);
      for (unsigned n = 1; n <= 3 && equal; ++n) equal = compare_powers(i, n).equalMin;
      g.expect(equal == predicted, format_graph(d));
    } catch (const std::exception& e) {
      g.expect(false, std::string("exception: ") + e.what());
    }
  }
  g.expect(tested > 0, "empty population");
  const auto c7 = edge_ideal(fx::directed_cycle(7));
  for (unsigned n = 1; n <= 3; ++n) g.expect(compare_powers(c7, n).equalMin, "7-cycle n=" + std::to_string(n));
  g.expect(!compare_powers(c7, 4).equalMin, "7-cycle n=4");
}

void polyhedral_gate(Gate& g) {
  const auto d = fx::four_cycle_heavy_sinks();
  for (const auto& i : {edge_ideal(d), alexander_dual(d).ideal}) {
    const auto r = polyhedral_consequences(i, 2, true);
    g.expect(r.closure.evaluated && r.closureIntersection, format_ideal(i) + " closure intersection");
    g.expect(r.newtonEqualsIrreducible, format_ideal(i) + " NP = IP");
    g.expect(r.verticesAreInverses, format_ideal(i) + " vertices = inverses");
  }
}

void cross_oracles(Gate& g) {
  oracle::Random rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto i = rng.ideal(4, 3, 5);
    const auto s = i.num_vars();
    const auto tag = format_ideal(i) + ": ";
    try {
      const auto dec = irreducible_decomposition(i);
      g.expect(dec.intersection() == i, tag + "re-intersection");

      const auto ass = associated_primes(i);
      const auto bound = oracle::max_exponent(i.gens());
      std::set<std::vector<std::size_t>> mine;
      for (const auto& p : ass) mine.insert(p.support());
      g.expect(mine == oracle::colon_primes(i.gens(), s, bound), tag + "Ass vs colon scan");
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << s); ++mask) {
        const MonomialPrime p(s, from_mask(mask, s));
        const bool listed = std::find(ass.begin(), ass.end(), p) != ass.end();
        g.expect(listed == ass_witness_oracle(i, p, static_cast<Exponent>(bound * s)).has_value(), tag + "witness for " + format_prime(p));
      }

      for (const auto& p : ass) {
        for (unsigned n = 1; n <= 3; ++n) {
          g.expect(localize(power(i, n), p) == power(localize(i, p), n), tag + "localization commutes");
        }
      }

      for (unsigned n = 1; n <= 2; ++n) {
        const auto bad = oracle::closure_disagreement(i.gens(), s, n, integral_closure_power(i, n));
        g.expect(!bad, tag + "closure oracle n=" + std::to_string(n) + (bad ? " at " + format_exponents(*bad) : ""));
      }
    } catch (const std::exception& e) {
      g.expect(false, tag + "exception: " + e.what());
    }
  }
  oracle::Random graphs(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = graphs.graph(6, 3);
    try {
      g.expect(decomposition_via_covers(d) == irreducible_decomposition(edge_ideal(d)), format_graph(d));
    } catch (const std::exception& e) {
      g.expect(false, std::string("exception: ") + e.what());
    }
  }
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str();
}

void cli_parity(Gate& g, const std::string& dataDir) {
  int code = 0;
  const auto out = run_cli({"poly-vertices", "--normaliz-format", dataDir + "/four_cycle_constraints.in"}, code);
  g.expect(code == 0, "poly-vertices exit code");
  const auto block = out.find("VerticesOfPolyhedron\n");
  g.expect(block != std::string::npos && out.substr(block) == "VerticesOfPolyhedron\n0 1/2 0 1/2\n1 0 1 0\n",
           "vertex block");

  const auto text = run_cli({"compare", "--n", "2", dataDir + "/heavy_directed_triangle.wog"}, code);
  g.expect(code == 0, "compare exit code");
  const auto i = edge_ideal(fx::heavy_directed_triangle());
  // Minimal generators of I^(2) outside I^2, by brute force over the box.
  std::vector<ExponentVector> outside;
  const auto mins = minimal_primes(i);
  std::vector<std::vector<std::size_t>> supports;
  for (const auto& p : mins) supports.push_back(p.support());
  oracle::PowerMember pm(i.gens());
  auto sym = [&](const ExponentVector& a) { return oracle::symbolic_member(i.gens(), supports, a, 2); };
  oracle::for_box(3, 4, [&](const ExponentVector& a) {
    if (!sym(a) || pm(a, 2)) return;
    for (std::size_t k = 0; k < 3; ++k) {
      if (a[k] == 0) continue;
      auto b = a;
      --b[k];
      if (sym(b)) return;
    }
    outside.push_back(a);
  });
  std::sort(outside.begin(), outside.end(), [](const auto& x, const auto& y) { return canonical_less(x, y); });
  std::string witnesses;
  for (const auto& w : outside) witnesses += (witnesses.empty() ? "" : ", ") + format_monomial(w);
  const std::string expected = "n: 2\nI^2: " + format_ideal(power(i, 2)) + "\nI^<2>: " +
                               format_ideal(power(i, 2)) + "\nI^(2): " + format_ideal(symbolic_power_min(i, 2)) +
                               "\nI^2 == I^(2): no\nI^2 == I^<2>: yes\nwitnesses: " + witnesses + "\n";
  g.expect(!outside.empty() && text == expected, "compare report:\n" + text + "expected:\n" + expected);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string dataDir = argc > 1 ? argv[1] : WOGSYM_DATA_DIR;
  struct Criterion {
    int id;
    const char* name;
    std::function<void(Gate&)> body;
  };
  const std::vector<Criterion> criteria{
      {1, "4-cycle with heavy sinks: ideal, decomposition, powers, closure, Q(I), J(D)", four_cycle},
      {2, "heavy directed triangle: decomposition, m in Ass, I^(1) != I, I^<n> = I^n", heavy_triangle},
      {3, "triangle with heavy middle: decomposition, witness, non-sink cause", triangle_middle},
      {4, "triangle with heavy sink: decomposition, witness, triangle cause", triangle_sink},
      {5, "path with heavy middle: decomposition, localizations, witness, I^<n> = I^n", path},
      {6, "I^2 == I^(2) iff V+ sinks and no triangle (200 random graphs)", square_biconditional},
      {7, "I^n == I^(n), n <= 3, iff V+ sinks and bipartite; 7-cycle fails first at n = 4", all_powers_surrogate},
      {8, "closure intersection, NP = IP, vertices = inverses on the 4-cycle I and J", polyhedral_gate},
      {9, "cross-oracles on 100 random ideals and 100 random graphs", cross_oracles},
      {10, "CLI parity: constraint block vertices and compare report shape",
       [&](Gate& g) { cli_parity(g, dataDir); }},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Gate gate;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(gate);
    } catch (const std::exception& e) {
      gate.failures.push_back(std::string("exception: ") + e.what());
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    const bool ok = gate.failures.empty();
    all = all && ok;
    std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << "  " << c.name << " [" << ms << " ms]";
    if (!ok) std::cout << " -- " << gate.failures.size() << " failure(s), first: " << gate.failures.front();
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
