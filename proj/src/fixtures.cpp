#include "wogsym/fixtures.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "wogsym/decomposition.hpp"
#include "wogsym/polyhedra.hpp"
#include "wogsym/symbolic.hpp"
#include "wogsym/text.hpp"

namespace wogsym::fixtures {

WeightedOrientedGraph four_cycle_heavy_sinks() {
  return WeightedOrientedGraph(4, {1, 2, 1, 2}, {{1, 2}, {3, 2}, {3, 4}, {1, 4}});
}

WeightedOrientedGraph heavy_directed_triangle() {
  return WeightedOrientedGraph(3, {2, 2, 2}, {{1, 2}, {2, 3}, {3, 1}});
}

WeightedOrientedGraph triangle_heavy_middle() {
  return WeightedOrientedGraph(3, {1, 2, 1}, {{1, 2}, {2, 3}, {1, 3}});
}

WeightedOrientedGraph triangle_heavy_sink() {
  return WeightedOrientedGraph(3, {2, 1, 1}, {{3, 1}, {2, 1}, {2, 3}});
}

WeightedOrientedGraph path_heavy_middle() {
  return WeightedOrientedGraph(3, {1, 2, 1}, {{1, 2}, {2, 3}});
}

WeightedOrientedGraph directed_cycle(std::size_t len) {
  std::vector<DirectedEdge> edges;
  for (std::size_t v = 1; v <= len; ++v) edges.push_back({v, v % len + 1});
  return WeightedOrientedGraph(len, std::vector<Exponent>(len, 1), std::move(edges));
}

std::string_view four_cycle_constraint_block() {
  return "amb_space 4\n"
         "constraints 8\n"
         "0 1 0 0 >= 0\n"
         "1 0 0 0 >= 0\n"
         "0 0 1 0 >= 0\n"
         "0 0 0 1 >= 0\n"
         "1 2 0 0 >= 1\n"
         "0 2 1 0 >= 1\n"
         "0 0 1 2 >= 1\n"
         "1 0 0 2 >= 1\n"
         "SupportHyperplanes\n"
         "ExtremeRays\n"
         "VerticesOfPolyhedron\n";
}

namespace {

IrreducibleDecomposition components_of(std::size_t s, std::initializer_list<std::string_view> ideals) {
  std::vector<IrreducibleIdeal> comps;
  for (auto text : ideals) {
    const auto q = parse_ideal(text, s);
    ExponentVector alpha(s);
    for (const auto& g : q.gens()) alpha = alpha + g;
    comps.emplace_back(std::move(alpha));
  }
  return make_irredundant(s, std::move(comps));
}

std::vector<RationalVector> rationals(std::initializer_list<std::string_view> points) {
  std::vector<RationalVector> out;
  for (auto text : points) {
    RationalVector v;
    std::string body(text.substr(1, text.size() - 2));
    std::stringstream ss(body);
    std::string field;
    while (std::getline(ss, field, ',')) v.push_back(parse_rational(field));
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool in_sym_not_power(const MonomialIdeal& ideal, const ExponentVector& f) {
  return contains_monomial(symbolic_power_min(ideal, 2), f) && !contains_monomial(power(ideal, 2), f);
}

class Runner {
 public:
  void check(std::string name, const std::function<bool()>& body) {
    Check c{std::move(name), false, {}};
    try {
      c.passed = body();
    } catch (const std::exception& e) {
      c.detail = e.what();
    }
    checks_.push_back(std::move(c));
  }
  std::vector<Check> take() { return std::move(checks_); }

 private:
  std::vector<Check> checks_;
};

}  // namespace

std::vector<Check> run_example_checks() {
  Runner run;

  {
    const auto d = four_cycle_heavy_sinks();
    const auto i = edge_ideal(d);
    const std::string tag = "four-cycle: ";
    run.check(tag + "edge ideal", [&] { return i == parse_ideal("t1*t2^2, t3*t2^2, t3*t4^2, t1*t4^2"); });
    run.check(tag + "decomposition (t1,t3) cap (t2^2,t4^2)", [&] {
      return irreducible_decomposition(i) == components_of(4, {"t1, t3", "t2^2, t4^2"});
    });
    run.check(tag + "I^n = I^<n> = I^(n) for n = 1..4", [&] {
      for (unsigned n = 1; n <= 4; ++n) {
        const auto r = compare_powers(i, n);
        if (!r.equalMin || !r.equalAss) return false;
      }
      return true;
    });
    run.check(tag + "t1*t2*t4 in closure(I) but not in I", [&] {
      const ExponentVector g{1, 1, 0, 1};
      return contains_monomial(integral_closure_power(i, 1), g) && !contains_monomial(i, g);
    });
    run.check(tag + "vertices of Q(I)", [&] {
      return enumerate_vertices(covering_polyhedron(i)) == rationals({"(1,0,1,0)", "(0,1/2,0,1/2)"});
    });
    const auto dual = alexander_dual(d);
    run.check(tag + "J(D) = (t1*t3, t2^2*t4^2) with four components", [&] {
      return dual.ideal == parse_ideal("t1*t3, t2^2*t4^2", 4) &&
             dual.components == components_of(4, {"t1, t2^2", "t3, t2^2", "t3, t4^2", "t1, t4^2"}) &&
             irreducible_decomposition(dual.ideal) == dual.components;
    });
    run.check(tag + "J(D) normal up to n = 3", [&] { return is_normal_up_to(dual.ideal, 3); });
    run.check(tag + "NP(J) = IP(J)", [&] {
      return polyhedra_equal(newton_hrep(dual.ideal), irreducible_polyhedron(dual.components));
    });
    run.check(tag + "vertices of Q(J)", [&] {
      return enumerate_vertices(covering_polyhedron(dual.ideal)) ==
             rationals({"(1,1/2,0,0)", "(0,1/2,1,0)", "(0,0,1,1/2)", "(1,0,0,1/2)"});
    });
    run.check(tag + "classification square, all powers, ntf", [&] {
      const auto c = classify(d);
      return c.square && c.allPowers && c.ntf == true && !non_sink_witness(d);
    });
    run.check(tag + "closure intersection (n <= 2), NP = IP, vertices = inverses for I", [&] {
      const auto r = polyhedral_consequences(i, 2, true);
      return r.closureIntersection && r.newtonEqualsIrreducible && r.verticesAreInverses;
    });
    run.check(tag + "closure intersection (n <= 2), NP = IP, vertices = inverses for J", [&] {
      const auto r = polyhedral_consequences(dual.ideal, 2, true);
      return r.closureIntersection && r.newtonEqualsIrreducible && r.verticesAreInverses;
    });
    run.check(tag + "J^n = J^(n) and J normal with NP = IP, n <= 3", [&] {
      return alexander_ntf_check(d, 3).value == true;
    });
  }

  {
    const auto d = heavy_directed_triangle();
    const auto i = edge_ideal(d);
    const std::string tag = "heavy directed triangle: ";
    run.check(tag + "edge ideal", [&] { return i == parse_ideal("t1*t2^2, t2*t3^2, t3*t1^2"); });
    run.check(tag + "four-component decomposition", [&] {
      return irreducible_decomposition(i) ==
             components_of(3, {"t1^2, t2", "t1, t3^2", "t2^2, t3", "t1^2, t2^2, t3^2"});
    });
    run.check(tag + "m in Ass by decomposition, strong full cover, and N+(V+) = V", [&] {
      const auto r = irrelevant_in_ass(d);
      return r.value && r.maximalIsAssociated && r.fullSetIsStrong && r.outNeighborhoodCovers;
    });
    run.check(tag + "I^(1) != I", [&] { return symbolic_power_min(i, 1) != i; });
    run.check(tag + "I^<n> = I^n for n = 1..3", [&] {
      for (unsigned n = 1; n <= 3; ++n)
        if (symbolic_power_ass(i, n) != power(i, n)) return false;
      return true;
    });
    run.check(tag + "compare n = 2 lists witnesses of I^(2) outside I^2", [&] {
      const auto r = compare_powers(i, 2);
      if (r.equalMin || r.witnesses.empty()) return false;
      return std::all_of(r.witnesses.begin(), r.witnesses.end(), [&](const ExponentVector& w) {
        return contains_monomial(r.minPower, w) && !contains_monomial(r.ordinary, w);
      });
    });
  }

  {
    const auto d = triangle_heavy_middle();
    const auto i = edge_ideal(d);
    const std::string tag = "triangle, heavy middle vertex: ";
    run.check(tag + "edge ideal", [&] { return i == parse_ideal("t1*t2^2, t2*t3, t1*t3"); });
    run.check(tag + "decomposition (t1,t2) cap (t1,t3) cap (t2^2,t3)", [&] {
      return irreducible_decomposition(i) == components_of(3, {"t1, t2", "t1, t3", "t2^2, t3"});
    });
    run.check(tag + "t1*t2^2*t3 in I^(2) \\ I^2", [&] {
      const auto r = compare_powers(i, 2);
      const ExponentVector f{1, 2, 1};
      return in_sym_not_power(i, f) && !r.equalMin &&
             std::find(r.witnesses.begin(), r.witnesses.end(), f) != r.witnesses.end();
    });
    run.check(tag + "square = false because t2 in V+ is not a sink", [&] {
      return !classify(d).square && !vertex_roles(d).allVPlusSinks &&
             non_sink_witness(d) == ExponentVector{1, 2, 1};
    });
  }

  {
    const auto d = triangle_heavy_sink();
    const auto i = edge_ideal(d);
    const std::string tag = "triangle, heavy sink: ";
    run.check(tag + "edge ideal", [&] { return i == parse_ideal("t3*t1^2, t2*t1^2, t2*t3"); });
    run.check(tag + "decomposition (t1^2,t2) cap (t1^2,t3) cap (t2,t3)", [&] {
      return irreducible_decomposition(i) == components_of(3, {"t1^2, t2", "t1^2, t3", "t2, t3"});
    });
    run.check(tag + "t1^2*t2*t3 in I^(2) \\ I^2", [&] {
      const auto r = compare_powers(i, 2);
      const ExponentVector f{2, 1, 1};
      return in_sym_not_power(i, f) &&
             std::find(r.witnesses.begin(), r.witnesses.end(), f) != r.witnesses.end();
    });
    run.check(tag + "V+ = {t1} is a sink, square = false from the triangle", [&] {
      const auto roles = vertex_roles(d);
      const auto props = underlying_props(d);
      return roles.vPlus == VertexSet{1} && roles.allVPlusSinks && props.hasTriangle &&
             !classify(d).square && !non_sink_witness(d);
    });
  }

  {
    const auto d = path_heavy_middle();
    const auto i = edge_ideal(d);
    const std::string tag = "path, heavy middle vertex: ";
    run.check(tag + "edge ideal", [&] { return i == parse_ideal("t1*t2^2, t2*t3"); });
    run.check(tag + "decomposition (t2) cap (t2^2,t3) cap (t1,t3)", [&] {
      return irreducible_decomposition(i) == components_of(3, {"t2", "t2^2, t3", "t1, t3"});
    });
    run.check(tag + "localizations at (t2,t3) and (t1,t3)", [&] {
      return localize(i, MonomialPrime(3, {2, 3})) == parse_ideal("t2^2, t2*t3", 3) &&
             localize(i, MonomialPrime(3, {1, 3})) == parse_ideal("t1, t3", 3);
    });
    run.check(tag + "t1*t2^2*t3 in I^(2) \\ I^2", [&] { return in_sym_not_power(i, ExponentVector{1, 2, 1}); });
    run.check(tag + "I^<n> = (t2^2,t2*t3)^n cap (t1,t3)^n = I^n for n = 1..3", [&] {
      const auto a = parse_ideal("t2^2, t2*t3", 3);
      const auto b = parse_ideal("t1, t3", 3);
      for (unsigned n = 1; n <= 3; ++n) {
        const auto sym = symbolic_power_ass(i, n);
        if (sym != intersect(power(a, n), power(b, n)) || sym != power(i, n)) return false;
      }
      return true;
    });
  }

  run.check("directed 7-cycle: I^n = I^(n) for n = 1..3, fails first at n = 4", [] {
    const auto i = edge_ideal(directed_cycle(7));
    for (unsigned n = 1; n <= 3; ++n)
      if (symbolic_power_min(i, n) != power(i, n)) return false;
    return symbolic_power_min(i, 4) != power(i, 4);
  });

  run.check("constraint block: vertices of the parsed polyhedron", [] {
    return enumerate_vertices(parse_normaliz(four_cycle_constraint_block())) ==
           rationals({"(1,0,1,0)", "(0,1/2,0,1/2)"});
  });

  return run.take();
}

}  // namespace wogsym::fixtures
