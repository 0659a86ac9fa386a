#include "wogsym/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "wogsym/decomposition.hpp"
#include "wogsym/errors.hpp"
#include "wogsym/exec.hpp"
#include "wogsym/fixtures.hpp"
#include "wogsym/polyhedra.hpp"
#include "wogsym/symbolic.hpp"
#include "wogsym/text.hpp"
#include "wogsym/wog.hpp"

namespace wogsym::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string path;
  unsigned n = 1;
  unsigned powerBound = kDefaultPowerBound;
  bool useMin = false;
  bool useAss = false;
  bool json = false;
  bool dual = false;
  bool normaliz = false;
  bool serial = false;
  int threads = 0;
  std::size_t maxCovers = kDefaultCoverVertexLimit;
  PolyhedronLimits limits;
};

enum class InputKind { Ideal, Graph, Constraints };

struct Input {
  InputKind kind = InputKind::Ideal;
  std::optional<WeightedOrientedGraph> graph;
  std::optional<CoveringFormPolyhedron> constraints;
  MonomialIdeal ideal;
};

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

std::string first_word(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (ls >> word) return word;
  }
  return {};
}

Input load(const Options& opt, std::ostream& err) {
  const auto text = read_all(opt.path);
  const auto word = first_word(text);
  Input input;
  if (word == "vertices") {
    auto graph = parse_graph(text);
    if (!graph.is_normalized()) {
      err << "note: source weights normalized to 1\n";
      graph = normalize(graph);
    }
    input.kind = InputKind::Graph;
    input.ideal = opt.dual ? alexander_dual(graph).ideal : edge_ideal(graph);
    input.graph = std::move(graph);
  } else if (word == "amb_space") {
    input.kind = InputKind::Constraints;
    input.constraints = parse_normaliz(text);
  } else {
    if (opt.dual) throw ParseError("--dual needs a graph file");
    input.ideal = parse_ideal(text);
  }
  return input;
}

const MonomialIdeal& ideal_of(const Input& input) {
  if (input.kind == InputKind::Constraints) {
    throw ParseError("this command needs an ideal or graph file, not a constraint block");
  }
  return input.ideal;
}

const WeightedOrientedGraph& graph_of(const Input& input) {
  if (!input.graph) throw ParseError("this command needs a graph file");
  return *input.graph;
}

Json to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.gens()) gens.push_back(format_monomial(g));
  return gens;
}

Json to_json(const std::vector<MonomialPrime>& primes) {
  Json arr = Json::array();
  for (const auto& p : primes) arr.push_back(p.support());
  return arr;
}

Json to_json(const std::vector<RationalVector>& points) {
  Json arr = Json::array();
  for (const auto& p : points) {
    Json row = Json::array();
    for (const auto& c : p) row.push_back(format_rational(c));
    arr.push_back(std::move(row));
  }
  return arr;
}

std::string join_primes(const std::vector<MonomialPrime>& primes) {
  if (primes.empty()) return "none";
  std::string out;
  for (const auto& p : primes) out += (out.empty() ? "" : " ") + format_prime(p);
  return out;
}

std::string join_set(const VertexSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) out += (i ? "," : "") + std::to_string(set[i]);
  return out + "}";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_monomials(const std::vector<ExponentVector>& monos) {
  if (monos.empty()) return "none";
  std::string out;
  for (const auto& m : monos) out += (out.empty() ? "" : ", ") + format_monomial(m);
  return out;
}

// Commands. Each writes text or JSON and returns an exit code.

int cmd_decompose(const Options& opt, const Input& in, std::ostream& out) {
  const auto& ideal = ideal_of(in);
  const auto dec = irreducible_decomposition(ideal);
  if (opt.json) {
    Json comps = Json::array();
    for (const auto& q : dec.components) comps.push_back(to_json(q.to_ideal()));
    out << Json{{"ideal", to_json(ideal)}, {"components", comps}, {"minimal", dec.is_minimal()}}.dump(2)
        << '\n';
    return kSuccess;
  }
  out << "ideal: " << format_ideal(ideal) << '\n';
  out << "components: " << dec.components.size() << '\n';
  for (const auto& q : dec.components) out << "  " << format_irreducible(q) << '\n';
  out << "minimal: " << yes_no(dec.is_minimal()) << '\n';
  return kSuccess;
}

int cmd_ass(const Options& opt, const Input& in, std::ostream& out) {
  const auto& ideal = ideal_of(in);
  const auto ass = associated_primes(ideal);
  const auto minimal = minimal_primes(ideal);
  const auto embedded = embedded_primes(ideal);
  const auto maximal = maximal_associated_primes(ideal);
  if (opt.json) {
    out << Json{{"associated", to_json(ass)},
                {"minimal", to_json(minimal)},
                {"embedded", to_json(embedded)},
                {"maximal", to_json(maximal)}}
               .dump(2)
        << '\n';
    return kSuccess;
  }
  out << "associated: " << join_primes(ass) << '\n';
  out << "minimal: " << join_primes(minimal) << '\n';
  out << "embedded: " << join_primes(embedded) << '\n';
  out << "maximal: " << join_primes(maximal) << '\n';
  return kSuccess;
}

int cmd_symbolic(const Options& opt, const Input& in, std::ostream& out) {
  if (opt.useMin && opt.useAss) throw ParseError("--min and --ass are exclusive");
  const auto& ideal = ideal_of(in);
  const bool ass = opt.useAss;
  const auto result = ass ? symbolic_power_ass(ideal, opt.n) : symbolic_power_min(ideal, opt.n);
  const std::string label = ass ? "I^<" + std::to_string(opt.n) + ">" : "I^(" + std::to_string(opt.n) + ")";
  if (opt.json) {
    out << Json{{"n", opt.n}, {"kind", ass ? "ass" : "min"}, {"ideal", to_json(result)}}.dump(2) << '\n';
    return kSuccess;
  }
  out << label << ": " << format_ideal(result) << '\n';
  return kSuccess;
}

int cmd_compare(const Options& opt, const Input& in, std::ostream& out) {
  const auto r = compare_powers(ideal_of(in), opt.n);
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(format_monomial(w));
  if (opt.json) {
    out << Json{{"n", r.n},
                {"power", to_json(r.ordinary)},
                {"symbolic_ass", to_json(r.assPower)},
                {"symbolic_min", to_json(r.minPower)},
                {"equal_min", r.equalMin},
                {"equal_ass", r.equalAss},
                {"witnesses", witnesses}}
               .dump(2)
        << '\n';
    return kSuccess;
  }
  const auto n = std::to_string(r.n);
  out << "n: " << n << '\n';
  out << "I^" << n << ": " << format_ideal(r.ordinary) << '\n';
  out << "I^<" << n << ">: " << format_ideal(r.assPower) << '\n';
  out << "I^(" << n << "): " << format_ideal(r.minPower) << '\n';
  out << "I^" << n << " == I^(" << n << "): " << yes_no(r.equalMin) << '\n';
  out << "I^" << n << " == I^<" << n << ">: " << yes_no(r.equalAss) << '\n';
  out << "witnesses: " << join_monomials(r.witnesses) << '\n';
  return kSuccess;
}

int cmd_ntf(const Options& opt, const Input& in, std::ostream& out) {
  const auto r = is_ntf_up_to(ideal_of(in), opt.powerBound);
  if (opt.json) {
    Json per = Json::array();
    for (const auto& a : r.assPerPower) per.push_back(to_json(a));
    Json j{{"bound", r.bound}, {"ass_per_power", per}, {"ntf", r.ntf}};
    j["powers_agree"] = r.powersAgree ? Json(*r.powersAgree) : Json(nullptr);
    out << j.dump(2) << '\n';
    return kSuccess;
  }
  for (std::size_t k = 0; k < r.assPerPower.size(); ++k) {
    out << "Ass(I^" << k + 1 << "): " << join_primes(r.assPerPower[k]) << '\n';
  }
  out << "normally torsion-free up to n = " << r.bound << ": " << yes_no(r.ntf) << '\n';
  if (r.powersAgree) out << "I^n == I^(n) up to n = " << r.bound << ": " << yes_no(*r.powersAgree) << '\n';
  return kSuccess;
}

int cmd_wog_ideal(const Options& opt, const Input& in, std::ostream& out) {
  const auto ideal = edge_ideal(graph_of(in));
  if (opt.json) {
    out << Json{{"edge_ideal", to_json(ideal)}}.dump(2) << '\n';
    return kSuccess;
  }
  out << "I(D): " << format_ideal(ideal) << '\n';
  return kSuccess;
}

int cmd_wog_dual(const Options& opt, const Input& in, std::ostream& out) {
  const auto dual = alexander_dual(graph_of(in));
  if (opt.json) {
    Json comps = Json::array();
    for (const auto& q : dual.components.components) comps.push_back(to_json(q.to_ideal()));
    out << Json{{"dual", to_json(dual.ideal)}, {"components", comps}}.dump(2) << '\n';
    return kSuccess;
  }
  out << "J(D): " << format_ideal(dual.ideal) << '\n';
  out << "components: " << dual.components.components.size() << '\n';
  for (const auto& q : dual.components.components) out << "  " << format_irreducible(q) << '\n';
  return kSuccess;
}

int cmd_wog_classify(const Options& opt, const Input& in, std::ostream& out) {
  const auto& d = graph_of(in);
  const auto roles = vertex_roles(d);
  const auto props = underlying_props(d);
  const auto cls = classify(d);
  const auto witness = non_sink_witness(d);
  std::optional<IrrelevantReport> irrelevant;
  if (!d.edges().empty()) irrelevant = irrelevant_in_ass(d);
  if (opt.json) {
    Json j{{"sinks", roles.sinks},
           {"sources", roles.sources},
           {"v_plus", roles.vPlus},
           {"all_v_plus_sinks", roles.allVPlusSinks},
           {"bipartite", props.isBipartite},
           {"triangle", props.hasTriangle}};
    j["odd_girth"] = props.oddGirth ? Json(*props.oddGirth) : Json(nullptr);
    j["square"] = cls.square;
    j["all_powers"] = cls.allPowers;
    j["ntf"] = cls.ntf ? Json(*cls.ntf) : Json(nullptr);
    j["non_sink_witness"] = witness ? Json(format_monomial(*witness)) : Json(nullptr);
    j["maximal_ideal_associated"] = irrelevant ? Json(irrelevant->value) : Json(nullptr);
    out << j.dump(2) << '\n';
    return kSuccess;
  }
  out << "sinks: " << join_set(roles.sinks) << '\n';
  out << "sources: " << join_set(roles.sources) << '\n';
  out << "V+: " << join_set(roles.vPlus) << '\n';
  out << "every V+ vertex a sink: " << yes_no(roles.allVPlusSinks) << '\n';
  out << "bipartite: " << yes_no(props.isBipartite) << '\n';
  out << "triangle: " << yes_no(props.hasTriangle) << '\n';
  out << "odd girth: " << (props.oddGirth ? std::to_string(*props.oddGirth) : "none") << '\n';
  out << "I^2 == I^(2): " << yes_no(cls.square) << '\n';
  out << "I^n == I^(n) for all n: " << yes_no(cls.allPowers) << '\n';
  out << "normally torsion-free: " << (cls.ntf ? yes_no(*cls.ntf) : "undetermined (embedded primes)") << '\n';
  out << "non-sink witness: " << (witness ? format_monomial(*witness) : "none") << '\n';
  if (irrelevant) out << "m in Ass(I(D)): " << yes_no(irrelevant->value) << '\n';
  return kSuccess;
}

int cmd_wog_covers(const Options& opt, const Input& in, std::ostream& out) {
  const auto& d = graph_of(in);
  const auto covers = strong_covers(d, opt.maxCovers);
  const auto dec = decomposition_via_covers(d, opt.maxCovers);
  Json arr = Json::array();
  std::ostringstream text;
  text << "strong covers: " << covers.size() << '\n';
  for (const auto& c : covers) {
    const auto part = cover_partition(d, c);
    const auto q = cover_ideal(d, c);
    text << "  C=" << join_set(c) << " L1=" << join_set(part.l1) << " L2=" << join_set(part.l2)
         << " L3=" << join_set(part.l3) << " I_C=" << format_irreducible(q) << '\n';
    arr.push_back(Json{{"cover", c}, {"l1", part.l1}, {"l2", part.l2}, {"l3", part.l3},
                       {"ideal", to_json(q.to_ideal())}});
  }
  Json comps = Json::array();
  text << "irredundant components: " << dec.components.size() << '\n';
  for (const auto& q : dec.components) {
    text << "  " << format_irreducible(q) << '\n';
    comps.push_back(to_json(q.to_ideal()));
  }
  if (opt.json) {
    out << Json{{"strong_covers", arr}, {"components", comps}}.dump(2) << '\n';
  } else {
    out << text.str();
  }
  return kSuccess;
}

int cmd_poly_vertices(const Options& opt, const Input& in, std::ostream& out) {
  const auto p = in.constraints ? *in.constraints : covering_polyhedron(ideal_of(in));
  const auto vertices = enumerate_vertices(p, opt.limits);
  if (opt.normaliz) {
    out << format_normaliz(p, &vertices);
  } else if (opt.json) {
    out << Json{{"dim", p.dim()}, {"vertices", to_json(vertices)}}.dump(2) << '\n';
  } else {
    out << "vertices: " << vertices.size() << '\n';
    for (const auto& v : vertices) out << "  " << format_rational_vector(v) << '\n';
  }
  return kSuccess;
}

int cmd_newton(const Options& opt, const Input& in, std::ostream& out) {
  const auto& ideal = ideal_of(in);
  const auto hrep = newton_hrep(ideal, opt.limits);
  const auto verts = newton_vertices(ideal, opt.limits);
  if (opt.normaliz) {
    out << format_normaliz(hrep);
    return kSuccess;
  }
  if (opt.json) {
    Json v = Json::array();
    for (const auto& g : verts) v.push_back(format_monomial(g));
    out << Json{{"inequalities", to_json(hrep.columns())}, {"vertices", v}}.dump(2) << '\n';
    return kSuccess;
  }
  out << "NP(I) = { x >= 0 :";
  for (std::size_t i = 0; i < hrep.columns().size(); ++i) {
    out << (i ? "," : "") << " x.u >= 1 for u = " << format_rational_vector(hrep.columns()[i]);
  }
  out << " }\n";
  out << "vertices: " << join_monomials(verts) << '\n';
  return kSuccess;
}

int cmd_closure(const Options& opt, const Input& in, std::ostream& out) {
  const auto& ideal = ideal_of(in);
  const auto closure = integral_closure_power(ideal, opt.n, opt.limits);
  const bool closed = closure == power(ideal, opt.n);
  if (opt.json) {
    out << Json{{"n", opt.n}, {"closure", to_json(closure)}, {"integrally_closed", closed}}.dump(2) << '\n';
    return kSuccess;
  }
  out << "closure(I^" << opt.n << "): " << format_ideal(closure) << '\n';
  out << "I^" << opt.n << " integrally closed: " << yes_no(closed) << '\n';
  return kSuccess;
}

int cmd_normal(const Options& opt, const Input& in, std::ostream& out) {
  const bool normal = is_normal_up_to(ideal_of(in), opt.powerBound, opt.limits);
  if (opt.json) {
    out << Json{{"bound", opt.powerBound}, {"normal", normal}}.dump(2) << '\n';
    return kSuccess;
  }
  out << "normal up to n = " << opt.powerBound << ": " << yes_no(normal) << '\n';
  return kSuccess;
}

int cmd_polyhedral_check(const Options& opt, const Input& in, std::ostream& out) {
  const auto& ideal = ideal_of(in);
  bool powersEqual = true;
  for (unsigned n = 1; n <= opt.powerBound && powersEqual; ++n) {
    powersEqual = symbolic_power_min(ideal, n) == power(ideal, n);
  }
  const auto r = polyhedral_consequences(ideal, opt.powerBound, powersEqual, opt.limits);
  if (opt.json) {
    Json j{{"bound", opt.powerBound},
           {"powers_equal", powersEqual},
           {"closure_intersection", r.closureIntersection},
           {"newton_equals_irreducible", r.newtonEqualsIrreducible},
           {"vertices_are_inverses", r.verticesAreInverses},
           {"asserted", r.asserted},
           {"vertices", to_json(r.vertices)},
           {"inverses", to_json(r.inverses)}};
    out << j.dump(2) << '\n';
    return kSuccess;
  }
  out << "I^n == I^(n) up to n = " << opt.powerBound << ": " << yes_no(powersEqual) << '\n';
  if (!r.closure.evaluated) out << "closure intersection skipped: " << r.closure.skipReason << '\n';
  out << "closure(I^n) == cap closure(q_i^n): " << yes_no(r.closureIntersection) << '\n';
  out << "NP(I) == IP(I): " << yes_no(r.newtonEqualsIrreducible) << '\n';
  out << "vertices of Q(I) == alpha_i^-1: " << yes_no(r.verticesAreInverses) << '\n';
  out << "vertices:";
  for (const auto& v : r.vertices) out << ' ' << format_rational_vector(v);
  out << "\ninverses:";
  for (const auto& v : r.inverses) out << ' ' << format_rational_vector(v);
  out << '\n';
  return kSuccess;
}

int cmd_examples(const Options& opt, std::ostream& out) {
  const auto checks = fixtures::run_example_checks();
  bool all = true;
  Json arr = Json::array();
  for (const auto& c : checks) {
    all = all && c.passed;
    if (opt.json) {
      arr.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    } else {
      out << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) out << " (" << c.detail << ")";
      out << '\n';
    }
  }
  if (opt.json) {
    out << Json{{"checks", arr}, {"passed", all}}.dump(2) << '\n';
  } else {
    out << (all ? "all " : "some ") << "checks " << (all ? "passed" : "FAILED") << '\n';
  }
  return all ? kSuccess : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monomial ideals, symbolic powers, and weighted oriented graphs"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool needsInput) {
    if (needsInput) sub->add_option("input", opt.path, "ideal, graph, or constraint file ('-' = stdin)")->required();
    sub->add_flag("--json", opt.json, "machine-readable output");
    sub->add_flag("--serial", opt.serial, "run kernels on the serial reference path");
    sub->add_option("--threads", opt.threads, "OpenMP threads")->check(CLI::NonNegativeNumber);
    sub->add_option("--max-vars", opt.limits.maxDim, "polyhedron dimension limit")->capture_default_str();
    sub->add_option("--max-constraints", opt.limits.maxColumns, "polyhedron constraint limit")
        ->capture_default_str();
    sub->add_option("--max-covers", opt.maxCovers, "vertex limit for cover enumeration")->capture_default_str();
    sub->add_option("--max-n,--power-bound", opt.powerBound, "largest n for 'all n' checks")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_flag("--dual", opt.dual, "use the Alexander dual J(D) of a graph input");
  };

  struct Command {
    const char* name;
    const char* help;
    int (*fn)(const Options&, const Input&, std::ostream&);
  };
  const Command commands[] = {
      {"decompose", "irreducible decomposition", cmd_decompose},
      {"ass", "associated, minimal, embedded primes", cmd_ass},
      {"symbolic", "symbolic power I^(n) (--min) or I^<n> (--ass)", cmd_symbolic},
      {"compare", "compare I^n, I^<n>, I^(n) and list witnesses", cmd_compare},
      {"ntf", "Ass(I^n) for n up to the power bound", cmd_ntf},
      {"wog-classify", "roles, graph properties, classification", cmd_wog_classify},
      {"wog-covers", "strong vertex covers and their ideals", cmd_wog_covers},
      {"wog-ideal", "edge ideal I(D)", cmd_wog_ideal},
      {"wog-dual", "Alexander dual J(D)", cmd_wog_dual},
      {"poly-vertices", "vertices of the covering polyhedron", cmd_poly_vertices},
      {"newton", "inequalities and vertices of the Newton polyhedron", cmd_newton},
      {"closure", "integral closure of I^n", cmd_closure},
      {"normal", "I^n integrally closed for n up to the power bound", cmd_normal},
      {"polyhedral-check", "polyhedral consequences of I^n == I^(n)", cmd_polyhedral_check},
  };
  std::map<const CLI::App*, const Command*> dispatch;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    add_common(sub, true);
    const std::string name = c.name;
    if (name == "symbolic" || name == "compare" || name == "closure") {
      sub->add_option("--n", opt.n, "power index")->check(CLI::PositiveNumber)->capture_default_str();
    }
    if (name == "symbolic") {
      sub->add_flag("--min", opt.useMin, "intersection over minimal primes (default)");
      sub->add_flag("--ass", opt.useAss, "intersection over maximal associated primes");
    }
    if (name == "poly-vertices" || name == "newton") {
      sub->add_flag("--normaliz-format", opt.normaliz, "Normaliz constraint-block output");
    }
    dispatch[sub] = &c;
  }
  auto* examples = app.add_subcommand("examples", "run every built-in fixture check");
  add_common(examples, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    app.exit(e, out, msg);
    err << msg.str();
    return e.get_exit_code() == 0 ? kSuccess : kInputError;
  }

  if (opt.serial) set_default_exec(Exec::Serial);
  if (opt.threads > 0) set_threads(opt.threads);

  try {
    if (examples->parsed()) return cmd_examples(opt, out);
    for (const auto& [sub, cmd] : dispatch) {
      if (sub->parsed()) {
        const auto input = load(opt, err);
        return cmd->fn(opt, input, out);
      }
    }
    return kInputError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const ConsistencyError& e) {
    err << "check failed: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace wogsym::cli
