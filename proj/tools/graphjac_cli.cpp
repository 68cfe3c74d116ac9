// graphjac: command-line front end for Jacobian, pairing and DLP computations.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "graphjac/corpus.hpp"
#include "graphjac/dlp.hpp"
#include "graphjac/graph.hpp"
#include "graphjac/jacobian.hpp"
#include "graphjac/oracle.hpp"
#include "graphjac/pairing.hpp"
#include "graphjac/selfcheck.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace graphjac;

// Exit status per error class; documented in the README.
enum Exit : int {
  kOk = 0,
  kUsage = 2,
  kParse = 3,
  kBadGraph = 4,
  kBadDivisor = 5,
  kNotCyclic = 6,
  kNoSolution = 7,
  kTooLarge = 8,
  kCheckFailed = 9,
  kInternal = 10,
};

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError: return kParse;
    case ErrorCode::LoopEdge:
    case ErrorCode::Disconnected:
    case ErrorCode::VertexOutOfRange: return kBadGraph;
    case ErrorCode::NonZeroDegree:
    case ErrorCode::DimensionMismatch: return kBadDivisor;
    case ErrorCode::NotCyclic: return kNotCyclic;
    case ErrorCode::TooLarge: return kTooLarge;
    case ErrorCode::NotSquare:
    case ErrorCode::Singular: break;
  }
  return kInternal;
}

struct Globals {
  bool json = false;
  std::uint64_t seed = 1;
};

json to_json(const Integer& x) {
  if (mpz_fits_slong_p(x.get_mpz_t())) return x.get_si();
  return x.get_str();
}

json to_json(const std::vector<Integer>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(to_json(x));
  return a;
}

void emit(const Globals& g, const json& j) {
  std::cout << (g.json ? j.dump() : j.dump(2)) << '\n';
}

int fail(const Globals& g, const std::string& kind, const std::string& message,
         int code) {
  if (g.json)
    emit(g, json{{"error", kind}, {"message", message}});
  std::cerr << "graphjac: " << kind << ": " << message << '\n';
  return code;
}

Divisor divisor_for(const MultiGraph& g, const std::string& text) {
  Divisor d = parse_divisor(text);
  if (d.size() != g.vertex_count())
    throw Error(ErrorCode::DimensionMismatch,
                "divisor \"" + text + "\" has " + std::to_string(d.size()) +
                    " entries, graph has " +
                    std::to_string(g.vertex_count()) + " vertices");
  return d;
}

GeneralizedInverse inverse_for(const MultiGraph& g, const std::string& spec) {
  if (spec == "mp") return moore_penrose(g);
  if (spec.rfind("minor:", 0) == 0) {
    const std::string idx = spec.substr(6);
    if (!idx.empty() && idx.find_first_not_of("0123456789") == std::string::npos)
      return gen_inverse_minor(g, std::stoul(idx));
  }
  throw Error(ErrorCode::ParseError,
              "--inverse expects minor:<i> or mp, got \"" + spec + "\"");
}

json structure_json(const JacobianStructure& s) {
  json gens = json::array();
  for (const auto& d : s.generators()) gens.push_back(format_divisor(d));
  return json{{"order", to_json(s.group_order())},
              {"invariant_factors", to_json(s.invariant_factors())},
              {"cyclic", s.is_cyclic()},
              {"generators", gens}};
}

struct GraphArg {
  std::string path;
  MultiGraph load() const { return read_graph_file(path); }
};

int cmd_info(const Globals& G, const GraphArg& ga) {
  const JacobianStructure s = analyze(ga.load());
  emit(G, json{{"n", s.graph().vertex_count()},
               {"m", s.graph().edge_count()},
               {"kappa", to_json(s.group_order())},
               {"invariant_factors", to_json(s.invariant_factors())},
               {"cyclic", s.is_cyclic()}});
  return kOk;
}

int cmd_structure(const Globals& G, const GraphArg& ga) {
  emit(G, structure_json(analyze(ga.load())));
  return kOk;
}

struct PairingArgs {
  std::string d1, d2, inverse;
  bool all = false;
};

int cmd_pairing(const Globals& G, const GraphArg& ga, const PairingArgs& a) {
  const MultiGraph g = ga.load();
  const Divisor d1 = divisor_for(g, a.d1), d2 = divisor_for(g, a.d2);
  if (!a.all) {
    const GeneralizedInverse l = inverse_for(
        g, a.inverse.empty() ? "minor:" + std::to_string(g.vertex_count() - 1)
                             : a.inverse);
    const PairingValue v = monodromy_pairing(d1, d2, l);
    if (G.json)
      emit(G, json{{"value", v.to_string()}, {"inverse", l.describe()}});
    else
      std::cout << v.to_string() << '\n';
    return kOk;
  }
  std::vector<GeneralizedInverse> ls;
  for (Vertex i = 0; i < g.vertex_count(); ++i)
    ls.push_back(gen_inverse_minor(g, i));
  ls.push_back(moore_penrose(g));
  json values = json::array();
  std::optional<PairingValue> first;
  bool agree = true;
  for (const auto& l : ls) {
    const PairingValue v = monodromy_pairing(d1, d2, l);
    if (!first) first = v;
    agree = agree && v == *first;
    if (G.json)
      values.push_back(json{{"inverse", l.describe()}, {"value", v.to_string()}});
    else
      std::cout << l.describe() << ' ' << v.to_string() << '\n';
  }
  if (G.json) emit(G, json{{"values", values}, {"agree", agree}});
  if (!agree) {
    std::cerr << "graphjac: pairing values differ between inverses\n";
    return kInternal;
  }
  return kOk;
}

struct DlpArgs {
  std::string base, target;
  bool general = false, oracle = false;
};

int cmd_dlp(const Globals& G, const GraphArg& ga, const DlpArgs& a) {
  const JacobianStructure s = analyze(ga.load());
  const DlpInstance inst{s, divisor_for(s.graph(), a.base),
                         divisor_for(s.graph(), a.target)};
  const bool general = a.general || !s.is_cyclic();
  const auto sol = general ? dlp_general(inst) : dlp_cyclic(inst);

  json out;
  if (sol) {
    out = json{{"x", to_json(sol->x)},
               {"mod", to_json(sol->modulus)},
               {"verified", verify_solution(inst, *sol)},
               {"method", general ? "general" : "cyclic"}};
  } else {
    out = json{{"error", "no-solution"},
               {"method", general ? "general" : "cyclic"}};
  }
  bool oracle_disagrees = false;
  if (a.oracle) {
    try {
      const auto table = oracle::enumerate_group(s.graph());
      const auto brute =
          oracle::brute_force_dlp(table, inst.base, inst.target);
      out["oracle"] = brute ? json(*brute) : json("no-solution");
      const bool agree = brute.has_value() == sol.has_value() &&
                         (!brute || sol->x == *brute);
      out["oracle_agrees"] = agree;
      oracle_disagrees = !agree;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TooLarge) throw;
      out["oracle"] = "skipped: group too large";
    }
  }
  emit(G, out);
  if (oracle_disagrees) return kInternal;
  return sol ? kOk : kNoSolution;
}

struct ReduceArgs {
  std::string divisor;
  std::size_t q = 0;
};

int cmd_reduce(const Globals& G, const GraphArg& ga, const ReduceArgs& a) {
  const MultiGraph g = ga.load();
  const Divisor d = divisor_for(g, a.divisor);
  if (a.q >= g.vertex_count())
    throw Error(ErrorCode::VertexOutOfRange, "--q out of range");
  const GeneralizedInverse l = gen_inverse_minor(g, a.q);
  const Divisor r = dhar_reduce(g, d, a.q, l.numerators(), l.denominator());
  if (G.json)
    emit(G, json{{"reduced", format_divisor(r)}, {"q", a.q}});
  else
    std::cout << format_divisor(r) << '\n';
  return kOk;
}

struct GenArgs {
  std::string family;
  std::size_t size = 0;
  std::string out;
};

int cmd_gen_instance(const Globals& G, const GenArgs& a) {
  const Family f = parse_family(a.family);
  const GeneratedInstance gi = generate_instance(f, a.size, G.seed);
  const std::string text = format_graph(gi.graph);
  json out{{"family", std::string(family_name(f))},
           {"size", a.size},
           {"seed", G.seed},
           {"n", gi.graph.vertex_count()},
           {"m", gi.graph.edge_count()},
           {"base", format_divisor(gi.base)},
           {"target", format_divisor(gi.target)},
           {"secret", to_json(gi.secret)}};
  if (a.out.empty()) {
    out["graph"] = text;
  } else {
    std::ofstream file(a.out);
    if (!(file << text))
      throw Error(ErrorCode::ParseError, "cannot write " + a.out);
    out["graph_file"] = a.out;
  }
  emit(G, out);
  return kOk;
}

struct SelfCheckArgs {
  std::size_t pairs = 200;
  std::size_t instances = 100;
};

int cmd_self_check(const Globals& G, const SelfCheckArgs& a) {
  selfcheck::Options opt;
  opt.pairs_per_graph = a.pairs;
  opt.dlp_instances = a.instances;
  opt.seed = G.seed;
  const auto corpus = builtin_corpus();
  const auto results = selfcheck::run_all(corpus, opt);
  bool ok = true;
  json checks = json::array();
  for (const auto& r : results) {
    ok = ok && r.passed();
    json c{{"name", r.name},
           {"passed", r.passed()},
           {"cases", r.cases},
           {"failures", r.failures}};
    if (!r.first_failure.empty()) c["first_failure"] = r.first_failure;
    checks.push_back(c);
  }
  emit(G, json{{"graphs", corpus.size()}, {"checks", checks}, {"ok", ok}});
  return ok ? kOk : kCheckFailed;
}

struct BenchArgs {
  std::string family = "cycle";
  std::vector<std::size_t> sizes{800, 1600};
  std::size_t instances = 20;
};

int cmd_bench(const Globals& G, const BenchArgs& a) {
  const Family f = parse_family(a.family);
  json results = json::array();
  for (std::size_t n : a.sizes) {
    const BenchResult r = bench_dlp(f, n, a.instances, G.seed);
    results.push_back(json{{"n", r.n},
                           {"instances", r.instances},
                           {"solved", r.solved},
                           {"precompute_seconds", r.precompute_seconds},
                           {"mean_solve_seconds", r.mean_solve_seconds}});
    if (!G.json)
      std::cerr << "bench: n=" << r.n << " precompute " << r.precompute_seconds
                << " s, mean solve " << r.mean_solve_seconds << " s, solved "
                << r.solved << "/" << r.instances << '\n';
  }
  emit(G, json{{"family", std::string(family_name(f))},
               {"seed", G.seed},
               {"results", results}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacobians of multigraphs, the monodromy pairing, and the "
               "pairing attack on the discrete logarithm problem"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals G;
  app.add_flag("--json", G.json, "Compact JSON output, errors as JSON");
  app.add_option("--seed", G.seed, "Seed for random generation")
      ->capture_default_str();

  GraphArg ga;
  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph,-g", ga.path, "Graph file ('n m' then edges)")
        ->required();
  };

  auto* info = app.add_subcommand("info", "Vertex/edge counts, kappa, invariant factors");
  add_graph(info);
  auto* structure = app.add_subcommand("structure", "Invariant factors and generators");
  add_graph(structure);

  PairingArgs pa;
  auto* pairing = app.add_subcommand("pairing", "Monodromy pairing <D1, D2> as p/q");
  add_graph(pairing);
  pairing->add_option("--d1", pa.d1, "First divisor, e.g. 1,-1,0")->required();
  pairing->add_option("--d2", pa.d2, "Second divisor")->required();
  auto* inv_opt = pairing->add_option(
      "--inverse", pa.inverse, "minor:<i> or mp (default minor:<n-1>)");
  pairing->add_flag("--all-inverses", pa.all,
                    "One line per generalized inverse")
      ->excludes(inv_opt);

  DlpArgs da;
  auto* dlp = app.add_subcommand("dlp", "Solve x [base] = [target]");
  add_graph(dlp);
  dlp->add_option("--base", da.base, "Base divisor")->required();
  dlp->add_option("--target", da.target, "Target divisor")->required();
  dlp->add_flag("--general", da.general,
                "Use the congruence-merging algorithm even for cyclic groups");
  dlp->add_flag("--oracle", da.oracle, "Cross-check by brute force");

  ReduceArgs ra;
  auto* reduce = app.add_subcommand("reduce", "q-reduced representative");
  add_graph(reduce);
  reduce->add_option("--divisor,-d", ra.divisor, "Divisor")->required();
  reduce->add_option("--q", ra.q, "Base vertex")->capture_default_str();

  GenArgs gen;
  auto* gen_instance = app.add_subcommand(
      "gen-instance", "Seeded graph plus DLP instance with known secret");
  gen_instance
      ->add_option("--family", gen.family, "cycle|complete|banana|wheel|random")
      ->required();
  gen_instance->add_option("--size", gen.size, "Family size parameter")
      ->required()
      ->check(CLI::PositiveNumber);
  gen_instance->add_option("--out,-o", gen.out, "Write the graph to this file");

  SelfCheckArgs sa;
  auto* self_check = app.add_subcommand(
      "self-check", "Run the invariant suite on the built-in corpus");
  self_check->add_option("--pairs", sa.pairs, "Random pairs per graph")
      ->capture_default_str();
  self_check->add_option("--instances", sa.instances,
                         "DLP instances per family")
      ->capture_default_str();

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Time precomputation and dlp solves");
  bench->add_option("--family", ba.family, "Graph family")->capture_default_str();
  bench->add_option("--sizes", ba.sizes, "Sizes to time")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--instances", ba.instances, "Instances per size")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*info) return cmd_info(G, ga);
    if (*structure) return cmd_structure(G, ga);
    if (*pairing) return cmd_pairing(G, ga, pa);
    if (*dlp) return cmd_dlp(G, ga, da);
    if (*reduce) return cmd_reduce(G, ga, ra);
    if (*gen_instance) return cmd_gen_instance(G, gen);
    if (*self_check) return cmd_self_check(G, sa);
    if (*bench) return cmd_bench(G, ba);
  } catch (const Error& e) {
    return fail(G, to_string(e.code()), e.what(), exit_code(e.code()));
  } catch (const std::exception& e) {
    return fail(G, "internal", e.what(), kInternal);
  }
  return kUsage;
}
