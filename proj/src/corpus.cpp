#include "graphjac/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>

#include "graphjac/dlp.hpp"

namespace graphjac {

namespace {

using PairList = std::vector<std::pair<Vertex, Vertex>>;

PairList all_pairs(std::size_t n) {
  PairList p;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) p.emplace_back(i, j);
  return p;
}

// Lexicographically smallest multiplicity vector over all relabellings.
std::vector<unsigned> canonical_form(std::size_t n, const PairList& pairs,
                                     const std::vector<unsigned>& mult) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<unsigned> best;
  std::vector<std::vector<unsigned>> m(n, std::vector<unsigned>(n, 0));
  for (std::size_t k = 0; k < pairs.size(); ++k)
    m[pairs[k].first][pairs[k].second] = m[pairs[k].second][pairs[k].first] =
        mult[k];
  do {
    std::vector<unsigned> cur(pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k)
      cur[k] = m[perm[pairs[k].first]][perm[pairs[k].second]];
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<NamedGraph> small_multigraphs(std::size_t max_vertices,
                                          std::size_t max_edges) {
  std::vector<NamedGraph> out;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    const PairList pairs = all_pairs(n);
    std::set<std::vector<unsigned>> seen;
    std::vector<unsigned> mult(pairs.size(), 0);
    // odometer over multiplicity vectors with total <= max_edges
    for (;;) {
      const unsigned total = std::accumulate(mult.begin(), mult.end(), 0u);
      if (total <= max_edges) {
        PairList edges;
        std::string name = "n" + std::to_string(n) + ":";
        for (std::size_t k = 0; k < pairs.size(); ++k)
          for (unsigned r = 0; r < mult[k]; ++r) edges.push_back(pairs[k]);
        try {
          MultiGraph g = build_graph(n, edges);
          if (seen.insert(canonical_form(n, pairs, mult)).second) {
            bool first = true;
            for (std::size_t k = 0; k < pairs.size(); ++k) {
              if (!mult[k]) continue;
              name += (first ? "" : ",") + std::to_string(pairs[k].first) +
                      std::to_string(pairs[k].second);
              if (mult[k] > 1) name += "x" + std::to_string(mult[k]);
              first = false;
            }
            out.push_back({name, std::move(g)});
          }
        } catch (const Error& e) {
          if (e.code() != ErrorCode::Disconnected) throw;
        }
      }
      std::size_t k = 0;
      for (; k < mult.size(); ++k) {
        if (++mult[k] <= max_edges) break;
        mult[k] = 0;
      }
      if (k == mult.size()) break;
    }
  }
  return out;
}

std::vector<NamedGraph> builtin_corpus() {
  std::vector<NamedGraph> out = small_multigraphs(4, 6);
  for (std::size_t n = 3; n <= 8; ++n)
    out.push_back({"C" + std::to_string(n), families::cycle(n)});
  out.push_back({"K4", families::complete(4)});
  out.push_back({"K5", families::complete(5)});
  for (std::uint64_t m = 2; m <= 6; ++m)
    out.push_back({"B" + std::to_string(m), families::banana(m)});
  return out;
}

Family parse_family(std::string_view name) {
  if (name == "cycle") return Family::Cycle;
  if (name == "complete") return Family::Complete;
  if (name == "banana") return Family::Banana;
  if (name == "wheel") return Family::Wheel;
  if (name == "random") return Family::Random;
  throw Error(ErrorCode::ParseError,
              "unknown family '" + std::string(name) + "'");
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
    case Family::Banana: return "banana";
    case Family::Wheel: return "wheel";
    case Family::Random: return "random";
  }
  return "?";
}

MultiGraph make_family_graph(Family f, std::size_t size,
                             std::mt19937_64& rng) {
  if (size == 0) throw Error(ErrorCode::VertexOutOfRange, "size must be >= 1");
  switch (f) {
    case Family::Cycle:
      return size >= 3 ? families::cycle(size)
                       : families::banana(size);  // C_1, C_2 degenerate
    case Family::Complete: return families::complete(size);
    case Family::Banana: return families::banana(size);
    case Family::Wheel:
      return families::wheel_minus_spoke(std::max<std::size_t>(size, 3));
    case Family::Random: break;
  }
  const std::size_t n = std::max<std::size_t>(size, 2);
  for (;;) {
    PairList edges;
    for (Vertex v = 1; v < n; ++v)
      edges.emplace_back(std::uniform_int_distribution<Vertex>(0, v - 1)(rng),
                         v);
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    while (edges.size() < n + n / 2) {
      const Vertex a = pick(rng), b = pick(rng);
      if (a != b) edges.emplace_back(a, b);
    }
    MultiGraph g = build_graph(n, edges);
    if (analyze(g).is_cyclic()) return g;
  }
}

Divisor random_divisor(std::size_t n, std::mt19937_64& rng, long spread) {
  std::uniform_int_distribution<long> coef(-spread, spread);
  Divisor d(n);
  Integer sum = 0;
  for (std::size_t v = 0; v + 1 < n; ++v) {
    d[v] = coef(rng);
    sum += d[v];
  }
  d[n - 1] = -sum;
  return d;
}

Divisor random_lift(const MultiGraph& g, const Divisor& d,
                    std::mt19937_64& rng, long spread) {
  std::uniform_int_distribution<long> coef(-spread, spread);
  VertexFunction f(g.vertex_count());
  for (std::size_t v = 0; v < f.size(); ++v) f[v] = coef(rng);
  return d + div_of_function(g, f);
}

GeneratedInstance generate_instance(const JacobianStructure& s,
                                    std::mt19937_64& rng, bool reduce_target) {
  const MultiGraph& g = s.graph();
  Divisor base = random_divisor(g.vertex_count(), rng);
  gmp_randclass r(gmp_randinit_mt);
  r.seed(static_cast<unsigned long>(rng()));
  Integer secret = r.get_z_range(s.group_order());
  Divisor target = reduce_target ? s.reduce(secret * base)
                                 : random_lift(g, secret * base, rng);
  return {g, std::move(base), std::move(target), std::move(secret)};
}

GeneratedInstance generate_instance(Family f, std::size_t size,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const MultiGraph g = make_family_graph(f, size, rng);
  return generate_instance(analyze(g), rng);
}

BenchResult bench_dlp(Family f, std::size_t size, std::size_t instances,
                      std::uint64_t seed) {
  using clock = std::chrono::steady_clock;
  std::mt19937_64 rng(seed);
  const MultiGraph g = make_family_graph(f, size, rng);
  BenchResult out;
  out.n = g.vertex_count();
  out.instances = instances;

  const auto t0 = clock::now();
  const JacobianStructure s = analyze(g);
  out.precompute_seconds =
      std::chrono::duration<double>(clock::now() - t0).count();

  std::vector<GeneratedInstance> inst;
  for (std::size_t i = 0; i < instances; ++i)
    inst.push_back(generate_instance(s, rng, false));

  double total = 0;
  for (const auto& gi : inst) {
    const auto t1 = clock::now();
    const auto sol = dlp_cyclic({s, gi.base, gi.target});
    total += std::chrono::duration<double>(clock::now() - t1).count();
    if (sol && sol->x == mod(gi.secret, sol->modulus)) ++out.solved;
  }
  out.mean_solve_seconds = instances ? total / instances : 0;
  return out;
}

}  // namespace graphjac
