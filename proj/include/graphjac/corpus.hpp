#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "graphjac/divisor.hpp"
#include "graphjac/graph.hpp"
#include "graphjac/jacobian.hpp"

namespace graphjac {

struct NamedGraph {
  std::string name;
  MultiGraph graph;
};

/// Every connected loopless multigraph with at most `max_vertices` vertices
/// and `max_edges` edges, one per isomorphism class.
std::vector<NamedGraph> small_multigraphs(std::size_t max_vertices,
                                          std::size_t max_edges);

/// small_multigraphs(4, 6) plus C3..C8, K4, K5 and B2..B6.
std::vector<NamedGraph> builtin_corpus();

enum class Family { Cycle, Complete, Banana, Wheel, Random };

Family parse_family(std::string_view name);
std::string_view family_name(Family f);

/// The family member of the given size. `Wheel` is the wheel on `size` rim
/// vertices with one spoke removed (plain wheels never have a cyclic
/// Jacobian). Random graphs are connected with
/// about 3n/2 edges and are redrawn until their Jacobian is cyclic.
MultiGraph make_family_graph(Family f, std::size_t size, std::mt19937_64& rng);

/// Degree-0 divisor with coefficients drawn from [-spread, spread].
Divisor random_divisor(std::size_t n, std::mt19937_64& rng, long spread = 3);
/// D + div(f) for f drawn from [-spread, spread].
Divisor random_lift(const MultiGraph& g, const Divisor& d,
                    std::mt19937_64& rng, long spread = 3);

struct GeneratedInstance {
  MultiGraph graph;
  Divisor base;
  Divisor target;  // secret * base, q-reduced unless a raw lift was asked for
  Integer secret;  // drawn from [0, kappa)
};

GeneratedInstance generate_instance(Family f, std::size_t size,
                                    std::uint64_t seed);
/// Same, against an already analysed graph. With `reduce_target` false the
/// target is secret * base + div(f) for a random f instead of its reduced
/// form, which skips the chip-firing (costly on graphs with thousands of
/// vertices).
GeneratedInstance generate_instance(const JacobianStructure& s,
                                    std::mt19937_64& rng,
                                    bool reduce_target = true);

struct BenchResult {
  std::size_t n = 0;
  std::size_t instances = 0;
  std::size_t solved = 0;
  double precompute_seconds = 0;
  double mean_solve_seconds = 0;
};

/// Times analyze() on the family graph, then dlp_cyclic over `instances`
/// random instances.
BenchResult bench_dlp(Family f, std::size_t size, std::size_t instances,
                      std::uint64_t seed);

}  // namespace graphjac
