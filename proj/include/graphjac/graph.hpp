#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphjac/matrix.hpp"

namespace graphjac {

using Vertex = std::size_t;

struct Neighbor {
  Vertex vertex;
  std::uint64_t multiplicity;
  bool operator==(const Neighbor&) const = default;
};

/// Finite, loopless, connected multigraph on vertices 0..n-1. Parallel edges
/// are stored as a multiplicity per adjacent pair. Immutable once built.
class MultiGraph {
 public:
  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::uint64_t edge_count() const noexcept { return edge_count_; }

  std::uint64_t degree(Vertex v) const { return degree_[v]; }
  std::uint64_t multiplicity(Vertex u, Vertex v) const;
  /// Neighbours of v in increasing vertex order.
  const std::vector<Neighbor>& neighbors(Vertex v) const {
    return adjacency_[v];
  }
  /// Each adjacent pair once, u < v, with its multiplicity.
  std::vector<std::pair<std::pair<Vertex, Vertex>, std::uint64_t>> edges()
      const;

  bool operator==(const MultiGraph&) const = default;

 private:
  friend MultiGraph build_graph(std::size_t,
                                const std::vector<std::pair<Vertex, Vertex>>&);
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<std::uint64_t> degree_;
  std::uint64_t edge_count_ = 0;
};

/// Throws Error{LoopEdge, VertexOutOfRange, Disconnected}.
MultiGraph build_graph(std::size_t n,
                       const std::vector<std::pair<Vertex, Vertex>>& edges);

IntegerMatrix laplacian(const MultiGraph& g);

/// Q * x, using adjacency rather than the dense Laplacian.
IntVector laplacian_apply(const MultiGraph& g, const IntVector& x);

// Text format: "n m" on the first content line, then m lines "u v".
// Blank lines and lines starting with '#' are ignored.
MultiGraph parse_graph(std::string_view text);
MultiGraph read_graph_file(const std::string& path);
std::string format_graph(const MultiGraph& g);

namespace families {
MultiGraph cycle(std::size_t n);     // C_n, n >= 3 (n = 2 gives B_2)
MultiGraph complete(std::size_t n);  // K_n
MultiGraph banana(std::uint64_t m);  // B_m: two vertices, m parallel edges
MultiGraph wheel(std::size_t n);     // hub 0 joined to the cycle 1..n
/// The wheel with the spoke to vertex 1 removed; its Jacobian is cyclic.
MultiGraph wheel_minus_spoke(std::size_t n);
MultiGraph path(std::size_t n);
}  // namespace families

}  // namespace graphjac
