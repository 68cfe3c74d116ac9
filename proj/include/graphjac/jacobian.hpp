#pragma once

#include <vector>

#include "graphjac/bigint.hpp"
#include "graphjac/divisor.hpp"
#include "graphjac/graph.hpp"
#include "graphjac/linalg.hpp"
#include "graphjac/pairing.hpp"

namespace graphjac {

/// Jac(G) = Div^0(G) / Prin(G) together with what is needed to compute in
/// it: invariant factors, one generator per nontrivial factor, the Smith
/// decomposition of the Laplacian and a cached generalized inverse.
///
/// Classes are represented canonically by their q-reduced divisor for the
/// base vertex q = 0.
class JacobianStructure {
 public:
  const MultiGraph& graph() const noexcept { return graph_; }
  /// d_1 | d_2 | ..., every d_i > 1.
  const std::vector<Integer>& invariant_factors() const noexcept {
    return factors_;
  }
  /// generators()[i] has order invariant_factors()[i]; q-reduced.
  const std::vector<Divisor>& generators() const noexcept {
    return generators_;
  }
  const Integer& group_order() const noexcept { return order_; }
  bool is_cyclic() const noexcept { return factors_.size() <= 1; }
  const GeneralizedInverse& inverse() const noexcept { return inverse_; }
  const SmithDecomposition& smith() const noexcept { return snf_; }
  static constexpr Vertex base_vertex = 0;

  /// Canonical q-reduced representative of d's class.
  Divisor reduce(const Divisor& d) const;
  /// Via the Smith decomposition.
  bool is_principal(const Divisor& d) const;
  /// a - b principal, via integrality of L_(i) (a - b). O(n^2), no
  /// chip-firing.
  bool equivalent(const Divisor& a, const Divisor& b) const;
  PairingValue pair(const Divisor& a, const Divisor& b) const {
    return monodromy_pairing(a, b, inverse_);
  }
  Divisor zero() const { return Divisor(graph_.vertex_count()); }

 private:
  friend JacobianStructure analyze(const MultiGraph& g);
  JacobianStructure(MultiGraph g, SmithDecomposition snf,
                    GeneralizedInverse inverse)
      : graph_(std::move(g)), snf_(std::move(snf)), inverse_(std::move(inverse)) {}

  MultiGraph graph_;
  SmithDecomposition snf_;
  GeneralizedInverse inverse_;
  std::vector<Integer> factors_;
  std::vector<Divisor> generators_;
  Integer order_ = 1;
};

/// Builds the structure. Group order is computed twice (product of
/// invariant factors, and the matrix-tree determinant) and every generator's
/// order is re-verified; a disagreement throws std::logic_error.
JacobianStructure analyze(const MultiGraph& g);

/// kappa(G), as the determinant of the Laplacian with the last row and
/// column removed.
Integer spanning_tree_count(const MultiGraph& g);

/// Order of D's class as the reduced denominator of <D, g> for the generator
/// g. Only valid for cyclic groups; throws NotCyclic otherwise.
Integer element_order(const JacobianStructure& s, const Divisor& d);

/// Order of D's class in any Jac(G): lcm of the denominators of <D, g_i>
/// over all generators, confirmed by principality checks.
Integer order_general(const JacobianStructure& s, const Divisor& d);

Divisor class_add(const JacobianStructure& s, const Divisor& a,
                  const Divisor& b);
Divisor class_scale(const JacobianStructure& s, const Divisor& d,
                    const Integer& k);

}  // namespace graphjac
