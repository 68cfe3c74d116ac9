#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "graphjac/bigint.hpp"
#include "graphjac/divisor.hpp"
#include "graphjac/graph.hpp"

// Deliberately naive ground truth for small graphs. Nothing here uses the
// Laplacian's Smith form, determinants or generalized inverses.
namespace graphjac::oracle {

/// Jac(G) listed element by element as q-reduced divisors (q = 0), with the
/// full addition table.
class GroupTable {
 public:
  const MultiGraph& graph() const noexcept { return graph_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Divisor>& elements() const noexcept { return elements_; }
  std::size_t zero_index() const noexcept { return zero_; }
  std::size_t add(std::size_t i, std::size_t j) const {
    return table_[i * size() + j];
  }
  std::size_t negate(std::size_t i) const;
  std::size_t scale(std::size_t i, std::uint64_t k) const;
  std::uint64_t order(std::size_t i) const { return orders_[i]; }
  /// Index of D's class; D must have degree 0.
  std::size_t index_of(const Divisor& d) const;

 private:
  friend GroupTable enumerate_group(const MultiGraph&, std::uint64_t);
  explicit GroupTable(MultiGraph g) : graph_(std::move(g)) {}

  MultiGraph graph_;
  std::vector<Divisor> elements_;
  std::map<std::vector<long>, std::size_t> index_;
  std::vector<std::size_t> table_;
  std::vector<std::uint64_t> orders_;
  std::size_t zero_ = 0;
};

/// Enumerates all degree-0 q-reduced divisors: off q each coefficient lies in
/// [0, deg v - 1], the q coefficient is forced by degree 0, and Dhar's
/// burning test keeps the reduced ones. Throws TooLarge past `bound`
/// elements.
GroupTable enumerate_group(const MultiGraph& g, std::uint64_t bound = 2000);

/// Smallest k >= 0 with k D ~ D', scanning k < ord(D).
std::optional<std::uint64_t> brute_force_dlp(const GroupTable& table,
                                             const Divisor& d,
                                             const Divisor& d_prime);

/// Spanning trees counted over all (n-1)-edge subsets. Throws TooLarge when
/// the graph has more than `max_edges` edges.
std::uint64_t spanning_trees_by_enumeration(const MultiGraph& g,
                                            std::size_t max_edges = 22);

/// Smallest k >= 1 with k D principal, by repeated addition in the table.
std::uint64_t brute_force_order(const GroupTable& table, const Divisor& d);

}  // namespace graphjac::oracle
