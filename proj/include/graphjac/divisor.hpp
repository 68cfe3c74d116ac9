#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphjac/bigint.hpp"
#include "graphjac/graph.hpp"

namespace graphjac {

/// Integer vector indexed by the vertices of a graph. The tag keeps divisors
/// and vertex functions from being mixed up.
template <class Tag>
class VertexVector {
 public:
  VertexVector() = default;
  explicit VertexVector(std::size_t n) : c_(n) {}
  explicit VertexVector(IntVector c) : c_(std::move(c)) {}
  VertexVector(std::initializer_list<long> init) {
    for (long x : init) c_.emplace_back(x);
  }

  std::size_t size() const noexcept { return c_.size(); }
  Integer& operator[](std::size_t v) { return c_[v]; }
  const Integer& operator[](std::size_t v) const { return c_[v]; }
  const IntVector& values() const noexcept { return c_; }

  VertexVector& operator+=(const VertexVector& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  VertexVector& operator-=(const VertexVector& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  VertexVector& operator*=(const Integer& k) {
    for (auto& x : c_) x *= k;
    return *this;
  }
  friend VertexVector operator+(VertexVector a, const VertexVector& b) {
    return a += b;
  }
  friend VertexVector operator-(VertexVector a, const VertexVector& b) {
    return a -= b;
  }
  friend VertexVector operator-(VertexVector a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend VertexVector operator*(const Integer& k, VertexVector a) {
    return a *= k;
  }

  bool is_zero() const {
    for (const auto& x : c_)
      if (sgn(x) != 0) return false;
    return true;
  }

  bool operator==(const VertexVector&) const = default;

 private:
  void check(const VertexVector& o) const {
    if (o.c_.size() != c_.size())
      throw Error(ErrorCode::DimensionMismatch, "vertex vector lengths differ");
  }
  IntVector c_;
};

struct DivisorTag;
struct FunctionTag;
using Divisor = VertexVector<DivisorTag>;
using VertexFunction = VertexVector<FunctionTag>;

Integer degree(const Divisor& d);

/// div(f): the coefficient at v is the sum over edges {v,w} of f(v) - f(w).
Divisor div_of_function(const MultiGraph& g, const VertexFunction& f);

/// f with div(f) == d, or nullopt when d is not principal.
std::optional<VertexFunction> is_principal(const MultiGraph& g,
                                           const Divisor& d);

/// Dhar's burning test: true iff d is nonnegative away from q and no
/// nonempty subset of V \ {q} can fire without going negative.
bool is_q_reduced(const MultiGraph& g, const Divisor& d, Vertex q);

/// The unique q-reduced divisor equivalent to d, by chip-firing only.
Divisor dhar_reduce(const MultiGraph& g, const Divisor& d, Vertex q);

/// Same result as dhar_reduce, but first moves d by one principal divisor
/// computed from a generalized inverse L = numerators / denominator of the
/// Laplacian, after which every coefficient off q lies in [1, 2 deg v).
/// Burning then only has O(m) chips left to move, which keeps the cost
/// polynomial on large graphs.
Divisor dhar_reduce(const MultiGraph& g, const Divisor& d, Vertex q,
                    const IntegerMatrix& numerators,
                    const Integer& denominator);

/// D1 ~ D2. Decided by comparing q-reduced forms; `is_principal` on the
/// difference is the independent route used in tests.
bool equivalent(const MultiGraph& g, const Divisor& d1, const Divisor& d2);

// "1,-1,0"
Divisor parse_divisor(std::string_view text);
std::string format_divisor(const Divisor& d);

}  // namespace graphjac
