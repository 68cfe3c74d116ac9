#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "graphjac/bigint.hpp"
#include "graphjac/divisor.hpp"
#include "graphjac/graph.hpp"
#include "graphjac/linalg.hpp"
#include "graphjac/matrix.hpp"

namespace graphjac {

/// Element of Q/Z, stored as its representative in [0, 1).
class PairingValue {
 public:
  PairingValue() = default;
  explicit PairingValue(const Rational& r);

  const Rational& value() const noexcept { return value_; }
  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }
  bool is_zero() const { return sgn(value_) == 0; }

  /// "p/q" in lowest terms with 0 <= p < q.
  std::string to_string() const { return graphjac::to_string(value_); }
  static PairingValue parse(std::string_view text);

  friend PairingValue operator+(const PairingValue& a, const PairingValue& b) {
    return PairingValue(a.value_ + b.value_);
  }
  friend PairingValue operator-(const PairingValue& a) {
    return PairingValue(Rational(-a.value_));
  }
  friend PairingValue operator*(const Integer& k, const PairingValue& a) {
    return PairingValue(Rational(k) * a.value_);
  }
  bool operator==(const PairingValue& o) const { return value_ == o.value_; }

 private:
  Rational value_ = 0;
};

/// A matrix L with Q L Q == Q for the Laplacian Q of some graph, held as an
/// integer matrix over a common positive denominator. The defining identity
/// is checked when one is built.
class GeneralizedInverse {
 public:
  enum class Kind { DeletedMinor, MoorePenrose, Custom };

  const IntegerMatrix& numerators() const noexcept { return numerators_; }
  const Integer& denominator() const noexcept { return denominator_; }
  RationalMatrix matrix() const;
  Kind kind() const noexcept { return kind_; }
  std::optional<Vertex> deleted_vertex() const noexcept { return deleted_; }
  /// "minor:<i>", "mp" or "custom".
  std::string describe() const;

  /// Wraps an arbitrary candidate; throws std::invalid_argument unless it is
  /// a generalized inverse of g's Laplacian.
  static GeneralizedInverse from_matrix(const MultiGraph& g,
                                        const RationalMatrix& l);

 private:
  friend GeneralizedInverse gen_inverse_minor(const MultiGraph&, Vertex);
  friend GeneralizedInverse moore_penrose(const MultiGraph&);
  GeneralizedInverse(const MultiGraph& g, IntegerMatrix num, Integer den,
                     Kind kind, std::optional<Vertex> deleted);

  IntegerMatrix numerators_;
  Integer denominator_;
  Kind kind_;
  std::optional<Vertex> deleted_;
};

/// Exact check of Q (N/den) Q == Q.
bool is_generalized_inverse(const MultiGraph& g, const IntegerMatrix& num,
                            const Integer& den);

/// Q_i^{-1} (Laplacian with row and column i deleted) padded back to n x n
/// with a zero row and column at i.
GeneralizedInverse gen_inverse_minor(const MultiGraph& g, Vertex i);

/// (Q + J/n)^{-1} - J/n.
GeneralizedInverse moore_penrose(const MultiGraph& g);

/// [D1]^T L [D2] mod Z. Throws NonZeroDegree unless both have degree 0.
PairingValue monodromy_pairing(const Divisor& d1, const Divisor& d2,
                               const GeneralizedInverse& l);

/// (1/m) sum_v D1(v) f(v) mod Z, where m is the order of D2's class and
/// div(f) == m D2. Uses only integer solving, no generalized inverse.
PairingValue pairing_by_definition(const MultiGraph& g, const Divisor& d1,
                                   const Divisor& d2);
/// As above with the Laplacian's Smith decomposition supplied.
PairingValue pairing_by_definition(const SmithDecomposition& laplacian_snf,
                                   const Divisor& d1, const Divisor& d2);

}  // namespace graphjac
