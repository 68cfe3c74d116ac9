#include "graphjac/pairing.hpp"

#include <stdexcept>

namespace graphjac {

PairingValue::PairingValue(const Rational& r) : value_(r) {
  value_.canonicalize();
  value_ -= graphjac::floor(value_);
}

PairingValue PairingValue::parse(std::string_view text) {
  Rational r;
  const std::string s(text);
  if (s.find('/') == std::string::npos || r.set_str(s, 10) != 0 ||
      sgn(r.get_den()) == 0)
    throw Error(ErrorCode::ParseError, "bad pairing value '" + s + "'");
  r.canonicalize();
  return PairingValue(r);
}

bool is_generalized_inverse(const MultiGraph& g, const IntegerMatrix& num,
                            const Integer& den) {
  const std::size_t n = g.vertex_count();
  if (num.rows() != n || num.cols() != n || sgn(den) == 0) return false;
  const IntegerMatrix q = laplacian(g);
  // Q N Q == (Q (Q N)^T)^T because Q is symmetric; both products keep the
  // sparse Laplacian on the left.
  const IntegerMatrix qn = q * num;
  const IntegerMatrix qnq = q * qn.transpose();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (qnq(j, i) != den * q(i, j)) return false;
  return true;
}

GeneralizedInverse::GeneralizedInverse(const MultiGraph& g, IntegerMatrix num,
                                       Integer den, Kind kind,
                                       std::optional<Vertex> deleted)
    : numerators_(std::move(num)),
      denominator_(std::move(den)),
      kind_(kind),
      deleted_(deleted) {
  if (!is_generalized_inverse(g, numerators_, denominator_))
    throw std::invalid_argument("not a generalized inverse of the Laplacian");
}

RationalMatrix GeneralizedInverse::matrix() const {
  return ScaledInverse{numerators_, denominator_, 0}.to_rational();
}

std::string GeneralizedInverse::describe() const {
  switch (kind_) {
    case Kind::DeletedMinor: return "minor:" + std::to_string(*deleted_);
    case Kind::MoorePenrose: return "mp";
    case Kind::Custom: return "custom";
  }
  return "custom";
}

GeneralizedInverse GeneralizedInverse::from_matrix(const MultiGraph& g,
                                                   const RationalMatrix& l) {
  Integer den = 1;
  for (std::size_t i = 0; i < l.rows(); ++i)
    for (std::size_t j = 0; j < l.cols(); ++j)
      den = lcm(den, l(i, j).get_den());
  IntegerMatrix num(l.rows(), l.cols());
  for (std::size_t i = 0; i < l.rows(); ++i)
    for (std::size_t j = 0; j < l.cols(); ++j)
      num(i, j) = l(i, j).get_num() * (den / l(i, j).get_den());
  return GeneralizedInverse(g, std::move(num), std::move(den), Kind::Custom,
                            std::nullopt);
}

GeneralizedInverse gen_inverse_minor(const MultiGraph& g, Vertex i) {
  const std::size_t n = g.vertex_count();
  if (i >= n) throw Error(ErrorCode::VertexOutOfRange, "minor index");
  const ScaledInverse inv = invert_scaled(principal_minor(laplacian(g), i));
  IntegerMatrix padded(n, n);
  for (std::size_t r = 0, mr = 0; r < n; ++r) {
    if (r == i) continue;
    for (std::size_t c = 0, mc = 0; c < n; ++c) {
      if (c == i) continue;
      padded(r, c) = inv.numerators(mr, mc++);
    }
    ++mr;
  }
  return GeneralizedInverse(g, std::move(padded), inv.denominator,
                            GeneralizedInverse::Kind::DeletedMinor, i);
}

GeneralizedInverse moore_penrose(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  const Integer nn = static_cast<unsigned long>(n);
  // Q + J/n == M/n with M = nQ + J integral, so (Q + J/n)^{-1} = n M^{-1}.
  IntegerMatrix m = laplacian(g);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = nn * m(i, j) + 1;
  const ScaledInverse inv = invert_scaled(m);
  // Q+ = n N/d - J/n = (n^2 N - d J) / (n d)
  IntegerMatrix num(n, n);
  Integer den = nn * inv.denominator;
  Integer content = den;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      num(i, j) = nn * nn * inv.numerators(i, j) - inv.denominator;
      content = gcd(content, num(i, j));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (auto& x : num.row(i)) x /= content;
  den /= content;
  return GeneralizedInverse(g, std::move(num), std::move(den),
                            GeneralizedInverse::Kind::MoorePenrose,
                            std::nullopt);
}

namespace {

void require_degree_zero(const Divisor& d, const char* which) {
  if (!is_zero(degree(d)))
    throw Error(ErrorCode::NonZeroDegree,
                std::string(which) + " has degree " + degree(d).get_str() +
                    ", pairing needs degree 0");
}

}  // namespace

PairingValue monodromy_pairing(const Divisor& d1, const Divisor& d2,
                               const GeneralizedInverse& l) {
  const std::size_t n = l.numerators().rows();
  if (d1.size() != n || d2.size() != n)
    throw Error(ErrorCode::DimensionMismatch,
                "divisor length != generalized inverse size");
  require_degree_zero(d1, "first divisor");
  require_degree_zero(d2, "second divisor");
  const IntVector ld2 = l.numerators() * d2.values();
  Integer s = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (!is_zero(d1[i])) s += d1[i] * ld2[i];
  return PairingValue(Rational(s, l.denominator()));
}

PairingValue pairing_by_definition(const SmithDecomposition& laplacian_snf,
                                   const Divisor& d1, const Divisor& d2) {
  require_degree_zero(d1, "first divisor");
  require_degree_zero(d2, "second divisor");
  const Integer m2 = cokernel_order(laplacian_snf, d2.values());
  if (sgn(m2) <= 0)
    throw std::logic_error("degree-zero divisor of infinite order");
  const Divisor scaled = m2 * d2;
  const auto f2 = solve_integer(laplacian_snf, scaled.values());
  if (!f2) throw std::logic_error("order multiple of a divisor not principal");
  Integer s = 0;
  for (std::size_t v = 0; v < d1.size(); ++v) s += d1[v] * (*f2)[v];
  return PairingValue(Rational(s, m2));
}

PairingValue pairing_by_definition(const MultiGraph& g, const Divisor& d1,
                                   const Divisor& d2) {
  if (d1.size() != g.vertex_count() || d2.size() != g.vertex_count())
    throw Error(ErrorCode::DimensionMismatch,
                "divisor length != vertex count");
  return pairing_by_definition(smith_normal_form(laplacian(g)), d1, d2);
}

}  // namespace graphjac
