#include "graphjac/jacobian.hpp"

#include <stdexcept>

namespace graphjac {

namespace {

void require_degree_zero(const Divisor& d) {
  if (!is_zero(degree(d)))
    throw Error(ErrorCode::NonZeroDegree,
                "expected a degree-0 divisor, got degree " +
                    degree(d).get_str());
}

void check_size(const JacobianStructure& s, const Divisor& d) {
  if (d.size() != s.graph().vertex_count())
    throw Error(ErrorCode::DimensionMismatch,
                "divisor length != vertex count");
}

}  // namespace

Divisor JacobianStructure::reduce(const Divisor& d) const {
  check_size(*this, d);
  return dhar_reduce(graph_, d, base_vertex, inverse_.numerators(),
                     inverse_.denominator());
}

bool JacobianStructure::is_principal(const Divisor& d) const {
  check_size(*this, d);
  if (!is_zero(degree(d))) return false;
  return solve_integer(snf_, d.values()).has_value();
}

bool JacobianStructure::equivalent(const Divisor& a, const Divisor& b) const {
  check_size(*this, a);
  check_size(*this, b);
  const Divisor diff = a - b;
  if (!is_zero(degree(diff))) return false;
  // L = L_(i) solves Q f = diff with f(i) = 0; every other rational solution
  // differs by a constant, so an integral one exists iff this one is integral.
  const IntVector f = inverse_.numerators() * diff.values();
  for (const auto& x : f)
    if (!mpz_divisible_p(x.get_mpz_t(), inverse_.denominator().get_mpz_t()))
      return false;
  return true;
}

Integer spanning_tree_count(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  return determinant(principal_minor(laplacian(g), n - 1));
}

JacobianStructure analyze(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  SmithDecomposition snf = smith_normal_form(laplacian(g));
  const std::vector<Integer> diag = snf.diagonal();
  std::size_t zeros = 0;
  for (const auto& d : diag) zeros += is_zero(d) ? 1 : 0;
  if (zeros != 1)
    throw std::logic_error("Laplacian rank is not n-1");

  JacobianStructure s(g, std::move(snf), gen_inverse_minor(g, n - 1));

  // U Q V = D, so Q V e_i = d_i U^{-1} e_i: column i of U^{-1} is
  // Q (V e_i) / d_i, and it has order d_i in Z^n / im Q.
  IntVector col(n);
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] <= 1) continue;
    for (std::size_t r = 0; r < n; ++r) col[r] = s.snf_.V(r, i);
    IntVector w = laplacian_apply(g, col);
    for (auto& x : w) {
      if (!mpz_divisible_p(x.get_mpz_t(), diag[i].get_mpz_t()))
        throw std::logic_error("Smith generator not divisible");
      x /= diag[i];
    }
    s.factors_.push_back(diag[i]);
    s.generators_.push_back(s.reduce(Divisor(std::move(w))));
  }

  for (const auto& d : s.factors_) s.order_ *= d;
  const Integer kappa = spanning_tree_count(g);
  if (kappa != s.order_)
    throw std::logic_error("invariant factor product " + s.order_.get_str() +
                           " != spanning tree count " + kappa.get_str());

  for (std::size_t i = 0; i < s.generators_.size(); ++i) {
    const Divisor& gen = s.generators_[i];
    const Integer& d = s.factors_[i];
    bool ok = !is_zero(degree(gen)) ? false : s.is_principal(d * gen);
    for (const auto& p : prime_divisors(d))
      ok = ok && !s.is_principal(Integer(d / p) * gen);
    if (s.is_cyclic() && s.pair(gen, gen).denominator() != d) ok = false;
    if (!ok)
      throw std::logic_error("generator " + std::to_string(i) +
                             " does not have order " + d.get_str());
  }
  return s;
}

Integer element_order(const JacobianStructure& s, const Divisor& d) {
  check_size(s, d);
  if (!s.is_cyclic())
    throw Error(ErrorCode::NotCyclic,
                "element_order needs a cyclic Jacobian; use order_general");
  require_degree_zero(d);
  if (s.generators().empty()) return 1;
  return s.pair(d, s.generators().front()).denominator();
}

Integer order_general(const JacobianStructure& s, const Divisor& d) {
  check_size(s, d);
  require_degree_zero(d);
  Integer order = 1;
  for (const auto& gen : s.generators())
    order = lcm(order, s.pair(d, gen).denominator());
  bool ok = s.is_principal(order * d);
  if (order > 1)
    for (const auto& p : prime_divisors(order))
      ok = ok && !s.is_principal(Integer(order / p) * d);
  if (!ok)
    throw std::logic_error("pairing order " + order.get_str() +
                           " fails principality check");
  return order;
}

Divisor class_add(const JacobianStructure& s, const Divisor& a,
                  const Divisor& b) {
  check_size(s, a);
  check_size(s, b);
  require_degree_zero(a);
  require_degree_zero(b);
  return s.reduce(a + b);
}

Divisor class_scale(const JacobianStructure& s, const Divisor& d,
                    const Integer& k) {
  check_size(s, d);
  require_degree_zero(d);
  return s.reduce(k * d);
}

}  // namespace graphjac
