#include "graphjac/bigint.hpp"

#include <stdexcept>

#include "graphjac/error.hpp"

namespace graphjac {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::LoopEdge: return "loop-edge";
    case ErrorCode::Disconnected: return "disconnected";
    case ErrorCode::VertexOutOfRange: return "vertex-out-of-range";
    case ErrorCode::NotSquare: return "not-square";
    case ErrorCode::DimensionMismatch: return "dimension-mismatch";
    case ErrorCode::Singular: return "singular";
    case ErrorCode::NonZeroDegree: return "nonzero-degree";
    case ErrorCode::NotCyclic: return "not-cyclic";
    case ErrorCode::TooLarge: return "too-large";
    case ErrorCode::ParseError: return "parse-error";
  }
  return "unknown";
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer floor(const Rational& r) {
  return floor_div(r.get_num(), r.get_den());
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  ExtendedGcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return r;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  if (m == 1) return 0;
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error("inverse_mod: " + a.get_str() +
                            " is not invertible mod " + m.get_str());
  return mod(inv, m);
}

std::vector<Integer> prime_divisors(Integer n) {
  if (n < 0) n = -n;
  if (n == 0) throw std::domain_error("prime_divisors: zero");
  std::vector<Integer> primes;
  for (Integer p = 2; p * p <= n; ++p) {
    if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      primes.push_back(p);
      while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace graphjac
