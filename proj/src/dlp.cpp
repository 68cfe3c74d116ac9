#include "graphjac/dlp.hpp"

namespace graphjac {

namespace {

void check_instance(const DlpInstance& inst) {
  const std::size_t n = inst.jacobian.graph().vertex_count();
  if (inst.base.size() != n || inst.target.size() != n)
    throw Error(ErrorCode::DimensionMismatch,
                "divisor length != vertex count");
  if (!is_zero(degree(inst.base)) || !is_zero(degree(inst.target)))
    throw Error(ErrorCode::NonZeroDegree,
                "DLP inputs must have degree 0");
}

// x <a/b> == r' in Q/Z with gcd(a, b) == 1. Multiplying by b clears both
// denominators exactly when b r' is an integer c; then x == c a^{-1} mod b.
std::optional<DlpSolution> solve_one(const PairingValue& r,
                                     const PairingValue& r_target) {
  const Integer& b = r.denominator();
  const Rational scaled = Rational(b) * r_target.value();
  if (scaled.get_den() != 1) return std::nullopt;
  const Integer c = scaled.get_num();
  if (b == 1) return DlpSolution{0, 1};
  return DlpSolution{mod(c * inverse_mod(r.numerator(), b), b), b};
}

}  // namespace

std::optional<DlpSolution> crt_merge(const DlpSolution& a,
                                     const DlpSolution& b) {
  // x = a.x + a.m t;  a.m t == b.x - a.x (mod b.m)
  const ExtendedGcd e = extended_gcd(a.modulus, b.modulus);
  const Integer diff = b.x - a.x;
  if (!mpz_divisible_p(diff.get_mpz_t(), e.g.get_mpz_t())) return std::nullopt;
  const Integer m2 = b.modulus / e.g;
  const Integer t = mod((diff / e.g) * e.s, m2);
  const Integer l = a.modulus * m2;
  return DlpSolution{mod(a.x + a.modulus * t, l), l};
}

std::optional<DlpSolution> dlp_cyclic(const DlpInstance& inst) {
  const JacobianStructure& s = inst.jacobian;
  if (!s.is_cyclic())
    throw Error(ErrorCode::NotCyclic,
                "Jacobian is not cyclic (" +
                    std::to_string(s.invariant_factors().size()) +
                    " invariant factors); use dlp_general");
  check_instance(inst);
  std::optional<DlpSolution> sol;
  if (s.generators().empty()) {
    sol = DlpSolution{0, 1};
  } else {
    const Divisor& g = s.generators().front();
    sol = solve_one(s.pair(inst.base, g), s.pair(inst.target, g));
  }
  if (!sol) return std::nullopt;
  if (!s.equivalent(sol->x * inst.base, inst.target)) return std::nullopt;
  return sol;
}

std::optional<DlpSolution> dlp_general(const DlpInstance& inst) {
  check_instance(inst);
  const JacobianStructure& s = inst.jacobian;
  DlpSolution acc{0, 1};
  for (const auto& g : s.generators()) {
    const auto part = solve_one(s.pair(inst.base, g), s.pair(inst.target, g));
    if (!part) return std::nullopt;
    const auto merged = crt_merge(acc, *part);
    if (!merged) return std::nullopt;
    acc = *merged;
  }
  if (!s.equivalent(acc.x * inst.base, inst.target)) return std::nullopt;
  return acc;
}

bool verify_solution(const DlpInstance& inst, const DlpSolution& sol) {
  check_instance(inst);
  const JacobianStructure& s = inst.jacobian;
  if (sgn(sol.x) < 0 || sol.x >= sol.modulus) return false;
  if (sol.modulus != order_general(s, inst.base)) return false;
  return s.reduce(sol.x * inst.base - inst.target).is_zero();
}

}  // namespace graphjac
