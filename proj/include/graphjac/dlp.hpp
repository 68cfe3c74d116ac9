#pragma once

#include <optional>

#include "graphjac/bigint.hpp"
#include "graphjac/divisor.hpp"
#include "graphjac/jacobian.hpp"

namespace graphjac {

/// Find x with x [base] == [target] in Jac(G).
struct DlpInstance {
  const JacobianStructure& jacobian;
  Divisor base;
  Divisor target;
};

/// x mod `modulus`, where modulus is the order of the base class.
struct DlpSolution {
  Integer x;
  Integer modulus;

  bool operator==(const DlpSolution&) const = default;
};

/// Pairing attack on a cyclic Jacobian: with g the generator,
/// <base, g> = a/b and <target, g> = r', the class order is b, so
/// x == (b r') a^{-1} (mod b). Returns nullopt when target is not a multiple
/// of base. Throws NotCyclic, NonZeroDegree.
std::optional<DlpSolution> dlp_cyclic(const DlpInstance& inst);

/// Any Jacobian: one congruence x a_i == c_i (mod b_i) per generator g_i,
/// merged by CRT into x mod ord(base). Returns nullopt when the congruences
/// are inconsistent or the result does not verify.
std::optional<DlpSolution> dlp_general(const DlpInstance& inst);

/// x [base] == [target], 0 <= x < modulus, and modulus == ord([base]).
bool verify_solution(const DlpInstance& inst, const DlpSolution& sol);

/// Solution of x == r1 (mod m1), x == r2 (mod m2) as (r, lcm), or nullopt
/// when they are incompatible. Moduli must be positive.
std::optional<DlpSolution> crt_merge(const DlpSolution& a,
                                     const DlpSolution& b);

}  // namespace graphjac
