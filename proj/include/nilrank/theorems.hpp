#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "nilrank/diophantine.hpp"
#include "nilrank/group.hpp"

namespace nilrank {

/// A pair alpha1, alpha2 with [alpha1, alpha2] = z^l for z the generator of
/// C, together with its centrality kernel. kernel.kernel_rank == 0 makes it a
/// rank-2 witness: <alpha1, alpha2, centre> is abelian modulo C and has
/// torsion-free rank 2 over the centre.
struct WitnessPair {
  CyclicCentralSubgroup subgroup;
  GroupElement alpha1;
  GroupElement alpha2;
  Integer l;
  KernelReport kernel;
};

/// Recomputes l and the kernel of (alpha1, alpha2). Throws InvalidInput if
/// the commutator is not in C.
WitnessPair make_witness(CyclicCentralSubgroup subgroup, GroupElement alpha1,
                         GroupElement alpha2);

/// Rank-3 subgroup C for exponents given in the order
/// [x1,x2]^{a1} [x2,x3]^{a2} [x1,x3]^{a3}.
CyclicCentralSubgroup rank3_subgroup(const Integer& a1, const Integer& a2,
                                     const Integer& a3);

/// Explicit rank-2 witness for F_3 / <[x1,x2]^{a1} [x2,x3]^{a2} [x1,x3]^{a3}>.
///
/// With g_ij = gcd(a_i, a_j), g = gcd(a1, a2, a3) and (w1, w2) the canonical
/// solution of (a1 g23/g) X + (a2 g13/g) Y = a3 g12/g:
///   alpha1 = x1^{g13 w2} x2^{g12} x3^{g23 w1},
///   alpha2 = x1^{-a1/g12} x3^{a2/g12},
/// so that [alpha1, alpha2] is exactly the generator of C (l = 1).
struct TheoremAResult {
  WitnessPair witness;
  DiophantineSolution diophantine;
};

TheoremAResult theorem_a_construct(const Integer& a1, const Integer& a2,
                                   const Integer& a3);

/// Four-index necessary condition for a rank-2 witness, evaluated on the six
/// exponents (a_{k1k2}, a_{k1k3}, a_{k1k4}, a_{k2k3}, a_{k2k4}, a_{k3k4}).
struct ConditionReport {
  std::array<std::size_t, 4> quadruple{};  // 1-based, increasing
  Integer lhs_term;  // a13 a14 a23 a24 + a12 a13 a24 a34
  Integer rhs_term;  // a12 a14 a23 a34
  int epsilon = 1;   // sign of the product of the six exponents
  bool holds = false;  // strict: lhs_term > rhs_term
  Integer pfaffian;  // a12 a34 - a13 a24 + a14 a23
};

/// Entries ordered (a12, a13, a14, a23, a24, a34); all must be nonzero.
ConditionReport theorem_b_condition(std::span<const Integer> a);

/// Determinant of the 4x4 integer matrix
///   [ a23 -a13  a12   0  ]
///   [ a24 -a14   0   a12 ]
///   [ a34   0  -a14  a13 ]
///   [  0   a34 -a24  a23 ]
/// computed by fraction-free elimination.
Integer det_A(std::span<const Integer> a);

/// 4x4 Pfaffian a12 a34 - a13 a24 + a14 a23.
Integer pfaffian4(std::span<const Integer> a);

struct ConditionCheck {
  std::vector<ConditionReport> reports;  // lexicographic by quadruple
  bool all_hold = true;
};

/// Evaluates the four-index condition on every 4-subset of {1..n}, each with
/// its own six exponents and sign. Requires n >= 4 and all a_ij nonzero.
ConditionCheck theorem_c_check(std::size_t n, std::span<const Integer> a);

}  // namespace nilrank
