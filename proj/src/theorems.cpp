#include "nilrank/theorems.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace nilrank {
namespace {

void require_six_nonzero(std::span<const Integer> a) {
  if (a.size() != 6) {
    throw InvalidInput("expected 6 exponents, got " + std::to_string(a.size()));
  }
  if (std::any_of(a.begin(), a.end(), [](const Integer& x) { return x == 0; })) {
    throw InvalidInput("all exponents must be nonzero");
  }
}

}  // namespace

WitnessPair make_witness(CyclicCentralSubgroup subgroup, GroupElement alpha1,
                         GroupElement alpha2) {
  const std::size_t n = subgroup.rank();
  const auto l = membership_in_C(
      GroupElement::central(n, commutator_exponents(alpha1, alpha2)), subgroup);
  if (!l) {
    throw InvalidInput("commutator of the pair is not in C");
  }
  KernelReport kernel = kernel_rank(alpha1, alpha2, subgroup);
  return WitnessPair{std::move(subgroup), std::move(alpha1), std::move(alpha2),
                     *l, std::move(kernel)};
}

CyclicCentralSubgroup rank3_subgroup(const Integer& a1, const Integer& a2,
                                     const Integer& a3) {
  // Lexicographic order is (1,2), (1,3), (2,3).
  return CyclicCentralSubgroup(3, IntVec{a1, a3, a2});
}

TheoremAResult theorem_a_construct(const Integer& a1, const Integer& a2,
                                   const Integer& a3) {
  if (a1 == 0 || a2 == 0 || a3 == 0) {
    throw InvalidInput("a1, a2, a3 must all be nonzero");
  }
  const Integer g12 = gcd_many({a1, a2});
  const Integer g13 = gcd_many({a1, a3});
  const Integer g23 = gcd_many({a2, a3});
  const Integer g = gcd_many({a1, a2, a3});

  const auto solution =
      solve_linear_2var(a1 * g23 / g, a2 * g13 / g, a3 * g12 / g);
  if (!solution) {
    throw InternalError("construction equation unsolvable for " +
                        to_string(IntVec{a1, a2, a3}));
  }
  const Integer& w1 = solution->x;
  const Integer& w2 = solution->y;

  GroupElement alpha1 = GroupElement::from_generators({g13 * w2, g12, g23 * w1});
  GroupElement alpha2 = GroupElement::from_generators({-a1 / g12, 0, a2 / g12});

  WitnessPair witness =
      make_witness(rank3_subgroup(a1, a2, a3), std::move(alpha1), std::move(alpha2));
  if (witness.l != 1 || witness.kernel.kernel_rank != 0) {
    throw InternalError("construction failed to certify rank 2 for " +
                        to_string(IntVec{a1, a2, a3}));
  }
  return TheoremAResult{std::move(witness), *solution};
}

Integer pfaffian4(std::span<const Integer> a) {
  if (a.size() != 6) throw InvalidInput("expected 6 exponents");
  return a[0] * a[5] - a[1] * a[4] + a[2] * a[3];
}

ConditionReport theorem_b_condition(std::span<const Integer> a) {
  require_six_nonzero(a);
  const Integer& a12 = a[0];
  const Integer& a13 = a[1];
  const Integer& a14 = a[2];
  const Integer& a23 = a[3];
  const Integer& a24 = a[4];
  const Integer& a34 = a[5];

  ConditionReport report;
  report.quadruple = {1, 2, 3, 4};
  report.lhs_term = a13 * a14 * a23 * a24 + a12 * a13 * a24 * a34;
  report.rhs_term = a12 * a14 * a23 * a34;
  report.holds = report.lhs_term > report.rhs_term;
  report.epsilon = sgn(a12) * sgn(a13) * sgn(a14) * sgn(a23) * sgn(a24) * sgn(a34);
  report.pfaffian = pfaffian4(a);
  return report;
}

Integer det_A(std::span<const Integer> a) {
  require_six_nonzero(a);
  const Integer& a12 = a[0];
  const Integer& a13 = a[1];
  const Integer& a14 = a[2];
  const Integer& a23 = a[3];
  const Integer& a24 = a[4];
  const Integer& a34 = a[5];
  std::array<std::array<Integer, 4>, 4> m{{
      {a23, -a13, a12, 0},
      {a24, -a14, 0, a12},
      {a34, 0, -a14, a13},
      {0, a34, -a24, a23},
  }};

  // Bareiss elimination: every division below is exact.
  int sign_flips = 0;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < 4; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < 4 && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == 4) return 0;
      std::swap(m[k], m[swap_row]);
      ++sign_flips;
    }
    for (std::size_t i = k + 1; i < 4; ++i) {
      for (std::size_t j = k + 1; j < 4; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
      }
      m[i][k] = 0;
    }
    previous = m[k][k];
  }
  return sign_flips % 2 == 0 ? m[3][3] : Integer(-m[3][3]);
}

ConditionCheck theorem_c_check(std::size_t n, std::span<const Integer> a) {
  if (n < 4) {
    throw InvalidInput("the four-index condition needs n >= 4; for n = 3 a "
                       "rank-2 witness always exists (use construct)");
  }
  if (a.size() != pair_count(n)) {
    throw InvalidInput("expected " + std::to_string(pair_count(n)) +
                       " exponents for n = " + std::to_string(n) + ", got " +
                       std::to_string(a.size()));
  }
  if (std::any_of(a.begin(), a.end(), [](const Integer& x) { return x == 0; })) {
    throw InvalidInput("all exponents must be nonzero");
  }

  ConditionCheck check;
  for (std::size_t k1 = 0; k1 < n; ++k1) {
    for (std::size_t k2 = k1 + 1; k2 < n; ++k2) {
      for (std::size_t k3 = k2 + 1; k3 < n; ++k3) {
        for (std::size_t k4 = k3 + 1; k4 < n; ++k4) {
          const std::array<Integer, 6> sub{
              a[pair_index(k1, k2, n)], a[pair_index(k1, k3, n)],
              a[pair_index(k1, k4, n)], a[pair_index(k2, k3, n)],
              a[pair_index(k2, k4, n)], a[pair_index(k3, k4, n)]};
          ConditionReport report = theorem_b_condition(sub);
          report.quadruple = {k1 + 1, k2 + 1, k3 + 1, k4 + 1};
          check.all_hold = check.all_hold && report.holds;
          check.reports.push_back(std::move(report));
        }
      }
    }
  }
  return check;
}

}  // namespace nilrank
