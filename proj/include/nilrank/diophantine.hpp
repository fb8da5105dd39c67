#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nilrank/group.hpp"

namespace nilrank {

/// Greatest common divisor of a list, always positive. Rejects an empty or
/// all-zero list.
Integer gcd_many(std::span<const Integer> values);
Integer gcd_many(std::initializer_list<Integer> values);

/// One solution of p*x + q*y = r.
struct DiophantineSolution {
  Integer x;
  Integer y;

  friend bool operator==(const DiophantineSolution&,
                         const DiophantineSolution&) = default;
};

/// Solves p*x + q*y = r over the integers. Returns nothing when gcd(p, q)
/// does not divide r; rejects p = q = 0.
///
/// The result is canonical: the extended-Euclid solution shifted along the
/// solution line so that y lies in [0, |p/g|). When p = 0, x = 0; when
/// q = 0, y = 0.
std::optional<DiophantineSolution> solve_linear_2var(const Integer& p,
                                                     const Integer& q,
                                                     const Integer& r);

using Rational = mpq_class;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Basis of the right nullspace { v : M v = 0 } over Q, one vector per free
/// column of the reduced row echelon form. All rows must have `columns`
/// entries.
std::vector<std::vector<Rational>> rational_nullspace(RationalMatrix matrix,
                                                      std::size_t columns);

/// Rank of the lattice of (m_1, m_2) for which alpha_1^{m_1} alpha_2^{m_2}
/// is central modulo C, with vectors spanning it over Q.
struct KernelReport {
  int kernel_rank = 0;
  std::vector<std::array<Integer, 2>> basis;

  friend bool operator==(const KernelReport&, const KernelReport&) = default;
};

/// Same report for any number of elements.
struct CentralityKernel {
  std::size_t kernel_rank = 0;
  std::vector<IntVec> basis;
};

/// Centrality kernel of the subgroup generated by `elements` and the centre.
///
/// For each generator x_k the condition [prod alpha_t^{m_t}, x_k] = z_k^{l_k}
/// (z the generator of C) is linear in (m, l). The rational solution space is
/// projected onto m. Basis vectors are canonical: the reduced echelon basis
/// of the projection, cleared of denominators, made primitive with a positive
/// leading entry, then scaled by the least positive factor that makes the
/// power product genuinely central (integral l_k).
CentralityKernel centrality_kernel(std::span<const GroupElement> elements,
                                   const CyclicCentralSubgroup& subgroup);

/// centrality_kernel specialised to a pair. kernel_rank = 0 certifies that
/// the images of alpha1 and alpha2 have torsion-free rank 2 over the centre.
KernelReport kernel_rank(const GroupElement& alpha1,
                         const GroupElement& alpha2,
                         const CyclicCentralSubgroup& subgroup);

}  // namespace nilrank
