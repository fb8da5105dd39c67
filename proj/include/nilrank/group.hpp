#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "nilrank/integer.hpp"

/// Normal-form arithmetic in the free nilpotent group F_n of class 2.
///
/// An element is stored as x_1^{e_1} ... x_n^{e_n} * prod_{i<j} [x_i,x_j]^{c_ij}
/// with [x, y] = x^-1 y^-1 x y. The commutators [x_i, x_j] are central, so this
/// representation is the unique normal form. Commutator pairs are always
/// indexed lexicographically: (1,2), (1,3), ..., (1,n), (2,3), ..., (n-1,n).
namespace nilrank {

/// Number of commutator pairs n(n-1)/2.
constexpr std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

/// Lexicographic position of the pair (i, j), 0-based, i < j < n.
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n);

/// Inverse of pair_index.
std::pair<std::size_t, std::size_t> pair_at(std::size_t index, std::size_t n);

class GroupElement {
 public:
  /// Builds an element from its normal form. Requires gen_exps nonempty and
  /// comm_exps of length pair_count(gen_exps.size()).
  GroupElement(IntVec gen_exps, IntVec comm_exps);

  static GroupElement identity(std::size_t n);
  /// The generator x_{k+1} (k is 0-based).
  static GroupElement generator(std::size_t n, std::size_t k);
  /// x_1^{e_1} ... x_n^{e_n} with trivial commutator part.
  static GroupElement from_generators(IntVec gen_exps);
  /// Pure commutator element prod [x_i,x_j]^{c_ij}.
  static GroupElement central(std::size_t n, IntVec comm_exps);

  std::size_t rank() const { return gen_exps_.size(); }
  const IntVec& gen_exps() const { return gen_exps_; }
  const IntVec& comm_exps() const { return comm_exps_; }

  bool is_identity() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  IntVec gen_exps_;
  IntVec comm_exps_;
};

/// The cyclic central subgroup C = < prod_{i<j} [x_i,x_j]^{a_ij} > of F_n.
class CyclicCentralSubgroup {
 public:
  /// Rejects a length mismatch and the zero vector. Zero entries are allowed.
  CyclicCentralSubgroup(std::size_t n, IntVec exponents);

  std::size_t rank() const { return n_; }
  const IntVec& exponents() const { return exponents_; }
  /// a_{i+1, j+1} for 0-based i < j.
  const Integer& at(std::size_t i, std::size_t j) const;
  bool all_nonzero() const;
  GroupElement generator() const;

  friend bool operator==(const CyclicCentralSubgroup&,
                         const CyclicCentralSubgroup&) = default;

 private:
  std::size_t n_;
  IntVec exponents_;
};

GroupElement identity(std::size_t n);
GroupElement mul(const GroupElement& u, const GroupElement& v);
GroupElement inv(const GroupElement& u);
/// u^k for any integer k, in closed form.
GroupElement pow(const GroupElement& u, const Integer& k);

/// Exponents d_ij of [u, v] = prod [x_i,x_j]^{d_ij}, where
/// d_ij = e_i(u) e_j(v) - e_i(v) e_j(u). The commutator parts of u and v do
/// not contribute.
IntVec commutator_exponents(const GroupElement& u, const GroupElement& v);

/// [u, v] = u^-1 v^-1 u v expanded through mul and inv.
GroupElement commutator(const GroupElement& u, const GroupElement& v);

/// Returns l when values = l * base exactly. base must be nonzero; entries of
/// base that are zero force the matching entry of values to be zero.
std::optional<Integer> integer_multiple(const IntVec& values,
                                        const IntVec& base);

/// Returns l if g = generator(C)^l, otherwise nothing. The identity gives 0.
std::optional<Integer> membership_in_C(const GroupElement& g,
                                       const CyclicCentralSubgroup& subgroup);

/// True iff [g, x_k] lies in C for every generator x_k.
bool is_central_mod_C(const GroupElement& g,
                      const CyclicCentralSubgroup& subgroup);

}  // namespace nilrank
