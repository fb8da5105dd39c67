#include "nilrank/group.hpp"

#include <algorithm>
#include <string>

namespace nilrank {
namespace {

void require_same_rank(const GroupElement& u, const GroupElement& v) {
  if (u.rank() != v.rank()) {
    throw InvalidInput("rank mismatch: F_" + std::to_string(u.rank()) +
                       " vs F_" + std::to_string(v.rank()));
  }
}

void require_same_rank(const GroupElement& g,
                       const CyclicCentralSubgroup& subgroup) {
  if (g.rank() != subgroup.rank()) {
    throw InvalidInput("rank mismatch: element in F_" +
                       std::to_string(g.rank()) + ", subgroup in F_" +
                       std::to_string(subgroup.rank()));
  }
}

bool all_zero(const IntVec& values) {
  return std::all_of(values.begin(), values.end(),
                     [](const Integer& v) { return v == 0; });
}

}  // namespace

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
  if (!(i < j && j < n)) {
    throw InvalidInput("pair index out of range");
  }
  // Pairs before row i: (n-1) + (n-2) + ... + (n-i).
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

std::pair<std::size_t, std::size_t> pair_at(std::size_t index,
                                            std::size_t n) {
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t row = n - i - 1;
    if (index < row) return {i, i + 1 + index};
    index -= row;
  }
  throw InvalidInput("pair position out of range");
}

GroupElement::GroupElement(IntVec gen_exps, IntVec comm_exps)
    : gen_exps_(std::move(gen_exps)), comm_exps_(std::move(comm_exps)) {
  if (gen_exps_.empty()) {
    throw InvalidInput("rank must be at least 1");
  }
  if (comm_exps_.size() != pair_count(gen_exps_.size())) {
    throw InvalidInput("expected " +
                       std::to_string(pair_count(gen_exps_.size())) +
                       " commutator exponents for rank " +
                       std::to_string(gen_exps_.size()) + ", got " +
                       std::to_string(comm_exps_.size()));
  }
}

GroupElement GroupElement::identity(std::size_t n) {
  if (n == 0) throw InvalidInput("rank must be at least 1");
  return GroupElement(IntVec(n), IntVec(pair_count(n)));
}

GroupElement GroupElement::generator(std::size_t n, std::size_t k) {
  if (k >= n) throw InvalidInput("generator index out of range");
  IntVec gen(n);
  gen[k] = 1;
  return GroupElement(std::move(gen), IntVec(pair_count(n)));
}

GroupElement GroupElement::from_generators(IntVec gen_exps) {
  const std::size_t n = gen_exps.size();
  return GroupElement(std::move(gen_exps), IntVec(pair_count(n)));
}

GroupElement GroupElement::central(std::size_t n, IntVec comm_exps) {
  return GroupElement(IntVec(n), std::move(comm_exps));
}

bool GroupElement::is_identity() const {
  return all_zero(gen_exps_) && all_zero(comm_exps_);
}

CyclicCentralSubgroup::CyclicCentralSubgroup(std::size_t n, IntVec exponents)
    : n_(n), exponents_(std::move(exponents)) {
  if (n_ < 2) {
    throw InvalidInput("a cyclic central subgroup needs rank at least 2");
  }
  if (exponents_.size() != pair_count(n_)) {
    throw InvalidInput("expected " + std::to_string(pair_count(n_)) +
                       " subgroup exponents for rank " + std::to_string(n_) +
                       ", got " + std::to_string(exponents_.size()));
  }
  if (all_zero(exponents_)) {
    throw InvalidInput("subgroup exponent vector must not be zero");
  }
}

const Integer& CyclicCentralSubgroup::at(std::size_t i, std::size_t j) const {
  return exponents_[pair_index(i, j, n_)];
}

bool CyclicCentralSubgroup::all_nonzero() const {
  return std::none_of(exponents_.begin(), exponents_.end(),
                      [](const Integer& v) { return v == 0; });
}

GroupElement CyclicCentralSubgroup::generator() const {
  return GroupElement::central(n_, exponents_);
}

GroupElement identity(std::size_t n) { return GroupElement::identity(n); }

GroupElement mul(const GroupElement& u, const GroupElement& v) {
  require_same_rank(u, v);
  const std::size_t n = u.rank();
  IntVec gen(n);
  for (std::size_t k = 0; k < n; ++k) gen[k] = u.gen_exps()[k] + v.gen_exps()[k];

  // Moving x_i^{v_i} left past x_j^{u_j} (i < j) uses
  // x_j^a x_i^b = x_i^b x_j^a [x_i,x_j]^{-ab}.
  IntVec comm(pair_count(n));
  std::size_t p = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++p) {
      comm[p] = u.comm_exps()[p] + v.comm_exps()[p] -
                u.gen_exps()[j] * v.gen_exps()[i];
    }
  }
  return GroupElement(std::move(gen), std::move(comm));
}

GroupElement inv(const GroupElement& u) {
  // (x_1^{e_1} ... x_n^{e_n})^-1 = x_n^{-e_n} ... x_1^{-e_1}; sorting that
  // back into increasing order costs [x_i,x_j]^{-e_i e_j} per pair.
  const std::size_t n = u.rank();
  IntVec gen(n);
  for (std::size_t k = 0; k < n; ++k) gen[k] = -u.gen_exps()[k];
  IntVec comm(pair_count(n));
  std::size_t p = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++p) {
      comm[p] = -u.comm_exps()[p] - u.gen_exps()[i] * u.gen_exps()[j];
    }
  }
  return GroupElement(std::move(gen), std::move(comm));
}

GroupElement pow(const GroupElement& u, const Integer& k) {
  // u^k has commutator part k c_ij - C(k,2) e_i e_j, valid for negative k too.
  const std::size_t n = u.rank();
  const Integer binom = k * (k - 1) / 2;
  IntVec gen(n);
  for (std::size_t t = 0; t < n; ++t) gen[t] = k * u.gen_exps()[t];
  IntVec comm(pair_count(n));
  std::size_t p = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++p) {
      comm[p] = k * u.comm_exps()[p] -
                binom * u.gen_exps()[i] * u.gen_exps()[j];
    }
  }
  return GroupElement(std::move(gen), std::move(comm));
}

IntVec commutator_exponents(const GroupElement& u, const GroupElement& v) {
  require_same_rank(u, v);
  const std::size_t n = u.rank();
  const IntVec& eu = u.gen_exps();
  const IntVec& ev = v.gen_exps();
  IntVec d(pair_count(n));
  std::size_t p = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++p) {
      d[p] = eu[i] * ev[j] - ev[i] * eu[j];
    }
  }
  return d;
}

GroupElement commutator(const GroupElement& u, const GroupElement& v) {
  return mul(mul(inv(u), inv(v)), mul(u, v));
}

std::optional<Integer> integer_multiple(const IntVec& values,
                                        const IntVec& base) {
  if (values.size() != base.size()) {
    throw InvalidInput("vector length mismatch");
  }
  std::optional<Integer> multiplier;
  for (std::size_t p = 0; p < base.size(); ++p) {
    if (base[p] == 0) continue;
    if (!mpz_divisible_p(values[p].get_mpz_t(), base[p].get_mpz_t())) {
      return std::nullopt;
    }
    multiplier = values[p] / base[p];
    break;
  }
  if (!multiplier) {
    throw InvalidInput("base vector must not be zero");
  }
  for (std::size_t p = 0; p < base.size(); ++p) {
    if (values[p] != *multiplier * base[p]) return std::nullopt;
  }
  return multiplier;
}

std::optional<Integer> membership_in_C(const GroupElement& g,
                                       const CyclicCentralSubgroup& subgroup) {
  require_same_rank(g, subgroup);
  if (!all_zero(g.gen_exps())) return std::nullopt;
  return integer_multiple(g.comm_exps(), subgroup.exponents());
}

bool is_central_mod_C(const GroupElement& g,
                      const CyclicCentralSubgroup& subgroup) {
  require_same_rank(g, subgroup);
  const std::size_t n = g.rank();
  for (std::size_t k = 0; k < n; ++k) {
    const IntVec d = commutator_exponents(g, GroupElement::generator(n, k));
    if (!integer_multiple(d, subgroup.exponents())) return false;
  }
  return true;
}

}  // namespace nilrank
