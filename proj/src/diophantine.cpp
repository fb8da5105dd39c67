#include "nilrank/diophantine.hpp"

#include <algorithm>
#include <string>

namespace nilrank {
namespace {

struct EuclidResult {
  Integer g;
  Integer s;
  Integer t;
};

// g = gcd(a, b) = s*a + t*b for a, b >= 0.
EuclidResult extended_euclid(Integer a, Integer b) {
  Integer s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Integer r = a - q * b;
    a = std::move(b);
    b = std::move(r);
    Integer s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Integer t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  return {a, s0, t0};
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> reduce(RationalMatrix& m, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const Rational lead = m[row][col];
    for (auto& entry : m[row]) entry /= lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (std::size_t c = col; c < columns; ++c) {
        m[r][c] -= factor * m[row][c];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

IntVec primitive_integer_vector(const std::vector<Rational>& v) {
  Integer denominator_lcm = 1;
  for (const auto& q : v) {
    mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(),
            q.get_den_mpz_t());
  }
  IntVec out;
  out.reserve(v.size());
  Integer content = 0;
  for (const auto& q : v) {
    Integer scaled = q.get_num() * (denominator_lcm / q.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
    out.push_back(std::move(scaled));
  }
  if (content == 0) return out;
  const auto leading = std::find_if(out.begin(), out.end(),
                                    [](const Integer& x) { return x != 0; });
  if (*leading < 0) content = -content;
  for (auto& x : out) x /= content;
  return out;
}

// Least t > 0 such that t * (generator part gen) is central modulo C.
// gen is assumed central over Q, i.e. every [gen, x_k] lies in Q * a.
Integer centralizing_factor(const IntVec& gen,
                            const CyclicCentralSubgroup& subgroup) {
  const std::size_t n = subgroup.rank();
  const IntVec& a = subgroup.exponents();
  const auto anchor = static_cast<std::size_t>(
      std::find_if(a.begin(), a.end(), [](const Integer& x) { return x != 0; }) -
      a.begin());
  const GroupElement g = GroupElement::from_generators(gen);
  Integer factor = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const IntVec d = commutator_exponents(g, GroupElement::generator(n, k));
    Rational ratio(d[anchor], a[anchor]);
    ratio.canonicalize();
    mpz_lcm(factor.get_mpz_t(), factor.get_mpz_t(), ratio.get_den_mpz_t());
  }
  return factor;
}

}  // namespace

Integer gcd_many(std::span<const Integer> values) {
  Integer g = 0;
  for (const auto& v : values) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g == 0) {
    throw InvalidInput("gcd of an all-zero list is undefined");
  }
  return g;
}

Integer gcd_many(std::initializer_list<Integer> values) {
  return gcd_many(std::span<const Integer>(values.begin(), values.size()));
}

std::optional<DiophantineSolution> solve_linear_2var(const Integer& p,
                                                     const Integer& q,
                                                     const Integer& r) {
  if (p == 0 && q == 0) {
    throw InvalidInput("p and q must not both be zero");
  }
  const EuclidResult e = extended_euclid(abs(p), abs(q));
  if (!mpz_divisible_p(r.get_mpz_t(), e.g.get_mpz_t())) return std::nullopt;

  if (p == 0) return DiophantineSolution{0, r / q};
  if (q == 0) return DiophantineSolution{r / p, 0};

  const Integer scale = r / e.g;
  Integer x = e.s * sgn(p) * scale;
  Integer y = e.t * sgn(q) * scale;
  // General solution: (x + t*q/g, y - t*p/g). Bring y into [0, |p/g|).
  const Integer step_x = q / e.g;
  const Integer step_y = p / e.g;
  const Integer t = floor_div(y, abs(step_y)) * sgn(step_y);
  x += t * step_x;
  y -= t * step_y;
  return DiophantineSolution{std::move(x), std::move(y)};
}

std::vector<std::vector<Rational>> rational_nullspace(RationalMatrix matrix,
                                                      std::size_t columns) {
  for (const auto& row : matrix) {
    if (row.size() != columns) throw InvalidInput("ragged matrix");
  }
  const std::vector<std::size_t> pivots = reduce(matrix, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(columns);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -matrix[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

CentralityKernel centrality_kernel(std::span<const GroupElement> elements,
                                   const CyclicCentralSubgroup& subgroup) {
  const std::size_t n = subgroup.rank();
  for (const auto& alpha : elements) {
    if (alpha.rank() != n) {
      throw InvalidInput("rank mismatch: element in F_" +
                         std::to_string(alpha.rank()) + ", subgroup in F_" +
                         std::to_string(n));
    }
  }
  const std::size_t count = elements.size();
  const std::size_t pairs = pair_count(n);
  const IntVec& a = subgroup.exponents();

  // Unknowns: m_1..m_count, then l_1..l_n.
  const std::size_t columns = count + n;
  RationalMatrix system;
  system.reserve(n * pairs);
  for (std::size_t k = 0; k < n; ++k) {
    const GroupElement xk = GroupElement::generator(n, k);
    std::vector<IntVec> contributions;
    contributions.reserve(count);
    for (const auto& alpha : elements) {
      contributions.push_back(commutator_exponents(alpha, xk));
    }
    for (std::size_t p = 0; p < pairs; ++p) {
      std::vector<Rational> row(columns);
      for (std::size_t t = 0; t < count; ++t) row[t] = contributions[t][p];
      row[count + k] = -a[p];
      system.push_back(std::move(row));
    }
  }

  const auto null_basis = rational_nullspace(std::move(system), columns);
  RationalMatrix projected;
  projected.reserve(null_basis.size());
  for (const auto& v : null_basis) {
    projected.emplace_back(v.begin(), v.begin() + static_cast<long>(count));
  }
  const std::size_t rank = reduce(projected, count).size();

  CentralityKernel kernel;
  kernel.kernel_rank = rank;
  for (std::size_t r = 0; r < rank; ++r) {
    IntVec m = primitive_integer_vector(projected[r]);
    IntVec gen(n);
    for (std::size_t t = 0; t < count; ++t) {
      for (std::size_t c = 0; c < n; ++c) {
        gen[c] += m[t] * elements[t].gen_exps()[c];
      }
    }
    const Integer factor = centralizing_factor(gen, subgroup);
    for (auto& x : m) x *= factor;
    kernel.basis.push_back(std::move(m));
  }
  return kernel;
}

KernelReport kernel_rank(const GroupElement& alpha1,
                         const GroupElement& alpha2,
                         const CyclicCentralSubgroup& subgroup) {
  const std::array<GroupElement, 2> pair{alpha1, alpha2};
  const CentralityKernel kernel = centrality_kernel(pair, subgroup);
  KernelReport report;
  report.kernel_rank = static_cast<int>(kernel.kernel_rank);
  for (const auto& v : kernel.basis) report.basis.push_back({v[0], v[1]});
  return report;
}

}  // namespace nilrank
