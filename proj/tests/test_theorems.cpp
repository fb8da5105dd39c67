#include <doctest.h>

#include "generators.hpp"
#include "nilrank/theorems.hpp"
#include "oracles.hpp"

using namespace nilrank;

namespace {

using Six = std::array<Integer, 6>;

Six six(long a12, long a13, long a14, long a23, long a24, long a34) {
  return {a12, a13, a14, a23, a24, a34};
}

Six random_six(std::mt19937_64& rng, long bound) {
  Six a;
  for (auto& x : a) x = uniform_nonzero(rng, -bound, bound);
  return a;
}

// eps (1/(a14 a23) + 1/(a12 a34)) > eps / (a13 a24) in exact rationals.
bool epsilon_form(const Six& a) {
  const auto& [a12, a13, a14, a23, a24, a34] = a;
  const Integer product = a12 * a13 * a14 * a23 * a24 * a34;
  const int eps = sgn(product);
  const mpq_class lhs = eps * (mpq_class(1) / mpq_class(a14 * a23) + mpq_class(1) / mpq_class(a12 * a34));
  const mpq_class rhs = eps / mpq_class(a13 * a24);
  return lhs > rhs;
}

// 2x2 determinants of the generator exponents in (a1, a2, a3) order:
// det[m11 m21; m12 m22], det[m12 m22; m13 m23], det[m11 m21; m13 m23].
std::array<Integer, 3> displayed_determinants(const WitnessPair& w) {
  const IntVec& m1 = w.alpha1.gen_exps();
  const IntVec& m2 = w.alpha2.gen_exps();
  return {m1[0] * m2[1] - m2[0] * m1[1], m1[1] * m2[2] - m2[1] * m1[2],
          m1[0] * m2[2] - m2[0] * m1[2]};
}

}  // namespace

TEST_SUITE("theorems") {

TEST_CASE("construction for (1,1,1)") {
  const TheoremAResult r = theorem_a_construct(1, 1, 1);
  CHECK(r.diophantine == DiophantineSolution{1, 0});
  CHECK(r.witness.alpha1 == GroupElement::from_generators({0, 1, 1}));
  CHECK(r.witness.alpha2 == GroupElement::from_generators({-1, 0, 1}));
  CHECK(commutator_exponents(r.witness.alpha1, r.witness.alpha2) == IntVec{1, 1, 1});
  CHECK(r.witness.l == 1);
  CHECK(r.witness.kernel.kernel_rank == 0);
}

TEST_CASE("construction for (2,3,5)") {
  const TheoremAResult r = theorem_a_construct(2, 3, 5);
  CHECK(displayed_determinants(r.witness) == std::array<Integer, 3>{2, 3, 5});
  // Lexicographic (d12, d13, d23) = (a1, a3, a2).
  CHECK(commutator_exponents(r.witness.alpha1, r.witness.alpha2) == IntVec{2, 5, 3});
  CHECK(r.witness.kernel.kernel_rank == 0);
  CHECK(r.witness.subgroup.exponents() == IntVec{2, 5, 3});
}

TEST_CASE("construction rejects zero inputs") {
  CHECK_THROWS_AS(theorem_a_construct(0, 1, 1), InvalidInput);
  CHECK_THROWS_AS(theorem_a_construct(1, 0, 1), InvalidInput);
  CHECK_THROWS_AS(theorem_a_construct(1, 1, 0), InvalidInput);
}

TEST_CASE("property: construction hits every sign pattern and gcd structure") {
  std::mt19937_64 rng(31337);
  for (int t = 0; t < 1000; ++t) {
    const long a1 = uniform_nonzero(rng, -50, 50);
    const long a2 = uniform_nonzero(rng, -50, 50);
    const long a3 = uniform_nonzero(rng, -50, 50);
    const TheoremAResult r = theorem_a_construct(a1, a2, a3);
    CHECK(displayed_determinants(r.witness) == std::array<Integer, 3>{a1, a2, a3});
    CHECK(r.witness.l == 1);
    CHECK(r.witness.kernel.kernel_rank == 0);
    CHECK(membership_in_C(commutator(r.witness.alpha1, r.witness.alpha2), r.witness.subgroup) == Integer(1));
  }
}

TEST_CASE("construction with highly composite inputs") {
  for (const auto& [a1, a2, a3] : std::vector<std::array<long, 3>>{
           {6, 10, 15}, {12, 18, 8}, {-64, 48, 36}, {30, 42, 70}, {1, 1024, 729}, {-7, -7, -7}}) {
    const TheoremAResult r = theorem_a_construct(a1, a2, a3);
    CHECK(displayed_determinants(r.witness) == std::array<Integer, 3>{a1, a2, a3});
  }
  const Integer big("340282366920938463463374607431768211297");
  const TheoremAResult r = theorem_a_construct(big, big * 6, -big * 10);
  CHECK(displayed_determinants(r.witness) == std::array<Integer, 3>{big, big * 6, -big * 10});
}

TEST_CASE("condition: the violated four-generator example") {
  const ConditionReport r = theorem_b_condition(six(1, 1, 1, -1, 1, -1));
  CHECK_FALSE(r.holds);
  CHECK(r.lhs_term == -2);
  CHECK(r.rhs_term == 1);
  CHECK(r.pfaffian == -3);
  CHECK(r.epsilon == 1);
  CHECK(r.quadruple == std::array<std::size_t, 4>{1, 2, 3, 4});
}

TEST_CASE("condition examples") {
  const ConditionReport holds = theorem_b_condition(six(1, 1, 1, -1, -1, 1));
  CHECK(holds.holds);
  CHECK(holds.lhs_term == 0);
  CHECK(holds.rhs_term == -1);

  const ConditionReport decomposable = theorem_b_condition(six(1, 1, 1, 1, 2, 1));
  CHECK(decomposable.holds);
  CHECK(decomposable.pfaffian == 0);
}

TEST_CASE("condition is strict at the boundary") {
  // lhs = 2 + 2, rhs = 4.
  const ConditionReport r = theorem_b_condition(six(2, 1, 2, 1, 1, 1));
  CHECK(r.lhs_term == 4);
  CHECK(r.lhs_term == r.rhs_term);
  CHECK_FALSE(r.holds);
}

TEST_CASE("condition rejects zero exponents") {
  CHECK_THROWS_AS(theorem_b_condition(six(1, 0, 1, 1, 1, 1)), InvalidInput);
  CHECK_THROWS_AS(det_A(six(1, 1, 1, 1, 1, 0)), InvalidInput);
  const IntVec five{1, 1, 1, 1, 1};
  CHECK_THROWS_AS(theorem_b_condition(five), InvalidInput);
}

TEST_CASE("det_A examples") {
  for (const auto& [a, expected] : std::vector<std::pair<Six, long>>{
           {six(1, 1, 1, 1, 2, 1), 0}, {six(1, 1, 1, -1, 1, -1), 9}, {six(1, 1, 1, 1, 1, 1), 1}}) {
    CHECK(oracle::det_a_by_cofactors(a) == expected);
    CHECK(det_A(a) == expected);
  }
}

TEST_CASE("property: det_A is the square of the Pfaffian") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 1000; ++t) {
    const Six a = random_six(rng, 100);
    const Integer pf = a[0] * a[5] - a[1] * a[4] + a[2] * a[3];
    CHECK(det_A(a) == pf * pf);
    CHECK(oracle::det_a_by_cofactors(a) == pf * pf);
    CHECK(pfaffian4(a) == pf);
  }
}

TEST_CASE("det_A through a row swap") {
  // a13 a24 = a14 a23 zeroes the second pivot.
  const Six a = six(1, 1, 1, 1, 1, 1);
  CHECK(det_A(a) == oracle::det_a_by_cofactors(a));
  const Six b = six(2, -3, 5, 7, -11, 13);
  CHECK(det_A(b) == oracle::det_a_by_cofactors(b));
}

TEST_CASE("property: integer form matches the epsilon form") {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 2000; ++t) {
    const Six a = random_six(rng, t % 2 == 0 ? 5 : 40);
    const ConditionReport r = theorem_b_condition(a);
    CHECK(r.holds == epsilon_form(a));
    CHECK(det_A(a) == r.pfaffian * r.pfaffian);
  }
}

TEST_CASE("property: verdict is invariant under scaling") {
  std::mt19937_64 rng(72);
  for (int t = 0; t < 1000; ++t) {
    const Six a = random_six(rng, 5);
    const long c = uniform_nonzero(rng, -7, 7);
    Six scaled;
    for (std::size_t k = 0; k < 6; ++k) scaled[k] = a[k] * c;
    CHECK(theorem_b_condition(scaled).holds == theorem_b_condition(a).holds);
  }
}

TEST_CASE("property: a vanishing Pfaffian implies the condition") {
  std::mt19937_64 rng(73);
  int seen = 0;
  for (int t = 0; t < 20000 && seen < 200; ++t) {
    const Six a = random_six(rng, 4);
    const ConditionReport r = theorem_b_condition(a);
    if (r.pfaffian != 0) continue;
    ++seen;
    CHECK(r.holds);
  }
  CHECK(seen > 0);
}

TEST_CASE("four-index check examples") {
  const IntVec example{1, 1, 1, -1, 1, -1};
  const ConditionCheck c4 = theorem_c_check(4, example);
  REQUIRE(c4.reports.size() == 1);
  CHECK_FALSE(c4.reports[0].holds);
  CHECK_FALSE(c4.all_hold);

  const ConditionCheck c5 = theorem_c_check(5, IntVec(10, 1));
  CHECK(c5.reports.size() == 5);
  CHECK(c5.all_hold);
  for (const auto& r : c5.reports) {
    CHECK(r.lhs_term == 2);
    CHECK(r.rhs_term == 1);
  }
  CHECK(c5.reports.front().quadruple == std::array<std::size_t, 4>{1, 2, 3, 4});
  CHECK(c5.reports.back().quadruple == std::array<std::size_t, 4>{2, 3, 4, 5});
}

TEST_CASE("four-index check preconditions") {
  CHECK_THROWS_AS(theorem_c_check(3, IntVec{1, 1, 1}), InvalidInput);
  CHECK_THROWS_AS(theorem_c_check(4, IntVec{1, 1, 1, 1, 1}), InvalidInput);
  CHECK_THROWS_AS(theorem_c_check(4, IntVec{1, 1, 1, 0, 1, 1}), InvalidInput);
}

TEST_CASE("property: n = 4 check equals the single-quadruple condition") {
  std::mt19937_64 rng(74);
  for (int t = 0; t < 300; ++t) {
    const Six a = random_six(rng, 9);
    const ConditionCheck c = theorem_c_check(4, a);
    CHECK(c.all_hold == theorem_b_condition(a).holds);
  }
}

TEST_CASE("property: each quadruple uses its own exponents and sign") {
  std::mt19937_64 rng(75);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 5 + static_cast<std::size_t>(t % 2);
    IntVec a;
    for (std::size_t p = 0; p < pair_count(n); ++p) a.emplace_back(uniform_nonzero(rng, -5, 5));
    const ConditionCheck check = theorem_c_check(n, a);
    bool all = true;
    for (const auto& r : check.reports) {
      const auto [k1, k2, k3, k4] = r.quadruple;
      const auto at = [&](std::size_t i, std::size_t j) { return a[pair_index(i - 1, j - 1, n)]; };
      const Six sub{at(k1, k2), at(k1, k3), at(k1, k4), at(k2, k3), at(k2, k4), at(k3, k4)};
      CHECK(r.holds == epsilon_form(sub));
      all = all && r.holds;
    }
    CHECK(check.all_hold == all);
  }
}

TEST_CASE("rank-3 subgroup uses the input order") {
  const CyclicCentralSubgroup c = rank3_subgroup(2, 3, 5);
  CHECK(c.at(0, 1) == 2);
  CHECK(c.at(1, 2) == 3);
  CHECK(c.at(0, 2) == 5);
}

TEST_CASE("make_witness rejects non-commuting pairs") {
  const CyclicCentralSubgroup c(3, {1, 1, 1});
  CHECK_THROWS_AS(make_witness(c, GroupElement::generator(3, 0), GroupElement::generator(3, 1)),
                  InvalidInput);
}

}  // TEST_SUITE
