#include <doctest.h>

#include "generators.hpp"
#include "nilrank/group.hpp"
#include "oracles.hpp"

using namespace nilrank;
using nilrank::testing::negated;
using nilrank::testing::random_element;
using nilrank::testing::random_subgroup;

namespace {

GroupElement gen3(long a, long b, long c) { return GroupElement::from_generators({a, b, c}); }

}  // namespace

TEST_SUITE("group") {

TEST_CASE("pair indexing is lexicographic") {
  CHECK(pair_index(0, 1, 4) == 0);
  CHECK(pair_index(0, 3, 4) == 2);
  CHECK(pair_index(1, 2, 4) == 3);
  CHECK(pair_index(2, 3, 4) == 5);
  for (std::size_t n = 2; n <= 7; ++n) {
    for (std::size_t p = 0; p < pair_count(n); ++p) {
      const auto [i, j] = pair_at(p, n);
      CHECK(pair_index(i, j, n) == p);
    }
  }
  CHECK_THROWS_AS(pair_index(2, 1, 4), InvalidInput);
}

TEST_CASE("identity") {
  const GroupElement e3 = identity(3);
  CHECK(e3.gen_exps() == IntVec{0, 0, 0});
  CHECK(e3.comm_exps() == IntVec{0, 0, 0});
  CHECK(identity(4).comm_exps() == IntVec(6));
  CHECK(identity(1).comm_exps().empty());
  CHECK_THROWS_AS(identity(0), InvalidInput);
}

TEST_CASE("normal form lengths are enforced") {
  CHECK_THROWS_AS(GroupElement(IntVec{1, 2, 3}, IntVec{1, 2}), InvalidInput);
  CHECK_THROWS_AS(GroupElement(IntVec{}, IntVec{}), InvalidInput);
}

TEST_CASE("mul examples") {
  const GroupElement x1 = GroupElement::generator(3, 0);
  const GroupElement x2 = GroupElement::generator(3, 1);
  const GroupElement ordered = mul(x1, x2);
  CHECK(ordered.gen_exps() == IntVec{1, 1, 0});
  CHECK(ordered.comm_exps() == IntVec{0, 0, 0});

  // x2 x1 = x1 x2 [x1,x2]^-1
  const GroupElement swapped = mul(x2, x1);
  CHECK(swapped.gen_exps() == IntVec{1, 1, 0});
  CHECK(swapped.comm_exps() == IntVec{-1, 0, 0});

  // (x1 x2)^2 = x1 x2 x1 x2 = x1^2 x2^2 [x1,x2]^-1
  const GroupElement u = gen3(1, 1, 0);
  CHECK(mul(u, u) == GroupElement({2, 2, 0}, {-1, 0, 0}));
  CHECK(pow(u, 2) == mul(u, u));
}

TEST_CASE("inverse examples") {
  CHECK(inv(identity(3)) == identity(3));
  CHECK(inv(GroupElement::generator(3, 0)) == gen3(-1, 0, 0));
}

TEST_CASE("pow examples and recurrence") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const GroupElement u = random_element(rng, 4);
    CHECK(pow(u, 0) == identity(4));
    CHECK(pow(u, 1) == u);
    for (long k = -7; k <= 7; ++k) {
      CHECK(pow(u, k) == mul(pow(u, k - 1), u));
      CHECK(pow(u, k) == oracle::repeated_power(u, k, mul, inv));
    }
  }
}

TEST_CASE("mul and inv agree with the Heisenberg projections") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 4);
    const GroupElement u = random_element(rng, n);
    const GroupElement v = random_element(rng, n);
    std::vector<oracle::Mat3> products;
    std::vector<oracle::Mat3> inverses;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        products.push_back(oracle::matmul(oracle::project(u, i, j), oracle::project(v, i, j)));
        inverses.push_back(oracle::inverse(oracle::project(u, i, j)));
      }
    }
    CHECK(oracle::projections_match(mul(u, v), products));
    CHECK(oracle::projections_match(inv(u), inverses));
  }
}

TEST_CASE("commutator of generators is the basis commutator") {
  // [x1, x2] = x1^-1 x2^-1 x1 x2 maps to Z = I + E13.
  const GroupElement x1 = GroupElement::generator(2, 0);
  const GroupElement x2 = GroupElement::generator(2, 1);
  const auto image = oracle::matmul(
      oracle::matmul(oracle::inverse(oracle::project(x1, 0, 1)), oracle::inverse(oracle::project(x2, 0, 1))),
      oracle::matmul(oracle::project(x1, 0, 1), oracle::project(x2, 0, 1)));
  CHECK(image == oracle::z_pow(1));
  CHECK(commutator(x1, x2) == GroupElement::central(2, {1}));
  CHECK(commutator_exponents(x1, x2) == IntVec{1});
}

TEST_CASE("commutator_exponents examples") {
  std::mt19937_64 rng(5);
  const GroupElement r = random_element(rng, 3);
  CHECK(commutator_exponents(r, r) == IntVec{0, 0, 0});
  // (d12, d13, d23)
  CHECK(commutator_exponents(gen3(1, 1, 0), gen3(1, 0, 1)) == IntVec{-1, 1, 1});
  CHECK(commutator(gen3(1, 1, 0), gen3(1, 0, 1)).comm_exps() == IntVec{-1, 1, 1});
  CHECK(commutator_exponents(gen3(0, 1, 1), gen3(-1, 0, 1)) == IntVec{1, 1, 1});
}

TEST_CASE("commutator parts do not affect the form") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 50; ++t) {
    const GroupElement u = random_element(rng, 4);
    const GroupElement v = random_element(rng, 4);
    CHECK(commutator_exponents(u, v) ==
          commutator_exponents(GroupElement::from_generators(u.gen_exps()), v));
  }
}

TEST_CASE("rank mismatch is rejected") {
  CHECK_THROWS_AS(mul(identity(3), identity(4)), InvalidInput);
  CHECK_THROWS_AS(commutator_exponents(identity(3), identity(2)), InvalidInput);
  const CyclicCentralSubgroup c(3, {1, 1, 1});
  CHECK_THROWS_AS(membership_in_C(identity(4), c), InvalidInput);
}

TEST_CASE("property: group laws and commutator identities") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(nilrank::uniform_int(rng, 0, 4));
    const GroupElement u = random_element(rng, n);
    const GroupElement v = random_element(rng, n);
    const GroupElement w = random_element(rng, n);
    CHECK(mul(mul(u, v), w) == mul(u, mul(v, w)));
    CHECK(mul(u, inv(u)).is_identity());
    CHECK(mul(inv(u), u).is_identity());
    CHECK(inv(inv(u)) == u);

    const GroupElement c = commutator(u, v);
    CHECK(c.gen_exps() == IntVec(n));
    CHECK(c.comm_exps() == commutator_exponents(u, v));

    IntVec sum = commutator_exponents(u, v);
    const IntVec dw = commutator_exponents(w, v);
    for (std::size_t p = 0; p < sum.size(); ++p) sum[p] += dw[p];
    CHECK(commutator_exponents(mul(u, w), v) == sum);
    CHECK(commutator_exponents(u, v) == negated(commutator_exponents(v, u)));
  }
}

TEST_CASE("arithmetic does not overflow") {
  const Integer big("123456789012345678901234567890");
  const GroupElement u = GroupElement::from_generators({big, big, 1});
  const GroupElement v = GroupElement::from_generators({1, big, big});
  const IntVec d = commutator_exponents(u, v);
  CHECK(d[0] == big * big - big);
  CHECK(d[2] == big * big - big);
  CHECK(mul(u, inv(u)).is_identity());
  CHECK(pow(u, big) == GroupElement({big * big, big * big, big},
                                    {-(big * (big - 1) / 2) * big * big,
                                     -(big * (big - 1) / 2) * big,
                                     -(big * (big - 1) / 2) * big}));
}

TEST_CASE("subgroup construction") {
  CHECK_THROWS_AS(CyclicCentralSubgroup(3, {0, 0, 0}), InvalidInput);
  CHECK_THROWS_AS(CyclicCentralSubgroup(3, {1, 1}), InvalidInput);
  CHECK_THROWS_AS(CyclicCentralSubgroup(1, {}), InvalidInput);
  const CyclicCentralSubgroup c(4, {1, 2, 3, 4, 5, 6});
  CHECK(c.at(1, 3) == 5);
  CHECK(c.all_nonzero());
  CHECK_FALSE(CyclicCentralSubgroup(3, {0, 1, 1}).all_nonzero());
}

TEST_CASE("membership examples") {
  const CyclicCentralSubgroup c(3, {2, 3, 5});
  CHECK(membership_in_C(identity(3), c) == Integer(0));
  CHECK(membership_in_C(GroupElement::central(3, {4, 6, 10}), c) == Integer(2));
  CHECK_FALSE(membership_in_C(GroupElement::central(3, {2, 3, 4}), c).has_value());
  CHECK_FALSE(membership_in_C(gen3(1, 0, 0), c).has_value());
}

TEST_CASE("membership with zero exponents") {
  const CyclicCentralSubgroup c(3, {0, 2, 0});
  CHECK(membership_in_C(GroupElement::central(3, {0, -6, 0}), c) == Integer(-3));
  CHECK_FALSE(membership_in_C(GroupElement::central(3, {1, -6, 0}), c).has_value());
  CHECK_FALSE(membership_in_C(GroupElement::central(3, {0, 3, 0}), c).has_value());
}

TEST_CASE("property: membership matches componentwise division") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 4);
    const CyclicCentralSubgroup c = random_subgroup(rng, n);
    const long l = static_cast<long>(nilrank::uniform_int(rng, -6, 6));
    const GroupElement member = pow(c.generator(), l);
    CHECK(membership_in_C(member, c) == Integer(l));
    CHECK(oracle::repeated_power(c.generator(), l, mul, inv) == member);

    const GroupElement g = GroupElement::central(n, testing::random_vector(rng, pair_count(n), -6, 6));
    CHECK(membership_in_C(g, c) == oracle::divide_componentwise(g.comm_exps(), c.exponents()));
  }
}

TEST_CASE("centrality examples") {
  const CyclicCentralSubgroup c(3, {1, 1, 1});
  CHECK(is_central_mod_C(identity(3), c));
  CHECK_FALSE(is_central_mod_C(GroupElement::generator(3, 0), c));
  CHECK(is_central_mod_C(c.generator(), c));
  CHECK(is_central_mod_C(GroupElement::central(3, {7, -1, 2}), c));
}

TEST_CASE("centrality with a degenerate subgroup") {
  // C = <[x1,x2]^2> in F_2: x1 is central only up to squares.
  const CyclicCentralSubgroup c(2, {2});
  CHECK_FALSE(is_central_mod_C(GroupElement::generator(2, 0), c));
  CHECK(is_central_mod_C(GroupElement::from_generators({2, 0}), c));
  CHECK(is_central_mod_C(GroupElement::from_generators({2, -4}), c));
}

TEST_CASE("property: centrality is invariant under central factors") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 3);
    const CyclicCentralSubgroup c = random_subgroup(rng, n, 2);
    const GroupElement g = random_element(rng, n, 2);
    const GroupElement z = pow(c.generator(), static_cast<long>(nilrank::uniform_int(rng, -3, 3)));
    const GroupElement w = GroupElement::central(n, testing::random_vector(rng, pair_count(n), -4, 4));
    const bool central = is_central_mod_C(g, c);
    CHECK(is_central_mod_C(mul(g, z), c) == central);
    CHECK(is_central_mod_C(mul(w, g), c) == central);
  }
}

TEST_CASE("property: membership reconstructs the element") {
  std::mt19937_64 rng(5150);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 3);
    const CyclicCentralSubgroup c = random_subgroup(rng, n, 3);
    const GroupElement g = (t % 2 == 0)
                               ? pow(c.generator(), static_cast<long>(nilrank::uniform_int(rng, -4, 4)))
                               : random_element(rng, n, 1);
    if (const auto l = membership_in_C(g, c)) {
      CHECK(pow(c.generator(), *l) == g);
    }
  }
}

}  // TEST_SUITE
