#include "nilrank/selftest.hpp"

#include <array>
#include <functional>

#include "nilrank/random.hpp"

namespace nilrank {
namespace {

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (ok) return;
    if (result_.failures++ == 0) result_.first_failure = describe();
  }

  SuiteResult finish() { return std::move(result_); }

 private:
  SuiteResult result_;
};

Integer draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return Integer(static_cast<long>(uniform_int(rng, lo, hi)));
}

Integer draw_nonzero(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return Integer(static_cast<long>(uniform_nonzero(rng, lo, hi)));
}

IntVec draw_vector(std::mt19937_64& rng, std::size_t length, std::int64_t lo, std::int64_t hi) {
  IntVec v;
  v.reserve(length);
  for (std::size_t k = 0; k < length; ++k) v.push_back(draw(rng, lo, hi));
  return v;
}

GroupElement draw_element(std::mt19937_64& rng, std::size_t n) {
  return GroupElement(draw_vector(rng, n, -5, 5), draw_vector(rng, pair_count(n), -5, 5));
}

CyclicCentralSubgroup draw_subgroup(std::mt19937_64& rng, std::size_t n) {
  while (true) {
    IntVec a = draw_vector(rng, pair_count(n), -5, 5);
    for (const auto& x : a) {
      if (x != 0) return CyclicCentralSubgroup(n, std::move(a));
    }
  }
}

std::size_t draw_rank(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(
      uniform_int(rng, static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
}

std::string describe(const GroupElement& g) {
  return to_string(g.gen_exps()) + to_string(g.comm_exps());
}

SuiteResult group_laws(std::mt19937_64& rng, std::uint64_t trials) {
  Suite suite("group_laws");
  for (std::uint64_t t = 0; t < trials; ++t) {
    const std::size_t n = draw_rank(rng, 1, 5);
    const GroupElement u = draw_element(rng, n);
    const GroupElement v = draw_element(rng, n);
    const GroupElement w = draw_element(rng, n);
    const auto where = [&] { return describe(u) + " " + describe(v) + " " + describe(w); };
    suite.check(mul(mul(u, v), w) == mul(u, mul(v, w)), [&] { return "associativity: " + where(); });
    suite.check(mul(u, inv(u)).is_identity() && mul(inv(u), u).is_identity(),
                [&] { return "inverse: " + describe(u); });
    suite.check(inv(inv(u)) == u, [&] { return "involution: " + describe(u); });
    const Integer k = draw(rng, -6, 6);
    suite.check(pow(u, k) == mul(pow(u, k - 1), u),
                [&] { return "power recurrence k=" + to_string(k) + ": " + describe(u); });
  }
  return suite.finish();
}

SuiteResult commutator_form(std::mt19937_64& rng, std::uint64_t trials) {
  Suite suite("commutator_form");
  for (std::uint64_t t = 0; t < trials; ++t) {
    const std::size_t n = draw_rank(rng, 2, 5);
    const GroupElement u = draw_element(rng, n);
    const GroupElement v = draw_element(rng, n);
    const GroupElement w = draw_element(rng, n);
    const IntVec d = commutator_exponents(u, v);
    suite.check(commutator(u, v) == GroupElement::central(n, d),
                [&] { return "expansion: " + describe(u) + " " + describe(v); });
    IntVec sum = commutator_exponents(w, v);
    for (std::size_t p = 0; p < sum.size(); ++p) sum[p] += d[p];
    suite.check(commutator_exponents(mul(u, w), v) == sum,
                [&] { return "bilinearity: " + describe(u) + " " + describe(w); });
    IntVec negated = commutator_exponents(v, u);
    for (auto& x : negated) x = -x;
    suite.check(d == negated, [&] { return "antisymmetry: " + describe(u) + " " + describe(v); });
    suite.check(commutator_exponents(u, u) == IntVec(pair_count(n)),
                [&] { return "alternating: " + describe(u); });
  }
  return suite.finish();
}

SuiteResult membership(std::mt19937_64& rng, std::uint64_t trials) {
  Suite suite("membership");
  for (std::uint64_t t = 0; t < trials; ++t) {
    const std::size_t n = draw_rank(rng, 2, 5);
    const CyclicCentralSubgroup c = draw_subgroup(rng, n);
    const Integer l = draw(rng, -10, 10);
    const auto found = membership_in_C(pow(c.generator(), l), c);
    suite.check(found && *found == l, [&] { return "power of generator, l=" + to_string(l); });

    const GroupElement g = draw_element(rng, n);
    const GroupElement z = pow(c.generator(), draw(rng, -3, 3));
    const GroupElement w = GroupElement::central(n, draw_vector(rng, pair_count(n), -5, 5));
    const bool central = is_central_mod_C(g, c);
    suite.check(is_central_mod_C(mul(g, z), c) == central && is_central_mod_C(mul(g, w), c) == central,
                [&] { return "centrality invariance: " + describe(g); });
  }
  return suite.finish();
}

SuiteResult diophantine(std::mt19937_64& rng, std::uint64_t trials) {
  Suite suite("diophantine");
  for (std::uint64_t t = 0; t < trials; ++t) {
    Integer p = draw(rng, -20, 20);
    const Integer q = draw(rng, -20, 20);
    const Integer r = draw(rng, -20, 20);
    if (p == 0 && q == 0) p = 1;
    const auto solution = solve_linear_2var(p, q, r);
    const bool solvable = mpz_divisible_p(r.get_mpz_t(), gcd_many({p, q}).get_mpz_t()) != 0;
    const auto where = [&] { return to_string(IntVec{p, q, r}); };
    suite.check(solution.has_value() == solvable, [&] { return "existence: " + where(); });
    if (solution) {
      suite.check(p * solution->x + q * solution->y == r, [&] { return "substitution: " + where(); });
    }
  }
  return suite.finish();
}

SuiteResult theorem_a(std::mt19937_64& rng, std::uint64_t trials) {
  Suite suite("theorem_a");
  for (std::uint64_t t = 0; t < trials; ++t) {
    const Integer a1 = draw_nonzero(rng, -50, 50);
    const Integer a2 = draw_nonzero(rng, -50, 50);
    const Integer a3 = draw_nonzero(rng, -50, 50);
    const auto where = [&] { return to_string(IntVec{a1, a2, a3}); };
    try {
      const TheoremAResult result = theorem_a_construct(a1, a2, a3);
      const WitnessPair& w = result.witness;
      const IntVec d = commutator_exponents(w.alpha1, w.alpha2);
      // d is lexicographic (d12, d13, d23).
      suite.check(d[0] == a1 && d[2] == a2 && d[1] == a3, [&] { return "minors: " + where(); });
      suite.check(w.l == 1, [&] { return "certificate: " + where(); });
      suite.check(w.kernel.kernel_rank == 0, [&] { return "kernel: " + where(); });
    } catch (const std::exception& e) {
      suite.check(false, [&] { return "construction threw for " + where() + ": " + e.what(); });
    }
  }
  return suite.finish();
}

std::array<Integer, 6> draw_six(std::mt19937_64& rng, std::int64_t bound) {
  std::array<Integer, 6> a;
  for (auto& x : a) x = draw_nonzero(rng, -bound, bound);
  return a;
}

SuiteResult pfaffian(std::mt19937_64& rng, std::uint64_t trials) {
  Suite suite("pfaffian_identity");
  for (std::uint64_t t = 0; t < trials; ++t) {
    const auto a = draw_six(rng, 100);
    const Integer pf = pfaffian4(a);
    suite.check(det_A(a) == pf * pf, [&] { return "det_A: " + to_string(IntVec(a.begin(), a.end())); });
  }
  return suite.finish();
}

SuiteResult condition_forms(std::mt19937_64& rng, std::uint64_t trials) {
  Suite suite("condition_forms");
  for (std::uint64_t t = 0; t < trials; ++t) {
    const auto a = draw_six(rng, 5);
    const auto where = [&] { return to_string(IntVec(a.begin(), a.end())); };
    const ConditionReport report = theorem_b_condition(a);

    const Integer c = draw_nonzero(rng, -5, 5);
    std::array<Integer, 6> scaled;
    for (std::size_t k = 0; k < 6; ++k) scaled[k] = c * a[k];
    suite.check(theorem_b_condition(scaled).holds == report.holds,
                [&] { return "scaling by " + to_string(c) + ": " + where(); });

    // eps (1/(a14 a23) + 1/(a12 a34)) > eps / (a13 a24), in exact rationals.
    const mpq_class eps(report.epsilon);
    const mpq_class lhs = eps * (mpq_class(1, 1) / mpq_class(a[2] * a[3]) +
                                 mpq_class(1, 1) / mpq_class(a[0] * a[5]));
    const mpq_class rhs = eps / mpq_class(a[1] * a[4]);
    suite.check((lhs > rhs) == report.holds, [&] { return "epsilon form: " + where(); });
  }
  return suite.finish();
}

SuiteResult kernels(std::mt19937_64& rng, std::uint64_t trials) {
  Suite suite("centrality_kernel");
  for (std::uint64_t t = 0; t < trials; ++t) {
    const std::size_t n = draw_rank(rng, 2, 4);
    const CyclicCentralSubgroup c = draw_subgroup(rng, n);
    const GroupElement u = GroupElement::from_generators(draw_vector(rng, n, -3, 3));
    const GroupElement v = GroupElement::from_generators(draw_vector(rng, n, -3, 3));
    const auto where = [&] { return describe(u) + " " + describe(v) + " a=" + to_string(c.exponents()); };
    const KernelReport forward = kernel_rank(u, v, c);
    suite.check(forward.kernel_rank == kernel_rank(v, u, c).kernel_rank,
                [&] { return "swap invariance: " + where(); });
    suite.check(kernel_rank(u, u, c).kernel_rank >= 1, [&] { return "repeated element: " + where(); });
    for (const auto& m : forward.basis) {
      const GroupElement product = mul(pow(u, m[0]), pow(v, m[1]));
      suite.check(is_central_mod_C(product, c), [&] { return "basis not central: " + where(); });
    }
  }
  return suite.finish();
}

}  // namespace

SelftestReport run_selftest(std::uint64_t trials, std::uint64_t seed, unsigned threads) {
  if (trials < 1) throw InvalidInput("trials must be at least 1");
  std::mt19937_64 rng(seed);
  SelftestReport report;
  report.suites.push_back(group_laws(rng, trials));
  report.suites.push_back(commutator_form(rng, trials));
  report.suites.push_back(membership(rng, trials));
  report.suites.push_back(diophantine(rng, trials));
  report.suites.push_back(theorem_a(rng, trials));
  report.suites.push_back(pfaffian(rng, trials));
  report.suites.push_back(condition_forms(rng, trials));
  report.suites.push_back(kernels(rng, trials));

  SweepConfig sweep;
  sweep.n = 4;
  sweep.bound = 2;
  sweep.trials = trials;
  sweep.seed = rng();
  sweep.threads = threads;
  report.sweep = soundness_sweep(sweep);

  report.passed = report.sweep.soundness_violations == 0;
  for (const auto& suite : report.suites) report.passed = report.passed && suite.failures == 0;
  return report;
}

}  // namespace nilrank
