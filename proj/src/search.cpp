#include "nilrank/search.hpp"

#include "nilrank/random.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

namespace nilrank {
namespace {

// Candidate generator-exponent vectors of one search box, in lexicographic
// order (first coordinate most significant, from -bound to +bound).
class CandidateTable {
 public:
  CandidateTable(std::size_t n, std::int64_t bound) : n_(n) {
    if (bound < 1 || bound > kMaxSearchBound) {
      throw InvalidInput("search bound must lie in [1, " +
                         std::to_string(kMaxSearchBound) + "]");
    }
    const auto side = static_cast<std::uint64_t>(2 * bound + 1);
    count_ = 1;
    for (std::size_t k = 0; k < n; ++k) {
      if (count_ > kMaxSearchElements / side) {
        throw InvalidInput("search box too large: (2*bound+1)^n exceeds " +
                           std::to_string(kMaxSearchElements));
      }
      count_ *= side;
    }
    values_.resize(count_ * n);
    for (std::uint64_t idx = 0; idx < count_; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t k = n; k-- > 0;) {
        values_[idx * n + k] = static_cast<std::int64_t>(rest % side) - bound;
        rest /= side;
      }
    }
    // All digits equal to `bound` encode the zero vector.
    zero_ = (count_ - 1) / 2;
  }

  std::uint64_t count() const { return count_; }
  std::uint64_t zero_index() const { return zero_; }
  const std::int64_t* row(std::uint64_t idx) const { return &values_[idx * n_]; }

  GroupElement element(std::uint64_t idx) const {
    IntVec gen;
    gen.reserve(n_);
    for (std::size_t k = 0; k < n_; ++k) gen.emplace_back(static_cast<long>(row(idx)[k]));
    return GroupElement::from_generators(std::move(gen));
  }

 private:
  std::size_t n_;
  std::uint64_t count_ = 0;
  std::uint64_t zero_ = 0;
  std::vector<std::int64_t> values_;
};

// Decides whether the 2x2 minors of two candidates are an integer multiple
// of a, and reports the multiplier's sign class.
class MembershipTest {
 public:
  explicit MembershipTest(const CyclicCentralSubgroup& subgroup)
      : n_(subgroup.rank()), exponents_(subgroup.exponents()) {
    fits_ = std::all_of(exponents_.begin(), exponents_.end(), [](const Integer& x) {
      return mpz_fits_slong_p(x.get_mpz_t()) != 0;
    });
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) pairs_.emplace_back(i, j);
    }
    const auto first = std::find_if(exponents_.begin(), exponents_.end(),
                                    [](const Integer& x) { return x != 0; });
    anchor_ = static_cast<std::size_t>(first - exponents_.begin());
    if (fits_) {
      for (const auto& x : exponents_) small_.push_back(x.get_si());
    }
  }

  enum class Result { kNotMember, kTrivial, kNontrivial };

  Result test(const std::int64_t* u, const std::int64_t* v) const {
    if (!fits_) return test_exact(u, v);
    const auto minor = [&](std::size_t p) {
      const auto [i, j] = pairs_[p];
      return u[i] * v[j] - v[i] * u[j];
    };
    const std::int64_t d0 = minor(anchor_);
    const std::int64_t a0 = small_[anchor_];
    if (d0 % a0 != 0) return Result::kNotMember;
    const __int128 l = d0 / a0;
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      if (p == anchor_) continue;
      if (static_cast<__int128>(minor(p)) != l * small_[p]) return Result::kNotMember;
    }
    return l == 0 ? Result::kTrivial : Result::kNontrivial;
  }

 private:
  Result test_exact(const std::int64_t* u, const std::int64_t* v) const {
    IntVec d;
    d.reserve(pairs_.size());
    for (const auto& [i, j] : pairs_) {
      d.push_back(Integer(static_cast<long>(u[i])) * static_cast<long>(v[j]) -
                  Integer(static_cast<long>(v[i])) * static_cast<long>(u[j]));
    }
    const auto l = integer_multiple(d, exponents_);
    if (!l) return Result::kNotMember;
    return *l == 0 ? Result::kTrivial : Result::kNontrivial;
  }

  std::size_t n_;
  IntVec exponents_;
  bool fits_ = false;
  std::size_t anchor_ = 0;
  std::vector<std::int64_t> small_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

unsigned resolve_threads(unsigned requested, std::uint64_t rows) {
  unsigned threads = requested != 0 ? requested : std::thread::hardware_concurrency();
  threads = std::max(threads, 1U);
  if (rows < threads) threads = static_cast<unsigned>(std::max<std::uint64_t>(rows, 1));
  return threads;
}

}  // namespace

Integer search_space_size(const SearchSpec& spec) {
  Integer size;
  const Integer side = 2 * spec.bound + 1;
  mpz_pow_ui(size.get_mpz_t(), side.get_mpz_t(), 2 * spec.subgroup.rank());
  return size;
}

std::uint64_t candidate_pair_count(const SearchSpec& spec) {
  const CandidateTable table(spec.subgroup.rank(), spec.bound);
  const std::uint64_t nonzero = table.count() - 1;
  return nonzero * (nonzero - 1) / 2;
}

std::optional<WitnessPair> brute_force_witness_search(const SearchSpec& spec,
                                                      const SearchOptions& options) {
  const CandidateTable table(spec.subgroup.rank(), spec.bound);
  const MembershipTest membership(spec.subgroup);
  const std::uint64_t count = table.count();
  const std::uint64_t zero = table.zero_index();
  const std::uint64_t total = (count - 1) * (count - 2) / 2;
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

  std::atomic<std::uint64_t> next_row{0};
  std::atomic<std::uint64_t> best_row{kNone};
  std::atomic<std::uint64_t> checked{0};
  std::mutex mutex;
  std::optional<WitnessPair> best;
  std::uint64_t reported = 0;

  const auto accepts = [&](std::uint64_t i, std::uint64_t j) -> std::optional<WitnessPair> {
    const auto result = membership.test(table.row(i), table.row(j));
    if (result == MembershipTest::Result::kNotMember) return std::nullopt;
    if (result == MembershipTest::Result::kTrivial && !spec.allow_trivial_l) {
      return std::nullopt;
    }
    WitnessPair witness = make_witness(spec.subgroup, table.element(i), table.element(j));
    if (spec.require_rank2 && witness.kernel.kernel_rank != 0) return std::nullopt;
    return witness;
  };

  const auto report_progress = [&](std::uint64_t done) {
    if (options.progress_interval == 0 || !options.on_progress) return;
    const std::uint64_t before = checked.fetch_add(done);
    const std::uint64_t after = before + done;
    if (before / options.progress_interval != after / options.progress_interval) {
      const std::lock_guard lock(mutex);
      // Another thread may already have reported a larger count.
      if (after > reported) {
        reported = after;
        options.on_progress(SearchProgress{after, total});
      }
    }
  };

  const auto worker = [&] {
    while (true) {
      const std::uint64_t i = next_row.fetch_add(1);
      if (i >= count || i > best_row.load()) return;
      if (i == zero) continue;
      std::uint64_t examined = 0;
      for (std::uint64_t j = i + 1; j < count; ++j) {
        if (j == zero) continue;
        ++examined;
        auto witness = accepts(i, j);
        if (!witness) continue;
        const std::lock_guard lock(mutex);
        if (i < best_row.load()) {
          best_row.store(i);
          best = std::move(witness);
        }
        break;
      }
      report_progress(examined);
    }
  };

  const unsigned threads = resolve_threads(options.threads, count);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return best;
}

std::optional<WitnessTriple> brute_force_triple_search(const SearchSpec& spec) {
  const CandidateTable table(spec.subgroup.rank(), spec.bound);
  const MembershipTest membership(spec.subgroup);
  const std::uint64_t count = table.count();
  const std::uint64_t zero = table.zero_index();
  const auto commutes = [&](std::uint64_t i, std::uint64_t j) {
    return membership.test(table.row(i), table.row(j)) !=
           MembershipTest::Result::kNotMember;
  };

  for (std::uint64_t i = 0; i < count; ++i) {
    if (i == zero) continue;
    std::vector<std::uint64_t> partners;
    for (std::uint64_t j = i + 1; j < count; ++j) {
      if (j != zero && commutes(i, j)) partners.push_back(j);
    }
    for (std::size_t s = 0; s < partners.size(); ++s) {
      for (std::size_t t = s + 1; t < partners.size(); ++t) {
        if (!commutes(partners[s], partners[t])) continue;
        const std::array<GroupElement, 3> alphas{
            table.element(i), table.element(partners[s]), table.element(partners[t])};
        CentralityKernel kernel = centrality_kernel(alphas, spec.subgroup);
        if (kernel.kernel_rank != 0) continue;
        const std::size_t n = spec.subgroup.rank();
        const auto certificate = [&](std::size_t x, std::size_t y) {
          return *membership_in_C(
              GroupElement::central(n, commutator_exponents(alphas[x], alphas[y])),
              spec.subgroup);
        };
        return WitnessTriple{spec.subgroup,
                             alphas,
                             {certificate(0, 1), certificate(0, 2), certificate(1, 2)},
                             std::move(kernel)};
      }
    }
  }
  return std::nullopt;
}

IntVec random_nonzero_exponents(std::size_t length, std::mt19937_64& rng) {
  IntVec values;
  values.reserve(length);
  for (std::size_t k = 0; k < length; ++k) {
    values.emplace_back(static_cast<long>(uniform_nonzero(rng, -5, 5)));
  }
  return values;
}

SweepReport soundness_sweep(const SweepConfig& config) {
  if (config.n < 4) throw InvalidInput("soundness sweep needs n >= 4");
  if (config.trials < 1) throw InvalidInput("trials must be at least 1");
  const std::size_t length = pair_count(config.n);

  std::vector<IntVec> inputs = config.injected;
  std::mt19937_64 rng(config.seed);
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    inputs.push_back(random_nonzero_exponents(length, rng));
  }

  SweepReport report;
  SearchOptions options;
  options.threads = config.threads;
  for (auto& a : inputs) {
    const CyclicCentralSubgroup subgroup(config.n, a);
    const ConditionCheck check = theorem_c_check(config.n, a);
    SweepTrial trial;
    trial.witness = brute_force_witness_search(
        SearchSpec{subgroup, config.bound, true, false}, options);
    trial.witness_found = trial.witness.has_value();
    trial.condition_holds = check.all_hold;
    trial.exponents = std::move(a);

    ++(trial.witness_found ? report.witness_found : report.witness_not_found);
    ++(trial.condition_holds ? report.condition_holds : report.condition_violated);
    if (trial.witness_found && !trial.condition_holds) ++report.soundness_violations;
    report.trials.push_back(std::move(trial));
  }
  return report;
}

}  // namespace nilrank
