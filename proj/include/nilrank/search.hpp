#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "nilrank/theorems.hpp"

namespace nilrank {

/// Bounded exhaustive search for witness pairs. Generator exponents of each
/// candidate range over [-bound, bound]; commutator parts are irrelevant and
/// left at zero.
struct SearchSpec {
  CyclicCentralSubgroup subgroup;
  std::int64_t bound = 1;
  bool require_rank2 = true;
  bool allow_trivial_l = false;
};

/// Largest accepted bound; keeps every 2x2 minor inside 64 bits.
inline constexpr std::int64_t kMaxSearchBound = 1 << 20;
/// Largest accepted number of candidate elements (2*bound+1)^n.
inline constexpr std::uint64_t kMaxSearchElements = std::uint64_t{1} << 24;

struct SearchProgress {
  std::uint64_t candidates_checked = 0;
  std::uint64_t candidates_total = 0;
};

struct SearchOptions {
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Call on_progress roughly every `progress_interval` candidate pairs.
  std::uint64_t progress_interval = 0;
  std::function<void(const SearchProgress&)> on_progress;
};

/// (2*bound+1)^(2n), the size of the raw box before canonicalisation.
Integer search_space_size(const SearchSpec& spec);

/// Canonical candidate pairs actually examined: alpha1 < alpha2, both nonzero.
std::uint64_t candidate_pair_count(const SearchSpec& spec);

/// Returns the lexicographically least pair (alpha1, alpha2), alpha1 < alpha2,
/// both nonzero, whose commutator is z^l (l != 0 unless allow_trivial_l) and,
/// if require_rank2, whose kernel rank is 0. The result does not depend on
/// the number of threads.
std::optional<WitnessPair> brute_force_witness_search(
    const SearchSpec& spec, const SearchOptions& options = {});

/// Three elements, pairwise commuting modulo C, with trivial centrality
/// kernel (rank 3 over the centre). Exploratory; single-threaded.
struct WitnessTriple {
  CyclicCentralSubgroup subgroup;
  std::array<GroupElement, 3> alphas;
  std::array<Integer, 3> l;  // certificates of (1,2), (1,3), (2,3)
  CentralityKernel kernel;
};

std::optional<WitnessTriple> brute_force_triple_search(const SearchSpec& spec);

struct SweepConfig {
  std::size_t n = 4;
  std::int64_t bound = 2;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  /// Exponent vectors evaluated before the random trials.
  std::vector<IntVec> injected;
  unsigned threads = 0;
};

struct SweepTrial {
  IntVec exponents;
  bool witness_found = false;
  bool condition_holds = false;
  std::optional<WitnessPair> witness;
};

struct SweepReport {
  std::uint64_t witness_found = 0;
  std::uint64_t witness_not_found = 0;
  std::uint64_t condition_holds = 0;
  std::uint64_t condition_violated = 0;
  /// Trials where a rank-2 witness exists but some quadruple is violated.
  std::uint64_t soundness_violations = 0;
  std::vector<SweepTrial> trials;
};

/// Random exponent vector with entries uniform in [-5,5] \ {0}. Uses only
/// raw engine output, so the sequence is identical on every platform.
IntVec random_nonzero_exponents(std::size_t length, std::mt19937_64& rng);

/// For each trial, searches for a rank-2 witness and checks that every
/// quadruple condition holds whenever one is found. Requires n >= 4 and
/// trials >= 1. Violations are counted, not thrown.
SweepReport soundness_sweep(const SweepConfig& config);

}  // namespace nilrank
