#pragma once

#include <chrono>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "foldline/chains.hpp"
#include "foldline/folding.hpp"
#include "foldline/monoid.hpp"
#include "foldline/parallel.hpp"

namespace foldline {

struct CheckReport {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  double seconds = 0;

  bool ok() const { return cases > 0 && failures == 0; }
};

struct CaseResult {
  bool ok = true;
  std::string detail;
};

/// Independent generator for trial k; identical under serial and parallel runs.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);
std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

/// Runs fn(0..n-1); library errors inside a case count as failures of that case.
template <class Fn>
CheckReport run_cases(std::string name, std::size_t n, Execution ex, Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto results = map_indices(n, ex, [&](std::size_t k) -> CaseResult {
    try {
      return fn(k);
    } catch (const Error& e) {
      return {false, std::string(to_string(e.kind())) + ": " + e.what()};
    }
  });
  CheckReport r;
  r.name = std::move(name);
  r.cases = n;
  for (std::size_t k = 0; k < n; ++k)
    if (!results[k].ok) {
      if (r.failures++ == 0) r.first_failure = "case " + std::to_string(k) + ": " + results[k].detail;
    }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

CheckReport chain_check(const std::string& chain_id, Execution ex = Execution::serial);

// B2 transition: closed forms against the folded transition of both models.
CheckReport check_b2_symbolic(const B2Models& m);
CheckReport check_b2_rational(const B2Models& m, std::uint64_t seed, std::size_t trials, Execution ex);
/// TropInt on [-20,20]^4 against b2_tropical, plus a+b+d >= min(a+2b, a+2d).
CheckReport check_b2_tropical(const B2Models& m, std::uint64_t seed, std::size_t trials, Execution ex);
/// TropNat on [0,20]^4: no underflow along either model and agreement with b2_tropical.
CheckReport check_b2_tropnat(const B2Models& m, std::uint64_t seed, std::size_t trials, Execution ex);

/// Symbolic coordinates spread over the reduced-word graph of w0 by BFS; every
/// edge must then be consistent. Failures count conflicting edges.
CheckReport check_path_independence(const CartanDatum& datum, Execution ex);

// Monoid laws on random elements with base coordinates in [0, 6].
CheckReport check_relation_idempotent(const Monoid& m, std::uint64_t seed, std::size_t trials, Execution ex);
CheckReport check_relation_commuting(const Monoid& m, std::uint64_t seed, std::size_t trials, Execution ex);
CheckReport check_relation_braid(const Monoid& m, std::uint64_t seed, std::size_t trials, Execution ex);
CheckReport check_associativity(const Monoid& m, std::uint64_t seed, std::size_t trials, Execution ex);
CheckReport check_left_mul_word_choice(const Monoid& m, std::uint64_t seed, std::size_t trials, Execution ex);
CheckReport check_folded_mul(const Folding& f, const Monoid& m, std::uint64_t seed, std::size_t trials, Execution ex);

// Frobenius.
CheckReport check_frobenius_multiplicative(const Monoid& m, std::uint64_t seed, std::size_t trials, Execution ex);
CheckReport check_frobenius_composition(const Monoid& m, std::uint64_t seed, std::size_t trials, Execution ex);
CheckReport check_frobenius_sigma(const Folding& f, const Monoid& m, std::uint64_t seed, std::size_t trials,
                                  Execution ex);

// Crystal data.
CheckReport check_string_lengths(const Monoid& m, std::uint64_t seed, std::size_t trials, Execution ex);
CheckReport check_raise_lower(const Monoid& m, std::uint64_t seed, std::size_t trials, Execution ex);
/// lambda_eta(s(f)) = folded lambda_eta(f), same for rho, on TropInt samples in [-20,20].
CheckReport check_folded_lambda_rho(const Folding& f, std::uint64_t seed, std::size_t trials, Execution ex);

/// s_map agrees over every filling of every folded reduced word of w0, and
/// its image is sigma-fixed; symbolic coordinates.
CheckReport check_filling_independence(const Folding& f, Execution ex);

/// Everything `verify all --level desk` runs. trials = 0 uses the default
/// sample counts.
std::vector<CheckReport> desk_suite(std::uint64_t seed, std::size_t trials, Execution ex);

}  // namespace foldline
