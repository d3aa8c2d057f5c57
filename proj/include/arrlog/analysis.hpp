#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "arrlog/cubic.hpp"
#include "arrlog/decompose.hpp"
#include "arrlog/quadratic.hpp"

namespace arrlog {

/// Everything the CLI and the search harness report about one arrangement.
struct AnalysisReport {
  size_t n = 0, k = 0, rank = 0;
  bool essential = false;
  std::optional<QuadraticSearch> gates;          // essential inputs only
  std::optional<Decomposition> decomposition;    // essential, dim D_1 > 1
  Classification classification;
  std::optional<MembershipReport> membership;    // when a b-matrix could be extracted
  std::optional<bool> plane_triple_nonzero;      // Lemma-2.4 flag, k = 3 only
  std::optional<bool> syzygy_ok;                 // n*theta - p*theta_E kills the Jacobian
  std::optional<CubicReport> cubic;              // k = 3, rank 3 only
  double elapsed_ms = 0.0;
};

AnalysisReport analyze(const Arrangement& a);

/// Picks a quadratic representative without a common component divisor:
/// the minimal one, else minimal plus x_j * theta_E corrections.
std::optional<BMatrix> select_b_matrix(const Arrangement& normalized,
                                       const QuadraticSearch& gates);

struct SearchConfig {
  size_t n_min = 4, n_max = 7;
  long bound = 2;           // coefficients drawn from [-bound, bound]
  size_t count = 100;
  uint64_t seed = 1;
  bool require_essential = true;
  bool timings = false;     // include per-record timings (breaks byte-identical reruns)
};

void validate(const SearchConfig& cfg);

struct SearchSummary {
  size_t total = 0;
  std::map<std::string, size_t> tag_counts;
  size_t gate_passers = 0;
  size_t theorem_violations = 0;
  size_t membership_failures = 0;    // among gate passers
  size_t cubic_failures = 0;         // gate passers without a singular-locus cubic
  size_t syzygy_failures = 0;
  size_t plane_triple_zero = 0;      // gate passers with a zero ideal in the triple
  double elapsed_ms = 0.0;
};

/// Deterministic random sampler: rejects proportional duplicates and (by
/// default) non-essential sets, analyzes each sample, hands one JSON line
/// per record to the sink.
SearchSummary run_search(const SearchConfig& cfg,
                         const std::function<void(const std::string&)>& sink);

/// Unbiased integers from a seeded mt19937_64; fixed algorithm so catalogs
/// reproduce byte for byte across platforms.
uint64_t uniform_u64(std::mt19937_64& rng, uint64_t n);
long uniform_int(std::mt19937_64& rng, long lo, long hi);

std::string format_summary(const SearchSummary& s);

}  // namespace arrlog
