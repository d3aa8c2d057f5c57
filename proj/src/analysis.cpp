#include "arrlog/analysis.hpp"

#include <chrono>
#include <sstream>

#include "arrlog/json_io.hpp"

namespace arrlog {

std::optional<BMatrix> select_b_matrix(const Arrangement& normalized,
                                       const QuadraticSearch& gates) {
  if (!gates.derivation) return std::nullopt;
  std::vector<Derivation> candidates{*gates.derivation};
  Derivation euler = euler_derivation(normalized.k());
  for (size_t j = 0; j < normalized.k(); ++j)
    candidates.push_back(add(*gates.derivation, shift(euler, j)));
  for (const Derivation& theta : candidates) {
    try {
      return extract_b(theta, normalized);
    } catch (const ValidationError&) {
      continue;  // common divisor; adding x_j * theta_E stays outside T
    }
  }
  return std::nullopt;
}

AnalysisReport analyze(const Arrangement& a) {
  auto start = std::chrono::steady_clock::now();
  AnalysisReport r;
  r.n = a.n();
  r.k = a.k();
  r.rank = a.rank();
  r.essential = r.rank == a.k();

  if (r.essential) {
    r.gates = minimal_quadratic(a);
    r.decomposition = decompose(a);
    if (a.k() == 3)
      r.classification = classify(a, *r.gates);
    else
      r.classification = classify(a);
  } else {
    r.classification = classify(a);
  }

  if (r.essential && r.gates->derivation) {
    // Lemma 2.2 data lives in the normalized frame
    CoordinateFrame frame = normalize_coordinates(a);
    QuadraticSearch gates_norm = minimal_quadratic(frame.arrangement);
    if (gates_norm.dim_d1 != r.gates->dim_d1 || gates_norm.dim_d2 != r.gates->dim_d2 ||
        gates_norm.dim_t != r.gates->dim_t)
      throw ConsistencyError("derivation space dimensions changed under normalization");
    if (auto b = select_b_matrix(frame.arrangement, gates_norm)) {
      r.membership = check_membership(frame.arrangement, *b);
      if (a.k() == 3) r.plane_triple_nonzero = !plane_triple(*b).any_zero();
    }
    // the derivation/syzygy correspondence, verified term by term
    Syzygy s = derivation_to_syzygy(*r.gates->derivation, a);
    Poly acc(a.k());
    auto jac = a.jacobian_generators();
    for (size_t i = 0; i < a.k(); ++i) acc += s.components[i] * jac[i];
    r.syzygy_ok = acc.is_zero();
  }

  if (a.k() == 3 && r.rank == 3) r.cubic = cubic_through_singular_locus(a);

  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

void validate(const SearchConfig& cfg) {
  if (cfg.n_min < 3) throw ValidationError("n-min must be at least 3");
  if (cfg.n_max < cfg.n_min) throw ValidationError("n-max must be >= n-min");
  if (cfg.bound < 1) throw ValidationError("coefficient bound must be at least 1");
  if (cfg.count < 1) throw ValidationError("sample count must be at least 1");
}

uint64_t uniform_u64(std::mt19937_64& rng, uint64_t n) {
  // rejection sampling; n is tiny here so the loop almost never repeats
  uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % n;
}

long uniform_int(std::mt19937_64& rng, long lo, long hi) {
  return lo + long(uniform_u64(rng, uint64_t(hi - lo + 1)));
}

namespace {

Arrangement sample_arrangement(std::mt19937_64& rng, const SearchConfig& cfg) {
  const size_t k = 3;
  for (;;) {
    size_t n = size_t(uniform_int(rng, long(cfg.n_min), long(cfg.n_max)));
    std::vector<Vec> forms;
    while (forms.size() < n) {
      Vec f(k);
      bool zero = true;
      for (size_t i = 0; i < k; ++i) {
        f[i] = Rational(uniform_int(rng, -cfg.bound, cfg.bound));
        if (f[i] != 0) zero = false;
      }
      if (zero) continue;
      bool dup = false;
      for (const Vec& g : forms)
        if (proportional(f, g)) { dup = true; break; }
      if (dup) continue;
      forms.push_back(std::move(f));
    }
    Arrangement a(k, std::move(forms));
    if (!cfg.require_essential || a.is_essential()) return a;
  }
}

}  // namespace

SearchSummary run_search(const SearchConfig& cfg,
                         const std::function<void(const std::string&)>& sink) {
  validate(cfg);
  auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(cfg.seed);
  SearchSummary summary;
  for (size_t i = 0; i < cfg.count; ++i) {
    Arrangement a = sample_arrangement(rng, cfg);
    AnalysisReport r = analyze(a);
    ++summary.total;
    ++summary.tag_counts[to_string(r.classification.tag)];
    if (r.classification.tag == ClassTag::TheoremViolation) ++summary.theorem_violations;
    if (r.gates && r.gates->dim_d1 == 1 && r.gates->derivation) {
      ++summary.gate_passers;
      if (!r.membership || !r.membership->overall_pass) ++summary.membership_failures;
      if (!r.cubic || !r.cubic->cubic_exists) ++summary.cubic_failures;
      if (!r.syzygy_ok || !*r.syzygy_ok) ++summary.syzygy_failures;
      if (!r.plane_triple_nonzero || !*r.plane_triple_nonzero) ++summary.plane_triple_zero;
    }
    if (sink) sink(search_record_json(i, a, r, cfg.timings));
  }
  summary.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

std::string format_summary(const SearchSummary& s) {
  std::ostringstream os;
  os << "samples analyzed: " << s.total << "\n";
  os << "by tag:\n";
  for (const auto& [tag, count] : s.tag_counts) os << "  " << tag << ": " << count << "\n";
  os << "gate passers (dim D1 = 1, minimal quadratic): " << s.gate_passers << "\n";
  os << "membership failures: " << s.membership_failures << "\n";
  os << "syzygy failures: " << s.syzygy_failures << "\n";
  os << "gate passers without singular-locus cubic: " << s.cubic_failures << "\n";
  os << "gate passers with a zero plane ideal: " << s.plane_triple_zero << "\n";
  os << "TheoremViolation count: " << s.theorem_violations << "\n";
  return os.str();
}

}  // namespace arrlog
