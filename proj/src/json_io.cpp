#include "arrlog/json_io.hpp"

#include "json.hpp"

namespace arrlog {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json vec_json(const Vec& v) {
  ordered_json out = ordered_json::array();
  for (const Rational& q : v) out.push_back(to_string(q));
  return out;
}

ordered_json forms_json(const Arrangement& a) {
  ordered_json out = ordered_json::array();
  for (const Vec& f : a.forms()) out.push_back(vec_json(f));
  return out;
}

ordered_json matrix_json(const Matrix& m) {
  ordered_json out = ordered_json::array();
  for (size_t r = 0; r < m.rows(); ++r) out.push_back(vec_json(m.row(r)));
  return out;
}

ordered_json poly_json(const Poly& p, const std::vector<std::string>& names) {
  ordered_json out = ordered_json::object();
  for (const auto& [e, c] : p.terms()) {
    Poly mono = Poly::monomial(p.nvars(), e, Rational(1));
    out[mono.to_string(names)] = to_string(c);
  }
  return out;
}

ordered_json derivation_json(const Derivation& th, const std::vector<std::string>& names) {
  ordered_json out = ordered_json::array();
  for (const Poly& p : th.components) out.push_back(p.to_string(names));
  return out;
}

ordered_json classification_obj(const Classification& c) {
  ordered_json out;
  out["tag"] = to_string(c.tag);
  if (c.fitted()) {
    out["t_values"] = vec_json(c.t_values);
    out["t_canonical"] = vec_json(c.t_canonical);
    out["transform"] = matrix_json(c.transform);
    out["permutation"] = c.permutation;
  }
  if (!c.note.empty()) out["note"] = c.note;
  return out;
}

ordered_json membership_obj(const Arrangement& normalized, const MembershipReport& r) {
  ordered_json out;
  out["overall_pass"] = r.overall_pass;
  out["corollary_pass"] = r.corollary_pass;
  ordered_json entries = ordered_json::array();
  for (const MembershipEntry& e : r.entries) {
    ordered_json je;
    je["point"] = e.point;
    je["dual_point"] = vec_json(normalized.dual_points()[e.point]);
    je["u"] = e.u + 1;  // paper-style 1-based pair labels
    je["v"] = e.v + 1;
    je["generator_values"] = vec_json(e.values);
    je["pass"] = e.pass;
    entries.push_back(std::move(je));
  }
  out["entries"] = std::move(entries);
  out["point_on_some_ideal"] = r.point_on_some_ideal;
  return out;
}

ordered_json cubic_obj(const CubicReport& r, const std::vector<std::string>& names) {
  ordered_json out;
  out["point_count"] = r.point_count;
  out["eval_rank"] = r.eval_rank;
  out["cubic_exists"] = r.cubic_exists;
  if (r.witness) out["witness"] = poly_json(*r.witness, names);
  return out;
}

ordered_json decomposition_obj(const Decomposition& d) {
  ordered_json out;
  out["e1"] = d.e1;
  ordered_json parts = ordered_json::array();
  for (const DecompositionPart& p : d.parts) {
    ordered_json jp;
    jp["eigenvalue"] = to_string(p.eigenvalue);
    ordered_json hyps = ordered_json::array();
    for (size_t h : p.hyperplanes) hyps.push_back(h + 1);  // 1-based for humans
    jp["hyperplanes"] = std::move(hyps);
    jp["variables"] = p.variables;
    jp["subspace_basis"] = matrix_json(p.subspace);
    parts.push_back(std::move(jp));
  }
  out["parts"] = std::move(parts);
  return out;
}

ordered_json analysis_obj(const AnalysisReport& r, const Arrangement& a) {
  ordered_json out;
  out["n"] = r.n;
  out["k"] = r.k;
  out["rank"] = r.rank;
  out["essential"] = r.essential;
  if (r.gates) {
    out["dims"] = {{"d1", r.gates->dim_d1}, {"d2", r.gates->dim_d2}, {"t", r.gates->dim_t}};
    out["minimal_quadratic"] = bool(r.gates->derivation);
    if (r.gates->derivation)
      out["quadratic_derivation"] = derivation_json(*r.gates->derivation, a.var_names());
  }
  if (r.decomposition) out["decomposition"] = decomposition_obj(*r.decomposition);
  out["classification"] = classification_obj(r.classification);
  if (r.membership) out["membership_pass"] = r.membership->overall_pass;
  if (r.plane_triple_nonzero) out["plane_triple_nonzero"] = *r.plane_triple_nonzero;
  if (r.syzygy_ok) out["syzygy_ok"] = *r.syzygy_ok;
  if (r.cubic) out["cubic"] = cubic_obj(*r.cubic, a.var_names());
  return out;
}

}  // namespace

std::string arrangement_json(const Arrangement& a) {
  ordered_json out;
  out["vars"] = a.var_names();
  out["forms"] = forms_json(a);
  return out.dump();
}

std::string derivation_space_json(const Arrangement& a, const DerivationSpace& space) {
  ordered_json out;
  out["degree"] = space.degree;
  out["dim"] = space.dim();
  ordered_json basis = ordered_json::array();
  for (const Derivation& th : space.basis) basis.push_back(derivation_json(th, a.var_names()));
  out["basis"] = std::move(basis);
  return out.dump();
}

std::string classification_json(const Classification& c) { return classification_obj(c).dump(); }

std::string membership_json(const Arrangement& normalized, const MembershipReport& r) {
  return membership_obj(normalized, r).dump();
}

std::string cubic_json(const CubicReport& r, const std::vector<std::string>& names) {
  return cubic_obj(r, names).dump();
}

std::string decomposition_json(const Decomposition& d) { return decomposition_obj(d).dump(); }

std::string analysis_json(const AnalysisReport& r, const Arrangement& a) {
  return analysis_obj(r, a).dump();
}

std::string search_record_json(size_t index, const Arrangement& a, const AnalysisReport& r,
                               bool with_timing) {
  ordered_json out;
  out["index"] = index;
  out["forms"] = forms_json(a);
  out["n"] = r.n;
  out["rank"] = r.rank;
  out["essential"] = r.essential;
  if (r.gates)
    out["dims"] = {{"d1", r.gates->dim_d1}, {"d2", r.gates->dim_d2}, {"t", r.gates->dim_t}};
  out["tag"] = to_string(r.classification.tag);
  if (r.classification.fitted()) {
    out["t_values"] = vec_json(r.classification.t_values);
    out["t_canonical"] = vec_json(r.classification.t_canonical);
  }
  if (r.membership) out["membership_pass"] = r.membership->overall_pass;
  if (r.plane_triple_nonzero) out["plane_triple_nonzero"] = *r.plane_triple_nonzero;
  if (r.syzygy_ok) out["syzygy_ok"] = *r.syzygy_ok;
  if (r.cubic) out["cubic_exists"] = r.cubic->cubic_exists;
  if (with_timing) out["elapsed_ms"] = r.elapsed_ms;
  return out.dump();
}

}  // namespace arrlog
