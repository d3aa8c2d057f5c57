#include "arrlog/decompose.hpp"

#include <algorithm>

namespace arrlog {

namespace {

// Diagonal entries of a degree-1 derivation; throws if any off-diagonal
// coefficient is nonzero.
Vec diagonal_of(const Derivation& theta) {
  size_t k = theta.components.size();
  Vec diag(k);
  for (size_t i = 0; i < k; ++i) {
    for (size_t u = 0; u < k; ++u) {
      Exponents e(k, 0);
      e[u] = 1;
      Rational c = theta.components[i].coeff(e);
      if (u == i)
        diag[i] = c;
      else if (c != 0)
        throw ValidationError("derivation is not diagonal in this frame");
    }
  }
  return diag;
}

}  // namespace

std::optional<Decomposition> decompose(const Arrangement& a) {
  if (!a.is_essential()) throw ValidationError("decompose requires an essential arrangement");
  DerivationSpace d1 = derivation_space(a, 1);
  if (d1.dim() <= 1) return std::nullopt;

  CoordinateFrame frame = normalize_coordinates(a);
  DerivationSpace d1n = derivation_space(frame.arrangement, 1);
  if (d1n.dim() != d1.dim())
    throw ConsistencyError("dim D_1 changed under coordinate normalization");

  // in the normalized frame every linear logarithmic derivation is diagonal,
  // because theta(x_i) must be a linear multiple of x_i
  const size_t k = a.k();
  std::vector<Vec> diagonals;
  for (const Derivation& theta : d1n.basis) diagonals.push_back(diagonal_of(theta));

  // refine: variables u, v belong together iff a_u = a_v for every basis element
  std::vector<size_t> group_of(k, size_t(-1));
  std::vector<std::vector<size_t>> groups;
  for (size_t u = 0; u < k; ++u) {
    for (size_t g = 0; g < groups.size(); ++g) {
      size_t rep = groups[g].front();
      bool same = true;
      for (const Vec& d : diagonals)
        if (d[u] != d[rep]) { same = false; break; }
      if (same) {
        group_of[u] = g;
        groups[g].push_back(u);
        break;
      }
    }
    if (group_of[u] == size_t(-1)) {
      group_of[u] = groups.size();
      groups.push_back({u});
    }
  }

  // each (normalized) form must live inside one variable group
  std::vector<std::vector<size_t>> part_forms(groups.size());
  for (size_t j = 0; j < frame.arrangement.n(); ++j) {
    const Vec& f = frame.arrangement.form(j);
    size_t g = size_t(-1);
    for (size_t u = 0; u < k; ++u) {
      if (f[u] == 0) continue;
      if (g == size_t(-1))
        g = group_of[u];
      else if (group_of[u] != g)
        throw ConsistencyError("form " + std::to_string(frame.permutation[j] + 1) +
                               " straddles eigenvalue groups");
    }
    part_forms[g].push_back(frame.permutation[j]);  // original index
  }

  // a separating derivation: first basis element whose eigenvalues already
  // distinguish all groups, else an integer-weight combination of the basis
  std::vector<Vec> group_vecs;  // per group, the vector of a-values across the basis
  for (const auto& grp : groups) {
    Vec v;
    for (const Vec& d : diagonals) v.push_back(d[grp.front()]);
    group_vecs.push_back(std::move(v));
  }
  Vec part_eigenvalue(groups.size());
  bool found = false;
  for (size_t r = 0; r < diagonals.size() && !found; ++r) {
    std::vector<Rational> vals;
    for (const Vec& gv : group_vecs) vals.push_back(gv[r]);
    std::vector<Rational> sorted = vals;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
      part_eigenvalue = vals;
      found = true;
    }
  }
  for (long t = 1; !found; ++t) {
    std::vector<Rational> vals;
    for (const Vec& gv : group_vecs) {
      Rational v(0), w(1);
      for (const Rational& q : gv) {
        v += q * w;
        w *= t;
      }
      vals.push_back(v);
    }
    std::vector<Rational> sorted = vals;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
      part_eigenvalue = vals;
      found = true;
    }
  }

  Decomposition out{{}, groups.size(), std::move(frame), std::move(diagonals)};
  size_t total_dim = 0;
  RowSpace all_points;
  for (size_t g = 0; g < groups.size(); ++g) {
    DecompositionPart part;
    part.eigenvalue = part_eigenvalue[g];
    part.hyperplanes = part_forms[g];
    part.variables = groups[g];
    if (part.hyperplanes.empty())
      throw ConsistencyError("eigenvalue group without hyperplanes in an essential arrangement");
    RowSpace span;
    std::vector<Vec> basis;
    for (size_t idx : part.hyperplanes) {
      Vec p = normalize_projective(a.form(idx));
      if (span.add(p)) basis.push_back(p);
      all_points.add(a.form(idx));
    }
    part.subspace = Matrix::from_rows(basis);
    total_dim += basis.size();
    out.parts.push_back(std::move(part));
  }
  if (total_dim != k || all_points.rank() != k)
    throw ConsistencyError("part subspaces do not decompose the ambient space");
  return out;
}

Arrangement part_arrangement(const Decomposition& d, size_t part) {
  const DecompositionPart& p = d.parts.at(part);
  const Arrangement& na = d.frame.arrangement;
  // positions of the part's forms inside the normalized arrangement
  std::vector<Vec> forms;
  std::vector<std::string> names;
  for (size_t u : p.variables) names.push_back(na.var_names()[u]);
  for (size_t j = 0; j < na.n(); ++j) {
    if (std::find(p.hyperplanes.begin(), p.hyperplanes.end(), d.frame.permutation[j]) ==
        p.hyperplanes.end())
      continue;
    Vec f;
    for (size_t u : p.variables) f.push_back(na.form(j)[u]);
    forms.push_back(std::move(f));
  }
  return Arrangement(p.variables.size(), std::move(forms), std::move(names));
}

EdgeIdealWitness edge_ideal_witness(const Arrangement& normalized, const Derivation& theta) {
  const size_t k = normalized.k();
  if (theta.degree != 1 || theta.components.size() != k)
    throw ValidationError("edge_ideal_witness expects a degree-1 derivation");
  for (size_t i = 0; i < k; ++i) {
    Vec unit(k, Rational(0));
    unit[i] = 1;
    if (i >= normalized.n() || !proportional(normalized.form(i), unit))
      throw ValidationError("arrangement is not in the normalized frame");
  }
  EdgeIdealWitness w;
  w.eigenvalues = diagonal_of(theta);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j) {
      if (w.eigenvalues[i] == w.eigenvalues[j]) continue;
      Exponents e(k, 0);
      e[i] = 1;
      e[j] = 1;
      w.generators.push_back(Poly::monomial(k, e, w.eigenvalues[i] - w.eigenvalues[j]));
    }
  // vertex groups: level sets in order of first occurrence
  for (size_t u = 0; u < k; ++u) {
    bool placed = false;
    for (auto& grp : w.vertex_groups)
      if (w.eigenvalues[grp.front()] == w.eigenvalues[u]) {
        grp.push_back(u);
        placed = true;
        break;
      }
    if (!placed) w.vertex_groups.push_back({u});
  }
  for (const Vec& p : normalized.dual_points())
    for (const Poly& g : w.generators)
      if (g.evaluate(p) != 0)
        throw ConsistencyError("dual point fails to vanish on an edge ideal generator");
  return w;
}

}  // namespace arrlog
