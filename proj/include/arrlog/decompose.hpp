#pragma once

#include "arrlog/logderiv.hpp"

namespace arrlog {

struct DecompositionPart {
  Rational eigenvalue;               // of the separating diagonal derivation
  std::vector<size_t> hyperplanes;   // original form indices
  Matrix subspace;                   // rows: basis of the span of the part's dual points
  std::vector<size_t> variables;     // variable group inomal the normalized frame
};

struct Decomposition {
  std::vector<DecompositionPart> parts;
  size_t e1 = 0;                     // number of parts
  CoordinateFrame frame;             // normalization the partition was read in
  std::vector<Vec> diagonals;        // a-vectors of the D_1 basis in that frame
};

/// Direct-product decomposition from degree-1 logarithmic derivations.
/// Returns nullopt when dim D_1 = 1 (irreducible by this criterion).
/// Requires essential.
std::optional<Decomposition> decompose(const Arrangement& a);

/// One part as an arrangement in its own variables (normalized frame).
Arrangement part_arrangement(const Decomposition& d, size_t part);

struct EdgeIdealWitness {
  Vec eigenvalues;                             // a_1 ... a_k of the diagonal derivation
  std::vector<Poly> generators;                // the nonzero (a_i - a_j) x_i x_j
  std::vector<std::vector<size_t>> vertex_groups;  // level sets of the a-vector
};

/// The 2x2-minor (edge) ideal attached to a diagonal linear derivation in
/// the normalized frame, with the complete-multipartite vertex partition.
/// Checks that every dual point kills every generator.
EdgeIdealWitness edge_ideal_witness(const Arrangement& normalized, const Derivation& theta);

}  // namespace arrlog
