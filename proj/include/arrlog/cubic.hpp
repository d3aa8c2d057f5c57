#pragma once

#include "arrlog/classify3.hpp"

namespace arrlog {

struct CubicReport {
  size_t point_count = 0;
  size_t eval_rank = 0;          // rank of the N x 10 cubic evaluation matrix
  bool cubic_exists = false;     // iff eval_rank < 10
  std::optional<Poly> witness;   // first nullspace cubic, when one exists
};

/// Is there a nonzero cubic through every singular point of the
/// arrangement? Requires k = 3, rank 3.
CubicReport cubic_through_singular_locus(const Arrangement& a);

}  // namespace arrlog
