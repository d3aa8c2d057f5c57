#include "arrlog/cubic.hpp"

namespace arrlog {

CubicReport cubic_through_singular_locus(const Arrangement& a) {
  if (a.k() != 3) throw ValidationError("cubic test needs k = 3");
  if (a.rank() != 3) throw ValidationError("cubic test needs a rank-3 arrangement");
  auto points = multiple_points(a);
  auto monos = monomials_of_degree(3, 3);  // the 10 plane cubics
  Matrix eval(points.size(), monos.size());
  for (size_t r = 0; r < points.size(); ++r)
    for (size_t c = 0; c < monos.size(); ++c) {
      Rational v(1);
      for (size_t i = 0; i < 3; ++i)
        if (monos[c][i] != 0) v *= pow_rational(points[r].point[i], monos[c][i]);
      eval.at(r, c) = v;
    }

  CubicReport report;
  report.point_count = points.size();
  report.eval_rank = rank(eval);
  report.cubic_exists = report.eval_rank < monos.size();
  if (report.cubic_exists) {
    Vec v = nullspace(eval).front();
    Poly w(3);
    for (size_t c = 0; c < monos.size(); ++c) w.add_term(monos[c], v[c]);
    report.witness = std::move(w);
  }
  return report;
}

}  // namespace arrlog
