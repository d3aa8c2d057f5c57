#pragma once

// Test-only reference implementations, deliberately independent of the
// library code paths they check: a naive term-list expander for products
// of linear forms, a Bareiss determinant, and a plain forward-elimination
// rank. Values frozen in the test files were computed with these.

#include <algorithm>
#include <map>
#include <vector>

#include "arrlog/rational.hpp"

namespace oracle {

using arrlog::Rational;
using arrlog::Vec;

// term list representation: exponent vector -> coefficient
using TermMap = std::map<std::vector<unsigned>, Rational>;

inline TermMap expand_product(const std::vector<Vec>& linear_forms, size_t k) {
  TermMap acc;
  acc[std::vector<unsigned>(k, 0)] = 1;
  for (const Vec& form : linear_forms) {
    TermMap next;
    for (const auto& [e, c] : acc)
      for (size_t i = 0; i < k; ++i) {
        if (form[i] == 0) continue;
        auto e2 = e;
        e2[i] += 1;
        next[e2] += c * form[i];
      }
    for (auto it = next.begin(); it != next.end();)
      it = it->second == 0 ? next.erase(it) : std::next(it);
    acc = std::move(next);
  }
  return acc;
}

inline TermMap differentiate(const TermMap& p, size_t var) {
  TermMap out;
  for (const auto& [e, c] : p) {
    if (e[var] == 0) continue;
    auto d = e;
    d[var] -= 1;
    out[d] += c * long(e[var]);
  }
  return out;
}

inline Rational evaluate(const TermMap& p, const Vec& at) {
  Rational sum(0);
  for (const auto& [e, c] : p) {
    Rational t = c;
    for (size_t i = 0; i < e.size(); ++i)
      for (unsigned j = 0; j < e[i]; ++j) t *= at[i];
    sum += t;
  }
  return sum;
}

// fraction-free Bareiss determinant
inline Rational determinant(std::vector<Vec> m) {
  size_t n = m.size();
  Rational sign(1), prev(1);
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      sign = -sign;
    }
    for (size_t r = c + 1; r < n; ++r) {
      for (size_t j = c + 1; j < n; ++j)
        m[r][j] = (m[c][c] * m[r][j] - m[r][c] * m[c][j]) / prev;
      m[r][c] = 0;
    }
    prev = m[c][c];
  }
  return sign * m[n - 1][n - 1];
}

// forward elimination without back substitution or pivot normalization
inline size_t rank(std::vector<Vec> m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace oracle
