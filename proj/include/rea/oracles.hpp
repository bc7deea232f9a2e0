#pragma once

// Independent cross-check routines used by the acceptance suite and tests.
// They deliberately take different algorithmic routes from the library
// code they check.

#include <cstddef>
#include <vector>

#include "rea/scalar.hpp"
#include "rea/symmetry.hpp"
#include "rea/tensor.hpp"

namespace rea::oracle {

// Rank by textbook Gauss-Jordan over Q(q) with division (no fraction-free steps).
inline std::size_t rank_by_division(std::vector<std::vector<ScalarQ>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    ScalarQ inv = rows[r][c].inverse();
    for (auto& x : rows[r]) x = x * inv;
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      ScalarQ f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

// dim of the degree-k component of T(V) / <Im(q^-1 I + R)> computed from the
// ideal itself: N^k minus the rank of the span of the images of
// (q^-1 I + R) placed at every position j = 1..k-1.
inline std::vector<std::size_t> quotient_dims(const Symmetry& s, int kmax) {
  std::vector<std::size_t> dims;
  const int n = s.dim_v();
  TensorOp gen = s.q_power(-1) * TensorOp::identity(n, 2) + s.R();
  for (int k = 1; k <= kmax; ++k) {
    const std::size_t total = ipow(static_cast<std::size_t>(n), k);
    std::vector<std::vector<ScalarQ>> rows;
    for (int j = 1; j < k; ++j) {
      TensorOp g = embed(gen, j, k);
      // image of g is spanned by its rows (row r = image of basis vector r)
      for (std::size_t r = 0; r < total; ++r) {
        std::vector<ScalarQ> row(total);
        bool nz = false;
        for (std::size_t c = 0; c < total; ++c) {
          row[c] = g(r, c);
          nz = nz || !row[c].is_zero();
        }
        if (nz) rows.push_back(std::move(row));
      }
    }
    dims.push_back(total - rank_by_division(std::move(rows)));
  }
  return dims;
}

// Σ_i a_i^k ∏_{p≠i} (a_i - a_p - 1)/(a_i - a_p), a_i = λ_i + m - i: the
// classical power-sum character on V_λ, summed directly over Q.
inline Rational classical_powersum_character(const std::vector<int>& lambda, int k) {
  const int m = static_cast<int>(lambda.size());
  Rational sum = 0;
  for (int i = 0; i < m; ++i) {
    Rational ai = lambda[static_cast<std::size_t>(i)] + m - 1 - i, w = 1, pw = 1;
    for (int p = 0; p < m; ++p) {
      if (p == i) continue;
      Rational ap = lambda[static_cast<std::size_t>(p)] + m - 1 - p;
      w *= (ai - ap - 1) / (ai - ap);
    }
    for (int e = 0; e < k; ++e) pw *= ai;
    sum += pw * w;
  }
  return sum;
}

}  // namespace rea::oracle
