#pragma once

#include <stdexcept>
#include <vector>

#include "dp4/matrix.hpp"
#include "dp4/poly.hpp"

namespace dp4 {

// Gram matrix of a quadratic form: q = x^T M x with M symmetric,
// off-diagonal entries half the mixed coefficient. Needs char != 2.
// Variables not in `vars` must not appear in q.
template <class F>
Matrix<F> gram_matrix(const Poly<F>& q, const std::vector<std::size_t>& vars) {
  const std::size_t n = vars.size();
  std::vector<int> pos(q.ring()->nvars(), -1);
  for (std::size_t i = 0; i < n; ++i) pos[vars[i]] = static_cast<int>(i);
  Matrix<F> m(n, n);
  const F half = F(1) / F(2);
  for (const auto& [mono, c] : q.terms()) {
    int i = -1, j = -1;
    unsigned deg = 0;
    for (std::size_t v = 0; v < mono.size(); ++v) {
      if (!mono[v]) continue;
      deg += mono[v];
      if (pos[v] < 0) throw std::invalid_argument("gram_matrix: term outside the quadratic variables");
      if (mono[v] == 2 && i < 0) {
        i = j = pos[v];
      } else if (mono[v] == 1) {
        (i < 0 ? i : j) = pos[v];
      } else {
        throw std::invalid_argument("gram_matrix: not quadratic");
      }
    }
    if (deg != 2 || i < 0 || j < 0) throw std::invalid_argument("gram_matrix: not quadratic");
    if (i == j) {
      m(i, i) += c;
    } else {
      m(i, j) += c * half;
      m(j, i) += c * half;
    }
  }
  return m;
}

template <class F>
std::size_t quadratic_rank(const Poly<F>& q, const std::vector<std::size_t>& vars) {
  return gram_matrix(q, vars).rank();
}

// Restrict a symmetric bilinear Gram matrix G (n x n) to the row space of B
// (k x n): returns B G B^T.
template <class F>
Matrix<F> restrict_gram(const Matrix<F>& g, const Matrix<F>& b) {
  return b * g * b.transpose();
}

}  // namespace dp4
