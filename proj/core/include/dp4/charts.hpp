#pragma once

#include <array>
#include <string>
#include <vector>

#include "dp4/field_convert.hpp"
#include "dp4/grassmann.hpp"
#include "dp4/matrix.hpp"
#include "dp4/poly.hpp"
#include "dp4/rational.hpp"

namespace dp4 {

// Affine chart of the Gr(4,5)-side fibration: V4 runs through a chart of
// Gr(4,5), and above it the chart matrix [V2][V4] parametrizes the fiber
// Gr(2,V4) cap H1 cap H2. `displayed` holds the published chart ideal, to be
// compared against an independent elimination of the flag variables.
struct ChartModel {
  std::string name;                       // "x3" or "x4"
  std::vector<std::string> params;        // 4 affine chart parameters
  RingPtr ring;                           // params + p01..p34 (14 vars)
  std::vector<Poly<Rat>> displayed;       // quadric first, then 6 linear gens
  RingPtr flag_ring;                      // params + t1..t4 (8 vars)
  std::vector<Poly<Rat>> minors;          // 10 Plucker minors of [V2][V4]
  std::array<Poly<Rat>, 2> constraints;   // H1, H2 pulled back to the chart
  std::vector<int> gram_vars;             // ring indices of the 4 quadric vars
  // x-coordinates of the chart point (x0:...:x4), as polynomials in params
  std::vector<Poly<Rat>> x_coords;        // length 5, over param_ring
  RingPtr param_ring;                     // just the 4 parameters
};

const ChartModel& chart_x3();
const ChartModel& chart_x4();

// V4 bases over an arbitrary field.
template <class F>
Matrix<F> v4_chart_x3(const F& a, const F& b, const F& c, const F& d) {
  Matrix<F> m(4, 5);
  m(0, 0) = F(1); m(0, 3) = a;
  m(1, 1) = F(1); m(1, 3) = b;
  m(2, 2) = F(1); m(2, 3) = c;
  m(3, 4) = F(1); m(3, 3) = d;
  return m;
}

template <class F>
Matrix<F> v4_chart_x4(const F& a, const F& b, const F& u, const F& d) {
  Matrix<F> m(4, 5);
  m(0, 0) = F(1); m(0, 2) = -a;
  m(1, 1) = F(1); m(1, 2) = -b;
  m(2, 3) = F(1); m(2, 2) = u;
  m(3, 4) = F(1); m(3, 2) = -d;
  return m;
}

// The defining kernel functional of a 4-space, converted to x-coordinates:
// V4 = ker(x0 e0* + x1 e1* + x4 e2* - x3 e3* + x2 e4*).
template <class F>
std::vector<F> x_coords_of_v4(const Subspace<F>& v4) {
  if (v4.dim() != 4 || v4.ambient() != 5)
    throw std::invalid_argument("x_coords_of_v4: need a hyperplane of F^5");
  auto k = v4.basis().kernel();  // 1 x 5 functional phi
  if (k.rows() != 1) throw std::logic_error("x_coords_of_v4: kernel not a line");
  auto phi = k.row(0);
  return {phi[0], phi[1], phi[4], -phi[3], phi[2]};
}

template <class F>
F q3_value(const std::vector<F>& x) {
  return x[1] * x[1] + F(4) * x[0] * x[2];
}

template <class F>
bool on_q3(const std::vector<F>& x) {
  return q3_value(x).is_zero();
}

template <class F>
bool on_sing_q3(const std::vector<F>& x) {
  return x[0].is_zero() && x[1].is_zero() && x[2].is_zero();
}

// 4x4 Gram matrix of the chart quadric over the parameter ring, plus its
// determinant (cofactor bookkeeping for the rank <= 3 locus).
struct ChartGram {
  RingPtr param_ring;
  std::vector<std::vector<Poly<Rat>>> entries;  // 4x4
  Poly<Rat> det;
};

ChartGram chart_gram(const ChartModel& chart);

template <class F>
Matrix<F> evaluate_gram(const ChartGram& g, const std::vector<F>& params) {
  Matrix<F> m(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const auto& e = g.entries[i][j];
      F acc(0);
      for (const auto& [mono, c] : e.terms()) {
        F t = rat_to<F>(c);
        for (std::size_t v = 0; v < mono.size(); ++v)
          for (unsigned k = 0; k < mono[v]; ++k) t *= params[v];
        acc += t;
      }
      m(i, j) = acc;
    }
  return m;
}

template <>
inline Matrix<Rat> evaluate_gram<Rat>(const ChartGram& g, const std::vector<Rat>& params) {
  Matrix<Rat> m(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = g.entries[i][j].evaluate(params);
  return m;
}

// Determinant of a small matrix of polynomials by cofactor expansion.
Poly<Rat> poly_det(const std::vector<std::vector<Poly<Rat>>>& m);

// Verification payloads (consumed by the suites).
struct ChartEliminationResult {
  bool substitution_identity;   // displayed gens vanish on the parametrization
  bool displayed_in_eliminated; // displayed ideal contained in eliminated one
  bool eliminated_in_displayed; // converse containment
  bool equal() const { return displayed_in_eliminated && eliminated_in_displayed; }
};

// Route A: substitute the chart minors into the displayed generators and
// reduce modulo the pulled-back hyperplane constraints.
// Route B: eliminate the flag variables from the graph ideal of the
// parametrization and compare reduced bases with the displayed ideal.
ChartEliminationResult verify_chart_elimination(const ChartModel& chart, bool full_groebner);

struct LemmaGramResult {
  bool det_is_unit_times_q3;  // 16 det = b^2 + 4ad
  Rat alpha;                  // unit multiplier
  unsigned power;             // exponent of (b^2+4ad)
  Poly<Rat> cofactor;         // residual unit factor (recorded, not judged)
  bool sing_ideal_matches;    // Jacobian ideal of q3 equals <x0,x1,x2>
};

LemmaGramResult verify_lemma_gram(const ChartModel& chart);

}  // namespace dp4
