#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dp4/matrix.hpp"
#include "dp4/poly.hpp"
#include "dp4/rational.hpp"

namespace dp4 {

// Plucker coordinates of Gr(2,5) in the fixed basis order
// (p01, p02, p03, p04, p12, p13, p14, p23, p24, p34),
// with the convention p_ij = x_i y_j - x_j y_i.
inline constexpr int kAmbient = 5;
inline constexpr int kWedgeDim = 10;
inline constexpr std::array<std::array<int, 2>, 10> kPairs = {{
    {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

inline int pair_index(int i, int j) {
  for (int k = 0; k < kWedgeDim; ++k)
    if (kPairs[k][0] == std::min(i, j) && kPairs[k][1] == std::max(i, j)) return k;
  throw std::invalid_argument("pair_index: bad pair");
}

inline std::vector<std::string> plucker_var_names() {
  std::vector<std::string> v;
  for (const auto& pr : kPairs)
    v.push_back("p" + std::to_string(pr[0]) + std::to_string(pr[1]));
  return v;
}

// The five Plucker quadrics, one per omitted index m (coordinate of w ^ w in
// Lambda^4): g[m] = sum of sign * p_A p_B over partitions {A,B} of the
// 4-subset complement of m. Term table entries: (pair idx, pair idx, sign).
struct PluckerTerm {
  int a, b, sign;
};
const std::array<std::vector<PluckerTerm>, 5>& plucker_terms();

// Hyperplane sections cutting Y inside Gr(2,5): H1 = p12 - p03, H2 = p13 - p24.
inline constexpr int kIdxP03 = 2;
inline constexpr int kIdxP12 = 4;
inline constexpr int kIdxP13 = 5;
inline constexpr int kIdxP24 = 8;

template <class F>
F h1_of(const std::vector<F>& w) {
  return w[kIdxP12] - w[kIdxP03];
}
template <class F>
F h2_of(const std::vector<F>& w) {
  return w[kIdxP13] - w[kIdxP24];
}

template <class F>
std::vector<F> wedge2(const std::vector<F>& x, const std::vector<F>& y) {
  std::vector<F> w(kWedgeDim, F(0));
  for (int k = 0; k < kWedgeDim; ++k) {
    int i = kPairs[k][0], j = kPairs[k][1];
    w[k] = x[i] * y[j] - x[j] * y[i];
  }
  return w;
}

template <class F>
std::array<F, 5> plucker_values(const std::vector<F>& w) {
  std::array<F, 5> g = {F(0), F(0), F(0), F(0), F(0)};
  const auto& terms = plucker_terms();
  for (int m = 0; m < 5; ++m)
    for (const auto& t : terms[m]) g[m] += F(t.sign) * w[t.a] * w[t.b];
  return g;
}

// omega ^ eta in Lambda^4, coordinates indexed by the omitted basis index.
template <class F>
std::array<F, 5> wedge22(const std::vector<F>& w, const std::vector<F>& e) {
  std::array<F, 5> out = {F(0), F(0), F(0), F(0), F(0)};
  const auto& terms = plucker_terms();
  for (int m = 0; m < 5; ++m)
    for (const auto& t : terms[m]) out[m] += F(t.sign) * (w[t.a] * e[t.b] + w[t.b] * e[t.a]);
  return out;
}

template <class F>
bool on_grassmannian(const std::vector<F>& w) {
  for (const auto& v : plucker_values(w))
    if (!v.is_zero()) return false;
  return true;
}

template <class F>
bool on_y(const std::vector<F>& w) {
  return on_grassmannian(w) && h1_of(w).is_zero() && h2_of(w).is_zero();
}

// Map v -> w ^ v into Lambda^3 (10 coordinates, 3-subsets in lex order).
// The kernel of this map for decomposable w is its 2-dimensional support.
const std::array<std::array<std::array<int, 2>, 5>, 10>& wedge21_table();
// entry [k][c] = {target index in Lambda^3, sign} for e_{pair k} ^ e_c

template <class F>
Matrix<F> wedge21_matrix(const std::vector<F>& w) {
  Matrix<F> m(10, 5);
  const auto& tab = wedge21_table();
  for (int k = 0; k < kWedgeDim; ++k) {
    if (w[k].is_zero()) continue;
    for (int c = 0; c < 5; ++c) {
      int row = tab[k][c][0], sign = tab[k][c][1];
      if (sign) m(row, c) += F(sign) * w[k];
    }
  }
  return m;
}

template <class F>
Subspace<F> support_of(const std::vector<F>& w) {
  auto k = wedge21_matrix(w).kernel();
  return Subspace<F>(k, 5);
}

template <class F>
bool is_decomposable(const std::vector<F>& w) {
  for (const auto& g : plucker_values(w))
    if (!g.is_zero()) return false;
  return true;
}

// A line in Gr(2,5): the pencil of 2-planes {V2 : V1 c V2 c V3}.
template <class F>
struct FlagLine {
  Subspace<F> v1;  // 1-dim
  Subspace<F> v3;  // 3-dim

  FlagLine(Subspace<F> v1_in, Subspace<F> v3_in) : v1(std::move(v1_in)), v3(std::move(v3_in)) {
    if (v1.dim() != 1 || v3.dim() != 3 || v1.ambient() != 5 || v3.ambient() != 5)
      throw std::invalid_argument("FlagLine: need V1 (dim 1) inside V3 (dim 3) in F^5");
    if (!v3.contains(v1)) throw std::invalid_argument("FlagLine: V1 not inside V3");
  }

  // 2-dimensional span of the line inside Lambda^2 = F^10.
  Subspace<F> span() const {
    std::vector<std::vector<F>> rows;
    auto v = v1.basis_row(0);
    for (std::size_t i = 0; i < 3; ++i) rows.push_back(wedge2(v, v3.basis_row(i)));
    auto s = Subspace<F>::span_of(rows, kWedgeDim);
    if (s.dim() != 2) throw std::logic_error("FlagLine: degenerate span");
    return s;
  }

  friend bool operator==(const FlagLine& a, const FlagLine& b) {
    return a.v1 == b.v1 && a.v3 == b.v3;
  }
};

// Recover the flag from a 2-dimensional decomposable-pencil span.
template <class F>
FlagLine<F> line_from_span(const Subspace<F>& span) {
  if (span.dim() != 2 || span.ambient() != kWedgeDim)
    throw std::invalid_argument("line_from_span: need a 2-dim subspace of F^10");
  auto w1 = span.basis_row(0), w2 = span.basis_row(1);
  if (!is_decomposable(w1) || !is_decomposable(w2))
    throw std::invalid_argument("line_from_span: basis not decomposable");
  auto s1 = support_of(w1), s2 = support_of(w2);
  if (s1.dim() != 2 || s2.dim() != 2)
    throw std::invalid_argument("line_from_span: degenerate support");
  auto v1 = s1.intersect(s2);
  auto v3 = s1.sum(s2);
  if (v1.dim() != 1 || v3.dim() != 3)
    throw std::invalid_argument("line_from_span: span is not a pencil through a flag");
  return FlagLine<F>(std::move(v1), std::move(v3));
}

template <class F>
bool line_in_y(const FlagLine<F>& line) {
  auto v = line.v1.basis_row(0);
  for (std::size_t i = 0; i < 3; ++i) {
    auto w = wedge2(v, line.v3.basis_row(i));
    if (!h1_of(w).is_zero() || !h2_of(w).is_zero()) return false;
  }
  return true;
}

// ---- the vertex conic C_v in P(V5) and its incidence structure ----

// C_v = {a2 = a3 = 0, a0 a4 + a1^2 = 0}, parametrized s -> (1, s, 0, 0, -s^2),
// with s = infinity giving e4.
template <class F>
bool on_vertex_conic(const std::vector<F>& a) {
  return a[2].is_zero() && a[3].is_zero() && (a[0] * a[4] + a[1] * a[1]).is_zero();
}

template <class F>
std::vector<F> vertex_conic_point(const F& s) {
  return {F(1), s, F(0), F(0), -(s * s)};
}
template <class F>
std::vector<F> vertex_conic_point_infinity() {
  return {F(0), F(0), F(0), F(0), F(1)};
}

// Rows of the incidence system: w in F^5 spans a line <v, w> whose pencil
// stays inside H1 and H2 iff A(v) w = 0.
template <class F>
Matrix<F> vertex_condition_matrix(const std::vector<F>& v) {
  Matrix<F> a(2, 5);
  a(0, 0) = v[3];
  a(0, 1) = -v[2];
  a(0, 2) = v[1];
  a(0, 3) = -v[0];
  // a(0,4) = 0
  a(1, 1) = -v[3];
  a(1, 2) = v[4];
  a(1, 3) = v[1];
  a(1, 4) = -v[2];
  return a;
}

// Lines of Y whose flag has vertex v: V3 must satisfy <v> c V3 c W_v where
// W_v = ker A(v). Off the vertex conic dim W_v = 3 (a unique line); on it
// dim W_v = 4 and the lines form Gr(2, W_v/<v>), a P^2 family.
template <class F>
struct VertexLines {
  bool on_conic;
  Subspace<F> w_v;
  int family_dim;  // 0 = unique line, 2 = net of lines
  std::optional<FlagLine<F>> unique_line;
};

template <class F>
VertexLines<F> lines_with_vertex(const std::vector<F>& v) {
  VertexLines<F> out{on_vertex_conic(v), Subspace<F>(vertex_condition_matrix(v).kernel(), 5), 0, std::nullopt};
  auto vsp = Subspace<F>::span_of({v}, 5);
  if (!out.w_v.contains(vsp)) throw std::logic_error("lines_with_vertex: v outside its own kernel");
  if (out.w_v.dim() == 3) {
    out.family_dim = 0;
    out.unique_line = FlagLine<F>(vsp, out.w_v);
    if (out.on_conic) throw std::logic_error("lines_with_vertex: conic point with 3-dim kernel");
  } else if (out.w_v.dim() == 4) {
    if (!out.on_conic) throw std::logic_error("lines_with_vertex: off-conic point with 4-dim kernel");
    out.family_dim = 2;
  } else {
    throw std::logic_error("lines_with_vertex: unexpected kernel dimension");
  }
  return out;
}

// ---- the plane S, the dual conic inside it, and the planes P_t ----

inline constexpr int kIdxP01 = 0;
inline constexpr int kIdxP04 = 3;
inline constexpr int kIdxP14 = 6;

template <class F>
std::vector<F> unit_wedge(int idx) {
  std::vector<F> v(kWedgeDim, F(0));
  v[idx] = F(1);
  return v;
}

template <class F>
Subspace<F> s_plane_span() {
  return Subspace<F>::span_of(
      {unit_wedge<F>(kIdxP01), unit_wedge<F>(kIdxP04), unit_wedge<F>(kIdxP14)}, kWedgeDim);
}

// q_S = p04^2 + 4 p01 p14 cuts the dual conic C_v^dual out of S.
template <class F>
F s_conic_value(const std::vector<F>& w) {
  return w[kIdxP04] * w[kIdxP04] + F(4) * w[kIdxP01] * w[kIdxP14];
}

template <class F>
bool on_dual_conic(const std::vector<F>& w) {
  return s_plane_span<F>().contains(w) && s_conic_value(w).is_zero();
}

// psi(t) = e01 - 2t e04 - t^2 e14; psi(infinity) = e14.
template <class F>
std::vector<F> dual_conic_point(const F& t) {
  std::vector<F> w(kWedgeDim, F(0));
  w[kIdxP01] = F(1);
  w[kIdxP04] = F(-2) * t;
  w[kIdxP14] = -(t * t);
  return w;
}
template <class F>
std::vector<F> dual_conic_point_infinity() {
  return unit_wedge<F>(kIdxP14);
}

// V4(t) = <e0, e1, e2 + t e3, e4>; vertex v(t) = e0 + t e1 - t^2 e4.
template <class F>
Matrix<F> v4_of_t(const F& t) {
  Matrix<F> m(4, 5);
  m(0, 0) = F(1);
  m(1, 1) = F(1);
  m(2, 2) = F(1);
  m(2, 3) = t;
  m(3, 4) = F(1);
  return m;
}

template <class F>
std::vector<F> vertex_of_t(const F& t) {
  return vertex_conic_point(t);
}

// P_t = P(V1(t) ^ V4(t)), the plane swept by lines through the vertex v(t).
template <class F>
Subspace<F> pt_span(const F& t) {
  auto v = vertex_of_t(t);
  auto v4 = v4_of_t(t);
  std::vector<std::vector<F>> rows;
  for (std::size_t i = 0; i < 4; ++i) rows.push_back(wedge2(v, v4.row(i)));
  auto s = Subspace<F>::span_of(rows, kWedgeDim);
  if (s.dim() != 3) throw std::logic_error("pt_span: expected a plane");
  return s;
}

// Linear forms (coefficient vectors) vanishing on a subspace of F^10.
template <class F>
Matrix<F> annihilator(const Subspace<F>& s) {
  return s.basis().kernel();
}

template <class F>
std::vector<Poly<F>> plane_ideal(const Subspace<F>& s, const RingPtr& p_ring) {
  auto ann = annihilator(s);
  std::vector<Poly<F>> out;
  for (std::size_t i = 0; i < ann.rows(); ++i) {
    Poly<F> f(p_ring);
    for (int j = 0; j < kWedgeDim; ++j) {
      if (ann(i, j).is_zero()) continue;
      Mono m(p_ring->nvars(), 0);
      m[j] = 1;
      f.push_term_unchecked(std::move(m), ann(i, j));
    }
    f.resort();
    out.push_back(std::move(f));
  }
  return out;
}

// ---- polynomial models ----

RingPtr p_ring();                                  // QQ[p01..p34], grevlex
std::vector<std::string> x_var_names();            // x0..x4 on P(V5)-dual side

// The ideal of Y: five Plucker quadrics plus the two hyperplanes, with
// integer coefficients (usable over any field via map_coeffs).
template <class F>
std::vector<Poly<F>> y_ideal(const RingPtr& ring) {
  std::vector<Poly<F>> out;
  const auto& terms = plucker_terms();
  for (int m = 0; m < 5; ++m) {
    Poly<F> g(ring);
    for (const auto& t : terms[m]) {
      Mono mono(ring->nvars(), 0);
      mono[t.a] += 1;
      mono[t.b] += 1;
      g += Poly<F>::term(ring, mono, F(t.sign));
    }
    out.push_back(g);
  }
  Poly<F> h1 = Poly<F>::variable(ring, kIdxP12) - Poly<F>::variable(ring, kIdxP03);
  Poly<F> h2 = Poly<F>::variable(ring, kIdxP13) - Poly<F>::variable(ring, kIdxP24);
  out.push_back(h1);
  out.push_back(h2);
  return out;
}

// Compose a polynomial with a point whose coordinates are polynomials.
template <class F>
Poly<F> compose(const Poly<F>& f, const std::vector<Poly<F>>& values) {
  if (values.size() != f.ring()->nvars()) throw std::invalid_argument("compose: arity mismatch");
  if (values.empty()) throw std::invalid_argument("compose: empty values");
  const RingPtr& target = values.front().ring();
  Poly<F> acc(target);
  for (const auto& [m, c] : f.terms()) {
    Poly<F> t = Poly<F>::constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) t = t * values[i].pow(m[i]);
    acc += t;
  }
  return acc;
}

// Restriction of a p-ring polynomial to the line through w1, w2 as a binary
// form in (s0 : s1).
template <class F>
Poly<F> restrict_to_span(const Poly<F>& f, const std::vector<F>& w1, const std::vector<F>& w2,
                         const RingPtr& s_ring) {
  std::vector<Poly<F>> values;
  for (int i = 0; i < kWedgeDim; ++i) {
    Poly<F> v = Poly<F>::variable(s_ring, 0) * w1[i] + Poly<F>::variable(s_ring, 1) * w2[i];
    values.push_back(std::move(v));
  }
  return compose(f, values);
}

// The tangent-sweep 3-fold R = closure of the union of the planes P_t.
// Generators are integral; computed once over QQ by eliminating the sweep
// parameters, then cached.
const std::vector<Poly<Rat>>& r_ideal_rat();

// 2 B_g(w, .) as a coefficient row: the polar of the Plucker quadric g_m.
template <class F>
std::vector<F> polar_row(int m, const std::vector<F>& w) {
  std::vector<F> row(kWedgeDim, F(0));
  for (const auto& t : plucker_terms()[m]) {
    row[t.b] += F(t.sign) * w[t.a];
    row[t.a] += F(t.sign) * w[t.b];
  }
  return row;
}

// Conditions for u in Lambda^2 to span, together with W_L, a plane whose
// double line on L lies in Y: H1(u) = H2(u) = 0 and B_g(w_i, u) = 0 for all
// five Plucker quadrics and both span vectors.
template <class F>
Matrix<F> double_line_conditions(const std::vector<F>& w1, const std::vector<F>& w2) {
  Matrix<F> m(12, kWedgeDim);
  m(0, kIdxP12) = F(1);
  m(0, kIdxP03) = F(-1);
  m(1, kIdxP13) = F(1);
  m(1, kIdxP24) = F(-1);
  for (int g = 0; g < 5; ++g) {
    auto r1 = polar_row(g, w1);
    auto r2 = polar_row(g, w2);
    for (int j = 0; j < kWedgeDim; ++j) {
      m(2 + g, j) = r1[j];
      m(7 + g, j) = r2[j];
    }
  }
  return m;
}

}  // namespace dp4
