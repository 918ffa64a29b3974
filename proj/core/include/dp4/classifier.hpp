#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "dp4/binary_form.hpp"
#include "dp4/charts.hpp"
#include "dp4/field_convert.hpp"
#include "dp4/grassmann.hpp"
#include "dp4/groebner.hpp"
#include "dp4/matrix.hpp"
#include "dp4/rng.hpp"

namespace dp4 {

// ---- line taxonomy ----

// The five positions a line of Y can take relative to the tangent-sweep
// 3-fold R (closure of the union of the planes P_t) and the plane S:
//   (a) outside R and S
//   (b) inside some P_t, missing the dual conic
//   (c) inside some P_t, through its tangency point psi(t)
//   (d) a tangent line of the dual conic, inside S
//   (e) a secant line of the dual conic, inside S
enum class LineType { a, b, c, d, e };

const char* line_type_name(LineType t);

struct LineClassification {
  LineType type{};
  // First normal-bundle criterion: non-free iff the line touches the dual
  // conic in exactly one closure point.
  bool non_free = false;
  // Second criterion: projective dimension of the family of double lines
  // supported on the line, from the kernel of the incidence system and,
  // independently, from the Groebner dimension of the same linear ideal.
  int family_dim = -9;
  int family_dim_ideal = -9;
  int s_meet_dim = -1;  // projective dim of L cap S: -1 empty, 0 point, 1 line
  unsigned support_points = 0;  // distinct closure points of L cap dual conic
  std::vector<unsigned> support_multiplicities;
  bool in_r = false;            // ideal-membership route into the sweep
  bool in_sweep_plane = false;  // vertex route: exists t with L inside P_t
  bool in_s = false;
  bool vertex_on_conic = false;
  std::string sweep_parameter;     // the t with L inside P_t, when one exists
  std::vector<std::string> flags;  // internal disagreements; empty when clean
};

// ---- helpers on the fixed geometry ----

// P_t for the point at infinity of the vertex conic: v = e4, V4 = ker A(e4).
template <class F>
Subspace<F> pt_span_infinity() {
  auto v = vertex_conic_point_infinity<F>();
  Subspace<F> wv(vertex_condition_matrix(v).kernel(), kAmbient);
  if (wv.dim() != 4) throw std::logic_error("pt_span_infinity: kernel is not 4-dim");
  std::vector<std::vector<F>> rows;
  for (std::size_t i = 0; i < wv.dim(); ++i) rows.push_back(wedge2(v, wv.basis_row(i)));
  auto s = Subspace<F>::span_of(rows, kWedgeDim);
  if (s.dim() != 3) throw std::logic_error("pt_span_infinity: expected a plane");
  return s;
}

// q_S = p04^2 + 4 p01 p14 as a polynomial.
template <class F>
Poly<F> s_conic_poly(const RingPtr& ring) {
  auto p01 = Poly<F>::variable(ring, kIdxP01);
  auto p04 = Poly<F>::variable(ring, kIdxP04);
  auto p14 = Poly<F>::variable(ring, kIdxP14);
  return p04 * p04 + Poly<F>::constant(ring, F(4)) * p01 * p14;
}

template <class F>
std::vector<Poly<F>> r_ideal_gens(const RingPtr& ring) {
  std::vector<Poly<F>> out;
  for (const auto& f : r_ideal_rat()) out.push_back(poly_to<F>(f, ring));
  return out;
}

// Scheme intersection of a line span with the dual conic: common-root
// structure of the restrictions of the forms cutting the conic (the linear
// annihilator of S plus q_S).
template <class F>
RootSummary<F> dual_conic_support(const Subspace<F>& span) {
  auto w1 = span.basis_row(0);
  auto w2 = span.basis_row(1);
  std::vector<BinaryForm<F>> forms;
  auto ann = annihilator(s_plane_span<F>());
  for (std::size_t r = 0; r < ann.rows(); ++r) {
    F c0(0), c1(0);
    for (int j = 0; j < kWedgeDim; ++j) {
      c0 += ann(r, j) * w1[j];
      c1 += ann(r, j) * w2[j];
    }
    forms.push_back(BinaryForm<F>({c0, c1}));
  }
  RingPtr s_ring = make_ring({"s0", "s1"}, Order::grevlex, 0);
  auto q = restrict_to_span(s_conic_poly<F>(p_ring()), w1, w2, s_ring);
  forms.push_back(BinaryForm<F>::from_poly(q, 0, 1));
  return BinaryFormSystem<F>(std::move(forms)).analyze(field_characteristic<F>());
}

// The double-line incidence space U_L and the dimension of the family
// P(U_L / W_L), via the matrix kernel and via the Groebner dimension of the
// same conditions read as a linear ideal.
template <class F>
struct DoubleLineFamily {
  Subspace<F> u_l;
  int dim_kernel;  // dim U_L - 3
  int dim_ideal;   // ideal_dim of the conditions, minus 3
};

template <class F>
DoubleLineFamily<F> double_line_family(const Subspace<F>& span) {
  auto w1 = span.basis_row(0);
  auto w2 = span.basis_row(1);
  auto cond = double_line_conditions(w1, w2);
  Subspace<F> u(cond.kernel(), kWedgeDim);

  RingPtr ring = p_ring();
  std::vector<Poly<F>> gens;
  for (std::size_t r = 0; r < cond.rows(); ++r) {
    Poly<F> f(ring);
    for (int j = 0; j < kWedgeDim; ++j) {
      if (cond(r, j).is_zero()) continue;
      Mono m(ring->nvars(), 0);
      m[j] = 1;
      f.push_term_unchecked(std::move(m), cond(r, j));
    }
    f.resort();
    if (!f.is_zero()) gens.push_back(std::move(f));
  }
  int d = gb::ideal_dim(gens).dim;
  return {std::move(u), static_cast<int>(u.dim()) - 3, d - 3};
}

// ---- the classifier ----

template <class F>
LineClassification classify_line(const FlagLine<F>& line) {
  if (field_characteristic<F>() == 2)
    throw std::domain_error("classify_line: needs odd characteristic");
  if (!line_in_y(line)) throw std::invalid_argument("classify_line: line does not lie in Y");

  LineClassification out;
  auto span = line.span();
  auto w1 = span.basis_row(0);
  auto w2 = span.basis_row(1);

  // position relative to S
  auto meet = span.intersect(s_plane_span<F>());
  out.s_meet_dim = static_cast<int>(meet.dim()) - 1;
  out.in_s = meet.dim() == 2;

  // intersection with the dual conic
  auto support = dual_conic_support(span);
  if (support.all_zero) out.flags.push_back("dual-conic-contains-line");
  out.support_points = support.distinct_points;
  out.support_multiplicities = support.multiplicities;

  // vertex route into the sweep
  auto v = line.v1.basis_row(0);
  out.vertex_on_conic = on_vertex_conic(v);
  if (out.vertex_on_conic) {
    std::optional<Subspace<F>> plane;
    std::string t_name;
    if (!v[0].is_zero()) {
      F t = v[1] / v[0];
      plane = pt_span(t);
      t_name = t.str();
    } else {
      plane = pt_span_infinity<F>();
      t_name = "inf";
    }
    if (plane->contains(span)) {
      out.in_sweep_plane = true;
      out.sweep_parameter = t_name;
    }
  }

  // ideal route into R: every generator restricts to zero on the span
  {
    RingPtr s_ring = make_ring({"s0", "s1"}, Order::grevlex, 0);
    out.in_r = true;
    for (const auto& f : r_ideal_gens<F>(p_ring())) {
      if (!restrict_to_span(f, w1, w2, s_ring).is_zero()) {
        out.in_r = false;
        break;
      }
    }
  }
  // Off S the two routes must agree; inside S only the ideal route sees the
  // secant lines (S sits in the closure R but not in any single P_t).
  if (!out.in_s && out.in_r != out.in_sweep_plane)
    out.flags.push_back("sweep-membership-disagreement");
  if (out.in_s && !out.in_r) out.flags.push_back("section-line-outside-sweep-closure");

  // decision tree
  if (out.in_s) {
    if (support.distinct_points == 2) {
      out.type = LineType::e;
    } else if (support.distinct_points == 1 && support.total_multiplicity == 2) {
      out.type = LineType::d;
    } else {
      out.type = LineType::e;
      out.flags.push_back("section-line-support-anomaly");
    }
  } else if (out.in_r) {
    out.type = support.distinct_points == 1 ? LineType::c : LineType::b;
    if (out.s_meet_dim != 0) out.flags.push_back("sweep-line-section-meet-anomaly");
    if (support.distinct_points > 1) out.flags.push_back("sweep-line-support-anomaly");
  } else {
    out.type = LineType::a;
    if (support.distinct_points != 0) out.flags.push_back("outer-line-support-anomaly");
  }

  // the two normal-bundle criteria, compared
  out.non_free = support.distinct_points == 1;
  auto fam = double_line_family(span);
  out.family_dim = fam.dim_kernel;
  out.family_dim_ideal = fam.dim_ideal;
  if (!fam.u_l.contains(span)) out.flags.push_back("incidence-kernel-misses-line");
  if (out.family_dim != out.family_dim_ideal) out.flags.push_back("family-dim-route-mismatch");
  if (out.family_dim != 0 && out.family_dim != 1) out.flags.push_back("family-dim-out-of-range");
  if (out.non_free != (out.family_dim == 1)) out.flags.push_back("criteria-disagreement");
  bool type_nonfree = out.type == LineType::c || out.type == LineType::d;
  if (type_nonfree != out.non_free) out.flags.push_back("type-bundle-disagreement");
  return out;
}

// ---- pairs (conic plane, 4-space) ----

// K_{V4} = Lambda^2 V4 cap H1 cap H2. Computed honestly (the dimension is 4
// for every V4; counting code tallies deviations instead of assuming).
template <class F>
Subspace<F> k_of_v4(const Subspace<F>& v4) {
  if (v4.dim() != 4 || v4.ambient() != kAmbient)
    throw std::invalid_argument("k_of_v4: need a 4-space in F^5");
  std::vector<std::vector<F>> rows;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) rows.push_back(wedge2(v4.basis_row(i), v4.basis_row(j)));
  auto w2 = Subspace<F>::span_of(rows, kWedgeDim);
  if (w2.dim() != 6) throw std::logic_error("k_of_v4: wedge square is not 6-dim");
  Matrix<F> h(2, w2.dim());
  for (std::size_t c = 0; c < w2.dim(); ++c) {
    auto b = w2.basis_row(c);
    h(0, c) = h1_of(b);
    h(1, c) = h2_of(b);
  }
  auto combos = h.kernel();
  std::vector<std::vector<F>> out;
  for (std::size_t i = 0; i < combos.rows(); ++i) {
    std::vector<F> vec(kWedgeDim, F(0));
    for (std::size_t c = 0; c < w2.dim(); ++c)
      for (int j = 0; j < kWedgeDim; ++j) vec[j] += combos(i, c) * w2.basis()(c, j);
    out.push_back(std::move(vec));
  }
  return Subspace<F>::span_of(out, kWedgeDim);
}

// Coordinates of wedge^4 of the rows in Lambda^4, indexed by omitted column.
template <class F>
std::array<F, 5> v4_volume(const Matrix<F>& basis) {
  if (basis.rows() != 4 || basis.cols() != 5)
    throw std::invalid_argument("v4_volume: need a 4x5 matrix");
  std::array<F, 5> vol = {F(0), F(0), F(0), F(0), F(0)};
  for (int m = 0; m < 5; ++m) {
    Matrix<F> sub(4, 4);
    for (int i = 0; i < 4; ++i) {
      int cc = 0;
      for (int j = 0; j < 5; ++j) {
        if (j == m) continue;
        sub(i, cc++) = basis(i, j);
      }
    }
    vol[m] = sub.det();
  }
  return vol;
}

template <class F>
struct ConicPair {
  Subspace<F> u3;  // 3-space inside K_{V4}
  Subspace<F> v4;
};

template <class F>
ConicPair<F> make_conic_pair(Subspace<F> u3, Subspace<F> v4) {
  if (u3.dim() != 3 || u3.ambient() != kWedgeDim)
    throw std::invalid_argument("make_conic_pair: need a 3-space in F^10");
  if (!k_of_v4(v4).contains(u3))
    throw std::invalid_argument("make_conic_pair: plane not inside K of the 4-space");
  return {std::move(u3), std::move(v4)};
}

// Gram matrix, in the U3 basis, of the quadratic form cutting the conic
// P(U3) cap Gr(2, V4) out of P(U3): u ^ u = q(u) * vol(V4) in Lambda^4, and
// wedge22 polarizes to 2 u ^ w.
template <class F>
Matrix<F> conic_gram(const ConicPair<F>& pair) {
  if (field_characteristic<F>() == 2)
    throw std::domain_error("conic_gram: needs odd characteristic");
  auto vol = v4_volume(pair.v4.basis());
  int m = -1;
  for (int i = 0; i < 5 && m < 0; ++i)
    if (!vol[i].is_zero()) m = i;
  if (m < 0) throw std::logic_error("conic_gram: degenerate 4-space");
  F denom = (F(2) * vol[m]).inv();
  Matrix<F> g(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      auto w = wedge22(pair.u3.basis_row(i), pair.u3.basis_row(j));
      g(i, j) = w[m] * denom;
      g(j, i) = g(i, j);
    }
  return g;
}

// Rank of the conic: 3 smooth, 2 line pair, 1 double line, 0 when the whole
// plane P(U3) sits inside the Grassmannian.
template <class F>
int conic_rank(const ConicPair<F>& pair) {
  return static_cast<int>(conic_gram(pair).rank());
}

template <class F>
bool pair_in_dbar(const ConicPair<F>& pair) {
  return conic_rank(pair) <= 1;
}

// Support line of a rank-1 pair: radical of the Gram form, mapped back to
// Lambda^2 and read as a pencil.
template <class F>
FlagLine<F> pair_support_line(const ConicPair<F>& pair) {
  auto rad = conic_gram(pair).kernel();
  if (rad.rows() != 2) throw std::invalid_argument("pair_support_line: rank is not 1");
  std::vector<std::vector<F>> rows;
  for (std::size_t i = 0; i < rad.rows(); ++i) {
    std::vector<F> vec(kWedgeDim, F(0));
    for (int c = 0; c < 3; ++c)
      for (int j = 0; j < kWedgeDim; ++j) vec[j] += rad(i, c) * pair.u3.basis()(c, j);
    rows.push_back(std::move(vec));
  }
  return line_from_span(Subspace<F>::span_of(rows, kWedgeDim));
}

// Homogeneous ideal of the conic P(U3) cap Gr inside P^9.
template <class F>
std::vector<Poly<F>> pair_conic_ideal(const ConicPair<F>& pair, const RingPtr& ring) {
  auto out = plane_ideal(pair.u3, ring);
  for (auto& g : y_ideal<F>(ring)) out.push_back(std::move(g));
  return out;
}

// ---- recovering the pair attached to a double line ----

// Antisymmetric matrix of a 2-form; its row space is the smallest subspace E
// with w inside Lambda^2 E.
template <class F>
Matrix<F> two_form_matrix(const std::vector<F>& w) {
  Matrix<F> m(kAmbient, kAmbient);
  for (int k = 0; k < kWedgeDim; ++k) {
    int i = kPairs[k][0], j = kPairs[k][1];
    m(i, j) = w[k];
    m(j, i) = -w[k];
  }
  return m;
}

template <class F>
Subspace<F> two_form_support_space(const std::vector<F>& w) {
  Matrix<F> m = two_form_matrix(w);
  std::vector<std::vector<F>> rows;
  for (int i = 0; i < kAmbient; ++i) rows.push_back(m.row(i));
  return Subspace<F>::span_of(rows, kAmbient);
}

// Smallest E with U3 inside Lambda^2 E: the pair's 4-space when dim is 4.
template <class F>
Subspace<F> envelope(const Subspace<F>& u3) {
  Subspace<F> e = Subspace<F>::span_of({}, kAmbient);
  for (std::size_t i = 0; i < u3.dim(); ++i)
    e = e.sum(two_form_support_space(u3.basis_row(i)));
  return e;
}

// The plane spanned by a line's span and one more incidence direction u from
// U_L, together with its enveloping 4-space.
template <class F>
ConicPair<F> double_line_pair(const FlagLine<F>& line, const std::vector<F>& u) {
  auto span = line.span();
  auto u3 = span.sum(Subspace<F>::span_of({u}, kWedgeDim));
  if (u3.dim() != 3) throw std::invalid_argument("double_line_pair: direction lies on the span");
  auto env = envelope(u3);
  if (env.dim() != 4)
    throw std::invalid_argument("double_line_pair: plane has no enveloping 4-space");
  return make_conic_pair(std::move(u3), std::move(env));
}

// ---- fibers of the chart family over special base points ----

// Over the Q3-singular chart point (0,0,t,0) the fiber splits as P_t cup S;
// each equality is checked at the ideal level against the specialized chart
// generators.
struct SingFiberCheck {
  bool fiber_is_plane_union = false;
  bool sweep_factor_matches = false;
  bool section_factor_matches = false;
};
SingFiberCheck verify_sing_fiber(const Rat& t);

// Over (0,0,0,d), d != 0, the chart fiber is an irreducible rank-3 quadric
// cone through the fixed line {p01, p02}; the d-family realizes the
// one-parameter family of double lines on a type (c) line.
struct ConeFamilyCheck {
  bool displayed_matches_chart = false;
  bool contains_line = false;
  bool base_on_smooth_q3 = false;
  bool rank_three = false;
  bool family_moves = false;
};
ConeFamilyCheck verify_cone_family(const std::vector<Rat>& ds);

// Chart generators with the four parameters frozen, in the 10-variable ring.
std::vector<Poly<Rat>> specialize_chart(const ChartModel& chart, const std::vector<Rat>& params,
                                        const RingPtr& out_ring);

// ---- seeded random lines ----

template <class F>
F random_scalar(Rng& rng) {
  if constexpr (std::is_same_v<F, Rat>) {
    return Rat(static_cast<long>(rng.uniform_int(-6, 6)));
  } else {
    return F(static_cast<long long>(rng.uniform(F::modulus())));
  }
}

template <class F>
std::vector<F> random_vector(Rng& rng, std::size_t n) {
  std::vector<F> v(n);
  for (auto& x : v) x = random_scalar<F>(rng);
  return v;
}

// A random line of Y, mixing construction modes so all five types occur.
template <class F>
FlagLine<F> random_line_in_y(Rng& rng) {
  for (;;) {
    switch (rng.uniform(8)) {
      case 0:
      case 1:
      case 2: {  // generic vertex: types (a) and, inside S, (e)
        auto v = random_vector<F>(rng, kAmbient);
        bool zero = true;
        for (const auto& x : v) zero = zero && x.is_zero();
        if (zero || on_vertex_conic(v)) continue;
        auto vl = lines_with_vertex(v);
        return *vl.unique_line;
      }
      case 3:
      case 4: {  // vertex on the conic, random plane inside W_v: (b), (c), (d)
        auto v = rng.uniform(8) == 0 ? vertex_conic_point_infinity<F>()
                                     : vertex_conic_point(random_scalar<F>(rng));
        auto vl = lines_with_vertex(v);
        std::vector<std::vector<F>> rows = {v};
        for (int k = 0; k < 2; ++k) {
          std::vector<F> w(kAmbient, F(0));
          for (std::size_t i = 0; i < vl.w_v.dim(); ++i) {
            F c = random_scalar<F>(rng);
            for (int j = 0; j < kAmbient; ++j) w[j] += c * vl.w_v.basis()(i, j);
          }
          rows.push_back(std::move(w));
        }
        auto v3 = Subspace<F>::span_of(rows, kAmbient);
        if (v3.dim() != 3) continue;
        return FlagLine<F>(Subspace<F>::span_of({v}, kAmbient), std::move(v3));
      }
      case 5: {  // through the tangency point psi(t): type (c), sometimes (d)
        F t = random_scalar<F>(rng);
        auto v4 = v4_of_t(t);
        std::vector<F> z(kAmbient, F(0));
        for (int i = 0; i < 4; ++i) {
          F c = random_scalar<F>(rng);
          for (int j = 0; j < kAmbient; ++j) z[j] += c * v4(i, j);
        }
        std::vector<F> u = {F(0), F(1), F(0), F(0), F(-2) * t};  // psi(t) direction
        auto v3 = Subspace<F>::span_of({vertex_of_t(t), u, z}, kAmbient);
        if (v3.dim() != 3) continue;
        return FlagLine<F>(Subspace<F>::span_of({vertex_of_t(t)}, kAmbient), std::move(v3));
      }
      case 6: {  // tangent line of the dual conic: type (d)
        std::vector<F> p, dir;
        if (rng.uniform(8) == 0) {
          p = dual_conic_point_infinity<F>();
          dir = unit_wedge<F>(kIdxP04);
        } else {
          F t = random_scalar<F>(rng);
          p = dual_conic_point(t);
          dir = unit_wedge<F>(kIdxP04);
          for (int j = 0; j < kWedgeDim; ++j) dir[j] += t * unit_wedge<F>(kIdxP14)[j];
        }
        return line_from_span(Subspace<F>::span_of({p, dir}, kWedgeDim));
      }
      default: {  // random line inside S: types (e) and (d)
        auto s = s_plane_span<F>();
        std::vector<std::vector<F>> pts;
        for (int k = 0; k < 2; ++k) {
          std::vector<F> w(kWedgeDim, F(0));
          for (std::size_t i = 0; i < 3; ++i) {
            F c = random_scalar<F>(rng);
            for (int j = 0; j < kWedgeDim; ++j) w[j] += c * s.basis()(i, j);
          }
          pts.push_back(std::move(w));
        }
        auto span = Subspace<F>::span_of(pts, kWedgeDim);
        if (span.dim() != 2) continue;
        return line_from_span(span);
      }
    }
  }
}

}  // namespace dp4
