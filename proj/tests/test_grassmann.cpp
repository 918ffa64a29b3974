#include <doctest.h>

#include <string>
#include <vector>

#include "dp4/field_convert.hpp"
#include "dp4/grassmann.hpp"
#include "dp4/groebner.hpp"
#include "dp4/prime_field.hpp"
#include "dp4/rational.hpp"

using namespace dp4;

namespace {

std::vector<Rat> e5(int i) {
  std::vector<Rat> v(5, Rat(0));
  v[i] = Rat(1);
  return v;
}

Subspace<Rat> sp(const std::vector<std::vector<Rat>>& rows) {
  return Subspace<Rat>::span_of(rows, 5);
}

FlagLine<Rat> table_line(char type) {
  switch (type) {
    case 'a': return FlagLine<Rat>(sp({e5(2)}), sp({e5(0), e5(2), e5(3)}));
    case 'b': return FlagLine<Rat>(sp({e5(0)}), sp({e5(0), e5(2), e5(4)}));
    case 'c': return FlagLine<Rat>(sp({e5(0)}), sp({e5(0), e5(1), e5(2)}));
    case 'd': return FlagLine<Rat>(sp({e5(0)}), sp({e5(0), e5(1), e5(4)}));
    case 'e': return FlagLine<Rat>(sp({e5(1)}), sp({e5(0), e5(1), e5(4)}));
    default: throw std::logic_error("bad type");
  }
}

// Restrict a p-ring polynomial to a subspace with symbolic coefficients and
// check it vanishes identically.
bool vanishes_on(const Poly<Rat>& f, const Subspace<Rat>& s) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < s.dim(); ++i) names.push_back("u" + std::to_string(i));
  auto uring = make_ring(names);
  std::vector<Poly<Rat>> values;
  for (int k = 0; k < kWedgeDim; ++k) {
    Poly<Rat> v = Poly<Rat>::zero(uring);
    for (std::size_t i = 0; i < s.dim(); ++i)
      v += Poly<Rat>::variable(uring, i) * s.basis()(i, k);
    values.push_back(std::move(v));
  }
  return compose(f, values).is_zero();
}

bool subspace_in_r(const Subspace<Rat>& s) {
  for (const auto& g : r_ideal_rat())
    if (!vanishes_on(g, s)) return false;
  return true;
}

}  // namespace

TEST_CASE("plucker quadrics annihilate symbolic wedges") {
  std::vector<std::string> names;
  for (int i = 0; i < 5; ++i) names.push_back("x" + std::to_string(i));
  for (int i = 0; i < 5; ++i) names.push_back("y" + std::to_string(i));
  auto ring = make_ring(names);
  std::vector<Poly<Rat>> w;
  for (const auto& pr : kPairs) {
    auto xi = Poly<Rat>::variable(ring, pr[0]);
    auto xj = Poly<Rat>::variable(ring, pr[1]);
    auto yi = Poly<Rat>::variable(ring, 5 + pr[0]);
    auto yj = Poly<Rat>::variable(ring, 5 + pr[1]);
    w.push_back(xi * yj - xj * yi);
  }
  auto gens = y_ideal<Rat>(p_ring());
  for (int m = 0; m < 5; ++m) {
    CHECK(plucker_terms()[m].size() == 3);
    CHECK(compose(gens[m], w).is_zero());
  }
  // the hyperplane forms do not vanish on all of Gr(2,5)
  CHECK_FALSE(compose(gens[5], w).is_zero());
  CHECK_FALSE(compose(gens[6], w).is_zero());
  // the classical three-term relation is the quadric omitting index 4
  auto classical = parse_poly<Rat>(gens[4].ring(), "p01*p23 - p02*p13 + p03*p12");
  CHECK((gens[4] == classical || gens[4] == -classical));
}

TEST_CASE("wedge of explicit 2-planes") {
  auto w = wedge2(e5(0), e5(1));
  for (int k = 0; k < kWedgeDim; ++k) CHECK(w[k] == (k == kIdxP01 ? Rat(1) : Rat(0)));

  std::vector<Rat> x = {Rat(1), Rat(0), Rat(1), Rat(0), Rat(0)};
  std::vector<Rat> y = {Rat(0), Rat(1), Rat(0), Rat(1), Rat(0)};
  auto v = wedge2(x, y);
  std::vector<Rat> expect(kWedgeDim, Rat(0));
  expect[kIdxP01] = Rat(1);
  expect[kIdxP03] = Rat(1);
  expect[kIdxP12] = Rat(-1);
  expect[pair_index(2, 3)] = Rat(1);
  CHECK(v == expect);
  CHECK(on_grassmannian(v));
  CHECK_FALSE(on_y(v));  // h1 = p12 - p03 = -2
}

TEST_CASE("support recovers the plane") {
  std::vector<Rat> x = {Rat(2), Rat(-1), Rat(3), Rat(0), Rat(5)};
  std::vector<Rat> y = {Rat(0), Rat(1), Rat(7), Rat(-2), Rat(1)};
  auto w = wedge2(x, y);
  CHECK(on_grassmannian(w));
  CHECK(support_of(w) == sp({x, y}));

  using F7 = Fp<7>;
  std::vector<F7> xf, yf;
  for (auto& c : x) xf.push_back(rat_to<F7>(c));
  for (auto& c : y) yf.push_back(rat_to<F7>(c));
  auto wf = wedge2(xf, yf);
  CHECK(support_of(wf) == Subspace<F7>::span_of({xf, yf}, 5));
}

TEST_CASE("wedge22 polarizes the quadrics") {
  std::vector<Rat> w(kWedgeDim, Rat(0));
  w[kIdxP01] = Rat(3);
  w[pair_index(2, 3)] = Rat(-2);
  w[kIdxP14] = Rat(1);
  auto sq = wedge22(w, w);
  auto g = plucker_values(w);
  for (int m = 0; m < 5; ++m) CHECK(sq[m] == Rat(2) * g[m]);
}

TEST_CASE("flag line span round trip") {
  for (char t : {'a', 'b', 'c', 'd', 'e'}) {
    auto line = table_line(t);
    auto span = line.span();
    CHECK(span.dim() == 2);
    auto back = line_from_span(span);
    CHECK(back == line);
  }
}

TEST_CASE("table lines lie in Y") {
  for (char t : {'a', 'b', 'c', 'd', 'e'}) CHECK(line_in_y(table_line(t)));
  // same vertex as row (a) but a plane violating the hyperplane cut
  FlagLine<Rat> bad(sp({e5(0)}), sp({e5(0), e5(2), e5(3)}));
  CHECK_FALSE(line_in_y(bad));
}

TEST_CASE("vertex conic and the line fibration") {
  for (long s : {0L, 1L, -2L, 5L})
    CHECK(on_vertex_conic(vertex_conic_point(Rat(s))));
  CHECK(on_vertex_conic(vertex_conic_point_infinity<Rat>()));
  CHECK_FALSE(on_vertex_conic(e5(1)));
  CHECK_FALSE(on_vertex_conic(e5(2)));

  // off the conic: a unique line through the vertex
  auto off = lines_with_vertex(e5(2));
  CHECK_FALSE(off.on_conic);
  CHECK(off.family_dim == 0);
  REQUIRE(off.unique_line.has_value());
  CHECK(off.unique_line->v3 == sp({e5(0), e5(2), e5(3)}));  // the Table row (a) plane
  CHECK(line_in_y(*off.unique_line));

  auto off1 = lines_with_vertex(e5(1));
  CHECK(off1.family_dim == 0);
  CHECK(off1.unique_line->v3 == sp({e5(0), e5(1), e5(4)}));  // the Table row (e) plane

  // on the conic: a net of lines inside W_v = V4(t)
  auto on0 = lines_with_vertex(e5(0));
  CHECK(on0.on_conic);
  CHECK(on0.family_dim == 2);
  CHECK(on0.w_v == sp({e5(0), e5(1), e5(2), e5(4)}));

  auto on1 = lines_with_vertex(vertex_conic_point(Rat(1)));
  CHECK(on1.family_dim == 2);
  Matrix<Rat> v41 = v4_of_t(Rat(1));
  CHECK(on1.w_v == Subspace<Rat>(v41, 5));
}

TEST_CASE("dual conic sits in S inside Y") {
  auto s_span = s_plane_span<Rat>();
  for (long t : {0L, 1L, -3L}) {
    auto w = dual_conic_point(Rat(t));
    CHECK(on_y(w));
    CHECK(s_span.contains(w));
    CHECK(s_conic_value(w) == Rat(0));
    CHECK(on_dual_conic(w));
  }
  auto winf = dual_conic_point_infinity<Rat>();
  CHECK(on_y(winf));
  CHECK(on_dual_conic(winf));
  CHECK(dual_conic_point(Rat(0)) == unit_wedge<Rat>(kIdxP01));

  std::vector<Rat> off(kWedgeDim, Rat(0));
  off[kIdxP01] = Rat(1);
  off[kIdxP04] = Rat(1);
  off[kIdxP14] = Rat(1);
  CHECK(s_span.contains(off));
  CHECK_FALSE(on_dual_conic(off));  // q_S = 1 + 4 = 5
}

TEST_CASE("plane sweep incidences") {
  auto s_span = s_plane_span<Rat>();
  // every P_t lies in Y (checked with symbolic coefficients)
  for (long t : {0L, 1L, 2L, -1L}) {
    auto pt = pt_span(Rat(t));
    for (const auto& g : y_ideal<Rat>(p_ring())) CHECK(vanishes_on(g, pt));

    // P_t meets S in the tangent line of the dual conic at psi(t)
    auto meet = pt.intersect(s_span);
    CHECK(meet.dim() == 2);
    std::vector<Rat> tangent_dir(kWedgeDim, Rat(0));
    tangent_dir[kIdxP04] = Rat(1);
    tangent_dir[kIdxP14] = Rat(t);
    CHECK(meet == Subspace<Rat>::span_of({dual_conic_point(Rat(t)), tangent_dir}, kWedgeDim));
  }
  // S itself lies in Y
  for (const auto& g : y_ideal<Rat>(p_ring())) CHECK(vanishes_on(g, s_span));

  // pairwise meets of the sweep planes are single points of S
  for (auto [t, s] : std::vector<std::pair<long, long>>{{0, 1}, {1, 2}, {-1, 3}}) {
    auto meet = pt_span(Rat(t)).intersect(pt_span(Rat(s)));
    CHECK(meet.dim() == 1);
    CHECK(s_span.contains(meet));
    auto point = wedge2(vertex_conic_point(Rat(t)), vertex_conic_point(Rat(s)));
    CHECK(meet == Subspace<Rat>::span_of({point}, kWedgeDim));
  }
  // the worked example: P_0 contains psi(0) = e0 ^ e1
  CHECK(pt_span(Rat(0)).contains(dual_conic_point(Rat(0))));
}

TEST_CASE("sweep ideal matches the frozen generators") {
  const auto& rgens = r_ideal_rat();
  REQUIRE_FALSE(rgens.empty());
  auto ring = rgens.front().ring();
  std::vector<std::string> frozen = {
      "p01*p12^2 - p02^2*p14 + p02*p04*p12",
      "p01*p24 - p02*p14 + p04*p12",
      "p01*p34 + p04*p24 - p12*p14",
      "p02*p24 - p12^2",
      "p02*p34 - p12*p24",
      "p03 - p12",
      "p12*p34 - p24^2",
      "p13 - p24",
      "p23",
  };
  std::vector<Poly<Rat>> expect;
  for (const auto& s : frozen) expect.push_back(parse_poly<Rat>(ring, s));
  CHECK(gb::ideal_equal(rgens, expect));
}

TEST_CASE("sweep membership separates the line types") {
  CHECK(subspace_in_r(pt_span(Rat(1))));
  CHECK(subspace_in_r(table_line('b').span()));
  CHECK(subspace_in_r(table_line('c').span()));
  CHECK_FALSE(subspace_in_r(table_line('a').span()));
  // the closure of the sweep contains the full plane S
  CHECK(subspace_in_r(s_plane_span<Rat>()));
}

TEST_CASE("double line incidence kernel dimensions") {
  const char types[] = {'a', 'b', 'c', 'd', 'e'};
  const std::size_t expected[] = {3, 3, 4, 4, 3};
  for (int i = 0; i < 5; ++i) {
    auto span = table_line(types[i]).span();
    auto w1 = span.basis_row(0), w2 = span.basis_row(1);
    auto cond = double_line_conditions(w1, w2);
    auto u = Subspace<Rat>(cond.kernel(), kWedgeDim);
    CHECK(u.dim() == expected[i]);
    CHECK(u.contains(span));  // the line's own pencil satisfies the conditions
  }
}
