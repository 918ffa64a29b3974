#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "dp4/classifier.hpp"
#include "dp4/prime_field.hpp"

using namespace dp4;

namespace {

template <class F>
std::vector<F> e5(int i) {
  std::vector<F> v(5, F(0));
  v[i] = F(1);
  return v;
}

template <class F>
FlagLine<F> table_line(char row) {
  auto sp = [](std::vector<std::vector<F>> rows) {
    return Subspace<F>::span_of(rows, kAmbient);
  };
  switch (row) {
    case 'a': return FlagLine<F>(sp({e5<F>(2)}), sp({e5<F>(0), e5<F>(2), e5<F>(3)}));
    case 'b': return FlagLine<F>(sp({e5<F>(0)}), sp({e5<F>(0), e5<F>(2), e5<F>(4)}));
    case 'c': return FlagLine<F>(sp({e5<F>(0)}), sp({e5<F>(0), e5<F>(1), e5<F>(2)}));
    case 'd': return FlagLine<F>(sp({e5<F>(0)}), sp({e5<F>(0), e5<F>(1), e5<F>(4)}));
    case 'e': return FlagLine<F>(sp({e5<F>(1)}), sp({e5<F>(0), e5<F>(1), e5<F>(4)}));
  }
  throw std::logic_error("bad row");
}

template <class F>
void check_table_verdicts() {
  const std::map<char, LineType> want_type = {{'a', LineType::a},
                                              {'b', LineType::b},
                                              {'c', LineType::c},
                                              {'d', LineType::d},
                                              {'e', LineType::e}};
  const std::map<char, bool> want_nonfree = {
      {'a', false}, {'b', false}, {'c', true}, {'d', true}, {'e', false}};
  const std::map<char, int> want_meet = {{'a', -1}, {'b', 0}, {'c', 0}, {'d', 1}, {'e', 1}};
  for (char row : {'a', 'b', 'c', 'd', 'e'}) {
    CAPTURE(row);
    auto cls = classify_line(table_line<F>(row));
    CHECK(cls.type == want_type.at(row));
    CHECK(cls.non_free == want_nonfree.at(row));
    CHECK(cls.family_dim == (want_nonfree.at(row) ? 1 : 0));
    CHECK(cls.family_dim == cls.family_dim_ideal);
    CHECK(cls.s_meet_dim == want_meet.at(row));
    CHECK(cls.flags.empty());
    CHECK(cls.in_s == (row == 'd' || row == 'e'));
    CHECK(cls.in_r == (row != 'a'));
    CHECK(cls.vertex_on_conic == (row == 'b' || row == 'c' || row == 'd'));
    if (row == 'b' || row == 'c' || row == 'd') CHECK(cls.sweep_parameter == "0");
    CHECK(cls.support_points == (row == 'e' ? 2u : (want_nonfree.at(row) ? 1u : 0u)));
    if (row == 'd') {
      REQUIRE(cls.support_multiplicities.size() == 1);
      CHECK(cls.support_multiplicities[0] == 2);
    }
  }
}

// First incidence direction outside the line span for which the plane has an
// enveloping 4-space; combos of up to two kernel basis vectors.
template <class F>
std::vector<std::vector<F>> u_directions(const FlagLine<F>& line) {
  auto span = line.span();
  auto fam = double_line_family(span);
  std::vector<std::vector<F>> out;
  const auto& u = fam.u_l;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    if (span.contains(u.basis_row(i))) continue;
    out.push_back(u.basis_row(i));
  }
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = i + 1; j < u.dim(); ++j) {
      auto v = u.basis_row(i);
      auto w = u.basis_row(j);
      for (int k = 0; k < kWedgeDim; ++k) v[k] += w[k];
      if (!span.contains(v)) out.push_back(v);
    }
  return out;
}

}  // namespace

TEST_CASE("table rows classify to the published verdicts") {
  check_table_verdicts<Rat>();
  check_table_verdicts<Fp<7>>();
  check_table_verdicts<Fp<11>>();
}

TEST_CASE("classification requires odd characteristic") {
  CHECK_THROWS_AS(classify_line(table_line<Fp<2>>('a')), std::domain_error);
}

TEST_CASE("random lines keep every cross-check clean") {
  std::set<std::string> seen;
  auto run = [&](auto field_tag, std::uint64_t seed, int n) {
    using F = decltype(field_tag);
    Rng rng(seed);
    for (int i = 0; i < n; ++i) {
      auto line = random_line_in_y<F>(rng);
      auto cls = classify_line(line);
      CAPTURE(i);
      CAPTURE(line_type_name(cls.type));
      CHECK(cls.flags.empty());
      seen.insert(line_type_name(cls.type));
    }
  };
  run(Rat(), 20240814, 30);
  run(Fp<7>(), 814, 60);
  run(Fp<11>(), 815, 40);
  CHECK(seen.size() == 5);
}

TEST_CASE("double line planes recover the expected pairs") {
  SUBCASE("outer line: unique plane, rank one, support recovered") {
    auto line = table_line<Rat>('a');
    auto dirs = u_directions(line);
    REQUIRE(!dirs.empty());
    auto pair = double_line_pair(line, dirs.front());
    CHECK(conic_rank(pair) == 1);
    CHECK(pair_in_dbar(pair));
    auto back = pair_support_line(pair);
    CHECK(back.v1 == line.v1);
    CHECK(back.v3 == line.v3);
    auto ideal = pair_conic_ideal(pair, p_ring());
    CHECK(gb::ideal_dim(ideal).dim == 2);
  }

  SUBCASE("sweep line: its unique plane is the sweep plane itself") {
    auto line = table_line<Rat>('b');
    auto dirs = u_directions(line);
    REQUIRE(!dirs.empty());
    bool found_plane = false;
    for (const auto& u : dirs) {
      auto span = line.span();
      auto u3 = span.sum(Subspace<Rat>::span_of({u}, kWedgeDim));
      if (u3 == pt_span(Rat(0))) found_plane = true;
    }
    CHECK(found_plane);
    auto pair = double_line_pair(line, dirs.front());
    CHECK(conic_rank(pair) == 0);
    CHECK(pair_in_dbar(pair));
    CHECK_THROWS_AS(pair_support_line(pair), std::invalid_argument);
  }

  SUBCASE("tangency line: pencil of planes, generic member rank one") {
    auto line = table_line<Rat>('c');
    auto span = line.span();
    auto fam = double_line_family(span);
    CHECK(fam.dim_kernel == 1);
    int rank_one = 0, rank_zero = 0;
    for (const auto& u : u_directions(line)) {
      auto pair = double_line_pair(line, u);
      int r = conic_rank(pair);
      if (r == 1) {
        ++rank_one;
        auto back = pair_support_line(pair);
        CHECK(back.v1 == line.v1);
        CHECK(back.v3 == line.v3);
        CHECK(k_of_v4(pair.v4).contains(pair.u3));
      } else {
        CHECK(r == 0);
        ++rank_zero;
        CHECK(pair.u3 == pt_span(Rat(0)));
      }
    }
    CHECK(rank_one >= 1);
    CHECK(rank_zero >= 1);
  }

  SUBCASE("tangent line of the dual conic: rank-one and rank-zero members") {
    auto line = table_line<Rat>('d');
    int rank_one = 0;
    std::set<int> zero_kinds;
    for (const auto& u : u_directions(line)) {
      auto span = line.span();
      auto u3 = span.sum(Subspace<Rat>::span_of({u}, kWedgeDim));
      auto env = envelope(u3);
      if (env.dim() != 4) {
        // plane of 2-forms on a 3-space: the section plane S
        CHECK(u3 == s_plane_span<Rat>());
        zero_kinds.insert(0);
        continue;
      }
      auto pair = double_line_pair(line, u);
      if (conic_rank(pair) == 1) {
        ++rank_one;
        auto back = pair_support_line(pair);
        CHECK(back.v1 == line.v1);
      } else {
        CHECK(conic_rank(pair) == 0);
        CHECK(pair.u3 == pt_span(Rat(0)));
        zero_kinds.insert(1);
      }
    }
    CHECK(rank_one >= 1);
    CHECK(zero_kinds.size() == 2);
  }

  SUBCASE("secant line: the only plane is the section plane") {
    auto line = table_line<Rat>('e');
    auto fam = double_line_family(line.span());
    CHECK(fam.dim_kernel == 0);
    CHECK(fam.u_l == s_plane_span<Rat>());
  }
}

TEST_CASE("fiber cone over a smooth base point carries a tangent-plane pair") {
  auto basis = v4_chart_x3(Rat(1), Rat(0), Rat(0), Rat(0));
  auto v4 = Subspace<Rat>(basis, kAmbient);
  auto x = x_coords_of_v4(v4);
  CHECK(on_q3(x));
  CHECK(!on_sing_q3(x));

  auto k = k_of_v4(v4);
  REQUIRE(k.dim() == 4);
  auto vol = v4_volume(v4.basis());
  int m = -1;
  for (int i = 0; i < 5 && m < 0; ++i)
    if (!vol[i].is_zero()) m = i;
  REQUIRE(m >= 0);
  Rat denom = (Rat(2) * vol[m]).inv();
  Matrix<Rat> gk(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      gk(i, j) = wedge22(k.basis_row(i), k.basis_row(j))[m] * denom;
  CHECK(gk.rank() == 3);

  // cone vertex: the radical direction, a point of the Grassmannian
  auto rad = gk.kernel();
  REQUIRE(rad.rows() == 1);
  std::vector<Rat> omega(kWedgeDim, Rat(0));
  for (int c = 0; c < 4; ++c)
    for (int j = 0; j < kWedgeDim; ++j) omega[j] += rad(0, c) * k.basis()(c, j);
  CHECK(on_y(omega));

  // a second rational point of the cone, not on the vertex line
  std::vector<Rat> w;
  std::vector<Rat> w_coords;
  for (long c0 = -2; c0 <= 2 && w.empty(); ++c0)
    for (long c1 = -2; c1 <= 2 && w.empty(); ++c1)
      for (long c2 = -2; c2 <= 2 && w.empty(); ++c2)
        for (long c3 = -2; c3 <= 2 && w.empty(); ++c3) {
          std::vector<Rat> coords = {Rat(c0), Rat(c1), Rat(c2), Rat(c3)};
          std::vector<Rat> cand(kWedgeDim, Rat(0));
          for (int c = 0; c < 4; ++c)
            for (int j = 0; j < kWedgeDim; ++j) cand[j] += coords[c] * k.basis()(c, j);
          bool zero = true;
          for (const auto& t : cand) zero = zero && t.is_zero();
          if (zero) continue;
          Rat q(0);
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) q += coords[i] * gk(i, j) * coords[j];
          if (!q.is_zero()) continue;
          auto line_test = Subspace<Rat>::span_of({omega, cand}, kWedgeDim);
          if (line_test.dim() != 2) continue;
          w = cand;
          w_coords = coords;
        }
  REQUIRE(!w.empty());
  CHECK(on_y(w));

  // tangent plane along the ruling through omega and w
  Matrix<Rat> polar(1, 4);
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) polar(0, j) += w_coords[i] * gk(i, j);
  auto tangent_coords = polar.kernel();
  REQUIRE(tangent_coords.rows() == 3);
  std::vector<std::vector<Rat>> rows;
  for (std::size_t r = 0; r < 3; ++r) {
    std::vector<Rat> vec(kWedgeDim, Rat(0));
    for (int c = 0; c < 4; ++c)
      for (int j = 0; j < kWedgeDim; ++j) vec[j] += tangent_coords(r, c) * k.basis()(c, j);
    rows.push_back(std::move(vec));
  }
  auto u3 = Subspace<Rat>::span_of(rows, kWedgeDim);
  REQUIRE(u3.dim() == 3);
  auto pair = make_conic_pair(u3, v4);
  CHECK(conic_rank(pair) == 1);
  auto support = pair_support_line(pair);
  CHECK(support.span() == Subspace<Rat>::span_of({omega, w}, kWedgeDim));
}

TEST_CASE("singular fibers split as the displayed pair of planes") {
  for (const Rat& t : {Rat(0), Rat(1), Rat(-2)}) {
    CAPTURE(t.str());
    auto check = verify_sing_fiber(t);
    CHECK(check.fiber_is_plane_union);
    CHECK(check.sweep_factor_matches);
    CHECK(check.section_factor_matches);
  }
}

TEST_CASE("cone family over the tangency line moves and stays rank three") {
  auto check = verify_cone_family({Rat(1), Rat(2), Rat(-1)});
  CHECK(check.displayed_matches_chart);
  CHECK(check.contains_line);
  CHECK(check.base_on_smooth_q3);
  CHECK(check.rank_three);
  CHECK(check.family_moves);
}
