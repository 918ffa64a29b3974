#include "dp4/charts.hpp"

#include <optional>
#include <tuple>
#include <utility>

#include "dp4/groebner.hpp"

namespace dp4 {

namespace {

Poly<Rat> rp(const RingPtr& r, const std::string& s) { return parse_poly<Rat>(r, s); }

std::vector<Poly<Rat>> plucker_minors(const std::vector<Poly<Rat>>& x,
                                      const std::vector<Poly<Rat>>& y) {
  std::vector<Poly<Rat>> out;
  out.reserve(kWedgeDim);
  for (const auto& pr : kPairs) out.push_back(x[pr[0]] * y[pr[1]] - x[pr[1]] * y[pr[0]]);
  return out;
}

ChartModel build_chart(const std::string& name, const std::vector<std::string>& params,
                       const std::vector<std::string>& displayed_src,
                       const std::vector<std::string>& row_x_src,
                       const std::vector<std::string>& row_y_src,
                       const std::vector<std::string>& gram_var_names,
                       const std::vector<std::string>& x_coord_src) {
  ChartModel m;
  m.name = name;
  m.params = params;
  auto pnames = plucker_var_names();
  std::vector<std::string> vars = params;
  vars.insert(vars.end(), pnames.begin(), pnames.end());
  m.ring = make_ring(vars);
  m.param_ring = make_ring(params);
  for (const auto& s : displayed_src) m.displayed.push_back(rp(m.ring, s));
  std::vector<std::string> fvars = params;
  fvars.insert(fvars.end(), {"t1", "t2", "t3", "t4"});
  m.flag_ring = make_ring(fvars);
  std::vector<Poly<Rat>> rx, ry;
  for (const auto& s : row_x_src) rx.push_back(rp(m.flag_ring, s));
  for (const auto& s : row_y_src) ry.push_back(rp(m.flag_ring, s));
  m.minors = plucker_minors(rx, ry);
  m.constraints = {m.minors[kIdxP12] - m.minors[kIdxP03], m.minors[kIdxP13] - m.minors[kIdxP24]};
  for (const auto& n : gram_var_names) {
    int idx = m.ring->var_index(n);
    if (idx < 0) throw std::logic_error("build_chart: bad coordinate name");
    m.gram_vars.push_back(idx);
  }
  for (const auto& s : x_coord_src) m.x_coords.push_back(rp(m.param_ring, s));
  return m;
}

// f = q*g + r with no term of r divisible by the leading monomial of g.
std::pair<Poly<Rat>, Poly<Rat>> divmod_single(Poly<Rat> f, const Poly<Rat>& g) {
  if (g.is_zero()) throw std::domain_error("divmod_single: division by zero");
  Poly<Rat> q = Poly<Rat>::zero(f.ring());
  Poly<Rat> r = Poly<Rat>::zero(f.ring());
  while (!f.is_zero()) {
    if (mono_divides(g.leading_mono(), f.leading_mono())) {
      Rat c = f.leading_coeff() / g.leading_coeff();
      Mono m = mono_div(f.leading_mono(), g.leading_mono());
      q += Poly<Rat>::term(f.ring(), m, c);
      f = f - g.mul_term(m, c);
    } else {
      auto lt = Poly<Rat>::term(f.ring(), f.leading_mono(), f.leading_coeff());
      r += lt;
      f -= lt;
    }
  }
  return {q, r};
}

}  // namespace

const ChartModel& chart_x3() {
  static const ChartModel m = build_chart(
      "x3", {"a", "b", "c", "d"},
      {
          "b*c*p01^2 + c^2*p01*p02 + c*d*p01*p04 - a*p01^2 + b*p01*p04 + c*p02*p04 + d*p04^2 + "
          "d*p01*p14 - p02*p14",
          "p03 - p12",
          "p12 - b*p01 - c*p02 - d*p04",
          "p13 - p24",
          "p23 + a*p02 + b*p12 - d*p24",
          "p24 + a*p01 - c*p12 - d*p14",
          "p34 - a*p04 - b*p14 - c*p24",
      },
      {"1", "0", "t1", "a + c*t1 + d*t3", "t3"},
      {"0", "1", "t2", "b + c*t2 + d*t4", "t4"},
      {"p01", "p02", "p04", "p14"},
      {"a", "b", "d", "1", "c"});
  return m;
}

const ChartModel& chart_x4() {
  static const ChartModel m = build_chart(
      "x4", {"a", "b", "u", "d"},
      {
          "a*p04^2 + a*p01*p14 + b*p04*p14 - d*p14^2 - p01*p34 - a*u*p04*p14 - b*u*p14^2 - "
          "u*p04*p34 + u^2*p14*p34",
          "p02 + b*p01 + d*p04 - u*p12",
          "p03 - p12",
          "p12 - a*p01 + d*p14 - u*p24",
          "p13 - p24",
          "p23 + a*p12 + b*p24 - d*p34",
          "p24 + a*p04 + b*p14 - u*p34",
      },
      {"1", "0", "-a + u*t1 - d*t3", "t1", "t3"},
      {"0", "1", "-b + u*t2 - d*t4", "t2", "t4"},
      {"p01", "p04", "p14", "p34"},
      {"a", "b", "d", "u", "1"});
  return m;
}

ChartGram chart_gram(const ChartModel& chart) {
  ChartGram g;
  g.param_ring = chart.param_ring;
  g.entries.assign(4, std::vector<Poly<Rat>>(4, Poly<Rat>::zero(chart.param_ring)));
  const std::size_t np = chart.params.size();
  std::vector<int> slot(chart.ring->nvars(), -1);
  for (std::size_t k = 0; k < chart.gram_vars.size(); ++k)
    slot[static_cast<std::size_t>(chart.gram_vars[k])] = static_cast<int>(k);
  for (const auto& [mono, c] : chart.displayed[0].terms()) {
    Mono pm(np, 0);
    std::vector<int> idx;
    for (std::size_t v = 0; v < mono.size(); ++v) {
      if (!mono[v]) continue;
      if (v < np) {
        pm[v] = mono[v];
        continue;
      }
      if (slot[v] < 0) throw std::logic_error("chart_gram: quadric uses an unexpected coordinate");
      for (unsigned rep = 0; rep < mono[v]; ++rep) idx.push_back(slot[v]);
    }
    if (idx.size() != 2)
      throw std::logic_error("chart_gram: quadric term not quadratic in the coordinates");
    int i = idx[0], j = idx[1];
    Rat half = (i == j) ? c : c / Rat(2);
    g.entries[i][j] += Poly<Rat>::term(chart.param_ring, pm, half);
    if (i != j) g.entries[j][i] += Poly<Rat>::term(chart.param_ring, pm, half);
  }
  g.det = poly_det(g.entries);
  return g;
}

Poly<Rat> poly_det(const std::vector<std::vector<Poly<Rat>>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("poly_det: empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("poly_det: not square");
  if (n == 1) return m[0][0];
  Poly<Rat> acc = Poly<Rat>::zero(m[0][0].ring());
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Poly<Rat>>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Poly<Rat>> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(std::move(row));
    }
    Poly<Rat> t = m[0][j] * poly_det(sub);
    acc = (j % 2 == 0) ? acc + t : acc - t;
  }
  return acc;
}

ChartEliminationResult verify_chart_elimination(const ChartModel& chart, bool full_groebner) {
  ChartEliminationResult res{false, false, false};
  const auto& fr = chart.flag_ring;
  const std::size_t np = chart.params.size();

  // Route A: the displayed generators, pulled back through the minors, must
  // lie in the ideal generated by the two hyperplane constraints.
  auto cgb = gb::reduced_basis(std::vector<Poly<Rat>>{chart.constraints[0], chart.constraints[1]});
  std::vector<Poly<Rat>> values;
  for (std::size_t i = 0; i < np; ++i) values.push_back(Poly<Rat>::variable(fr, i));
  for (int k = 0; k < kWedgeDim; ++k) values.push_back(chart.minors[k]);
  res.substitution_identity = true;
  for (const auto& gen : chart.displayed) {
    auto pulled = compose(gen, values);
    if (!gb::normal_form(pulled, cgb).is_zero()) res.substitution_identity = false;
  }

  // Route B: eliminate the fiber coordinates from the graph ideal of the
  // parametrization; the result must agree with the displayed ideal on the
  // affine slice p01 = 1 (the parametrization has unit p01-minor).
  auto pnames = plucker_var_names();
  std::vector<std::string> big_vars = {"t1", "t2", "t3", "t4"};
  big_vars.insert(big_vars.end(), chart.params.begin(), chart.params.end());
  for (int k = 0; k < kWedgeDim; ++k)
    if (k != kIdxP01) big_vars.push_back(pnames[k]);
  RingPtr big = make_ring(big_vars);

  std::vector<Poly<Rat>> graph;
  for (int k = 0; k < kWedgeDim; ++k) {
    if (k == kIdxP01) continue;
    graph.push_back(Poly<Rat>::variable(big, static_cast<std::size_t>(big->var_index(pnames[k]))) -
                    remap(chart.minors[k], big));
  }
  graph.push_back(remap(chart.constraints[0], big));
  graph.push_back(remap(chart.constraints[1], big));

  RingPtr out_ring;
  std::vector<Poly<Rat>> elim;
  if (full_groebner) {
    std::tie(out_ring, elim) = gb::eliminate(graph, {"t1", "t2", "t3", "t4"});
  } else {
    // Four of the minors are single fiber coordinates up to sign, so the
    // elimination is an exact substitution.
    std::array<std::optional<Poly<Rat>>, 4> tsub;
    for (int k = 0; k < kWedgeDim; ++k) {
      if (k == kIdxP01) continue;
      const auto& mk = chart.minors[k];
      if (mk.terms().size() != 1) continue;
      const auto& [mono, c] = mk.terms()[0];
      if (mono_deg(mono) != 1) continue;
      std::size_t vi = 0;
      for (std::size_t v = 0; v < mono.size(); ++v)
        if (mono[v]) vi = v;
      if (vi < np) continue;
      std::size_t slot = vi - np;
      if (tsub[slot]) continue;
      tsub[slot] =
          Poly<Rat>::variable(big, static_cast<std::size_t>(big->var_index(pnames[k]))) *
          c.inv();
    }
    for (const auto& s : tsub)
      if (!s) throw std::logic_error("verify_chart_elimination: fiber coordinate not a minor");
    for (auto g : graph) {
      for (std::size_t s = 0; s < 4; ++s) g = g.substitute(s, *tsub[s]);
      if (!g.is_zero()) elim.push_back(std::move(g));
    }
    std::vector<std::string> keep(big_vars.begin() + 4, big_vars.end());
    out_ring = make_ring(keep);
    for (auto& g : elim) g = remap(g, out_ring);
  }

  std::vector<Poly<Rat>> disp;
  int p01_idx = chart.ring->var_index("p01");
  for (const auto& gen : chart.displayed) {
    auto s = gen.substitute(static_cast<std::size_t>(p01_idx),
                            Poly<Rat>::constant(chart.ring, Rat(1)));
    disp.push_back(remap(s, out_ring));
  }

  auto gb_elim = gb::reduced_basis(elim);
  auto gb_disp = gb::reduced_basis(disp);
  res.displayed_in_eliminated = gb::ideal_contains(gb_elim, disp);
  res.eliminated_in_displayed = gb::ideal_contains(gb_disp, elim);
  return res;
}

LemmaGramResult verify_lemma_gram(const ChartModel& chart) {
  auto g = chart_gram(chart);
  LemmaGramResult r{false, Rat(0), 0, Poly<Rat>::zero(g.param_ring), false};
  auto q3 = parse_poly<Rat>(g.param_ring, "b^2 + 4*a*d");

  Poly<Rat> residual = g.det;
  unsigned power = 0;
  while (!residual.is_zero()) {
    auto [quo, rem] = divmod_single(residual, q3);
    if (!rem.is_zero()) break;
    residual = std::move(quo);
    ++power;
  }
  r.power = power;
  if (!residual.is_zero() && residual.total_degree() == 0) {
    r.alpha = residual.leading_coeff();
    r.cofactor = Poly<Rat>::constant(g.param_ring, Rat(1));
    r.det_is_unit_times_q3 = (power == 1);
  } else {
    r.alpha = residual.is_zero() ? Rat(0) : residual.leading_coeff();
    r.cofactor = residual;
    r.det_is_unit_times_q3 = false;
  }

  RingPtr xr = make_ring(x_var_names());
  auto q3x = parse_poly<Rat>(xr, "x1^2 + 4*x0*x2");
  std::vector<Poly<Rat>> jac;
  for (std::size_t v = 0; v < xr->nvars(); ++v) {
    auto dq = q3x.derivative(v);
    if (!dq.is_zero()) jac.push_back(dq);
  }
  std::vector<Poly<Rat>> sing = {parse_poly<Rat>(xr, "x0"), parse_poly<Rat>(xr, "x1"),
                                 parse_poly<Rat>(xr, "x2")};
  r.sing_ideal_matches = gb::ideal_equal(jac, sing);
  return r;
}

}  // namespace dp4
