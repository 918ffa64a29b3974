#include "dp4/classifier.hpp"

namespace dp4 {

const char* line_type_name(LineType t) {
  switch (t) {
    case LineType::a: return "a";
    case LineType::b: return "b";
    case LineType::c: return "c";
    case LineType::d: return "d";
    case LineType::e: return "e";
  }
  throw std::logic_error("line_type_name: bad enum");
}

std::vector<Poly<Rat>> specialize_chart(const ChartModel& chart, const std::vector<Rat>& params,
                                        const RingPtr& out_ring) {
  if (params.size() != chart.params.size())
    throw std::invalid_argument("specialize_chart: parameter count mismatch");
  std::vector<Poly<Rat>> values;
  for (const auto& c : params) values.push_back(Poly<Rat>::constant(out_ring, c));
  for (int j = 0; j < kWedgeDim; ++j) values.push_back(Poly<Rat>::variable(out_ring, j));
  std::vector<Poly<Rat>> out;
  for (const auto& g : chart.displayed) out.push_back(compose(g, values));
  return out;
}

namespace {

Poly<Rat> pv(const RingPtr& ring, int idx) { return Poly<Rat>::variable(ring, idx); }

// The two factor ideals displayed for the fiber over (0,0,c,0), with c = t:
// the sweep plane P_t and the section plane S share five linear forms.
std::vector<Poly<Rat>> common_linear(const RingPtr& ring, const Rat& t) {
  Poly<Rat> tt = Poly<Rat>::constant(ring, t);
  return {
      pv(ring, pair_index(2, 3)),                               // p23
      tt * pv(ring, kIdxP24) - pv(ring, pair_index(3, 4)),      // t p24 - p34
      tt * pv(ring, pair_index(0, 2)) - pv(ring, kIdxP12),      // t p02 - p12
      pv(ring, kIdxP24) - tt * pv(ring, kIdxP12),               // p24 - t p12
      pv(ring, kIdxP13) - pv(ring, kIdxP24),                    // p13 - p24
      pv(ring, kIdxP03) - pv(ring, kIdxP12),                    // p03 - p12
  };
}

}  // namespace

SingFiberCheck verify_sing_fiber(const Rat& t) {
  SingFiberCheck out;
  RingPtr ring = p_ring();
  Poly<Rat> tt = Poly<Rat>::constant(ring, t);

  auto fiber = specialize_chart(chart_x3(), {Rat(0), Rat(0), t, Rat(0)}, ring);

  auto sweep = common_linear(ring, t);
  sweep.insert(sweep.begin(), tt * tt * pv(ring, kIdxP01) + tt * pv(ring, kIdxP04) - pv(ring, kIdxP14));
  auto section = common_linear(ring, t);
  section.insert(section.begin(), pv(ring, pair_index(0, 2)));

  out.fiber_is_plane_union = gb::ideal_equal(fiber, gb::intersect(sweep, section));
  out.sweep_factor_matches = gb::ideal_equal(sweep, plane_ideal(pt_span(t), ring));
  out.section_factor_matches = gb::ideal_equal(section, plane_ideal(s_plane_span<Rat>(), ring));
  return out;
}

ConeFamilyCheck verify_cone_family(const std::vector<Rat>& ds) {
  ConeFamilyCheck out{true, true, true, true, true};
  RingPtr ring = p_ring();
  RingPtr s_ring = make_ring({"s0", "s1"}, Order::grevlex, 0);
  auto gram = chart_gram(chart_x3());
  auto w1 = unit_wedge<Rat>(kIdxP01);
  auto w2 = unit_wedge<Rat>(pair_index(0, 2));

  std::vector<std::vector<Poly<Rat>>> bases;
  for (const auto& d : ds) {
    if (d.is_zero()) throw std::invalid_argument("verify_cone_family: d must be nonzero");
    Poly<Rat> dd = Poly<Rat>::constant(ring, d);
    std::vector<Poly<Rat>> cone = {
        dd * pv(ring, kIdxP04) * pv(ring, kIdxP04) +
            (dd * pv(ring, kIdxP01) - pv(ring, pair_index(0, 2))) * pv(ring, kIdxP14),
        pv(ring, kIdxP03) - pv(ring, kIdxP12),
        pv(ring, kIdxP12) - dd * pv(ring, kIdxP04),
        pv(ring, kIdxP13) - pv(ring, kIdxP24),
        pv(ring, pair_index(2, 3)) - dd * pv(ring, kIdxP24),
        pv(ring, kIdxP24) - dd * pv(ring, kIdxP14),
        pv(ring, pair_index(3, 4)),
    };

    auto fiber = specialize_chart(chart_x3(), {Rat(0), Rat(0), Rat(0), d}, ring);
    out.displayed_matches_chart = out.displayed_matches_chart && gb::ideal_equal(cone, fiber);

    for (const auto& g : cone)
      out.contains_line = out.contains_line && restrict_to_span(g, w1, w2, s_ring).is_zero();

    std::vector<Rat> x = {Rat(0), Rat(0), d, Rat(1), Rat(0)};
    out.base_on_smooth_q3 = out.base_on_smooth_q3 && on_q3(x) && !on_sing_q3(x);

    auto g4 = evaluate_gram(gram, std::vector<Rat>{Rat(0), Rat(0), Rat(0), d});
    out.rank_three = out.rank_three && g4.rank() == 3;

    bases.push_back(gb::reduced_basis(cone));
  }
  for (std::size_t i = 0; i < bases.size(); ++i)
    for (std::size_t j = i + 1; j < bases.size(); ++j)
      out.family_moves = out.family_moves && !(bases[i] == bases[j]);
  return out;
}

}  // namespace dp4
