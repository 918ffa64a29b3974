#include "dp4/suites.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "dp4/charts.hpp"
#include "dp4/classifier.hpp"
#include "dp4/ff_counter.hpp"
#include "dp4/field_convert.hpp"
#include "dp4/prime_field.hpp"
#include "dp4/grassmann.hpp"
#include "dp4/poincare.hpp"
#include "dp4/rng.hpp"

namespace dp4 {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

constexpr const char* kAnchorBundle = "O_L(1) ⊕ O_L^{⊕2} or O_L(-1) ⊕ O_L(1)^{⊕2}";
constexpr const char* kAnchorBlowup = "smooth blow-up along the smooth conic";
constexpr const char* kAnchorConicEq = "a_0a_4+a_1^2=a_2=a_3=0";
constexpr const char* kAnchorPlaneSpan = "P_t=\\mathbb{P}(V_1\\wedge V_4)";
constexpr const char* kAnchorTangent = "tangent line of the dual conic";
constexpr const char* kAnchorFiveTypes = "there are five types of lines";
constexpr const char* kAnchorTable = "Example of lines in Y";
constexpr const char* kAnchorDownUp = "a blow-down followed by a blow-up";
constexpr const char* kAnchorIncidence = "(U_3, V_4) \\mid U_3\\subset \\mathcal{K}";
constexpr const char* kAnchorLemma = "defined by x_1^2+4x_0x_2=0";
constexpr const char* kAnchorLemmaEq = "x_1^2+4x_0x_2=0";
constexpr const char* kAnchorElim = "bcp_{01}^2+c^2p_{01}p_{02}";
constexpr const char* kAnchorSingFiber = "c^2p_{01}+cp_{04}-p_{14}";
constexpr const char* kAnchorFibration = "P^1-fiberation over Q_3";
constexpr const char* kAnchorConeFamily = "P^1-fiberation over the vertex conic";
constexpr const char* kAnchorUnique = "at a point uniquely";
constexpr const char* kAnchorDefect = "(P(P^2)-1) · P(D(Y))";
constexpr const char* kAnchorModuli = "1+4t^{2}+10t^{4}+15t^{6}";
constexpr const char* kAnchorOnlyD = "the lines of the case (d) are only non-free";
constexpr const char* kAnchorTwoCurves = "disjoint union P^1 ⊔ P^1";

void judge(ReportItem& it, bool ok) {
  it.status = ok ? CheckStatus::pass : CheckStatus::fail;
}

template <class Fn>
ReportItem timed(const std::string& id, const std::string& anchor, Fn&& body) {
  ReportItem it;
  it.check_id = id;
  it.paper_anchor = anchor;
  auto t0 = Clock::now();
  try {
    body(it);
  } catch (const std::exception& e) {
    it.status = CheckStatus::fail;
    it.actual = std::string("exception: ") + e.what();
  }
  it.elapsed_ms = ms_since(t0);
  return it;
}

// Deterministic per-check stream: seed xor FNV-1a(tag).
Rng seeded(const RunConfig& cfg, const std::string& tag) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return Rng(cfg.seed ^ h);
}

// Runs fn over QQ (q = 0) and over F_q for each configured prime.
template <class Fn>
void for_each_field(const std::vector<int>& primes, Fn&& fn) {
  fn.template operator()<Rat>(0);
  for (int q : primes)
    with_prime(static_cast<std::uint32_t>(q), [&]<class F>() { fn.template operator()<F>(q); });
}

template <class F>
std::vector<F> unit_vec(int i) {
  std::vector<F> v(kAmbient, F(0));
  v[i] = F(1);
  return v;
}

template <class F>
FlagLine<F> table_row(char row) {
  auto mk = [](std::vector<F> v, std::vector<std::vector<F>> w) {
    return FlagLine<F>(Subspace<F>::span_of({std::move(v)}, kAmbient),
                       Subspace<F>::span_of(std::move(w), kAmbient));
  };
  auto e = [](int i) { return unit_vec<F>(i); };
  switch (row) {
    case 'a': return mk(e(2), {e(0), e(2), e(3)});
    case 'b': return mk(e(0), {e(0), e(2), e(4)});
    case 'c': return mk(e(0), {e(0), e(1), e(2)});
    case 'd': return mk(e(0), {e(0), e(1), e(4)});
    case 'e': return mk(e(1), {e(0), e(1), e(4)});
  }
  throw std::logic_error("table_row: unknown row");
}

// Representatives of a basis of u_l / span (directions independent mod span).
template <class F>
std::vector<std::vector<F>> quotient_dirs(const Subspace<F>& span, const Subspace<F>& u_l) {
  std::vector<std::vector<F>> dirs;
  Subspace<F> acc = span;
  for (std::size_t r = 0; r < u_l.dim(); ++r) {
    auto row = u_l.basis_row(r);
    if (!acc.contains(row)) {
      dirs.push_back(row);
      acc = acc.sum(Subspace<F>::span_of({row}, kWedgeDim));
    }
  }
  return dirs;
}

template <class F>
bool plane_in_y(const Subspace<F>& plane) {
  RingPtr ring3 = make_ring({"s0", "s1", "s2"});
  std::vector<Poly<F>> coords;
  for (int i = 0; i < kWedgeDim; ++i) {
    Poly<F> v(ring3);
    for (std::size_t r = 0; r < plane.dim(); ++r)
      v += Poly<F>::variable(ring3, r) * plane.basis_row(r)[i];
    coords.push_back(std::move(v));
  }
  for (const auto& f : y_ideal<F>(p_ring()))
    if (!compose(f, coords).is_zero()) return false;
  return true;
}

// ---- pluecker ----

std::vector<ReportItem> suite_pluecker(const RunConfig& cfg) {
  std::vector<ReportItem> out;

  out.push_back(timed("pluecker.wedge-decomposables", kAnchorPlaneSpan, [&](ReportItem& it) {
    int per_field = std::max(8, cfg.random_samples / 10);
    long long checked = 0, good = 0;
    bool mixed_rejected = true;
    for_each_field(cfg.primes, [&]<class F>(int q) {
      Rng rng = seeded(cfg, "pluecker.wedge#" + std::to_string(q));
      for (int i = 0; i < per_field;) {
        auto x = random_vector<F>(rng, kAmbient);
        auto y = random_vector<F>(rng, kAmbient);
        auto sp = Subspace<F>::span_of({x, y}, kAmbient);
        if (sp.dim() != 2) continue;
        ++i;
        ++checked;
        auto w = wedge2(x, y);
        if (on_grassmannian(w) && is_decomposable(w) && support_of(w) == sp) ++good;
      }
      std::vector<F> mixed(kWedgeDim, F(0));
      mixed[pair_index(0, 1)] = F(1);
      mixed[pair_index(2, 3)] = F(1);
      mixed_rejected = mixed_rejected && !is_decomposable(mixed);
    });
    it.expected = Json{{"all_decomposable", true}, {"mixed_tensor_rejected", true}};
    it.actual = Json{{"checked", checked}, {"decomposable", good}, {"mixed_tensor_rejected", mixed_rejected}};
    judge(it, checked == good && checked > 0 && mixed_rejected);
  }));

  out.push_back(timed("pluecker.sweep-planes-in-y", kAnchorPlaneSpan, [&](ReportItem& it) {
    long long checked = 0, good = 0;
    for_each_field(cfg.primes, [&]<class F>(int q) {
      Rng rng = seeded(cfg, "pluecker.planes#" + std::to_string(q));
      std::vector<Subspace<F>> planes;
      for (int i = 0; i < 4; ++i) planes.push_back(pt_span(random_scalar<F>(rng)));
      planes.push_back(pt_span_infinity<F>());
      planes.push_back(s_plane_span<F>());
      for (const auto& pl : planes) {
        ++checked;
        if (pl.dim() == 3 && plane_in_y(pl)) ++good;
      }
    });
    it.expected = Json{{"planes_inside_y", true}};
    it.actual = Json{{"checked", checked}, {"inside", good}};
    judge(it, checked == good && checked > 0);
  }));

  out.push_back(timed("pluecker.vertex-conic-parametrization", kAnchorConicEq, [&](ReportItem& it) {
    long long checked = 0, good = 0;
    for_each_field(cfg.primes, [&]<class F>(int q) {
      Rng rng = seeded(cfg, "pluecker.conic#" + std::to_string(q));
      for (int i = 0; i < 6; ++i) {
        auto v = vertex_conic_point(random_scalar<F>(rng));
        ++checked;
        if (on_vertex_conic(v) && lines_with_vertex(v).family_dim == 2) ++good;
      }
      auto vinf = vertex_conic_point_infinity<F>();
      ++checked;
      if (on_vertex_conic(vinf) && lines_with_vertex(vinf).family_dim == 2) ++good;
      // a generic vertex misses the conic and carries a unique line
      std::vector<F> off = {F(1), F(1), F(0), F(0), F(0)};
      ++checked;
      if (!on_vertex_conic(off) && lines_with_vertex(off).family_dim == 0) ++good;
    });
    it.expected = Json{{"conic_points_carry_nets", true}, {"generic_vertex_unique_line", true}};
    it.actual = Json{{"checked", checked}, {"good", good}};
    judge(it, checked == good && checked > 0);
  }));

  return out;
}

// ---- elimination ----

std::vector<ReportItem> suite_elimination(const RunConfig&) {
  std::vector<ReportItem> out;
  for (const ChartModel* ch : {&chart_x3(), &chart_x4()}) {
    out.push_back(timed("elimination.chart-" + ch->name, kAnchorElim, [&](ReportItem& it) {
      it.expected = Json{{"substitution_identity", true},
                         {"displayed_in_eliminated", true},
                         {"eliminated_in_displayed", true}};
      auto r = verify_chart_elimination(*ch, true);
      it.actual = Json{{"substitution_identity", r.substitution_identity},
                       {"displayed_in_eliminated", r.displayed_in_eliminated},
                       {"eliminated_in_displayed", r.eliminated_in_displayed}};
      judge(it, r.substitution_identity && r.equal());
    }));
  }
  return out;
}

// ---- lemma-q3 ----

std::vector<ReportItem> suite_lemma(const RunConfig& cfg) {
  std::vector<ReportItem> out;

  out.push_back(timed("lemma-q3.gram-determinant", kAnchorLemma, [&](ReportItem& it) {
    it.expected = Json{{"det_is_unit_times_q3", true}};
    Json actual = Json::object();
    bool ok = true;
    for (const ChartModel* ch : {&chart_x3(), &chart_x4()}) {
      auto r = verify_lemma_gram(*ch);
      ok = ok && r.det_is_unit_times_q3;
      actual[ch->name] = Json{{"det_is_unit_times_q3", r.det_is_unit_times_q3},
                              {"alpha", r.alpha.str()},
                              {"power", r.power},
                              {"cofactor", r.cofactor.str()}};
    }
    it.actual = actual;
    judge(it, ok);
  }));

  out.push_back(timed("lemma-q3.singular-locus", kAnchorLemmaEq, [&](ReportItem& it) {
    bool ok = true;
    Json actual = Json::object();
    for (const ChartModel* ch : {&chart_x3(), &chart_x4()}) {
      auto r = verify_lemma_gram(*ch);
      ok = ok && r.sing_ideal_matches;
      actual[ch->name] = Json{{"sing_ideal_matches", r.sing_ideal_matches}};
    }
    Json counts = Json::array();
    for (std::uint32_t q : {3u, 5u}) {
      auto c = count_points(VarietyId::SingQ3, q, cfg.jobs);
      long long expect = eval_poly(expected_count_poly(VarietyId::SingQ3), q);
      counts.push_back(Json{{"q", q}, {"enumerated", c.count}, {"formula", expect}});
      ok = ok && c.count == expect;
    }
    actual["point_counts"] = counts;
    it.expected = Json{{"sing_ideal_matches", true}, {"counts_match", true}};
    it.actual = actual;
    judge(it, ok);
  }));

  out.push_back(timed("lemma-q3.singular-fibers", kAnchorSingFiber, [&](ReportItem& it) {
    bool ok = true;
    Json actual = Json::array();
    for (long t : {0L, 1L, -1L, 2L}) {
      auto r = verify_sing_fiber(Rat(t));
      bool all = r.fiber_is_plane_union && r.sweep_factor_matches && r.section_factor_matches;
      ok = ok && all;
      actual.push_back(Json{{"t", t},
                            {"fiber_is_plane_union", r.fiber_is_plane_union},
                            {"sweep_factor_matches", r.sweep_factor_matches},
                            {"section_factor_matches", r.section_factor_matches}});
    }
    it.expected = Json{{"fiber_splits_as_displayed_planes", true}};
    it.actual = actual;
    judge(it, ok);
  }));

  return out;
}

// ---- planes ----

std::vector<ReportItem> suite_planes(const RunConfig& cfg) {
  std::vector<ReportItem> out;

  out.push_back(timed("planes.tangent-line-to-dual-conic", kAnchorTangent, [&](ReportItem& it) {
    long long checked = 0, good = 0;
    for_each_field(cfg.primes, [&]<class F>(int q) {
      Rng rng = seeded(cfg, "planes.tangent#" + std::to_string(q));
      int n = q == 0 ? 20 : 6;
      auto s_plane = s_plane_span<F>();
      auto verify_one = [&](const Subspace<F>& plane, const std::vector<F>& touch) {
        ++checked;
        auto line = plane.intersect(s_plane);
        if (line.dim() != 2 || !line.contains(touch)) return;
        auto rs = dual_conic_support(line);
        if (!rs.all_zero && rs.total_multiplicity == 2 && rs.distinct_points == 1) ++good;
      };
      for (int i = 0; i < n; ++i) {
        F t = random_scalar<F>(rng);
        verify_one(pt_span(t), dual_conic_point(t));
      }
      verify_one(pt_span_infinity<F>(), dual_conic_point_infinity<F>());
    });
    it.expected = Json{{"tangency", "one support point of multiplicity two"}};
    it.actual = Json{{"checked", checked}, {"tangent", good}};
    judge(it, checked == good && checked > 0);
  }));

  out.push_back(timed("planes.pairwise-intersection-point", kAnchorTangent, [&](ReportItem& it) {
    long long checked = 0, good = 0;
    for_each_field(cfg.primes, [&]<class F>(int q) {
      Rng rng = seeded(cfg, "planes.pairwise#" + std::to_string(q));
      int n = q == 0 ? 20 : 6;
      auto s_plane = s_plane_span<F>();
      auto verify_pair = [&](const Subspace<F>& p1, const Subspace<F>& p2,
                             const std::vector<F>& v1, const std::vector<F>& v2) {
        ++checked;
        auto x = p1.intersect(p2);
        if (x.dim() != 1) return;
        if (!s_plane.contains(x.basis_row(0))) return;
        auto w = wedge2(v1, v2);
        if (x == Subspace<F>::span_of({w}, kWedgeDim)) ++good;
      };
      for (int i = 0; i < n; ++i) {
        F t = random_scalar<F>(rng);
        F s = random_scalar<F>(rng);
        int guard = 0;
        while (s == t && guard++ < 64) s = random_scalar<F>(rng);
        if (s == t) continue;
        verify_pair(pt_span(t), pt_span(s), vertex_of_t(t), vertex_of_t(s));
      }
      F t0 = random_scalar<F>(rng);
      verify_pair(pt_span(t0), pt_span_infinity<F>(), vertex_of_t(t0),
                  vertex_conic_point_infinity<F>());
    });
    it.expected = Json{{"intersection", "a single point inside S"}};
    it.actual = Json{{"checked", checked}, {"single_point_in_s", good}};
    judge(it, checked == good && checked > 0);
  }));

  out.push_back(timed("planes.cone-family", kAnchorConeFamily, [&](ReportItem& it) {
    auto r = verify_cone_family({Rat(1), Rat(2), Rat(-1), Rat(3)});
    it.expected = Json{{"displayed_matches_chart", true},
                       {"contains_line", true},
                       {"base_on_smooth_q3", true},
                       {"rank_three", true},
                       {"family_moves", true}};
    it.actual = Json{{"displayed_matches_chart", r.displayed_matches_chart},
                     {"contains_line", r.contains_line},
                     {"base_on_smooth_q3", r.base_on_smooth_q3},
                     {"rank_three", r.rank_three},
                     {"family_moves", r.family_moves}};
    judge(it, r.displayed_matches_chart && r.contains_line && r.base_on_smooth_q3 &&
                  r.rank_three && r.family_moves);
  }));

  out.push_back(timed("planes.vertex-pencils", kAnchorConeFamily, [&](ReportItem& it) {
    long long checked = 0, good = 0;
    for_each_field(cfg.primes, [&]<class F>(int q) {
      Rng rng = seeded(cfg, "planes.pencils#" + std::to_string(q));
      auto sample_plane = [&](const std::vector<F>& v, const Subspace<F>& plane) {
        auto vl = lines_with_vertex(v);
        if (vl.family_dim != 2 || vl.w_v.dim() != 4) return;
        for (int j = 0; j < 4; ++j) {
          std::vector<F> r1(kAmbient, F(0)), r2(kAmbient, F(0));
          for (std::size_t b = 0; b < 4; ++b) {
            F c1 = random_scalar<F>(rng), c2 = random_scalar<F>(rng);
            for (int k = 0; k < kAmbient; ++k) {
              r1[k] += c1 * vl.w_v.basis_row(b)[k];
              r2[k] += c2 * vl.w_v.basis_row(b)[k];
            }
          }
          auto v3 = Subspace<F>::span_of({v, r1, r2}, kAmbient);
          if (v3.dim() != 3) continue;
          ++checked;
          FlagLine<F> line(Subspace<F>::span_of({v}, kAmbient), v3);
          if (line_in_y(line) && plane.contains(line.span())) ++good;
        }
      };
      for (int i = 0; i < 3; ++i) {
        F s = random_scalar<F>(rng);
        sample_plane(vertex_conic_point(s), pt_span(s));
      }
      sample_plane(vertex_conic_point_infinity<F>(), pt_span_infinity<F>());
    });
    it.expected = Json{{"pencil_inside_sweep_plane", true}};
    it.actual = Json{{"checked", checked}, {"inside", good}};
    judge(it, checked == good && checked > 0);
  }));

  return out;
}

// ---- lines ----

std::vector<ReportItem> suite_lines(const RunConfig& cfg) {
  std::vector<ReportItem> out;
  const std::string rows = "abcde";
  const std::map<char, bool> table_nonfree = {
      {'a', false}, {'b', false}, {'c', true}, {'d', true}, {'e', false}};

  out.push_back(timed("lines.table-classification", kAnchorTable, [&](ReportItem& it) {
    bool ok = true;
    Json actual = Json::object();
    for_each_field(cfg.primes, [&]<class F>(int q) {
      std::string seen;
      long long flags = 0;
      for (char c : rows) {
        auto cls = classify_line(table_row<F>(c));
        seen += line_type_name(cls.type);
        flags += static_cast<long long>(cls.flags.size());
      }
      ok = ok && seen == rows && flags == 0;
      actual[q == 0 ? "QQ" : "F" + std::to_string(q)] = Json{{"types", seen}, {"flags", flags}};
    });
    it.expected = Json{{"types", rows}, {"flags", 0}};
    it.actual = actual;
    judge(it, ok);
  }));

  out.push_back(timed("lines.table-verdicts", kAnchorOnlyD, [&](ReportItem& it) {
    bool ok = true;
    Json actual = Json::object();
    for_each_field(cfg.primes, [&]<class F>(int q) {
      std::string verdicts;
      bool agree = true;
      for (char c : rows) {
        auto cls = classify_line(table_row<F>(c));
        verdicts += cls.non_free ? 'n' : 'f';
        agree = agree && cls.non_free == table_nonfree.at(c);
        agree = agree && (cls.support_points == 1) == cls.non_free;
        agree = agree && cls.family_dim == (cls.non_free ? 1 : 0);
        agree = agree && cls.family_dim == cls.family_dim_ideal;
        if (c == 'd' || c == 'e') agree = agree && cls.in_s;
      }
      // among the lines inside S only type (d) is non-free
      Rng rng = seeded(cfg, "lines.s-lines#" + std::to_string(q));
      int s_lines = 0;
      for (int tries = 0; tries < 200 && s_lines < 8; ++tries) {
        auto line = random_line_in_y<F>(rng);
        auto cls = classify_line(line);
        if (!cls.in_s) continue;
        ++s_lines;
        agree = agree && (cls.type == LineType::d || cls.type == LineType::e);
        agree = agree && cls.non_free == (cls.type == LineType::d);
      }
      ok = ok && agree && verdicts == "ffnnf" && s_lines > 0;
      actual[q == 0 ? "QQ" : "F" + std::to_string(q)] =
          Json{{"verdicts", verdicts}, {"s_lines_sampled", s_lines}};
    });
    it.expected = Json{{"verdicts", "ffnnf"}, {"s_lines", "only (d) non-free"}};
    it.actual = actual;
    judge(it, ok);
  }));

  out.push_back(timed("lines.five-types-occur", kAnchorFiveTypes, [&](ReportItem& it) {
    bool ok = true;
    Json actual = Json::object();
    for_each_field(cfg.primes, [&]<class F>(int q) {
      Rng rng = seeded(cfg, "lines.types#" + std::to_string(q));
      std::map<char, long long> tally;
      for (int i = 0; i < 400 && tally.size() < 5; ++i) {
        auto cls = classify_line(random_line_in_y<F>(rng));
        tally[line_type_name(cls.type)[0]]++;
      }
      ok = ok && tally.size() == 5;
      Json per = Json::object();
      for (auto& [k, v] : tally) per[std::string(1, k)] = v;
      actual[q == 0 ? "QQ" : "F" + std::to_string(q)] = per;
    });
    it.expected = Json{{"distinct_types", 5}};
    it.actual = actual;
    judge(it, ok);
  }));

  out.push_back(timed("lines.nonfree-criterion-equivalence", kAnchorUnique, [&](ReportItem& it) {
    int nfields = 1 + static_cast<int>(cfg.primes.size());
    int per_field = std::max(5, (cfg.random_samples + nfields - 1) / nfields);
    long long lines = 0, disagreements = 0, nonfree_seen = 0;
    for_each_field(cfg.primes, [&]<class F>(int q) {
      Rng rng = seeded(cfg, "lines.equiv#" + std::to_string(q));
      for (int i = 0; i < per_field; ++i) {
        auto cls = classify_line(random_line_in_y<F>(rng));
        ++lines;
        bool coherent = cls.flags.empty() && (cls.support_points == 1) == cls.non_free &&
                        cls.non_free == (cls.family_dim == 1) &&
                        cls.family_dim == cls.family_dim_ideal;
        if (!coherent) ++disagreements;
        if (cls.non_free) ++nonfree_seen;
      }
    });
    it.expected = Json{{"min_lines", cfg.random_samples}, {"disagreements", 0}};
    it.actual = Json{{"lines", lines}, {"disagreements", disagreements}, {"nonfree_seen", nonfree_seen}};
    judge(it, disagreements == 0 && lines >= cfg.random_samples && nonfree_seen > 0);
  }));

  out.push_back(timed("lines.normal-bundle-dichotomy", kAnchorBundle, [&](ReportItem& it) {
    long long lines = 0, binary = 0;
    for_each_field(cfg.primes, [&]<class F>(int q) {
      Rng rng = seeded(cfg, "lines.dichotomy#" + std::to_string(q));
      for (int i = 0; i < 10; ++i) {
        auto cls = classify_line(random_line_in_y<F>(rng));
        ++lines;
        if ((cls.family_dim == 0 || cls.family_dim == 1) &&
            cls.family_dim == cls.family_dim_ideal)
          ++binary;
      }
    });
    it.expected = Json{{"family_dim", "0 or 1 on every line"}};
    it.actual = Json{{"lines", lines}, {"binary", binary}};
    judge(it, lines == binary && lines > 0);
  }));

  return out;
}

// ---- dbar ----

std::vector<ReportItem> suite_dbar(const RunConfig& cfg) {
  std::vector<ReportItem> out;

  out.push_back(timed("dbar.pair-membership", kAnchorIncidence, [&](ReportItem& it) {
    long long pairs = 0, in_dbar = 0, rank1 = 0, rank1_roundtrip = 0, s_span_cases = 0;
    bool ok = true;
    for_each_field(cfg.primes, [&]<class F>(int q) {
      Rng rng = seeded(cfg, "dbar.pairs#" + std::to_string(q));
      for (int i = 0; i < 8; ++i) {
        auto line = random_line_in_y<F>(rng);
        auto span = line.span();
        auto fam = double_line_family(span);
        auto dirs = quotient_dirs(span, fam.u_l);
        if (dirs.size() == 2) {
          std::vector<F> sum(kWedgeDim, F(0));
          for (int k = 0; k < kWedgeDim; ++k) sum[k] = dirs[0][k] + dirs[1][k];
          dirs.push_back(std::move(sum));
        }
        for (const auto& u : dirs) {
          ++pairs;
          try {
            auto pair = double_line_pair(line, u);
            if (pair_in_dbar(pair)) ++in_dbar;
            if (conic_rank(pair) == 1) {
              ++rank1;
              if (pair_support_line(pair) == line) ++rank1_roundtrip;
            }
          } catch (const std::invalid_argument&) {
            // the only plane without a unique enveloping 4-space is S itself
            auto u3 = span.sum(Subspace<F>::span_of({u}, kWedgeDim));
            ok = ok && u3 == s_plane_span<F>();
            ++in_dbar;
            ++s_span_cases;
          }
        }
      }
    });
    it.expected = Json{{"pairs_in_dbar", true}, {"rank1_supports_recover_line", true}};
    it.actual = Json{{"pairs", pairs},
                     {"in_dbar", in_dbar},
                     {"rank1", rank1},
                     {"rank1_roundtrip", rank1_roundtrip},
                     {"s_span_cases", s_span_cases}};
    judge(it, ok && pairs > 0 && in_dbar == pairs && rank1 == rank1_roundtrip && rank1 > 0);
  }));

  out.push_back(timed("dbar.table-planes", kAnchorIncidence, [&](ReportItem& it) {
    bool ok = true;
    Json actual = Json::object();
    for_each_field(std::vector<int>{7}, [&]<class F>(int q) {
      Json field = Json::object();
      auto plane0 = pt_span(F(0));
      auto s_plane = s_plane_span<F>();

      {  // row (a): a unique direction, and its pair recovers the line
        auto line = table_row<F>('a');
        auto fam = double_line_family(line.span());
        auto dirs = quotient_dirs(line.span(), fam.u_l);
        bool row_ok = fam.u_l.dim() == 3 && dirs.size() == 1;
        if (row_ok) {
          auto pair = double_line_pair(line, dirs[0]);
          row_ok = conic_rank(pair) == 1 && pair_support_line(pair) == line;
        }
        ok = ok && row_ok;
        field["a"] = row_ok;
      }
      {  // row (b): the unique plane is the sweep plane P_0
        auto line = table_row<F>('b');
        auto fam = double_line_family(line.span());
        auto dirs = quotient_dirs(line.span(), fam.u_l);
        bool row_ok = fam.u_l.dim() == 3 && dirs.size() == 1;
        if (row_ok) {
          auto u3 = line.span().sum(Subspace<F>::span_of({dirs[0]}, kWedgeDim));
          row_ok = u3 == plane0;
        }
        ok = ok && row_ok;
        field["b"] = row_ok;
      }
      {  // row (c): pencil with rank-one members and the sweep-plane member
        auto line = table_row<F>('c');
        auto fam = double_line_family(line.span());
        auto dirs = quotient_dirs(line.span(), fam.u_l);
        bool row_ok = fam.u_l.dim() == 4 && dirs.size() == 2;
        bool saw_rank1 = false, saw_plane0 = false;
        if (row_ok) {
          std::vector<std::vector<F>> members = {dirs[0], dirs[1]};
          for (long a : {1L, -1L, 2L}) {
            std::vector<F> u(kWedgeDim, F(0));
            for (int k = 0; k < kWedgeDim; ++k) u[k] = dirs[0][k] + F(a) * dirs[1][k];
            members.push_back(std::move(u));
          }
          for (const auto& u : members) {
            auto u3 = line.span().sum(Subspace<F>::span_of({u}, kWedgeDim));
            if (u3 == plane0) {
              saw_plane0 = true;
              continue;
            }
            auto pair = double_line_pair(line, u);
            if (conic_rank(pair) == 1 && pair_support_line(pair) == line) saw_rank1 = true;
          }
        }
        ok = ok && row_ok && saw_rank1 && saw_plane0;
        field["c"] = row_ok && saw_rank1 && saw_plane0;
      }
      {  // row (d): pencil hits rank-one members, P_0 and S itself
        auto line = table_row<F>('d');
        auto fam = double_line_family(line.span());
        auto dirs = quotient_dirs(line.span(), fam.u_l);
        bool row_ok = fam.u_l.dim() == 4 && dirs.size() == 2;
        bool saw_rank1 = false, saw_plane0 = false, saw_s = false;
        if (row_ok) {
          std::vector<std::vector<F>> members = {dirs[0], dirs[1]};
          for (long a : {1L, -1L, 2L}) {
            std::vector<F> u(kWedgeDim, F(0));
            for (int k = 0; k < kWedgeDim; ++k) u[k] = dirs[0][k] + F(a) * dirs[1][k];
            members.push_back(std::move(u));
          }
          for (const auto& u : members) {
            auto u3 = line.span().sum(Subspace<F>::span_of({u}, kWedgeDim));
            if (u3 == plane0) {
              saw_plane0 = true;
              continue;
            }
            if (u3 == s_plane) {
              saw_s = true;
              continue;
            }
            auto pair = double_line_pair(line, u);
            if (conic_rank(pair) == 1 && pair_support_line(pair) == line) saw_rank1 = true;
          }
        }
        ok = ok && row_ok && saw_rank1 && saw_plane0 && saw_s;
        field["d"] = row_ok && saw_rank1 && saw_plane0 && saw_s;
      }
      {  // row (e): the unique plane is S
        auto line = table_row<F>('e');
        auto fam = double_line_family(line.span());
        bool row_ok = fam.u_l == s_plane;
        ok = ok && row_ok;
        field["e"] = row_ok;
      }
      actual[q == 0 ? "QQ" : "F" + std::to_string(q)] = field;
    });
    it.expected = Json{{"rows", "a,b,c,d,e planes as published"}};
    it.actual = actual;
    judge(it, ok);
  }));

  out.push_back(timed("dbar.rank-stratification", kAnchorTwoCurves, [&](ReportItem& it) {
    const std::uint32_t q = 3;
    auto rank0 = count_points(VarietyId::Rank0Locus, q, cfg.jobs);
    auto dbar = count_points(VarietyId::Dbar, q, cfg.jobs);
    long long expect_rank0 = 2 * (q + 1);
    long long expect_rank1 = eval_poly(expected_count_poly(VarietyId::Dbar), q) - expect_rank0;
    it.expected = Json{{"q", q}, {"rank0", expect_rank0}, {"rank1", expect_rank1}};
    it.actual = Json{{"q", q},
                     {"rank0", rank0.count},
                     {"rank1", dbar.count - rank0.count},
                     {"dbar", dbar.count}};
    judge(it, rank0.count == expect_rank0 && dbar.count - rank0.count == expect_rank1);
  }));

  return out;
}

// ---- counts ----

std::vector<ReportItem> suite_counts(const RunConfig& cfg) {
  std::vector<ReportItem> out;
  const std::vector<std::uint32_t> qs = {3, 5};

  auto count_item = [&](const std::string& id, const char* anchor, VarietyId var,
                        auto&& formula, const std::string& formula_str) {
    return timed(id, anchor, [&](ReportItem& it) {
      bool ok = true;
      Json rows = Json::array();
      for (auto q : qs) {
        auto c = count_points(var, q, cfg.jobs);
        long long expect = formula(static_cast<long long>(q));
        ok = ok && c.count == expect;
        rows.push_back(Json{{"q", q}, {"enumerated", c.count}, {"formula", expect}});
      }
      it.expected = Json{{"formula", formula_str}};
      it.actual = rows;
      judge(it, ok);
    });
  };

  out.push_back(count_item(
      "counts.hyperplane-section", kAnchorBlowup, VarietyId::H1Y,
      [](long long q) { return eval_poly({1, 2, 3, 2, 1}, q); }, "1+2q+3q^2+2q^3+q^4"));

  out.push_back(count_item(
      "counts.quadric-base", kAnchorFibration, VarietyId::Q3,
      [](long long q) { return eval_poly({1, 1, 1, 1}, q); }, "1+q+q^2+q^3"));

  out.push_back(timed("counts.divisor-fibration", kAnchorFibration, [&](ReportItem& it) {
    bool ok = true;
    Json rows = Json::array();
    for (auto q : qs) {
      auto dbar = count_points(VarietyId::Dbar, q, cfg.jobs);
      auto q3 = count_points(VarietyId::Q3, q, cfg.jobs);
      long long expect = (q + 1) * q3.count;
      ok = ok && dbar.count == expect;
      rows.push_back(Json{{"q", q}, {"dbar", dbar.count}, {"q_plus_1_times_q3", expect}});
    }
    it.expected = Json{{"identity", "|Dbar| = (q+1) |Q3|"}};
    it.actual = rows;
    judge(it, ok);
  }));

  out.push_back(count_item(
      "counts.rank-zero-locus", kAnchorTwoCurves, VarietyId::Rank0Locus,
      [](long long q) { return 2 * (q + 1); }, "2(q+1)"));

  out.push_back(timed("counts.incidence-space", kAnchorIncidence, [&](ReportItem& it) {
    bool ok = true;
    Json rows = Json::array();
    for (auto q : qs) {
      auto c = count_points(VarietyId::SY, q, cfg.jobs);
      long long expect = gaussian_binomial(5, 4, q) * gaussian_binomial(4, 3, q);
      ok = ok && c.count == expect && c.jump_pairs == 0;
      rows.push_back(Json{{"q", q},
                          {"enumerated", c.count},
                          {"product_of_gaussians", expect},
                          {"jump_pairs", c.jump_pairs}});
    }
    it.expected = Json{{"identity", "|SY| = [5 choose 4]_q [4 choose 3]_q, no rank jumps"}};
    it.actual = rows;
    judge(it, ok);
  }));

  out.push_back(timed("counts.double-line-interpolation", kAnchorDefect, [&](ReportItem& it) {
    auto poly = interpolated_double_line_poly(cfg.jobs);
    const auto& expect = expected_count_poly(VarietyId::DY);
    it.expected = Json{{"coeffs", expect}};
    it.actual = Json{{"coeffs", poly}};
    judge(it, poly == expect);
  }));

  return out;
}

// ---- poincare ----

std::vector<ReportItem> suite_poincare(const RunConfig& cfg) {
  std::vector<ReportItem> out;

  out.push_back(timed("poincare.hyperplane-blowup", kAnchorBlowup, [&](ReportItem& it) {
    auto p = pp_blowup(pp_projective(4), pp_projective(1), 3);
    bool ok = p == PoincarePoly(h1y_poincare_coeffs());
    Json rows = Json::array();
    for (std::uint32_t q : {3u, 5u}) {
      auto c = count_points(VarietyId::H1Y, q, cfg.jobs);
      ok = ok && p.at_q(q) == c.count;
      rows.push_back(Json{{"q", q}, {"poincare_at_q", p.at_q(q)}, {"enumerated", c.count}});
    }
    it.expected = Json{{"coeffs", h1y_poincare_coeffs()}};
    it.actual = Json{{"coeffs", p.coeffs()}, {"evaluations", rows}};
    judge(it, ok);
  }));

  out.push_back(timed("poincare.conic-space-chain", kAnchorDownUp, [&](ReportItem& it) {
    auto chain = ip_stable_maps_chain(expected_count_poly(VarietyId::DY), moduli_target_coeffs());
    bool ok = chain.h2.palindromic() && chain.sy_tilde.palindromic();
    Json rows = Json::array();
    for (std::uint32_t q : {3u, 5u}) {
      auto c = count_points(VarietyId::SY, q, cfg.jobs);
      ok = ok && chain.sy.at_q(q) == c.count;
      rows.push_back(Json{{"q", q}, {"pairs_at_q", chain.sy.at_q(q)}, {"enumerated", c.count}});
      ok = ok && chain.d_tilde.at_q(q) == (q + 1LL) * (q + 1) * (q + 1) * (q + 1);
    }
    it.expected = Json{{"pairs_space", "matches enumeration"},
                       {"resolved_divisor", "(q+1)^4"},
                       {"palindromic", true}};
    it.actual = Json{{"pairs_coeffs", chain.sy.coeffs()},
                     {"blowup_coeffs", chain.sy_tilde.coeffs()},
                     {"conics_coeffs", chain.h2.coeffs()},
                     {"evaluations", rows}};
    judge(it, ok);
  }));

  out.push_back(timed("poincare.defect-identity", kAnchorDefect, [&](ReportItem& it) {
    auto chain = ip_stable_maps_chain(expected_count_poly(VarietyId::DY), moduli_target_coeffs());
    auto defect = (pp_projective(2) - PoincarePoly::one()) * chain.d_selected;
    bool ok = chain.moduli - chain.h2 == defect;
    it.expected = Json{{"identity", "moduli - conics = (P(P^2)-1) * P(D)"}};
    it.actual = Json{{"difference", (chain.moduli - chain.h2).coeffs()},
                     {"defect_term", defect.coeffs()}};
    judge(it, ok);
  }));

  {
    auto t0 = Clock::now();
    ReportItem item;
    try {
      auto referee = interpolated_double_line_poly(cfg.jobs);
      item = poincare_chain_item(referee, moduli_target_coeffs());
    } catch (const std::exception& e) {
      item.check_id = "poincare.moduli-comparison";
      item.paper_anchor = kAnchorModuli;
      item.status = CheckStatus::fail;
      item.actual = std::string("exception: ") + e.what();
    }
    item.elapsed_ms = ms_since(t0);
    out.push_back(std::move(item));
  }

  return out;
}

}  // namespace

const std::vector<std::string>& all_suite_ids() {
  static const std::vector<std::string> ids = {"pluecker", "elimination", "lemma-q3", "planes",
                                               "lines",    "dbar",        "counts",   "poincare"};
  return ids;
}

bool rank_dependent_suite(const std::string& id) {
  return id == "planes" || id == "lines" || id == "dbar";
}

void validate_config(const RunConfig& cfg) {
  if (cfg.random_samples < 1) throw std::invalid_argument("config: random_samples must be positive");
  if (cfg.jobs < 1) throw std::invalid_argument("config: jobs must be positive");
  if (cfg.primes.empty()) throw std::invalid_argument("config: need at least one prime");
  const auto& ids = all_suite_ids();
  bool needs_odd = false;
  for (const auto& s : cfg.suites) {
    if (s == "all") {
      needs_odd = true;
      continue;
    }
    if (std::find(ids.begin(), ids.end(), s) == ids.end())
      throw std::invalid_argument("config: unknown suite id '" + s + "'");
    needs_odd = needs_odd || rank_dependent_suite(s);
  }
  if (cfg.suites.empty()) needs_odd = true;
  for (int p : cfg.primes) {
    bool supported = false;
    for (std::uint32_t sp : kSupportedPrimes) supported = supported || static_cast<int>(sp) == p;
    if (!supported) throw std::invalid_argument("config: unsupported prime " + std::to_string(p));
    if (needs_odd && p == 2)
      throw std::invalid_argument("config: rank-dependent suites need odd primes");
  }
}

std::vector<ReportItem> run_suite(const std::string& id, const RunConfig& cfg) {
  if (id == "pluecker") return suite_pluecker(cfg);
  if (id == "elimination") return suite_elimination(cfg);
  if (id == "lemma-q3") return suite_lemma(cfg);
  if (id == "planes") return suite_planes(cfg);
  if (id == "lines") return suite_lines(cfg);
  if (id == "dbar") return suite_dbar(cfg);
  if (id == "counts") return suite_counts(cfg);
  if (id == "poincare") return suite_poincare(cfg);
  throw std::invalid_argument("unknown suite id '" + id + "'");
}

Report run_verification(RunConfig cfg) {
  bool want_all = cfg.suites.empty() ||
                  std::find(cfg.suites.begin(), cfg.suites.end(), "all") != cfg.suites.end();
  if (want_all) {
    cfg.suites = all_suite_ids();
  } else {
    std::vector<std::string> ordered;
    for (const auto& id : all_suite_ids())
      if (std::find(cfg.suites.begin(), cfg.suites.end(), id) != cfg.suites.end())
        ordered.push_back(id);
    if (ordered.size() != std::set<std::string>(cfg.suites.begin(), cfg.suites.end()).size())
      validate_config(cfg);  // surfaces the unknown id
    cfg.suites = std::move(ordered);
  }
  validate_config(cfg);
  Report rep;
  rep.config = cfg;
  for (const auto& id : cfg.suites) {
    auto items = run_suite(id, cfg);
    for (auto& item : items) rep.items.push_back(std::move(item));
  }
  return rep;
}

ReportItem poincare_chain_item(const std::vector<long long>& referee_counts,
                               const std::vector<long long>& target_coeffs) {
  ReportItem it;
  it.check_id = "poincare.moduli-comparison";
  it.paper_anchor = kAnchorModuli;
  auto t0 = Clock::now();
  StableMapsChain chain = ip_stable_maps_chain(referee_counts, target_coeffs);
  it.expected = Json{{"referee_matched", true},
                     {"matches_target", true},
                     {"all_palindromic", true},
                     {"target", target_coeffs}};
  it.actual = Json{{"referee_matched", chain.referee_matched},
                   {"selected", std::string(1, chain.selected)},
                   {"matches_target", chain.matches_target},
                   {"all_palindromic", chain.all_palindromic},
                   {"moduli", chain.moduli.coeffs()}};
  bool ok = chain.referee_matched && chain.matches_target && chain.all_palindromic;
  if (ok) {
    it.status = CheckStatus::pass;
  } else {
    it.status = CheckStatus::flagged;
    Json steps = Json::array();
    for (const auto& s : chain.steps)
      steps.push_back(Json{{"label", s.label},
                           {"coeffs", s.value.coeffs()},
                           {"palindromic", s.palindromic}});
    it.evidence = Json{{"referee_counts", referee_counts},
                       {"candidate_a", chain.d_candidate_a.coeffs()},
                       {"candidate_b", chain.d_candidate_b.coeffs()},
                       {"moduli", chain.moduli.coeffs()},
                       {"target", target_coeffs},
                       {"steps", steps}};
  }
  it.elapsed_ms = ms_since(t0);
  return it;
}

std::vector<long long> interpolated_double_line_poly(int jobs) {
  std::vector<std::pair<long long, long long>> samples;
  for (std::uint32_t q : {3u, 5u, 7u, 11u, 13u})
    samples.push_back({q, count_points(VarietyId::DY, q, jobs).count});
  return interpolate_counts(samples, 4);
}

}  // namespace dp4
