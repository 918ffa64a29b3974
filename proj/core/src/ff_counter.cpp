#include "dp4/ff_counter.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <thread>

#include "dp4/charts.hpp"
#include "dp4/classifier.hpp"
#include "dp4/grassmann.hpp"
#include "dp4/matrix.hpp"
#include "dp4/prime_field.hpp"
#include "dp4/rational.hpp"

namespace dp4 {

namespace {

// All RREF bases of k-dimensional subspaces of F^n.
template <class F>
std::vector<Matrix<F>> all_subspaces(int k, int n) {
  const long long q = F::modulus();
  std::vector<Matrix<F>> out;
  std::vector<int> piv(k);

  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == k) {
      std::vector<bool> is_piv(n, false);
      for (int c : piv) is_piv[c] = true;
      std::vector<std::pair<int, int>> free_pos;
      for (int i = 0; i < k; ++i)
        for (int j = piv[i] + 1; j < n; ++j)
          if (!is_piv[j]) free_pos.emplace_back(i, j);
      long long cells = 1;
      for (std::size_t i = 0; i < free_pos.size(); ++i) cells *= q;
      for (long long code = 0; code < cells; ++code) {
        Matrix<F> m(k, n);
        for (int i = 0; i < k; ++i) m(i, piv[i]) = F(1);
        long long rest = code;
        for (const auto& [i, j] : free_pos) {
          m(i, j) = F(rest % q);
          rest /= q;
        }
        out.push_back(std::move(m));
      }
      return;
    }
    for (int c = start; c < n; ++c) {
      piv[pos] = c;
      rec(pos + 1, c + 1);
    }
  };
  rec(0, 0);
  return out;
}

// Normalized representatives of P^dim(F_q): first nonzero coordinate is 1.
template <class F>
std::vector<std::vector<F>> projective_points(int dim) {
  const long long q = F::modulus();
  const int n = dim + 1;
  std::vector<std::vector<F>> out;
  for (int lead = 0; lead < n; ++lead) {
    long long cells = 1;
    for (int j = lead + 1; j < n; ++j) cells *= q;
    for (long long code = 0; code < cells; ++code) {
      std::vector<F> v(n, F(0));
      v[lead] = F(1);
      long long rest = code;
      for (int j = lead + 1; j < n; ++j) {
        v[j] = F(rest % q);
        rest /= q;
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

template <class Item>
long long sum_over(const std::vector<Item>& items, int jobs,
                   const std::function<long long(const Item&)>& f) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || items.size() < 2) {
    long long s = 0;
    for (const auto& it : items) s += f(it);
    return s;
  }
  std::vector<long long> part(jobs, 0);
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w)
    workers.emplace_back([&, w] {
      for (std::size_t i = w; i < items.size(); i += static_cast<std::size_t>(jobs))
        part[w] += f(items[i]);
    });
  for (auto& t : workers) t.join();
  long long s = 0;
  for (auto x : part) s += x;
  return s;
}

template <class F>
long long count_y(int jobs) {
  auto planes = all_subspaces<F>(2, kAmbient);
  return sum_over<Matrix<F>>(planes, jobs, [](const Matrix<F>& m) -> long long {
    auto w = wedge2(m.row(0), m.row(1));
    return h1_of(w).is_zero() && h2_of(w).is_zero() ? 1 : 0;
  });
}

template <class F>
long long count_h1y(int jobs) {
  const long long q = F::modulus();
  auto pts = projective_points<F>(4);
  return sum_over<std::vector<F>>(pts, jobs, [q](const std::vector<F>& v) -> long long {
    auto lines = lines_with_vertex(v);
    return lines.on_conic ? gaussian_binomial(3, 2, q) : 1;
  });
}

template <class F>
long long count_cv() {
  long long s = 0;
  for (const auto& v : projective_points<F>(4))
    if (on_vertex_conic(v)) ++s;
  return s;
}

template <class F>
long long count_cv_dual() {
  auto s_basis = s_plane_span<F>();
  long long s = 0;
  for (const auto& c : projective_points<F>(2)) {
    std::vector<F> w(kWedgeDim, F(0));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < kWedgeDim; ++j) w[j] += c[i] * s_basis.basis()(i, j);
    if (s_conic_value(w).is_zero()) ++s;
  }
  return s;
}

template <class F>
long long count_q3() {
  long long s = 0;
  for (const auto& x : projective_points<F>(4))
    if (q3_value(x).is_zero()) ++s;
  return s;
}

template <class F>
long long count_sing_q3() {
  long long s = 0;
  for (const auto& x : projective_points<F>(4)) {
    if (!q3_value(x).is_zero()) continue;
    std::vector<F> grad = {F(4) * x[2], F(2) * x[1], F(4) * x[0], F(0), F(0)};
    bool zero = true;
    for (const auto& g : grad) zero = zero && g.is_zero();
    if (zero) ++s;
  }
  return s;
}

// Gram matrix of the fiber quadric on K_{V4} in the K basis.
template <class F>
Matrix<F> k_gram(const Subspace<F>& k, const Subspace<F>& v4) {
  auto vol = v4_volume(v4.basis());
  int m = -1;
  for (int i = 0; i < 5 && m < 0; ++i)
    if (!vol[i].is_zero()) m = i;
  if (m < 0) throw std::logic_error("k_gram: degenerate 4-space");
  F denom = (F(2) * vol[m]).inv();
  Matrix<F> g(k.dim(), k.dim());
  for (std::size_t i = 0; i < k.dim(); ++i)
    for (std::size_t j = i; j < k.dim(); ++j) {
      g(i, j) = wedge22(k.basis_row(i), k.basis_row(j))[m] * denom;
      g(j, i) = g(i, j);
    }
  return g;
}

// Count conic planes U3 = ker(psi) inside K whose restricted rank passes the
// predicate; the restriction Gram is C G C^T for the kernel basis C of psi.
template <class F>
long long count_pairs_with_rank(int jobs, const std::function<bool(int)>& pass) {
  auto v4s = all_subspaces<F>(4, kAmbient);
  return sum_over<Matrix<F>>(v4s, jobs, [&pass](const Matrix<F>& rows) -> long long {
    Subspace<F> v4(rows, kAmbient);
    auto k = k_of_v4(v4);
    if (k.dim() != 4) throw std::logic_error("count_pairs: 4-space with jumped kernel");
    auto g = k_gram(k, v4);
    long long s = 0;
    for (const auto& psi : projective_points<F>(3)) {
      Matrix<F> functional(1, 4);
      for (int j = 0; j < 4; ++j) functional(0, j) = psi[j];
      auto c = functional.kernel();
      Matrix<F> restricted = c * g * c.transpose();
      if (pass(static_cast<int>(restricted.rank()))) ++s;
    }
    return s;
  });
}

template <class F>
CountResult count_sy(int jobs) {
  const long long q = F::modulus();
  auto v4s = all_subspaces<F>(4, kAmbient);
  CountResult out;
  out.count = sum_over<Matrix<F>>(v4s, jobs, [q](const Matrix<F>& rows) -> long long {
    auto k = k_of_v4(Subspace<F>(rows, kAmbient));
    return gaussian_binomial(static_cast<int>(k.dim()), 3, q);
  });
  out.jump_pairs = sum_over<Matrix<F>>(v4s, jobs, [](const Matrix<F>& rows) -> long long {
    return k_of_v4(Subspace<F>(rows, kAmbient)).dim() != 4 ? 1 : 0;
  });
  return out;
}

// Double lines, fibered over lines of Y: each line contributes the F_q
// points of the projective family P(U_L / W_L), of dimension 0 or 1.
template <class F>
long long count_dy(int jobs) {
  const long long q = F::modulus();

  auto family_points = [q](const FlagLine<F>& line) -> long long {
    auto span = line.span();
    auto cond = double_line_conditions(span.basis_row(0), span.basis_row(1));
    int dim_u = static_cast<int>(cond.kernel().rows());
    if (dim_u != 3 && dim_u != 4) throw std::logic_error("count_dy: family out of range");
    return dim_u == 3 ? 1 : q + 1;
  };

  auto pts = projective_points<F>(4);
  return sum_over<std::vector<F>>(pts, jobs, [&](const std::vector<F>& v) -> long long {
    auto lines = lines_with_vertex(v);
    if (!lines.on_conic) return family_points(*lines.unique_line);

    // lift each 2-subspace of W_v / <v> to a plane V3 with v in V3 in W_v
    std::vector<std::vector<F>> ext = {v};
    for (std::size_t i = 0; i < lines.w_v.dim() && ext.size() < 4; ++i) {
      auto cand = ext;
      cand.push_back(lines.w_v.basis_row(i));
      if (Subspace<F>::span_of(cand, kAmbient).dim() == cand.size()) ext = std::move(cand);
    }
    if (ext.size() != 4) throw std::logic_error("count_dy: quotient basis incomplete");

    long long s = 0;
    auto vspan = Subspace<F>::span_of({v}, kAmbient);
    for (const auto& t : all_subspaces<F>(2, 3)) {
      std::vector<std::vector<F>> rows = {v};
      for (int r = 0; r < 2; ++r) {
        std::vector<F> w(kAmbient, F(0));
        for (int c = 0; c < 3; ++c)
          for (int j = 0; j < kAmbient; ++j) w[j] += t(r, c) * ext[1 + c][j];
        rows.push_back(std::move(w));
      }
      s += family_points(FlagLine<F>(vspan, Subspace<F>::span_of(rows, kAmbient)));
    }
    return s;
  });
}

template <class F>
CountResult count_impl(VarietyId id, int jobs) {
  CountResult out;
  switch (id) {
    case VarietyId::Y: out.count = count_y<F>(jobs); break;
    case VarietyId::H1Y: out.count = count_h1y<F>(jobs); break;
    case VarietyId::Cv: out.count = count_cv<F>(); break;
    case VarietyId::CvDual: out.count = count_cv_dual<F>(); break;
    case VarietyId::Q3: out.count = count_q3<F>(); break;
    case VarietyId::SingQ3: out.count = count_sing_q3<F>(); break;
    case VarietyId::Dbar:
      out.count = count_pairs_with_rank<F>(jobs, [](int r) { return r <= 1; });
      break;
    case VarietyId::SY: out = count_sy<F>(jobs); break;
    case VarietyId::Rank0Locus:
      out.count = count_pairs_with_rank<F>(jobs, [](int r) { return r == 0; });
      break;
    case VarietyId::DY: out.count = count_dy<F>(jobs); break;
  }
  return out;
}

}  // namespace

VarietyId variety_from_name(const std::string& name) {
  if (name == "y") return VarietyId::Y;
  if (name == "h1y") return VarietyId::H1Y;
  if (name == "cv") return VarietyId::Cv;
  if (name == "cv-dual") return VarietyId::CvDual;
  if (name == "q3") return VarietyId::Q3;
  if (name == "sing-q3") return VarietyId::SingQ3;
  if (name == "dbar") return VarietyId::Dbar;
  if (name == "sy") return VarietyId::SY;
  if (name == "rank0") return VarietyId::Rank0Locus;
  if (name == "dy") return VarietyId::DY;
  throw std::invalid_argument("unknown variety: " + name);
}

const char* variety_name(VarietyId id) {
  switch (id) {
    case VarietyId::Y: return "y";
    case VarietyId::H1Y: return "h1y";
    case VarietyId::Cv: return "cv";
    case VarietyId::CvDual: return "cv-dual";
    case VarietyId::Q3: return "q3";
    case VarietyId::SingQ3: return "sing-q3";
    case VarietyId::Dbar: return "dbar";
    case VarietyId::SY: return "sy";
    case VarietyId::Rank0Locus: return "rank0";
    case VarietyId::DY: return "dy";
  }
  throw std::logic_error("variety_name: bad enum");
}

bool variety_needs_odd_q(VarietyId id) {
  switch (id) {
    case VarietyId::Y:
    case VarietyId::H1Y:
    case VarietyId::Cv:
    case VarietyId::SY:
      return false;
    default:
      return true;
  }
}

const std::vector<long long>& expected_count_poly(VarietyId id) {
  static const std::vector<long long> y = {1, 1, 2, 1, 1};
  static const std::vector<long long> h1y = {1, 2, 3, 2, 1};
  static const std::vector<long long> conic = {1, 1};
  static const std::vector<long long> q3 = {1, 1, 1, 1};
  static const std::vector<long long> dbar = {1, 2, 2, 2, 1};
  static const std::vector<long long> sy = {1, 2, 3, 4, 4, 3, 2, 1};
  static const std::vector<long long> rank0 = {2, 2};
  static const std::vector<long long> dy = {1, 3, 5, 3, 1};
  switch (id) {
    case VarietyId::Y: return y;
    case VarietyId::H1Y: return h1y;
    case VarietyId::Cv: return conic;
    case VarietyId::CvDual: return conic;
    case VarietyId::Q3: return q3;
    case VarietyId::SingQ3: return conic;
    case VarietyId::Dbar: return dbar;
    case VarietyId::SY: return sy;
    case VarietyId::Rank0Locus: return rank0;
    case VarietyId::DY: return dy;
  }
  throw std::logic_error("expected_count_poly: bad enum");
}

CountResult count_points(VarietyId id, std::uint32_t q, int jobs) {
  if (variety_needs_odd_q(id) && q == 2)
    throw std::domain_error(std::string("count_points: ") + variety_name(id) +
                            " needs an odd field");
  auto out = with_prime(q, [&]<class F>() { return count_impl<F>(id, jobs); });
  out.id = id;
  out.q = q;
  return out;
}

long long gaussian_binomial(int n, int k, long long q) {
  if (k < 0 || n < 0 || k > n) return 0;
  auto qpow = [q](int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= q;
    return r;
  };
  long long num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= qpow(n - i) - 1;
    den *= qpow(i + 1) - 1;
  }
  if (num % den != 0) throw std::logic_error("gaussian_binomial: non-integral");
  return num / den;
}

long long eval_poly(const std::vector<long long>& coeffs, long long q) {
  long long acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * q + coeffs[i];
  return acc;
}

std::vector<long long> interpolate_counts(
    const std::vector<std::pair<long long, long long>>& samples, int degree_bound) {
  if (samples.empty()) throw std::invalid_argument("interpolate_counts: no samples");
  const std::size_t n = samples.size();
  std::vector<Rat> acc(n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    // Lagrange basis polynomial through sample i
    std::vector<Rat> basis = {Rat(1)};
    Rat scale(1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      // multiply by (x - x_j)
      std::vector<Rat> next(basis.size() + 1, Rat(0));
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * Rat(static_cast<long>(samples[j].first));
      }
      basis = std::move(next);
      scale *= Rat(static_cast<long>(samples[i].first)) - Rat(static_cast<long>(samples[j].first));
    }
    Rat weight = Rat(static_cast<long>(samples[i].second)) / scale;
    for (std::size_t d = 0; d < basis.size(); ++d) acc[d] += basis[d] * weight;
  }
  while (!acc.empty() && acc.back().is_zero()) acc.pop_back();
  if (static_cast<int>(acc.size()) - 1 > degree_bound)
    throw std::domain_error("interpolate_counts: degree bound exceeded");
  std::vector<long long> out;
  for (const auto& c : acc) {
    if (c.den() != 1) throw std::domain_error("interpolate_counts: non-integral coefficient");
    if (!c.num().fits_slong_p()) throw std::domain_error("interpolate_counts: coefficient overflow");
    out.push_back(c.num().get_si());
  }
  return out;
}

}  // namespace dp4
