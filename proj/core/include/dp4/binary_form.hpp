#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dp4/poly.hpp"

namespace dp4 {

// Homogeneous form in two variables (s0 : s1), dense coefficients:
// c[i] multiplies s0^(d-i) * s1^i. The zero form has an empty vector.
template <class F>
class BinaryForm {
 public:
  BinaryForm() = default;
  explicit BinaryForm(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  // Extract from a polynomial that is homogeneous in exactly the two given
  // variables (all other variables absent).
  static BinaryForm from_poly(const Poly<F>& p, std::size_t v0, std::size_t v1) {
    if (p.is_zero()) return BinaryForm();
    unsigned d = 0;
    for (const auto& [m, c] : p.terms()) {
      unsigned dm = 0;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        if (i != v0 && i != v1)
          throw std::invalid_argument("BinaryForm: extra variable " + p.ring()->vars[i]);
        dm += m[i];
      }
      d = std::max(d, dm);
    }
    std::vector<F> cs(d + 1, F(0));
    for (const auto& [m, c] : p.terms()) {
      if (m[v0] + m[v1] != d) throw std::invalid_argument("BinaryForm: not homogeneous");
      cs[m[v1]] += c;
    }
    return BinaryForm(std::move(cs));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<F>& coeffs() const { return c_; }

  F evaluate(const F& s0, const F& s1) const {
    F acc(0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      F t = c_[i];
      for (std::size_t k = 0; k + i + 1 < c_.size() + 0u; ++k) t *= s0;  // s0^(d-i)
      for (std::size_t k = 0; k < i; ++k) t *= s1;
      acc += t;
    }
    return acc;
  }

  // Multiplicity of the root at infinity (1:0), i.e. the power of s1 dividing.
  unsigned mult_at_infinity() const {
    unsigned a = 0;
    while (a < c_.size() && c_[a].is_zero()) ++a;
    return a;  // number of leading (s0-high) zero coefficients
  }

  // Dehomogenize: u(x) = f(x, 1), coefficients low-to-high in x.
  // deg u = d - mult_at_infinity; roots of u are the (x:1) roots of f.
  std::vector<F> univariate() const {
    // c_[i] multiplies s0^(d-i) s1^i -> x^(d-i): coefficient of x^k is c_[d-k]
    std::vector<F> u(c_.rbegin(), c_.rend());
    while (!u.empty() && u.back().is_zero()) u.pop_back();
    return u;
  }

  friend BinaryForm gcd(const BinaryForm& a, const BinaryForm& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    unsigned inf = std::min(a.mult_at_infinity(), b.mult_at_infinity());
    std::vector<F> g = uni_gcd(a.univariate(), b.univariate());
    // homogenize g and multiply by s1^inf
    std::vector<F> cs(g.size() + inf, F(0));
    for (std::size_t k = 0; k < g.size(); ++k) cs[g.size() - 1 - k] = g[k];
    // cs currently: coefficient of s1^i for i in [0, deg g]; append inf extra
    // s1 powers by shifting
    if (inf) {
      std::vector<F> shifted(cs.size(), F(0));
      for (std::size_t i = 0; i + inf < cs.size() + 0u; ++i) shifted[i + inf] = cs[i];
      cs = std::move(shifted);
    }
    return BinaryForm(std::move(cs)).monic();
  }

  BinaryForm monic() const {
    if (is_zero()) return *this;
    BinaryForm r = *this;
    // normalize by the last nonzero (the univariate leading coefficient)
    F inv(1);
    for (std::size_t i = c_.size(); i-- > 0;)
      if (!c_[i].is_zero()) {
        inv = c_[i].inv();
        break;
      }
    for (auto& x : r.c_) x *= inv;
    return r;
  }

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    bool all_zero = true;
    for (const auto& x : c_)
      if (!x.is_zero()) all_zero = false;
    if (all_zero) c_.clear();
  }

  // Monic gcd of univariate polynomials, coefficients low-to-high.
  static std::vector<F> uni_gcd(std::vector<F> a, std::vector<F> b) {
    auto norm = [](std::vector<F>& p) {
      while (!p.empty() && p.back().is_zero()) p.pop_back();
    };
    norm(a);
    norm(b);
    while (!b.empty()) {
      // a mod b
      while (a.size() >= b.size() && !a.empty()) {
        F f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        norm(a);
        if (a.size() >= b.size() && !a.empty() && a.back().is_zero()) norm(a);
      }
      std::swap(a, b);
    }
    if (!a.empty()) {
      F inv = a.back().inv();
      for (auto& x : a) x *= inv;
    }
    return a;
  }

  std::vector<F> c_;
};

// One squarefree factor with its multiplicity in the original form.
template <class F>
struct SquarefreePart {
  std::vector<F> factor;  // univariate, low-to-high, monic, squarefree
  unsigned multiplicity;
};

namespace detail {

template <class F>
std::vector<F> uni_derivative(const std::vector<F>& u) {
  std::vector<F> d;
  for (std::size_t i = 1; i < u.size(); ++i) d.push_back(u[i] * F(static_cast<long>(i)));
  while (!d.empty() && d.back().is_zero()) d.pop_back();
  return d;
}

template <class F>
std::vector<F> uni_gcd_pub(std::vector<F> a, std::vector<F> b) {
  BinaryForm<F> fa(std::vector<F>(a.rbegin(), a.rend()));
  BinaryForm<F> fb(std::vector<F>(b.rbegin(), b.rend()));
  auto g = gcd(fa, fb);
  return g.univariate();
}

template <class F>
std::vector<F> uni_quo(const std::vector<F>& a, const std::vector<F>& b) {
  // exact division a / b
  std::vector<F> r = a, q;
  if (b.empty()) throw std::domain_error("uni_quo: division by zero");
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, F(0));
  while (r.size() >= b.size() && !r.empty()) {
    F f = r.back() / b.back();
    std::size_t shift = r.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= f * b[i];
    while (!r.empty() && r.back().is_zero()) r.pop_back();
  }
  if (!r.empty()) throw std::domain_error("uni_quo: not divisible");
  return q;
}

}  // namespace detail

// Musser squarefree decomposition of a monic univariate polynomial, char-p
// aware: the residual gcd chain that survives the multiplicity loop is a
// p-th power (its derivative vanished), so take the p-th root and recurse.
// Over F_p the coefficient p-th root is the identity (Frobenius fixes F_p).
template <class F>
std::vector<SquarefreePart<F>> squarefree_decompose(std::vector<F> u, int characteristic) {
  std::vector<SquarefreePart<F>> out;
  while (!u.empty() && u.back().is_zero()) u.pop_back();
  if (u.size() <= 1) return out;
  {
    F inv = u.back().inv();
    for (auto& x : u) x *= inv;
  }
  auto pth_root_recurse = [&](const std::vector<F>& v, unsigned outer_mult) {
    const unsigned p = static_cast<unsigned>(characteristic);
    std::vector<F> w;
    for (std::size_t i = 0; i < v.size(); i += p) {
      for (std::size_t j = 1; j < p && i + j < v.size(); ++j)
        if (!v[i + j].is_zero()) throw std::domain_error("squarefree: p-th root check failed");
      w.push_back(v[i]);
    }
    for (auto part : squarefree_decompose(w, characteristic)) {
      part.multiplicity *= p * outer_mult;
      out.push_back(std::move(part));
    }
  };
  auto du = detail::uni_derivative(u);
  if (du.empty()) {
    if (characteristic == 0) throw std::domain_error("squarefree: zero derivative in char 0");
    pth_root_recurse(u, 1);
    return out;
  }
  std::vector<F> c = detail::uni_gcd_pub(u, du);
  std::vector<F> w = detail::uni_quo(u, c);
  unsigned i = 1;
  while (w.size() > 1) {
    std::vector<F> y = detail::uni_gcd_pub(w, c);
    std::vector<F> z = detail::uni_quo(w, y);
    if (z.size() > 1) out.push_back({z, i});
    w = std::move(y);
    c = detail::uni_quo(c, w);
    ++i;
  }
  if (c.size() > 1) {
    if (characteristic == 0) throw std::domain_error("squarefree: residual in char 0");
    pth_root_recurse(c, 1);
  }
  return out;
}

// Root bookkeeping for a system of binary forms: the structure of the common
// root locus over the algebraic closure, plus rational witnesses when the
// relevant factors are linear.
template <class F>
struct RootSummary {
  bool all_zero = false;            // every form identically zero
  unsigned total_multiplicity = 0;  // deg of the gcd
  unsigned distinct_points = 0;     // # distinct closure roots of the gcd
  std::vector<unsigned> multiplicities;            // one entry per distinct root
  std::vector<std::pair<F, F>> rational_points;    // (s0:s1) witnesses found
};

template <class F>
class BinaryFormSystem {
 public:
  explicit BinaryFormSystem(std::vector<BinaryForm<F>> forms) : forms_(std::move(forms)) {}

  bool all_zero() const {
    for (const auto& f : forms_)
      if (!f.is_zero()) return false;
    return true;
  }

  BinaryForm<F> common_gcd() const {
    BinaryForm<F> g;  // zero
    for (const auto& f : forms_) g = gcd(g, f);
    return g;
  }

  RootSummary<F> analyze(int characteristic) const {
    RootSummary<F> s;
    if (all_zero()) {
      s.all_zero = true;
      return s;
    }
    BinaryForm<F> g = common_gcd();
    if (g.degree() <= 0) return s;  // no common roots
    s.total_multiplicity = static_cast<unsigned>(g.degree());
    unsigned inf = g.mult_at_infinity();
    if (inf) {
      s.distinct_points += 1;
      s.multiplicities.push_back(inf);
      s.rational_points.push_back({F(1), F(0)});
    }
    auto u = g.univariate();
    for (const auto& part : squarefree_decompose(u, characteristic)) {
      unsigned deg = static_cast<unsigned>(part.factor.size()) - 1;
      for (unsigned k = 0; k < deg; ++k) s.multiplicities.push_back(part.multiplicity);
      s.distinct_points += deg;
      if (deg == 1) {
        // monic x + c -> root x = -c, i.e. point (-c : 1)
        s.rational_points.push_back({-part.factor[0], F(1)});
      }
    }
    std::sort(s.multiplicities.rbegin(), s.multiplicities.rend());
    return s;
  }

  const std::vector<BinaryForm<F>>& forms() const { return forms_; }

 private:
  std::vector<BinaryForm<F>> forms_;
};

}  // namespace dp4
