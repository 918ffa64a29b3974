#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dp4/ring.hpp"

namespace dp4 {

// Sparse multivariate polynomial; terms kept sorted descending in the ring
// order, no zero coefficients stored.
template <class F>
class Poly {
 public:
  using Term = std::pair<Mono, F>;

  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
  static Poly constant(RingPtr ring, F c) {
    Poly p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({Mono(p.ring_->nvars(), 0), c});
    return p;
  }
  static Poly variable(const RingPtr& ring, std::size_t idx, unsigned pow = 1) {
    if (idx >= ring->nvars()) throw std::invalid_argument("Poly: variable index");
    Poly p(ring);
    if (pow == 0) return constant(ring, F(1));
    Mono m(ring->nvars(), 0);
    m[idx] = static_cast<std::uint16_t>(pow);
    p.terms_.push_back({std::move(m), F(1)});
    return p;
  }
  static Poly term(const RingPtr& ring, Mono m, F c) {
    Poly p(ring);
    if (!c.is_zero()) p.terms_.push_back({std::move(m), c});
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  const Mono& leading_mono() const {
    if (is_zero()) throw std::domain_error("Poly: leading term of zero");
    return terms_.front().first;
  }
  const F& leading_coeff() const {
    if (is_zero()) throw std::domain_error("Poly: leading term of zero");
    return terms_.front().second;
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, mono_deg(m));
    return d;
  }
  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, m[var]);
    return d;
  }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = mono_deg(terms_[0].first);
    for (const auto& [m, c] : terms_)
      if (mono_deg(m) != d) return false;
    return true;
  }

  F coeff(const Mono& m) const {
    for (const auto& [mm, c] : terms_)
      if (mm == m) return c;
    return F(0);
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    a.check_ring(b);
    Poly r(a.ring_);
    r.terms_ = merge(a.ring_, a.terms_, b.terms_, false);
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    a.check_ring(b);
    Poly r(a.ring_);
    r.terms_ = merge(a.ring_, a.terms_, b.terms_, true);
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_ring(b);
    Poly r(a.ring_);
    if (a.is_zero() || b.is_zero()) return r;
    auto desc = [&ring = *a.ring_](const Mono& x, const Mono& y) { return ring.cmp(x, y) > 0; };
    std::map<Mono, F, decltype(desc)> acc(desc);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Mono m = mono_mul(ma, mb);
        auto it = acc.find(m);
        if (it == acc.end())
          acc.emplace(std::move(m), ca * cb);
        else {
          it->second += ca * cb;
          if (it->second.is_zero()) acc.erase(it);
        }
      }
    r.terms_.assign(acc.begin(), acc.end());
    return r;
  }
  friend Poly operator*(const Poly& a, const F& s) {
    Poly r(a.ring_);
    if (s.is_zero()) return r;
    r.terms_ = a.terms_;
    for (auto& [m, c] : r.terms_) c *= s;
    return r;
  }
  friend Poly operator*(const F& s, const Poly& a) { return a * s; }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly mul_term(const Mono& m, const F& c) const {
    Poly r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [mm, cc] : terms_) r.terms_.push_back({mono_mul(mm, m), cc * c});
    return r;
  }

  Poly pow(unsigned e) const {
    Poly r = constant(ring_, F(1));
    Poly base = *this;
    while (e) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  F evaluate(const std::vector<F>& point) const {
    if (point.size() != ring_->nvars()) throw std::invalid_argument("Poly: evaluate arity");
    F total(0);
    for (const auto& [m, c] : terms_) {
      F v = c;
      for (std::size_t i = 0; i < m.size(); ++i)
        for (unsigned k = 0; k < m[i]; ++k) v *= point[i];
      total += v;
    }
    return total;
  }

  // Replace variable var by the polynomial sub (same ring).
  Poly substitute(std::size_t var, const Poly& sub) const {
    check_ring(sub);
    Poly r = zero(ring_);
    std::vector<Poly> powers = {constant(ring_, F(1))};
    for (const auto& [m, c] : terms_) {
      while (powers.size() <= m[var]) powers.push_back(powers.back() * sub);
      Mono rest = m;
      rest[var] = 0;
      r += powers[m[var]].mul_term(rest, c);
    }
    return r;
  }

  Poly derivative(std::size_t var) const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_) {
      if (m[var] == 0) continue;
      Mono d = m;
      d[var] -= 1;
      F nc = c * F(static_cast<long>(m[var]));
      if (!nc.is_zero()) r.terms_.push_back({std::move(d), nc});
    }
    r.resort();
    return r;
  }

  template <class G, class Fn>
  Poly<G> map_coeffs(const RingPtr& same_vars_ring, Fn&& fn) const {
    Poly<G> r(same_vars_ring);
    for (const auto& [m, c] : terms_) {
      G g = fn(c);
      if (!g.is_zero()) r.push_term_unchecked(m, g);
    }
    r.resort();
    return r;
  }

  // Internal helpers used by generic code; keep terms valid afterwards.
  void push_term_unchecked(Mono m, F c) { terms_.push_back({std::move(m), std::move(c)}); }
  void resort() {
    std::sort(terms_.begin(), terms_.end(),
              [&ring = *ring_](const Term& a, const Term& b) { return ring.cmp(a.first, b.first) > 0; });
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string cs = c.str();
      bool neg = !cs.empty() && cs[0] == '-';
      if (first) {
        if (neg) os << "-";
        first = false;
      } else {
        os << (neg ? " - " : " + ");
      }
      if (neg) cs = cs.substr(1);
      bool has_vars = mono_deg(m) > 0;
      if (cs != "1" || !has_vars) os << cs;
      bool printed = !has_vars || cs != "1";
      bool first_var = true;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        if (!first_var || printed) os << "*";
        os << ring_->vars[i];
        if (m[i] > 1) os << "^" << m[i];
        first_var = false;
      }
    }
    return os.str();
  }

 private:
  void check_ring(const Poly& o) const {
    if (ring_ != o.ring_) throw std::invalid_argument("Poly: ring mismatch");
  }

  static std::vector<Term> merge(const RingPtr& ring, const std::vector<Term>& a,
                                 const std::vector<Term>& b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      int c;
      if (i >= a.size())
        c = -1;
      else if (j >= b.size())
        c = 1;
      else
        c = ring->cmp(a[i].first, b[j].first);
      if (c > 0) {
        out.push_back(a[i++]);
      } else if (c < 0) {
        out.push_back(b[j]);
        if (subtract) out.back().second = -out.back().second;
        ++j;
      } else {
        F v = subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
        if (!v.is_zero()) out.push_back({a[i].first, v});
        ++i, ++j;
      }
    }
    return out;
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

// Small recursive-descent parser: integers, rationals a/b, variables with ^,
// * juxtaposition via explicit '*', parentheses, + - binary and unary.
template <class F>
class PolyParser {
 public:
  PolyParser(RingPtr ring, std::string src) : ring_(std::move(ring)), s_(std::move(src)) {}

  Poly<F> parse() {
    Poly<F> r = expr();
    skip_ws();
    if (pos_ != s_.size()) throw std::invalid_argument("parse: trailing input at " + std::to_string(pos_));
    return r;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Poly<F> expr() {
    Poly<F> r = eat('-') ? -term() : (eat('+'), term());
    for (;;) {
      if (eat('+'))
        r += term();
      else if (eat('-'))
        r -= term();
      else
        return r;
    }
  }

  Poly<F> term() {
    Poly<F> r = factor();
    while (eat('*')) r *= factor();
    return r;
  }

  Poly<F> factor() {
    Poly<F> base = atom();
    if (eat('^')) {
      long e = integer();
      if (e < 0) throw std::invalid_argument("parse: negative exponent");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Poly<F> atom() {
    skip_ws();
    if (eat('(')) {
      Poly<F> r = expr();
      if (!eat(')')) throw std::invalid_argument("parse: missing )");
      return r;
    }
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long n = integer();
      if (eat('/')) {
        long d = integer();
        return Poly<F>::constant(ring_, F(n) / F(d));
      }
      return Poly<F>::constant(ring_, F(n));
    }
    std::string name = identifier();
    int idx = ring_->var_index(name);
    if (idx < 0) throw std::invalid_argument("parse: unknown variable " + name);
    return Poly<F>::variable(ring_, static_cast<std::size_t>(idx));
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw std::invalid_argument("parse: expected integer");
    return std::stol(s_.substr(start, pos_ - start));
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (start == pos_) throw std::invalid_argument("parse: expected identifier");
    return s_.substr(start, pos_ - start);
  }

  RingPtr ring_;
  std::string s_;
  std::size_t pos_ = 0;
};

template <class F>
inline Poly<F> parse_poly(const RingPtr& ring, const std::string& src) {
  return PolyParser<F>(ring, src).parse();
}

// Re-express a polynomial in another ring, matching variables by name.
template <class F>
Poly<F> remap(const Poly<F>& f, const RingPtr& target) {
  const RingPtr& src = f.ring();
  std::vector<int> to(src->nvars(), -1);
  for (std::size_t i = 0; i < src->nvars(); ++i) to[i] = target->var_index(src->vars[i]);
  Poly<F> out(target);
  for (const auto& [m, c] : f.terms()) {
    Mono tm(target->nvars(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (to[i] < 0)
        throw std::invalid_argument("remap: variable " + src->vars[i] + " missing in target");
      tm[to[i]] = m[i];
    }
    out.push_term_unchecked(std::move(tm), c);
  }
  out.resort();
  return out;
}

}  // namespace dp4
