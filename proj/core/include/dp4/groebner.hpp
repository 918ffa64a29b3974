#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "dp4/poly.hpp"
#include "dp4/rational.hpp"

namespace dp4 {
namespace gb {

// Scale a generator to its canonical form for basis storage: primitive
// integer coefficients with positive leading coefficient over QQ (keeps
// Buchberger coefficient growth in check), monic over a prime field.
template <class F>
void normalize_gen(Poly<F>& f) {
  if (f.is_zero()) return;
  if constexpr (std::is_same_v<F, Rat>) {
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& [m, c] : f.terms()) {
      den_lcm = lcm(den_lcm, c.den());
      num_gcd = gcd(num_gcd, c.num());
    }
    Rat scale(mpq_class(den_lcm) / mpq_class(num_gcd));
    f = f * scale;
    if (f.leading_coeff().sign() < 0) f = -f;
  } else {
    f = f * f.leading_coeff().inv();
  }
}

template <class F>
Poly<F> make_monic(Poly<F> f) {
  if (!f.is_zero()) f = f * f.leading_coeff().inv();
  return f;
}

// Full normal form: divides leading AND trailing terms, so the result has no
// term divisible by any basis leading monomial.
template <class F>
Poly<F> normal_form(Poly<F> f, const std::vector<Poly<F>>& basis) {
  Poly<F> r = Poly<F>::zero(f.ring());
  while (!f.is_zero()) {
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (mono_divides(g.leading_mono(), f.leading_mono())) {
        F c = f.leading_coeff() / g.leading_coeff();
        Mono m = mono_div(f.leading_mono(), g.leading_mono());
        f = f - g.mul_term(m, c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      Poly<F> lt = Poly<F>::term(f.ring(), f.leading_mono(), f.leading_coeff());
      r += lt;
      f -= lt;
    }
  }
  return r;
}

template <class F>
Poly<F> s_poly(const Poly<F>& f, const Poly<F>& g) {
  Mono l = mono_lcm(f.leading_mono(), g.leading_mono());
  Poly<F> a = f.mul_term(mono_div(l, f.leading_mono()), g.leading_coeff());
  Poly<F> b = g.mul_term(mono_div(l, g.leading_mono()), f.leading_coeff());
  return a - b;
}

// Buchberger with the normal selection strategy (smallest lcm first), the
// coprimality criterion, and the chain criterion.
template <class F>
std::vector<Poly<F>> buchberger(std::vector<Poly<F>> gens) {
  std::vector<Poly<F>> g;
  RingPtr ring;
  for (auto& f : gens) {
    if (f.is_zero()) continue;
    ring = f.ring();
    normalize_gen(f);
    g.push_back(std::move(f));
  }
  if (g.empty()) return g;

  struct Pair {
    std::size_t i, j;
    Mono lcm;
    unsigned deg;
  };
  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = ring->cmp(a.lcm, b.lcm);
    if (c) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::vector<Pair> pairs;
  auto add_pairs_for = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      Mono l = mono_lcm(g[i].leading_mono(), g[k].leading_mono());
      pairs.push_back({i, k, l, mono_deg(l)});
    }
  };
  for (std::size_t k = 1; k < g.size(); ++k) add_pairs_for(k);

  std::set<std::pair<std::size_t, std::size_t>> done;
  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
    Pair p = *it;
    pairs.erase(it);
    done.insert({p.i, p.j});

    if (mono_coprime(g[p.i].leading_mono(), g[p.j].leading_mono())) continue;
    // chain criterion: some g[k] divides the lcm and both (i,k), (j,k) done
    bool chained = false;
    for (std::size_t k = 0; k < g.size() && !chained; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!mono_divides(g[k].leading_mono(), p.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
      };
      if (done.count(key(p.i, k)) && done.count(key(p.j, k))) chained = true;
    }
    if (chained) continue;

    Poly<F> s = normal_form(s_poly(g[p.i], g[p.j]), g);
    if (s.is_zero()) continue;
    normalize_gen(s);
    g.push_back(std::move(s));
    add_pairs_for(g.size() - 1);
  }
  return g;
}

// Unique reduced Groebner basis: minimal, tails fully reduced, monic,
// sorted descending by leading monomial.
template <class F>
std::vector<Poly<F>> reduced_basis(const std::vector<Poly<F>>& gens) {
  std::vector<Poly<F>> g = buchberger(gens);
  if (g.empty()) return g;
  const RingPtr& ring = g.front().ring();
  // minimalize
  std::vector<Poly<F>> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      if (mono_divides(g[j].leading_mono(), g[i].leading_mono())) {
        // break ties so exactly one of equal leading monomials survives
        if (g[j].leading_mono() == g[i].leading_mono())
          redundant = j < i;
        else
          redundant = true;
      }
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  // tail-reduce each against the others
  std::vector<Poly<F>> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly<F>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly<F> m = make_monic(minimal[i]);
    Poly<F> lt = Poly<F>::term(ring, m.leading_mono(), F(1));
    out.push_back(lt + normal_form(m - lt, others));
  }
  std::sort(out.begin(), out.end(), [&](const Poly<F>& a, const Poly<F>& b) {
    return ring->cmp(a.leading_mono(), b.leading_mono()) > 0;
  });
  return out;
}

template <class F>
bool ideal_member(const Poly<F>& f, const std::vector<Poly<F>>& groebner) {
  return normal_form(f, groebner).is_zero();
}

template <class F>
bool ideal_contains(const std::vector<Poly<F>>& groebner, const std::vector<Poly<F>>& gens) {
  for (const auto& f : gens)
    if (!ideal_member(f, groebner)) return false;
  return true;
}

template <class F>
bool ideal_equal(const std::vector<Poly<F>>& gens_a, const std::vector<Poly<F>>& gens_b) {
  auto ra = reduced_basis(gens_a);
  auto rb = reduced_basis(gens_b);
  return ra == rb;
}

// Move the named variables to an elimination block, compute a block-order
// basis, keep the generators free of the eliminated variables, and express
// them in a fresh ring on the remaining variables (same order as before).
template <class F>
std::pair<RingPtr, std::vector<Poly<F>>> eliminate(const std::vector<Poly<F>>& gens,
                                                   const std::vector<std::string>& elim_vars) {
  if (gens.empty()) throw std::invalid_argument("eliminate: empty generator list");
  const RingPtr& old_ring = gens.front().ring();
  std::vector<std::size_t> elim_idx, keep_idx;
  for (const auto& name : elim_vars) {
    int i = old_ring->var_index(name);
    if (i < 0) throw std::invalid_argument("eliminate: unknown variable " + name);
    elim_idx.push_back(static_cast<std::size_t>(i));
  }
  for (std::size_t i = 0; i < old_ring->nvars(); ++i)
    if (std::find(elim_idx.begin(), elim_idx.end(), i) == elim_idx.end()) keep_idx.push_back(i);

  std::vector<std::string> block_vars;
  for (auto i : elim_idx) block_vars.push_back(old_ring->vars[i]);
  for (auto i : keep_idx) block_vars.push_back(old_ring->vars[i]);
  RingPtr block_ring = make_ring(block_vars, Order::block, elim_idx.size());

  std::vector<std::size_t> perm;  // block position -> old position
  perm.insert(perm.end(), elim_idx.begin(), elim_idx.end());
  perm.insert(perm.end(), keep_idx.begin(), keep_idx.end());

  std::vector<Poly<F>> block_gens;
  for (const auto& f : gens) {
    Poly<F> bf(block_ring);
    for (const auto& [m, c] : f.terms()) {
      Mono bm(m.size());
      for (std::size_t k = 0; k < m.size(); ++k) bm[k] = m[perm[k]];
      bf.push_term_unchecked(std::move(bm), c);
    }
    bf.resort();
    block_gens.push_back(std::move(bf));
  }

  auto basis = reduced_basis(block_gens);

  std::vector<std::string> keep_vars;
  for (auto i : keep_idx) keep_vars.push_back(old_ring->vars[i]);
  RingPtr out_ring = make_ring(keep_vars, Order::grevlex);

  std::vector<Poly<F>> out;
  const std::size_t ne = elim_idx.size();
  for (const auto& f : basis) {
    bool pure = true;
    for (const auto& [m, c] : f.terms())
      for (std::size_t k = 0; k < ne && pure; ++k)
        if (m[k]) pure = false;
    if (!pure) continue;
    Poly<F> of(out_ring);
    for (const auto& [m, c] : f.terms()) {
      Mono om(keep_idx.size());
      for (std::size_t k = 0; k < keep_idx.size(); ++k) om[k] = m[ne + k];
      of.push_term_unchecked(std::move(om), c);
    }
    of.resort();
    out.push_back(std::move(of));
  }
  return {out_ring, out};
}

// Ideal intersection via the s-trick: I cap J = (s*I + (1-s)*J) cap k[x].
template <class F>
std::vector<Poly<F>> intersect(const std::vector<Poly<F>>& gens_i,
                               const std::vector<Poly<F>>& gens_j) {
  if (gens_i.empty()) return gens_j;
  if (gens_j.empty()) return gens_i;
  const RingPtr& ring = gens_i.front().ring();
  std::string aux = "s@";
  std::vector<std::string> vars = {aux};
  vars.insert(vars.end(), ring->vars.begin(), ring->vars.end());
  RingPtr ext = make_ring(vars, Order::block, 1);

  auto lift = [&](const Poly<F>& f) {
    Poly<F> r(ext);
    for (const auto& [m, c] : f.terms()) {
      Mono em(m.size() + 1, 0);
      std::copy(m.begin(), m.end(), em.begin() + 1);
      r.push_term_unchecked(std::move(em), c);
    }
    r.resort();
    return r;
  };
  Poly<F> s = Poly<F>::variable(ext, 0);
  Poly<F> one_minus_s = Poly<F>::constant(ext, F(1)) - s;

  std::vector<Poly<F>> ext_gens;
  for (const auto& f : gens_i) ext_gens.push_back(s * lift(f));
  for (const auto& f : gens_j) ext_gens.push_back(one_minus_s * lift(f));

  auto basis = reduced_basis(ext_gens);
  std::vector<Poly<F>> out;
  for (const auto& f : basis) {
    bool pure = true;
    for (const auto& [m, c] : f.terms())
      if (m[0]) pure = false;
    if (!pure) continue;
    Poly<F> of(ring);
    for (const auto& [m, c] : f.terms()) {
      Mono om(m.begin() + 1, m.end());
      of.push_term_unchecked(std::move(om), c);
    }
    of.resort();
    out.push_back(std::move(of));
  }
  return out;
}

// Krull dimension of the affine vanishing set, via the standard
// combinatorial rule on the leading-term ideal: the dimension is the size of
// the largest variable subset S such that no leading monomial is supported
// inside S. Returns -1 for the unit ideal (empty set). The witness set
// reported is the lexicographically smallest (by variable index) among the
// largest independent sets.
struct DimResult {
  int dim;
  std::vector<std::string> independent_vars;
};

template <class F>
DimResult ideal_dim(const std::vector<Poly<F>>& gens) {
  std::vector<Poly<F>> nonzero;
  RingPtr ring;
  for (const auto& f : gens)
    if (!f.is_zero()) {
      nonzero.push_back(f);
      ring = f.ring();
    }
  if (nonzero.empty()) throw std::invalid_argument("ideal_dim: zero ideal (provide the ring via a generator)");
  const std::size_t n = ring->nvars();
  auto basis = reduced_basis(nonzero);
  for (const auto& f : basis)
    if (mono_deg(f.leading_mono()) == 0) return {-1, {}};

  std::vector<std::vector<std::size_t>> supports;
  for (const auto& f : basis) {
    std::vector<std::size_t> s;
    const Mono& m = f.leading_mono();
    for (std::size_t i = 0; i < n; ++i)
      if (m[i]) s.push_back(i);
    supports.push_back(std::move(s));
  }

  std::vector<std::size_t> best, cur;
  // DFS over variable indices ascending, preferring inclusion, so the first
  // maximum found is lexicographically smallest.
  auto independent = [&](const std::vector<std::size_t>& set) {
    for (const auto& s : supports) {
      bool inside = true;
      for (auto v : s)
        if (!std::binary_search(set.begin(), set.end(), v)) {
          inside = false;
          break;
        }
      if (inside) return false;
    }
    return true;
  };
  std::function<void(std::size_t)> dfs = [&](std::size_t next) {
    if (cur.size() + (n - next) <= best.size()) return;  // cannot beat best
    if (next == n) {
      if (cur.size() > best.size()) best = cur;
      return;
    }
    cur.push_back(next);
    if (independent(cur)) dfs(next + 1);
    cur.pop_back();
    dfs(next + 1);
  };
  dfs(0);

  std::vector<std::string> names;
  for (auto i : best) names.push_back(ring->vars[i]);
  return {static_cast<int>(best.size()), names};
}

}  // namespace gb
}  // namespace dp4
