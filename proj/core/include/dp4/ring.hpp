#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace dp4 {

// Exponent vector; length always equals the ring's variable count.
using Mono = std::vector<std::uint16_t>;

enum class Order {
  grevlex,  // graded reverse lexicographic
  lex,      // pure lexicographic
  block,    // eliminate vars [0, block_split) first; grevlex inside each block
};

struct Ring {
  std::vector<std::string> vars;
  Order order = Order::grevlex;
  std::size_t block_split = 0;

  std::size_t nvars() const { return vars.size(); }

  int var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return static_cast<int>(i);
    return -1;
  }

  static unsigned deg_range(const Mono& m, std::size_t lo, std::size_t hi) {
    unsigned d = 0;
    for (std::size_t i = lo; i < hi; ++i) d += m[i];
    return d;
  }

  // grevlex on [lo, hi): higher total degree wins; on ties the monomial with
  // the smaller exponent at the last differing position wins.
  static int cmp_grevlex(const Mono& a, const Mono& b, std::size_t lo, std::size_t hi) {
    unsigned da = deg_range(a, lo, hi), db = deg_range(b, lo, hi);
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }

  static int cmp_lex(const Mono& a, const Mono& b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }

  // Returns +1 if a > b in the ring order, 0 if equal, -1 if a < b.
  int cmp(const Mono& a, const Mono& b) const {
    switch (order) {
      case Order::grevlex:
        return cmp_grevlex(a, b, 0, nvars());
      case Order::lex:
        return cmp_lex(a, b, 0, nvars());
      case Order::block: {
        int c = cmp_grevlex(a, b, 0, block_split);
        if (c) return c;
        return cmp_grevlex(a, b, block_split, nvars());
      }
    }
    return 0;
  }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars, Order order = Order::grevlex,
                         std::size_t block_split = 0) {
  if (order == Order::block && (block_split == 0 || block_split >= vars.size()))
    throw std::invalid_argument("Ring: block order needs 0 < split < nvars");
  auto r = std::make_shared<Ring>();
  r->vars = std::move(vars);
  r->order = order;
  r->block_split = block_split;
  return r;
}

inline unsigned mono_deg(const Mono& m) {
  return std::accumulate(m.begin(), m.end(), 0u);
}

inline bool mono_divides(const Mono& a, const Mono& b) {  // a | b
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return r;
}

inline Mono mono_div(const Mono& a, const Mono& b) {  // a / b, requires b | a
  Mono r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] > a[i]) throw std::domain_error("mono_div: not divisible");
    r[i] = static_cast<std::uint16_t>(a[i] - b[i]);
  }
  return r;
}

inline Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline bool mono_coprime(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

}  // namespace dp4
