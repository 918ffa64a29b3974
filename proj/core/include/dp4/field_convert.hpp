#pragma once

#include <stdexcept>
#include <type_traits>

#include "dp4/poly.hpp"
#include "dp4/rational.hpp"

namespace dp4 {

// Reduce a rational constant into F (identity for F = Rat; mod-p with
// denominator inversion for prime fields). Correct for arbitrary magnitude.
template <class F>
F rat_to(const Rat& c) {
  if constexpr (std::is_same_v<F, Rat>) {
    return c;
  } else {
    const unsigned long p = F::modulus();
    unsigned long n = mpz_fdiv_ui(c.num().get_mpz_t(), p);
    unsigned long d = mpz_fdiv_ui(c.den().get_mpz_t(), p);
    F den(static_cast<long long>(d));
    if (den.is_zero()) throw std::domain_error("rat_to: denominator divisible by modulus");
    F num(static_cast<long long>(n));
    return num / den;
  }
}

// 0 for the rationals, p for a prime field.
template <class F>
int field_characteristic() {
  if constexpr (std::is_same_v<F, Rat>) {
    return 0;
  } else {
    return static_cast<int>(F::modulus());
  }
}

template <class F>
Poly<F> poly_to(const Poly<Rat>& f, const RingPtr& ring) {
  if constexpr (std::is_same_v<F, Rat>) {
    return remap(f, ring);
  } else {
    auto reduced = f.map_coeffs<F>(f.ring(), [](const Rat& c) { return rat_to<F>(c); });
    return remap(reduced, ring);
  }
}

}  // namespace dp4
