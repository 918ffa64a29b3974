#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dp4 {

// Residue field F_P with compile-time modulus. The enumeration kernels are
// monomorphized per prime; runtime q is dispatched via with_prime().
template <std::uint32_t P>
class Fp {
  static_assert(P >= 2 && P < (1u << 15), "modulus out of range");

 public:
  constexpr Fp() : v_(0) {}
  constexpr Fp(long long n) : v_(reduce(n)) {}  // NOLINT: implicit by design

  static constexpr std::uint32_t modulus() { return P; }

  constexpr bool is_zero() const { return v_ == 0; }
  constexpr bool is_one() const { return v_ == 1; }
  constexpr std::uint32_t val() const { return v_; }

  constexpr Fp operator-() const { return from_raw(v_ == 0 ? 0 : P - v_); }
  constexpr Fp& operator+=(Fp o) {
    v_ += o.v_;
    if (v_ >= P) v_ -= P;
    return *this;
  }
  constexpr Fp& operator-=(Fp o) {
    v_ += P - o.v_;
    if (v_ >= P) v_ -= P;
    return *this;
  }
  constexpr Fp& operator*=(Fp o) {
    v_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(v_) * o.v_) % P);
    return *this;
  }
  constexpr Fp& operator/=(Fp o) { return *this *= o.inv(); }

  friend constexpr Fp operator+(Fp a, Fp b) { return a += b; }
  friend constexpr Fp operator-(Fp a, Fp b) { return a -= b; }
  friend constexpr Fp operator*(Fp a, Fp b) { return a *= b; }
  friend constexpr Fp operator/(Fp a, Fp b) { return a /= b; }
  friend constexpr bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

  constexpr Fp inv() const {
    if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
    // Fermat: P is prime.
    std::uint64_t base = v_, acc = 1;
    std::uint32_t e = P - 2;
    while (e) {
      if (e & 1) acc = acc * base % P;
      base = base * base % P;
      e >>= 1;
    }
    return from_raw(static_cast<std::uint32_t>(acc));
  }

  std::string str() const { return std::to_string(v_); }

 private:
  static constexpr std::uint32_t reduce(long long n) {
    long long r = n % static_cast<long long>(P);
    if (r < 0) r += P;
    return static_cast<std::uint32_t>(r);
  }
  static constexpr Fp from_raw(std::uint32_t v) {
    Fp r;
    r.v_ = v;
    return r;
  }

  std::uint32_t v_;
};

constexpr std::uint32_t kSupportedPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19};

constexpr bool is_supported_prime(std::uint32_t q) {
  for (auto p : kSupportedPrimes)
    if (p == q) return true;
  return false;
}

// Monomorphizing dispatch: fn receives the field type as a template argument.
template <class Fn>
decltype(auto) with_prime(std::uint32_t q, Fn&& fn) {
  switch (q) {
    case 2: return fn.template operator()<Fp<2>>();
    case 3: return fn.template operator()<Fp<3>>();
    case 5: return fn.template operator()<Fp<5>>();
    case 7: return fn.template operator()<Fp<7>>();
    case 11: return fn.template operator()<Fp<11>>();
    case 13: return fn.template operator()<Fp<13>>();
    case 17: return fn.template operator()<Fp<17>>();
    case 19: return fn.template operator()<Fp<19>>();
    default: throw std::domain_error("unsupported prime " + std::to_string(q));
  }
}

}  // namespace dp4
