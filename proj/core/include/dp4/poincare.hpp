#pragma once

#include <string>
#include <vector>

namespace dp4 {

// Virtual Poincare polynomial with even-degree support: coeffs[i] is the
// coefficient of t^(2i). For a smooth projective variety with polynomial
// point count N(q), this is N evaluated at q = t^2.
class PoincarePoly {
 public:
  PoincarePoly() = default;
  explicit PoincarePoly(std::vector<long long> coeffs);

  static PoincarePoly zero() { return PoincarePoly(); }
  static PoincarePoly one() { return PoincarePoly({1}); }

  const std::vector<long long>& coeffs() const { return c_; }
  int degree() const { return c_.empty() ? -1 : static_cast<int>(c_.size()) - 1; }  // in t^2
  bool is_zero() const { return c_.empty(); }
  bool palindromic() const;

  long long at_q(long long q) const;  // value with t^2 = q
  std::string str() const;            // human-readable, in t

  PoincarePoly operator+(const PoincarePoly& o) const;
  PoincarePoly operator-(const PoincarePoly& o) const;
  PoincarePoly operator*(const PoincarePoly& o) const;
  friend bool operator==(const PoincarePoly& a, const PoincarePoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const PoincarePoly& a, const PoincarePoly& b) { return !(a == b); }

  // shift by t^(2k)
  PoincarePoly shifted(int k) const;

 private:
  void trim();
  std::vector<long long> c_;
};

// 1 + t^2 + ... + t^(2n): projective n-space.
PoincarePoly pp_projective(int n);

// Reinterpret a point-count polynomial N(q) as a Poincare polynomial.
PoincarePoly pp_from_count(const std::vector<long long>& count_coeffs);

// Blow-up of X along a center Z of codimension c:
// P(Bl) = P(X) + P(Z) * (P(P^(c-1)) - 1). Requires c >= 2.
PoincarePoly pp_blowup(const PoincarePoly& px, const PoincarePoly& pz, int codim);

// One accounting step of the surgery chain, reported rather than assumed.
struct ChainStep {
  std::string label;
  PoincarePoly value;
  bool palindromic = false;
};

// The full chain from the two resolved parameter spaces down to the moduli
// polynomial: both candidate accountings for the double-line image are
// computed; an external referee value (the enumerated double-line count
// polynomial) selects between them, and every comparison is recorded.
struct StableMapsChain {
  std::vector<ChainStep> steps;

  PoincarePoly sy;          // pairs space, a projective bundle
  PoincarePoly sy_tilde;    // after blowing up the two rational curves
  PoincarePoly h2;          // conics in Y: blow the P^5 back down
  PoincarePoly d_tilde;     // resolved double-line divisor
  PoincarePoly d_candidate_a;  // image accounting: subtract a fiber defect
  PoincarePoly d_candidate_b;  // image accounting: no defect
  PoincarePoly d_selected;
  char selected = '?';      // 'a' or 'b', chosen by the referee
  bool referee_matched = false;

  PoincarePoly moduli;      // h2 + (t^2 + t^4) * d_selected
  PoincarePoly target;      // the published moduli polynomial
  bool matches_target = false;
  bool all_palindromic = false;
};

// referee: enumerated double-line count polynomial (ascending in q);
// target: the published moduli polynomial in t^2.
StableMapsChain ip_stable_maps_chain(const std::vector<long long>& referee_counts,
                                     const std::vector<long long>& target_coeffs);

// The published inputs of the chain.
const std::vector<long long>& moduli_target_coeffs();   // [1,4,10,15,15,10,4,1]
const std::vector<long long>& h1y_poincare_coeffs();    // [1,2,3,2,1]

}  // namespace dp4
