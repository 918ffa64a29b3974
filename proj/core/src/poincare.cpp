#include "dp4/poincare.hpp"

#include <stdexcept>

namespace dp4 {

PoincarePoly::PoincarePoly(std::vector<long long> coeffs) : c_(std::move(coeffs)) { trim(); }

void PoincarePoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool PoincarePoly::palindromic() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != c_[c_.size() - 1 - i]) return false;
  return true;
}

long long PoincarePoly::at_q(long long q) const {
  long long acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q + c_[i];
  return acc;
}

std::string PoincarePoly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += c_[i] > 0 ? " + " : " - ";
    else if (c_[i] < 0) out += "-";
    long long a = c_[i] < 0 ? -c_[i] : c_[i];
    if (a != 1 || i == 0) out += std::to_string(a);
    if (i > 0) out += "t^" + std::to_string(2 * i);
  }
  return out;
}

PoincarePoly PoincarePoly::operator+(const PoincarePoly& o) const {
  std::vector<long long> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return PoincarePoly(std::move(r));
}

PoincarePoly PoincarePoly::operator-(const PoincarePoly& o) const {
  std::vector<long long> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return PoincarePoly(std::move(r));
}

PoincarePoly PoincarePoly::operator*(const PoincarePoly& o) const {
  if (c_.empty() || o.c_.empty()) return PoincarePoly();
  std::vector<long long> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return PoincarePoly(std::move(r));
}

PoincarePoly PoincarePoly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("PoincarePoly: negative shift");
  if (c_.empty()) return PoincarePoly();
  std::vector<long long> r(c_.size() + static_cast<std::size_t>(k), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
  return PoincarePoly(std::move(r));
}

PoincarePoly pp_projective(int n) {
  if (n < 0) throw std::invalid_argument("pp_projective: negative dimension");
  return PoincarePoly(std::vector<long long>(static_cast<std::size_t>(n) + 1, 1));
}

PoincarePoly pp_from_count(const std::vector<long long>& count_coeffs) {
  return PoincarePoly(count_coeffs);
}

PoincarePoly pp_blowup(const PoincarePoly& px, const PoincarePoly& pz, int codim) {
  if (codim < 2) throw std::invalid_argument("pp_blowup: codimension must be at least 2");
  return px + pz * (pp_projective(codim - 1) - PoincarePoly::one());
}

const std::vector<long long>& moduli_target_coeffs() {
  static const std::vector<long long> t = {1, 4, 10, 15, 15, 10, 4, 1};
  return t;
}

const std::vector<long long>& h1y_poincare_coeffs() {
  static const std::vector<long long> t = {1, 2, 3, 2, 1};
  return t;
}

StableMapsChain ip_stable_maps_chain(const std::vector<long long>& referee_counts,
                                     const std::vector<long long>& target_coeffs) {
  StableMapsChain out;
  auto record = [&out](const std::string& label, const PoincarePoly& p) {
    out.steps.push_back({label, p, p.palindromic()});
  };

  // pairs (conic plane, 4-space): a P^3-bundle over the P^4 of 4-spaces
  out.sy = pp_projective(4) * pp_projective(3);
  record("pairs-space", out.sy);

  // blow up the two disjoint rational curves; the pairs space is 7-dim
  PoincarePoly two_curves({2, 2});
  out.sy_tilde = pp_blowup(out.sy, two_curves, 6);
  record("pairs-blowup", out.sy_tilde);

  // the same resolution blows a P^5 (codim 2) down to the space of conics
  out.h2 = out.sy_tilde - pp_projective(5).shifted(1);
  record("conics", out.h2);

  // the rank <= 1 divisor is 4-dim; same centers, codimension 3
  PoincarePoly dbar({1, 2, 2, 2, 1});
  out.d_tilde = pp_blowup(dbar, two_curves, 3);
  record("double-line-resolution", out.d_tilde);

  // candidate accountings for the image of the resolved divisor
  out.d_candidate_a = out.d_tilde - pp_projective(2).shifted(1);
  out.d_candidate_b = out.d_tilde;
  record("double-line-image-a", out.d_candidate_a);
  record("double-line-image-b", out.d_candidate_b);

  PoincarePoly referee = pp_from_count(referee_counts);
  if (referee == out.d_candidate_a) {
    out.selected = 'a';
    out.referee_matched = true;
    out.d_selected = out.d_candidate_a;
  } else if (referee == out.d_candidate_b) {
    out.selected = 'b';
    out.referee_matched = true;
    out.d_selected = out.d_candidate_b;
  } else {
    out.selected = '?';
    out.referee_matched = false;
    out.d_selected = out.d_candidate_a;
  }

  out.moduli = out.h2 + (PoincarePoly({0, 1, 1})) * out.d_selected;
  record("moduli", out.moduli);

  out.target = PoincarePoly(target_coeffs);
  out.matches_target = out.moduli == out.target;
  out.all_palindromic = true;
  for (const PoincarePoly* p :
       {&out.sy, &out.sy_tilde, &out.h2, &out.d_tilde, &out.d_selected, &out.moduli})
    out.all_palindromic = out.all_palindromic && p->palindromic();
  return out;
}

}  // namespace dp4
