#include "dp4/grassmann.hpp"

#include <mutex>

#include "dp4/groebner.hpp"
#include "dp4/rational.hpp"

namespace dp4 {

namespace {

int inversion_sign(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

}  // namespace

const std::array<std::vector<PluckerTerm>, 5>& plucker_terms() {
  static const auto table = [] {
    std::array<std::vector<PluckerTerm>, 5> t;
    for (int m = 0; m < 5; ++m) {
      std::vector<int> c;
      for (int i = 0; i < 5; ++i)
        if (i != m) c.push_back(i);
      // the three pairings of the 4-element complement
      const int splits[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
      for (const auto& s : splits) {
        std::vector<int> perm = {c[s[0]], c[s[1]], c[s[2]], c[s[3]]};
        t[m].push_back({pair_index(perm[0], perm[1]), pair_index(perm[2], perm[3]),
                        inversion_sign(perm)});
      }
    }
    return t;
  }();
  return table;
}

const std::array<std::array<std::array<int, 2>, 5>, 10>& wedge21_table() {
  static const auto table = [] {
    // 3-subsets of {0..4} in lex order
    std::vector<std::array<int, 3>> triples;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        for (int k = j + 1; k < 5; ++k) triples.push_back({i, j, k});
    auto triple_index = [&](int a, int b, int c) {
      std::array<int, 3> key = {a, b, c};
      std::sort(key.begin(), key.end());
      for (std::size_t idx = 0; idx < triples.size(); ++idx)
        if (triples[idx] == key) return static_cast<int>(idx);
      return -1;
    };
    std::array<std::array<std::array<int, 2>, 5>, 10> t{};
    for (int k = 0; k < kWedgeDim; ++k) {
      int i = kPairs[k][0], j = kPairs[k][1];
      for (int c = 0; c < 5; ++c) {
        if (c == i || c == j) {
          t[k][c] = {0, 0};
          continue;
        }
        t[k][c] = {triple_index(i, j, c), inversion_sign({i, j, c})};
      }
    }
    return t;
  }();
  return table;
}

RingPtr p_ring() {
  static const RingPtr ring = make_ring(plucker_var_names());
  return ring;
}

std::vector<std::string> x_var_names() {
  return {"x0", "x1", "x2", "x3", "x4"};
}

const std::vector<Poly<Rat>>& r_ideal_rat() {
  static const std::vector<Poly<Rat>> cached = [] {
    std::vector<std::string> vars = {"l2", "l3", "l4", "t"};
    for (const auto& n : plucker_var_names()) vars.push_back(n);
    RingPtr ring = make_ring(vars);
    // generic point of the swept family: l2 u2(t) + l3 u3(t) + l4 u4(t)
    const char* rels[] = {
        "p01 - l2",
        "p02 - l3",
        "p03 - l3*t",
        "p04 - l4",
        "p12 - l3*t",
        "p13 - l3*t^2",
        "p14 - l2*t^2 - l4*t",
        "p23",
        "p24 - l3*t^2",
        "p34 - l3*t^3",
    };
    std::vector<Poly<Rat>> gens;
    for (const char* s : rels) gens.push_back(parse_poly<Rat>(ring, s));
    auto [out_ring, out] = gb::eliminate(gens, {"l2", "l3", "l4", "t"});
    std::vector<Poly<Rat>> in_p_ring;
    for (auto& f : out) {
      auto g = remap(f, p_ring());
      gb::normalize_gen(g);
      in_p_ring.push_back(std::move(g));
    }
    return in_p_ring;
  }();
  return cached;
}

}  // namespace dp4
