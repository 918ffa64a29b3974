#include <doctest.h>

#include "dp4/matrix.hpp"
#include "dp4/prime_field.hpp"
#include "dp4/rational.hpp"

using dp4::Fp;
using dp4::Matrix;
using dp4::Rat;
using dp4::Subspace;

TEST_CASE("rref, rank, kernel over QQ") {
  Matrix<Rat> m{{Rat(1), Rat(2), Rat(3)}, {Rat(2), Rat(4), Rat(6)}, {Rat(1), Rat(0), Rat(1)}};
  CHECK(m.rank() == 2);
  auto k = m.kernel();
  CHECK(k.rows() == 1);
  // every kernel row annihilated
  for (std::size_t i = 0; i < k.rows(); ++i) {
    auto y = m.apply(k.row(i));
    for (const auto& v : y) CHECK(v.is_zero());
  }
}

TEST_CASE("identity and determinant") {
  auto id = Matrix<Rat>::identity(4);
  CHECK(id.det() == Rat(1));
  Matrix<Rat> m{{Rat(2), Rat(1)}, {Rat(1), Rat(1)}};
  CHECK(m.det() == Rat(1));
  Matrix<Rat> sing{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
  CHECK(sing.det().is_zero());
  Matrix<Rat> anti{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
  CHECK(anti.det() == Rat(-1));
}

TEST_CASE("kernel dimension satisfies rank-nullity over F5") {
  using F = Fp<5>;
  Matrix<F> m(3, 6);
  // pseudo-arbitrary fill
  long v = 1;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 6; ++j) m(i, j) = F(v = (v * 3 + 1) % 11);
  CHECK(m.rank() + m.kernel().rows() == 6);
  auto k = m.kernel();
  for (std::size_t i = 0; i < k.rows(); ++i) {
    auto y = m.apply(k.row(i));
    for (auto x : y) CHECK(x.is_zero());
  }
}

TEST_CASE("subspace canonical form, membership, meet and join") {
  auto a = Subspace<Rat>::span_of({{Rat(1), Rat(0), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0), Rat(0)}}, 4);
  auto b = Subspace<Rat>::span_of({{Rat(0), Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(1), Rat(0)}}, 4);
  CHECK(a.dim() == 2);
  CHECK(a.intersect(b).dim() == 1);
  CHECK(a.sum(b).dim() == 3);
  CHECK(a.intersect(b).contains({Rat(0), Rat(7), Rat(0), Rat(0)}));
  CHECK(a.contains({Rat(3), Rat(-2), Rat(0), Rat(0)}));
  CHECK_FALSE(a.contains({Rat(0), Rat(0), Rat(1), Rat(0)}));

  // same span, different spanning sets -> equal canonical form
  auto a2 = Subspace<Rat>::span_of({{Rat(2), Rat(2), Rat(0), Rat(0)}, {Rat(1), Rat(-1), Rat(0), Rat(0)}}, 4);
  CHECK(a == a2);
}

TEST_CASE("generic meet of complementary planes is trivial") {
  auto a = Subspace<Rat>::span_of({{Rat(1), Rat(0), Rat(1), Rat(2)}, {Rat(0), Rat(1), Rat(3), Rat(1)}}, 4);
  auto b = Subspace<Rat>::span_of({{Rat(1), Rat(1), Rat(0), Rat(5)}, {Rat(2), Rat(1), Rat(1), Rat(0)}}, 4);
  auto m = a.intersect(b);
  CHECK(a.sum(b).dim() == 4);
  CHECK(m.dim() == 0);
}
