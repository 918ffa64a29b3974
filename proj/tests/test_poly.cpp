#include <doctest.h>

#include "dp4/poly.hpp"
#include "dp4/prime_field.hpp"
#include "dp4/quadratic.hpp"
#include "dp4/rational.hpp"

using dp4::make_ring;
using dp4::Mono;
using dp4::Order;
using dp4::parse_poly;
using dp4::Poly;
using dp4::Rat;

namespace {
auto xyz() { return make_ring({"x", "y", "z"}); }
}  // namespace

TEST_CASE("grevlex orders by degree then reverse-lex") {
  auto r = xyz();
  // x^2 > xy > y^2 > xz > yz > z^2 in grevlex
  Mono x2{2, 0, 0}, xy{1, 1, 0}, y2{0, 2, 0}, xz{1, 0, 1}, yz{0, 1, 1}, z2{0, 0, 2};
  CHECK(r->cmp(x2, xy) > 0);
  CHECK(r->cmp(xy, y2) > 0);
  CHECK(r->cmp(y2, xz) > 0);
  CHECK(r->cmp(xz, yz) > 0);
  CHECK(r->cmp(yz, z2) > 0);
  Mono x1{1, 0, 0};
  CHECK(r->cmp(x2, x1) > 0);  // degree dominates
}

TEST_CASE("lex order") {
  auto r = make_ring({"x", "y"}, Order::lex);
  Mono x{1, 0}, y3{0, 3};
  CHECK(r->cmp(x, y3) > 0);
}

TEST_CASE("arithmetic and parsing round trip") {
  auto r = xyz();
  auto p = parse_poly<Rat>(r, "(x + y) * (x - y)");
  CHECK(p == parse_poly<Rat>(r, "x^2 - y^2"));
  CHECK((parse_poly<Rat>(r, "x + y") + parse_poly<Rat>(r, "x - y")) == parse_poly<Rat>(r, "2*x"));
  auto q = parse_poly<Rat>(r, "1/2*x^2 - 3*x*y + 2");
  CHECK(parse_poly<Rat>(r, q.str()) == q);
  CHECK(parse_poly<Rat>(r, "0").is_zero());
  CHECK((p - p).is_zero());
}

TEST_CASE("substitute maps a variable to a polynomial") {
  auto r = xyz();
  auto p = parse_poly<Rat>(r, "1 - 2*x*y - x^2*z");
  auto at_zero = p.substitute(0, Poly<Rat>::zero(r));
  CHECK(at_zero == parse_poly<Rat>(r, "1"));
  auto sub = p.substitute(0, parse_poly<Rat>(r, "y"));
  CHECK(sub == parse_poly<Rat>(r, "1 - 2*y^2 - y^2*z"));
}

TEST_CASE("evaluation and derivative") {
  auto r = xyz();
  auto p = parse_poly<Rat>(r, "x^2*y + 3*z");
  CHECK(p.evaluate({Rat(2), Rat(3), Rat(1)}) == Rat(15));
  CHECK(p.derivative(0) == parse_poly<Rat>(r, "2*x*y"));
  CHECK(p.derivative(2) == parse_poly<Rat>(r, "3"));
}

TEST_CASE("homogeneity detection") {
  auto r = xyz();
  CHECK(parse_poly<Rat>(r, "x^2 + y*z").is_homogeneous());
  CHECK_FALSE(parse_poly<Rat>(r, "x^2 + y").is_homogeneous());
}

TEST_CASE("gram matrix and rank of quadratic forms") {
  auto r = make_ring({"x", "y", "z"});
  // q = 0 -> rank 0
  CHECK(dp4::gram_matrix(Poly<Rat>::zero(r), {0, 1, 2}).rank() == 0);
  // hyperbolic xy -> rank 2
  CHECK(dp4::quadratic_rank(parse_poly<Rat>(r, "x*y"), {0, 1, 2}) == 2);
  // x^2 + y^2 + z^2 -> rank 3
  CHECK(dp4::quadratic_rank(parse_poly<Rat>(r, "x^2 + y^2 + z^2"), {0, 1, 2}) == 3);
  // mixed coefficient halving: q = x^2 + 4xy
  auto g = dp4::gram_matrix(parse_poly<Rat>(r, "x^2 + 4*x*y"), {0, 1});
  CHECK(g(0, 1) == Rat(2));
  CHECK(g(1, 0) == Rat(2));
  CHECK(g(0, 0) == Rat(1));
  CHECK_THROWS(dp4::gram_matrix(parse_poly<Rat>(r, "x^3"), {0, 1, 2}));
  CHECK_THROWS(dp4::gram_matrix(parse_poly<Rat>(r, "x*y"), {0}));
}

TEST_CASE("coefficient reduction to a prime field") {
  auto r = xyz();
  auto p = parse_poly<Rat>(r, "3*x + 7*y + 1/2*z");
  using F7 = dp4::Fp<7>;
  auto q = p.map_coeffs<F7>(r, [](const Rat& c) {
    F7 num(c.num().get_si());
    F7 den(c.den().get_si());
    return num / den;
  });
  // 3x stays, 7y dies, (1/2)z = 4z mod 7
  CHECK(q == (Poly<F7>::variable(r, 0) * F7(3) + Poly<F7>::variable(r, 2) * F7(4)));
}
