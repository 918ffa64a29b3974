#include <doctest.h>

#include "dp4/prime_field.hpp"
#include "dp4/rational.hpp"

using dp4::Fp;
using dp4::Rat;

TEST_CASE("rationals reduce and stay exact") {
  Rat a(2, 4);
  CHECK(a == Rat(1, 2));
  CHECK(a.str() == "1/2");
  CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
  CHECK((Rat(-3, 9)).str() == "-1/3");
  CHECK((Rat(7) / Rat(7)).is_one());
  CHECK((Rat(1, 7) * Rat(7)).is_one());
  CHECK(Rat(0).is_zero());
  CHECK_THROWS(Rat(1) / Rat(0));
  CHECK_THROWS(Rat(1, 0));
  CHECK(Rat(5, -10) == Rat(-1, 2));
  CHECK(Rat(5, -10).den() == 2);  // positive denominator
  CHECK(Rat("22/7") == Rat(22, 7));
}

TEST_CASE("rational inverse and ordering") {
  CHECK(Rat(3, 4).inv() == Rat(4, 3));
  CHECK(Rat(-2).inv() == Rat(-1, 2));
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-5) < Rat(0));
}

TEST_CASE("prime field arithmetic") {
  using F7 = Fp<7>;
  CHECK(F7(10) == F7(3));
  CHECK(F7(-1) == F7(6));
  CHECK((F7(3) + F7(5)) == F7(1));
  CHECK((F7(3) * F7(5)) == F7(1));
  CHECK(F7(3).inv() == F7(5));
  CHECK((F7(4) / F7(2)) == F7(2));
  CHECK_THROWS(F7(0).inv());
  for (long x = 1; x < 7; ++x) CHECK((F7(x) * F7(x).inv()).is_one());
}

TEST_CASE("prime dispatch covers the supported set") {
  for (auto q : dp4::kSupportedPrimes) {
    auto back = dp4::with_prime(q, [&]<class F>() { return F::modulus(); });
    CHECK(back == q);
  }
  CHECK_THROWS(dp4::with_prime(4, []<class F>() { return F::modulus(); }));
  CHECK(dp4::is_supported_prime(11));
  CHECK_FALSE(dp4::is_supported_prime(23));
}
