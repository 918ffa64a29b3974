#include <doctest.h>

#include <stdexcept>

#include "dp4/ff_counter.hpp"

using namespace dp4;

TEST_CASE("gaussian binomials") {
  CHECK(gaussian_binomial(5, 2, 2) == 155);
  CHECK(gaussian_binomial(5, 2, 3) == 1210);
  CHECK(gaussian_binomial(4, 2, 3) == 130);
  CHECK(gaussian_binomial(3, 2, 7) == 57);
  CHECK(gaussian_binomial(3, 2, 7) == gaussian_binomial(3, 1, 7));
  CHECK(gaussian_binomial(4, 0, 5) == 1);
  CHECK(gaussian_binomial(4, 4, 5) == 1);
  CHECK(gaussian_binomial(2, 3, 5) == 0);
}

TEST_CASE("polynomial evaluation and interpolation") {
  std::vector<long long> p = {1, 1, 1};  // 1 + q + q^2
  CHECK(eval_poly(p, 5) == 31);
  CHECK(eval_poly({7}, 19) == 7);
  CHECK(eval_poly({}, 3) == 0);

  auto rec = interpolate_counts({{2, 7}, {3, 13}, {5, 31}}, 2);
  CHECK(rec == p);
  rec = interpolate_counts({{2, 35}, {3, 130}, {5, 806}, {7, 2850}, {11, 16226}}, 4);
  CHECK(rec == std::vector<long long>{1, 1, 2, 1, 1});

  CHECK_THROWS_AS(interpolate_counts({{2, 7}, {3, 13}, {5, 31}}, 1), std::domain_error);
  CHECK_THROWS_AS(interpolate_counts({{2, 1}, {4, 2}}, 3), std::domain_error);
}

TEST_CASE("variety names round trip") {
  for (auto id : {VarietyId::Y, VarietyId::H1Y, VarietyId::Cv, VarietyId::CvDual, VarietyId::Q3,
                  VarietyId::SingQ3, VarietyId::Dbar, VarietyId::SY, VarietyId::Rank0Locus,
                  VarietyId::DY}) {
    CHECK(variety_from_name(variety_name(id)) == id);
  }
  CHECK_THROWS_AS(variety_from_name("plane"), std::invalid_argument);
}

TEST_CASE("enumerated counts match the closed forms at q = 3") {
  for (auto id : {VarietyId::Y, VarietyId::H1Y, VarietyId::Cv, VarietyId::CvDual, VarietyId::Q3,
                  VarietyId::SingQ3, VarietyId::Dbar, VarietyId::SY, VarietyId::Rank0Locus,
                  VarietyId::DY}) {
    CAPTURE(variety_name(id));
    auto res = count_points(id, 3);
    CHECK(res.count == eval_poly(expected_count_poly(id), 3));
    CHECK(res.jump_pairs == 0);
  }
}

TEST_CASE("linear tags also count at q = 2, rank tags refuse") {
  CHECK(count_points(VarietyId::Y, 2).count == 35);
  CHECK(count_points(VarietyId::H1Y, 2).count == 49);
  CHECK(count_points(VarietyId::Cv, 2).count == 3);
  auto sy = count_points(VarietyId::SY, 2);
  CHECK(sy.count == 465);
  CHECK(sy.jump_pairs == 0);
  CHECK_THROWS_AS(count_points(VarietyId::Dbar, 2), std::domain_error);
  CHECK_THROWS_AS(count_points(VarietyId::DY, 2), std::domain_error);
  CHECK_THROWS_AS(count_points(VarietyId::Q3, 2), std::domain_error);
}

TEST_CASE("counting identities at q = 3") {
  const long long q = 3;
  long long p4 = eval_poly({1, 1, 1, 1, 1}, q);
  auto h1y = count_points(VarietyId::H1Y, 3).count;
  auto cv = count_points(VarietyId::Cv, 3).count;
  CHECK(h1y == p4 + cv * (q * q + q));  // blow-up of P^4 along the conic

  auto dbar = count_points(VarietyId::Dbar, 3).count;
  auto q3 = count_points(VarietyId::Q3, 3).count;
  CHECK(dbar == (q + 1) * q3);  // P^1-fibration over the quadric

  auto sy = count_points(VarietyId::SY, 3);
  CHECK(sy.count == gaussian_binomial(5, 4, q) * gaussian_binomial(4, 3, q));
  CHECK(sy.jump_pairs == 0);
}

TEST_CASE("striped enumeration is deterministic") {
  auto a = count_points(VarietyId::DY, 3, 1);
  auto b = count_points(VarietyId::DY, 3, 3);
  CHECK(a.count == b.count);
  auto c = count_points(VarietyId::Dbar, 3, 4);
  CHECK(c.count == count_points(VarietyId::Dbar, 3).count);
}
