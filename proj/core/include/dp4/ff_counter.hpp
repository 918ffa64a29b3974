#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dp4 {

// Subvarieties (and incidence sets) whose F_q points are enumerated.
enum class VarietyId {
  Y,           // the fourfold itself, as 2-planes in F^5
  H1Y,         // lines of Y, as flags (V1, V3)
  Cv,          // the vertex conic in P^4
  CvDual,      // the dual conic inside the plane S
  Q3,          // the quadric hypersurface in the 4-space parameter P^4
  SingQ3,      // its singular locus (vanishing gradient)
  Dbar,        // pairs (U3, V4) whose conic has rank <= 1
  SY,          // all pairs (U3, V4) with U3 inside K_{V4}
  Rank0Locus,  // pairs whose conic form vanishes identically
  DY,          // double lines: (line, incidence direction class) pairs
};

VarietyId variety_from_name(const std::string& name);
const char* variety_name(VarietyId id);

// Rank-based tags need an odd field; purely linear ones work at q = 2 too.
bool variety_needs_odd_q(VarietyId id);

// Closed form (ascending coefficients in q) each enumeration is compared to.
const std::vector<long long>& expected_count_poly(VarietyId id);

struct CountResult {
  VarietyId id{};
  std::uint32_t q = 0;
  long long count = 0;
  long long jump_pairs = 0;  // SY only: 4-spaces where dim K != 4
};

// Exact count by exhaustive enumeration over F_q. jobs > 1 stripes the outer
// loop across threads; the result does not depend on jobs.
CountResult count_points(VarietyId id, std::uint32_t q, int jobs = 1);

long long gaussian_binomial(int n, int k, long long q);

long long eval_poly(const std::vector<long long>& coeffs, long long q);

// Lagrange interpolation of count samples (q, N(q)); throws unless the
// result is integral and within the degree bound. Ascending coefficients.
std::vector<long long> interpolate_counts(
    const std::vector<std::pair<long long, long long>>& samples, int degree_bound);

}  // namespace dp4
