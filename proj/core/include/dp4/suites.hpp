#pragma once

#include "dp4/report.hpp"

namespace dp4 {

// Canonical suite order; "all" (or an empty selection) expands to this list.
const std::vector<std::string>& all_suite_ids();

// Suites that evaluate Gram ranks or tangency multiplicities over the
// configured primes; these reject q = 2.
bool rank_dependent_suite(const std::string& id);

// Throws std::invalid_argument on unknown suite ids, unsupported primes, or
// even primes combined with a rank-dependent suite.
void validate_config(const RunConfig& cfg);

std::vector<ReportItem> run_suite(const std::string& id, const RunConfig& cfg);

// Validates, expands the selection, runs every suite in canonical order.
Report run_verification(RunConfig cfg);

// The moduli-polynomial comparison with injectable inputs: agreement passes,
// any mismatch is reported as flagged with the full chain attached.
ReportItem poincare_chain_item(const std::vector<long long>& referee_counts,
                               const std::vector<long long>& target_coeffs);

// Enumerates the double-line count at several primes and interpolates the
// count polynomial (the referee input of the chain).
std::vector<long long> interpolated_double_line_poly(int jobs);

}  // namespace dp4
