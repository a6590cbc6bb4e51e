#pragma once
// Internal entry points of the individual suites.

#include "qbrauer/report.hpp"
#include "qbrauer/verify.hpp"

#include <vector>

namespace qbrauer::detail {

/// GuardError unless n^legs <= kMaxRepDimension; invalid_argument for n < 2.
void require_space(int n, int legs);

std::vector<RelationReport> suite_yang_baxter(int n, const SuiteOptions& options);
std::vector<RelationReport> suite_rtt_vector(int n, int l);
std::vector<RelationReport> suite_reflection_s(int n, int l);
std::vector<RelationReport> suite_s_shape(int n, int l);
std::vector<RelationReport> suite_prop_q(int n);
std::vector<RelationReport> suite_commute(int n, int l);
std::vector<RelationReport> suite_proof_identities(int n);
std::vector<RelationReport> suite_definition(int n, int l, const SuiteOptions& options);
std::vector<RelationReport> suite_derived(int n, int l, const SuiteOptions& options);

}  // namespace qbrauer::detail
