#pragma once
// Relation suites over the operators of rmatrix/rep and the diagram layer.

#include "qbrauer/report.hpp"
#include "qbrauer/ring.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qbrauer {

enum class SuiteId {
    yang_baxter,
    rtt_vector,
    reflection_S,
    s_shape,
    def_2_3,
    derived_2_4,
    prop_4_1,
    thm_4_2_commute,
    proof_identities,
    brauer_presentation,
    q1_specialization,
    hecke_rank,
    centralizer_duality,
};

std::string_view suite_name(SuiteId id);
std::optional<SuiteId> parse_suite(std::string_view text);
std::vector<SuiteId> all_suites();

/// Whether the suite's result depends on n (resp. l). Suites that ignore a
/// parameter run once per distinct value of the other one.
bool suite_uses_n(SuiteId id);
bool suite_uses_l(SuiteId id);

/// The default specialisation points 5/3 and 7/2.
std::vector<Rational> default_q_points();

struct SuiteOptions {
    /// Test hook: z = q^{n + z_shift} in def_2_3 and derived_2_4.
    int z_shift = 0;
    /// Test hook: add 1 to the top-left entry of R in yang_baxter.
    bool perturb_r = false;
    std::vector<Rational> q_points = default_q_points();
};

/// One report per relation instance, in a fixed order. Throws
/// std::invalid_argument for n < 2, GuardError past the guards and
/// GenericityError when specialisation points disagree.
std::vector<RelationReport> verify_relation_suite(SuiteId suite, int n, int l, const SuiteOptions& options = {});

/// Both presentations of the Brauer algebra on diagram generators, 3 <= l <= 5.
/// The symbolic overload reads the Laurent variable as eta.
std::vector<RelationReport> check_brauer_presentation(int l, const LaurentPoly& eta);
std::vector<RelationReport> check_brauer_presentation(int l, const Rational& eta);

/// Images at q = 1 against permutations, Q-bar and diagram operators; l <= 3.
std::vector<RelationReport> check_q1_specialization(int l, int n);

/// Span of the Hecke images at each point must be l!. Needs l < n, at least
/// two points, none of them 0 or +-1.
RelationReport check_hecke_rank(int l, int n, const std::vector<Rational>& q_points);

struct DualityResult {
    int algebra_dimension = 0;
    int commutant_dimension = 0;
    bool equal() const { return algebra_dimension == commutant_dimension; }
    RelationReport report;
};

/// Algebra span of the generator images against the commutant of the s_ij
/// blocks. Requires n^l <= 100 and at least one point; dimensions must agree
/// across points.
DualityResult check_centralizer_duality(int l, int n, const std::vector<Rational>& q_points);

/// Throws GenericityError for 0 or +-1, std::invalid_argument if the list is
/// shorter than `minimum`.
void check_generic_points(const std::vector<Rational>& q_points, std::size_t minimum);

struct CatalogEntry {
    SuiteId suite;
    std::string relation_id;  // without the "[i=..]" instance suffix
    std::string statement;
};

/// Every relation id the engine can emit.
const std::vector<CatalogEntry>& relation_catalog();

/// "e_squared[i=2]" -> "e_squared".
std::string base_relation_id(std::string_view relation_id);

}  // namespace qbrauer
