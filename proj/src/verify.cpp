#include "qbrauer/verify.hpp"

#include "checker.hpp"
#include "suites.hpp"

#include "qbrauer/elimination.hpp"
#include "qbrauer/errors.hpp"
#include "qbrauer/rep.hpp"
#include "qbrauer/rmatrix.hpp"

#include <stdexcept>

namespace qbrauer {

namespace {

constexpr std::pair<SuiteId, std::string_view> kSuites[] = {
    {SuiteId::yang_baxter, "yang_baxter"},
    {SuiteId::rtt_vector, "rtt_vector"},
    {SuiteId::reflection_S, "reflection_S"},
    {SuiteId::s_shape, "s_shape"},
    {SuiteId::def_2_3, "def_2_3"},
    {SuiteId::derived_2_4, "derived_2_4"},
    {SuiteId::prop_4_1, "prop_4_1"},
    {SuiteId::thm_4_2_commute, "thm_4_2_commute"},
    {SuiteId::proof_identities, "proof_identities"},
    {SuiteId::brauer_presentation, "brauer_presentation"},
    {SuiteId::q1_specialization, "q1_specialization"},
    {SuiteId::hecke_rank, "hecke_rank"},
    {SuiteId::centralizer_duality, "centralizer_duality"},
};

long long double_factorial_odd(int l) {
    long long out = 1;
    for (int k = 1; k <= 2 * l - 1; k += 2) out *= k;
    return out;
}

long long factorial(int l) {
    long long out = 1;
    for (int k = 2; k <= l; ++k) out *= k;
    return out;
}

std::string points_text(const std::vector<Rational>& points) {
    std::string out = "q=";
    for (size_t k = 0; k < points.size(); ++k) {
        if (k) out += ',';
        out += to_string(points[k]);
    }
    return out;
}

template <class T>
struct DiagramOps {
    int l;
    T eta;
    DiagramElement<T> sigma(int i) const { return DiagramElement<T>(brauer_generator(GeneratorKind::sigma, i, l)); }
    DiagramElement<T> e(int i) const { return DiagramElement<T>(brauer_generator(GeneratorKind::e, i, l)); }
    DiagramElement<T> one() const { return DiagramElement<T>(BrauerDiagram::identity(l)); }
    DiagramElement<T> mul(const DiagramElement<T>& a, const DiagramElement<T>& b) const { return multiply(a, b, eta); }
    DiagramElement<T> eta_times(const DiagramElement<T>& a) const { return eta * a; }
};

struct MatrixOps {
    std::vector<RationalMatrix> sigmas, es;
    RationalMatrix id;
    Rational eta;
    RationalMatrix sigma(int i) const { return sigmas[static_cast<size_t>(i - 1)]; }
    RationalMatrix e(int i) const { return es[static_cast<size_t>(i - 1)]; }
    RationalMatrix one() const { return id; }
    RationalMatrix mul(const RationalMatrix& a, const RationalMatrix& b) const { return a * b; }
    RationalMatrix eta_times(const RationalMatrix& a) const { return eta * a; }
};

template <class T>
std::vector<RelationReport> brauer_impl(int l, const T& eta, std::string point) {
    if (l < 3 || l > 5) throw std::out_of_range("Brauer presentations are checked for 3 <= l <= 5");
    detail::Checker c(SuiteId::brauer_presentation, 0, l, std::move(point));
    c.scalar("diagram_count", static_cast<long long>(enumerate_diagrams(l).size()), double_factorial_odd(l));
    const DiagramOps<T> ops{l, eta};
    detail::full_presentation(c, l, ops, "full.");
    detail::reduced_presentation(c, l, ops, "reduced.");
    if (l < 4) {
        c.skip("tau_is_permutation", "needs l >= 4");
    } else {
        const int k = l - 1;
        auto tau = ops.mul(ops.mul(ops.mul(ops.sigma(k - 1), ops.sigma(k - 2)), ops.sigma(k)), ops.sigma(k - 1));
        std::vector<int> perm(static_cast<size_t>(l));
        for (int i = 1; i <= l; ++i) perm[static_cast<size_t>(i - 1)] = i;
        std::swap(perm[static_cast<size_t>(k - 3)], perm[static_cast<size_t>(k - 1)]);
        std::swap(perm[static_cast<size_t>(k - 2)], perm[static_cast<size_t>(k)]);
        c.equal("tau_is_permutation", tau, DiagramElement<T>(BrauerDiagram::from_permutation(perm)));
    }
    return c.take();
}

}  // namespace

std::string_view suite_name(SuiteId id) {
    for (const auto& [s, name] : kSuites)
        if (s == id) return name;
    return "?";
}

std::optional<SuiteId> parse_suite(std::string_view text) {
    for (const auto& [s, name] : kSuites)
        if (name == text) return s;
    return std::nullopt;
}

std::vector<SuiteId> all_suites() {
    std::vector<SuiteId> out;
    for (const auto& entry : kSuites) out.push_back(entry.first);
    return out;
}

bool suite_uses_n(SuiteId id) { return id != SuiteId::brauer_presentation; }

bool suite_uses_l(SuiteId id) {
    return id != SuiteId::yang_baxter && id != SuiteId::prop_4_1 && id != SuiteId::proof_identities;
}

std::vector<Rational> default_q_points() { return {Rational(5, 3), Rational(7, 2)}; }

void check_generic_points(const std::vector<Rational>& q_points, std::size_t minimum) {
    if (q_points.size() < minimum)
        throw std::invalid_argument("need at least " + std::to_string(minimum) + " specialisation points");
    for (const auto& x : q_points)
        if (x == 0 || x == 1 || x == -1) throw GenericityError("q = " + to_string(x) + " is not a generic point");
}

std::vector<RelationReport> check_brauer_presentation(int l, const LaurentPoly& eta) {
    return brauer_impl(l, eta, eta == LaurentPoly::q(1) ? "eta=symbolic" : "eta=" + eta.to_string());
}

std::vector<RelationReport> check_brauer_presentation(int l, const Rational& eta) {
    return brauer_impl(l, eta, "eta=" + to_string(eta));
}

std::vector<RelationReport> check_q1_specialization(int l, int n) {
    if (l < 2) throw std::invalid_argument("q = 1 specialisation needs l >= 2");
    detail::require_space(n, l);
    detail::Checker c(SuiteId::q1_specialization, n, l, "q=1");
    const RepContext ctx(n, l);
    const LegSpace& space = ctx.space();
    MatrixOps ops;
    ops.id = RationalMatrix::identity(space.dimension());
    ops.eta = n;
    for (int i = 1; i <= l - 1; ++i) {
        ops.sigmas.push_back(specialize(ctx.sigma(i), 1));
        ops.es.push_back(specialize(ctx.e(i), 1));
    }
    for (int i = 1; i <= l - 1; ++i) {
        c.equal(detail::indexed("sigma_is_permutation", {{"i", i}}), ops.sigma(i),
                specialize(leg_embed(permutation(n), i, i + 1, space), 1));
        c.equal(detail::indexed("e_is_qbar", {{"i", i}}), ops.e(i),
                specialize(leg_embed(q_bar(n), i, i + 1, space), 1));
    }
    for (int i = 1; i <= l - 1; ++i) {
        c.equal(detail::indexed("sigma_matches_diagram", {{"i", i}}),
                specialize(diagram_to_operator(brauer_generator(GeneratorKind::sigma, i, l), n), 1), ops.sigma(i));
        c.equal(detail::indexed("e_matches_diagram", {{"i", i}}),
                specialize(diagram_to_operator(brauer_generator(GeneratorKind::e, i, l), n), 1), ops.e(i));
    }
    if (l > 3) {
        c.skip("diagram_homomorphism", "pairwise check needs l <= 3");
    } else {
        const auto diagrams = enumerate_diagrams(l);
        std::vector<RationalMatrix> phi;
        for (const auto& d : diagrams) phi.push_back(specialize(diagram_to_operator(d, n), 1));
        long long failing = 0;
        for (size_t a = 0; a < diagrams.size(); ++a)
            for (size_t b = 0; b < diagrams.size(); ++b) {
                const Composite comp = compose(diagrams[a], diagrams[b]);
                const auto it = std::lower_bound(diagrams.begin(), diagrams.end(), comp.diagram);
                const RationalMatrix& target = phi[static_cast<size_t>(it - diagrams.begin())];
                if (!(phi[a] * phi[b] == power(Rational(n), comp.loops) * target)) ++failing;
            }
        c.scalar("diagram_homomorphism", failing, 0,
                 std::to_string(diagrams.size() * diagrams.size()) + " pairs; residual counts failing pairs");
    }
    detail::full_presentation(c, l, ops, "full.");
    return c.take();
}

RelationReport check_hecke_rank(int l, int n, const std::vector<Rational>& q_points) {
    if (l < 2 || l >= n) throw std::invalid_argument("Hecke rank check needs 2 <= l < n");
    check_generic_points(q_points, 2);
    detail::require_space(n, l);
    const RepContext ctx(n, l);
    std::optional<int> dim;
    for (const auto& x : q_points) {
        std::vector<RationalMatrix> gens;
        for (int i = 1; i <= l - 1; ++i) gens.push_back(specialize(ctx.sigma(i), x));
        const int d = span_dimension(gens);
        if (dim && *dim != d)
            throw GenericityError("Hecke span dimension differs between points: " + std::to_string(*dim) + " vs " +
                                  std::to_string(d));
        dim = d;
    }
    detail::Checker c(SuiteId::hecke_rank, n, l, points_text(q_points));
    c.scalar("hecke_rank", *dim, factorial(l), "span dimension " + std::to_string(*dim));
    return c.take().front();
}

DualityResult check_centralizer_duality(int l, int n, const std::vector<Rational>& q_points) {
    if (l < 2) throw std::invalid_argument("duality check needs l >= 2");
    detail::require_space(n, l + 1);
    long long dim = 1;
    for (int k = 0; k < l; ++k) dim *= n;
    if (dim > kCommutantMaxDimension)
        throw GuardError("n^l = " + std::to_string(dim) + " exceeds commutant guard " + std::to_string(kCommutantMaxDimension));
    check_generic_points(q_points, 1);
    const RepContext ctx(n, l);
    const auto blocks = rep_s_blocks(n, l);
    DualityResult out;
    bool first = true;
    for (const auto& x : q_points) {
        std::vector<RationalMatrix> gens;
        for (int i = 1; i <= l - 1; ++i) gens.push_back(specialize(ctx.sigma(i), x));
        gens.push_back(specialize(ctx.e(l - 1), x));
        std::vector<RationalMatrix> s;
        for (const auto& row : blocks)
            for (const auto& b : row) s.push_back(specialize(b, x));
        const int a = span_dimension(gens);
        const int cdim = commutant_dimension(s, gens);
        if (!first && (a != out.algebra_dimension || cdim != out.commutant_dimension))
            throw GenericityError("duality dimensions differ between specialisation points");
        out.algebra_dimension = a;
        out.commutant_dimension = cdim;
        first = false;
    }
    RelationReport& r = out.report;
    r.suite = std::string(suite_name(SuiteId::centralizer_duality));
    r.relation_id = "duality";
    r.n = n;
    r.l = l;
    r.specialization = points_text(q_points);
    const bool contained = out.algebra_dimension <= out.commutant_dimension;
    r.verdict = contained ? Verdict::pass : Verdict::fail;
    r.residual_nonzeros = contained ? 0 : 1;
    r.note = "algebra=" + std::to_string(out.algebra_dimension) + " commutant=" + std::to_string(out.commutant_dimension) +
             (out.equal() ? " duality observed" : " proper containment");
    return out;
}

std::vector<RelationReport> verify_relation_suite(SuiteId suite, int n, int l, const SuiteOptions& options) {
    if (n < 2) throw std::invalid_argument("local dimension n must be at least 2");
    auto skipped = [&](std::string id, std::string reason) {
        detail::Checker c(suite, suite_uses_n(suite) ? n : 0, l);
        c.skip(std::move(id), std::move(reason));
        return c.take();
    };
    switch (suite) {
        case SuiteId::yang_baxter: return detail::suite_yang_baxter(n, options);
        case SuiteId::rtt_vector: return detail::suite_rtt_vector(n, l);
        case SuiteId::reflection_S: return detail::suite_reflection_s(n, l);
        case SuiteId::s_shape: return detail::suite_s_shape(n, l);
        case SuiteId::def_2_3: return detail::suite_definition(n, l, options);
        case SuiteId::derived_2_4: return detail::suite_derived(n, l, options);
        case SuiteId::prop_4_1: return detail::suite_prop_q(n);
        case SuiteId::thm_4_2_commute:
            if (l < 2) throw std::invalid_argument("thm_4_2_commute needs l >= 2");
            return detail::suite_commute(n, l);
        case SuiteId::proof_identities: return detail::suite_proof_identities(n);
        case SuiteId::brauer_presentation:
            if (l < 3 || l > 5) return skipped("presentations", "needs 3 <= l <= 5");
            return check_brauer_presentation(l, LaurentPoly::q(1));
        case SuiteId::q1_specialization: return check_q1_specialization(l, n);
        case SuiteId::hecke_rank:
            if (l < 2 || l >= n) return skipped("hecke_rank", "needs 2 <= l < n");
            return {check_hecke_rank(l, n, options.q_points)};
        case SuiteId::centralizer_duality: {
            long long dim = 1;
            for (int k = 0; k < l; ++k) dim *= n;
            if (l < 2 || dim > kCommutantMaxDimension) return skipped("duality", "needs l >= 2 and n^l <= 100");
            return {check_centralizer_duality(l, n, options.q_points).report};
        }
    }
    throw std::invalid_argument("unknown suite");
}

std::string base_relation_id(std::string_view relation_id) {
    return std::string(relation_id.substr(0, relation_id.find('[')));
}

}  // namespace qbrauer
