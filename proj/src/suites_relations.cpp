#include "checker.hpp"
#include "suites.hpp"

#include "qbrauer/rep.hpp"

#include <stdexcept>

namespace qbrauer::detail {

namespace {

LaurentPoly qp(int e) { return LaurentPoly::q(e); }

}  // namespace

std::vector<RelationReport> suite_definition(int n, int l, const SuiteOptions& options) {
    if (l < 2) throw std::invalid_argument("def_2_3 needs l >= 2");
    require_space(n, l);
    const RepContext ctx(n, l, n + options.z_shift);
    Checker c(SuiteId::def_2_3, n, l, options.z_shift != 0 ? "z=q^" + std::to_string(n + options.z_shift) : "");
    const int k = l - 1;
    const PolyMatrix& id = ctx.identity();
    const LaurentPoly dq = q_minus_qinv(), z = ctx.z(), zi = ctx.z_inv();

    for (int i = 1; i <= k; ++i) {
        const PolyMatrix& s = ctx.sigma(i);
        c.equal(indexed("hecke_quadratic", {{"i", i}}), s * s, dq * s + id);
        c.equal(indexed("sigma_inverse", {{"i", i}}), s * ctx.sigma_inv(i), id);
    }
    if (l < 4) c.skip("sigma_sigma_commute", "needs l >= 4");
    for (int i = 1; i <= k; ++i)
        for (int j = i + 2; j <= k; ++j)
            c.equal(indexed("sigma_sigma_commute", {{"i", i}, {"j", j}}), ctx.sigma(i) * ctx.sigma(j),
                    ctx.sigma(j) * ctx.sigma(i));
    if (l < 3) c.skip("braid", "needs l >= 3");
    for (int i = 1; i + 1 <= k; ++i) {
        const PolyMatrix &s = ctx.sigma(i), &t = ctx.sigma(i + 1);
        c.equal(indexed("braid", {{"i", i}}), s * t * s, t * s * t);
    }

    const PolyMatrix& e = ctx.e(k);
    c.equal("e_squared", e * e, ctx.loop_value() * e);
    c.equal("sigma_e", ctx.sigma(k) * e, qp(1) * e);
    c.equal("e_sigma", e * ctx.sigma(k), qp(1) * e);
    if (l < 3)
        c.skip("e_sigma_prev_e", "needs l >= 3");
    else
        c.equal("e_sigma_prev_e", e * ctx.sigma(k - 1) * e, z * e);
    if (l < 4) c.skip("sigma_e_commute", "needs l >= 4");
    for (int i = 1; i <= k - 2; ++i)
        c.equal(indexed("sigma_e_commute", {{"i", i}}), ctx.sigma(i) * e, e * ctx.sigma(i));

    if (!ctx.has_tau()) {
        c.skip("tau_inverse", "needs l >= 4");
        c.skip("tau_relation", "needs l >= 4");
    } else {
        const PolyMatrix &tau = ctx.tau(), &tau_inv = ctx.tau_inv();
        c.equal("tau_inverse", tau * tau_inv, id);
        const PolyMatrix a = (z * qp(1)) * tau_inv + (zi * qp(-1)) * tau;
        const PolyMatrix b = qp(1) * tau_inv + qp(-1) * tau;
        c.equal("tau_relation", e * a * e * b, b * e * a * e);
    }
    return c.take();
}

std::vector<RelationReport> suite_derived(int n, int l, const SuiteOptions& options) {
    if (l < 2) throw std::invalid_argument("derived_2_4 needs l >= 2");
    require_space(n, l);
    const RepContext ctx(n, l, n + options.z_shift);
    Checker c(SuiteId::derived_2_4, n, l, options.z_shift != 0 ? "z=q^" + std::to_string(n + options.z_shift) : "");
    const int k = l - 1;
    const LaurentPoly z = ctx.z(), zi = ctx.z_inv(), zq = ctx.z() * qp(1);

    if (l < 3) c.skip("e_recursive", "needs l >= 3");
    for (int i = 1; i <= k - 1; ++i)
        c.equal(indexed("e_recursive", {{"i", i}}), ctx.e(i),
                ctx.sigma(i + 1) * ctx.sigma(i) * ctx.e(i + 1) * ctx.sigma_inv(i) * ctx.sigma_inv(i + 1));

    for (int i = 1; i <= k; ++i) {
        const PolyMatrix &e = ctx.e(i), &s = ctx.sigma(i);
        c.equal(indexed("e_squared", {{"i", i}}), e * e, ctx.loop_value() * e);
        c.equal(indexed("sigma_e", {{"i", i}}), s * e, qp(1) * e);
        c.equal(indexed("e_sigma", {{"i", i}}), e * s, qp(1) * e);
    }

    if (l < 4) {
        c.skip("sigma_e_distant_commute", "needs l >= 4");
        c.skip("e_e_distant_commute_observed", "needs l >= 4");
    }
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            if (i - j > 1 || j - i > 1)
                c.equal(indexed("sigma_e_distant_commute", {{"i", i}, {"j", j}}), ctx.sigma(i) * ctx.e(j),
                        ctx.e(j) * ctx.sigma(i));
    // No closed form of these relations is available; whether the images
    // commute is recorded, not asserted.
    for (int i = 1; i <= k; ++i)
        for (int j = i + 2; j <= k; ++j) {
            const PolyMatrix comm = commutator(ctx.e(i), ctx.e(j));
            c.observe(indexed("e_e_distant_commute_observed", {{"i", i}, {"j", j}}), comm,
                      comm.is_zero_matrix() ? "images commute" : "images do not commute");
        }

    if (l < 3) {
        for (const char* id : {"e_f_e", "f_e_f", "e_sigma_next_e", "e_sigma_prev_e", "e_sigmainv_next_e",
                               "e_sigmainv_prev_e", "sigma_f_e", "f_e_sigma"})
            c.skip(id, "needs l >= 3");
        return c.take();
    }
    for (int i = 1; i + 1 <= k; ++i) {
        const PolyMatrix &e = ctx.e(i), &f = ctx.e(i + 1);
        c.equal(indexed("e_f_e", {{"i", i}}), e * f * e, e);
        c.equal(indexed("f_e_f", {{"i", i}}), f * e * f, f);
    }
    for (int i = 1; i <= k; ++i) {
        const PolyMatrix& e = ctx.e(i);
        if (i + 1 <= k) {
            c.equal(indexed("e_sigma_next_e", {{"i", i}}), e * ctx.sigma(i + 1) * e, z * e);
            c.equal(indexed("e_sigmainv_next_e", {{"i", i}}), e * ctx.sigma_inv(i + 1) * e, zi * e);
        }
        if (i - 1 >= 1) {
            c.equal(indexed("e_sigma_prev_e", {{"i", i}}), e * ctx.sigma(i - 1) * e, z * e);
            c.equal(indexed("e_sigmainv_prev_e", {{"i", i}}), e * ctx.sigma_inv(i - 1) * e, zi * e);
        }
    }
    for (int i = 1; i + 1 <= k; ++i) {
        const PolyMatrix &e = ctx.e(i), &f = ctx.e(i + 1);
        c.equal(indexed("sigma_f_e", {{"i", i}}), ctx.sigma(i) * f * e, zq * (ctx.sigma_inv(i + 1) * e));
        c.equal(indexed("f_e_sigma", {{"i", i}}), f * e * ctx.sigma(i + 1), zq * (f * ctx.sigma_inv(i)));
    }
    return c.take();
}

}  // namespace qbrauer::detail
