#include "checker.hpp"
#include "suites.hpp"

#include "qbrauer/errors.hpp"
#include "qbrauer/rep.hpp"
#include "qbrauer/rmatrix.hpp"

#include <stdexcept>

namespace qbrauer::detail {

namespace {

LaurentPoly qp(int e) { return LaurentPoly::q(e); }

std::vector<int> legs_from(int first, int count) {
    std::vector<int> out;
    for (int k = 0; k < count; ++k) out.push_back(first + k);
    return out;
}

PolyMatrix ordered_product(const std::vector<PolyMatrix>& factors, int dim) {
    PolyMatrix out = PolyMatrix::identity(dim);
    for (const auto& f : factors) out = out * f;
    return out;
}

/// Image of the matrix T (or T-bar) of the coproduct: prod_p op_{aux,p}.
PolyMatrix monodromy(const PolyMatrix& op, int aux, const std::vector<int>& physical, const LegSpace& space) {
    std::vector<PolyMatrix> fs;
    for (int p : physical) fs.push_back(leg_embed(op, aux, p, space));
    return ordered_product(fs, space.dimension());
}

/// Block (i, j) replaced by block (j, i): transpose in the leftmost factor.
PolyMatrix block_transpose(const PolyMatrix& m, int block_size) {
    std::vector<Entry<LaurentPoly>> es = m.entries();
    for (auto& e : es) {
        const int bi = e.row / block_size, bj = e.col / block_size;
        e.row = bj * block_size + e.row % block_size;
        e.col = bi * block_size + e.col % block_size;
    }
    return PolyMatrix::from_entries(m.rows(), m.cols(), std::move(es));
}

/// Sum over legs of the one-leg operator E_ij - E_ji, at q = 1.
RationalMatrix classical_generator(int n, int l, int i, int j) {
    const LegSpace space(n, l);
    const PolyMatrix x = matrix_unit(n, i, j) - matrix_unit(n, j, i);
    PolyMatrix sum(space.dimension(), space.dimension());
    for (int p = 1; p <= l; ++p) sum += leg_embed(x, p, space);
    return specialize(sum, 1);
}

}  // namespace

void require_space(int n, int legs) {
    if (n < 2) throw std::invalid_argument("local dimension n must be at least 2");
    if (n > kMaxLocalDimension) throw GuardError("local dimension n = " + std::to_string(n) + " exceeds guard n <= 6");
    long long dim = 1;
    for (int k = 0; k < legs; ++k) dim *= n;
    if (dim > kMaxRepDimension)
        throw GuardError("space of dimension " + std::to_string(dim) + " exceeds guard " + std::to_string(kMaxRepDimension));
}

std::vector<RelationReport> suite_yang_baxter(int n, const SuiteOptions& options) {
    require_space(n, 3);
    Checker c(SuiteId::yang_baxter, n, 3);
    PolyMatrix r = r_matrix(n);
    if (options.perturb_r) r = r + PolyMatrix::from_entries(r.rows(), r.cols(), {{0, 0, LaurentPoly(1)}});
    const LegSpace s(n, 3);
    const PolyMatrix r12 = leg_embed(r, 1, 2, s), r13 = leg_embed(r, 1, 3, s), r23 = leg_embed(r, 2, 3, s);
    c.equal("yang_baxter", r12 * r13 * r23, r23 * r13 * r12, options.perturb_r ? "R perturbed at entry (1,1)" : "");
    return c.take();
}

std::vector<RelationReport> suite_rtt_vector(int n, int l) {
    if (l < 1) throw std::invalid_argument("rtt_vector needs l >= 1");
    require_space(n, l + 2);
    Checker c(SuiteId::rtt_vector, n, l);
    const PolyMatrix r = r_matrix(n), rt = r_tilde(n), p = permutation(n), rp = r_prime(n);
    const PolyMatrix rtp = partial_transpose(rt, TransposeFactor::first);
    const PolyMatrix id2 = PolyMatrix::identity(n * n);

    c.equal("rcheck_is_p_r", r_check(n), p * r);
    c.equal("rtilde_is_p_rinv_p", rt * p * r * p, id2);
    c.equal("rcheck_inverse", r_check(n) * r_check_inv(n), id2);
    c.equal("rcheck_inverse_is_p_rtilde", r_check_inv(n), p * rt);
    c.equal("rprime_is_partial_transpose", rp, partial_transpose(r, TransposeFactor::first));

    // Blocks of 'R and 'Rtilde in the first factor against the vector
    // representation written out generator by generator.
    const LaurentPoly dq = q_minus_qinv();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            PolyMatrix t(n, n), tb(n, n);
            if (i == j) {
                for (int a = 1; a <= n; ++a) {
                    t += qp(a == i ? 1 : 0) * matrix_unit(n, a, a);
                    tb += qp(a == i ? -1 : 0) * matrix_unit(n, a, a);
                }
            } else if (i > j) {
                t = dq * matrix_unit(n, i, j);
            } else {
                tb = LaurentPoly(-dq) * matrix_unit(n, i, j);
            }
            c.equal(indexed("t_vector_image", {{"i", i}, {"j", j}}), block(rp, n, i - 1, j - 1), t);
            c.equal(indexed("tbar_vector_image", {{"i", i}, {"j", j}}), block(rtp, n, i - 1, j - 1), tb);
        }

    const LegSpace one_aux(n, l + 1, 0);
    const std::vector<int> phys1 = legs_from(1, l);
    const PolyMatrix t = monodromy(rp, 0, phys1, one_aux);
    const PolyMatrix tb = monodromy(rtp, 0, phys1, one_aux);
    const int m = one_aux.dimension() / n;
    const PolyMatrix idm = PolyMatrix::identity(m);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i < j) {
                c.zero(indexed("t_upper_zero", {{"i", i}, {"j", j}}), block(t, m, i - 1, j - 1));
            } else if (i > j) {
                c.zero(indexed("tbar_lower_zero", {{"i", i}, {"j", j}}), block(tb, m, i - 1, j - 1));
            }
        }
    for (int i = 1; i <= n; ++i) {
        const PolyMatrix tii = block(t, m, i - 1, i - 1), tbii = block(tb, m, i - 1, i - 1);
        c.equal(indexed("t_tbar_diagonal", {{"i", i}}), tii * tbii, idm);
        c.equal(indexed("tbar_t_diagonal", {{"i", i}}), tbii * tii, idm);
    }

    const LegSpace two_aux(n, l + 2, 1);
    const std::vector<int> phys2 = legs_from(3, l);
    const PolyMatrix r12 = leg_embed(r, 1, 2, two_aux);
    const PolyMatrix t1 = monodromy(rp, 1, phys2, two_aux), t2 = monodromy(rp, 2, phys2, two_aux);
    const PolyMatrix tb1 = monodromy(rtp, 1, phys2, two_aux), tb2 = monodromy(rtp, 2, phys2, two_aux);
    c.equal("rtt_t_t", r12 * t1 * t2, t2 * t1 * r12);
    c.equal("rtt_tbar_tbar", r12 * tb1 * tb2, tb2 * tb1 * r12);
    c.equal("rtt_tbar_t", r12 * tb1 * t2, t2 * tb1 * r12);
    return c.take();
}

std::vector<RelationReport> suite_reflection_s(int n, int l) {
    if (l < 1) throw std::invalid_argument("reflection_S needs l >= 1");
    require_space(n, l + 2);
    Checker c(SuiteId::reflection_S, n, l);
    const LegSpace s(n, l + 2, 1);
    const std::vector<int> phys = legs_from(3, l);
    const PolyMatrix s1 = s_image(s, 1, phys), s2 = s_image(s, 2, phys);
    const PolyMatrix r12 = leg_embed(r_matrix(n), 1, 2, s), rp12 = leg_embed(r_prime(n), 1, 2, s);
    c.equal("reflection", r12 * s1 * rp12 * s2, s2 * rp12 * s1 * r12);
    return c.take();
}

std::vector<RelationReport> suite_s_shape(int n, int l) {
    if (l < 1) throw std::invalid_argument("s_shape needs l >= 1");
    require_space(n, l + 1);
    Checker c(SuiteId::s_shape, n, l);
    const PolyMatrix s = rep_S(n, l);
    const int m = s.rows() / n;
    const PolyMatrix idm = PolyMatrix::identity(m);

    const LegSpace space(n, l + 1, 0);
    const std::vector<int> phys = legs_from(1, l);
    const PolyMatrix t = monodromy(r_prime(n), 0, phys, space);
    const PolyMatrix tb = monodromy(partial_transpose(r_tilde(n), TransposeFactor::first), 0, phys, space);
    c.equal("s_is_t_tbar_transposed", s, t * block_transpose(tb, m));

    const LaurentPoly dq = q_minus_qinv();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const PolyMatrix b = block(s, m, i - 1, j - 1);
            if (i < j) {
                c.zero(indexed("s_upper_zero", {{"i", i}, {"j", j}}), b);
            } else if (i == j) {
                c.equal(indexed("s_diagonal_identity", {{"i", i}}), b, idm);
            } else {
                // s_ij / (q - q^-1) at q = 1 is the action of E_ij - E_ji.
                std::vector<Entry<Rational>> limit;
                std::size_t indivisible = 0;
                for (const auto& e : b.entries()) {
                    auto quot = exact_quotient(e.value, dq);
                    if (!quot) {
                        ++indivisible;
                        continue;
                    }
                    limit.push_back({e.row, e.col, quot->evaluate(1)});
                }
                const RationalMatrix lim = RationalMatrix::from_entries(m, m, std::move(limit));
                const std::string id = indexed("s_lower_classical_limit", {{"i", i}, {"j", j}});
                if (indivisible != 0) {
                    c.scalar(id, static_cast<long long>(indivisible), 0, "entries not divisible by q - q^-1");
                } else {
                    c.equal(id, lim, classical_generator(n, l, i, j));
                }
            }
        }
    return c.take();
}

std::vector<RelationReport> suite_prop_q(int n) {
    require_space(n, 3);
    Checker c(SuiteId::prop_4_1, n, 2);
    const LegSpace s(n, 3, 0);
    const PolyMatrix q12 = leg_embed(q_operator(n), 1, 2, s);
    const PolyMatrix rp = r_prime(n), rt = r_tilde(n);
    const PolyMatrix rp01 = leg_embed(rp, 0, 1, s), rp02 = leg_embed(rp, 0, 2, s);
    const PolyMatrix rt01 = leg_embed(rt, 0, 1, s), rt02 = leg_embed(rt, 0, 2, s);
    const PolyMatrix r20 = leg_embed(r_matrix(n), 2, 0, s);
    const PolyMatrix id = PolyMatrix::identity(s.dimension());
    const PolyMatrix m = rp01 * rp02 * rt02 * rt01;

    c.equal("q_absorbs_s_left", q12 * m, q12);
    c.equal("q_absorbs_s_right", m * q12, q12);
    c.equal("rprime_rtilde_commute", rp * rt, rt * rp);
    c.equal("r20_inverts_rtilde02", r20 * rt02, id);
    c.equal("q_rprime01_is_q_r20", q12 * rp01, q12 * r20);
    c.equal("q_rprime02_rtilde01", q12 * rp02 * rt01, q12);
    c.equal("rprime02_rtilde01_q", rp02 * rt01 * q12, q12);
    c.equal("rprime01_rtilde02_q", rp01 * rt02 * q12, q12);
    c.zero("q_commutes_with_s", commutator(q12, m));
    return c.take();
}

std::vector<RelationReport> suite_commute(int n, int l) {
    require_space(n, l + 1);
    Checker c(SuiteId::thm_4_2_commute, n, l);
    const RepContext ctx(n, l);
    const PolyMatrix s = rep_S(n, l);
    const PolyMatrix idn = PolyMatrix::identity(n);
    for (int i = 1; i <= l - 1; ++i)
        c.zero(indexed("sigma_commutes_with_s", {{"i", i}}), commutator(kron(idn, ctx.sigma(i)), s));
    for (int i = 1; i <= l - 1; ++i)
        c.zero(indexed("e_commutes_with_s", {{"i", i}}), commutator(kron(idn, ctx.e(i)), s));
    return c.take();
}

std::vector<RelationReport> suite_proof_identities(int n) {
    require_space(n, 4);
    Checker c(SuiteId::proof_identities, n, 4);
    const LegSpace s(n, 4);
    auto E = [&](const PolyMatrix& a, int i, int j) { return leg_embed(a, i, j, s); };
    auto E1 = [&](const PolyMatrix& a, int i) { return leg_embed(a, i, s); };
    auto pt1 = [](const PolyMatrix& a) { return partial_transpose(a, TransposeFactor::first); };
    auto pt2 = [](const PolyMatrix& a) { return partial_transpose(a, TransposeFactor::second); };

    const PolyMatrix r = r_matrix(n), rt = r_tilde(n), p = permutation(n), q = q_operator(n), qb = q_bar(n);
    const PolyMatrix rc = r_check(n), rci = r_check_inv(n), d = diag_weights(n);
    const PolyMatrix rp = pt1(r), rs = pt2(r), rps = pt2(rp);
    const PolyMatrix idn = PolyMatrix::identity(n), id2 = PolyMatrix::identity(n * n);
    const PolyMatrix id = PolyMatrix::identity(s.dimension());
    const LaurentPoly cp = qp(n + 1) * q_minus_qinv();
    const LaurentPoly cm = qp(-n - 1) * (qp(-1) - qp(1));

    const PolyMatrix q12 = E(q, 1, 2), q34 = E(q, 3, 4), qb12 = E(qb, 1, 2), qb34 = E(qb, 3, 4);
    const PolyMatrix p13 = E(p, 1, 3), p24 = E(p, 2, 4), p23 = E(p, 2, 3);
    const PolyMatrix a4 = E(rc, 2, 3) * E(rc, 3, 4) * E(rc, 1, 2) * E(rc, 2, 3);
    const PolyMatrix b4 = E(rci, 2, 3) * E(rci, 3, 4) * E(rci, 1, 2) * E(rci, 2, 3);
    const PolyMatrix rc12_shift = E(rc, 1, 2) + qp(-1) * id;
    const PolyMatrix lhs_f = q34 * a4 * q34, lhs_i = q34 * b4 * q34;
    const PolyMatrix q12q34 = q12 * q34, qb12qb34 = qb12 * qb34;

    // The degree-4 pair.
    c.equal("degree4_forward", lhs_f, q12q34 + cp * (q34 * rc12_shift));
    c.equal("degree4_inverse", lhs_i, q12q34 + cm * (q34 * rc12_shift));

    // Steps of the forward identity.
    const PolyMatrix r14 = E(r, 1, 4), r24 = E(r, 2, 4), r13 = E(r, 1, 3), r23 = E(r, 2, 3);
    c.equal("forward_in_r", lhs_f, p13 * p24 * q12 * r14 * r24 * r13 * r23 * q34);
    c.equal("q_diagonal_first", q, kron(d, idn) * qb);
    c.equal("q_diagonal_second", q, kron(idn, d) * qb);
    c.equal("qbar_partial_transpose_first", qb, pt1(p));
    c.equal("qbar_partial_transpose_second", qb, pt2(p));
    const PolyMatrix d3 = E1(d, 3), d4 = E1(d, 4);
    c.equal("q12_r14", q12 * r14, q12 * E(rp, 2, 4));
    c.equal("r23_q34", r23 * q34, d4 * E(rs, 2, 4) * qb34);
    c.equal("forward_regrouped", lhs_f, p13 * p24 * q12 * r13 * E(rp, 2, 4) * r24 * d4 * E(rs, 2, 4) * qb34);
    c.equal("d_expansion", E(rp, 2, 4) * r24 * d4 * E(rs, 2, 4), r24 * d4 + cp * E(qb, 2, 4));
    c.equal("q12_r13", q12 * r13, q12 * E(rp, 2, 3));
    c.equal("qbar24_qbar34", E(qb, 2, 4) * qb34, p23 * qb34);
    {
        const PolyMatrix printed = E(qb, 2, 4) * q34 - p23 * q34;
        c.observe("qbar24_q34_as_printed", printed,
                  printed.is_zero_matrix() ? "holds with Q_34" : "differs by D weights; holds with Qbar_34");
    }
    c.equal("r24_d4_qbar34", r24 * d4 * qb34, d3 * E(rs, 2, 3) * qb34);
    c.equal("forward_after_expansion", lhs_f,
            p13 * p24 * q12 * E(rp, 2, 3) * (d3 * E(rs, 2, 3) + cp * p23) * qb34);

    const PolyMatrix x = kron(idn, d) + cp * (qp(-1) * qb + rp * p);
    const PolyMatrix y = p * pt2(x);
    const PolyMatrix ys = pt2(y);
    const PolyMatrix x23 = E(x, 2, 3);
    c.equal("forward_x_form", lhs_f, p13 * p24 * q12 * x23 * qb34);
    c.equal("x_move_q", p13 * p24 * q12 * x23 * qb34, q34 * p13 * p24 * x23 * qb34);
    c.equal("x_to_x_prime", q34 * p13 * p24 * x23 * qb34, q34 * p13 * p24 * E(pt2(x), 2, 4) * qb34);
    c.equal("x_prime_to_y", q34 * p13 * p24 * E(pt2(x), 2, 4) * qb34, q34 * p13 * E(ys, 2, 3) * qb34);
    c.equal("p13_y", p13 * E(ys, 2, 3), E(ys, 2, 1) * p13);
    c.equal("q34_p13_qbar34", q34 * p13 * qb34, q34);
    c.equal("y_closed_form", E(ys, 2, 1), q12 + cp * rc12_shift);
    c.equal("forward_final", lhs_f, E(ys, 2, 1) * q34);

    // Steps of the inverse identity.
    c.equal("rcheck_inverse_rtilde", rci, leg_embed(rt, 2, 1, LegSpace(n, 2)) * p);
    c.equal("inverse_in_rtilde", lhs_i,
            q34 * E(rt, 3, 2) * E(rt, 4, 2) * E(rt, 3, 1) * E(rt, 4, 1) * q12 * p13 * p24);

    // Combined relation and the completion pair.
    c.equal("combined", q34 * (qp(-n - 1) * a4 + qp(n + 1) * b4) * q34, (qp(-n - 1) + qp(n + 1)) * q12q34);
    const PolyMatrix mix = qp(-1) * a4 + qp(1) * b4;
    const LaurentPoly target = qp(-3) + qp(3);
    c.equal("completion_left", q12q34 * mix, target * q12q34);
    c.equal("completion_right", mix * q12q34, target * q12q34);
    c.equal("q_pair_diagonals", q12q34, E1(d, 1) * d3 * qb12qb34);
    c.equal("completion_left_qbar", qb12qb34 * mix, target * qb12qb34);

    c.equal("qbar_pair_forward", qb12qb34 * a4, qb12qb34 * p13 * p24 * r14 * r24 * r13 * r23);
    const PolyMatrix qb23 = E(qb, 2, 3);
    const PolyMatrix chain[] = {
        qb12qb34 * p13 * p24,
        qb12 * p13 * p24 * qb12,
        qb12 * qb23 * p24 * qb12,
        qb12 * p24 * qb34 * qb12,
        qb12 * p24 * qb12 * qb34,
        qb12qb34,
    };
    for (int k = 1; k <= 5; ++k)
        c.equal(indexed("projector_chain", {{"step", k}}), chain[k - 1], chain[k]);

    c.equal("qbar12_r14", qb12 * r14, qb12 * E(rp, 2, 4));
    c.equal("qbar_pair_r13", qb12qb34 * r13, qb12qb34 * E(rs, 1, 4));
    c.equal("qbar_pair_r13_both", qb12qb34 * E(rs, 1, 4), qb12qb34 * E(rps, 2, 4));
    const PolyMatrix v = rps * rp * r;
    const PolyMatrix forward_r = qb12qb34 * r14 * r24 * r13 * r23;
    c.equal("v_form", forward_r, qb12qb34 * E(v, 2, 4) * r23);
    c.equal("v_prime_form", qb12qb34 * E(v, 2, 4) * r23, qb12qb34 * E(pt2(v), 2, 3) * r23);

    const PolyMatrix rtp = pt1(rt), rtps = pt2(rtp);
    const PolyMatrix w = rtps * rtp * rt;
    const PolyMatrix rt14 = E(rt, 1, 4), rt24 = E(rt, 2, 4), rt13 = E(rt, 1, 3), rt23 = E(rt, 2, 3);
    const PolyMatrix inverse_r = qb12qb34 * rt14 * rt24 * rt13 * rt23;
    c.equal("qbar_pair_inverse", qb12qb34 * b4, inverse_r);
    c.equal("w_prime_form", inverse_r, qb12qb34 * E(pt2(w), 2, 3) * rt23);

    c.equal("vw_identity", qp(-1) * (pt2(v) * r) + qp(1) * (pt2(w) * rt), target * id2);
    return c.take();
}

}  // namespace qbrauer::detail
