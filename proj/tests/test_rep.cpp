#include "oracle.hpp"

#include "qbrauer/errors.hpp"
#include "qbrauer/linalg.hpp"
#include "qbrauer/rep.hpp"
#include "qbrauer/rmatrix.hpp"

#include <doctest.h>

using namespace qbrauer;

TEST_CASE("generator images") {
    const RepContext c2(2, 2);
    CHECK(c2.sigma(1) == r_check(2));
    CHECK(c2.e(1) == q_operator(2));
    const RepContext c3(2, 3);
    CHECK(c3.e(1) * c3.e(1) == quantum_integer(2) * c3.e(1));
    CHECK(c3.loop_value() == quantum_integer(2));
    CHECK_THROWS(c3.sigma(3));
    CHECK_THROWS(c3.tau());
    // Images against the leg-loop oracle.
    for (int n = 2; n <= 3; ++n) {
        const RepContext ctx(n, 3);
        const auto rc = oracle::dmul(oracle::permutation(n), oracle::r_matrix(n));
        CHECK(oracle::dense(ctx.sigma(1)) == oracle::on_legs(rc, 1, 2, 3, n));
        CHECK(oracle::dense(ctx.sigma(2)) == oracle::on_legs(rc, 2, 3, 3, n));
        CHECK(oracle::dense(ctx.e(2)) == oracle::on_legs(oracle::q_operator(n), 2, 3, 3, n));
    }
    CHECK_THROWS_AS(RepContext(2, 13), GuardError);
}

TEST_CASE("words") {
    const RepContext ctx(2, 2);
    CHECK(rep_word(ctx, GeneratorWord::parse(2, "")) == PolyMatrix::identity(4));
    const PolyMatrix s = rep_word(ctx, GeneratorWord::parse(2, "s1"));
    CHECK((rep_word(ctx, GeneratorWord::parse(2, "s1 s1")) - (q_minus_qinv() * s + PolyMatrix::identity(4))).is_zero_matrix());
    CHECK(rep_word(ctx, GeneratorWord::parse(2, "s1 s1^-1")) == PolyMatrix::identity(4));
    const RepContext c3(3, 3);
    CHECK(rep_word(c3, GeneratorWord::parse(3, "e2 s1 e2")) == LaurentPoly::q(3) * c3.e(2));
    const GeneratorWord w = GeneratorWord::parse(4, "s1 s2^-1 e3 tau tau^-1");
    CHECK(GeneratorWord::parse(4, w.to_string()) == w);
    CHECK_THROWS(GeneratorWord::parse(2, "s2"));
    CHECK_THROWS(GeneratorWord::parse(2, "x1"));
}

TEST_CASE("S image") {
    const PolyMatrix s = rep_S(2, 1);
    CHECK(s.rows() == 4);
    const LegSpace space(2, 2, 0);
    const int phys[] = {1};
    CHECK(s == s_image(space, 0, phys));
    CHECK(s == partial_transpose(r_matrix(2), TransposeFactor::first) * r_tilde(2));
    const auto b = rep_s_blocks(2, 1);
    CHECK(b[0][1].is_zero_matrix());
    REQUIRE_FALSE(b[1][0].is_zero_matrix());
    for (const auto& e : b[1][0].entries()) CHECK(exact_quotient(e.value, q_minus_qinv()).has_value());
}

TEST_CASE("s blocks for two legs") {
    const auto b = rep_s_blocks(2, 2);
    CHECK(b[0][1].is_zero_matrix());
    for (int i = 0; i < 2; ++i) CHECK(specialize(b[i][i], 1) == RationalMatrix::identity(4));
    const PolyMatrix q = q_operator(2);
    for (const auto& row : b)
        for (const auto& m : row) CHECK(commutes(m, q).commutes);
    // Rcheck on the two physical legs commutes with the whole S image.
    const LegSpace space(2, 3, 0);
    CHECK(commutes(leg_embed(r_check(2), 1, 2, space), rep_S(2, 2)).commutes);
    CHECK_THROWS_AS(rep_S(2, 12), GuardError);
}
