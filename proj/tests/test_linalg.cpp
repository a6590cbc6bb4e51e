#include "oracle.hpp"

#include "qbrauer/linalg.hpp"
#include "qbrauer/rmatrix.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace qbrauer;

namespace {

PolyMatrix random_matrix(std::mt19937& rng, int n, double density = 0.4) {
    std::uniform_real_distribution<double> u(0, 1);
    std::uniform_int_distribution<int> ex(-2, 2), co(-3, 3);
    std::vector<Entry<LaurentPoly>> es;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (u(rng) < density) es.push_back({r, c, LaurentPoly(co(rng), ex(rng)) + LaurentPoly(co(rng), ex(rng))});
    return PolyMatrix::from_entries(n, n, std::move(es));
}

}  // namespace

TEST_CASE("sparse products match the dense oracle") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + trial % 5;
        const PolyMatrix a = random_matrix(rng, n), b = random_matrix(rng, n), c = random_matrix(rng, n);
        CHECK(oracle::dense(a * b) == oracle::dmul(oracle::dense(a), oracle::dense(b)));
        CHECK((a * b) * c == a * (b * c));
        CHECK(PolyMatrix::identity(n) * a == a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero_matrix());
    }
}

TEST_CASE("canonical form") {
    auto m = PolyMatrix::from_entries(2, 2, {{1, 1, LaurentPoly(2)}, {0, 1, LaurentPoly(1)}, {1, 1, LaurentPoly(-2)}});
    CHECK(m.nonzeros() == 1);
    CHECK(m.at(0, 1) == LaurentPoly(1));
    CHECK(m.at(1, 1).is_zero());
    CHECK_THROWS(PolyMatrix::from_entries(2, 2, {{2, 0, LaurentPoly(1)}}));
    CHECK_THROWS(PolyMatrix::identity(2) * PolyMatrix::identity(3));
}

TEST_CASE("kron") {
    CHECK(kron(PolyMatrix::identity(3), PolyMatrix::identity(3)) == PolyMatrix::identity(9));
    // E_12 (x) E_21 sends e_2 (x) e_1 to e_1 (x) e_2.
    const PolyMatrix k = kron(matrix_unit(2, 1, 2), matrix_unit(2, 2, 1));
    const LegSpace s(2, 2);
    const int from = s.index(std::vector<int>{1, 0}), to = s.index(std::vector<int>{0, 1});
    CHECK(k.at(to, from) == LaurentPoly(1));
    CHECK(k.nonzeros() == 1);
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const PolyMatrix a = random_matrix(rng, 2, 0.7), b = random_matrix(rng, 2, 0.7), c = random_matrix(rng, 2, 0.7),
                         d = random_matrix(rng, 2, 0.7);
        CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
        CHECK(oracle::dense(kron(a, b)) == oracle::dkron(oracle::dense(a), oracle::dense(b)));
    }
}

TEST_CASE("leg spaces") {
    const LegSpace s(3, 3);
    CHECK(s.dimension() == 27);
    CHECK(s.index(std::vector<int>{1, 0, 2}) == 11);
    CHECK(s.digits(11) == std::vector<int>{1, 0, 2});
    const LegSpace aux(2, 3, 0);
    CHECK(aux.position(0) == 0);
    CHECK(aux.has_leg(2));
    CHECK_FALSE(aux.has_leg(3));
    CHECK_THROWS_AS(aux.position(3), std::out_of_range);
}

TEST_CASE("leg embeddings") {
    const PolyMatrix p = permutation(2);
    const LegSpace s3(2, 3);
    const PolyMatrix p13 = leg_embed(p, 1, 3, s3);
    CHECK(p13.at(s3.index(std::vector<int>{1, 1, 0}), s3.index(std::vector<int>{0, 1, 1})) == LaurentPoly(1));
    CHECK(leg_embed(p, 1, 3, s3) == leg_embed(p, 3, 1, s3));
    for (int n = 2; n <= 3; ++n) CHECK(leg_embed(r_matrix(n), 1, 2, LegSpace(n, 2)) == r_matrix(n));
    CHECK_THROWS(leg_embed(p, 1, 1, s3));
    CHECK_THROWS(leg_embed(p, 1, 4, s3));

    std::mt19937 rng(3);
    const LegSpace s4(2, 4);
    for (int trial = 0; trial < 5; ++trial) {
        const PolyMatrix a = random_matrix(rng, 4, 0.5), b = random_matrix(rng, 4, 0.5);
        const PolyMatrix a12 = leg_embed(a, 1, 2, s4), b34 = leg_embed(b, 3, 4, s4);
        CHECK(a12 * b34 == b34 * a12);
        CHECK(oracle::dense(a12) == oracle::on_legs(oracle::dense(a), 1, 2, 4, 2));
        CHECK(oracle::dense(leg_embed(a, 3, 1, s4)) == oracle::on_legs(oracle::dense(a), 3, 1, 4, 2));
    }
}

TEST_CASE("partial transposes") {
    CHECK(partial_transpose(permutation(3), TransposeFactor::first) == q_bar(3));
    CHECK(partial_transpose(permutation(3), TransposeFactor::second) == q_bar(3));
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const PolyMatrix a = random_matrix(rng, 9, 0.3);
        CHECK(partial_transpose(partial_transpose(a, TransposeFactor::first), TransposeFactor::first) == a);
        CHECK(partial_transpose(partial_transpose(a, TransposeFactor::first), TransposeFactor::second) == a.transposed());
        // Index-shuffle oracle: entry ((i,r),(j,s)) moves to ((j,r),(i,s)).
        const auto d = oracle::dense(a), t = oracle::dense(partial_transpose(a, TransposeFactor::first));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int r = 0; r < 3; ++r)
                    for (int s = 0; s < 3; ++s) CHECK(t[j * 3 + r][i * 3 + s] == d[i * 3 + r][j * 3 + s]);
    }
    CHECK_THROWS(partial_transpose(PolyMatrix::identity(5), TransposeFactor::first));
}

TEST_CASE("commutes") {
    std::mt19937 rng(9);
    const PolyMatrix a = random_matrix(rng, 4);
    CHECK(commutes(PolyMatrix::identity(4), a).commutes);
    const LegSpace s(2, 2);
    const auto res = commutes(kron(matrix_unit(2, 1, 2), PolyMatrix::identity(2)),
                              kron(matrix_unit(2, 2, 1), PolyMatrix::identity(2)));
    CHECK_FALSE(res.commutes);
    CHECK(res.residual == kron(matrix_unit(2, 1, 1) - matrix_unit(2, 2, 2), PolyMatrix::identity(2)));
}

TEST_CASE("interchange format round trip") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        const PolyMatrix a = random_matrix(rng, 5);
        const AnyMatrix back = parse_matrix(format_matrix(a));
        REQUIRE(std::holds_alternative<PolyMatrix>(back));
        CHECK(std::get<PolyMatrix>(back) == a);
        const RationalMatrix r = specialize(a, Rational(5, 3));
        CHECK(std::get<RationalMatrix>(parse_matrix(format_matrix(r))) == r);
    }
    CHECK_THROWS_AS(parse_matrix("qbrauer-matrix v1 rows=2 cols=2 ring=laurent\n3 1 1*q^0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix("garbage"), std::invalid_argument);
}

TEST_CASE("specialisation is a ring homomorphism") {
    std::mt19937 rng(17);
    const PolyMatrix a = random_matrix(rng, 4), b = random_matrix(rng, 4);
    const Rational x(7, 2);
    CHECK(specialize(a * b, x) == specialize(a, x) * specialize(b, x));
}
