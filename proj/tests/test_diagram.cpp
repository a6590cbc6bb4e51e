#include "oracle.hpp"

#include "qbrauer/diagram.hpp"
#include "qbrauer/errors.hpp"
#include "qbrauer/rmatrix.hpp"

#include <doctest.h>

#include <random>

using namespace qbrauer;

namespace {

oracle::Mates mates_of(const BrauerDiagram& d) {
    oracle::Mates m(static_cast<size_t>(2 * d.size()));
    for (int x = 0; x < 2 * d.size(); ++x) m[x] = d.mate(x);
    return m;
}

BrauerDiagram from_mates(const oracle::Mates& m) {
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < static_cast<int>(m.size()); ++x)
        if (x < m[x]) edges.emplace_back(x, m[x]);
    return BrauerDiagram::from_edges(static_cast<int>(m.size()) / 2, edges);
}

}  // namespace

TEST_CASE("generators") {
    CHECK(brauer_generator(GeneratorKind::sigma, 1, 2).to_string() == "l=2; T1-B2, T2-B1");
    CHECK(brauer_generator(GeneratorKind::e, 1, 2).to_string() == "l=2; T1-T2, B1-B2");
    CHECK_THROWS(brauer_generator(GeneratorKind::sigma, 2, 2));
    CHECK_THROWS(BrauerDiagram::from_edges(2, {{0, 1}, {1, 2}}));
    const auto d = brauer_generator(GeneratorKind::e, 2, 4);
    CHECK(BrauerDiagram::parse(d.to_string()) == d);
}

TEST_CASE("composition examples") {
    const auto e1 = brauer_generator(GeneratorKind::e, 1, 2), s1 = brauer_generator(GeneratorKind::sigma, 1, 2);
    auto c = compose(e1, e1);
    CHECK(c.loops == 1);
    CHECK(c.diagram == e1);
    c = compose(s1, s1);
    CHECK(c.loops == 0);
    CHECK(c.diagram == BrauerDiagram::identity(2));
    const auto a = brauer_generator(GeneratorKind::e, 1, 3), b = brauer_generator(GeneratorKind::e, 2, 3);
    const auto ab = compose(a, b), aba = compose(ab.diagram, a);
    CHECK(ab.loops + aba.loops == 0);
    CHECK(aba.diagram == a);
}

TEST_CASE("enumeration counts and oracle agreement") {
    const long long expected[] = {1, 3, 15, 105, 945};
    for (int l = 1; l <= 5; ++l) {
        const auto ds = enumerate_diagrams(l);
        CHECK(static_cast<long long>(ds.size()) == expected[l - 1]);
        CHECK(ds.size() == oracle::all_matchings(l).size());
        CHECK(std::is_sorted(ds.begin(), ds.end()));
    }
    CHECK_THROWS_AS(enumerate_diagrams(7), GuardError);
}

TEST_CASE("composition matches the union-find oracle and is associative") {
    for (int l = 2; l <= 3; ++l) {
        const auto ds = enumerate_diagrams(l);
        for (const auto& x : ds)
            for (const auto& y : ds) {
                const auto c = compose(x, y);
                const auto g = oracle::glue(mates_of(x), mates_of(y));
                CHECK(c.loops == g.loops);
                CHECK(mates_of(c.diagram) == g.result);
            }
    }
    std::mt19937 rng(31);
    const auto ds = enumerate_diagrams(4);
    std::uniform_int_distribution<size_t> pick(0, ds.size() - 1);
    for (int trial = 0; trial < 300; ++trial) {
        const auto &x = ds[pick(rng)], &y = ds[pick(rng)], &z = ds[pick(rng)];
        const auto xy = compose(x, y), xy_z = compose(xy.diagram, z);
        const auto yz = compose(y, z), x_yz = compose(x, yz.diagram);
        CHECK(xy_z.diagram == x_yz.diagram);
        CHECK(xy.loops + xy_z.loops == yz.loops + x_yz.loops);
    }
}

TEST_CASE("diagram elements") {
    using E = DiagramElement<Rational>;
    const auto e1 = brauer_generator(GeneratorKind::e, 1, 2);
    const E x = E(e1);
    CHECK(multiply(x, x, Rational(3)) == Rational(3) * x);
    const E id = E(BrauerDiagram::identity(2));
    CHECK(multiply(id, x, Rational(3)) == x);
    const auto s1 = brauer_generator(GeneratorKind::sigma, 1, 3), s2 = brauer_generator(GeneratorKind::sigma, 2, 3);
    const auto f1 = brauer_generator(GeneratorKind::e, 1, 3), f2 = brauer_generator(GeneratorKind::e, 2, 3);
    const Rational eta(5);
    const E lhs = multiply(multiply(E(s1), E(f2), eta), E(f1), eta);
    const E rhs = multiply(E(s2), E(f1), eta);
    CHECK(lhs == rhs);
    CHECK_THROWS(multiply(x, E(s1), eta));
}

TEST_CASE("diagram operators") {
    CHECK(diagram_to_operator(BrauerDiagram::identity(3), 2) == PolyMatrix::identity(8));
    CHECK(diagram_to_operator(brauer_generator(GeneratorKind::sigma, 1, 2), 3) == permutation(3));
    CHECK(diagram_to_operator(brauer_generator(GeneratorKind::e, 1, 2), 2) == q_bar(2));
    for (int n = 2; n <= 3; ++n)
        for (const auto& d : enumerate_diagrams(3))
            CHECK(oracle::qdense(specialize(diagram_to_operator(d, n), 1)) == oracle::diagram_matrix(mates_of(d), n));
}

TEST_CASE("operator map is a homomorphism up to loop factors") {
    for (int n = 2; n <= 3; ++n) {
        const auto ds = enumerate_diagrams(3);
        int failing = 0;
        for (const auto& x : ds)
            for (const auto& y : ds) {
                const auto g = oracle::glue(mates_of(x), mates_of(y));
                auto lhs = oracle::qmul(oracle::diagram_matrix(mates_of(x), n), oracle::diagram_matrix(mates_of(y), n));
                auto rhs = oracle::diagram_matrix(g.result, n);
                Rational f = 1;
                for (int k = 0; k < g.loops; ++k) f *= n;
                for (auto& row : rhs)
                    for (auto& v : row) v *= f;
                if (lhs != rhs) ++failing;
                const auto c = compose(x, y);
                PolyMatrix expect = diagram_to_operator(c.diagram, n);
                for (int k = 0; k < c.loops; ++k) expect = LaurentPoly(n) * expect;
                if (!(diagram_to_operator(x, n) * diagram_to_operator(y, n) == expect)) ++failing;
            }
        CHECK(failing == 0);
        CHECK(from_mates(mates_of(ds[4])) == ds[4]);
    }
}
