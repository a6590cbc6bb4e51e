#pragma once

// Test-side oracles. Everything here is dense and loop-based and shares no
// code with the library beyond the scalar types.

#include "qbrauer/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using qbrauer::BigInt;
using qbrauer::Rational;

// exponent -> coefficient
using Poly = std::map<int, BigInt>;

inline Poly clean(Poly p) {
    for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
    return p;
}
inline Poly mono(long long c, int e) { return clean(Poly{{e, BigInt(c)}}); }
inline Poly add(Poly a, const Poly& b) {
    for (const auto& [e, c] : b) a[e] += c;
    return clean(std::move(a));
}
inline Poly neg(Poly a) {
    for (auto& [e, c] : a) c = -c;
    return a;
}
inline Poly sub(Poly a, const Poly& b) { return add(std::move(a), neg(b)); }
inline Poly mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
    return clean(std::move(out));
}
inline Rational eval(const Poly& p, const Rational& x) {
    Rational s = 0;
    for (const auto& [e, c] : p) {
        Rational t = 1;
        for (int k = 0; k < (e < 0 ? -e : e); ++k) t *= x;
        s += Rational(c) * (e < 0 ? 1 / t : t);
    }
    return s;
}

inline qbrauer::LaurentPoly to_lib(const Poly& p) {
    std::vector<qbrauer::Term> ts;
    for (const auto& [e, c] : p) ts.push_back({e, c});
    return qbrauer::LaurentPoly::from_terms(std::move(ts));
}
inline Poly from_lib(const qbrauer::LaurentPoly& p) {
    Poly out;
    for (const auto& t : p.terms()) out[t.exp] = t.coef;
    return out;
}

using DMat = std::vector<std::vector<Poly>>;

inline DMat zeros(int n) { return DMat(static_cast<size_t>(n), std::vector<Poly>(static_cast<size_t>(n))); }
inline DMat identity(int n) {
    DMat m = zeros(n);
    for (int i = 0; i < n; ++i) m[i][i] = mono(1, 0);
    return m;
}
inline DMat dmul(const DMat& a, const DMat& b) {
    const size_t n = a.size();
    DMat c = zeros(static_cast<int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k].empty()) continue;
            for (size_t j = 0; j < n; ++j)
                if (!b[k][j].empty()) c[i][j] = add(c[i][j], mul(a[i][k], b[k][j]));
        }
    return c;
}
inline DMat dsub(const DMat& a, const DMat& b) {
    DMat c = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j) c[i][j] = sub(a[i][j], b[i][j]);
    return c;
}
inline DMat dkron(const DMat& a, const DMat& b) {
    const size_t p = b.size();
    DMat c = zeros(static_cast<int>(a.size() * p));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j)
            for (size_t r = 0; r < p; ++r)
                for (size_t s = 0; s < p; ++s) c[i * p + r][j * p + s] = mul(a[i][j], b[r][s]);
    return c;
}
inline DMat dense(const qbrauer::PolyMatrix& m) {
    DMat d = zeros(m.rows());
    for (const auto& e : m.entries()) d[e.row][e.col] = from_lib(e.value);
    return d;
}
inline qbrauer::PolyMatrix sparse(const DMat& d) {
    std::vector<qbrauer::Entry<qbrauer::LaurentPoly>> es;
    for (size_t i = 0; i < d.size(); ++i)
        for (size_t j = 0; j < d.size(); ++j)
            if (!d[i][j].empty()) es.push_back({static_cast<int>(i), static_cast<int>(j), to_lib(d[i][j])});
    return qbrauer::PolyMatrix::from_entries(static_cast<int>(d.size()), static_cast<int>(d.size()), std::move(es));
}

// Digits of a basis index, leftmost leg most significant, 0-based values.
inline std::vector<int> digits(int index, int n, int legs) {
    std::vector<int> d(static_cast<size_t>(legs));
    for (int k = legs - 1; k >= 0; --k, index /= n) d[static_cast<size_t>(k)] = index % n;
    return d;
}
inline int index_of(const std::vector<int>& d, int n) {
    int x = 0;
    for (int v : d) x = x * n + v;
    return x;
}

// Two-leg operators from their matrix-unit sums: entry ((i,j),(k,m)) is the
// coefficient of E_ik (x) E_jm.
inline DMat two_leg(int n, const std::function<Poly(int, int, int, int)>& coef) {
    DMat d = zeros(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int m = 0; m < n; ++m) d[i * n + j][k * n + m] = coef(i, j, k, m);
    return d;
}
// q sum E_ii E_ii + sum_{i!=j} E_ii E_jj + (q - q^-1) sum_{i<j} E_ij E_ji
inline DMat r_matrix(int n) {
    return two_leg(n, [](int i, int j, int k, int m) {
        Poly c;
        if (i == k && j == m) c = i == j ? mono(1, 1) : mono(1, 0);
        if (i < j && k == j && m == i) c = add(c, add(mono(1, 1), mono(-1, -1)));
        return c;
    });
}
inline DMat permutation(int n) {
    return two_leg(n, [](int i, int j, int k, int m) { return (k == j && m == i) ? mono(1, 0) : Poly{}; });
}
// sum q^{n-2i+1} E_ij E_ij with 1-based i
inline DMat q_operator(int n) {
    return two_leg(n, [n](int i, int j, int k, int m) {
        return (i == j && k == m) ? mono(1, n - 2 * (i + 1) + 1) : Poly{};
    });
}

// op on legs a, b (1-based, op's first factor on a) of `legs` legs.
inline DMat on_legs(const DMat& op, int a, int b, int legs, int n) {
    const int dim = static_cast<int>(std::pow(n, legs) + 0.5);
    DMat out = zeros(dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) {
            auto dr = digits(r, n, legs), dc = digits(c, n, legs);
            bool same = true;
            for (int k = 0; k < legs; ++k)
                if (k != a - 1 && k != b - 1 && dr[k] != dc[k]) same = false;
            if (!same) continue;
            out[r][c] = op[dr[a - 1] * n + dr[b - 1]][dc[a - 1] * n + dc[b - 1]];
        }
    return out;
}

using QMat = std::vector<std::vector<Rational>>;

inline QMat eval(const DMat& d, const Rational& x) {
    QMat q(d.size(), std::vector<Rational>(d.size()));
    for (size_t i = 0; i < d.size(); ++i)
        for (size_t j = 0; j < d.size(); ++j) q[i][j] = eval(d[i][j], x);
    return q;
}
inline QMat qdense(const qbrauer::RationalMatrix& m) {
    QMat q(static_cast<size_t>(m.rows()), std::vector<Rational>(static_cast<size_t>(m.cols())));
    for (const auto& e : m.entries()) q[e.row][e.col] = e.value;
    return q;
}
inline QMat qmul(const QMat& a, const QMat& b) {
    QMat c(a.size(), std::vector<Rational>(b[0].size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k)
            if (a[i][k] != 0)
                for (size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

// Plain Gaussian elimination on a copy.
inline int rank(std::vector<std::vector<Rational>> rows) {
    int r = 0;
    const size_t width = rows.empty() ? 0 : rows[0].size();
    for (size_t c = 0; c < width && r < static_cast<int>(rows.size()); ++c) {
        size_t p = static_cast<size_t>(r);
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[static_cast<size_t>(r)]);
        for (size_t i = static_cast<size_t>(r) + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            const Rational f = rows[i][c] / rows[static_cast<size_t>(r)][c];
            for (size_t j = c; j < width; ++j) rows[i][j] -= f * rows[static_cast<size_t>(r)][j];
        }
        ++r;
    }
    return r;
}

// dim {X : XM = MX} from the dense n^2 x n^2 system.
inline int commutant_dim(const std::vector<QMat>& mats) {
    const size_t n = mats.front().size();
    std::vector<std::vector<Rational>> rows;
    for (const auto& m : mats)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                std::vector<Rational> row(n * n);
                for (size_t k = 0; k < n; ++k) {
                    row[i * n + k] += m[k][j];
                    row[k * n + j] -= m[i][k];
                }
                rows.push_back(std::move(row));
            }
    return static_cast<int>(n * n) - rank(std::move(rows));
}

// Unital algebra generated by gens: words of growing length until the span
// stops growing.
inline int algebra_dim(const std::vector<QMat>& gens) {
    const size_t n = gens.front().size();
    auto flat = [&](const QMat& m) {
        std::vector<Rational> v;
        for (const auto& row : m) v.insert(v.end(), row.begin(), row.end());
        return v;
    };
    QMat id(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i) id[i][i] = 1;
    std::vector<QMat> layer{id};
    std::vector<std::vector<Rational>> span{flat(id)};
    int dim = 1;
    while (true) {
        std::vector<QMat> next;
        for (const auto& w : layer)
            for (const auto& g : gens) {
                QMat p = qmul(w, g);
                span.push_back(flat(p));
                const int d = rank(span);
                if (d > dim) {
                    dim = d;
                    next.push_back(std::move(p));
                } else {
                    span.pop_back();
                }
            }
        if (next.empty()) return dim;
        layer = std::move(next);
    }
}

// Brauer diagrams as mate arrays on dots 0..2l-1 (top then bottom).
using Mates = std::vector<int>;

struct Glued {
    int loops;
    Mates result;
};

// d1 above d2 by union-find over three rows of dots: top of d1 (0..l-1),
// the glued middle row (l..2l-1) and bottom of d2 (2l..3l-1).
inline Glued glue(const Mates& d1, const Mates& d2) {
    const int l = static_cast<int>(d1.size()) / 2;
    std::vector<int> parent(static_cast<size_t>(3 * l));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (int a = 0; a < 2 * l; ++a) unite(a, d1[a]);                      // top 0..l-1, middle l..2l-1
    for (int a = 0; a < 2 * l; ++a) unite(a + l, d2[a] + l);              // middle l..2l-1, bottom 2l..3l-1
    std::map<int, std::vector<int>> comps;
    for (int x = 0; x < 3 * l; ++x) comps[find(x)].push_back(x);
    Glued g{0, Mates(static_cast<size_t>(2 * l), -1)};
    for (const auto& [root, members] : comps) {
        std::vector<int> outer;
        for (int x : members)
            if (x < l || x >= 2 * l) outer.push_back(x < l ? x : x - l);
        if (outer.empty())
            ++g.loops;
        else {
            g.result[outer[0]] = outer[1];
            g.result[outer[1]] = outer[0];
        }
    }
    return g;
}

// Entry (a, b) is 1 when every edge's delta holds; top dot i reads a_i,
// bottom dot i reads b_i.
inline QMat diagram_matrix(const Mates& d, int n) {
    const int l = static_cast<int>(d.size()) / 2;
    const int dim = static_cast<int>(std::pow(n, l) + 0.5);
    QMat m(static_cast<size_t>(dim), std::vector<Rational>(static_cast<size_t>(dim)));
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) {
            auto a = digits(r, n, l), b = digits(c, n, l);
            auto val = [&](int dot) { return dot < l ? a[dot] : b[dot - l]; };
            bool ok = true;
            for (int x = 0; x < 2 * l; ++x) ok = ok && val(x) == val(d[x]);
            m[r][c] = ok ? 1 : 0;
        }
    return m;
}

// All perfect matchings by recursion on the smallest free dot.
inline void matchings(Mates& cur, std::vector<Mates>& out) {
    const auto it = std::find(cur.begin(), cur.end(), -1);
    if (it == cur.end()) {
        out.push_back(cur);
        return;
    }
    const int a = static_cast<int>(it - cur.begin());
    for (int b = a + 1; b < static_cast<int>(cur.size()); ++b)
        if (cur[b] == -1) {
            cur[a] = b;
            cur[b] = a;
            matchings(cur, out);
            cur[a] = cur[b] = -1;
        }
}
inline std::vector<Mates> all_matchings(int l) {
    Mates cur(static_cast<size_t>(2 * l), -1);
    std::vector<Mates> out;
    matchings(cur, out);
    return out;
}

}  // namespace oracle
