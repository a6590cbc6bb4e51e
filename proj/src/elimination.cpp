#include "qbrauer/elimination.hpp"

#include "qbrauer/errors.hpp"

#include "qbrauer/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <stdexcept>

namespace qbrauer {

namespace {

// a - s * b
SparseVector sub_scaled(const SparseVector& a, const Rational& s, const SparseVector& b) {
    SparseVector out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            out.push_back(*ia++);
        } else if (ia == a.end() || ib->first < ia->first) {
            out.emplace_back(ib->first, Rational(-s * ib->second));
            ++ib;
        } else {
            Rational v = ia->second - s * ib->second;
            if (v != 0) out.emplace_back(ia->first, std::move(v));
            ++ia;
            ++ib;
        }
    }
    return out;
}

void check_square_family(std::span<const RationalMatrix> mats) {
    if (mats.empty()) throw std::invalid_argument("empty matrix list");
    for (const auto& m : mats)
        if (!m.is_square() || m.rows() != mats.front().rows())
            throw std::invalid_argument("matrices must be square and of equal size");
}

}  // namespace

SparseVector EchelonBasis::reduce(SparseVector v) const {
    // Rows are fully reduced, so subtracting one of them never creates an
    // entry in another pivot column; the pivot coefficients of v can be read
    // off up front.
    std::vector<std::pair<const SparseVector*, Rational>> steps;
    for (const auto& [c, val] : v) {
        auto it = rows_.find(c);
        if (it != rows_.end()) steps.emplace_back(&it->second, val);
    }
    for (const auto& [row, coef] : steps) v = sub_scaled(v, coef, *row);
    return v;
}

bool EchelonBasis::insert(SparseVector v) {
    for (const auto& [c, val] : v)
        if (c < 0 || c >= width_) throw std::out_of_range("vector index outside echelon width");
    v = reduce(std::move(v));
    if (v.empty()) return false;
    const int pivot = v.front().first;
    const Rational lead = v.front().second;
    for (auto& [c, val] : v) val /= lead;
    for (auto& [p, row] : rows_) {
        auto it = std::lower_bound(row.begin(), row.end(), pivot, [](const auto& e, int c) { return e.first < c; });
        if (it != row.end() && it->first == pivot) {
            Rational coef = it->second;
            row = sub_scaled(row, coef, v);
        }
    }
    rows_.emplace(pivot, std::move(v));
    return true;
}

std::vector<SparseVector> EchelonBasis::nullspace() const {
    std::vector<SparseVector> basis;
    for (int f = 0; f < width_; ++f) {
        if (rows_.count(f)) continue;
        SparseVector x;
        for (const auto& [p, row] : rows_) {
            auto it = std::lower_bound(row.begin(), row.end(), f, [](const auto& e, int c) { return e.first < c; });
            if (it != row.end() && it->first == f) x.emplace_back(p, Rational(-it->second));
        }
        x.emplace_back(f, Rational(1));
        std::sort(x.begin(), x.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        basis.push_back(std::move(x));
    }
    return basis;
}

SparseVector flatten(const RationalMatrix& m) {
    SparseVector v;
    v.reserve(m.nonzeros());
    for (int r = 0; r < m.rows(); ++r)
        for (int k = m.row_begin(r); k < m.row_end(r); ++k) v.emplace_back(r * m.cols() + m.col_at(k), m.value_at(k));
    return v;
}

RationalMatrix unflatten(const SparseVector& v, int n) {
    std::vector<Entry<Rational>> es;
    es.reserve(v.size());
    for (const auto& [idx, val] : v) es.push_back({idx / n, idx % n, val});
    return RationalMatrix::from_entries(n, n, std::move(es));
}

std::vector<RationalMatrix> algebra_basis(std::span<const RationalMatrix> generators) {
    check_square_family(generators);
    const int n = generators.front().rows();
    EchelonBasis echelon(n * n);
    std::vector<RationalMatrix> basis;
    auto consider = [&](RationalMatrix m) {
        if (echelon.insert(flatten(m))) basis.push_back(std::move(m));
    };
    consider(RationalMatrix::identity(n));
    for (const auto& g : generators) consider(g);
    // Every word in the generators is g * (shorter word), so closing the
    // span under left multiplication by generators yields the algebra.
    for (size_t k = 0; k < basis.size(); ++k)
        for (const auto& g : generators) consider(g * basis[k]);
    return basis;
}

int span_dimension(std::span<const RationalMatrix> generators) {
    return static_cast<int>(algebra_basis(generators).size());
}

namespace {

void check_commutant_guard(std::span<const RationalMatrix> mats) {
    check_square_family(mats);
    const int n = mats.front().rows();
    if (n > kCommutantMaxDimension)
        throw GuardError("commutant of " + std::to_string(n) + "-dimensional operators exceeds guard " +
                         std::to_string(kCommutantMaxDimension));
}

// Rows of XM - MX = 0 in the unknowns X_ik at index i * n + k.
std::vector<SparseVector> commutant_rows(std::span<const RationalMatrix> mats) {
    const int n = mats.front().rows();
    std::vector<SparseVector> rows;
    for (const auto& m : mats) {
        const RationalMatrix mt = m.transposed();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::map<int, Rational> row;
                for (int e = mt.row_begin(j); e < mt.row_end(j); ++e) row[i * n + mt.col_at(e)] += mt.value_at(e);
                for (int e = m.row_begin(i); e < m.row_end(i); ++e) row[m.col_at(e) * n + j] -= m.value_at(e);
                SparseVector v;
                for (auto& [c, val] : row)
                    if (val != 0) v.emplace_back(c, std::move(val));
                if (!v.empty()) rows.push_back(std::move(v));
            }
    }
    return rows;
}

// Rank by forward elimination only; rows are never back-reduced, which keeps
// fill-in low.
class ForwardEchelon {
public:
    void insert(SparseVector v) {
        size_t pos = 0;
        while (pos < v.size()) {
            auto it = rows_.find(v[pos].first);
            if (it == rows_.end()) {
                ++pos;
                continue;
            }
            const Rational coef = v[pos].second;
            SparseVector tail(v.begin() + static_cast<std::ptrdiff_t>(pos), v.end());
            tail = sub_scaled(tail, coef, it->second);
            v.resize(pos);
            v.insert(v.end(), std::make_move_iterator(tail.begin()), std::make_move_iterator(tail.end()));
        }
        if (v.empty()) return;
        // Pivot on the first entry that is not yet a pivot column.
        size_t lead = 0;
        while (rows_.count(v[lead].first)) ++lead;
        SparseVector row(v.begin() + static_cast<std::ptrdiff_t>(lead), v.end());
        const Rational inv = 1 / row.front().second;
        for (auto& [c, val] : row) val *= inv;
        rows_.emplace(row.front().first, std::move(row));
    }
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    std::map<int, SparseVector> rows_;
};

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

int exact_commutant_dimension(std::span<const RationalMatrix> mats) {
    const int n = mats.front().rows();
    std::vector<SparseVector> rows = commutant_rows(mats);
    // Unknowns that never share an equation form independent blocks.
    std::vector<int> parent(static_cast<size_t>(n) * n);
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    for (const auto& v : rows)
        for (const auto& [c, val] : v) parent[find_root(parent, c)] = find_root(parent, v.front().first);
    std::map<int, ForwardEchelon> blocks;
    for (auto& v : rows) {
        const int root = find_root(parent, v.front().first);
        blocks[root].insert(std::move(v));
    }
    int rank = 0;
    for (const auto& [root, echelon] : blocks) rank += echelon.rank();
    return n * n - rank;
}

// Arithmetic modulo a prime below 2^63.
struct PrimeField {
    std::uint64_t p;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + (p - b); }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return sub(a, p - b); }
    std::uint64_t inv(std::uint64_t a) const {
        std::uint64_t r = 1, e = p - 2;
        for (; e; e >>= 1, a = mul(a, a))
            if (e & 1) r = mul(r, a);
        return r;
    }
    std::uint64_t reduce(const BigInt& z) const {
        BigInt m = z % p;
        if (m < 0) m += p;
        return static_cast<std::uint64_t>(m);
    }
    // Empty when p divides the denominator.
    std::optional<std::uint64_t> reduce(const Rational& x) const {
        const std::uint64_t d = reduce(denominator(x));
        if (d == 0) return std::nullopt;
        return mul(reduce(numerator(x)), inv(d));
    }
};

using ModVector = std::vector<std::pair<int, std::uint64_t>>;

// Rank of the commutant equations over F_p. Rank can only drop under
// reduction, so n^2 minus this rank bounds the rational commutant from above.
int modular_rank(std::span<const RationalMatrix> mats, const PrimeField& f, bool& bad_prime) {
    const int n = mats.front().rows();
    struct ModEntry {
        int col;
        std::uint64_t value;
    };
    std::vector<std::vector<std::vector<ModEntry>>> by_row, by_col;
    for (const auto& m : mats) {
        std::vector<std::vector<ModEntry>> rows(n), cols(n);
        for (int r = 0; r < n; ++r)
            for (int k = m.row_begin(r); k < m.row_end(r); ++k) {
                const auto v = f.reduce(m.value_at(k));
                if (!v) {
                    bad_prime = true;
                    return 0;
                }
                if (*v == 0) continue;
                rows[r].push_back({m.col_at(k), *v});
                cols[m.col_at(k)].push_back({r, *v});
            }
        by_row.push_back(std::move(rows));
        by_col.push_back(std::move(cols));
    }
    std::unordered_map<int, ModVector> pivots;
    std::map<int, std::uint64_t> acc;
    ModVector v, out;
    for (size_t g = 0; g < mats.size(); ++g)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                acc.clear();
                for (const auto& e : by_col[g][j]) acc[i * n + e.col] = f.add(acc[i * n + e.col], e.value);
                for (const auto& e : by_row[g][i]) acc[e.col * n + j] = f.sub(acc[e.col * n + j], e.value);
                v.clear();
                for (const auto& [c, x] : acc)
                    if (x) v.emplace_back(c, x);
                size_t pos = 0;
                while (pos < v.size()) {
                    auto it = pivots.find(v[pos].first);
                    if (it == pivots.end()) {
                        ++pos;
                        continue;
                    }
                    const std::uint64_t coef = v[pos].second;
                    const ModVector& b = it->second;
                    out.assign(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(pos));
                    size_t ia = pos, ib = 0;
                    while (ia < v.size() || ib < b.size()) {
                        if (ib == b.size() || (ia < v.size() && v[ia].first < b[ib].first)) {
                            out.push_back(v[ia++]);
                        } else if (ia == v.size() || b[ib].first < v[ia].first) {
                            out.emplace_back(b[ib].first, f.sub(0, f.mul(coef, b[ib].second)));
                            ++ib;
                        } else {
                            const std::uint64_t y = f.sub(v[ia].second, f.mul(coef, b[ib].second));
                            if (y) out.emplace_back(v[ia].first, y);
                            ++ia;
                            ++ib;
                        }
                    }
                    v.swap(out);
                }
                if (v.empty()) continue;
                size_t lead = 0;
                while (pivots.count(v[lead].first)) ++lead;
                ModVector row(v.begin() + static_cast<std::ptrdiff_t>(lead), v.end());
                const std::uint64_t inv = f.inv(row.front().second);
                for (auto& e : row) e.second = f.mul(e.second, inv);
                const int col = row.front().first;
                pivots.emplace(col, std::move(row));
            }
    return static_cast<int>(pivots.size());
}

int modular_commutant_rank(std::span<const RationalMatrix> mats) {
    for (const std::uint64_t p : {9223372036854775783ULL, 4611686018427387847ULL, 2305843009213693951ULL}) {
        bool bad = false;
        const int r = modular_rank(mats, PrimeField{p}, bad);
        if (!bad) return r;
    }
    // Every candidate prime divides a denominator; the exact count is the only option.
    const int n = mats.front().rows();
    return n * n - exact_commutant_dimension(mats);
}

EchelonBasis commutant_equations(std::span<const RationalMatrix> mats) {
    check_commutant_guard(mats);
    const int n = mats.front().rows();
    EchelonBasis echelon(n * n);
    for (auto& v : commutant_rows(mats)) echelon.insert(std::move(v));
    return echelon;
}

}  // namespace

int commutant_dimension(std::span<const RationalMatrix> mats, std::span<const RationalMatrix> members) {
    check_commutant_guard(mats);
    const int n = mats.front().rows();
    const int upper = n * n - modular_commutant_rank(mats);

    std::vector<RationalMatrix> known(members.begin(), members.end());
    for (const auto& m : known)
        for (const auto& g : mats)
            if (m.rows() != n || !m.is_square() || !commutator(m, g).is_zero_matrix())
                throw std::invalid_argument("commutant member does not commute with the family");
    for (const auto& g : mats) {
        bool central = true;
        for (const auto& h : mats) central = central && commutator(g, h).is_zero_matrix();
        if (central) known.push_back(g);
    }
    known.push_back(RationalMatrix::identity(n));
    if (span_dimension(known) == upper) return upper;
    return exact_commutant_dimension(mats);
}

std::vector<RationalMatrix> commutant_basis(std::span<const RationalMatrix> mats) {
    EchelonBasis echelon = commutant_equations(mats);
    const int n = mats.front().rows();
    std::vector<RationalMatrix> out;
    for (const auto& v : echelon.nullspace()) out.push_back(unflatten(v, n));
    return out;
}

}  // namespace qbrauer
