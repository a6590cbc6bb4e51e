#include "qbrauer/linalg.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qbrauer {

LegSpace::LegSpace(int n, int num_legs, int first_label) : n_(n), num_legs_(num_legs), first_label_(first_label), dim_(1) {
    if (n < 1 || num_legs < 1) throw std::invalid_argument("leg space needs n >= 1 and at least one leg");
    for (int i = 0; i < num_legs; ++i) {
        if (dim_ > (1 << 24) / n) throw std::invalid_argument("leg space dimension too large");
        dim_ *= n;
    }
}

int LegSpace::position(int label) const {
    if (!has_leg(label))
        throw std::out_of_range("leg " + std::to_string(label) + " not in space with legs " + std::to_string(first_label_) +
                                ".." + std::to_string(first_label_ + num_legs_ - 1));
    return label - first_label_;
}

std::vector<int> LegSpace::digits(int index) const {
    std::vector<int> d(static_cast<size_t>(num_legs_));
    for (int p = num_legs_ - 1; p >= 0; --p) {
        d[static_cast<size_t>(p)] = index % n_;
        index /= n_;
    }
    return d;
}

int LegSpace::index(std::span<const int> digits) const {
    int idx = 0;
    for (int d : digits) idx = idx * n_ + d;
    return idx;
}

PolyMatrix matrix_unit(int n, int i, int j) {
    if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("matrix unit index out of range");
    return PolyMatrix::from_entries(n, n, {{i - 1, j - 1, LaurentPoly(1)}});
}

PolyMatrix embed(const PolyMatrix& op, std::span<const int> legs, const LegSpace& space) {
    const int k = static_cast<int>(legs.size());
    int local_dim = 1;
    for (int t = 0; t < k; ++t) local_dim *= space.n();
    if (op.rows() != local_dim || op.cols() != local_dim)
        throw std::invalid_argument("operator of shape " + op.shape() + " does not act on " + std::to_string(k) +
                                    " legs of dimension " + std::to_string(space.n()));
    std::vector<int> pos;
    for (int label : legs) {
        int p = space.position(label);
        for (int seen : pos)
            if (seen == p) throw std::invalid_argument("repeated leg label " + std::to_string(label));
        pos.push_back(p);
    }

    // Column access to op: row lc of op^T lists op's entries in column lc.
    const PolyMatrix op_t = op.transposed();
    const int n = space.n();
    std::vector<Entry<LaurentPoly>> out;
    out.reserve(static_cast<size_t>(space.dimension()) * op.nonzeros() / static_cast<size_t>(local_dim) + 1);
    for (int col = 0; col < space.dimension(); ++col) {
        std::vector<int> d = space.digits(col);
        int lc = 0;
        for (int t = 0; t < k; ++t) lc = lc * n + d[static_cast<size_t>(pos[static_cast<size_t>(t)])];
        for (int e = op_t.row_begin(lc); e < op_t.row_end(lc); ++e) {
            int lr = op_t.col_at(e);
            std::vector<int> rd = d;
            for (int t = k - 1; t >= 0; --t) {
                rd[static_cast<size_t>(pos[static_cast<size_t>(t)])] = lr % n;
                lr /= n;
            }
            out.push_back({space.index(rd), col, op_t.value_at(e)});
        }
    }
    return PolyMatrix::from_entries(space.dimension(), space.dimension(), std::move(out));
}

PolyMatrix leg_embed(const PolyMatrix& op2, int leg_i, int leg_j, const LegSpace& space) {
    const int legs[2] = {leg_i, leg_j};
    return embed(op2, legs, space);
}

PolyMatrix leg_embed(const PolyMatrix& op1, int leg, const LegSpace& space) {
    const int legs[1] = {leg};
    return embed(op1, legs, space);
}

template <class T>
RingMatrix<T> partial_transpose(const RingMatrix<T>& a, TransposeFactor which) {
    const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(a.rows()))));
    if (!a.is_square() || n * n != a.rows())
        throw std::invalid_argument("partial transpose needs an n^2 x n^2 operator, got " + a.shape());
    std::vector<Entry<T>> es = a.entries();
    for (auto& e : es) {
        // row = (i, r), col = (j, s) for the coefficient of E_ij (x) E_rs.
        int i = e.row / n, r = e.row % n, j = e.col / n, s = e.col % n;
        if (which == TransposeFactor::first)
            std::swap(i, j);
        else
            std::swap(r, s);
        e.row = i * n + r;
        e.col = j * n + s;
    }
    return RingMatrix<T>::from_entries(a.rows(), a.cols(), std::move(es));
}

template PolyMatrix partial_transpose(const PolyMatrix&, TransposeFactor);
template RationalMatrix partial_transpose(const RationalMatrix&, TransposeFactor);

CommuteResult commutes(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix residual = commutator(a, b);
    return {residual.is_zero_matrix(), std::move(residual)};
}

RationalMatrix specialize(const PolyMatrix& m, const Rational& at) {
    std::vector<Entry<Rational>> out;
    out.reserve(m.nonzeros());
    for (const auto& e : m.entries()) out.push_back({e.row, e.col, e.value.evaluate(at)});
    return RationalMatrix::from_entries(m.rows(), m.cols(), std::move(out));
}

PolyMatrix to_poly_matrix(const RationalMatrix& m) {
    std::vector<Entry<LaurentPoly>> out;
    for (const auto& e : m.entries()) {
        if (boost::multiprecision::denominator(e.value) != 1)
            throw std::invalid_argument("non-integer entry cannot become a Laurent polynomial");
        out.push_back({e.row, e.col, LaurentPoly(boost::multiprecision::numerator(e.value), 0)});
    }
    return PolyMatrix::from_entries(m.rows(), m.cols(), std::move(out));
}

namespace {

template <class T>
void write_impl(std::ostream& out, const RingMatrix<T>& m, const char* ring) {
    out << "qbrauer-matrix v1 rows=" << m.rows() << " cols=" << m.cols() << " ring=" << ring << '\n';
    for (int r = 0; r < m.rows(); ++r)
        for (int k = m.row_begin(r); k < m.row_end(r); ++k)
            out << r + 1 << ' ' << m.col_at(k) + 1 << ' ' << to_string(m.value_at(k)) << '\n';
}

int header_field(const std::string& token, const std::string& key) {
    if (token.rfind(key + "=", 0) != 0) throw std::invalid_argument("expected " + key + "=<int> in matrix header");
    try {
        size_t used = 0;
        int v = std::stoi(token.substr(key.size() + 1), &used);
        if (used != token.size() - key.size() - 1 || v < 0) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad " + key + " in matrix header");
    }
}

template <class T, class Parse>
RingMatrix<T> read_entries(std::istream& in, int rows, int cols, Parse parse) {
    std::vector<Entry<T>> es;
    std::string line;
    int prev_r = 0, prev_c = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int r = 0, c = 0;
        if (!(ls >> r >> c)) throw std::invalid_argument("bad matrix entry line: " + line);
        std::string rest;
        std::getline(ls, rest);
        if (r < 1 || r > rows || c < 1 || c > cols) throw std::invalid_argument("matrix entry out of range: " + line);
        if (r < prev_r || (r == prev_r && c <= prev_c)) throw std::invalid_argument("matrix entries not sorted: " + line);
        prev_r = r;
        prev_c = c;
        T v = parse(rest);
        if (is_zero(v)) throw std::invalid_argument("zero entry stored: " + line);
        es.push_back({r - 1, c - 1, std::move(v)});
    }
    return RingMatrix<T>::from_entries(rows, cols, std::move(es));
}

}  // namespace

void write_matrix(std::ostream& out, const PolyMatrix& m) { write_impl(out, m, "laurent"); }
void write_matrix(std::ostream& out, const RationalMatrix& m) { write_impl(out, m, "rational"); }

std::string format_matrix(const AnyMatrix& m) {
    std::ostringstream os;
    std::visit([&](const auto& mat) { write_matrix(os, mat); }, m);
    return os.str();
}

AnyMatrix read_matrix(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw std::invalid_argument("empty matrix file");
    std::istringstream hs(header);
    std::string magic, version, rows_tok, cols_tok, ring_tok, extra;
    if (!(hs >> magic >> version >> rows_tok >> cols_tok >> ring_tok) || (hs >> extra) || magic != "qbrauer-matrix" ||
        version != "v1")
        throw std::invalid_argument("bad matrix header: " + header);
    const int rows = header_field(rows_tok, "rows");
    const int cols = header_field(cols_tok, "cols");
    if (ring_tok == "ring=laurent")
        return read_entries<LaurentPoly>(in, rows, cols, [](const std::string& s) { return LaurentPoly::parse(s); });
    if (ring_tok == "ring=rational")
        return read_entries<Rational>(in, rows, cols, [](const std::string& s) { return parse_rational(s); });
    throw std::invalid_argument("unknown ring in matrix header: " + ring_tok);
}

AnyMatrix parse_matrix(const std::string& text) {
    std::istringstream is(text);
    return read_matrix(is);
}

}  // namespace qbrauer
