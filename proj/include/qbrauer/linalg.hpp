#pragma once

// Operators on tensor powers of C^n: leg spaces, Kronecker products, leg
// embeddings, partial transposes, specialisation and the text interchange
// format.

#include "qbrauer/matrix.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace qbrauer {

/// Tensor power of C^n with legs labelled first_label, first_label+1, ...
/// from left to right. The leftmost leg is the most significant digit of a
/// basis index, so (a_1, ..., a_m) with a_i in 1..n sits at
/// sum (a_i - 1) n^{m-i}.
class LegSpace {
public:
    LegSpace(int n, int num_legs, int first_label = 1);

    int n() const { return n_; }
    int num_legs() const { return num_legs_; }
    int first_label() const { return first_label_; }
    int dimension() const { return dim_; }
    bool has_leg(int label) const { return label >= first_label_ && label < first_label_ + num_legs_; }
    /// 0-based position from the left; throws std::out_of_range for unknown labels.
    int position(int label) const;

    /// 0-based digits of a basis index, leftmost leg first.
    std::vector<int> digits(int index) const;
    int index(std::span<const int> digits) const;

private:
    int n_;
    int num_legs_;
    int first_label_;
    int dim_;
};

/// Matrix unit E_ij of size n with 1-based i, j.
PolyMatrix matrix_unit(int n, int i, int j);

template <class T>
RingMatrix<T> kron(const RingMatrix<T>& a, const RingMatrix<T>& b) {
    std::vector<Entry<T>> out;
    out.reserve(a.nonzeros() * b.nonzeros());
    for (const auto& x : a.entries())
        for (const auto& y : b.entries())
            out.push_back({x.row * b.rows() + y.row, x.col * b.cols() + y.col, T(x.value * y.value)});
    return RingMatrix<T>::from_entries(a.rows() * b.rows(), a.cols() * b.cols(), std::move(out));
}

/// The operator acting as `op` on the listed legs (op's first tensor factor
/// on legs[0], and so on) and as the identity on every other leg of `space`.
PolyMatrix embed(const PolyMatrix& op, std::span<const int> legs, const LegSpace& space);

/// Two-leg case of embed(). leg_embed(A, i, j) with i > j places A's first
/// factor on leg i, so leg_embed(P, 1, 2) == leg_embed(P, 2, 1).
PolyMatrix leg_embed(const PolyMatrix& op2, int leg_i, int leg_j, const LegSpace& space);

/// Single-leg embedding, used for diagonal operators such as D_a.
PolyMatrix leg_embed(const PolyMatrix& op1, int leg, const LegSpace& space);

enum class TransposeFactor { first, second };

/// Transpose an operator on C^n (x) C^n in one tensor factor: the coefficient
/// of E_ij (x) E_rs moves to E_ji (x) E_rs (first) or E_ij (x) E_sr (second).
template <class T>
RingMatrix<T> partial_transpose(const RingMatrix<T>& a, TransposeFactor which);

/// Residual AB - BA, zero exactly when the operators commute.
template <class T>
RingMatrix<T> commutator(const RingMatrix<T>& a, const RingMatrix<T>& b) {
    if (!a.is_square() || a.rows() != b.rows() || !b.is_square())
        throw std::invalid_argument("commutator needs equal square matrices, got " + a.shape() + " and " + b.shape());
    return a * b - b * a;
}

struct CommuteResult {
    bool commutes = false;
    PolyMatrix residual;
};

CommuteResult commutes(const PolyMatrix& a, const PolyMatrix& b);

/// Entrywise q -> at.
RationalMatrix specialize(const PolyMatrix& m, const Rational& at);

/// Rational matrix with integer entries viewed as constant polynomials.
PolyMatrix to_poly_matrix(const RationalMatrix& m);

/// Block (bi, bj) (0-based) of a matrix split into a grid of block x block
/// pieces.
template <class T>
RingMatrix<T> block(const RingMatrix<T>& m, int block_size, int bi, int bj) {
    std::vector<Entry<T>> out;
    for (int r = bi * block_size; r < (bi + 1) * block_size; ++r)
        for (int k = m.row_begin(r); k < m.row_end(r); ++k) {
            const int c = m.col_at(k);
            if (c >= bj * block_size && c < (bj + 1) * block_size)
                out.push_back({r - bi * block_size, c - bj * block_size, m.value_at(k)});
        }
    return RingMatrix<T>::from_entries(block_size, block_size, std::move(out));
}

/// Interchange file: header "qbrauer-matrix v1 rows=<m> cols=<m> ring=<laurent|rational>"
/// and one "r c <value>" line per nonzero, 1-based, sorted by (r, c).
using AnyMatrix = std::variant<PolyMatrix, RationalMatrix>;

void write_matrix(std::ostream& out, const PolyMatrix& m);
void write_matrix(std::ostream& out, const RationalMatrix& m);
std::string format_matrix(const AnyMatrix& m);
/// Throws std::invalid_argument on malformed input.
AnyMatrix read_matrix(std::istream& in);
AnyMatrix parse_matrix(const std::string& text);

/// Up to `limit` nonzero entries rendered as "(r,c)=value", 1-based.
template <class T>
std::string sample_entries(const RingMatrix<T>& m, size_t limit = 3) {
    std::string out;
    size_t shown = 0;
    for (int r = 0; r < m.rows() && shown < limit; ++r)
        for (int k = m.row_begin(r); k < m.row_end(r) && shown < limit; ++k, ++shown) {
            if (!out.empty()) out += "; ";
            out += "(" + std::to_string(r + 1) + "," + std::to_string(m.col_at(k) + 1) + ")=" + to_string(m.value_at(k));
        }
    return out;
}

}  // namespace qbrauer
