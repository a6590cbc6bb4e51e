#pragma once

#include "qbrauer/ring.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace qbrauer {

/// (row, col, value) with 0-based indices.
template <class T>
struct Entry {
    int row = 0;
    int col = 0;
    T value;
};

/// Sparse matrix over an exact ring, stored row-compressed.
///
/// Entries inside a row are sorted by column and never zero, so the
/// flattened entry sequence is sorted by (row, col) without duplicates and
/// structural comparison is matrix equality.
template <class T>
class RingMatrix {
public:
    RingMatrix() : RingMatrix(0, 0) {}
    RingMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_start_(static_cast<size_t>(rows) + 1, 0) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    static RingMatrix identity(int n) {
        RingMatrix m(n, n);
        m.col_.reserve(static_cast<size_t>(n));
        m.val_.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            m.col_.push_back(i);
            m.val_.push_back(T(1));
            m.row_start_[static_cast<size_t>(i) + 1] = i + 1;
        }
        return m;
    }

    /// Sums duplicate coordinates and drops zeros.
    static RingMatrix from_entries(int rows, int cols, std::vector<Entry<T>> entries) {
        std::sort(entries.begin(), entries.end(),
                  [](const Entry<T>& a, const Entry<T>& b) { return std::tie(a.row, a.col) < std::tie(b.row, b.col); });
        RingMatrix m(rows, cols);
        m.col_.reserve(entries.size());
        m.val_.reserve(entries.size());
        size_t k = 0;
        for (int r = 0; r < rows; ++r) {
            while (k < entries.size() && entries[k].row == r) {
                const int c = entries[k].col;
                if (c < 0 || c >= cols) throw std::out_of_range("matrix entry column out of range");
                T sum = std::move(entries[k].value);
                for (++k; k < entries.size() && entries[k].row == r && entries[k].col == c; ++k) sum += entries[k].value;
                if (!is_zero(sum)) {
                    m.col_.push_back(c);
                    m.val_.push_back(std::move(sum));
                }
            }
            m.row_start_[static_cast<size_t>(r) + 1] = static_cast<int>(m.col_.size());
        }
        if (k != entries.size()) throw std::out_of_range("matrix entry row out of range");
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    size_t nonzeros() const { return val_.size(); }
    bool is_zero_matrix() const { return val_.empty(); }

    int row_begin(int r) const { return row_start_[static_cast<size_t>(r)]; }
    int row_end(int r) const { return row_start_[static_cast<size_t>(r) + 1]; }
    int col_at(int k) const { return col_[static_cast<size_t>(k)]; }
    const T& value_at(int k) const { return val_[static_cast<size_t>(k)]; }

    T at(int r, int c) const {
        auto first = col_.begin() + row_begin(r);
        auto last = col_.begin() + row_end(r);
        auto it = std::lower_bound(first, last, c);
        if (it == last || *it != c) return T{};
        return val_[static_cast<size_t>(it - col_.begin())];
    }

    std::vector<Entry<T>> entries() const {
        std::vector<Entry<T>> out;
        out.reserve(val_.size());
        for (int r = 0; r < rows_; ++r)
            for (int k = row_begin(r); k < row_end(r); ++k) out.push_back({r, col_at(k), value_at(k)});
        return out;
    }

    template <class F>
    RingMatrix map_values(F&& f) const {
        std::vector<Entry<T>> es = entries();
        for (auto& e : es) e.value = f(e.value);
        return from_entries(rows_, cols_, std::move(es));
    }

    RingMatrix transposed() const {
        std::vector<Entry<T>> es = entries();
        for (auto& e : es) std::swap(e.row, e.col);
        return from_entries(cols_, rows_, std::move(es));
    }

    RingMatrix& operator+=(const RingMatrix& rhs) { return *this = combine(*this, rhs, false); }
    RingMatrix& operator-=(const RingMatrix& rhs) { return *this = combine(*this, rhs, true); }

    friend RingMatrix operator+(const RingMatrix& a, const RingMatrix& b) { return combine(a, b, false); }
    friend RingMatrix operator-(const RingMatrix& a, const RingMatrix& b) { return combine(a, b, true); }
    friend RingMatrix operator*(const T& s, const RingMatrix& a) {
        if (is_zero(s)) return RingMatrix(a.rows_, a.cols_);
        return a.map_values([&](const T& v) { return T(s * v); });
    }

    /// Row-by-row sparse product with a dense accumulator.
    friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("matrix product dimension mismatch: " + a.shape() + " * " + b.shape());
        RingMatrix m(a.rows_, b.cols_);
        std::vector<T> acc(static_cast<size_t>(b.cols_));
        std::vector<char> touched(static_cast<size_t>(b.cols_), 0);
        std::vector<int> cols;
        for (int r = 0; r < a.rows_; ++r) {
            cols.clear();
            for (int ka = a.row_begin(r); ka < a.row_end(r); ++ka) {
                const int mid = a.col_at(ka);
                const T& av = a.value_at(ka);
                for (int kb = b.row_begin(mid); kb < b.row_end(mid); ++kb) {
                    const auto c = static_cast<size_t>(b.col_at(kb));
                    if (!touched[c]) {
                        touched[c] = 1;
                        cols.push_back(static_cast<int>(c));
                    }
                    add_product(acc[c], av, b.value_at(kb));
                }
            }
            std::sort(cols.begin(), cols.end());
            for (int c : cols) {
                auto& v = acc[static_cast<size_t>(c)];
                if (!is_zero(v)) {
                    m.col_.push_back(c);
                    m.val_.push_back(std::move(v));
                }
                v = T{};
                touched[static_cast<size_t>(c)] = 0;
            }
            m.row_start_[static_cast<size_t>(r) + 1] = static_cast<int>(m.col_.size());
        }
        return m;
    }

    friend bool operator==(const RingMatrix&, const RingMatrix&) = default;

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
    static void add_product(T& acc, const T& a, const T& b) {
        if constexpr (requires { acc.add_product(a, b); })
            acc.add_product(a, b);
        else
            acc += a * b;
    }

    static RingMatrix combine(const RingMatrix& a, const RingMatrix& b, bool subtract) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix sum dimension mismatch: " + a.shape() + " vs " + b.shape());
        RingMatrix m(a.rows_, a.cols_);
        m.col_.reserve(a.val_.size() + b.val_.size());
        m.val_.reserve(a.val_.size() + b.val_.size());
        for (int r = 0; r < a.rows_; ++r) {
            int ka = a.row_begin(r), kb = b.row_begin(r);
            const int ea = a.row_end(r), eb = b.row_end(r);
            while (ka < ea || kb < eb) {
                if (kb == eb || (ka < ea && a.col_at(ka) < b.col_at(kb))) {
                    m.col_.push_back(a.col_at(ka));
                    m.val_.push_back(a.value_at(ka));
                    ++ka;
                } else if (ka == ea || b.col_at(kb) < a.col_at(ka)) {
                    m.col_.push_back(b.col_at(kb));
                    m.val_.push_back(subtract ? T(-b.value_at(kb)) : b.value_at(kb));
                    ++kb;
                } else {
                    T v = subtract ? T(a.value_at(ka) - b.value_at(kb)) : T(a.value_at(ka) + b.value_at(kb));
                    if (!is_zero(v)) {
                        m.col_.push_back(a.col_at(ka));
                        m.val_.push_back(std::move(v));
                    }
                    ++ka;
                    ++kb;
                }
            }
            m.row_start_[static_cast<size_t>(r) + 1] = static_cast<int>(m.col_.size());
        }
        return m;
    }

    int rows_;
    int cols_;
    std::vector<int> row_start_;
    std::vector<int> col_;
    std::vector<T> val_;
};

using PolyMatrix = RingMatrix<LaurentPoly>;
using RationalMatrix = RingMatrix<Rational>;

}  // namespace qbrauer
