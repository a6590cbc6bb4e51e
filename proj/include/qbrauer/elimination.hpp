#pragma once

// Exact linear algebra over Q for algebra-span and commutant dimensions.

#include "qbrauer/matrix.hpp"

#include <map>
#include <span>
#include <vector>

namespace qbrauer {

/// Sparse vector over Q: (index, value) pairs sorted by index, no zeros.
using SparseVector = std::vector<std::pair<int, Rational>>;

/// Incrementally maintained reduced row echelon form.
class EchelonBasis {
public:
    explicit EchelonBasis(int width) : width_(width) {}

    /// Adds v to the span. Returns false when v was already in it.
    bool insert(SparseVector v);
    /// Reduces v modulo the current rows; zero result means v is in the span.
    SparseVector reduce(SparseVector v) const;

    int rank() const { return static_cast<int>(rows_.size()); }
    int width() const { return width_; }
    /// Basis of {x : row . x = 0 for every stored row}.
    std::vector<SparseVector> nullspace() const;

private:
    int width_;
    std::map<int, SparseVector> rows_;  // pivot column -> row with leading 1
};

SparseVector flatten(const RationalMatrix& m);
RationalMatrix unflatten(const SparseVector& v, int n);

/// Dimension of the unital algebra generated by `generators`. Throws
/// std::invalid_argument on an empty list or mismatched shapes.
int span_dimension(std::span<const RationalMatrix> generators);

/// A basis of the generated algebra, as produced by span_dimension().
std::vector<RationalMatrix> algebra_basis(std::span<const RationalMatrix> generators);

inline constexpr int kCommutantMaxDimension = 100;

/// Dimension of {X : XM = MX for every M}. Throws GuardError when the
/// matrices are larger than kCommutantMaxDimension.
///
/// A rank computed modulo a large prime bounds the answer from above; the
/// algebra generated by `members`, by the central matrices of the family and
/// by the identity bounds it from below. Exact elimination over Q runs only
/// when the bounds differ. Every member must commute with every M
/// (std::invalid_argument otherwise).
int commutant_dimension(std::span<const RationalMatrix> mats, std::span<const RationalMatrix> members = {});

/// Basis of the commutant; same guard as commutant_dimension().
std::vector<RationalMatrix> commutant_basis(std::span<const RationalMatrix> mats);

}  // namespace qbrauer
