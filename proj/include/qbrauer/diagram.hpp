#pragma once

// The classical Brauer algebra: diagrams on 2l dots, concatenation with loop
// counting, formal linear combinations, and the action on (C^n)^{(x) l}.

#include "qbrauer/linalg.hpp"

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qbrauer {

/// Perfect matching on the dots T1..Tl (top row) and B1..Bl (bottom row).
///
/// Dots are numbered 0..2l-1 with T_i -> i-1 and B_i -> l+i-1, which is the
/// total order T1 < ... < Tl < B1 < ... < Bl used for canonical edge lists.
class BrauerDiagram {
public:
    static BrauerDiagram identity(int l);
    /// Throws std::invalid_argument unless the pairs form a perfect matching.
    static BrauerDiagram from_edges(int l, const std::vector<std::pair<int, int>>& edges);
    /// T_i joined to B_{perm[i-1]}; perm holds 1-based images.
    static BrauerDiagram from_permutation(const std::vector<int>& perm);
    /// Inverse of to_string(): "l=3; T1-B2, T2-B1, T3-B3".
    static BrauerDiagram parse(std::string_view text);

    int size() const { return l_; }
    int mate(int dot) const { return mate_[static_cast<size_t>(dot)]; }
    /// Canonical edges, smaller endpoint first, sorted.
    std::vector<std::pair<int, int>> edges() const;
    bool is_permutation() const;
    std::string to_string() const;

    friend auto operator<=>(const BrauerDiagram&, const BrauerDiagram&) = default;

private:
    BrauerDiagram(int l, std::vector<int> mate) : l_(l), mate_(std::move(mate)) {}

    int l_ = 0;
    std::vector<int> mate_;
};

struct Composite {
    int loops = 0;
    BrauerDiagram diagram;
};

/// d1 placed above d2: bottom row of d1 glued to the top row of d2. Closed
/// loops in the middle row are removed and counted.
Composite compose(const BrauerDiagram& d1, const BrauerDiagram& d2);

enum class GeneratorKind { sigma, e };

/// sigma_i crosses strands i and i+1; e_i caps them on both rows.
BrauerDiagram brauer_generator(GeneratorKind kind, int i, int l);

inline constexpr int kMaxEnumeratedDiagramSize = 6;

/// All (2l-1)!! diagrams in canonical order. Throws GuardError past l = 6.
std::vector<BrauerDiagram> enumerate_diagrams(int l);

/// Entry ((a_1..a_l), (b_1..b_l)) is the product of Kronecker deltas given by
/// the edges: top-top (i,j) -> [a_i = a_j], bottom-bottom -> [b_i = b_j],
/// T_i-B_j -> [a_i = b_j].
PolyMatrix diagram_to_operator(const BrauerDiagram& d, int n);

/// Linear combination of l-diagrams with coefficients in T.
template <class T>
class DiagramElement {
public:
    explicit DiagramElement(int l) : l_(l) {}
    DiagramElement(const BrauerDiagram& d, T coef = T(1)) : l_(d.size()) {
        if (!is_zero(coef)) terms_.emplace(d, std::move(coef));
    }

    int size() const { return l_; }
    const std::map<BrauerDiagram, T>& terms() const { return terms_; }
    bool is_zero_element() const { return terms_.empty(); }

    DiagramElement& add(const BrauerDiagram& d, const T& coef) {
        if (d.size() != l_) throw std::invalid_argument("diagram size mismatch");
        auto [it, inserted] = terms_.try_emplace(d, coef);
        if (!inserted) {
            it->second += coef;
            if (is_zero(it->second)) terms_.erase(it);
        } else if (is_zero(it->second)) {
            terms_.erase(it);
        }
        return *this;
    }

    friend DiagramElement operator+(DiagramElement a, const DiagramElement& b) {
        for (const auto& [d, c] : b.terms_) a.add(d, c);
        return a;
    }
    friend DiagramElement operator-(DiagramElement a, const DiagramElement& b) {
        for (const auto& [d, c] : b.terms_) a.add(d, T(-c));
        return a;
    }
    friend DiagramElement operator*(const T& s, const DiagramElement& a) {
        DiagramElement out(a.l_);
        for (const auto& [d, c] : a.terms_) out.add(d, T(s * c));
        return out;
    }
    friend bool operator==(const DiagramElement&, const DiagramElement&) = default;

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [d, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + qbrauer::to_string(c) + ")[" + d.to_string() + "]";
        }
        return out;
    }

private:
    int l_;
    std::map<BrauerDiagram, T> terms_;
};

/// Bilinear extension of compose(), each loop contributing a factor eta.
template <class T>
DiagramElement<T> multiply(const DiagramElement<T>& x, const DiagramElement<T>& y, const T& eta) {
    if (x.size() != y.size()) throw std::invalid_argument("diagram element size mismatch");
    DiagramElement<T> out(x.size());
    std::vector<T> eta_pow{T(1)};
    for (const auto& [dx, cx] : x.terms())
        for (const auto& [dy, cy] : y.terms()) {
            Composite c = compose(dx, dy);
            while (static_cast<int>(eta_pow.size()) <= c.loops) eta_pow.push_back(T(eta_pow.back() * eta));
            out.add(c.diagram, T(cx * cy * eta_pow[static_cast<size_t>(c.loops)]));
        }
    return out;
}

}  // namespace qbrauer
