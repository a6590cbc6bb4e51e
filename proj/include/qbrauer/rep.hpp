#pragma once

// Images of the generators of the quantum Brauer algebra on (C^n)^{(x) l}
// with z = q^n, word evaluation, and the action of the s_ij on the space
// with one auxiliary leg.

#include "qbrauer/linalg.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qbrauer {

struct Letter {
    enum class Kind { sigma, sigma_inv, e, tau, tau_inv };
    Kind kind;
    int index = 0;  // unused for tau letters

    friend bool operator==(const Letter&, const Letter&) = default;
};

/// Word in sigma_i^{+-1}, e_i, tau^{+-1}. Text form: "s1 s2^-1 e3 tau tau^-1";
/// the empty string is the empty word.
class GeneratorWord {
public:
    GeneratorWord(int l, std::vector<Letter> letters);
    static GeneratorWord parse(int l, std::string_view text);

    int size() const { return l_; }
    std::span<const Letter> letters() const { return letters_; }
    std::string to_string() const;

    friend GeneratorWord operator*(const GeneratorWord& a, const GeneratorWord& b);
    friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;

private:
    int l_;
    std::vector<Letter> letters_;
};

inline constexpr int kMaxRepDimension = 4096;

/// Generator images for fixed (n, l), computed once at construction and
/// read-only afterwards.
///
/// sigma_i -> Rcheck on legs (i, i+1); e_{l-1} -> Q on legs (l-1, l); lower
/// e_i follow e_i = sigma_{i+1} sigma_i e_{i+1} sigma_i^-1 sigma_{i+1}^-1.
/// z_exponent only changes the scalars z, z^-1 and the loop value reported
/// to relation checks; the images themselves always use Q at n.
class RepContext {
public:
    RepContext(int n, int l, int z_exponent);
    RepContext(int n, int l) : RepContext(n, l, n) {}

    int n() const { return n_; }
    int l() const { return l_; }
    int z_exponent() const { return z_exponent_; }
    int dimension() const { return space_.dimension(); }
    const LegSpace& space() const { return space_; }

    const PolyMatrix& identity() const { return identity_; }
    const PolyMatrix& sigma(int i) const;
    const PolyMatrix& sigma_inv(int i) const;
    const PolyMatrix& e(int i) const;
    /// sigma_{k-1} sigma_{k-2} sigma_k sigma_{k-1} with k = l-1; needs l >= 4.
    const PolyMatrix& tau() const;
    const PolyMatrix& tau_inv() const;
    bool has_tau() const { return l_ >= 4; }

    /// z = q^{z_exponent}
    LaurentPoly z() const { return LaurentPoly::q(z_exponent_); }
    LaurentPoly z_inv() const { return LaurentPoly::q(-z_exponent_); }
    /// (z - z^-1) / (q - q^-1)
    LaurentPoly loop_value() const;

private:
    int n_;
    int l_;
    int z_exponent_;
    LegSpace space_;
    PolyMatrix identity_;
    std::vector<PolyMatrix> sigma_, sigma_inv_, e_;
    PolyMatrix tau_, tau_inv_;
};

const PolyMatrix& rep_generator(const RepContext& ctx, const Letter& letter);

/// Ordered product of letter images; the empty word maps to the identity.
PolyMatrix rep_word(const RepContext& ctx, const GeneratorWord& word);

/// 'R_{aux,p_1} ... 'R_{aux,p_m} Rtilde_{aux,p_m} ... Rtilde_{aux,p_1} on `space`.
PolyMatrix s_image(const LegSpace& space, int aux_leg, std::span<const int> physical_legs);

/// s_image on legs 0..l with auxiliary leg 0 leftmost; the (i, j) block in
/// leg 0 is the action of s_ij. Guard n^{l+1} <= 4096.
PolyMatrix rep_S(int n, int l);

/// blocks[i-1][j-1] = action of s_ij on (C^n)^{(x) l}.
std::vector<std::vector<PolyMatrix>> rep_s_blocks(int n, int l);

}  // namespace qbrauer
