#pragma once

// Exact scalars: big integers, rationals and Laurent polynomials in one
// variable q with integer coefficients.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qbrauer {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// One monomial coef*q^exp of a LaurentPoly.
struct Term {
    int exp = 0;
    BigInt coef;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Element of Z[q, q^-1].
///
/// Terms are kept sorted by ascending exponent with no zero coefficients, so
/// two polynomials are equal exactly when their term vectors are equal.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long long constant);  // NOLINT(google-explicit-constructor)
    LaurentPoly(BigInt coef, int exp);

    /// q^exp
    static LaurentPoly q(int exp = 1);
    /// Builds from arbitrary terms; merges duplicates and drops zeros.
    static LaurentPoly from_terms(std::vector<Term> terms);
    /// Inverse of to_string().
    static LaurentPoly parse(std::string_view text);

    std::span<const Term> terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    int min_exp() const;
    int max_exp() const;
    BigInt coeff(int exp) const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    LaurentPoly operator-() const;

    /// this += a * b without materialising the product.
    void add_product(const LaurentPoly& a, const LaurentPoly& b);

    /// Multiplies by q^shift.
    LaurentPoly shifted(int shift) const;

    /// Ring homomorphism q -> at. Throws std::domain_error when at == 0.
    Rational evaluate(const Rational& at) const;

    /// "c*q^e" terms joined by " + ", exponents descending; "0" for zero.
    std::string to_string() const;

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    std::vector<Term> terms_;
};

/// Exact quotient a / b when b divides a in Z[q, q^-1], nullopt otherwise.
/// Throws std::domain_error when b is zero.
std::optional<LaurentPoly> exact_quotient(const LaurentPoly& a, const LaurentPoly& b);

/// [n]_q = q^{n-1} + q^{n-3} + ... + q^{1-n}.
LaurentPoly quantum_integer(int n);

/// q - q^-1
LaurentPoly q_minus_qinv();

/// Exact a^e for e of either sign. Throws std::domain_error for 0^e, e < 0.
Rational power(const Rational& a, int e);

// Uniform scalar helpers used by the matrix templates.
inline bool is_zero(const LaurentPoly& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x == 0; }
inline std::string to_string(const LaurentPoly& x) { return x.to_string(); }
std::string to_string(const Rational& x);
/// Accepts "p", "-p" or "p/r".
Rational parse_rational(std::string_view text);

}  // namespace qbrauer
