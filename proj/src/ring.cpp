#include "qbrauer/ring.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace qbrauer {

namespace {

void merge_into(std::vector<Term>& out, const std::vector<Term>& a, std::span<const Term> b, bool negate_b) {
    out.clear();
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->exp < ib->exp)) {
            out.push_back(*ia++);
        } else if (ia == a.end() || ib->exp < ia->exp) {
            out.push_back({ib->exp, negate_b ? BigInt(-ib->coef) : ib->coef});
            ++ib;
        } else {
            BigInt c = negate_b ? BigInt(ia->coef - ib->coef) : BigInt(ia->coef + ib->coef);
            if (c != 0) out.push_back({ia->exp, std::move(c)});
            ++ia;
            ++ib;
        }
    }
}

std::vector<Term> product_terms(std::span<const Term> a, std::span<const Term> b) {
    if (a.empty() || b.empty()) return {};
    const int lo = a.front().exp + b.front().exp;
    const int hi = a.back().exp + b.back().exp;
    std::vector<BigInt> dense(static_cast<size_t>(hi - lo + 1));
    for (const auto& x : a)
        for (const auto& y : b) dense[static_cast<size_t>(x.exp + y.exp - lo)] += x.coef * y.coef;
    std::vector<Term> out;
    for (size_t k = 0; k < dense.size(); ++k)
        if (dense[k] != 0) out.push_back({lo + static_cast<int>(k), std::move(dense[k])});
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("bad integer '" + std::string(s) + "'");
    return value;
}

BigInt parse_bigint(std::string_view s) {
    s = trim(s);
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw std::invalid_argument("bad integer literal");
    BigInt v{std::string(s)};
    return neg ? BigInt(-v) : v;
}

}  // namespace

LaurentPoly::LaurentPoly(long long constant) {
    if (constant != 0) terms_.push_back({0, BigInt(constant)});
}

LaurentPoly::LaurentPoly(BigInt coef, int exp) {
    if (coef != 0) terms_.push_back({exp, std::move(coef)});
}

LaurentPoly LaurentPoly::q(int exp) { return LaurentPoly(BigInt(1), exp); }

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
    LaurentPoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().exp == t.exp)
            p.terms_.back().coef += t.coef;
        else
            p.terms_.push_back(std::move(t));
    }
    std::erase_if(p.terms_, [](const Term& t) { return t.coef == 0; });
    return p;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
    text = trim(text);
    if (text == "0") return {};
    std::vector<Term> terms;
    while (!text.empty()) {
        auto sep = text.find(" + ");
        std::string_view tok = trim(text.substr(0, sep));
        text = sep == std::string_view::npos ? std::string_view{} : text.substr(sep + 3);
        auto star = tok.find("*q^");
        if (star == std::string_view::npos) throw std::invalid_argument("bad term '" + std::string(tok) + "'");
        BigInt c = parse_bigint(tok.substr(0, star));
        if (c == 0) throw std::invalid_argument("zero coefficient in '" + std::string(tok) + "'");
        terms.push_back({parse_int(tok.substr(star + 3)), std::move(c)});
    }
    auto p = from_terms(terms);
    if (p.terms_.size() != terms.size()) throw std::invalid_argument("repeated exponent in polynomial");
    return p;
}

int LaurentPoly::min_exp() const {
    if (terms_.empty()) throw std::domain_error("min_exp of zero polynomial");
    return terms_.front().exp;
}

int LaurentPoly::max_exp() const {
    if (terms_.empty()) throw std::domain_error("max_exp of zero polynomial");
    return terms_.back().exp;
}

BigInt LaurentPoly::coeff(int exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp, [](const Term& t, int e) { return t.exp < e; });
    return it != terms_.end() && it->exp == exp ? it->coef : BigInt(0);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    if (rhs.terms_.empty()) return *this;
    std::vector<Term> out;
    merge_into(out, terms_, rhs.terms_, false);
    terms_ = std::move(out);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    if (rhs.terms_.empty()) return *this;
    std::vector<Term> out;
    merge_into(out, terms_, rhs.terms_, true);
    terms_ = std::move(out);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    terms_ = product_terms(terms_, rhs.terms_);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    r.terms_ = product_terms(a.terms_, b.terms_);
    return r;
}

void LaurentPoly::add_product(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_.empty() || b.terms_.empty()) return;
    if (a.terms_.size() == 1 && b.terms_.size() == 1 && terms_.empty()) {
        terms_.push_back({a.terms_[0].exp + b.terms_[0].exp, a.terms_[0].coef * b.terms_[0].coef});
        return;
    }
    auto prod = product_terms(a.terms_, b.terms_);
    std::vector<Term> out;
    merge_into(out, terms_, prod, false);
    terms_ = std::move(out);
}

LaurentPoly LaurentPoly::shifted(int shift) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.exp += shift;
    return r;
}

Rational LaurentPoly::evaluate(const Rational& at) const {
    if (at == 0) throw std::domain_error("cannot evaluate a Laurent polynomial at q = 0");
    Rational sum = 0;
    for (const auto& t : terms_) sum += Rational(t.coef) * power(at, t.exp);
    return sum;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += it->coef.str();
        out += "*q^";
        out += std::to_string(it->exp);
    }
    return out;
}

std::optional<LaurentPoly> exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (a.is_zero()) return LaurentPoly{};
    // Long division on the ordinary polynomials q^-min(a) a and q^-min(b) b,
    // peeling off leading terms.
    std::vector<Term> quotient;
    LaurentPoly rem = a;
    const Term& lead = b.terms().back();
    const int b_span = b.max_exp() - b.min_exp();
    while (!rem.is_zero()) {
        if (rem.max_exp() - rem.min_exp() < b_span) return std::nullopt;
        const Term& top = rem.terms().back();
        if (top.coef % lead.coef != 0) return std::nullopt;
        LaurentPoly step(BigInt(top.coef / lead.coef), top.exp - lead.exp);
        quotient.push_back(step.terms().front());
        rem -= step * b;
    }
    return LaurentPoly::from_terms(std::move(quotient));
}

LaurentPoly quantum_integer(int n) {
    if (n < 1) throw std::invalid_argument("quantum_integer needs n >= 1");
    std::vector<Term> terms;
    for (int e = 1 - n; e <= n - 1; e += 2) terms.push_back({e, BigInt(1)});
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly q_minus_qinv() { return LaurentPoly::q(1) - LaurentPoly::q(-1); }

Rational power(const Rational& a, int e) {
    if (e < 0) {
        if (a == 0) throw std::domain_error("negative power of zero");
        return power(Rational(1) / a, -e);
    }
    Rational result = 1;
    Rational base = a;
    for (unsigned u = static_cast<unsigned>(e); u != 0; u >>= 1) {
        if (u & 1U) result *= base;
        if (u > 1) base *= base;
    }
    return result;
}

std::string to_string(const Rational& x) {
    auto num = boost::multiprecision::numerator(x);
    auto den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_bigint(text));
    BigInt num = parse_bigint(text.substr(0, slash));
    BigInt den = parse_bigint(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

}  // namespace qbrauer
