#include "qbrauer/rmatrix.hpp"

#include "qbrauer/errors.hpp"

#include <array>
#include <stdexcept>

namespace qbrauer {

namespace {

constexpr std::array<std::pair<OperatorName, std::string_view>, 9> kNames{{
    {OperatorName::R, "R"},
    {OperatorName::Rtilde, "Rtilde"},
    {OperatorName::P, "P"},
    {OperatorName::Rprime, "Rprime"},
    {OperatorName::Rcheck, "Rcheck"},
    {OperatorName::RcheckInv, "RcheckInv"},
    {OperatorName::Q, "Q"},
    {OperatorName::Qbar, "Qbar"},
    {OperatorName::D, "D"},
}};

// Accumulates coefficient * E_ij (x) E_rs with 1-based indices.
class TwoLegBuilder {
public:
    explicit TwoLegBuilder(int n) : n_(n) {}

    void add(const LaurentPoly& c, int i, int j, int r, int s) {
        entries_.push_back({(i - 1) * n_ + (r - 1), (j - 1) * n_ + (s - 1), c});
    }
    PolyMatrix build() { return PolyMatrix::from_entries(n_ * n_, n_ * n_, std::move(entries_)); }

private:
    int n_;
    std::vector<Entry<LaurentPoly>> entries_;
};

void check_n(int n) {
    if (n < 2) throw std::invalid_argument("local dimension n must be at least 2");
    if (n > kMaxLocalDimension) throw GuardError("local dimension n = " + std::to_string(n) + " exceeds guard n <= 6");
}

LaurentPoly weight(int n, int i) { return LaurentPoly::q(n - 2 * i + 1); }

}  // namespace

std::string_view operator_name(OperatorName name) {
    for (const auto& [op, text] : kNames)
        if (op == name) return text;
    return "?";
}

std::optional<OperatorName> parse_operator_name(std::string_view text) {
    for (const auto& [op, name] : kNames)
        if (name == text) return op;
    return std::nullopt;
}

std::vector<OperatorName> all_operator_names() {
    std::vector<OperatorName> out;
    for (const auto& entry : kNames) out.push_back(entry.first);
    return out;
}

PolyMatrix r_matrix(int n) {
    TwoLegBuilder b(n);
    const LaurentPoly q = LaurentPoly::q(1), one(1), dq = q_minus_qinv();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j)
                b.add(q, i, i, i, i);
            else
                b.add(one, i, i, j, j);
            if (i < j) b.add(dq, i, j, j, i);
        }
    return b.build();
}

PolyMatrix r_tilde(int n) {
    TwoLegBuilder b(n);
    const LaurentPoly qinv = LaurentPoly::q(-1), one(1), dq = -q_minus_qinv();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j)
                b.add(qinv, i, i, i, i);
            else
                b.add(one, i, i, j, j);
            if (i > j) b.add(dq, i, j, j, i);
        }
    return b.build();
}

PolyMatrix permutation(int n) {
    TwoLegBuilder b(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) b.add(LaurentPoly(1), i, j, j, i);
    return b.build();
}

PolyMatrix r_prime(int n) {
    TwoLegBuilder b(n);
    const LaurentPoly q = LaurentPoly::q(1), one(1), dq = q_minus_qinv();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j)
                b.add(q, i, i, i, i);
            else
                b.add(one, i, i, j, j);
            if (i < j) b.add(dq, j, i, j, i);
        }
    return b.build();
}

PolyMatrix r_check(int n) {
    TwoLegBuilder b(n);
    const LaurentPoly q = LaurentPoly::q(1), one(1), dq = q_minus_qinv();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j)
                b.add(q, i, i, i, i);
            else
                b.add(one, j, i, i, j);
            if (i < j) b.add(dq, j, j, i, i);
        }
    return b.build();
}

PolyMatrix r_check_inv(int n) { return r_check(n) - q_minus_qinv() * PolyMatrix::identity(n * n); }

PolyMatrix q_operator(int n) {
    TwoLegBuilder b(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) b.add(weight(n, i), i, j, i, j);
    return b.build();
}

PolyMatrix q_bar(int n) {
    TwoLegBuilder b(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) b.add(LaurentPoly(1), i, j, i, j);
    return b.build();
}

PolyMatrix diag_weights(int n) {
    std::vector<Entry<LaurentPoly>> es;
    for (int i = 1; i <= n; ++i) es.push_back({i - 1, i - 1, weight(n, i)});
    return PolyMatrix::from_entries(n, n, std::move(es));
}

NamedOperator build_operator(OperatorName name, int n) {
    check_n(n);
    switch (name) {
        case OperatorName::R: return {name, n, r_matrix(n)};
        case OperatorName::Rtilde: return {name, n, r_tilde(n)};
        case OperatorName::P: return {name, n, permutation(n)};
        case OperatorName::Rprime: return {name, n, r_prime(n)};
        case OperatorName::Rcheck: return {name, n, r_check(n)};
        case OperatorName::RcheckInv: return {name, n, r_check_inv(n)};
        case OperatorName::Q: return {name, n, q_operator(n)};
        case OperatorName::Qbar: return {name, n, q_bar(n)};
        case OperatorName::D: return {name, n, diag_weights(n)};
    }
    throw std::invalid_argument("unknown operator");
}

}  // namespace qbrauer
