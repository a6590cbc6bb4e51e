#pragma once

// Named operators on C^n (x) C^n (and the diagonal D on C^n), each built
// entry by entry from its defining sum of matrix units.

#include "qbrauer/linalg.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qbrauer {

enum class OperatorName { R, Rtilde, P, Rprime, Rcheck, RcheckInv, Q, Qbar, D };

struct NamedOperator {
    OperatorName name;
    int n;
    PolyMatrix matrix;
};

inline constexpr int kMaxLocalDimension = 6;

std::string_view operator_name(OperatorName name);
std::optional<OperatorName> parse_operator_name(std::string_view text);
std::vector<OperatorName> all_operator_names();

/// Throws std::invalid_argument for n < 2 and GuardError for n > 6.
NamedOperator build_operator(OperatorName name, int n);

// Shorthands; all return n^2 x n^2 matrices except diag_weights().

/// q sum E_ii(x)E_ii + sum_{i!=j} E_ii(x)E_jj + (q-q^-1) sum_{i<j} E_ij(x)E_ji
PolyMatrix r_matrix(int n);
/// q^-1 sum E_ii(x)E_ii + sum_{i!=j} E_ii(x)E_jj + (q^-1-q) sum_{i>j} E_ij(x)E_ji
PolyMatrix r_tilde(int n);
/// sum E_ij(x)E_ji
PolyMatrix permutation(int n);
/// R with the first factor transposed, written out directly.
PolyMatrix r_prime(int n);
/// q sum E_ii(x)E_ii + sum_{i!=j} E_ji(x)E_ij + (q-q^-1) sum_{i<j} E_jj(x)E_ii
PolyMatrix r_check(int n);
/// r_check(n) - (q-q^-1) I
PolyMatrix r_check_inv(int n);
/// sum q^{n-2i+1} E_ij(x)E_ij
PolyMatrix q_operator(int n);
/// sum E_ij(x)E_ij
PolyMatrix q_bar(int n);
/// sum q^{n-2i+1} E_ii on C^n
PolyMatrix diag_weights(int n);

}  // namespace qbrauer
