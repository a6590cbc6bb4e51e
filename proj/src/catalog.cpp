#include "qbrauer/verify.hpp"

namespace qbrauer {

namespace {

using S = SuiteId;

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> c = {
        {S::yang_baxter, "yang_baxter", "R12 R13 R23 = R23 R13 R12"},

        {S::rtt_vector, "rcheck_is_p_r", "Rcheck = P R"},
        {S::rtt_vector, "rtilde_is_p_rinv_p", "Rtilde P R P = I"},
        {S::rtt_vector, "rcheck_inverse", "Rcheck Rcheck^-1 = I"},
        {S::rtt_vector, "rcheck_inverse_is_p_rtilde", "Rcheck^-1 = P Rtilde"},
        {S::rtt_vector, "rprime_is_partial_transpose", "'R is R transposed in the first factor"},
        {S::rtt_vector, "t_vector_image", "block (i,j) of 'R is the image of t_ij"},
        {S::rtt_vector, "tbar_vector_image", "block (i,j) of 'Rtilde is the image of tbar_ij"},
        {S::rtt_vector, "t_upper_zero", "t_ij = 0 for i < j on l legs"},
        {S::rtt_vector, "tbar_lower_zero", "tbar_ij = 0 for i > j on l legs"},
        {S::rtt_vector, "t_tbar_diagonal", "t_ii tbar_ii = 1"},
        {S::rtt_vector, "tbar_t_diagonal", "tbar_ii t_ii = 1"},
        {S::rtt_vector, "rtt_t_t", "R T1 T2 = T2 T1 R"},
        {S::rtt_vector, "rtt_tbar_tbar", "R Tbar1 Tbar2 = Tbar2 Tbar1 R"},
        {S::rtt_vector, "rtt_tbar_t", "R Tbar1 T2 = T2 Tbar1 R"},

        {S::reflection_S, "reflection", "R S1 'R S2 = S2 'R S1 R"},

        {S::s_shape, "s_is_t_tbar_transposed", "S = T Tbar^t"},
        {S::s_shape, "s_upper_zero", "s_ij = 0 for i < j"},
        {S::s_shape, "s_diagonal_identity", "s_ii = 1"},
        {S::s_shape, "s_lower_classical_limit", "s_ij / (q - q^-1) -> E_ij - E_ji at q = 1, i > j"},

        {S::def_2_3, "hecke_quadratic", "sigma_i^2 = (q - q^-1) sigma_i + 1"},
        {S::def_2_3, "sigma_inverse", "sigma_i sigma_i^-1 = 1"},
        {S::def_2_3, "sigma_sigma_commute", "sigma_i sigma_j = sigma_j sigma_i, |i-j| > 1"},
        {S::def_2_3, "braid", "sigma_i sigma_i+1 sigma_i = sigma_i+1 sigma_i sigma_i+1"},
        {S::def_2_3, "e_squared", "e_k^2 = (z - z^-1)/(q - q^-1) e_k"},
        {S::def_2_3, "sigma_e", "sigma_k e_k = q e_k"},
        {S::def_2_3, "e_sigma", "e_k sigma_k = q e_k"},
        {S::def_2_3, "e_sigma_prev_e", "e_k sigma_k-1 e_k = z e_k"},
        {S::def_2_3, "sigma_e_commute", "sigma_i e_k = e_k sigma_i, i <= k-2"},
        {S::def_2_3, "tau_inverse", "tau tau^-1 = 1"},
        {S::def_2_3, "tau_relation",
         "e_k (zq tau^-1 + z^-1 q^-1 tau) e_k (q tau^-1 + q^-1 tau) = (q tau^-1 + q^-1 tau) e_k (zq tau^-1 + z^-1 q^-1 tau) e_k"},

        {S::derived_2_4, "e_recursive", "e_i = sigma_i+1 sigma_i e_i+1 sigma_i^-1 sigma_i+1^-1"},
        {S::derived_2_4, "e_squared", "e_i^2 = (z - z^-1)/(q - q^-1) e_i"},
        {S::derived_2_4, "sigma_e", "sigma_i e_i = q e_i"},
        {S::derived_2_4, "e_sigma", "e_i sigma_i = q e_i"},
        {S::derived_2_4, "sigma_e_distant_commute", "sigma_i e_j = e_j sigma_i, |i-j| > 1"},
        {S::derived_2_4, "e_e_distant_commute_observed", "whether e_i e_j = e_j e_i, |i-j| > 1 (recorded only)"},
        {S::derived_2_4, "e_f_e", "e_i e_i+1 e_i = e_i"},
        {S::derived_2_4, "f_e_f", "e_i+1 e_i e_i+1 = e_i+1"},
        {S::derived_2_4, "e_sigma_next_e", "e_i sigma_i+1 e_i = z e_i"},
        {S::derived_2_4, "e_sigma_prev_e", "e_i sigma_i-1 e_i = z e_i"},
        {S::derived_2_4, "e_sigmainv_next_e", "e_i sigma_i+1^-1 e_i = z^-1 e_i"},
        {S::derived_2_4, "e_sigmainv_prev_e", "e_i sigma_i-1^-1 e_i = z^-1 e_i"},
        {S::derived_2_4, "sigma_f_e", "sigma_i e_i+1 e_i = zq sigma_i+1^-1 e_i"},
        {S::derived_2_4, "f_e_sigma", "e_i+1 e_i sigma_i+1 = zq e_i+1 sigma_i^-1"},

        {S::prop_4_1, "q_absorbs_s_left", "Q12 'R01 'R02 Rt02 Rt01 = Q12"},
        {S::prop_4_1, "q_absorbs_s_right", "'R01 'R02 Rt02 Rt01 Q12 = Q12"},
        {S::prop_4_1, "rprime_rtilde_commute", "'R Rtilde = Rtilde 'R"},
        {S::prop_4_1, "r20_inverts_rtilde02", "R20 Rt02 = I"},
        {S::prop_4_1, "q_rprime01_is_q_r20", "Q12 'R01 = Q12 R20"},
        {S::prop_4_1, "q_rprime02_rtilde01", "Q12 'R02 Rt01 = Q12"},
        {S::prop_4_1, "rprime02_rtilde01_q", "'R02 Rt01 Q12 = Q12"},
        {S::prop_4_1, "rprime01_rtilde02_q", "'R01 Rt02 Q12 = Q12"},
        {S::prop_4_1, "q_commutes_with_s", "[Q12, 'R01 'R02 Rt02 Rt01] = 0"},

        {S::thm_4_2_commute, "sigma_commutes_with_s", "[1 (x) sigma_i, S] = 0"},
        {S::thm_4_2_commute, "e_commutes_with_s", "[1 (x) e_i, S] = 0"},

        {S::proof_identities, "degree4_forward", "Q34 A Q34 = Q12 Q34 + q^(n+1)(q - q^-1) Q34 (Rc12 + q^-1)"},
        {S::proof_identities, "degree4_inverse", "Q34 B Q34 = Q12 Q34 + q^(-n-1)(q^-1 - q) Q34 (Rc12 + q^-1)"},
        {S::proof_identities, "forward_in_r", "Q34 A Q34 = P13 P24 Q12 R14 R24 R13 R23 Q34"},
        {S::proof_identities, "q_diagonal_first", "Q = D1 Qbar"},
        {S::proof_identities, "q_diagonal_second", "Q = D2 Qbar"},
        {S::proof_identities, "qbar_partial_transpose_first", "Qbar = 'P"},
        {S::proof_identities, "qbar_partial_transpose_second", "Qbar = P'"},
        {S::proof_identities, "q12_r14", "Q12 R14 = Q12 'R24"},
        {S::proof_identities, "r23_q34", "R23 Q34 = D4 R'24 Qbar34"},
        {S::proof_identities, "forward_regrouped", "Q34 A Q34 = P13 P24 Q12 R13 'R24 R24 D4 R'24 Qbar34"},
        {S::proof_identities, "d_expansion", "'R24 R24 D4 R'24 = R24 D4 + q^(n+1)(q - q^-1) Qbar24"},
        {S::proof_identities, "q12_r13", "Q12 R13 = Q12 'R23"},
        {S::proof_identities, "qbar24_qbar34", "Qbar24 Qbar34 = P23 Qbar34"},
        {S::proof_identities, "qbar24_q34_as_printed", "Qbar24 Q34 against P23 Q34, observed"},
        {S::proof_identities, "r24_d4_qbar34", "R24 D4 Qbar34 = D3 R'23 Qbar34"},
        {S::proof_identities, "forward_after_expansion",
         "Q34 A Q34 = P13 P24 Q12 'R23 (D3 R'23 + q^(n+1)(q - q^-1) P23) Qbar34"},
        {S::proof_identities, "forward_x_form", "Q34 A Q34 = P13 P24 Q12 X23 Qbar34"},
        {S::proof_identities, "x_move_q", "P13 P24 Q12 X23 Qbar34 = Q34 P13 P24 X23 Qbar34"},
        {S::proof_identities, "x_to_x_prime", "Q34 P13 P24 X23 Qbar34 = Q34 P13 P24 X'24 Qbar34"},
        {S::proof_identities, "x_prime_to_y", "Q34 P13 P24 X'24 Qbar34 = Q34 P13 Y'23 Qbar34"},
        {S::proof_identities, "p13_y", "P13 Y'23 = Y'21 P13"},
        {S::proof_identities, "q34_p13_qbar34", "Q34 P13 Qbar34 = Q34"},
        {S::proof_identities, "y_closed_form", "Y'21 = Q12 + q^(n+1)(q - q^-1)(Rc12 + q^-1)"},
        {S::proof_identities, "forward_final", "Q34 A Q34 = Y'21 Q34"},
        {S::proof_identities, "rcheck_inverse_rtilde", "Rc^-1 = Rt21 P12"},
        {S::proof_identities, "inverse_in_rtilde", "Q34 B Q34 = Q34 Rt32 Rt42 Rt31 Rt41 Q12 P13 P24"},
        {S::proof_identities, "combined", "Q34 (q^(-n-1) A + q^(n+1) B) Q34 = (q^(-n-1) + q^(n+1)) Q12 Q34"},
        {S::proof_identities, "completion_left", "Q12 Q34 (q^-1 A + q B) = (q^-3 + q^3) Q12 Q34"},
        {S::proof_identities, "completion_right", "(q^-1 A + q B) Q12 Q34 = (q^-3 + q^3) Q12 Q34"},
        {S::proof_identities, "q_pair_diagonals", "Q12 Q34 = D1 D3 Qbar12 Qbar34"},
        {S::proof_identities, "completion_left_qbar", "Qbar12 Qbar34 (q^-1 A + q B) = (q^-3 + q^3) Qbar12 Qbar34"},
        {S::proof_identities, "qbar_pair_forward", "Qbar12 Qbar34 A = Qbar12 Qbar34 P13 P24 R14 R24 R13 R23"},
        {S::proof_identities, "projector_chain", "Qbar12 Qbar34 P13 P24 = ... = Qbar12 Qbar34, one step each"},
        {S::proof_identities, "qbar12_r14", "Qbar12 R14 = Qbar12 'R24"},
        {S::proof_identities, "qbar_pair_r13", "Qbar12 Qbar34 R13 = Qbar12 Qbar34 R'14"},
        {S::proof_identities, "qbar_pair_r13_both", "Qbar12 Qbar34 R'14 = Qbar12 Qbar34 'R'24"},
        {S::proof_identities, "v_form", "Qbar12 Qbar34 R14 R24 R13 R23 = Qbar12 Qbar34 V24 R23"},
        {S::proof_identities, "v_prime_form", "Qbar12 Qbar34 V24 R23 = Qbar12 Qbar34 V'23 R23"},
        {S::proof_identities, "qbar_pair_inverse", "Qbar12 Qbar34 B = Qbar12 Qbar34 Rt14 Rt24 Rt13 Rt23"},
        {S::proof_identities, "w_prime_form", "Qbar12 Qbar34 Rt14 Rt24 Rt13 Rt23 = Qbar12 Qbar34 W'23 Rt23"},
        {S::proof_identities, "vw_identity", "q^-1 V' R + q W' Rtilde = (q^-3 + q^3) I"},

        {S::brauer_presentation, "presentations", "both presentations; reported skipped when l is outside 3..5"},
        {S::brauer_presentation, "diagram_count", "number of l-diagrams is (2l-1)!!"},
        {S::brauer_presentation, "tau_is_permutation", "tau is the permutation (k-2,k)(k-1,k+1)"},

        {S::q1_specialization, "sigma_is_permutation", "sigma_i at q = 1 is P_i,i+1"},
        {S::q1_specialization, "e_is_qbar", "e_i at q = 1 is Qbar_i,i+1"},
        {S::q1_specialization, "sigma_matches_diagram", "diagram operator of sigma_i equals its image at q = 1"},
        {S::q1_specialization, "e_matches_diagram", "diagram operator of e_i equals its image at q = 1"},
        {S::q1_specialization, "diagram_homomorphism", "Phi(d1) Phi(d2) = n^s Phi(d1 d2) for all pairs"},

        {S::hecke_rank, "hecke_rank", "span of the Hecke images has dimension l! for l < n"},
        {S::centralizer_duality, "duality", "algebra image dimension <= commutant dimension of the s_ij"},
    };
    const std::pair<const char*, const char*> full[] = {
        {"sigma_squared", "sigma_i^2 = 1"},
        {"e_squared", "e_i^2 = eta e_i"},
        {"sigma_e", "sigma_i e_i = e_i"},
        {"e_sigma", "e_i sigma_i = e_i"},
        {"sigma_sigma_commute", "sigma_i sigma_j = sigma_j sigma_i, |i-j| > 1"},
        {"sigma_e_commute", "sigma_i e_j = e_j sigma_i, |i-j| > 1"},
        {"e_sigma_commute", "e_i sigma_j = sigma_j e_i, |i-j| > 1"},
        {"e_e_commute", "e_i e_j = e_j e_i, |i-j| > 1"},
        {"braid", "sigma_i sigma_i+1 sigma_i = sigma_i+1 sigma_i sigma_i+1"},
        {"e_f_e", "e_i e_i+1 e_i = e_i"},
        {"f_e_f", "e_i+1 e_i e_i+1 = e_i+1"},
        {"sigma_f_e", "sigma_i e_i+1 e_i = sigma_i+1 e_i"},
        {"f_e_sigma", "e_i+1 e_i sigma_i+1 = e_i+1 sigma_i"},
    };
    const std::pair<const char*, const char*> reduced[] = {
        {"sigma_squared", "sigma_i^2 = 1"},
        {"braid", "sigma_i sigma_i+1 sigma_i = sigma_i+1 sigma_i sigma_i+1"},
        {"sigma_sigma_commute", "sigma_i sigma_j = sigma_j sigma_i, |i-j| > 1"},
        {"e_squared", "e_k^2 = eta e_k"},
        {"sigma_e", "sigma_k e_k = e_k"},
        {"e_sigma", "e_k sigma_k = e_k"},
        {"e_sigma_e", "e_k sigma_k-1 e_k = e_k"},
        {"sigma_e_commute", "sigma_i e_k = e_k sigma_i, i <= k-2"},
        {"tau_relation", "e_k tau e_k tau = tau e_k tau e_k"},
        {"tau_involution", "tau^2 = 1"},
        {"tau_conjugates_e", "tau e_k tau = e_k-2"},
        {"e_km2_e_commute", "e_k-2 e_k = e_k e_k-2"},
        {"tau_relation_equivalent", "e_k tau e_k tau - tau e_k tau e_k = e_k e_k-2 - e_k-2 e_k"},
    };
    for (const auto& [id, text] : full) {
        c.push_back({S::brauer_presentation, std::string("full.") + id, text});
        c.push_back({S::q1_specialization, std::string("full.") + id, std::string(text) + " with eta = n"});
    }
    for (const auto& [id, text] : reduced) c.push_back({S::brauer_presentation, std::string("reduced.") + id, text});
    return c;
}

}  // namespace

const std::vector<CatalogEntry>& relation_catalog() {
    static const std::vector<CatalogEntry> catalog = build_catalog();
    return catalog;
}

}  // namespace qbrauer
