#ifndef SWAPPOLY_CONSTRUCTIONS_HPP
#define SWAPPOLY_CONSTRUCTIONS_HPP

#include "swappoly/ncpoly.hpp"
#include "swappoly/pattern.hpp"
#include "swappoly/weingarten.hpp"

namespace swappoly {

class Rng;

// ---- the alternating trace invariant T_d ------------------------------------

// degree profile (1, 3, ..., 2d-1)
std::vector<int> regev_profile(int d);

// the slot pattern m_1 ox m_2 ox ... ox m_d over variables fam_1..fam_{d^2},
// with m_i = product of the i^2 - (i-1)^2 consecutive variables
MonomialPattern regev_slot_pattern(Family fam, int d);

// T_d(x_1,...,x_{d^2}): the full alternating sum of trace products over the
// profile; computed as the trace of the streamed slot tensor. Feasible for
// d <= 3 under the default budget.
Rational T_d(const std::vector<Matrix>& mats, const StreamBudget& budget = {}, int threads = 1);

// tr(St_k(m_1,...,m_k)), the odd primitive factors (zero for even k)
Rational odd_trace_factor(const std::vector<Matrix>& mats);

// |T_d| / |det| constant: 1!3!5!...(2d-1)! / (1!2!...(d-1)!)
Integer C_d(int d);

// determinant of the d^2 x d^2 matrix whose rows are the row-major
// vectorizations of the arguments
Rational vectorized_det(const std::vector<Matrix>& mats);

// ---- Regev's F(X,Y) ----------------------------------------------------------

struct RegevResult {
    Matrix value;           // F(X,Y), a d x d matrix
    Rational tx, ty;        // T_d(X), T_d(Y)
    Rational multiplier;    // (-1)^{d-1} / (d!^2 (2d-1))
    bool matches_predicted; // value == multiplier * tx * ty * Id
};

RegevResult regev_F_value(int d, const std::vector<Matrix>& xs, const std::vector<Matrix>& ys,
                          const StreamBudget& budget = {}, int threads = 1);

// F(zX, Y) == det(z)^d F(X, Y) == F(X, zY) at one point (d = 2)
bool regev_conductor_identity(const Matrix& z, const std::vector<Matrix>& xs,
                              const std::vector<Matrix>& ys, const StreamBudget& budget = {},
                              int threads = 1);

// ---- even-d two-pattern construction ----------------------------------------

// interleave chains of the monomials A, B, C (sides: 0 = X slots, 1 = Y slots)
InterleaveDescriptor even_chain_AB(int d);
InterleaveDescriptor even_chain_AC(int d);

struct EvenSwapAnalytic {
    int d;
    Rational a_hh, a_d;          // Weingarten inputs (raw normalization)
    Rational a1, b1, a2, b2;     // decomposition components of G1, G2 / (T_d T_d)
    Rational combo_g1, combo_g2; // the swap combination -a2 G1 + a1 G2
    Rational value_coeff;        // its value coefficient: a_hh a_d / (d^2 (1 - d^2))
};

EvenSwapAnalytic even_swap_analytic(int d);

struct EvenSwapCertificate {
    EvenSwapAnalytic analytic;
    int points = 0;
    bool trace_constraints_ok = false; // tr G_i and tr((1,2)G_i) match the analytic values
    bool components_ok = false;        // decompose_sigma2 of G_i / TT matches (a_i, b_i)
    bool combination_is_swap = false;  // a-part exactly 0, residual zero, b nonzero
    bool ratio_constant = false;       // combo value / (det(X) det(Y)) constant across points
    Rational det_ratio;                // that constant (= value_coeff * C_d^2)
};

// full exact evaluation certificate; d = 2 under the default budget
EvenSwapCertificate even_swap_certificate(int d, Rng& rng, int points,
                                          const StreamBudget& budget = {}, int threads = 1);

// ---- odd-d construction (exact evaluation at d = 3) -------------------------

struct OddSwapD3Result {
    // analytic inputs
    Rational a3;     // full-cycle Weingarten value of Wg(3,3)
    Rational a1, b1; // G1 components: tr G1 = 0 forces (a3/(d(1-d^2)), -a3/(1-d^2))
    Rational t2;     // -b_{1^4} + b_{3,1} from Wg(4,3)
    Rational a2, b2; // G2 components solved from tr((1,2)G2) = 0
    // measured, all points
    int points = 0;
    bool tr_g1_zero = false;
    bool tr_swap_g1_matches = false;
    bool g1_components_ok = false;
    bool lemma_sem_ok = false;      // support {(1,2),(2,4)} for M1, {(1,4),(3,4)} for M2
    bool altz_signs_ok = false;     // the four stated signs
    bool almu_identities_ok = false; // Alt M = T * [diff] Wg(4,3) as 81x81 operators
    bool tr_g2_matches = false;
    bool tr_swap_g2_zero = false;
    bool g2_components_ok = false;
    bool combination_is_swap = false;
    Rational combo_value_coeff;     // -a2 b1 + a1 b2
};

OddSwapD3Result odd_swap_d3(Rng& rng, int points, const StreamBudget& budget = {}, int threads = 1);

// ---- the tau_h coefficient for general odd d --------------------------------

struct OddCoefficientResult {
    int h, d, n; // d = 2h - 1, n = 2h
    // primary value from the four sigmas solved out of the gluing conditions
    Rational sigma_route;
    Rational sigma_scaled_n;  // x (n!)^2 = (d+1)!^2
    Rational sigma_scaled_d;  // x (d!)^2
    std::vector<std::string> sigma_cycle_types;
    bool nonzero;
    // the printed class-label formula -b_{1^2,h-2,h} + 2 b_{h,h} - b_{1,2,h-3,h}
    bool label_defined; // partition labels valid (needs h >= 3)
    Rational label_route;
    Rational label_scaled_n;
    bool routes_agree;
};

OddCoefficientResult odd_coefficient(int h);

// ---- Capelli-companion route (d = 2) -----------------------------------------

struct CapelliRoute {
    NcPoly f;                          // C_4(x_1..x_4; y_1..y_3)
    std::array<NcPoly, 4> companions;  // f_i = sum b a over terms a x_i b
    NcPoly h_central;                  // sum_i x_i zeta1 f_i
    TensorPoly2 H;                     // sum_i x_i ox f_i
};

const CapelliRoute& capelli_route_d2();

// ---- generic dual-basis swap construction ------------------------------------

struct DualBasisCertificate {
    bool gram_singular = false;
    Rational delta;         // det(tr(A_i A_j))
    bool identity_ok = false; // sum A_i ox B_i == delta * swap at the point
};

DualBasisCertificate dual_basis_swap(const std::vector<Word>& monomials, const Assignment& a);

} // namespace swappoly

#endif
