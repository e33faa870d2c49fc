#ifndef SWAPPOLY_TWO_BY_TWO_HPP
#define SWAPPOLY_TWO_BY_TWO_HPP

#include "swappoly/bracket.hpp"
#include "swappoly/tensor.hpp"

namespace swappoly {

// ---- generic 2x2 matrices (entries are polynomial indeterminates) ----------
//
// Evaluation over two generic matrices decides membership in the ideal of
// 2x2 identities exactly: a two-variable (tensor) polynomial is an identity
// for M_2 iff its generic evaluation vanishes.
namespace gen2 {

struct Mat {
    std::array<CommPoly, 4> e; // row-major 2x2 over CommPoly(8)
};

Mat generic_x(); // entries are variables 0..3
Mat generic_y(); // entries are variables 4..7
Mat identity();
Mat add(const Mat& a, const Mat& b);
Mat sub(const Mat& a, const Mat& b);
Mat mul(const Mat& a, const Mat& b);
Mat scale(const CommPoly& c, const Mat& a);
CommPoly trace(const Mat& a);
bool equal(const Mat& a, const Mat& b);

Mat eval_word(const Word& w); // letters x1, y1
// 4x4 kron entries of the tensor-polynomial evaluation
std::array<CommPoly, 16> eval_tensor(const TensorPoly2& t);
// the scalar c with [x,y]^2 = c * Id over generic matrices
CommPoly bracket_square_scalar();

} // namespace gen2

// Exact identity decision for two-variable tensor polynomials on 2x2 matrices.
bool is_tpi_generic_2x2(const TensorPoly2& t);

// ---- the two-variable swap polynomials -------------------------------------

// P(x,y) = 1 ox ([x,y]^2 + x[x,y]y) - y ox x[x,y] - x ox [x,y]y + xy ox [x,y],
// with value ([x,y]^2 scalar) * swap. Unbalanced, degree 4.
TensorPoly2 P_xy();

// The 40-term balanced polynomial of degree 5+5 with value
// tr(y)^2 det([x,y])^2 * swap.
TensorPoly2 Q_xy();

// The four-summand split with traces still attached, exactly as displayed in
// the source derivation (its last summand does NOT reproduce the target
// value; kept for the regression that documents the discrepancy).
TensorPoly2 teo_displayed_split();

// Balanced degree-10 rewrite of tr(a)tr(b) [x,y]^2 P(x,y) into a pure
// noncommutative tensor polynomial: summands 1-3 by trace absorption, the
// fourth completed by an exact linear solve (verified on generic matrices at
// construction). trace_a/trace_b pick the two degree-1 factors (0 = tr(x),
// 1 = tr(y)).
TensorPoly2 balanced_degree10(int trace_a, int trace_b);
// tr(y)^2 variant, the one comparable with Q_xy
const TensorPoly2& balanced_Q_prime();

// ---- Theorem esss family ----------------------------------------------------

struct EsssChoices {
    std::vector<int> traces; // size 2h, entries 0 = tr(x), 1 = tr(y)
    std::vector<int> quads;  // size k, entries 0 = det(x), 1 = det(y), 2 = tr(xy)
};

// Balanced pure-NC swap polynomial with value A [x,y]^4 swap, A the product
// of the chosen 2h degree-1 and k degree-2 invariants. Hypotheses: k even,
// or k odd with h >= 2; otherwise PreconditionError.
TensorPoly2 esss_family(int h, int k, const EsssChoices& choices);
// the scalar A as an invariant polynomial (for value checks)
TPoly esss_invariant(const EsssChoices& choices);

// ---- trace form of the basis 1, x, y, xy ------------------------------------

struct TraceGramReport {
    Matrix gram;                 // D = (tr(b_i b_j))
    Rational det;                // det D
    Rational bracket_square;     // c with [x,y]^2 = c Id at the point
    bool det_matches;            // det D == -c^2
    Matrix adjugate;             // adj(D)
    bool lambda_as_printed;      // adj(D) == c * Lambda(point), Lambda as printed
    bool singular;               // c == 0: dual basis skipped
    bool dual_basis_is_swap;     // sum b_i ox b_i^* == swap
    bool scaled_matches_P;       // c * (sum b_i ox b_i^*) == eval of P
};

TraceGramReport trace_gram(const Matrix& X, const Matrix& Y);

} // namespace swappoly

#endif
