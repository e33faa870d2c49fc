#ifndef SWAPPOLY_TENSOR_HPP
#define SWAPPOLY_TENSOR_HPP

#include "swappoly/matrix.hpp"
#include "swappoly/permutation.hpp"

namespace swappoly {

// Element of M_d^{ox n}, stored as a d^n x d^n exact matrix. Flat index
// convention is big-endian: e_{i_1} ox ... ox e_{i_n} has index
// sum_k i_k d^{n-k} (zero-based), i.e. the first factor is most significant.
class TensorOperator {
  public:
    TensorOperator() : d_(0), n_(0) {}
    TensorOperator(int d, int n); // zero operator
    TensorOperator(int d, int n, Matrix mat);
    static TensorOperator identity(int d, int n);
    static TensorOperator from_matrix(const Matrix& m); // order 1

    int local_dim() const { return d_; }
    int order() const { return n_; }
    int dim() const { return mat_.rows(); } // d^n
    const Matrix& matrix() const { return mat_; }
    Matrix& matrix() { return mat_; }

    friend TensorOperator operator+(const TensorOperator& a, const TensorOperator& b);
    friend TensorOperator operator-(const TensorOperator& a, const TensorOperator& b);
    friend TensorOperator operator*(const TensorOperator& a, const TensorOperator& b);
    friend TensorOperator operator*(const Rational& c, const TensorOperator& a);

    bool operator==(const TensorOperator& o) const;
    bool operator!=(const TensorOperator& o) const { return !(*this == o); }

    Rational trace() const { return mat_.trace(); }
    bool is_zero() const { return mat_.is_zero(); }

  private:
    int d_, n_;
    Matrix mat_;
};

// Kronecker product; tensor orders add. Operands must share the local dimension.
TensorOperator kron(const TensorOperator& a, const TensorOperator& b);

// The switch operator sum_{i,j} e_{ij} ox e_{ji} on (F^d)^{ox 2}; a permutation matrix.
TensorOperator swap_operator(int d);

// Place permutation of tensor factors: e_{i_1} ox ... ox e_{i_n} maps to the
// tensor whose k-th slot holds e_{i_{sigma^{-1}(k)}}. Group homomorphism, and
// trace = d^{#cycles(sigma)}.
TensorOperator perm_operator(const Permutation& sigma, int d);

// tr(perm_operator(sigma) * T) without materializing the permutation matrix
Rational trace_with_perm(const Permutation& sigma, const TensorOperator& T);

// Decomposition of an order-2 tensor operator as a*Id + b*(1,2), solved from
// the two trace pairings; residual_zero reports whether T actually lies in
// the span. d = 1 is degenerate (Id = swap) and flagged separately.
struct Sigma2Decomposition {
    Rational a, b;
    bool residual_zero = false;
    bool degenerate = false;
};
Sigma2Decomposition decompose_sigma2(const TensorOperator& T);

} // namespace swappoly

#endif
