#include "swappoly/tensor.hpp"

#include "swappoly/error.hpp"

namespace swappoly {

namespace {

int pow_int(int d, int n) {
    int r = 1;
    while (n-- > 0) r *= d;
    return r;
}

} // namespace

TensorOperator::TensorOperator(int d, int n) : d_(d), n_(n), mat_(pow_int(d, n), pow_int(d, n)) {
    if (d < 1 || n < 1) throw DimensionError("tensor operator needs d >= 1, n >= 1");
}

TensorOperator::TensorOperator(int d, int n, Matrix mat) : d_(d), n_(n), mat_(std::move(mat)) {
    if (mat_.rows() != pow_int(d, n) || mat_.cols() != pow_int(d, n))
        throw DimensionError("tensor operator matrix is not d^n x d^n");
}

TensorOperator TensorOperator::identity(int d, int n) {
    return TensorOperator(d, n, Matrix::identity(pow_int(d, n)));
}

TensorOperator TensorOperator::from_matrix(const Matrix& m) {
    if (!m.is_square()) throw DimensionError("order-1 tensor from non-square matrix");
    return TensorOperator(m.rows(), 1, m);
}

TensorOperator operator+(const TensorOperator& a, const TensorOperator& b) {
    if (a.d_ != b.d_ || a.n_ != b.n_) throw DimensionError("tensor add: order mismatch");
    return TensorOperator(a.d_, a.n_, a.mat_ + b.mat_);
}

TensorOperator operator-(const TensorOperator& a, const TensorOperator& b) {
    if (a.d_ != b.d_ || a.n_ != b.n_) throw DimensionError("tensor sub: order mismatch");
    return TensorOperator(a.d_, a.n_, a.mat_ - b.mat_);
}

TensorOperator operator*(const TensorOperator& a, const TensorOperator& b) {
    if (a.d_ != b.d_ || a.n_ != b.n_) throw DimensionError("tensor mul: order mismatch");
    return TensorOperator(a.d_, a.n_, a.mat_ * b.mat_);
}

TensorOperator operator*(const Rational& c, const TensorOperator& a) {
    return TensorOperator(a.d_, a.n_, c * a.mat_);
}

bool TensorOperator::operator==(const TensorOperator& o) const {
    return d_ == o.d_ && n_ == o.n_ && mat_ == o.mat_;
}

TensorOperator kron(const TensorOperator& a, const TensorOperator& b) {
    if (a.local_dim() != b.local_dim()) throw DimensionError("kron: local dimensions differ");
    return TensorOperator(a.local_dim(), a.order() + b.order(), kron(a.matrix(), b.matrix()));
}

TensorOperator swap_operator(int d) {
    TensorOperator t(d, 2);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) t.matrix().at(j * d + i, i * d + j) = Rational(1);
    return t;
}

TensorOperator perm_operator(const Permutation& sigma, int d) {
    const int n = sigma.size();
    if (n < 1) throw DimensionError("perm_operator needs n >= 1");
    TensorOperator t(d, n);
    const Permutation inv = sigma.inverse();
    const int N = t.dim();
    std::vector<int> digits(n);
    for (int col = 0; col < N; ++col) {
        int x = col;
        for (int k = n - 1; k >= 0; --k) {
            digits[k] = x % d;
            x /= d;
        }
        int row = 0;
        for (int k = 1; k <= n; ++k) row = row * d + digits[inv(k) - 1];
        t.matrix().at(row, col) = Rational(1);
    }
    return t;
}

Rational trace_with_perm(const Permutation& sigma, const TensorOperator& T) {
    // tr(P_sigma T) = sum_col T[sigma^{-1}-permuted col, col]
    const int n = sigma.size();
    if (n != T.order()) throw DimensionError("trace_with_perm: order mismatch");
    const int d = T.local_dim();
    const Permutation inv = sigma.inverse();
    Rational s;
    std::vector<int> digits(n);
    const int N = T.dim();
    for (int col = 0; col < N; ++col) {
        int x = col;
        for (int k = n - 1; k >= 0; --k) {
            digits[k] = x % d;
            x /= d;
        }
        int row = 0;
        for (int k = 1; k <= n; ++k) row = row * d + digits[inv(k) - 1];
        s += T.matrix().at(col, row); // (P_sigma T)[row', row'] picks T[col, perm(col)]
    }
    return s;
}

Sigma2Decomposition decompose_sigma2(const TensorOperator& T) {
    if (T.order() != 2) throw DimensionError("decompose_sigma2 needs an order-2 operator");
    const int d = T.local_dim();
    Sigma2Decomposition out;
    if (d == 1) {
        out.degenerate = true; // Id and the swap coincide; a,b are not separable
        out.a = T.matrix().at(0, 0);
        out.b = Rational(0);
        out.residual_zero = true;
        return out;
    }
    const Rational t1 = T.trace();
    const TensorOperator sw = swap_operator(d);
    const Rational t2 = (sw * T).trace();
    const Rational dd(d);
    const Rational den = dd * dd * dd * dd - dd * dd; // d^4 - d^2
    out.a = (t1 * dd * dd - t2 * dd) / den;
    out.b = (t2 * dd * dd - t1 * dd) / den;
    TensorOperator resid = T - out.a * TensorOperator::identity(d, 2) - out.b * sw;
    out.residual_zero = resid.is_zero();
    return out;
}

} // namespace swappoly
