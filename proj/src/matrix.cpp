#include "swappoly/matrix.hpp"

#include <sstream>
#include <utility>

#include "swappoly/error.hpp"
#include "swappoly/rng.hpp"

namespace swappoly {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
    e_.assign(static_cast<size_t>(rows) * cols, Rational());
}

Matrix::Matrix(int rows, int cols, std::vector<Rational> entries) : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != static_cast<size_t>(rows) * cols) throw DimensionError("entry count does not match shape");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    e_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_) throw DimensionError("ragged initializer");
        for (long v : r) e_.emplace_back(v);
    }
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Matrix Matrix::unit(int n, int i, int j) {
    Matrix m(n, n);
    m.at(i, j) = Rational(1);
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix add: shape mismatch");
    Matrix r(a.rows_, a.cols_);
    for (size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] + b.e_[k];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sub: shape mismatch");
    Matrix r(a.rows_, a.cols_);
    for (size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] - b.e_[k];
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix mul: inner dimensions differ");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int t = 0; t < a.cols_; ++t) {
            const Rational& av = a.at(i, t);
            if (av.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                if (b.at(t, j).is_zero()) continue;
                r.at(i, j) += av * b.at(t, j);
            }
        }
    }
    return r;
}

Matrix operator*(const Rational& c, const Matrix& a) {
    Matrix r(a.rows_, a.cols_);
    for (size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = c * a.e_[k];
    return r;
}

Matrix Matrix::operator-() const { return Rational(-1) * *this; }

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix add: shape mismatch");
    for (size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t k = 0; k < e_.size(); ++k)
        if (e_[k] != o.e_[k]) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Rational Matrix::trace() const {
    if (!is_square()) throw DimensionError("trace of non-square matrix");
    Rational t;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& v : e_)
        if (!v.is_zero()) return false;
    return true;
}

bool Matrix::is_scalar() const {
    if (!is_square()) throw DimensionError("is_scalar on non-square matrix");
    if (rows_ == 0) return true;
    const Rational& c = at(0, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (i == j ? at(i, j) != c : !at(i, j).is_zero()) return false;
        }
    return true;
}

Rational Matrix::det() const {
    if (!is_square()) throw DimensionError("det of non-square matrix");
    const int n = rows_;
    if (n == 0) return Rational(1);

    // Clear denominators row by row, then run Bareiss on the integer matrix.
    // det(original) = det(integer matrix) / prod(row factors).
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
    Integer denom_product(1);
    for (int i = 0; i < n; ++i) {
        Integer l(1);
        for (int j = 0; j < n; ++j) l = Integer::lcm(l, at(i, j).denominator());
        denom_product *= l;
        const Rational scale{l};
        for (int j = 0; j < n; ++j) m[i][j] = (scale * at(i, j)).numerator();
    }

    Integer prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k].is_zero()) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    p = i;
                    break;
                }
            if (p < 0) return Rational(0);
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = Integer::div_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            }
            m[i][k] = Integer(0);
        }
        prev = m[k][k];
    }
    Integer d = m[n - 1][n - 1];
    if (sign < 0) d = -d;
    return Rational(d, denom_product);
}

namespace {

// Row echelon over Q. Returns rank; when `reduce` also back-substitutes so
// that pivot columns become unit vectors. Operates on an augmented matrix.
int echelon(std::vector<std::vector<Rational>>& m, int cols_for_pivots, bool reduce,
            std::vector<int>* pivot_cols = nullptr) {
    const int nrows = static_cast<int>(m.size());
    int r = 0;
    for (int c = 0; c < cols_for_pivots && r < nrows; ++c) {
        // smallest nonzero pivot keeps the rational entries from blowing up
        int piv = -1;
        size_t best = 0;
        for (int i = r; i < nrows; ++i) {
            if (m[i][c].is_zero()) continue;
            const size_t sz = mpz_sizeinbase(mpq_numref(m[i][c].raw()), 2) +
                              mpz_sizeinbase(mpq_denref(m[i][c].raw()), 2);
            if (piv < 0 || sz < best) {
                piv = i;
                best = sz;
            }
        }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        const Rational inv = m[r][c].inverse();
        for (auto& v : m[r]) v *= inv;
        for (int i = reduce ? 0 : r + 1; i < nrows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            const Rational f = m[i][c];
            for (size_t j = c; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return r;
}

} // namespace

int Matrix::rank() const {
    std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(cols_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m[i][j] = at(i, j);
    return echelon(m, cols_, false);
}

std::optional<Matrix> Matrix::solve(const Matrix& b) const {
    if (b.rows_ != rows_) throw DimensionError("solve: rhs row count mismatch");
    std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(cols_ + b.cols_));
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) m[i][j] = at(i, j);
        for (int j = 0; j < b.cols_; ++j) m[i][cols_ + j] = b.at(i, j);
    }
    std::vector<int> pivots;
    const int r = echelon(m, cols_, true, &pivots);
    if (r < cols_) return std::nullopt; // singular or underdetermined
    // consistency of remaining rows
    for (int i = r; i < rows_; ++i)
        for (int j = 0; j < b.cols_; ++j)
            if (!m[i][cols_ + j].is_zero()) return std::nullopt;
    Matrix x(cols_, b.cols_);
    for (int k = 0; k < r; ++k)
        for (int j = 0; j < b.cols_; ++j) x.at(pivots[k], j) = m[k][cols_ + j];
    return x;
}

std::optional<Matrix> Matrix::solve_any(const Matrix& b) const {
    if (b.rows_ != rows_) throw DimensionError("solve_any: rhs row count mismatch");
    std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(cols_ + b.cols_));
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) m[i][j] = at(i, j);
        for (int j = 0; j < b.cols_; ++j) m[i][cols_ + j] = b.at(i, j);
    }
    std::vector<int> pivots;
    const int r = echelon(m, cols_, true, &pivots);
    for (int i = r; i < rows_; ++i) {
        bool zero_row = true;
        for (int j = 0; j < cols_ && zero_row; ++j) zero_row = m[i][j].is_zero();
        if (!zero_row) continue;
        for (int j = 0; j < b.cols_; ++j)
            if (!m[i][cols_ + j].is_zero()) return std::nullopt;
    }
    Matrix x(cols_, b.cols_);
    for (int k = 0; k < r; ++k)
        for (int j = 0; j < b.cols_; ++j) x.at(pivots[k], j) = m[k][cols_ + j];
    return x;
}

std::optional<Matrix> Matrix::inverse() const {
    if (!is_square()) throw DimensionError("inverse of non-square matrix");
    return solve(identity(rows_));
}

Matrix Matrix::adjugate() const {
    if (!is_square()) throw DimensionError("adjugate of non-square matrix");
    const int n = rows_;
    Matrix adj(n, n);
    if (n == 0) return adj;
    // cofactor expansion; n stays small here (Gram matrices)
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Matrix minor(n - 1, n - 1);
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(rr, cc) = at(r, c);
                    ++cc;
                }
                ++rr;
            }
            Rational cof = minor.det();
            if ((i + j) % 2 != 0) cof = -cof;
            adj.at(j, i) = cof;
        }
    }
    return adj;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
    }
    os << "]";
    return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l) {
                    if (b.at(k, l).is_zero()) continue;
                    r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
                }
        }
    return r;
}

Matrix random_int_matrix(Rng& rng, int d, long lo, long hi) {
    Matrix m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m.at(i, j) = Rational(rng.uniform(lo, hi));
    return m;
}

Matrix random_traceless_matrix(Rng& rng, int d, long lo, long hi) {
    Matrix m = random_int_matrix(rng, d, lo, hi);
    Rational partial;
    for (int i = 0; i + 1 < d; ++i) partial += m.at(i, i);
    m.at(d - 1, d - 1) = -partial;
    return m;
}

} // namespace swappoly
