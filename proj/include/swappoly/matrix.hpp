#ifndef SWAPPOLY_MATRIX_HPP
#define SWAPPOLY_MATRIX_HPP

#include <initializer_list>
#include <optional>
#include <vector>

#include "swappoly/rational.hpp"

namespace swappoly {

class Rng;

// Dense exact matrix over Rational, row-major.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols);
    Matrix(int rows, int cols, std::vector<Rational> entries);
    // convenience for literals in tests: {{1,2},{3,4}}
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(int n);
    static Matrix unit(int n, int i, int j); // matrix unit e_{ij}, zero-based

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Rational& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
    Rational& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& c, const Matrix& a);
    Matrix operator-() const;
    Matrix& operator+=(const Matrix& o);

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const;
    Rational trace() const; // square only
    bool is_zero() const;
    bool is_scalar() const; // c * identity for some c (square only)

    // exact determinant via fraction-free (Bareiss) elimination after clearing
    // row denominators; square only
    Rational det() const;
    int rank() const;
    Matrix adjugate() const; // square only

    // Solves A x = b (b: rows() x 1..k). Returns nullopt when A is singular
    // (or, for non-square A, when the system is not uniquely solvable).
    std::optional<Matrix> solve(const Matrix& b) const;
    std::optional<Matrix> inverse() const;
    // Particular solution of a possibly underdetermined consistent system,
    // with non-pivot coordinates pinned to zero; nullopt when inconsistent.
    std::optional<Matrix> solve_any(const Matrix& b) const;

    std::string str() const;

  private:
    int rows_, cols_;
    std::vector<Rational> e_;
};

Matrix kron(const Matrix& a, const Matrix& b);

// integer matrix with entries uniform in [lo, hi]
Matrix random_int_matrix(Rng& rng, int d, long lo = -9, long hi = 9);
// same but with zero trace (last diagonal entry balances the others)
Matrix random_traceless_matrix(Rng& rng, int d, long lo = -9, long hi = 9);

} // namespace swappoly

#endif
