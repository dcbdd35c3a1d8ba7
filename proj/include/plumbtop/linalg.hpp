#pragma once

#include <gmpxx.h>

#include <vector>

namespace plumbtop {

// Dense integer matrix with arbitrary-precision entries, row-major.
// Everything in this toolkit is small (at most a few dozen rows), so no
// attempt is made at sparsity or performance beyond exactness.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    mpz_class& at(int r, int c) { return entries_[index(r, c)]; }
    const mpz_class& at(int r, int c) const { return entries_[index(r, c)]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const;

private:
    std::size_t index(int r, int c) const;

    int rows_ = 0;
    int cols_ = 0;
    std::vector<mpz_class> entries_;
};

IntMatrix diagonal_matrix(int rows, int cols, const std::vector<mpz_class>& diag);

// Smith normal form u*m*v = diag(d).  Invariant factors are non-negative,
// each divides the next, and zeros (rank deficiency) come last.
struct SnfResult {
    std::vector<mpz_class> diag;
    IntMatrix u;
    IntMatrix v;
    int rank = 0;
};

SnfResult smith_normal_form(const IntMatrix& m);

// Exact determinant by fraction-free (Bareiss) elimination.  Square input.
mpz_class determinant(const IntMatrix& m);

// Dimension of the rational kernel of a square matrix.
int nullity(const IntMatrix& m);

// Sylvester criterion over exact integers: leading principal minors
// strictly alternate in sign starting negative (resp. all positive).
// A zero leading minor means "not definite".
bool is_negative_definite(const IntMatrix& m);
bool is_positive_definite(const IntMatrix& m);

} // namespace plumbtop
