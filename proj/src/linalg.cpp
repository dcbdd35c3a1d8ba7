#include "plumbtop/linalg.hpp"

#include "plumbtop/error.hpp"

#include <cassert>
#include <cstdlib>
#include <utility>

namespace plumbtop {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw ValidationError("matrix dimensions must be non-negative");
    entries_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

std::size_t IntMatrix::index(int r, int c) const {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw ValidationError("matrix product dimension mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const mpz_class& a = at(i, k);
            if (a == 0)
                continue;
            for (int j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

bool IntMatrix::operator==(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != rhs.entries_[i])
            return false;
    return true;
}

IntMatrix diagonal_matrix(int rows, int cols, const std::vector<mpz_class>& diag) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < diag.size(); ++i)
        m.at(static_cast<int>(i), static_cast<int>(i)) = diag[i];
    return m;
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
    if (a == b)
        return;
    for (int j = 0; j < m.cols(); ++j)
        std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, int a, int b) {
    if (a == b)
        return;
    for (int i = 0; i < m.rows(); ++i)
        std::swap(m.at(i, a), m.at(i, b));
}

void add_row_multiple(IntMatrix& m, int dst, int src, const mpz_class& factor) {
    for (int j = 0; j < m.cols(); ++j)
        m.at(dst, j) += factor * m.at(src, j);
}

void add_col_multiple(IntMatrix& m, int dst, int src, const mpz_class& factor) {
    for (int i = 0; i < m.rows(); ++i)
        m.at(i, dst) += factor * m.at(i, src);
}

void negate_row(IntMatrix& m, int r) {
    for (int j = 0; j < m.cols(); ++j)
        m.at(r, j) = -m.at(r, j);
}

// Smallest nonzero entry (in absolute value) of the trailing submatrix.
bool find_pivot(const IntMatrix& a, int t, int& pr, int& pc) {
    bool found = false;
    mpz_class best;
    for (int i = t; i < a.rows(); ++i)
        for (int j = t; j < a.cols(); ++j) {
            if (a.at(i, j) == 0)
                continue;
            mpz_class v = abs(a.at(i, j));
            if (!found || v < best) {
                best = v;
                pr = i;
                pc = j;
                found = true;
            }
        }
    return found;
}

} // namespace

SnfResult smith_normal_form(const IntMatrix& input) {
    const int m = input.rows();
    const int n = input.cols();
    const int steps = m < n ? m : n;

    IntMatrix a = input;
    IntMatrix u = IntMatrix::identity(m);
    IntMatrix v = IntMatrix::identity(n);

    int t = 0;
    for (; t < steps; ++t) {
        int pr = 0, pc = 0;
        if (!find_pivot(a, t, pr, pc))
            break;

        for (;;) {
            find_pivot(a, t, pr, pc);
            swap_rows(a, t, pr);
            swap_rows(u, t, pr);
            swap_cols(a, t, pc);
            swap_cols(v, t, pc);

            // Clear the pivot column and row with truncated quotients; any
            // nonzero remainder becomes a strictly smaller pivot candidate.
            for (int i = t + 1; i < m; ++i) {
                if (a.at(i, t) == 0)
                    continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), a.at(i, t).get_mpz_t(), a.at(t, t).get_mpz_t());
                if (q != 0) {
                    add_row_multiple(a, i, t, -q);
                    add_row_multiple(u, i, t, -q);
                }
            }
            for (int j = t + 1; j < n; ++j) {
                if (a.at(t, j) == 0)
                    continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), a.at(t, j).get_mpz_t(), a.at(t, t).get_mpz_t());
                if (q != 0) {
                    add_col_multiple(a, j, t, -q);
                    add_col_multiple(v, j, t, -q);
                }
            }

            bool clean = true;
            for (int i = t + 1; i < m && clean; ++i)
                if (a.at(i, t) != 0)
                    clean = false;
            for (int j = t + 1; j < n && clean; ++j)
                if (a.at(t, j) != 0)
                    clean = false;
            if (!clean)
                continue;

            // Divisibility sweep: fold any non-divisible interior entry into
            // row t so the pivot descends to the gcd.
            bool divides_all = true;
            for (int i = t + 1; i < m && divides_all; ++i)
                for (int j = t + 1; j < n && divides_all; ++j) {
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        add_row_multiple(a, t, i, 1);
                        add_row_multiple(u, t, i, 1);
                        divides_all = false;
                    }
                }
            if (divides_all)
                break;
        }

        if (a.at(t, t) < 0) {
            negate_row(a, t);
            negate_row(u, t);
        }
    }

    SnfResult res;
    res.u = std::move(u);
    res.v = std::move(v);
    res.diag.resize(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i)
        res.diag[static_cast<std::size_t>(i)] = a.at(i, i);
    res.rank = t;
    return res;
}

mpz_class determinant(const IntMatrix& input) {
    if (!input.square())
        throw ValidationError("determinant requires a square matrix");
    const int n = input.rows();
    if (n == 0)
        return 1;

    IntMatrix a = input;
    int sign = 1;
    mpz_class prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    swap = i;
                    break;
                }
            if (swap < 0)
                return 0;
            swap_rows(a, k, swap);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

int nullity(const IntMatrix& m) {
    if (!m.square())
        throw ValidationError("nullity requires a square matrix");
    return m.rows() - smith_normal_form(m).rank;
}

namespace {

// Leading principal minors via Bareiss pivots; sign(k) selects the required
// sign of the k-th minor (1-based).
bool definite_with_signs(const IntMatrix& input, bool negative) {
    if (!input.square())
        throw ValidationError("definiteness test requires a square matrix");
    const int n = input.rows();
    IntMatrix a = input;
    mpz_class prev = 1;
    for (int k = 0; k < n; ++k) {
        const mpz_class& minor = a.at(k, k); // equals leading principal minor of size k+1
        if (minor == 0)
            return false;
        bool want_negative = negative && (k % 2 == 0);
        if (want_negative ? minor > 0 : minor < 0)
            return false;
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a.at(k, k);
    }
    return true;
}

} // namespace

bool is_negative_definite(const IntMatrix& m) {
    return definite_with_signs(m, true);
}

bool is_positive_definite(const IntMatrix& m) {
    return definite_with_signs(m, false);
}

} // namespace plumbtop
