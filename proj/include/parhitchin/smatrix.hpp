#pragma once

#include <optional>
#include <vector>

#include "parhitchin/series.hpp"

namespace parhitchin {

// Exact value or certified lower bound ("at least value") for a valuation.
struct ValOrBound {
    long long value = 0;
    bool exact = true;
};

class SMatrix {
public:
    SMatrix() = default;
    SMatrix(const Field& F, int rows, int cols, int prec);  // zero matrix
    static SMatrix identity(const Field& F, int n, int prec);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return *F_; }
    Series& at(int i, int j) { return a_[size_t(i) * size_t(cols_) + size_t(j)]; }
    const Series& at(int i, int j) const { return a_[size_t(i) * size_t(cols_) + size_t(j)]; }

    SMatrix mul(const SMatrix& o) const;
    SMatrix add(const SMatrix& o) const;
    SMatrix sub(const SMatrix& o) const;
    SMatrix mul_series(const Series& s) const;
    SMatrix truncate(int prec) const;
    int min_precision() const;

    // columns [c0, c1) as vectors
    std::vector<std::vector<Series>> columns(int c0, int c1) const;

private:
    const Field* F_ = nullptr;
    int rows_ = 0, cols_ = 0;
    std::vector<Series> a_;
};

// Constant matrix over the residue field.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(const Field& F, int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return *F_; }
    Elem& at(int i, int j) { return a_[size_t(i) * size_t(cols_) + size_t(j)]; }
    Elem at(int i, int j) const { return a_[size_t(i) * size_t(cols_) + size_t(j)]; }

    CMatrix mul(const CMatrix& o) const;
    bool is_zero() const;

private:
    const Field* F_ = nullptr;
    int rows_ = 0, cols_ = 0;
    std::vector<Elem> a_;
};

int rank(CMatrix m);  // Gaussian elimination over the field

CMatrix reduce_mod_t(const SMatrix& m);

// Valuation of det(M) via elimination with minimal-valuation pivoting.
// Returns a lower bound (exact = false) when precision runs out.
ValOrBound det_valuation(SMatrix m);

// Inverse of a matrix whose determinant is a unit; NotAUnit otherwise.
SMatrix inverse(SMatrix m);

// Solve M x = rhs where the solution is known to be integral (Cramer),
// using minimal-valuation pivoting with exact divisions.
// PrecisionTooLow / NotCoprime style failures surface as exceptions.
std::vector<Series> solve_integral(SMatrix m, std::vector<Series> rhs);

struct SmithKernel {
    // valuation of the k-th diagonal entry; nullopt = zero at precision
    std::vector<std::optional<int>> diag_valuations;
    SMatrix col_transform;         // invertible over the series ring
    std::vector<int> kernel_cols;  // columns of col_transform spanning the saturated kernel
};

// Diagonalization over the truncated DVR with minimal-valuation pivoting.
// Ambiguous pivots (an entry that is zero at a precision not exceeding the
// best certified pivot valuation) raise PrecisionTooLow.
SmithKernel smith_kernel(SMatrix m);

}  // namespace parhitchin
