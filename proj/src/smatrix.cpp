#include "parhitchin/smatrix.hpp"

#include <algorithm>
#include <limits>

namespace parhitchin {

SMatrix::SMatrix(const Field& F, int rows, int cols, int prec)
    : F_(&F), rows_(rows), cols_(cols), a_(size_t(rows) * size_t(cols), Series(F, prec)) {}

SMatrix SMatrix::identity(const Field& F, int n, int prec) {
    SMatrix m(F, n, n, prec);
    for (int i = 0; i < n; ++i) m.at(i, i) = Series::t_power(F, prec, 0);
    return m;
}

SMatrix SMatrix::mul(const SMatrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix shape mismatch");
    SMatrix r(*F_, rows_, o.cols_, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            Series acc = at(i, 0).mul(o.at(0, j));
            for (int k = 1; k < cols_; ++k) acc = acc.add(at(i, k).mul(o.at(k, j)));
            r.at(i, j) = std::move(acc);
        }
    return r;
}

SMatrix SMatrix::add(const SMatrix& o) const {
    SMatrix r(*F_, rows_, cols_, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).add(o.at(i, j));
    return r;
}

SMatrix SMatrix::sub(const SMatrix& o) const {
    SMatrix r(*F_, rows_, cols_, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).sub(o.at(i, j));
    return r;
}

SMatrix SMatrix::mul_series(const Series& s) const {
    SMatrix r(*F_, rows_, cols_, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).mul(s);
    return r;
}

SMatrix SMatrix::truncate(int prec) const {
    SMatrix r(*F_, rows_, cols_, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).truncate(prec);
    return r;
}

int SMatrix::min_precision() const {
    int p = std::numeric_limits<int>::max();
    for (const Series& s : a_) p = std::min(p, s.precision());
    return a_.empty() ? 0 : p;
}

std::vector<std::vector<Series>> SMatrix::columns(int c0, int c1) const {
    std::vector<std::vector<Series>> out;
    for (int j = c0; j < c1; ++j) {
        std::vector<Series> col;
        col.reserve(size_t(rows_));
        for (int i = 0; i < rows_; ++i) col.push_back(at(i, j));
        out.push_back(std::move(col));
    }
    return out;
}

CMatrix::CMatrix(const Field& F, int rows, int cols)
    : F_(&F), rows_(rows), cols_(cols), a_(size_t(rows) * size_t(cols), 0) {}

CMatrix CMatrix::mul(const CMatrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix shape mismatch");
    CMatrix r(*F_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            Elem v = at(i, k);
            if (!v) continue;
            for (int j = 0; j < o.cols_; ++j)
                if (o.at(k, j)) r.at(i, j) = F_->add(r.at(i, j), F_->mul(v, o.at(k, j)));
        }
    return r;
}

bool CMatrix::is_zero() const {
    for (Elem v : a_)
        if (v) return false;
    return true;
}

int rank(CMatrix m) {
    const Field& F = m.field();
    int rk = 0;
    int rows = m.rows(), cols = m.cols();
    for (int col = 0; col < cols && rk < rows; ++col) {
        int piv = -1;
        for (int i = rk; i < rows; ++i)
            if (m.at(i, col)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != rk)
            for (int j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(rk, j));
        Elem inv = F.inv(m.at(rk, col));
        for (int i = rk + 1; i < rows; ++i) {
            Elem f = F.mul(m.at(i, col), inv);
            if (!f) continue;
            for (int j = col; j < cols; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(rk, j)));
        }
        ++rk;
    }
    return rk;
}

CMatrix reduce_mod_t(const SMatrix& m) {
    if (m.min_precision() < 1) throw PrecisionTooLow("matrix entry has no constant term");
    CMatrix r(m.field(), m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).coeff(0);
    return r;
}

namespace {

struct PivotScan {
    int pi = -1, pj = -1;
    int val = std::numeric_limits<int>::max();  // best certified valuation
    int zero_prec = std::numeric_limits<int>::max();
    bool has_certified() const { return pi >= 0; }
    // a zero-at-precision entry whose precision does not exceed the best
    // certified valuation could hide a smaller pivot
    bool ambiguous() const { return has_certified() && zero_prec <= val; }
};

PivotScan scan_pivot(const SMatrix& m, int k) {
    PivotScan s;
    for (int i = k; i < m.rows(); ++i)
        for (int j = k; j < m.cols(); ++j) {
            const Series& e = m.at(i, j);
            auto v = e.valuation();
            if (v) {
                if (*v < s.val) {
                    s.val = *v;
                    s.pi = i;
                    s.pj = j;
                }
            } else {
                s.zero_prec = std::min(s.zero_prec, e.precision());
            }
        }
    return s;
}

void swap_rows(SMatrix& m, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(SMatrix& m, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

}  // namespace

ValOrBound det_valuation(SMatrix m) {
    if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
    const int n = m.rows();
    long long total = 0;
    for (int k = 0; k < n; ++k) {
        PivotScan s = scan_pivot(m, k);
        if (!s.has_certified() || s.ambiguous()) {
            // sound lower bound: each remaining row contributes at least its
            // smallest valuation lower bound to every term of the minor
            long long bound = total;
            for (int i = k; i < n; ++i) {
                int rowmin = std::numeric_limits<int>::max();
                for (int j = k; j < n; ++j) rowmin = std::min(rowmin, m.at(i, j).valuation_lb());
                bound += rowmin;
            }
            return {bound, false};
        }
        swap_rows(m, k, s.pi);
        swap_cols(m, k, s.pj);
        total += s.val;
        Series unit_inv = m.at(k, k).div_tpow(s.val).inverse();
        for (int i = k + 1; i < n; ++i) {
            Series factor = m.at(i, k).div_tpow(s.val).mul(unit_inv);
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = m.at(i, j).sub(factor.mul(m.at(k, j)));
            m.at(i, k) = Series(m.field(), m.at(i, k).precision());
        }
    }
    return {total, true};
}

SMatrix inverse(SMatrix m) {
    if (m.rows() != m.cols()) throw Error("inverse of a non-square matrix");
    const int n = m.rows();
    const Field& F = m.field();
    SMatrix aug = SMatrix::identity(F, n, m.min_precision());
    std::vector<int> colperm(size_t(n), 0);
    for (int i = 0; i < n; ++i) colperm[size_t(i)] = i;
    for (int k = 0; k < n; ++k) {
        int pi = -1, pj = -1;
        for (int i = k; i < n && pi < 0; ++i)
            for (int j = k; j < n; ++j)
                if (m.at(i, j).is_unit()) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) throw NotAUnit("matrix determinant is not a unit");
        swap_rows(m, k, pi);
        swap_rows(aug, k, pi);
        swap_cols(m, k, pj);
        std::swap(colperm[size_t(k)], colperm[size_t(pj)]);
        Series inv = m.at(k, k).inverse();
        for (int j = 0; j < n; ++j) {
            m.at(k, j) = m.at(k, j).mul(inv);
            aug.at(k, j) = aug.at(k, j).mul(inv);
        }
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            Series f = m.at(i, k);
            if (f.zero_at_precision()) continue;
            for (int j = 0; j < n; ++j) {
                m.at(i, j) = m.at(i, j).sub(f.mul(m.at(k, j)));
                aug.at(i, j) = aug.at(i, j).sub(f.mul(aug.at(k, j)));
            }
        }
    }
    // undo the column permutation: row colperm[k] of the inverse is row k of aug
    SMatrix out(F, n, n, 0);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) out.at(colperm[size_t(k)], j) = aug.at(k, j);
    return out;
}

std::vector<Series> solve_integral(SMatrix m, std::vector<Series> rhs) {
    if (m.rows() != m.cols() || int(rhs.size()) != m.rows())
        throw Error("solve_integral shape mismatch");
    const int n = m.rows();
    std::vector<int> colperm(size_t(n), 0);
    for (int i = 0; i < n; ++i) colperm[size_t(i)] = i;
    for (int k = 0; k < n; ++k) {
        PivotScan s = scan_pivot(m, k);
        if (!s.has_certified())
            throw NotCoprime("linear system is singular at this precision");
        if (s.ambiguous()) throw PrecisionTooLow("ambiguous pivot in linear solve");
        swap_rows(m, k, s.pi);
        std::swap(rhs[size_t(k)], rhs[size_t(s.pi)]);
        swap_cols(m, k, s.pj);
        std::swap(colperm[size_t(k)], colperm[size_t(s.pj)]);
        Series unit_inv = m.at(k, k).div_tpow(s.val).inverse();
        for (int i = k + 1; i < n; ++i) {
            Series factor = m.at(i, k).div_tpow(s.val).mul(unit_inv);
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = m.at(i, j).sub(factor.mul(m.at(k, j)));
            rhs[size_t(i)] = rhs[size_t(i)].sub(factor.mul(rhs[size_t(k)]));
            m.at(i, k) = Series(m.field(), m.at(i, k).precision());
        }
    }
    // back substitution; integrality of the solution keeps divisions exact
    std::vector<Series> x{size_t(n), Series()};
    for (int k = n - 1; k >= 0; --k) {
        Series acc = rhs[size_t(k)];
        for (int j = k + 1; j < n; ++j) acc = acc.sub(m.at(k, j).mul(x[size_t(j)]));
        int pv = *m.at(k, k).valuation();
        Series unit_inv = m.at(k, k).div_tpow(pv).inverse();
        x[size_t(k)] = acc.div_tpow(pv).mul(unit_inv);
    }
    std::vector<Series> out{size_t(n), Series()};
    for (int k = 0; k < n; ++k) out[size_t(colperm[size_t(k)])] = x[size_t(k)];
    return out;
}

SmithKernel smith_kernel(SMatrix m) {
    const Field& F = m.field();
    const int rows = m.rows(), cols = m.cols();
    SmithKernel result;
    result.col_transform = SMatrix::identity(F, cols, m.min_precision());
    result.diag_valuations.assign(size_t(std::min(rows, cols)), std::nullopt);
    int steps = std::min(rows, cols);
    for (int k = 0; k < steps; ++k) {
        PivotScan s = scan_pivot(m, k);
        if (!s.has_certified()) break;  // remaining block is zero at precision
        if (s.ambiguous()) throw PrecisionTooLow("ambiguous Smith pivot");
        swap_rows(m, k, s.pi);
        swap_cols(m, k, s.pj);
        swap_cols(result.col_transform, k, s.pj);
        result.diag_valuations[size_t(k)] = s.val;
        Series unit_inv = m.at(k, k).div_tpow(s.val).inverse();
        for (int i = k + 1; i < rows; ++i) {
            Series factor = m.at(i, k).div_tpow(s.val).mul(unit_inv);
            for (int j = k + 1; j < cols; ++j)
                m.at(i, j) = m.at(i, j).sub(factor.mul(m.at(k, j)));
            m.at(i, k) = Series(F, m.at(i, k).precision());
        }
        for (int j = k + 1; j < cols; ++j) {
            Series factor = m.at(k, j).div_tpow(s.val).mul(unit_inv);
            for (int i = k + 1; i < rows; ++i)
                m.at(i, j) = m.at(i, j).sub(factor.mul(m.at(i, k)));
            m.at(k, j) = Series(F, m.at(k, j).precision());
            // column op on the transform: col_j -= factor * col_k
            for (int i = 0; i < cols; ++i)
                result.col_transform.at(i, j) =
                    result.col_transform.at(i, j).sub(factor.mul(result.col_transform.at(i, k)));
        }
    }
    for (int k = 0; k < cols; ++k) {
        bool zero = k >= steps || !result.diag_valuations[size_t(k)].has_value();
        if (zero) result.kernel_cols.push_back(k);
    }
    return result;
}

}  // namespace parhitchin
