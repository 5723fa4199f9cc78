#include "parhitchin/local_higgs.hpp"

#include <algorithm>

#include "parhitchin/rng.hpp"

namespace parhitchin {

FlaggedLattice::FlaggedLattice(LeviType levi_in, FieldSpec field_in, int precision_in)
    : levi(std::move(levi_in)), field(field_in), precision(precision_in), rank(levi.rank()) {
    if (precision < 1) throw Error("lattice precision must be positive");
    if (field.p == 2 && rank == 2)
        throw Error("rank-2 spectral data over characteristic 2 is rejected");
    for (int b = 0; b < levi.length(); ++b)
        for (int k = 0; k < levi.multiplicities()[size_t(b)]; ++k) block_of.push_back(b);
}

bool is_strongly_parabolic(const SMatrix& m, const FlaggedLattice& lat) {
    if (m.rows() != lat.rank || m.cols() != lat.rank) return false;
    if (m.min_precision() < 1) throw PrecisionTooLow("matrix entries lack constant terms");
    for (int i = 0; i < lat.rank; ++i)
        for (int j = 0; j < lat.rank; ++j)
            if (lat.block_of[size_t(i)] <= lat.block_of[size_t(j)] && m.at(i, j).coeff(0))
                return false;
    return true;
}

StrongParabolicEndo::StrongParabolicEndo(FlaggedLattice lattice, SMatrix matrix)
    : lat_(std::move(lattice)), mat_(std::move(matrix)) {
    if (!is_strongly_parabolic(mat_, lat_)) throw Error("matrix is not strongly parabolic");
}

StrongParabolicEndo random_strong_parabolic(const FlaggedLattice& lat, uint64_t seed) {
    const Field& F = field_of(lat.field);
    const int r = lat.rank, N = lat.precision;
    SMatrix m(F, r, r, N);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            SplitMix64 rng(mix_seed(seed, uint64_t(i) * uint64_t(r) + uint64_t(j)));
            std::vector<Elem> c(size_t(N), 0);
            if (lat.block_of[size_t(i)] > lat.block_of[size_t(j)]) c[0] = rng.below(F.size());
            for (int k = 1; k < N; ++k) c[size_t(k)] = rng.below(F.size());
            m.at(i, j) = Series(F, N, std::move(c));
        }
    return StrongParabolicEndo(lat, std::move(m));
}

SPoly char_poly(const SMatrix& m) {
    if (m.rows() != m.cols()) throw Error("char poly of a non-square matrix");
    const Field& F = m.field();
    const int n = m.rows();
    const int prec = m.min_precision();
    Series one = Series::t_power(F, prec, 0);
    Series zero(F, prec);
    if (n == 0) return SPoly(F, {one});
    // Berkowitz: c_k = T_k c_{k-1}, leading coefficient first
    std::vector<Series> c = {one, m.at(0, 0).neg()};
    for (int k = 2; k <= n; ++k) {
        // Toeplitz column: 1, -a, -R S, -R A S, -R A^2 S, ... for the
        // (k-1)x(k-1) leading block A, row R, column S
        std::vector<Series> col;
        col.reserve(size_t(k) + 1);
        col.push_back(one);
        col.push_back(m.at(k - 1, k - 1).neg());
        std::vector<Series> w;
        w.reserve(size_t(k - 1));
        for (int i = 0; i < k - 1; ++i) w.push_back(m.at(i, k - 1));
        for (int j = 2; j <= k; ++j) {
            Series dot = zero;
            for (int i = 0; i < k - 1; ++i) dot = dot.add(m.at(k - 1, i).mul(w[size_t(i)]));
            col.push_back(dot.neg());
            if (j == k) break;
            std::vector<Series> w2;
            w2.reserve(size_t(k - 1));
            for (int i = 0; i < k - 1; ++i) {
                Series acc = zero;
                for (int l = 0; l < k - 1; ++l) acc = acc.add(m.at(i, l).mul(w[size_t(l)]));
                w2.push_back(std::move(acc));
            }
            w = std::move(w2);
        }
        std::vector<Series> next(size_t(k) + 1, zero);
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j < k; ++j)
                if (i - j >= 0 && i - j <= k)
                    next[size_t(i)] = next[size_t(i)].add(col[size_t(i - j)].mul(c[size_t(j)]));
        c = std::move(next);
    }
    std::reverse(c.begin(), c.end());  // ascending in lambda
    return SPoly(F, std::move(c));
}

SPoly char_poly(const StrongParabolicEndo& theta) { return char_poly(theta.matrix()); }

BoundReport verify_valuation_bounds(const SPoly& f, const LevelFunction& gamma) {
    if (f.degree() != gamma.length())
        throw DegreeMismatch("level function length must equal deg f");
    BoundReport rep;
    rep.pass = true;
    for (int i = 1; i <= f.degree(); ++i) {
        const Series& bi = f.b(i);
        BoundRow row;
        row.index = i;
        row.valuation = bi.valuation();
        row.precision = bi.precision();
        row.gamma = gamma.at(i);
        if (row.valuation)
            row.pass = *row.valuation >= row.gamma;
        else if (bi.precision() >= row.gamma)
            row.pass = true;  // v >= precision >= gamma_i
        else
            throw PrecisionTooLow("v(b_" + std::to_string(i) + ") not certified");
        rep.pass = rep.pass && row.pass;
        rep.rows.push_back(row);
    }
    return rep;
}

namespace {

SMatrix eval_at_matrix(const SPoly& f, const SMatrix& m) {
    const Field& F = m.field();
    const int n = m.rows();
    int prec = std::min(m.min_precision(), f.min_precision());
    SMatrix acc(F, n, n, prec);
    for (int i = 0; i < n; ++i) acc.at(i, i) = f.coeff(f.degree()).truncate(prec);
    for (int j = f.degree() - 1; j >= 0; --j) {
        acc = m.mul(acc);
        for (int i = 0; i < n; ++i) acc.at(i, i) = acc.at(i, i).add(f.coeff(j));
    }
    return acc;
}

}  // namespace

std::vector<std::vector<Series>> kernel_lattice(const StrongParabolicEndo& theta,
                                                const SPoly& f_i) {
    if (!f_i.is_monic()) throw Error("kernel_lattice needs a monic factor");
    SPoly cp = char_poly(theta);
    SPoly rem = cp.divrem(f_i).second;
    for (int j = 0; j <= rem.degree(); ++j)
        if (!rem.coeff(j).zero_at_precision())
            throw Error("factor does not divide the characteristic polynomial");
    SMatrix m = eval_at_matrix(f_i, theta.matrix());
    SmithKernel sk = smith_kernel(std::move(m));
    if (int(sk.kernel_cols.size()) != f_i.degree())
        throw RankMismatch("kernel rank " + std::to_string(sk.kernel_cols.size()) +
                           " != deg f_i = " + std::to_string(f_i.degree()));
    std::vector<std::vector<Series>> basis;
    for (int col : sk.kernel_cols) {
        std::vector<Series> v;
        v.reserve(size_t(sk.col_transform.rows()));
        for (int i = 0; i < sk.col_transform.rows(); ++i)
            v.push_back(sk.col_transform.at(i, col));
        basis.push_back(std::move(v));
    }
    return basis;
}

DecompositionResult decompose(const StrongParabolicEndo& theta,
                              const std::vector<SPoly>& factors) {
    const Field& F = theta.matrix().field();
    const int r = theta.lattice().rank;
    if (factors.empty()) throw Error("decompose needs at least one factor");

    int degsum = 0;
    for (const SPoly& f : factors) {
        if (!is_eisenstein(f)) throw GenericityViolation("factor is not Eisenstein");
        degsum += f.degree();
    }
    if (degsum != r) throw DegreeMismatch("factor degrees do not sum to the rank");
    // equal-degree factors must have constant terms distinct mod t^2
    for (size_t i = 0; i < factors.size(); ++i)
        for (size_t j = i + 1; j < factors.size(); ++j) {
            if (factors[i].degree() != factors[j].degree()) continue;
            const Series& a = factors[i].coeff(0);
            const Series& b = factors[j].coeff(0);
            if (a.precision() < 2 || b.precision() < 2)
                throw PrecisionTooLow("constant terms not separated at this precision");
            if (a.coeff(1) == b.coeff(1))
                throw GenericityViolation("constant terms collide mod t^2");
        }
    // product must reproduce the characteristic polynomial
    SPoly prod = factors[0];
    for (size_t i = 1; i < factors.size(); ++i) prod = prod.mul(factors[i]);
    SPoly cp = char_poly(theta);
    int checkprec = std::min(prod.min_precision(), cp.min_precision());
    if (!cp.truncate_coeffs(checkprec).congruent(prod.truncate_coeffs(checkprec), checkprec))
        throw Error("factor product does not match the characteristic polynomial");

    DecompositionResult result;
    SMatrix assembly(F, r, r, theta.lattice().precision);
    int col = 0;
    for (const SPoly& f : factors) {
        DecompositionSummand s;
        s.factor = f;
        s.basis = kernel_lattice(theta, f);
        for (const auto& v : s.basis) {
            for (int i = 0; i < r; ++i) assembly.at(i, col) = v[size_t(i)];
            ++col;
        }
        result.summands.push_back(std::move(s));
    }
    ValOrBound dv = det_valuation(assembly);
    if (!dv.exact || dv.value != 0)
        throw RankMismatch("assembly determinant is not a unit");
    // block structure of theta in the assembled basis
    SMatrix conj = inverse(assembly).mul(theta.matrix()).mul(assembly);
    int off = 0;
    for (auto& s : result.summands) {
        int d = s.factor.degree();
        SMatrix block(F, d, d, conj.min_precision());
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) block.at(i, j) = conj.at(off + i, off + j);
        // off-diagonal blocks must vanish at precision
        for (int i = 0; i < r; ++i)
            for (int j = off; j < off + d; ++j)
                if ((i < off || i >= off + d) && !conj.at(i, j).zero_at_precision())
                    throw RankMismatch("assembled basis does not block-diagonalize theta");
        s.block_char = char_poly(block);
        off += d;
    }
    result.assembly = std::move(assembly);
    return result;
}

JordanType jordan_type(const CMatrix& nilpotent) {
    const int r = nilpotent.rows();
    std::vector<int> ranks;  // rank of powers 0..r
    ranks.push_back(r);
    CMatrix pw = nilpotent;
    for (int i = 1; i <= r; ++i) {
        ranks.push_back(rank(pw));
        if (i < r) pw = pw.mul(nilpotent);
    }
    if (ranks.back() != 0) throw NotNilpotent("matrix power r is nonzero");
    // d_i = rank(p^{i-1}) - rank(p^i) counts blocks of size >= i;
    // the block sizes are the conjugate of (d_1, d_2, ...)
    std::vector<int> d;
    for (int i = 1; i <= r; ++i) {
        int di = ranks[size_t(i - 1)] - ranks[size_t(i)];
        if (di > 0) d.push_back(di);
    }
    return {conjugate(Partition(std::move(d)))};
}

JordanType jordan_type_mod_t(const StrongParabolicEndo& theta) {
    return jordan_type(reduce_mod_t(theta.matrix()));
}

namespace {

// basis of ker M as column vectors
std::vector<std::vector<Elem>> nullspace(const CMatrix& m0) {
    const Field& F = m0.field();
    CMatrix m = m0;
    int rows = m.rows(), cols = m.cols();
    std::vector<int> pivot_col;
    int rk = 0;
    for (int col = 0; col < cols && rk < rows; ++col) {
        int piv = -1;
        for (int i = rk; i < rows; ++i)
            if (m.at(i, col)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(rk, j));
        Elem inv = F.inv(m.at(rk, col));
        for (int j = 0; j < cols; ++j) m.at(rk, j) = F.mul(m.at(rk, j), inv);
        for (int i = 0; i < rows; ++i) {
            if (i == rk) continue;
            Elem f = m.at(i, col);
            if (!f) continue;
            for (int j = 0; j < cols; ++j) m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(rk, j)));
        }
        pivot_col.push_back(col);
        ++rk;
    }
    std::vector<std::vector<Elem>> basis;
    std::vector<bool> is_pivot(size_t(cols), false);
    for (int c : pivot_col) is_pivot[size_t(c)] = true;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[size_t(free)]) continue;
        std::vector<Elem> v(size_t(cols), 0);
        v[size_t(free)] = 1;
        for (int k = 0; k < rk; ++k)
            v[size_t(pivot_col[size_t(k)])] = F.neg(m.at(k, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

CMatrix cmatrix_inverse(const CMatrix& m0) {
    const Field& F = m0.field();
    int n = m0.rows();
    CMatrix m = m0;
    CMatrix aug(F, n, n);
    for (int i = 0; i < n; ++i) aug.at(i, i) = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (m.at(i, k)) {
                piv = i;
                break;
            }
        if (piv < 0) throw RankMismatch("singular matrix");
        for (int j = 0; j < n; ++j) {
            std::swap(m.at(piv, j), m.at(k, j));
            std::swap(aug.at(piv, j), aug.at(k, j));
        }
        Elem inv = F.inv(m.at(k, k));
        for (int j = 0; j < n; ++j) {
            m.at(k, j) = F.mul(m.at(k, j), inv);
            aug.at(k, j) = F.mul(aug.at(k, j), inv);
        }
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            Elem f = m.at(i, k);
            if (!f) continue;
            for (int j = 0; j < n; ++j) {
                m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(k, j)));
                aug.at(i, j) = F.sub(aug.at(i, j), F.mul(f, aug.at(k, j)));
            }
        }
    }
    return aug;
}

}  // namespace

bool ad_surjectivity_check(const CMatrix& nilpotent) {
    const Field& F = nilpotent.field();
    const int r = nilpotent.rows();
    // nilpotency gate (also computed by jordan_type, which throws NotNilpotent)
    jordan_type(nilpotent);

    // adapted basis for the flag Ker(theta) < Ker(theta^2) < ... < full
    std::vector<std::vector<Elem>> basis;
    std::vector<int> block_of;
    CMatrix pw = nilpotent;
    CMatrix probe(F, r, r);  // rank tester for independence
    int block = 0;
    while (int(basis.size()) < r) {
        std::vector<std::vector<Elem>> ker =
            block == 0 ? nullspace(nilpotent) : nullspace(pw);
        for (const auto& v : ker) {
            // keep v if independent from the current basis
            CMatrix test(F, r, int(basis.size()) + 1);
            for (size_t bcol = 0; bcol < basis.size(); ++bcol)
                for (int i = 0; i < r; ++i) test.at(i, int(bcol)) = basis[bcol][size_t(i)];
            for (int i = 0; i < r; ++i) test.at(i, int(basis.size())) = v[size_t(i)];
            if (rank(test) == int(basis.size()) + 1) {
                basis.push_back(v);
                block_of.push_back(block);
            }
        }
        ++block;
        if (block > r) throw NotNilpotent("kernel flag does not exhaust the space");
        pw = pw.mul(nilpotent);
    }
    CMatrix C(F, r, r);
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < r; ++i) C.at(i, j) = basis[size_t(j)][size_t(i)];
    CMatrix theta = cmatrix_inverse(C).mul(nilpotent).mul(C);

    // p: cells with block(row) <= block(col); n: strict inequality
    std::vector<std::pair<int, int>> p_cells, n_cells;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (block_of[size_t(i)] < block_of[size_t(j)]) n_cells.emplace_back(i, j);
            if (block_of[size_t(i)] <= block_of[size_t(j)]) p_cells.emplace_back(i, j);
        }
    if (n_cells.empty()) return true;  // nothing to hit
    CMatrix admat(F, int(n_cells.size()), int(p_cells.size()));
    for (size_t pc = 0; pc < p_cells.size(); ++pc) {
        auto [a, b] = p_cells[pc];
        // ad(theta)(E_ab) = theta E_ab - E_ab theta
        for (size_t nc = 0; nc < n_cells.size(); ++nc) {
            auto [i, j] = n_cells[nc];
            Elem val = 0;
            if (j == b) val = F.add(val, theta.at(i, a));
            if (i == a) val = F.sub(val, theta.at(b, j));
            admat.at(int(nc), int(pc)) = val;
        }
    }
    return rank(admat) == int(n_cells.size());
}

}  // namespace parhitchin
