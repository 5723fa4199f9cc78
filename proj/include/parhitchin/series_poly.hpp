#pragma once

#include <vector>

#include "parhitchin/series.hpp"
#include "parhitchin/smatrix.hpp"

namespace parhitchin {

// Polynomial in lambda over the truncated series ring. Coefficients are
// stored ascending; the formal degree is fixed by the coefficient count, and
// a leading coefficient that is only zero-at-precision is meaningful, so
// nothing is trimmed implicitly.
class SPoly {
public:
    SPoly() = default;
    SPoly(const Field& F, std::vector<Series> coeffs_ascending);

    // Convenience: rows are coefficient arrays [c0, c1, ...] with the
    // LEADING coefficient first, matching the external file format.
    static SPoly from_ints(const Field& F, int prec,
                           const std::vector<std::vector<int64_t>>& leading_first);
    static SPoly lambda_power(const Field& F, int prec, int k);  // monic lambda^k
    static SPoly constant(const Field& F, const Series& s);

    const Field& field() const { return *F_; }
    int degree() const { return int(c_.size()) - 1; }
    const Series& coeff(int j) const { return c_[size_t(j)]; }  // of lambda^j
    Series& coeff(int j) { return c_[size_t(j)]; }
    // b_i convention of the char poly: b_i multiplies lambda^(degree - i)
    const Series& b(int i) const { return c_[size_t(degree() - i)]; }

    bool is_monic() const;  // leading coefficient identically 1
    int min_precision() const;

    SPoly add(const SPoly& o) const;
    SPoly sub(const SPoly& o) const;
    SPoly mul(const SPoly& o) const;
    SPoly mul_series(const Series& s) const;
    SPoly truncate_coeffs(int prec) const;
    // division by a monic divisor
    std::pair<SPoly, SPoly> divrem(const SPoly& monic_divisor) const;

    bool congruent(const SPoly& o, int upto) const;  // same degree, coeffs congruent

private:
    const Field* F_ = nullptr;
    std::vector<Series> c_;
};

// true iff v(b_i) >= 1 for all i >= 1 and v(b_r) == 1 exactly.
bool is_eisenstein(const SPoly& f);

// v(Res(f, g)) for monic f, g via the Sylvester determinant with
// minimal-valuation pivoting. exact == false means "at least value".
ValOrBound resultant_valuation(const SPoly& f, const SPoly& g);

struct HenselResult {
    SPoly g, h;
    int bezout_loss = 0;  // valuation of Res(g0, h0) used by the iteration
};

// Lift an approximate coprime factorization f = g0 * h0 of a monic f.
// Coprimality is measured by the resultant: with rho = v(Res(g0, h0)), the
// iteration converges as soon as v(f - g0 h0) > 2 rho, improving the error
// by v(e) - 2 rho per step. NotCoprime if the resultant vanishes at this
// precision, NoConvergence if no progress is possible.
HenselResult hensel_lift(const SPoly& f, SPoly g0, SPoly h0);

}  // namespace parhitchin
