#include "parhitchin/series_poly.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace parhitchin {

SPoly::SPoly(const Field& F, std::vector<Series> coeffs_ascending)
    : F_(&F), c_(std::move(coeffs_ascending)) {
    if (c_.empty()) throw Error("polynomial needs at least one coefficient");
}

SPoly SPoly::from_ints(const Field& F, int prec,
                       const std::vector<std::vector<int64_t>>& leading_first) {
    std::vector<Series> c;
    c.reserve(leading_first.size());
    for (size_t i = leading_first.size(); i-- > 0;)
        c.push_back(Series::from_ints(F, prec, leading_first[i]));
    return SPoly(F, std::move(c));
}

SPoly SPoly::lambda_power(const Field& F, int prec, int k) {
    std::vector<Series> c(size_t(k) + 1, Series(F, prec));
    c[size_t(k)] = Series::t_power(F, prec, 0);
    return SPoly(F, std::move(c));
}

SPoly SPoly::constant(const Field& F, const Series& s) { return SPoly(F, {s}); }

bool SPoly::is_monic() const {
    const Series& lead = c_.back();
    if (lead.precision() < 1 || lead.coeff(0) != 1) return false;
    for (int i = 1; i < lead.precision(); ++i)
        if (lead.coeff(i)) return false;
    return true;
}

int SPoly::min_precision() const {
    int p = c_[0].precision();
    for (const Series& s : c_) p = std::min(p, s.precision());
    return p;
}

SPoly SPoly::add(const SPoly& o) const {
    size_t n = std::max(c_.size(), o.c_.size());
    std::vector<Series> r;
    r.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        if (i < c_.size() && i < o.c_.size())
            r.push_back(c_[i].add(o.c_[i]));
        else if (i < c_.size())
            r.push_back(c_[i]);
        else
            r.push_back(o.c_[i]);
    }
    return SPoly(*F_, std::move(r));
}

SPoly SPoly::sub(const SPoly& o) const {
    size_t n = std::max(c_.size(), o.c_.size());
    std::vector<Series> r;
    r.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        if (i < c_.size() && i < o.c_.size())
            r.push_back(c_[i].sub(o.c_[i]));
        else if (i < c_.size())
            r.push_back(c_[i]);
        else
            r.push_back(o.c_[i].neg());
    }
    return SPoly(*F_, std::move(r));
}

SPoly SPoly::mul(const SPoly& o) const {
    std::vector<Series> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) {
            Series term = c_[i].mul(o.c_[j]);
            r[i + j] = r[i + j].valid() ? r[i + j].add(term) : std::move(term);
        }
    return SPoly(*F_, std::move(r));
}

SPoly SPoly::mul_series(const Series& s) const {
    std::vector<Series> r;
    r.reserve(c_.size());
    for (const Series& ci : c_) r.push_back(ci.mul(s));
    return SPoly(*F_, std::move(r));
}

SPoly SPoly::truncate_coeffs(int prec) const {
    std::vector<Series> r;
    r.reserve(c_.size());
    for (const Series& ci : c_) r.push_back(ci.truncate(prec));
    return SPoly(*F_, std::move(r));
}

std::pair<SPoly, SPoly> SPoly::divrem(const SPoly& d) const {
    if (!d.is_monic()) throw Error("divrem needs a monic divisor");
    int dd = d.degree();
    if (degree() < dd) return {SPoly(*F_, {Series(*F_, min_precision())}), *this};
    std::vector<Series> rem = c_;
    std::vector<Series> quo(size_t(degree() - dd) + 1, Series(*F_, 0));
    for (int i = degree(); i >= dd; --i) {
        Series q = rem[size_t(i)];
        quo[size_t(i - dd)] = q;
        for (int j = 0; j < dd; ++j)
            rem[size_t(i - dd + j)] = rem[size_t(i - dd + j)].sub(q.mul(d.coeff(j)));
        rem[size_t(i)] = Series(*F_, q.precision());
    }
    rem.resize(size_t(std::max(dd, 1)));
    return {SPoly(*F_, std::move(quo)), SPoly(*F_, std::move(rem))};
}

bool SPoly::congruent(const SPoly& o, int upto) const {
    if (degree() != o.degree()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].congruent(o.c_[i], upto)) return false;
    return true;
}

bool is_eisenstein(const SPoly& f) {
    if (!f.is_monic()) throw Error("Eisenstein test needs a monic polynomial");
    int r = f.degree();
    if (r < 1) return false;
    for (int i = 1; i <= r; ++i) {
        const Series& bi = f.b(i);
        if (bi.precision() < 1) throw PrecisionTooLow("coefficient valuation unknown");
        if (bi.coeff(0) != 0) return false;  // v(b_i) = 0
    }
    const Series& br = f.b(r);
    if (br.precision() < 2) throw PrecisionTooLow("constant-term valuation indistinguishable");
    return br.coeff(1) != 0;
}

namespace {

SMatrix sylvester(const SPoly& f, const SPoly& g, int prec) {
    const Field& F = f.field();
    int df = f.degree(), dg = g.degree();
    int n = df + dg;
    SMatrix m(F, n, n, prec);
    for (int i = 0; i < dg; ++i)
        for (int j = 0; j <= df; ++j) m.at(i, i + j) = f.coeff(df - j).truncate(prec);
    for (int i = 0; i < df; ++i)
        for (int j = 0; j <= dg; ++j) m.at(dg + i, i + j) = g.coeff(dg - j).truncate(prec);
    return m;
}

}  // namespace

ValOrBound resultant_valuation(const SPoly& f, const SPoly& g) {
    if (!f.is_monic() || !g.is_monic()) throw Error("resultant valuation needs monic inputs");
    if (f.degree() == 0 || g.degree() == 0) return {0, true};
    int prec = std::min(f.min_precision(), g.min_precision());
    return det_valuation(sylvester(f, g, prec));
}

namespace {

// u * g + v * h = t^rho with deg u < deg h, deg v < deg g
struct Bezout {
    SPoly u, v;
    int rho;
};

Bezout bezout_pair(const SPoly& g, const SPoly& h, int prec) {
    const Field& F = g.field();
    int a = g.degree(), b = h.degree();
    int n = a + b;
    if (n == 0) throw Error("bezout of two constants");
    // unknowns: u_0..u_{b-1}, v_0..v_{a-1}; equations index coefficients
    SMatrix m(F, n, n, prec);
    for (int j = 0; j < b; ++j)
        for (int i = 0; i <= a; ++i)
            if (i + j < n) m.at(i + j, j) = g.coeff(i).truncate(prec);
    for (int j = 0; j < a; ++j)
        for (int i = 0; i <= b; ++i)
            if (i + j < n) m.at(i + j, b + j) = h.coeff(i).truncate(prec);
    ValOrBound res = det_valuation(m);
    if (!res.exact)
        throw NotCoprime("resultant of the factors vanishes at this precision");
    int rho = int(res.value);
    std::vector<Series> rhs(size_t(n), Series(F, prec));
    rhs[0] = Series::t_power(F, prec, rho);
    std::vector<Series> x = solve_integral(std::move(m), std::move(rhs));
    std::vector<Series> uc(x.begin(), x.begin() + b);
    std::vector<Series> vc(x.begin() + b, x.end());
    if (uc.empty()) uc.push_back(Series(F, prec));
    if (vc.empty()) vc.push_back(Series(F, prec));
    return {SPoly(F, std::move(uc)), SPoly(F, std::move(vc)), rho};
}

int error_valuation_lb(const SPoly& e) {
    int v = std::numeric_limits<int>::max();
    for (int i = 0; i <= e.degree(); ++i) v = std::min(v, e.coeff(i).valuation_lb());
    return v;
}

bool zero_at_precision(const SPoly& e) {
    for (int i = 0; i <= e.degree(); ++i)
        if (!e.coeff(i).zero_at_precision()) return false;
    return true;
}

SPoly div_tpow(const SPoly& e, int k) {
    std::vector<Series> c;
    c.reserve(size_t(e.degree()) + 1);
    for (int i = 0; i <= e.degree(); ++i) c.push_back(e.coeff(i).div_tpow(k));
    return SPoly(e.field(), std::move(c));
}

// drop formally-present top coefficients that are provably zero
SPoly truncate_degree(const SPoly& p, int deg) {
    std::vector<Series> c;
    for (int i = 0; i <= deg; ++i)
        c.push_back(i <= p.degree() ? p.coeff(i) : Series(p.field(), p.min_precision()));
    for (int i = deg + 1; i <= p.degree(); ++i)
        if (!p.coeff(i).zero_at_precision())
            throw Error("hensel update has unexpected degree");
    return SPoly(p.field(), std::move(c));
}

}  // namespace

HenselResult hensel_lift(const SPoly& f, SPoly g0, SPoly h0) {
    if (!f.is_monic() || !g0.is_monic() || !h0.is_monic())
        throw Error("hensel_lift needs monic inputs");
    if (g0.degree() + h0.degree() != f.degree())
        throw DegreeMismatch("factor degrees do not sum to deg f");
    int prec = std::min(f.min_precision(), std::min(g0.min_precision(), h0.min_precision()));
    SPoly g = g0.truncate_coeffs(prec), h = h0.truncate_coeffs(prec);

    if (g.degree() == 0) return {g, h, 0};
    if (h.degree() == 0) return {g, h, 0};

    SPoly e = f.truncate_coeffs(prec).sub(g.mul(h));
    if (zero_at_precision(e)) return {g, h, 0};

    Bezout bz = bezout_pair(g, h, prec);
    int iterations = 0;
    while (!zero_at_precision(e)) {
        int eta = error_valuation_lb(e);
        if (eta <= 2 * bz.rho)
            throw NoConvergence("initial factorization is not accurate enough: v(err) = " +
                                std::to_string(eta) + " <= 2*" + std::to_string(bz.rho));
        SPoly etil = div_tpow(e, bz.rho);
        auto [q, dg] = bz.v.mul(etil).divrem(g);
        SPoly dh = bz.u.mul(etil).add(q.mul(h));
        dh = truncate_degree(dh, h.degree() - 1);
        // pad dg/dh to full coefficient counts before adding
        g = g.add(truncate_degree(dg, g.degree() - 1));
        h = h.add(dh);
        // restore exact monic leading coefficients
        e = f.truncate_coeffs(prec).sub(g.mul(h));
        if (++iterations > prec + 4) throw NoConvergence("hensel iteration stalled");
        if (!zero_at_precision(e)) bz = bezout_pair(g, h, prec);
    }
    return {g, h, bz.rho};
}

}  // namespace parhitchin
