#include "parhitchin/spectral.hpp"

#include <algorithm>
#include <numeric>

#include "parhitchin/rng.hpp"

namespace parhitchin {

namespace {

// lower convex hull over points with distinct x, first point (0,0)
std::vector<std::pair<int, int>> lower_hull(const std::vector<std::pair<int, int>>& pts) {
    std::vector<std::pair<int, int>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull.back();
            // keep b only if it turns left (strictly below segment a-p)
            long long cross = 1LL * (b.first - a.first) * (p.second - a.second) -
                              1LL * (b.second - a.second) * (p.first - a.first);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    return hull;
}

NewtonPolygon polygon_from_vertices(std::vector<std::pair<int, int>> verts) {
    NewtonPolygon np;
    np.vertices = std::move(verts);
    for (size_t k = 0; k + 1 < np.vertices.size(); ++k) {
        NewtonEdge e;
        e.i0 = np.vertices[k].first;
        e.v0 = np.vertices[k].second;
        e.i1 = np.vertices[k + 1].first;
        e.v1 = np.vertices[k + 1].second;
        e.length = e.i1 - e.i0;
        e.rise = e.v1 - e.v0;
        int g = std::gcd(e.length, std::abs(e.rise));
        if (g == 0) g = 1;
        e.steps = g;
        e.slope_num = e.rise / g;
        e.slope_den = e.length / g;
        np.edges.push_back(e);
    }
    return np;
}

// y-coordinate comparison: is prec strictly above the hull at x?
bool strictly_above_hull(const std::vector<std::pair<int, int>>& hull, int x, int y) {
    for (size_t k = 0; k + 1 < hull.size(); ++k) {
        auto [x1, y1] = hull[k];
        auto [x2, y2] = hull[k + 1];
        if (x < x1 || x > x2) continue;
        // y > y1 + (x-x1)(y2-y1)/(x2-x1) ?
        return 1LL * y * (x2 - x1) > 1LL * y1 * (x2 - x1) + 1LL * (x - x1) * (y2 - y1);
    }
    return true;  // beyond the hull range: cannot cut it
}

}  // namespace

NewtonPolygon newton_polygon(const SPoly& f) {
    if (!f.is_monic()) throw Error("newton polygon needs a monic polynomial");
    int r = f.degree();
    std::vector<std::pair<int, int>> certified = {{0, 0}};
    std::vector<std::pair<int, int>> uncertain;  // (i, precision lower bound)
    for (int i = 1; i <= r; ++i) {
        const Series& bi = f.b(i);
        auto v = bi.valuation();
        if (v)
            certified.push_back({i, *v});
        else if (i == r)
            throw PrecisionTooLow("v(b_r) is zero at precision " +
                                  std::to_string(bi.precision()));
        else
            uncertain.push_back({i, bi.precision()});
    }
    auto hull = lower_hull(certified);
    for (auto [i, prec] : uncertain)
        if (!strictly_above_hull(hull, i, prec))
            throw PrecisionTooLow("v(b_" + std::to_string(i) + ") >= " + std::to_string(prec) +
                                  " could still cut the polygon");
    return polygon_from_vertices(std::move(hull));
}

NewtonPolygon expected_polygon(const LevelFunction& gamma) {
    std::vector<std::pair<int, int>> pts = {{0, 0}};
    for (int j = 1; j <= gamma.length(); ++j) pts.push_back({j, gamma.at(j)});
    return polygon_from_vertices(lower_hull(pts));
}

std::vector<EdgeData> edge_data(const SPoly& f, const NewtonPolygon& np) {
    const Field& F = f.field();
    std::vector<EdgeData> out;
    for (const NewtonEdge& e : np.edges) {
        int l = e.length / e.steps, h = e.rise / e.steps;
        std::vector<Elem> c(size_t(e.steps) + 1, 0);
        for (int j = 0; j <= e.steps; ++j) {
            int idx = e.i0 + j * l;
            int vt = e.v0 + j * h;
            const Series& b = idx == 0 ? f.coeff(f.degree()) : f.b(idx);
            if (b.precision() <= vt)
                throw PrecisionTooLow("edge coefficient beyond precision");
            c[size_t(j)] = b.coeff(vt);
        }
        out.push_back({e, FPoly(F, std::move(c))});
    }
    return out;
}

GenericityReport genericity_check(const SPoly& f) {
    GenericityReport rep;
    NewtonPolygon np;
    try {
        np = newton_polygon(f);
    } catch (const PrecisionTooLow& e) {
        rep.ok = false;
        rep.reason = std::string("polygon not computable: ") + e.what();
        return rep;
    }
    auto edges = edge_data(f, np);
    for (size_t k = 0; k < edges.size(); ++k) {
        const FPoly& fe = edges[k].edge_poly;
        if (fe.coeff(0) == 0 || fe.lead() == 0) {
            rep.ok = false;
            rep.failing_edge = int(k);
            rep.reason = "edge polynomial has a zero root";
            return rep;
        }
        if (!fp_squarefree(fe)) {
            rep.ok = false;
            rep.failing_edge = int(k);
            rep.reason = "edge polynomial has repeated roots";
            return rep;
        }
    }
    return rep;
}

namespace {

Series map_series(const Series& s, const Embedding& emb, const Field& K) {
    std::vector<Elem> c(size_t(s.precision()));
    for (int i = 0; i < s.precision(); ++i) c[size_t(i)] = emb.map(s.coeff(i));
    return Series(K, s.precision(), std::move(c));
}

// substitute t = s^l, lambda = s^h w and divide by s^{h deg}: the edge of
// slope h/l becomes horizontal
SPoly slope_clear(const SPoly& f, int l, int h) {
    const Field& F = f.field();
    int r = f.degree();
    std::vector<Series> g;
    g.reserve(size_t(r) + 1);
    for (int j = 0; j <= r; ++j) {
        const Series& a = f.coeff(j);
        int shift = -h * (r - j);  // s-exponent shift
        // series in s: coefficient of s^(l*tau + shift) is a[tau]
        int sprec = l * a.precision() + shift;
        if (sprec < 0) sprec = 0;
        std::vector<Elem> c(size_t(std::max(sprec, 0)), 0);
        for (int tau = 0; tau < a.precision(); ++tau) {
            int e = l * tau + shift;
            if (e < 0) {
                if (a.coeff(tau) != 0) throw Error("slope clearing hit a negative exponent");
                continue;
            }
            if (e < sprec) c[size_t(e)] = a.coeff(tau);
        }
        g.push_back(Series(F, sprec, std::move(c)));
    }
    return SPoly(F, std::move(g));
}

// inverse of slope_clear on a monic factor of degree d
SPoly descend(const SPoly& q, int l, int h) {
    const Field& F = q.field();
    int d = q.degree();
    std::vector<Series> out;
    out.reserve(size_t(d) + 1);
    for (int j = 0; j <= d; ++j) {
        const Series& qj = q.coeff(j);
        int shift = h * (d - j);
        int sprec = qj.precision() + shift;
        int tprec = sprec <= 0 ? 0 : (sprec - 1) / l + 1;
        std::vector<Elem> c(size_t(tprec), 0);
        for (int e = 0; e < qj.precision(); ++e) {
            Elem v = qj.coeff(e);
            if (!v) continue;
            int se = e + shift;
            if (se % l != 0) throw Error("descended factor has fractional support");
            int tau = se / l;
            if (tau < tprec) c[size_t(tau)] = v;
        }
        out.push_back(Series(F, tprec, std::move(c)));
    }
    return SPoly(F, std::move(out));
}

// v(a_j) * l >= (d - j) * h for j < d, with equality forced at j = 0
bool generalized_eisenstein(const SPoly& f, int l, int h) {
    int d = f.degree();
    for (int j = 0; j < d; ++j) {
        const Series& a = f.coeff(j);
        auto v = a.valuation();
        long long need = 1LL * (d - j) * h;
        if (v) {
            if (1LL * *v * l < need) return false;
            if (j == 0 && 1LL * *v * l != need) return false;
        } else {
            if (1LL * a.precision() * l < need)
                throw PrecisionTooLow("factor coefficient valuation unknown");
            if (j == 0) return false;  // constant term valuation too high
        }
    }
    return true;
}

struct FactorOrder {
    bool operator()(const EisensteinFactor& a, const EisensteinFactor& b) const {
        if (a.degree != b.degree) return a.degree > b.degree;
        const Series& ca = a.factor.coeff(0);
        const Series& cb = b.factor.coeff(0);
        int n = std::min(ca.precision(), cb.precision());
        for (int i = 0; i < n; ++i)
            if (ca.coeff(i) != cb.coeff(i)) return ca.coeff(i) < cb.coeff(i);
        return false;
    }
};

}  // namespace

SPoly map_poly(const SPoly& f, const Embedding& emb, uint32_t target_m) {
    const Field& K = field_of(FieldSpec{emb.to->characteristic(), target_m});
    std::vector<Series> c;
    c.reserve(size_t(f.degree()) + 1);
    for (int j = 0; j <= f.degree(); ++j) c.push_back(map_series(f.coeff(j), emb, K));
    return SPoly(K, std::move(c));
}

StrongParabolicEndo base_change(const StrongParabolicEndo& theta, FieldSpec target) {
    const Field& K = field_of(target);
    const Field& k = field_of(theta.lattice().field);
    Embedding emb = make_embedding(k, K);
    const SMatrix& m = theta.matrix();
    SMatrix out(K, m.rows(), m.cols(), 0);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = map_series(m.at(i, j), emb, K);
    FlaggedLattice lat(theta.lattice().levi, target, theta.lattice().precision);
    return StrongParabolicEndo(lat, std::move(out));
}

SpectralFactorization factor_spectral(const SPoly& f, const SpectralOptions& opts) {
    const Field& k = f.field();
    GenericityReport gr = genericity_check(f);
    if (!gr.ok) throw GenericityViolation("factor_spectral: " + gr.reason);
    NewtonPolygon np = newton_polygon(f);

    // minimal splitting extension over all edges
    int L = 1;
    for (const EdgeData& ed : edge_data(f, np))
        for (int d : fp_irreducible_factor_degrees(ed.edge_poly)) L = std::lcm(L, d);
    if (L > opts.extension_cap)
        throw ExtensionCapExceeded("edge roots need extension degree " + std::to_string(L) +
                                   " > cap " + std::to_string(opts.extension_cap));
    FieldSpec kspec = k.spec();
    FieldSpec Kspec{kspec.p, kspec.m * uint32_t(L)};
    const Field& K = field_of(Kspec);
    Embedding emb = make_embedding(k, K);

    SPoly remaining = map_poly(f, emb, Kspec.m);
    SpectralFactorization out;
    out.coefficient_field = Kspec;

    while (remaining.degree() > 0) {
        NewtonPolygon poly = newton_polygon(remaining);
        if (poly.edges.empty()) throw Error("polygon of nontrivial polynomial has no edges");
        const NewtonEdge e = poly.edges.front();
        int l = e.length / e.steps, h = e.rise / e.steps;
        EdgeData ed = edge_data(remaining, poly).front();
        std::vector<Elem> roots = fp_roots(ed.edge_poly);
        if (int(roots.size()) != ed.edge_poly.degree())
            throw GenericityViolation("edge polynomial does not split as expected");

        SPoly big = slope_clear(remaining, l, h);
        const bool edge_is_last = (e.i1 == remaining.degree());
        // peel one block per distinct root: block = w^l - 1/z
        for (size_t ri = 0; ri < roots.size(); ++ri) {
            if (edge_is_last && ri + 1 == roots.size()) {
                // whatever is left is the final block
                EisensteinFactor fac;
                fac.factor = descend(big, l, h);
                fac.degree = fac.factor.degree();
                out.factors.push_back(std::move(fac));
                break;
            }
            Elem xi = K.inv(roots[ri]);
            int sprec = big.min_precision();
            std::vector<Series> g0c(size_t(l) + 1, Series(K, sprec));
            g0c[0] = Series::constant(K, sprec, K.neg(xi));
            g0c[size_t(l)] = Series::t_power(K, sprec, 0);
            SPoly g0(K, std::move(g0c));
            // initial cofactor: (big mod s) / (w^l - xi) over K[w]
            std::vector<Elem> bigc(size_t(big.degree()) + 1, 0);
            for (int j = 0; j <= big.degree(); ++j) bigc[size_t(j)] = big.coeff(j).coeff(0);
            FPoly bred(K, std::move(bigc));
            std::vector<Elem> g0red(size_t(l) + 1, 0);
            g0red[0] = K.neg(xi);
            g0red[size_t(l)] = 1;
            auto [hq, hrem] = fp_divrem(bred, FPoly(K, std::move(g0red)));
            if (!hrem.is_zero()) throw Error("edge block does not divide the reduction");
            std::vector<Series> h0c;
            h0c.reserve(size_t(hq.degree()) + 1);
            for (int j = 0; j <= hq.degree(); ++j)
                h0c.push_back(Series::constant(K, sprec, hq.coeff(j)));
            SPoly h0(K, std::move(h0c));
            HenselResult hr = hensel_lift(big, std::move(g0), std::move(h0));
            EisensteinFactor fac;
            fac.factor = descend(hr.g, l, h);
            fac.degree = fac.factor.degree();
            out.factors.push_back(std::move(fac));
            big = hr.h;
        }
        if (edge_is_last) break;
        remaining = descend(big, l, h);
    }

    // verify factor shapes and the product
    for (const EisensteinFactor& fac : out.factors) {
        NewtonPolygon pf = newton_polygon(fac.factor);
        if (pf.edges.size() != 1) throw GenericityViolation("branch factor is not pure-slope");
        int l = pf.edges[0].length / pf.edges[0].steps;
        int h = pf.edges[0].rise / pf.edges[0].steps;
        if (pf.edges[0].steps != 1 || !generalized_eisenstein(fac.factor, l, h))
            throw GenericityViolation("branch factor is not Eisenstein after slope clearing");
    }
    SPoly prod = out.factors[0].factor;
    for (size_t i = 1; i < out.factors.size(); ++i) prod = prod.mul(out.factors[i].factor);
    SPoly fK = map_poly(f, emb, Kspec.m);
    out.product_precision = std::min(prod.min_precision(), fK.min_precision());
    if (!fK.truncate_coeffs(out.product_precision)
             .congruent(prod.truncate_coeffs(out.product_precision), out.product_precision))
        throw Error("factor product does not reproduce the input");
    // equal-degree Eisenstein factors must separate mod t^2
    std::sort(out.factors.begin(), out.factors.end(), FactorOrder{});
    for (size_t i = 0; i + 1 < out.factors.size(); ++i) {
        const EisensteinFactor& a = out.factors[i];
        const EisensteinFactor& b = out.factors[i + 1];
        if (a.degree != b.degree) continue;
        if (a.factor.coeff(0).valuation_lb() != 1 || b.factor.coeff(0).valuation_lb() != 1)
            continue;  // higher-slope branches separate through their edge roots
        if (a.factor.coeff(0).coeff(1) == b.factor.coeff(0).coeff(1))
            throw GenericityViolation("equal-degree factors collide mod t^2");
    }
    return out;
}

BranchProfile ramification_profile(const SPoly& f, const SpectralOptions& opts) {
    SpectralFactorization fac = factor_spectral(f, opts);
    BranchProfile bp;
    for (const auto& fa : fac.factors) bp.degrees.push_back(fa.degree);
    std::sort(bp.degrees.rbegin(), bp.degrees.rend());
    bp.branch_count = int(bp.degrees.size());
    return bp;
}

long long local_delta(const SpectralFactorization& fac) {
    long long delta = 0;
    for (size_t i = 0; i < fac.factors.size(); ++i)
        for (size_t j = i + 1; j < fac.factors.size(); ++j) {
            ValOrBound rv = resultant_valuation(fac.factors[i].factor, fac.factors[j].factor);
            if (!rv.exact) throw PrecisionTooLow("pairwise resultant valuation not exact");
            delta += rv.value;
        }
    return delta;
}

long long local_delta(const SPoly& f, const SpectralOptions& opts) {
    return local_delta(factor_spectral(f, opts));
}

StrongParabolicEndo bnr_reverse(const std::vector<SPoly>& factors, const LeviType& levi) {
    if (factors.empty()) throw Error("bnr_reverse needs at least one factor");
    const Field& F = factors[0].field();
    Partition n = sort_to_partition(levi);
    Partition mu = conjugate(n);
    // degrees must realize the conjugate partition
    std::vector<int> degs;
    for (const SPoly& f : factors) {
        if (!is_eisenstein(f)) throw GenericityViolation("bnr_reverse input is not Eisenstein");
        degs.push_back(f.degree());
    }
    std::sort(degs.rbegin(), degs.rend());
    if (degs != mu.parts())
        throw DegreeMismatch("factor degrees do not form the conjugate partition");
    // order the factors by degree descending (ties by constant term)
    std::vector<EisensteinFactor> ordered;
    for (const SPoly& f : factors) ordered.push_back({f, f.degree()});
    std::sort(ordered.begin(), ordered.end(), FactorOrder{});
    for (size_t i = 0; i + 1 < ordered.size(); ++i)
        if (ordered[i].degree == ordered[i + 1].degree &&
            ordered[i].factor.coeff(0).coeff(1) == ordered[i + 1].factor.coeff(0).coeff(1))
            throw GenericityViolation("equal-degree factors collide mod t^2");

    const auto& m = levi.multiplicities();
    int sigma = levi.length();
    int n1 = mu.size();  // number of branches
    // c_j(i) = #{j' <= j : m_{j'} >= i}: the unique Young-tableau filtration.
    // basis order: for step j = 1..sigma, branches i with m_j >= i drop
    // lambda^{c_{j-1}(i)}; this is the adapted frame for the flag.
    std::vector<int> cpow(size_t(n1), 0);
    std::vector<std::vector<int>> basis_index{size_t(n1), std::vector<int>{}};  // branch -> power -> index
    for (int i = 0; i < n1; ++i) basis_index[size_t(i)].assign(size_t(mu.part(i)), -1);
    int idx = 0;
    for (int j = 0; j < sigma; ++j)
        for (int i = 0; i < n1; ++i) {
            if (m[size_t(j)] >= i + 1) {
                basis_index[size_t(i)][size_t(cpow[size_t(i)])] = idx++;
                ++cpow[size_t(i)];
            }
        }
    if (idx != levi.rank()) throw Error("internal: tableau filling mismatch");

    int N = ordered[0].factor.min_precision();
    for (const auto& fac : ordered) N = std::min(N, fac.factor.min_precision());
    SMatrix mat(F, levi.rank(), levi.rank(), N);
    for (int i = 0; i < n1; ++i) {
        const SPoly& fi = ordered[size_t(i)].factor;
        int d = fi.degree();
        for (int c = 0; c < d; ++c) {
            int col = basis_index[size_t(i)][size_t(c)];
            if (c + 1 < d) {
                // lambda * lambda^c = lambda^(c+1)
                int row = basis_index[size_t(i)][size_t(c + 1)];
                mat.at(row, col) = Series::t_power(F, N, 0);
            } else {
                // lambda^d = -(a_1 lambda^{d-1} + ... + a_d)
                for (int s = 1; s <= d; ++s) {
                    int row = basis_index[size_t(i)][size_t(d - s)];
                    mat.at(row, col) = fi.coeff(d - s).neg().truncate(N);
                }
            }
        }
    }
    FlaggedLattice lat(levi, F.spec(), N);
    return StrongParabolicEndo(lat, std::move(mat));
}

SPoly sample_spectral_generic(const LevelFunction& gamma, FieldSpec field, int precision,
                              uint64_t seed) {
    const Field& F = field_of(field);
    int r = gamma.length();
    std::vector<Series> c;
    c.reserve(size_t(r) + 1);
    for (int i = r; i >= 1; --i) {
        SplitMix64 rng(mix_seed(seed, uint64_t(i)));
        std::vector<Elem> coeffs(size_t(precision), 0);
        int g = gamma.at(i);
        for (int tau = g; tau < precision; ++tau) coeffs[size_t(tau)] = rng.below(F.size());
        if (g < precision && coeffs[size_t(g)] == 0) coeffs[size_t(g)] = 1 + rng.below(F.size() - 1);
        c.push_back(Series(F, precision, std::move(coeffs)));  // b_r first: ascending order
    }
    c.push_back(Series::t_power(F, precision, 0));  // monic leading 1
    return SPoly(F, std::move(c));
}

}  // namespace parhitchin
