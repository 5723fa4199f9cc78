#include "parhitchin/fpoly.hpp"

#include <algorithm>

namespace parhitchin {

namespace {
const Field& common(const FPoly& a, const FPoly& b) {
    if (a.F && b.F && !(a.F->spec() == b.F->spec())) throw Error("field mismatch");
    return a.F ? *a.F : *b.F;
}
}  // namespace

FPoly fp_add(const FPoly& a, const FPoly& b) {
    const Field& F = common(a, b);
    std::vector<Elem> r(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = F.add(a.coeff(int(i)), b.coeff(int(i)));
    return FPoly(F, std::move(r));
}

FPoly fp_sub(const FPoly& a, const FPoly& b) {
    const Field& F = common(a, b);
    std::vector<Elem> r(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = F.sub(a.coeff(int(i)), b.coeff(int(i)));
    return FPoly(F, std::move(r));
}

FPoly fp_mul(const FPoly& a, const FPoly& b) {
    const Field& F = common(a, b);
    if (a.is_zero() || b.is_zero()) return FPoly(F, {});
    std::vector<Elem> r(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a.c[i], b.c[j]));
    }
    return FPoly(F, std::move(r));
}

FPoly fp_scale(const FPoly& a, Elem s) {
    if (!a.F) return a;
    std::vector<Elem> r(a.c.size());
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = a.F->mul(a.c[i], s);
    return FPoly(*a.F, std::move(r));
}

FPoly fp_monic(const FPoly& a) {
    if (a.is_zero() || a.lead() == 1) return a;
    return fp_scale(a, a.F->inv(a.lead()));
}

std::pair<FPoly, FPoly> fp_divrem(const FPoly& a, const FPoly& b) {
    const Field& F = common(a, b);
    if (b.is_zero()) throw Error("division by zero polynomial");
    if (a.degree() < b.degree()) return {FPoly(F, {}), a};
    Elem linv = F.inv(b.lead());
    std::vector<Elem> rem = a.c;
    std::vector<Elem> quo(size_t(a.degree() - b.degree()) + 1, 0);
    for (int i = a.degree(); i >= b.degree(); --i) {
        Elem q = F.mul(rem[size_t(i)], linv);
        if (!q) continue;
        quo[size_t(i - b.degree())] = q;
        for (int j = 0; j <= b.degree(); ++j)
            rem[size_t(i - b.degree() + j)] =
                F.sub(rem[size_t(i - b.degree() + j)], F.mul(q, b.c[size_t(j)]));
    }
    rem.resize(size_t(std::max(b.degree(), 0)));
    return {FPoly(F, std::move(quo)), FPoly(F, std::move(rem))};
}

FPoly fp_mod(const FPoly& a, const FPoly& b) { return fp_divrem(a, b).second; }

FPoly fp_gcd(FPoly a, FPoly b) {
    while (!b.is_zero()) {
        FPoly r = fp_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(a);
}

FPoly fp_derivative(const FPoly& a) {
    if (a.degree() < 1) return FPoly(*a.F, {});
    std::vector<Elem> r(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) r[i - 1] = a.F->mul(a.c[i], a.F->from_int(int64_t(i)));
    return FPoly(*a.F, std::move(r));
}

FPoly fp_powmod(FPoly base, uint64_t e, const FPoly& mod) {
    const Field& F = *mod.F;
    FPoly r(F, {1});
    base = fp_mod(base, mod);
    while (e) {
        if (e & 1) r = fp_mod(fp_mul(r, base), mod);
        base = fp_mod(fp_mul(base, base), mod);
        e >>= 1;
    }
    return r;
}

Elem fp_eval(const FPoly& a, Elem x) {
    Elem r = 0;
    for (size_t i = a.c.size(); i-- > 0;) r = a.F->add(a.F->mul(r, x), a.c[i]);
    return r;
}

bool fp_squarefree(const FPoly& a) {
    if (a.degree() <= 0) return true;
    FPoly d = fp_derivative(a);
    if (d.is_zero()) return false;  // p-th power in char p
    return fp_gcd(a, d).degree() == 0;
}

std::vector<int> fp_irreducible_factor_degrees(const FPoly& a) {
    const Field& F = *a.F;
    std::vector<int> degs;
    FPoly f = fp_monic(a);
    // strip repeated factors by dividing out gcd(f, f') as long as needed;
    // multiplicities are recovered by re-dividing
    while (f.degree() > 0) {
        FPoly d = fp_derivative(f);
        FPoly sf;
        if (d.is_zero()) {
            // f = g(x^p): pull out the p-th root (Frobenius is bijective)
            uint32_t p = F.characteristic();
            std::vector<Elem> g(size_t(f.degree() / int(p)) + 1, 0);
            uint64_t root_exp = F.size() / p;  // y -> y^(q/p) inverts y -> y^p
            for (size_t i = 0; i < g.size(); ++i) g[i] = F.pow(f.c[i * p], root_exp);
            FPoly gf(F, std::move(g));
            auto sub = fp_irreducible_factor_degrees(gf);
            for (int dd : sub)
                for (uint32_t k = 0; k < p; ++k) degs.push_back(dd);
            return degs;
        }
        sf = fp_divrem(f, fp_gcd(f, d)).first;  // squarefree part
        // distinct-degree factorization of sf
        FPoly x(F, {0, 1});
        FPoly h = x;
        FPoly rest = sf;
        for (int dd = 1; rest.degree() > 0; ++dd) {
            if (2 * dd > rest.degree()) {
                degs.push_back(rest.degree());  // irreducible remainder
                rest = FPoly(F, {1});
                break;
            }
            h = fp_powmod(h, F.size(), sf);
            FPoly g = fp_gcd(fp_sub(h, x), rest);
            if (g.degree() > 0) {
                for (int k = 0; k < g.degree() / dd; ++k) degs.push_back(dd);
                rest = fp_divrem(rest, g).first;
            }
        }
        // peel one copy of the squarefree part and loop for multiplicities
        f = fp_divrem(f, sf).first;
    }
    std::sort(degs.begin(), degs.end());
    return degs;
}

namespace {

// deterministic equal-degree splitting into linear factors; f splits in F
void collect_roots(const Field& F, const FPoly& f, std::vector<Elem>& out) {
    if (f.degree() <= 0) return;
    if (f.degree() == 1) {
        out.push_back(F.mul(F.neg(f.c[0]), F.inv(f.c[1])));
        return;
    }
    uint64_t q = F.size();
    if (q <= 1024) {
        for (Elem e = 0; e < q; ++e)
            if (fp_eval(f, e) == 0) out.push_back(e);
        return;
    }
    if (F.characteristic() == 2) {
        // trace splitter over F_{2^k}
        uint32_t k = F.degree();
        for (uint64_t trial = 1;; ++trial) {
            if (trial > 4096) throw Error("root splitting did not terminate");
            Elem cc = Elem(trial % q);
            FPoly cx(F, {0, cc});
            FPoly tr(F, {});
            FPoly term = fp_mod(cx, f);
            for (uint32_t i = 0; i < k; ++i) {
                tr = fp_add(tr, term);
                term = fp_mod(fp_mul(term, term), f);
            }
            FPoly g = fp_gcd(tr, f);
            if (g.degree() > 0 && g.degree() < f.degree()) {
                collect_roots(F, g, out);
                collect_roots(F, fp_divrem(f, g).first, out);
                return;
            }
        }
    }
    // odd characteristic: (x + c)^((q-1)/2) - 1 splits the root set
    for (uint64_t trial = 0;; ++trial) {
        if (trial > 4096) throw Error("root splitting did not terminate");
        Elem cc = Elem(trial % q);
        FPoly shift(F, {cc, 1});
        FPoly h = fp_sub(fp_powmod(shift, (q - 1) / 2, f), FPoly(F, {1}));
        FPoly g = fp_gcd(h, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            collect_roots(F, g, out);
            collect_roots(F, fp_divrem(f, g).first, out);
            return;
        }
    }
}

}  // namespace

std::vector<Elem> fp_roots(const FPoly& a) {
    const Field& F = *a.F;
    FPoly f = fp_monic(a);
    if (f.degree() <= 0) return {};
    // reduce to distinct roots
    FPoly d = fp_derivative(f);
    if (d.is_zero()) {
        // f = g(x^p); roots of f are the (unique) p-th roots of roots of g
        uint32_t p = F.characteristic();
        std::vector<Elem> g(size_t(f.degree() / int(p)) + 1, 0);
        for (size_t i = 0; i < g.size(); ++i) g[i] = f.c[i * p];
        std::vector<Elem> sub = fp_roots(FPoly(F, std::move(g)));
        std::vector<Elem> out;
        uint64_t root_exp = F.size() / p;
        for (Elem r : sub) out.push_back(F.pow(r, root_exp));
        std::sort(out.begin(), out.end());
        return out;
    }
    FPoly g = fp_gcd(f, d);
    if (g.degree() > 0) f = fp_divrem(f, g).first;
    // keep only the part splitting over F
    FPoly x(F, {0, 1});
    FPoly xq = fp_powmod(x, F.size(), f);
    f = fp_gcd(fp_sub(xq, x), f);
    std::vector<Elem> out;
    collect_roots(F, f, out);
    std::sort(out.begin(), out.end());
    return out;
}

Embedding make_embedding(const Field& from, const Field& to) {
    if (from.characteristic() != to.characteristic() || to.degree() % from.degree() != 0)
        throw Error("no embedding between these fields");
    Embedding emb;
    emb.from = &from;
    emb.to = &to;
    if (from.spec() == to.spec() || from.degree() == 1) {
        emb.gen_powers.assign(from.degree(), 0);
        emb.gen_powers[0] = 1;
        return emb;
    }
    // image of the source generator: smallest root of the source modulus
    std::vector<Elem> mod(from.modulus().begin(), from.modulus().end());
    for (Elem& e : mod) e = to.from_int(int64_t(e));
    mod.push_back(1);
    std::vector<Elem> roots = fp_roots(FPoly(to, std::move(mod)));
    if (roots.empty()) throw Error("embedding root not found");  // unreachable for m | e
    Elem rho = roots.front();
    emb.gen_powers.resize(from.degree());
    Elem pw = 1;
    for (uint32_t i = 0; i < from.degree(); ++i) {
        emb.gen_powers[i] = pw;
        pw = to.mul(pw, rho);
    }
    return emb;
}

FPoly fp_map(const FPoly& a, const Embedding& emb) {
    std::vector<Elem> r(a.c.size());
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = emb.map(a.c[i]);
    return FPoly(*emb.to, std::move(r));
}

}  // namespace parhitchin
