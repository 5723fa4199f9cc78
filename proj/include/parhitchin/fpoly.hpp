#pragma once

#include <vector>

#include "parhitchin/gf.hpp"

namespace parhitchin {

// Dense univariate polynomial over a finite field, coefficients ascending.
// Everything here is small (degree <= rank), so schoolbook arithmetic is fine.
struct FPoly {
    const Field* F = nullptr;
    std::vector<Elem> c;

    FPoly() = default;
    FPoly(const Field& field, std::vector<Elem> coeffs) : F(&field), c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    int degree() const { return int(c.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c.empty(); }
    Elem coeff(int i) const { return i >= 0 && i < int(c.size()) ? c[size_t(i)] : 0; }
    Elem lead() const { return c.empty() ? 0 : c.back(); }
};

FPoly fp_add(const FPoly& a, const FPoly& b);
FPoly fp_sub(const FPoly& a, const FPoly& b);
FPoly fp_mul(const FPoly& a, const FPoly& b);
FPoly fp_scale(const FPoly& a, Elem s);
FPoly fp_monic(const FPoly& a);
// division with remainder; divisor must be nonzero
std::pair<FPoly, FPoly> fp_divrem(const FPoly& a, const FPoly& b);
FPoly fp_mod(const FPoly& a, const FPoly& b);
FPoly fp_gcd(FPoly a, FPoly b);  // monic gcd
FPoly fp_derivative(const FPoly& a);
FPoly fp_powmod(FPoly base, uint64_t e, const FPoly& mod);
Elem fp_eval(const FPoly& a, Elem x);

bool fp_squarefree(const FPoly& a);

// Degrees of the irreducible factors (with multiplicity), via squarefree
// split + distinct-degree factorization. Only degrees are reported.
std::vector<int> fp_irreducible_factor_degrees(const FPoly& a);

// All roots of a in its own coefficient field, each listed once, sorted by
// packed value. Deterministic: the equal-degree splitting walks a fixed
// element sequence.
std::vector<Elem> fp_roots(const FPoly& a);

// Embedding F_{p^m} -> F_{p^{m e}}; requires same p and from.m | to.m.
Embedding make_embedding(const Field& from, const Field& to);

// Apply an embedding coefficientwise.
FPoly fp_map(const FPoly& a, const Embedding& emb);

}  // namespace parhitchin
