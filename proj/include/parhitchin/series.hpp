#pragma once

#include <optional>
#include <vector>

#include "parhitchin/gf.hpp"

namespace parhitchin {

// Element of F[t]/(t^prec) with every stored coefficient exact. Precision is
// data, not a global: each operation computes the precision its output
// honestly has, and operations that would need more input precision throw
// PrecisionTooLow instead of guessing.
class Series {
public:
    Series() = default;  // invalid placeholder for containers
    Series(const Field& F, int prec) : F_(&F), prec_(prec), c_(size_t(std::max(prec, 0)), 0) {}
    Series(const Field& F, int prec, std::vector<Elem> coeffs);

    static Series from_ints(const Field& F, int prec, const std::vector<int64_t>& coeffs);
    static Series t_power(const Field& F, int prec, int k);  // t^k at precision prec
    static Series constant(const Field& F, int prec, Elem value);

    bool valid() const { return F_ != nullptr; }
    const Field& field() const { return *F_; }
    int precision() const { return prec_; }
    Elem coeff(int i) const { return (i >= 0 && i < prec_) ? c_[size_t(i)] : 0; }
    const std::vector<Elem>& coeffs() const { return c_; }

    // Smallest index with a nonzero coefficient; nullopt when the series is
    // zero at this precision (true valuation >= prec).
    std::optional<int> valuation() const;
    int valuation_lb() const;  // certified lower bound: valuation() or prec
    bool zero_at_precision() const { return !valuation().has_value(); }
    bool is_unit() const;  // certified valuation 0

    Series add(const Series& o) const;
    Series sub(const Series& o) const;
    Series neg() const;
    Series mul(const Series& o) const;
    Series mul_scalar(Elem s) const;
    Series shift(int k) const;     // * t^k, k >= 0
    Series div_tpow(int k) const;  // exact division by t^k
    Series inverse() const;        // NotAUnit if valuation > 0, PrecisionTooLow if prec == 0
    Series truncate(int new_prec) const;

    // coefficients agree on [0, upto); requires both precisions >= upto
    bool congruent(const Series& o, int upto) const;
    bool identical(const Series& o) const { return prec_ == o.prec_ && c_ == o.c_; }

private:
    const Field* F_ = nullptr;
    int prec_ = 0;
    std::vector<Elem> c_;
};

}  // namespace parhitchin
