#include "parhitchin/series.hpp"

#include <algorithm>

namespace parhitchin {

Series::Series(const Field& F, int prec, std::vector<Elem> coeffs)
    : F_(&F), prec_(prec), c_(std::move(coeffs)) {
    if (prec_ < 0) prec_ = 0;
    c_.resize(size_t(prec_), 0);
}

Series Series::from_ints(const Field& F, int prec, const std::vector<int64_t>& coeffs) {
    std::vector<Elem> c(size_t(std::max(prec, 0)), 0);
    for (size_t i = 0; i < coeffs.size() && i < c.size(); ++i) c[i] = F.from_int(coeffs[i]);
    return Series(F, prec, std::move(c));
}

Series Series::t_power(const Field& F, int prec, int k) {
    Series s(F, prec);
    if (k >= 0 && k < prec) s.c_[size_t(k)] = 1;
    return s;
}

Series Series::constant(const Field& F, int prec, Elem value) {
    Series s(F, prec);
    if (prec > 0) s.c_[0] = value;
    return s;
}

std::optional<int> Series::valuation() const {
    for (int i = 0; i < prec_; ++i)
        if (c_[size_t(i)]) return i;
    return std::nullopt;
}

int Series::valuation_lb() const {
    auto v = valuation();
    return v ? *v : prec_;
}

bool Series::is_unit() const { return prec_ > 0 && c_[0] != 0; }

Series Series::add(const Series& o) const {
    int prec = std::min(prec_, o.prec_);
    Series r(*F_, prec);
    for (int i = 0; i < prec; ++i) r.c_[size_t(i)] = F_->add(c_[size_t(i)], o.c_[size_t(i)]);
    return r;
}

Series Series::sub(const Series& o) const {
    int prec = std::min(prec_, o.prec_);
    Series r(*F_, prec);
    for (int i = 0; i < prec; ++i) r.c_[size_t(i)] = F_->sub(c_[size_t(i)], o.c_[size_t(i)]);
    return r;
}

Series Series::neg() const {
    Series r(*F_, prec_);
    for (int i = 0; i < prec_; ++i) r.c_[size_t(i)] = F_->neg(c_[size_t(i)]);
    return r;
}

Series Series::mul(const Series& o) const {
    // a = A + O(t^pa), b = B + O(t^pb):
    // ab is known modulo t^min(v(A)+pb, v(B)+pa).
    int va = valuation_lb(), vb = o.valuation_lb();
    int prec = std::min(va + o.prec_, vb + prec_);
    Series r(*F_, prec);
    if (prec <= 0) return r;
    const Field& F = *F_;
    if (F.degree() == 1) {
        const uint64_t p = F.characteristic();
        for (int i = va; i < prec_ && i < prec; ++i) {
            uint64_t ai = c_[size_t(i)];
            if (!ai) continue;
            int jmax = std::min(o.prec_, prec - i);
            for (int j = vb; j < jmax; ++j) {
                uint64_t bj = o.c_[size_t(j)];
                if (bj) {
                    Elem& dst = r.c_[size_t(i + j)];
                    dst = (dst + ai * bj) % p;
                }
            }
        }
    } else {
        for (int i = va; i < prec_ && i < prec; ++i) {
            Elem ai = c_[size_t(i)];
            if (!ai) continue;
            int jmax = std::min(o.prec_, prec - i);
            for (int j = vb; j < jmax; ++j) {
                Elem bj = o.c_[size_t(j)];
                if (bj) {
                    Elem& dst = r.c_[size_t(i + j)];
                    dst = F.add(dst, F.mul(ai, bj));
                }
            }
        }
    }
    return r;
}

Series Series::mul_scalar(Elem s) const {
    Series r(*F_, prec_);
    if (s == 0) return r;
    for (int i = 0; i < prec_; ++i) r.c_[size_t(i)] = F_->mul(c_[size_t(i)], s);
    return r;
}

Series Series::shift(int k) const {
    if (k < 0) throw Error("negative shift");
    Series r(*F_, prec_ + k);
    for (int i = 0; i < prec_; ++i) r.c_[size_t(i + k)] = c_[size_t(i)];
    return r;
}

Series Series::div_tpow(int k) const {
    if (k == 0) return *this;
    if (prec_ < k) throw PrecisionTooLow("cannot divide by t^k below precision");
    for (int i = 0; i < k; ++i)
        if (c_[size_t(i)]) throw Error("inexact division by t^k");
    Series r(*F_, prec_ - k);
    for (int i = k; i < prec_; ++i) r.c_[size_t(i - k)] = c_[size_t(i)];
    return r;
}

Series Series::inverse() const {
    if (prec_ == 0) throw PrecisionTooLow("inverting a series with no known coefficients");
    if (c_[0] == 0) throw NotAUnit("series has positive valuation");
    const Field& F = *F_;
    Series r(F, prec_);
    Elem c0inv = F.inv(c_[0]);
    r.c_[0] = c0inv;
    for (int k = 1; k < prec_; ++k) {
        Elem acc = 0;
        for (int i = 1; i <= k; ++i)
            if (c_[size_t(i)] && r.c_[size_t(k - i)])
                acc = F.add(acc, F.mul(c_[size_t(i)], r.c_[size_t(k - i)]));
        r.c_[size_t(k)] = F.neg(F.mul(acc, c0inv));
    }
    return r;
}

Series Series::truncate(int new_prec) const {
    if (new_prec >= prec_) return *this;
    Series r(*F_, new_prec);
    for (int i = 0; i < new_prec; ++i) r.c_[size_t(i)] = c_[size_t(i)];
    return r;
}

bool Series::congruent(const Series& o, int upto) const {
    if (prec_ < upto || o.prec_ < upto)
        throw PrecisionTooLow("congruence check beyond known precision");
    for (int i = 0; i < upto; ++i)
        if (c_[size_t(i)] != o.c_[size_t(i)]) return false;
    return true;
}

}  // namespace parhitchin
