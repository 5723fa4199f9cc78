#pragma once

#include <cstdint>
#include <vector>

#include "parhitchin/errors.hpp"

namespace parhitchin {

struct FieldSpec {
    uint32_t p = 0;  // prime characteristic
    uint32_t m = 1;  // extension degree over F_p

    bool operator==(const FieldSpec&) const = default;
};

// Packed field element: digit i (base p) is the coefficient of a^i, where a
// is the class of x modulo the defining irreducible. Zero is 0, one is 1,
// prime-field elements are their residues.
using Elem = uint64_t;

// Arithmetic context for F_{p^m}. Immutable after construction; safe to
// share across threads. For m >= 2 the defining irreducible is the first
// monic irreducible of degree m in base-p order of its coefficient vector,
// so (p, m) alone determines every element's representation.
class Field {
public:
    explicit Field(FieldSpec spec);

    const FieldSpec& spec() const { return spec_; }
    uint32_t characteristic() const { return spec_.p; }
    uint32_t degree() const { return spec_.m; }
    uint64_t size() const { return size_; }
    // Non-leading coefficients of the defining irreducible (degree m, monic).
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;  // throws NotAUnit on zero
    Elem pow(Elem a, uint64_t e) const;

    Elem from_int(int64_t v) const;  // image of an integer in the prime field
    bool valid(Elem a) const { return a < size_ || (spec_.m > 1 && valid_digits(a)); }

    std::vector<uint32_t> unpack(Elem a) const;            // m digits
    Elem pack(const std::vector<uint32_t>& digits) const;  // inverse of unpack

private:
    bool valid_digits(Elem a) const;

    FieldSpec spec_;
    uint64_t size_;
    std::vector<uint32_t> modulus_;  // c_0..c_{m-1} with x^m = -(sum c_i x^i)
};

// Interned field instances so value types can hold plain pointers.
const Field& field_of(FieldSpec spec);
inline const Field& field_of(uint32_t p, uint32_t m = 1) { return field_of(FieldSpec{p, m}); }

// Ring map F_{p^m} -> F_{p^{m*e}} determined by sending the source generator
// to the smallest root (in packed order) of the source modulus in the target.
struct Embedding {
    const Field* from = nullptr;
    const Field* to = nullptr;
    std::vector<Elem> gen_powers;  // images of a^0 .. a^{m-1}

    Elem map(Elem a) const;
};

}  // namespace parhitchin
