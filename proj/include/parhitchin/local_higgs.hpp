#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "parhitchin/combinatorics.hpp"
#include "parhitchin/series_poly.hpp"
#include "parhitchin/smatrix.hpp"

namespace parhitchin {

// Free lattice of rank r over F[t]/(t^N) with the flag V = V^0 > V^1 > ... >
// V^sigma = tV in the adapted basis: V^i is spanned by the basis vectors of
// index >= m_1 + ... + m_i together with tV.
struct FlaggedLattice {
    FlaggedLattice(LeviType levi, FieldSpec field, int precision);

    LeviType levi;
    FieldSpec field;
    int precision;
    int rank;
    std::vector<int> block_of;  // basis index -> flag block (0-based)
};

// theta with theta(V^i) in V^{i+1}: constant term block-strictly-lower
// triangular in the flag grading, everything else arbitrary multiples of t.
class StrongParabolicEndo {
public:
    StrongParabolicEndo(FlaggedLattice lattice, SMatrix matrix);

    const FlaggedLattice& lattice() const { return lat_; }
    const SMatrix& matrix() const { return mat_; }

private:
    FlaggedLattice lat_;
    SMatrix mat_;
};

bool is_strongly_parabolic(const SMatrix& m, const FlaggedLattice& lat);

// Deterministic in (lattice, seed); entry streams are prefix-stable in the
// precision, so the same seed at a higher N extends the same sample.
StrongParabolicEndo random_strong_parabolic(const FlaggedLattice& lat, uint64_t seed);

// Division-free characteristic polynomial (Berkowitz), det(lambda I - M).
SPoly char_poly(const SMatrix& m);
SPoly char_poly(const StrongParabolicEndo& theta);

struct BoundRow {
    int index = 0;                 // i in 1..r
    std::optional<int> valuation;  // nullopt: zero at the listed precision
    int precision = 0;
    int gamma = 0;
    bool pass = false;
};

struct BoundReport {
    std::vector<BoundRow> rows;
    bool pass = false;
};

// v(b_i) >= gamma_i for all i; PrecisionTooLow when some bound cannot be
// decided at the available precision.
BoundReport verify_valuation_bounds(const SPoly& f, const LevelFunction& gamma);

// Basis of the saturation of ker f_i(theta), computed by Smith reduction
// with valuation pivoting. Basis size must equal deg f_i.
std::vector<std::vector<Series>> kernel_lattice(const StrongParabolicEndo& theta,
                                                const SPoly& f_i);

struct DecompositionSummand {
    SPoly factor;
    std::vector<std::vector<Series>> basis;
    SPoly block_char;  // char poly of theta restricted to the summand
};

struct DecompositionResult {
    std::vector<DecompositionSummand> summands;
    SMatrix assembly;  // concatenated bases; unit determinant
};

DecompositionResult decompose(const StrongParabolicEndo& theta,
                              const std::vector<SPoly>& factors);

struct JordanType {
    Partition block_sizes;
};

JordanType jordan_type_mod_t(const StrongParabolicEndo& theta);
JordanType jordan_type(const CMatrix& nilpotent);

// Finite rank check: p is the stabilizer of the flag {Ker theta^i}, n its
// nilradical; decides whether ad(theta): p -> n is onto.
bool ad_surjectivity_check(const CMatrix& nilpotent);

}  // namespace parhitchin
