#pragma once

#include <string>
#include <vector>

#include "parhitchin/fpoly.hpp"
#include "parhitchin/local_higgs.hpp"
#include "parhitchin/series_poly.hpp"

namespace parhitchin {

struct NewtonEdge {
    int i0 = 0, v0 = 0, i1 = 0, v1 = 0;  // endpoints, (index, valuation)
    int length = 0;                      // horizontal length i1 - i0
    int rise = 0;                        // v1 - v0
    int slope_num = 0, slope_den = 1;    // rise/length reduced
    int steps = 0;                       // lattice steps along the edge
};

struct NewtonPolygon {
    std::vector<std::pair<int, int>> vertices;  // starts at (0, 0)
    std::vector<NewtonEdge> edges;
};

// Lower convex hull of {(i, v(b_i))}; PrecisionTooLow when an uncertified
// coefficient could still cut the hull.
NewtonPolygon newton_polygon(const SPoly& f);

// Hull of (i, gamma_i): the polygon of a generic base point with these
// coefficient valuations.
NewtonPolygon expected_polygon(const LevelFunction& gamma);

struct EdgeData {
    NewtonEdge edge;
    FPoly edge_poly;  // subsum of f along the edge, degree = edge.steps
};

std::vector<EdgeData> edge_data(const SPoly& f, const NewtonPolygon& np);

struct GenericityReport {
    bool ok = true;
    int failing_edge = -1;
    std::string reason;
};

// Every edge polynomial must have nonzero pairwise-distinct roots over the
// splitting extension (checked squarefree; nonzero is automatic at the hull
// vertices). Failure is a value, not an exception.
GenericityReport genericity_check(const SPoly& f);

struct EisensteinFactor {
    SPoly factor;
    int degree = 0;
};

struct SpectralOptions {
    int extension_cap = 6;  // max extension degree over the coefficient field
};

struct SpectralFactorization {
    std::vector<EisensteinFactor> factors;  // degree descending, then constant-term lex
    FieldSpec coefficient_field;            // field the factors live over
    int product_precision = 0;              // factors multiply back to f modulo t^this
};

// Factor a monic spectral polynomial into branch factors: split along
// polygon edges first, then within an edge by the distinct roots of the edge
// polynomial over the minimal splitting extension, Hensel-lifting each split
// in the slope-cleared coordinates.
SpectralFactorization factor_spectral(const SPoly& f, const SpectralOptions& opts = {});

struct BranchProfile {
    std::vector<int> degrees;  // ramification degrees, descending
    int branch_count = 0;
};

BranchProfile ramification_profile(const SPoly& f, const SpectralOptions& opts = {});

// Sum of pairwise resultant valuations of the branch factors.
long long local_delta(const SPoly& f, const SpectralOptions& opts = {});
long long local_delta(const SpectralFactorization& fac);

// Reverse local BNR: V = direct sum of O[lambda]/(f_i), theta = mult by
// lambda, and the unique flag with graded dimensions given by the Levi type.
StrongParabolicEndo bnr_reverse(const std::vector<SPoly>& factors, const LeviType& levi);

// Base change along a field embedding (for decomposing over the splitting
// extension found by factor_spectral).
SPoly map_poly(const SPoly& f, const Embedding& emb, uint32_t target_m);
StrongParabolicEndo base_change(const StrongParabolicEndo& theta, FieldSpec target);

// Random monic polynomial with v(b_i) = gamma_i exactly: a generic point of
// the parabolic base in local coordinates. Deterministic in seed.
SPoly sample_spectral_generic(const LevelFunction& gamma, FieldSpec field, int precision,
                              uint64_t seed);

}  // namespace parhitchin
