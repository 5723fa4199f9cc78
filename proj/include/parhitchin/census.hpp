#pragma once

#include <vector>

#include <boost/rational.hpp>

#include "parhitchin/combinatorics.hpp"

namespace parhitchin {

using BigRat = boost::rational<BigInt>;

struct MarkedPoint {
    MarkedPoint(LeviType levi, std::vector<BigRat> weights);
    // canonical weights alpha_j = j / sigma
    explicit MarkedPoint(LeviType levi);

    LeviType levi;
    std::vector<BigRat> weights;  // alpha_0 = 0 < ... < alpha_sigma = 1
};

struct ParabolicData {
    ParabolicData(int genus, int rank, int degree, std::vector<MarkedPoint> points);

    int genus, rank, degree;
    std::vector<MarkedPoint> points;

    int deg_divisor() const { return int(points.size()); }
};

BigRat par_degree(const ParabolicData& pd);
BigRat par_slope(const ParabolicData& pd);
long long dim_moduli(const ParabolicData& pd);
long long dim_higgs(const ParabolicData& pd);
long long dim_higgs_weak(const ParabolicData& pd);
long long dim_hitchin_base(const ParabolicData& pd);
long long dim_parabolic_base(const ParabolicData& pd);
long long genus_spectral(const ParabolicData& pd);
long long genus_normalized(const ParabolicData& pd);
long long delta_invariant(const ParabolicData& pd);  // genus_spectral - genus_normalized
long long bnr_degree(const ParabolicData& pd);
BigInt weak_fiber_components(const ParabolicData& pd);
std::pair<long long, long long> nilpotent_cone_dims(const ParabolicData& pd);
long long sl_variant_base_dim(const ParabolicData& pd);

// Statements proved for D = {x} extend additively over marked points; true
// when that extension is in play for this input.
bool multi_point_extension(const ParabolicData& pd);

struct CensusReport {
    ParabolicData data;
    BigRat par_degree, par_slope;
    long long dim_moduli, dim_higgs, dim_higgs_weak;
    long long dim_hitchin_base, dim_parabolic_base;
    long long genus_spectral, genus_normalized, delta;
    long long bnr_degree;
    BigInt weak_fiber_components;
    long long nilpotent_cone_dim, nilpotent_cone_dim_weak;
    long long sl_variant_base_dim;
    bool multi_point_extension;
};

CensusReport census(const ParabolicData& pd);

}  // namespace parhitchin
