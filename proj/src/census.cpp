#include "parhitchin/census.hpp"

namespace parhitchin {

MarkedPoint::MarkedPoint(LeviType levi_in, std::vector<BigRat> weights_in)
    : levi(std::move(levi_in)), weights(std::move(weights_in)) {
    if (int(weights.size()) != levi.length() + 1)
        throw Error("weight count must be sigma + 1");
    if (weights.front() != BigRat(0) || weights.back() != BigRat(1))
        throw Error("weights must run from 0 to 1");
    for (size_t j = 1; j < weights.size(); ++j)
        if (!(weights[j - 1] < weights[j])) throw Error("weights must be strictly increasing");
}

MarkedPoint::MarkedPoint(LeviType levi_in) : levi(std::move(levi_in)) {
    int sigma = levi.length();
    for (int j = 0; j <= sigma; ++j) weights.emplace_back(BigInt(j), BigInt(sigma));
}

ParabolicData::ParabolicData(int genus_in, int rank_in, int degree_in,
                             std::vector<MarkedPoint> points_in)
    : genus(genus_in), rank(rank_in), degree(degree_in), points(std::move(points_in)) {
    if (genus < 2) throw Error("genus must be at least 2");
    if (rank < 1) throw Error("rank must be positive");
    for (const MarkedPoint& pt : points)
        if (pt.levi.rank() != rank) throw Error("Levi type rank mismatch");
}

BigRat par_degree(const ParabolicData& pd) {
    BigRat s(pd.degree);
    for (const MarkedPoint& pt : pd.points)
        for (int j = 1; j <= pt.levi.length(); ++j)
            s += pt.weights[size_t(j)] * BigRat(pt.levi.multiplicities()[size_t(j - 1)]);
    return s;
}

BigRat par_slope(const ParabolicData& pd) { return par_degree(pd) / BigRat(pd.rank); }

namespace {
long long flag_dim_sum(const ParabolicData& pd) {
    long long s = 0;
    for (const MarkedPoint& pt : pd.points) s += flag_dimension(pt.levi);
    return s;
}
long long gamma_sum(const ParabolicData& pd) {
    long long s = 0;
    for (const MarkedPoint& pt : pd.points) {
        LevelFunction g = level_function(sort_to_partition(pt.levi));
        for (int v : g.values()) s += v;
    }
    return s;
}
}  // namespace

long long dim_moduli(const ParabolicData& pd) {
    long long g = pd.genus, r = pd.rank;
    return (g - 1) * r * r + 1 + flag_dim_sum(pd);
}

long long dim_higgs(const ParabolicData& pd) { return 2 * dim_moduli(pd); }

long long dim_higgs_weak(const ParabolicData& pd) {
    long long g = pd.genus, r = pd.rank, degD = pd.deg_divisor();
    return (2 * g - 2 + degD) * r * r + 1;
}

long long dim_hitchin_base(const ParabolicData& pd) {
    long long g = pd.genus, r = pd.rank, degD = pd.deg_divisor();
    return r * r * (g - 1) + r * (r + 1) * degD / 2;
}

long long dim_parabolic_base(const ParabolicData& pd) {
    long long g = pd.genus, r = pd.rank, degD = pd.deg_divisor();
    return 1 + r * r * (g - 1) + r * (r + 1) * degD / 2 - gamma_sum(pd);
}

long long genus_spectral(const ParabolicData& pd) {
    long long g = pd.genus, r = pd.rank, degD = pd.deg_divisor();
    return 1 + r * r * (g - 1) + r * (r - 1) * degD / 2;
}

long long genus_normalized(const ParabolicData& pd) {
    long long g = pd.genus, r = pd.rank;
    return r * r * (g - 1) + 1 + flag_dim_sum(pd);
}

long long delta_invariant(const ParabolicData& pd) {
    return genus_spectral(pd) - genus_normalized(pd);
}

long long bnr_degree(const ParabolicData& pd) {
    long long g = pd.genus, r = pd.rank;
    return (r * r - r) * (g - 1) + flag_dim_sum(pd) + pd.degree;
}

BigInt weak_fiber_components(const ParabolicData& pd) {
    BigInt c = 1;
    for (const MarkedPoint& pt : pd.points) c *= weyl_coset_count(pt.levi);
    return c;
}

std::pair<long long, long long> nilpotent_cone_dims(const ParabolicData& pd) {
    long long g = pd.genus, r = pd.rank, degD = pd.deg_divisor();
    return {dim_moduli(pd), r * r * (g - 1) + 1 + r * (r - 1) * degD / 2};
}

long long sl_variant_base_dim(const ParabolicData& pd) {
    // drop the j = 1 summand h^0(omega_X) = g from the parabolic base
    if (pd.rank == 1) return 0;
    return dim_parabolic_base(pd) - pd.genus;
}

bool multi_point_extension(const ParabolicData& pd) { return pd.points.size() > 1; }

CensusReport census(const ParabolicData& pd) {
    CensusReport r{pd,
                   par_degree(pd),
                   par_slope(pd),
                   dim_moduli(pd),
                   dim_higgs(pd),
                   dim_higgs_weak(pd),
                   dim_hitchin_base(pd),
                   dim_parabolic_base(pd),
                   genus_spectral(pd),
                   genus_normalized(pd),
                   delta_invariant(pd),
                   bnr_degree(pd),
                   weak_fiber_components(pd),
                   0,
                   0,
                   sl_variant_base_dim(pd),
                   multi_point_extension(pd)};
    auto nil = nilpotent_cone_dims(pd);
    r.nilpotent_cone_dim = nil.first;
    r.nilpotent_cone_dim_weak = nil.second;
    return r;
}

}  // namespace parhitchin
