#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "parhitchin/local_higgs.hpp"
#include "parhitchin/spectral.hpp"

using namespace parhitchin;

namespace {

Series tser(const Field& F, int N, int64_t c) { return Series::from_ints(F, N, {0, c}); }

SMatrix horner(const SPoly& f, const SMatrix& m) {
    const Field& F = m.field();
    int n = m.rows();
    SMatrix acc(F, n, n, std::min(m.min_precision(), f.min_precision()));
    for (int i = 0; i < n; ++i) acc.at(i, i) = f.coeff(f.degree());
    for (int j = f.degree() - 1; j >= 0; --j) {
        acc = m.mul(acc);
        for (int i = 0; i < n; ++i) acc.at(i, i) = acc.at(i, i).add(f.coeff(j));
    }
    return acc;
}

using Vec = std::vector<uint64_t>;  // r*N packed coefficients

Vec encode(const std::vector<Series>& v, int N) {
    Vec out;
    for (const Series& s : v)
        for (int i = 0; i < N; ++i) out.push_back(s.coeff(i));
    return out;
}

// all vectors of R^r with R = F_p[t]/(t^N), as coefficient tuples
bool next_vector(const Field& F, int N, int r, std::vector<Elem>& flat) {
    for (size_t i = 0; i < flat.size(); ++i) {
        if (flat[i] + 1 < F.size()) {
            ++flat[i];
            for (size_t j = 0; j < i; ++j) flat[j] = 0;
            return true;
        }
        flat[i] = F.size() - 1;
    }
    (void)N;
    (void)r;
    return false;
}

std::vector<Series> unflatten(const Field& F, int N, int r, const std::vector<Elem>& flat) {
    std::vector<Series> v;
    for (int i = 0; i < r; ++i) {
        std::vector<Elem> c(flat.begin() + i * N, flat.begin() + (i + 1) * N);
        v.push_back(Series(F, N, std::move(c)));
    }
    return v;
}

bool killed(const SMatrix& m, const std::vector<Series>& v, int N) {
    for (int i = 0; i < m.rows(); ++i) {
        Series acc = m.at(i, 0).mul(v[0]);
        for (int j = 1; j < m.cols(); ++j) acc = acc.add(m.at(i, j).mul(v[size_t(j)]));
        for (int k = 0; k < std::min(N, acc.precision()); ++k)
            if (acc.coeff(k) != 0) return false;
    }
    return true;
}

std::set<Vec> brute_kernel(const SMatrix& m, int N) {
    const Field& F = m.field();
    int r = m.cols();
    std::vector<Elem> flat(size_t(r) * size_t(N), 0);
    std::set<Vec> out;
    do {
        std::vector<Series> v = unflatten(F, N, r, flat);
        if (killed(m, v, N)) out.insert(encode(v, N));
    } while (next_vector(F, N, r, flat));
    return out;
}

std::set<Vec> span_of(const std::vector<std::vector<Series>>& basis, int N) {
    const Field& F = basis[0][0].field();
    int r = int(basis[0].size());
    int k = int(basis.size());
    std::vector<Elem> flat(size_t(k) * size_t(N), 0);
    std::set<Vec> out;
    do {
        std::vector<Series> coeff = unflatten(F, N, k, flat);
        std::vector<Series> v(size_t(r), Series(F, N));
        for (int b = 0; b < k; ++b)
            for (int i = 0; i < r; ++i)
                v[size_t(i)] = v[size_t(i)].add(coeff[size_t(b)].mul(basis[size_t(b)][size_t(i)]));
        for (auto& s : v) s = s.truncate(N);
        out.insert(encode(v, N));
    } while (next_vector(F, N, k, flat));
    return out;
}

std::set<Vec> truncate_set(const std::set<Vec>& vs, int r, int N, int upto) {
    std::set<Vec> out;
    for (const Vec& v : vs) {
        Vec w;
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < upto; ++k) w.push_back(v[size_t(i * N + k)]);
        out.insert(w);
    }
    return out;
}

}  // namespace

TEST_CASE("char poly examples") {
    const Field& F5 = field_of(5);
    int N = 12;
    SMatrix m(F5, 2, 2, N);
    m.at(0, 0) = tser(F5, N, 1);
    m.at(1, 1) = tser(F5, N, 2);
    CHECK(char_poly(m).congruent(SPoly::from_ints(F5, N, {{1}, {0, -3}, {0, 0, 2}}), N));

    SMatrix z(F5, 4, 4, N);
    CHECK(char_poly(z).congruent(SPoly::lambda_power(F5, N, 4), N));

    // theta = [[ta, tb], [c + td, te]]: b_1 = -(a+e)t, b_2 = t^2(ae-bd) - tbc
    const Field& F7 = field_of(7);
    int64_t a = 3, b = 5, c = 2, d = 1, e = 4;
    SMatrix th(F7, 2, 2, N);
    th.at(0, 0) = tser(F7, N, a);
    th.at(0, 1) = tser(F7, N, b);
    th.at(1, 0) = Series::from_ints(F7, N, {c, d});
    th.at(1, 1) = tser(F7, N, e);
    CHECK(char_poly(th).congruent(
        SPoly::from_ints(F7, N, {{1}, {0, -(a + e)}, {0, -b * c, a * e - b * d}}), N));
}

TEST_CASE("sampler contracts") {
    const int N = 10;
    // sigma = 1 forces theta = 0 mod t
    FlaggedLattice trivial(LeviType({3}), FieldSpec{7, 1}, N);
    CHECK(reduce_mod_t(random_strong_parabolic(trivial, 5).matrix()).is_zero());
    // full flag r=2: at most one nonzero constant entry, below the diagonal
    FlaggedLattice borel(LeviType({1, 1}), FieldSpec{5, 1}, N);
    CMatrix c0 = reduce_mod_t(random_strong_parabolic(borel, 9).matrix());
    CHECK(c0.at(0, 0) == 0);
    CHECK(c0.at(0, 1) == 0);
    CHECK(c0.at(1, 1) == 0);
    // determinism
    FlaggedLattice lat(LeviType({2, 1}), FieldSpec{101, 1}, N);
    StrongParabolicEndo t1 = random_strong_parabolic(lat, 42);
    StrongParabolicEndo t2 = random_strong_parabolic(lat, 42);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(t1.matrix().at(i, j).identical(t2.matrix().at(i, j)));
    // prefix stability in the precision
    FlaggedLattice lat_hi(LeviType({2, 1}), FieldSpec{101, 1}, N + 6);
    StrongParabolicEndo t3 = random_strong_parabolic(lat_hi, 42);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(t3.matrix().at(i, j).congruent(t1.matrix().at(i, j), N));
}

TEST_CASE("strong parabolicity is validated") {
    const Field& F5 = field_of(5);
    FlaggedLattice lat(LeviType({1, 1}), FieldSpec{5, 1}, 6);
    SMatrix bad(F5, 2, 2, 6);
    bad.at(0, 1) = Series::from_ints(F5, 6, {1});  // constant into a higher flag step
    CHECK_FALSE(is_strongly_parabolic(bad, lat));
    CHECK_THROWS_AS(StrongParabolicEndo(lat, bad), Error);
    CHECK_THROWS_AS(FlaggedLattice(LeviType({1, 1}), FieldSpec{2, 1}, 6), Error);
}

TEST_CASE("valuation bounds") {
    const Field& F5 = field_of(5);
    int N = 10;
    // levi (2): gamma = (1, 2); theta = t M passes
    FlaggedLattice lat2(LeviType({2}), FieldSpec{5, 1}, N);
    StrongParabolicEndo th = random_strong_parabolic(lat2, 11);
    BoundReport rep = verify_valuation_bounds(char_poly(th), level_function(Partition({2})));
    CHECK(rep.pass);
    // lambda^r passes any gamma
    BoundReport rep2 =
        verify_valuation_bounds(SPoly::lambda_power(F5, N, 3), level_function(Partition({2, 1})));
    CHECK(rep2.pass);
    // a unit coefficient fails
    SPoly bad = SPoly::from_ints(F5, N, {{1}, {1}, {0, 1}});
    BoundReport rep3 = verify_valuation_bounds(bad, level_function(Partition({1, 1})));
    CHECK_FALSE(rep3.pass);
    CHECK_FALSE(rep3.rows[0].pass);
    CHECK(rep3.rows[1].pass);
    // full flag r=2: gamma = (1,1) and b_2 = t^2(ae-bd) - tbc hits v = 1
    int64_t a = 3, b = 2, c = 4, d = 1, e = 2;
    SPoly full =
        SPoly::from_ints(F5, N, {{1}, {0, -(a + e)}, {0, -b * c, a * e - b * d}});
    BoundReport rep4 = verify_valuation_bounds(full, level_function(Partition({1, 1})));
    CHECK(rep4.pass);
    CHECK(rep4.rows[1].valuation == 1);
    CHECK_THROWS_AS(
        verify_valuation_bounds(SPoly::from_ints(F5, N, {{1}, {1}}), level_function(Partition({2}))),
        DegreeMismatch);
}

TEST_CASE("kernel lattice on a split diagonal") {
    const Field& F5 = field_of(5);
    int N = 12;
    FlaggedLattice lat(LeviType({1, 1}), FieldSpec{5, 1}, N);
    SMatrix m(F5, 2, 2, N);
    m.at(0, 0) = tser(F5, N, 1);
    m.at(1, 1) = tser(F5, N, 2);
    StrongParabolicEndo td(lat, m);
    SPoly f1 = SPoly::from_ints(F5, N, {{1}, {0, -1}});
    auto ker = kernel_lattice(td, f1);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0][0].is_unit());
    CHECK(ker[0][1].zero_at_precision());
    // the full char poly kills all of V
    auto kerall = kernel_lattice(td, char_poly(td));
    CHECK(kerall.size() == 2);
    // a non-divisor is rejected (note 3t = -2t mod 5 would be a factor)
    CHECK_THROWS_AS(kernel_lattice(td, SPoly::from_ints(F5, N, {{1}, {0, 1}})), Error);
}

TEST_CASE("kernel lattice, seeded r=3 example") {
    // levi (2,1) over F_101, seed 42: the degree-2 factor gives a rank-2
    // summand and assembling with the degree-1 kernel is unimodular
    FlaggedLattice lat(LeviType({2, 1}), FieldSpec{101, 1}, 16);
    StrongParabolicEndo th = random_strong_parabolic(lat, 42);
    SPoly cp = char_poly(th);
    SpectralFactorization fac = factor_spectral(cp);
    REQUIRE(fac.coefficient_field.m == 1);
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].degree == 2);
    CHECK(fac.factors[1].degree == 1);
    auto k2 = kernel_lattice(th, fac.factors[0].factor);
    CHECK(k2.size() == 2);
    std::vector<SPoly> fp = {fac.factors[0].factor, fac.factors[1].factor};
    DecompositionResult dec = decompose(th, fp);
    ValOrBound dv = det_valuation(dec.assembly);
    CHECK(dv.exact);
    CHECK(dv.value == 0);
}

TEST_CASE("decompose validates inputs") {
    const Field& F5 = field_of(5);
    int N = 12;
    FlaggedLattice lat(LeviType({1, 1}), FieldSpec{5, 1}, N);
    SMatrix m(F5, 2, 2, N);
    m.at(0, 0) = tser(F5, N, 1);
    m.at(1, 1) = tser(F5, N, 2);
    StrongParabolicEndo td(lat, m);
    SPoly f1 = SPoly::from_ints(F5, N, {{1}, {0, -1}});
    SPoly f2 = SPoly::from_ints(F5, N, {{1}, {0, -2}});
    // single Eisenstein factor: one summand covering all of V
    SPoly eis2 = SPoly::from_ints(F5, N, {{1}, {0}, {0, 1}});
    StrongParabolicEndo comp = bnr_reverse({eis2}, LeviType({1, 1}));
    DecompositionResult whole = decompose(comp, {eis2});
    CHECK(whole.summands.size() == 1);
    CHECK(whole.summands[0].basis.size() == 2);
    DecompositionResult dec = decompose(td, {f1, f2});
    CHECK(dec.summands.size() == 2);
    for (const auto& s : dec.summands) {
        int wp = s.block_char.min_precision();
        CHECK(s.block_char.congruent(s.factor.truncate_coeffs(wp), wp));
    }
    // colliding constant terms mod t^2
    CHECK_THROWS_AS(decompose(td, {f1, f1}), GenericityViolation);
    // non-Eisenstein factor
    CHECK_THROWS_AS(decompose(td, {SPoly::from_ints(F5, N, {{1}, {1}}), f2}),
                    GenericityViolation);
}

TEST_CASE("jordan types") {
    const Field& F5 = field_of(5);
    // zero matrix: all blocks size 1
    CMatrix z(F5, 4, 4);
    CHECK(jordan_type(z).block_sizes == Partition({1, 1, 1, 1}));
    // single nilpotent Jordan block
    CMatrix j3(F5, 3, 3);
    j3.at(0, 1) = 1;
    j3.at(1, 2) = 1;
    CHECK(jordan_type(j3).block_sizes == Partition({3}));
    CMatrix notnil(F5, 2, 2);
    notnil.at(0, 0) = 1;
    CHECK_THROWS_AS(jordan_type(notnil), NotNilpotent);
    // generic theta for levi (2,1): conjugate of the sorted type
    FlaggedLattice lat(LeviType({2, 1}), FieldSpec{101, 1}, 10);
    CHECK(jordan_type_mod_t(random_strong_parabolic(lat, 42)).block_sizes ==
          conjugate(Partition({2, 1})));
}

TEST_CASE("ad surjectivity") {
    const Field& F5 = field_of(5);
    CMatrix z(F5, 3, 3);
    CHECK(ad_surjectivity_check(z));  // n = 0
    CMatrix j3(F5, 3, 3);
    j3.at(0, 1) = 1;
    j3.at(1, 2) = 1;
    CHECK(ad_surjectivity_check(j3));
    CMatrix j21(F5, 3, 3);
    j21.at(0, 1) = 1;
    CHECK(ad_surjectivity_check(j21));
    CMatrix notnil(F5, 2, 2);
    notnil.at(0, 1) = 1;
    notnil.at(1, 0) = 1;
    CHECK_THROWS_AS(ad_surjectivity_check(notnil), NotNilpotent);
}

TEST_CASE("brute-force kernel oracle, small cases") {
    // p = 3, r = 2, N = 3: compare kernel_lattice against full enumeration
    const Field& F3 = field_of(3);
    int N = 3;
    FlaggedLattice lat(LeviType({1, 1}), FieldSpec{3, 1}, N);
    SMatrix m(F3, 2, 2, N);
    m.at(0, 0) = tser(F3, N, 1);
    m.at(1, 1) = tser(F3, N, 2);
    StrongParabolicEndo td(lat, m);
    SPoly f1 = SPoly::from_ints(F3, N, {{1}, {0, -1}});
    SPoly f2 = SPoly::from_ints(F3, N, {{1}, {0, -2}});

    auto basis = kernel_lattice(td, f1);
    REQUIRE(basis.size() == 1);
    SMatrix M = horner(f1, td.matrix());
    std::set<Vec> ker = brute_kernel(M, N);
    std::set<Vec> span = span_of(basis, N);
    CHECK(span.size() == 27);  // free of rank 1 over F_3[t]/(t^3)
    for (const Vec& v : span) CHECK(ker.count(v) == 1);
    // modulo the torsion window (pairwise resultant valuation = 1) the two
    // sets coincide
    ValOrBound rv = resultant_valuation(f1, f2);
    REQUIRE(rv.exact);
    int window = N - int(rv.value);
    CHECK(truncate_set(ker, 2, N, window) == truncate_set(span, 2, N, window));
}
