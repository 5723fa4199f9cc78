// Acceptance suite: runs every acceptance check at its pinned parameters and
// prints one PASS/FAIL line per criterion. Exit code 0 iff everything passes.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <mutex>
#include <set>
#include <thread>

#include "parhitchin/campaign.hpp"
#include "parhitchin/census.hpp"
#include "parhitchin/local_higgs.hpp"
#include "parhitchin/rng.hpp"
#include "parhitchin/spectral.hpp"

using namespace parhitchin;
using Clock = std::chrono::steady_clock;

namespace {

int g_jobs = int(std::max(1u, std::thread::hardware_concurrency()));

template <class Fn>
void parallel_for(size_t n, Fn fn) {
    if (g_jobs <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t i; (i = next.fetch_add(1)) < n;) fn(i);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < g_jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

struct Outcome {
    bool pass = true;
    std::string detail;
    std::mutex mu;

    void fail(const std::string& msg) {
        std::lock_guard<std::mutex> lock(mu);
        pass = false;
        if (detail.size() < 400) detail += (detail.empty() ? "" : "; ") + msg;
    }
};

bool report(int id, const char* desc, Outcome& oc, double secs) {
    std::printf("%s  criterion %2d  %-58s (%.1f s)%s%s\n", oc.pass ? "PASS" : "FAIL", id, desc,
                secs, oc.detail.empty() ? "" : "  -- ", oc.detail.c_str());
    std::fflush(stdout);
    return oc.pass;
}

// ---------------------------------------------------------------- criterion 1

bool criterion_1() {
    auto t0 = Clock::now();
    Outcome oc;
    for (int r = 1; r <= 12 && oc.pass; ++r)
        for (const Partition& p : all_partitions(r)) {
            Partition mu = conjugate(p);
            if (!(conjugate(mu) == p)) oc.fail("conjugation not involutive");
            long long gsum = 0, tmu = 0, nn1 = 0, sq = 0, odd = 0;
            LevelFunction lf = level_function(p);
            for (int v : lf.values()) gsum += v;
            for (int t = 1; t <= mu.size(); ++t) {
                tmu += 1LL * t * mu.part(t - 1);
                odd += (2LL * t - 1) * mu.part(t - 1);
            }
            for (int n : p.parts()) {
                nn1 += 1LL * n * (n + 1) / 2;
                sq += 1LL * n * n;
            }
            if (gsum != tmu || tmu != nn1) oc.fail("level-sum identity failed");
            if (sq != odd) oc.fail("square-sum identity failed");
        }
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    if (dt >= 1.0) oc.fail("over the 1 s budget");
    return report(1, "combinatorial identities, all partitions of r <= 12", oc, dt);
}

// ---------------------------------------------------------------- criterion 2

bool criterion_2() {
    auto t0 = Clock::now();
    Outcome oc;
    for (int r = 1; r <= 8 && oc.pass; ++r) {
        std::vector<LeviType> levis = all_compositions(r);
        struct C {
            long long gsum, fdim;
        };
        std::vector<C> cache;
        for (const LeviType& lt : levis) {
            C c{0, flag_dimension(lt)};
            LevelFunction lf = level_function(sort_to_partition(lt));
            for (int v : lf.values()) c.gsum += v;
            cache.push_back(c);
        }
        for (int degD = 0; degD <= 3 && oc.pass; ++degD) {
            std::vector<int> idx(size_t(degD), 0);
            long long combo = 0;
            while (oc.pass) {
                long long gsum = 0, fsum = 0;
                for (int k = 0; k < degD; ++k) {
                    gsum += cache[size_t(idx[size_t(k)])].gsum;
                    fsum += cache[size_t(idx[size_t(k)])].fdim;
                }
                for (int g = 2; g <= 5; ++g) {
                    long long par = 1 + 1LL * r * r * (g - 1) + 1LL * r * (r + 1) * degD / 2 - gsum;
                    long long higgs = 2 * ((g - 1LL) * r * r + 1 + fsum);
                    if (2 * par != higgs) {
                        oc.fail("identity failed at g=" + std::to_string(g) +
                                " r=" + std::to_string(r));
                        break;
                    }
                }
                if (combo % 997 == 0) {  // cross-check through the census module
                    std::vector<MarkedPoint> pts;
                    for (int k = 0; k < degD; ++k) pts.emplace_back(levis[size_t(idx[size_t(k)])]);
                    ParabolicData pd(3, r, 0, std::move(pts));
                    if (2 * dim_parabolic_base(pd) != dim_higgs(pd) ||
                        dim_higgs(pd) != 2 * dim_moduli(pd))
                        oc.fail("census cross-check failed");
                }
                ++combo;
                // next nondecreasing index tuple
                int k = degD - 1;
                for (; k >= 0; --k)
                    if (idx[size_t(k)] + 1 < int(levis.size())) {
                        ++idx[size_t(k)];
                        for (int k2 = k + 1; k2 < degD; ++k2) idx[size_t(k2)] = idx[size_t(k)];
                        break;
                    }
                if (k < 0) break;
            }
        }
    }
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    if (dt >= 10.0) oc.fail("over the 10 s budget");
    return report(2, "half-dimension identity, g<=5 r<=8 degD<=3, all Levi types", oc, dt);
}

// ------------------------------------------------------- criteria 3, 4 and 5

struct SweepUnit {
    uint32_t p;
    LeviType levi;
};

std::vector<SweepUnit> sweep_units(int rmax) {
    std::vector<SweepUnit> units;
    for (uint32_t p : {5u, 7u, 101u})
        for (int r = 1; r <= rmax; ++r)
            for (const LeviType& lt : all_compositions(r)) units.push_back({p, lt});
    return units;
}

constexpr uint64_t kSweepBase = 0x9a7ab17c415eedULL;

uint64_t sweep_seed(const SweepUnit& u, size_t ui, int trial) {
    return mix_seed(kSweepBase + u.p, uint64_t(ui) * 100003 + uint64_t(trial));
}

bool criterion_3() {
    const int kTrials = 1000, kSharpness = 200, kNBounds = 8;
    const double kBudget = 120.0;
    auto t0 = Clock::now();
    Outcome oc;
    std::vector<SweepUnit> units = sweep_units(6);
    parallel_for(units.size(), [&](size_t ui) {
        const SweepUnit& u = units[ui];
        LevelFunction gamma = level_function(sort_to_partition(u.levi));
        FlaggedLattice lat(u.levi, FieldSpec{u.p, 1}, kNBounds);
        bool sharp_found = false;
        for (int trial = 0; trial < kTrials; ++trial) {
            uint64_t seed = sweep_seed(u, ui, trial);
            try {
                StrongParabolicEndo th = random_strong_parabolic(lat, seed);
                BoundReport rep = verify_valuation_bounds(char_poly(th), gamma);
                if (!rep.pass)
                    oc.fail("bound violated: p=" + std::to_string(u.p) +
                            " seed=" + std::to_string(seed));
                if (!sharp_found && trial < kSharpness) {
                    bool all_equal = true;
                    for (const BoundRow& row : rep.rows)
                        all_equal = all_equal && row.valuation && *row.valuation == row.gamma;
                    sharp_found = sharp_found || all_equal;
                }
            } catch (const Error& e) {
                oc.fail(std::string("bounds raised: ") + e.what());
            }
        }
        if (!sharp_found) oc.fail("no sharp sample within 200 seeds: p=" + std::to_string(u.p));
    });
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    if (dt >= kBudget) oc.fail("over the 2 min budget");
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "valuation theorem + sharpness, 1000 seeds x %zu Levi/field pairs (N=%d)",
                  units.size(), kNBounds);
    return report(3, buf, oc, dt);
}

bool criteria_4_5() {
    const int kTrials = 1000, kNDecomp = 12;
    auto t0 = Clock::now();
    Outcome oc4, oc5;
    std::atomic<long long> generic_count{0}, skipped_count{0};
    std::vector<SweepUnit> units = sweep_units(6);
    parallel_for(units.size(), [&](size_t ui) {
        const SweepUnit& u = units[ui];
        Partition sorted = sort_to_partition(u.levi);
        Partition conj = conjugate(sorted);
        LevelFunction gamma = level_function(sorted);
        FlaggedLattice lat(u.levi, FieldSpec{u.p, 1}, kNDecomp);
        for (int trial = 0; trial < kTrials; ++trial) {
            uint64_t seed = sweep_seed(u, ui, trial);
            try {
                // the criterion-3 sample, extended to decomposition precision
                // by the prefix-stable sampler
                StrongParabolicEndo thd = random_strong_parabolic(lat, seed);
                SPoly fd = char_poly(thd);
                if (!genericity_check(fd).ok ||
                    newton_polygon(fd).vertices != expected_polygon(gamma).vertices) {
                    skipped_count.fetch_add(1);
                    continue;
                }
                SpectralFactorization fac = factor_spectral(fd);
                StrongParabolicEndo thK =
                    fac.coefficient_field.m == 1 ? thd : base_change(thd, fac.coefficient_field);
                std::vector<SPoly> fpols;
                for (const auto& ff : fac.factors) fpols.push_back(ff.factor);
                DecompositionResult dec = decompose(thK, fpols);
                ValOrBound dv = det_valuation(dec.assembly);
                if (!dv.exact || dv.value != 0)
                    oc4.fail("assembly not unimodular: seed=" + std::to_string(seed));
                SPoly prod = dec.summands[0].block_char;
                for (size_t i = 1; i < dec.summands.size(); ++i)
                    prod = prod.mul(dec.summands[i].block_char);
                SPoly cpK = fac.coefficient_field.m == 1 ? fd : char_poly(thK);
                int upto = std::min({prod.min_precision(), cpK.min_precision(),
                                     kNDecomp - u.levi.rank()});
                if (!cpK.truncate_coeffs(upto).congruent(prod.truncate_coeffs(upto), upto))
                    oc4.fail("block char product mismatch: p=" + std::to_string(u.p) +
                             " seed=" + std::to_string(seed));
                generic_count.fetch_add(1);
                // criterion 5: Jordan type of the reduction
                JordanType jt = jordan_type_mod_t(thd);
                if (!(jt.block_sizes == conj))
                    oc5.fail("jordan type mismatch: p=" + std::to_string(u.p) +
                             " seed=" + std::to_string(seed));
            } catch (const Error& e) {
                oc4.fail(std::string("decomposition raised: p=") + std::to_string(u.p) +
                         " seed=" + std::to_string(seed) + ": " + e.what());
            }
        }
    });
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "decomposition on the %lld generic samples (skipped %lld off-locus, N=%d)",
                  generic_count.load(), skipped_count.load(), kNDecomp);
    bool ok4 = report(4, buf, oc4, dt);
    bool ok5 = report(5, "jordan rigidity on the same generic samples", oc5, dt);
    return ok4 && ok5;
}

// ------------------------------------------------------- criteria 6 and 7

bool criteria_6_7() {
    const int kTrials = 200, kN = 16;
    auto t0 = Clock::now();
    Outcome oc6, oc7;
    std::vector<LeviType> levis;
    for (int r = 1; r <= 6; ++r)
        for (const LeviType& lt : all_compositions(r)) levis.push_back(lt);
    parallel_for(levis.size(), [&](size_t li) {
        const LeviType& lt = levis[li];
        Partition sorted = sort_to_partition(lt);
        Partition conj = conjugate(sorted);
        LevelFunction gamma = level_function(sorted);
        long long expect_delta = 0;
        for (int m : lt.multiplicities()) expect_delta += 1LL * m * (m - 1) / 2;
        ParabolicData pd(2, lt.rank(), 0, {MarkedPoint(lt)});
        long long census_delta = genus_spectral(pd) - genus_normalized(pd);
        for (int trial = 0; trial < kTrials; ++trial) {
            uint64_t seed = mix_seed(0xbadcafe + li, uint64_t(trial));
            SPoly f;
            bool found = false;
            for (int attempt = 0; attempt < 100 && !found; ++attempt) {
                f = sample_spectral_generic(gamma, FieldSpec{101, 1}, kN,
                                            mix_seed(seed, uint64_t(attempt)));
                found = genericity_check(f).ok;
            }
            if (!found) {
                oc6.fail("no generic sample for a Levi type");
                continue;
            }
            try {
                SpectralFactorization fac = factor_spectral(f);
                std::vector<int> degs;
                for (const auto& ff : fac.factors) degs.push_back(ff.degree);
                std::sort(degs.rbegin(), degs.rend());
                if (degs != conj.parts() || int(fac.factors.size()) != conj.size())
                    oc6.fail("profile mismatch seed=" + std::to_string(seed));
                long long delta = local_delta(fac);
                if (delta != expect_delta || delta != census_delta)
                    oc7.fail("delta mismatch seed=" + std::to_string(seed) + " got " +
                             std::to_string(delta));
            } catch (const Error& e) {
                oc6.fail(std::string("spectral raised: ") + e.what());
            }
        }
    });
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    if (dt >= 120.0) oc6.fail("over the 2 min budget");
    bool ok6 = report(6, "ramification profiles, 200 generic samples per Levi type (F_101)", oc6, dt);
    bool ok7 = report(7, "genus bookkeeping: local delta = P_a - P_g on the same samples", oc7, dt);
    return ok6 && ok7;
}

// ---------------------------------------------------------------- criterion 8

SPoly eisenstein_sample(const Field& F, int deg, int prec, Elem unit, SplitMix64& rng) {
    std::vector<Series> c;
    std::vector<Elem> c0(size_t(prec), 0);
    c0[1] = unit;
    for (int k = 2; k < prec; ++k) c0[size_t(k)] = rng.below(F.size());
    c.push_back(Series(F, prec, std::move(c0)));
    for (int j = 1; j < deg; ++j) {
        std::vector<Elem> cj(size_t(prec), 0);
        for (int k = 1; k < prec; ++k) cj[size_t(k)] = rng.below(F.size());
        c.push_back(Series(F, prec, std::move(cj)));
    }
    c.push_back(Series::t_power(F, prec, 0));
    return SPoly(F, std::move(c));
}

bool criterion_8() {
    const int kN = 12;
    auto t0 = Clock::now();
    Outcome oc;
    const Field& F = field_of(101);
    std::vector<LeviType> levis;
    for (int r = 1; r <= 5; ++r)
        for (const LeviType& lt : all_compositions(r)) levis.push_back(lt);
    parallel_for(levis.size(), [&](size_t li) {
        const LeviType& lt = levis[li];
        Partition conj = conjugate(sort_to_partition(lt));
        for (uint64_t seed = 1; seed <= 50; ++seed) {
            SplitMix64 rng(mix_seed(seed, li));
            std::vector<SPoly> facs;
            std::vector<Elem> used;
            for (int i = 0; i < conj.size(); ++i) {
                if (i == 0 || conj.part(i) != conj.part(i - 1)) used.clear();
                Elem u;
                do {
                    u = 1 + rng.below(F.size() - 1);
                } while (std::find(used.begin(), used.end(), u) != used.end());
                used.push_back(u);
                facs.push_back(eisenstein_sample(F, conj.part(i), kN, u, rng));
            }
            try {
                StrongParabolicEndo th = bnr_reverse(facs, lt);
                if (!is_strongly_parabolic(th.matrix(), th.lattice())) {
                    oc.fail("not strongly parabolic, seed=" + std::to_string(seed));
                    continue;
                }
                SPoly cp = char_poly(th);
                SPoly prod = facs[0];
                for (size_t i = 1; i < facs.size(); ++i) prod = prod.mul(facs[i]);
                int wp = std::min(cp.min_precision(), prod.min_precision());
                if (!cp.truncate_coeffs(wp).congruent(prod.truncate_coeffs(wp), wp))
                    oc.fail("char poly mismatch, seed=" + std::to_string(seed));
                DecompositionResult dec = decompose(th, facs);
                std::vector<int> degs;
                for (const auto& s : dec.summands) degs.push_back(s.factor.degree());
                std::sort(degs.rbegin(), degs.rend());
                if (degs != conj.parts())
                    oc.fail("degrees not recovered, seed=" + std::to_string(seed));
            } catch (const Error& e) {
                oc.fail(std::string("bnr raised: ") + e.what() + " seed=" + std::to_string(seed));
            }
        }
    });
    return report(8, "BNR round trip, seeds 1..50 per Levi type, r <= 5", oc,
                  std::chrono::duration<double>(Clock::now() - t0).count());
}

// ---------------------------------------------------------------- criterion 9

// raw truncated-series vectors for the exhaustive enumeration
struct RawMatrix {
    int r, N;
    uint32_t p;
    std::vector<uint32_t> c;  // [i][j][k]

    uint32_t& at(int i, int j, int k) {
        return c[size_t((i * r + j) * N + k)];
    }
    uint32_t at(int i, int j, int k) const { return c[size_t((i * r + j) * N + k)]; }
};

RawMatrix rawify(const SMatrix& m, int N, uint32_t p) {
    RawMatrix rm{m.rows(), N, p, {}};
    rm.c.assign(size_t(m.rows() * m.rows() * N), 0);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            for (int k = 0; k < N; ++k) rm.at(i, j, k) = uint32_t(m.at(i, j).coeff(k));
    return rm;
}

bool raw_killed(const RawMatrix& m, const std::vector<uint32_t>& v) {
    // v: r blocks of N coefficients
    for (int i = 0; i < m.r; ++i)
        for (int k = 0; k < m.N; ++k) {
            uint64_t acc = 0;
            for (int j = 0; j < m.r; ++j)
                for (int a = 0; a <= k; ++a)
                    acc += uint64_t(m.at(i, j, a)) * v[size_t(j * m.N + (k - a))];
            if (acc % m.p) return false;
        }
    return true;
}

bool criterion_9() {
    auto t0 = Clock::now();
    Outcome oc;
    long long enumerated = 0;
    struct Case {
        uint32_t p;
        std::vector<int> levi;
    };
    // combinations where pairwise-distinct constant units exist (F_p has
    // p - 1 units, so conjugate-part multiplicities must stay below p)
    std::vector<Case> cases = {{3, {1}},    {3, {2}},    {3, {1, 1}},   {3, {2, 1}},
                               {3, {1, 2}}, {3, {1, 1, 1}}, {2, {1}},   {2, {2, 1}},
                               {2, {1, 2}}, {2, {1, 1, 1}}};
    for (const Case& cs : cases) {
        const Field& F = field_of(cs.p);
        LeviType lt(cs.levi);
        Partition conj = conjugate(sort_to_partition(lt));
        for (int N : {3, 4}) {
            for (uint64_t seed = 1; seed <= 2; ++seed) {
                SplitMix64 rng(mix_seed(seed, cs.p * 100 + lt.rank()));
                std::vector<SPoly> facs;
                std::vector<Elem> used;
                bool feasible = true;
                for (int i = 0; i < conj.size() && feasible; ++i) {
                    if (i == 0 || conj.part(i) != conj.part(i - 1)) used.clear();
                    if (used.size() >= F.size() - 1) {
                        feasible = false;
                        break;
                    }
                    Elem u;
                    do {
                        u = 1 + rng.below(F.size() - 1);
                    } while (std::find(used.begin(), used.end(), u) != used.end());
                    used.push_back(u);
                    facs.push_back(eisenstein_sample(F, conj.part(i), N, u, rng));
                }
                if (!feasible) continue;
                try {
                    StrongParabolicEndo th = bnr_reverse(facs, lt);
                    int r = lt.rank();
                    for (const SPoly& fi : facs) {
                        auto basis = kernel_lattice(th, fi);
                        if (int(basis.size()) != fi.degree()) {
                            oc.fail("kernel rank wrong");
                            continue;
                        }
                        // torsion window from the pairwise resultants
                        int D = 0;
                        for (const SPoly& fj : facs) {
                            if (&fj == &fi) continue;
                            ValOrBound rv = resultant_valuation(fi, fj);
                            if (!rv.exact) {
                                oc.fail("resultant not exact in oracle");
                                continue;
                            }
                            D += int(rv.value);
                        }
                        int window = N - D;
                        if (window <= 0) continue;
                        // brute-force kernel of f_i(theta) over F_p[t]/(t^N)
                        SMatrix M(F, r, r, N);
                        {
                            // Horner evaluation
                            SMatrix acc(F, r, r, N);
                            for (int i = 0; i < r; ++i) acc.at(i, i) = fi.coeff(fi.degree());
                            for (int j = fi.degree() - 1; j >= 0; --j) {
                                acc = th.matrix().mul(acc);
                                for (int i = 0; i < r; ++i)
                                    acc.at(i, i) = acc.at(i, i).add(fi.coeff(j));
                            }
                            M = acc.truncate(N);
                        }
                        RawMatrix rm = rawify(M, N, cs.p);
                        uint64_t total = 1;
                        for (int k = 0; k < r * N; ++k) total *= cs.p;
                        std::set<std::vector<uint32_t>> kernel_proj;
                        std::vector<uint32_t> v(size_t(r * N), 0);
                        for (uint64_t code = 0; code < total; ++code) {
                            uint64_t x = code;
                            for (int k = 0; k < r * N; ++k) {
                                v[size_t(k)] = uint32_t(x % cs.p);
                                x /= cs.p;
                            }
                            if (raw_killed(rm, v)) {
                                std::vector<uint32_t> proj;
                                for (int i = 0; i < r; ++i)
                                    for (int k = 0; k < window; ++k)
                                        proj.push_back(v[size_t(i * N + k)]);
                                kernel_proj.insert(proj);
                            }
                        }
                        enumerated += (long long)(total);
                        // span of the reported basis, projected the same way
                        int kk = int(basis.size());
                        uint64_t combos = 1;
                        for (int k = 0; k < kk * N; ++k) combos *= cs.p;
                        std::set<std::vector<uint32_t>> span_proj;
                        std::vector<uint32_t> cvec(size_t(kk * N), 0);
                        for (uint64_t code = 0; code < combos; ++code) {
                            uint64_t x = code;
                            for (int k = 0; k < kk * N; ++k) {
                                cvec[size_t(k)] = uint32_t(x % cs.p);
                                x /= cs.p;
                            }
                            std::vector<Series> w(size_t(r), Series(F, N));
                            for (int b = 0; b < kk; ++b) {
                                std::vector<Elem> cc(size_t(N), 0);
                                for (int k = 0; k < N; ++k) cc[size_t(k)] = cvec[size_t(b * N + k)];
                                Series coeff(F, N, std::move(cc));
                                for (int i = 0; i < r; ++i)
                                    w[size_t(i)] = w[size_t(i)].add(coeff.mul(basis[size_t(b)][size_t(i)]));
                            }
                            std::vector<uint32_t> flat(size_t(r * N), 0), proj;
                            for (int i = 0; i < r; ++i)
                                for (int k = 0; k < N; ++k)
                                    flat[size_t(i * N + k)] = uint32_t(w[size_t(i)].coeff(k));
                            if (!raw_killed(rm, flat)) {
                                oc.fail("span element not killed (p=" + std::to_string(cs.p) + ")");
                                break;
                            }
                            for (int i = 0; i < r; ++i)
                                for (int k = 0; k < window; ++k)
                                    proj.push_back(flat[size_t(i * N + k)]);
                            span_proj.insert(proj);
                        }
                        if (kernel_proj != span_proj)
                            oc.fail("kernel enumeration mismatch p=" + std::to_string(cs.p) +
                                    " N=" + std::to_string(N));
                    }
                } catch (const Error& e) {
                    oc.fail(std::string("oracle raised: ") + e.what());
                }
            }
        }
    }
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    if (dt >= 60.0) oc.fail("over the 1 min budget");
    char buf[120];
    std::snprintf(buf, sizeof buf, "kernel oracle vs %lld enumerated ring vectors (p in {2,3})",
                  enumerated);
    return report(9, buf, oc, dt);
}

// --------------------------------------------------------------- criterion 10

bool criterion_10() {
    auto t0 = Clock::now();
    Outcome oc;
    const Field& F = field_of(5);
    for (int r = 1; r <= 4; ++r)
        for (const Partition& p : all_partitions(r)) {
            CMatrix m(F, r, r);
            int off = 0;
            for (int part : p.parts()) {
                for (int i = 0; i + 1 < part; ++i) m.at(off + i, off + i + 1) = 1;
                off += part;
            }
            if (!ad_surjectivity_check(m)) {
                std::string desc = "partition (";
                for (int part : p.parts()) desc += std::to_string(part) + ",";
                oc.fail("ad not surjective for " + desc + ")");
            }
        }
    return report(10, "ad-surjectivity for one nilpotent per partition, r <= 4", oc,
                  std::chrono::duration<double>(Clock::now() - t0).count());
}

}  // namespace

int main() {
    std::printf("parhitchin acceptance suite (%d worker threads)\n", g_jobs);
    bool ok = true;
    ok &= criterion_1();
    ok &= criterion_2();
    ok &= criterion_3();
    ok &= criteria_4_5();
    ok &= criteria_6_7();
    ok &= criterion_8();
    ok &= criterion_9();
    ok &= criterion_10();
    std::printf("%s\n", ok ? "ALL ACCEPTANCE CRITERIA PASSED" : "ACCEPTANCE FAILURES PRESENT");
    return ok ? 0 : 1;
}
