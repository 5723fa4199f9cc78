#include "parhitchin/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>


#include "parhitchin/local_higgs.hpp"
#include "parhitchin/rng.hpp"
#include "parhitchin/spectral.hpp"

namespace parhitchin {

using nlohmann::json;

// ---------------------------------------------------------------- serialization

json series_to_json(const Series& s) {
    json arr = json::array();
    for (int i = 0; i < s.precision(); ++i) arr.push_back(s.coeff(i));
    return arr;
}

json poly_to_json(const SPoly& f) {
    json arr = json::array();
    for (int j = f.degree(); j >= 0; --j) arr.push_back(series_to_json(f.coeff(j)));
    return arr;
}

json matrix_to_json(const SMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(series_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json bigint_to_json(const BigInt& v) {
    if (v <= std::numeric_limits<long long>::max() && v >= std::numeric_limits<long long>::min())
        return v.convert_to<long long>();
    return v.str();
}

json rational_to_json(const BigRat& v) {
    return json{{"num", bigint_to_json(v.numerator())}, {"den", bigint_to_json(v.denominator())}};
}

Series series_from_json(const Field& F, int prec, const json& j) {
    if (!j.is_array()) throw Error("series literal must be a coefficient array");
    std::vector<Elem> c(size_t(prec), 0);
    for (size_t i = 0; i < j.size() && i < c.size(); ++i) {
        int64_t v = j[i].get<int64_t>();
        c[i] = F.from_int(v);
    }
    return Series(F, prec, std::move(c));
}

SPoly poly_from_json(const Field& F, int prec, const json& j) {
    if (!j.is_array() || j.empty()) throw Error("polynomial literal must be a nonempty array");
    std::vector<Series> c;
    c.reserve(j.size());
    for (size_t i = j.size(); i-- > 0;) c.push_back(series_from_json(F, prec, j[i]));
    return SPoly(F, std::move(c));
}

// ---------------------------------------------------------------- config

namespace {

void check_keys(const json& j, std::initializer_list<const char*> allowed, const char* where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) ok = true;
        if (!ok) throw Error(std::string("unknown key '") + it.key() + "' in " + where);
    }
}

BigRat rational_from_json(const json& j) {
    if (j.is_number_integer()) return BigRat(BigInt(j.get<int64_t>()));
    if (j.is_array() && j.size() == 2)
        return BigRat(BigInt(j[0].get<int64_t>()), BigInt(j[1].get<int64_t>()));
    if (j.is_object()) {
        check_keys(j, {"num", "den"}, "rational");
        return BigRat(BigInt(j.at("num").get<int64_t>()), BigInt(j.at("den").get<int64_t>()));
    }
    throw Error("rational must be an integer, [num, den], or {num, den}");
}

}  // namespace

const std::vector<std::string>& experiment_registry() {
    static const std::vector<std::string> names = {
        "valuation_bounds", "decomposition",  "jordan_type",       "polygon_profile",
        "bnr_roundtrip",    "delta_match",    "census_identities"};
    return names;
}

CampaignConfig CampaignConfig::from_json(const json& j) {
    check_keys(j, {"schema", "field", "precision", "extension_cap", "parabolic", "experiments",
                   "output"},
               "config");
    if (!j.contains("schema") || j.at("schema") != kConfigSchema)
        throw Error(std::string("config schema must be '") + kConfigSchema + "'");
    FieldSpec fs{101, 1};
    if (j.contains("field")) {
        const json& f = j.at("field");
        check_keys(f, {"p", "m"}, "field");
        fs.p = f.at("p").get<uint32_t>();
        fs.m = f.value("m", 1u);
    }
    field_of(fs);  // validates primality and size
    const json& par = j.at("parabolic");
    check_keys(par, {"genus", "rank", "degree", "points"}, "parabolic");
    int genus = par.at("genus").get<int>();
    int rank = par.at("rank").get<int>();
    int degree = par.value("degree", 0);
    std::vector<MarkedPoint> points;
    if (par.contains("points"))
        for (const json& pj : par.at("points")) {
            check_keys(pj, {"levi", "weights"}, "point");
            std::vector<int> m = pj.at("levi").get<std::vector<int>>();
            LeviType lt(std::move(m));
            if (pj.contains("weights")) {
                std::vector<BigRat> w;
                for (const json& wj : pj.at("weights")) w.push_back(rational_from_json(wj));
                points.emplace_back(std::move(lt), std::move(w));
            } else {
                points.emplace_back(std::move(lt));
            }
        }
    CampaignConfig cfg{fs,
                       j.value("precision", 32),
                       j.value("extension_cap", 6),
                       ParabolicData(genus, rank, degree, std::move(points)),
                       {},
                       j.value("output", std::string())};
    if (cfg.precision < 4 || cfg.precision > 512) throw Error("precision out of range [4, 512]");
    if (fs.p == 2 && rank == 2)
        throw Error("rank-2 spectral data over characteristic 2 is rejected");
    if (j.contains("experiments"))
        for (const json& ej : j.at("experiments")) {
            check_keys(ej, {"name", "trials", "seed"}, "experiment");
            ExperimentSpec es;
            es.name = ej.at("name").get<std::string>();
            es.trials = ej.value("trials", 1);
            es.seed = ej.value("seed", uint64_t(0));
            const auto& reg = experiment_registry();
            if (std::find(reg.begin(), reg.end(), es.name) == reg.end())
                throw Error("unknown experiment '" + es.name + "'");
            if (es.trials < 1) throw Error("experiment trials must be >= 1");
            cfg.experiments.push_back(std::move(es));
        }
    return cfg;
}

json CampaignConfig::to_json() const {
    json points = json::array();
    for (const MarkedPoint& pt : parabolic.points) {
        json w = json::array();
        for (const BigRat& a : pt.weights)
            w.push_back(json::array({bigint_to_json(a.numerator()), bigint_to_json(a.denominator())}));
        points.push_back(json{{"levi", pt.levi.multiplicities()}, {"weights", std::move(w)}});
    }
    json exps = json::array();
    for (const ExperimentSpec& e : experiments)
        exps.push_back(json{{"name", e.name}, {"trials", e.trials}, {"seed", e.seed}});
    json j{{"schema", kConfigSchema},
           {"field", {{"p", field.p}, {"m", field.m}}},
           {"precision", precision},
           {"extension_cap", extension_cap},
           {"parabolic",
            {{"genus", parabolic.genus},
             {"rank", parabolic.rank},
             {"degree", parabolic.degree},
             {"points", std::move(points)}}},
           {"experiments", std::move(exps)}};
    if (!output.empty()) j["output"] = output;
    return j;
}

json census_to_json(const CensusReport& r) {
    json j;
    j["par_degree"] = rational_to_json(r.par_degree);
    j["par_slope"] = rational_to_json(r.par_slope);
    j["dim_moduli"] = r.dim_moduli;
    j["dim_higgs"] = r.dim_higgs;
    j["dim_higgs_weak"] = r.dim_higgs_weak;
    j["dim_hitchin_base"] = r.dim_hitchin_base;
    j["dim_parabolic_base"] = r.dim_parabolic_base;
    j["genus_spectral"] = r.genus_spectral;
    j["genus_normalized"] = r.genus_normalized;
    j["delta"] = r.delta;
    j["bnr_degree"] = r.bnr_degree;
    j["weak_fiber_components"] = bigint_to_json(r.weak_fiber_components);
    j["nilpotent_cone_dim"] = r.nilpotent_cone_dim;
    j["nilpotent_cone_dim_weak"] = r.nilpotent_cone_dim_weak;
    j["sl_variant_base_dim"] = r.sl_variant_base_dim;
    j["multi_point_extension"] = r.multi_point_extension;
    return j;
}

// ---------------------------------------------------------------- experiments

namespace {

struct ExpContext {
    const CampaignConfig* cfg;
    const Field* F;
};

struct PointData {
    LeviType levi;
    Partition sorted;
    Partition conj;
    LevelFunction gamma;
};

PointData point_data(const MarkedPoint& pt) {
    Partition s = sort_to_partition(pt.levi);
    return {pt.levi, s, conjugate(s), level_function(s)};
}

json bound_rows_json(const BoundReport& rep) {
    json rows = json::array();
    for (const BoundRow& r : rep.rows) {
        json row{{"i", r.index}, {"gamma", r.gamma}, {"pass", r.pass}};
        if (r.valuation)
            row["valuation"] = *r.valuation;
        else
            row["valuation_at_least"] = r.precision;
        rows.push_back(std::move(row));
    }
    return rows;
}

bool parabolic_generic(const SPoly& f, const LevelFunction& gamma) {
    if (!genericity_check(f).ok) return false;
    return newton_polygon(f).vertices == expected_polygon(gamma).vertices;
}

struct GenericTheta {
    StrongParabolicEndo theta;
    SPoly cp;
    uint64_t used_seed;
};

std::optional<GenericTheta> sample_generic_theta(const FlaggedLattice& lat,
                                                 const LevelFunction& gamma, uint64_t seed) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        uint64_t s = attempt == 0 ? seed : mix_seed(seed, uint64_t(attempt));
        StrongParabolicEndo theta = random_strong_parabolic(lat, s);
        SPoly cp = char_poly(theta);
        if (parabolic_generic(cp, gamma)) return GenericTheta{std::move(theta), std::move(cp), s};
    }
    return std::nullopt;
}

using ExpResult = std::optional<TrialFailure>;

ExpResult exp_valuation_bounds(const ExpContext& ctx, int trial, uint64_t trial_seed) {
    const CampaignConfig& cfg = *ctx.cfg;
    for (size_t px = 0; px < cfg.parabolic.points.size(); ++px) {
        PointData pd = point_data(cfg.parabolic.points[px]);
        FlaggedLattice lat(pd.levi, cfg.field, cfg.precision);
        uint64_t s = mix_seed(trial_seed, px);
        StrongParabolicEndo theta = random_strong_parabolic(lat, s);
        SPoly f = char_poly(theta);
        BoundReport rep = verify_valuation_bounds(f, pd.gamma);
        if (!rep.pass) {
            TrialFailure tf{trial, trial_seed, int(px), "valuation bound violated", {}};
            tf.details = json{{"sample_seed", s},
                              {"theta", matrix_to_json(theta.matrix())},
                              {"char_poly", poly_to_json(f)},
                              {"bounds", bound_rows_json(rep)}};
            return tf;
        }
    }
    return std::nullopt;
}

ExpResult exp_decomposition(const ExpContext& ctx, int trial, uint64_t trial_seed) {
    const CampaignConfig& cfg = *ctx.cfg;
    for (size_t px = 0; px < cfg.parabolic.points.size(); ++px) {
        PointData pd = point_data(cfg.parabolic.points[px]);
        FlaggedLattice lat(pd.levi, cfg.field, cfg.precision);
        uint64_t s = mix_seed(trial_seed, px);
        auto gt = sample_generic_theta(lat, pd.gamma, s);
        if (!gt)
            return TrialFailure{trial, trial_seed, int(px),
                                "no generic sample within 100 attempts", {}};
        try {
            SpectralOptions opts{cfg.extension_cap};
            SpectralFactorization fac = factor_spectral(gt->cp, opts);
            StrongParabolicEndo thetaK = fac.coefficient_field.m == cfg.field.m
                                             ? gt->theta
                                             : base_change(gt->theta, fac.coefficient_field);
            std::vector<SPoly> fpols;
            for (const auto& ff : fac.factors) fpols.push_back(ff.factor);
            DecompositionResult dec = decompose(thetaK, fpols);
            SPoly prod = dec.summands[0].block_char;
            for (size_t i = 1; i < dec.summands.size(); ++i)
                prod = prod.mul(dec.summands[i].block_char);
            SPoly cpK = char_poly(thetaK);
            int upto = std::min({prod.min_precision(), cpK.min_precision(),
                                 cfg.precision - cfg.parabolic.rank});
            if (!cpK.truncate_coeffs(upto).congruent(prod.truncate_coeffs(upto), upto)) {
                TrialFailure tf{trial, trial_seed, int(px),
                                "block characteristic polynomials do not multiply back", {}};
                tf.details = json{{"sample_seed", gt->used_seed},
                                  {"theta", matrix_to_json(gt->theta.matrix())},
                                  {"char_poly", poly_to_json(gt->cp)},
                                  {"expected", poly_to_json(cpK.truncate_coeffs(upto))},
                                  {"actual", poly_to_json(prod.truncate_coeffs(upto))}};
                return tf;
            }
        } catch (const Error& e) {
            TrialFailure tf{trial, trial_seed, int(px),
                            std::string("decomposition failed: ") + e.what(), {}};
            tf.details = json{{"theta", matrix_to_json(gt->theta.matrix())},
                              {"char_poly", poly_to_json(gt->cp)}};
            return tf;
        }
    }
    return std::nullopt;
}

ExpResult exp_jordan_type(const ExpContext& ctx, int trial, uint64_t trial_seed) {
    const CampaignConfig& cfg = *ctx.cfg;
    for (size_t px = 0; px < cfg.parabolic.points.size(); ++px) {
        PointData pd = point_data(cfg.parabolic.points[px]);
        FlaggedLattice lat(pd.levi, cfg.field, cfg.precision);
        uint64_t s = mix_seed(trial_seed, px);
        auto gt = sample_generic_theta(lat, pd.gamma, s);
        if (!gt)
            return TrialFailure{trial, trial_seed, int(px),
                                "no generic sample within 100 attempts", {}};
        JordanType jt = jordan_type_mod_t(gt->theta);
        if (!(jt.block_sizes == pd.conj)) {
            TrialFailure tf{trial, trial_seed, int(px), "Jordan type differs from conjugate", {}};
            tf.details = json{{"theta", matrix_to_json(gt->theta.matrix())},
                              {"expected", pd.conj.parts()},
                              {"actual", jt.block_sizes.parts()}};
            return tf;
        }
    }
    return std::nullopt;
}

struct GenericPoly {
    SPoly f;
    int attempts;
};

std::optional<GenericPoly> sample_generic_poly(const LevelFunction& gamma, FieldSpec fs,
                                               int precision, uint64_t seed) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        uint64_t s = attempt == 0 ? seed : mix_seed(seed, uint64_t(attempt));
        SPoly f = sample_spectral_generic(gamma, fs, precision, s);
        if (genericity_check(f).ok) return GenericPoly{std::move(f), attempt};
    }
    return std::nullopt;
}

ExpResult exp_polygon_profile(const ExpContext& ctx, int trial, uint64_t trial_seed) {
    const CampaignConfig& cfg = *ctx.cfg;
    for (size_t px = 0; px < cfg.parabolic.points.size(); ++px) {
        PointData pd = point_data(cfg.parabolic.points[px]);
        uint64_t s = mix_seed(trial_seed, px);
        auto gp = sample_generic_poly(pd.gamma, cfg.field, cfg.precision, s);
        if (!gp)
            return TrialFailure{trial, trial_seed, int(px),
                                "no generic polynomial within 100 attempts", {}};
        try {
            NewtonPolygon np = newton_polygon(gp->f);
            NewtonPolygon ep = expected_polygon(pd.gamma);
            if (np.vertices != ep.vertices) {
                TrialFailure tf{trial, trial_seed, int(px), "polygon differs from expected", {}};
                tf.details = json{{"char_poly", poly_to_json(gp->f)},
                                  {"expected", ep.vertices},
                                  {"actual", np.vertices}};
                return tf;
            }
            SpectralOptions opts{cfg.extension_cap};
            BranchProfile bp = ramification_profile(gp->f, opts);
            if (bp.degrees != pd.conj.parts() || bp.branch_count != pd.conj.size()) {
                TrialFailure tf{trial, trial_seed, int(px),
                                "ramification profile differs from conjugate partition", {}};
                tf.details = json{{"char_poly", poly_to_json(gp->f)},
                                  {"expected", pd.conj.parts()},
                                  {"actual", bp.degrees}};
                return tf;
            }
        } catch (const Error& e) {
            TrialFailure tf{trial, trial_seed, int(px),
                            std::string("spectral analysis failed: ") + e.what(), {}};
            tf.details = json{{"char_poly", poly_to_json(gp->f)}};
            return tf;
        }
    }
    return std::nullopt;
}

ExpResult exp_bnr_roundtrip(const ExpContext& ctx, int trial, uint64_t trial_seed) {
    const CampaignConfig& cfg = *ctx.cfg;
    const Field& F = *ctx.F;
    for (size_t px = 0; px < cfg.parabolic.points.size(); ++px) {
        PointData pd = point_data(cfg.parabolic.points[px]);
        uint64_t s = mix_seed(trial_seed, px);
        SplitMix64 rng(s);
        // one Eisenstein factor per conjugate part; equal degrees need
        // constant terms with pairwise-distinct units
        int maxmult = 0, cur = 0;
        for (int i = 0; i < pd.conj.size(); ++i) {
            cur = (i > 0 && pd.conj.part(i) == pd.conj.part(i - 1)) ? cur + 1 : 1;
            maxmult = std::max(maxmult, cur);
        }
        if (uint64_t(maxmult) > F.size() - 1)
            return TrialFailure{trial, trial_seed, int(px),
                                "field too small for distinct constant terms", {}};
        std::vector<SPoly> facs;
        std::vector<Elem> used;
        int N = cfg.precision;
        for (int i = 0; i < pd.conj.size(); ++i) {
            int d = pd.conj.part(i);
            if (i == 0 || pd.conj.part(i) != pd.conj.part(i - 1)) used.clear();
            Elem u;
            do {
                u = 1 + rng.below(F.size() - 1);
            } while (std::find(used.begin(), used.end(), u) != used.end());
            used.push_back(u);
            std::vector<Series> cs;
            std::vector<Elem> c0(size_t(N), 0);
            c0[1] = u;
            for (int k = 2; k < N; ++k) c0[size_t(k)] = rng.below(F.size());
            cs.push_back(Series(F, N, std::move(c0)));
            for (int jj = 1; jj < d; ++jj) {
                std::vector<Elem> cj(size_t(N), 0);
                for (int k = 1; k < N; ++k) cj[size_t(k)] = rng.below(F.size());
                cs.push_back(Series(F, N, std::move(cj)));
            }
            cs.push_back(Series::t_power(F, N, 0));
            facs.push_back(SPoly(F, std::move(cs)));
        }
        try {
            StrongParabolicEndo theta = bnr_reverse(facs, pd.levi);
            if (!is_strongly_parabolic(theta.matrix(), theta.lattice()))
                return TrialFailure{trial, trial_seed, int(px), "output not strongly parabolic", {}};
            SPoly cp = char_poly(theta);
            SPoly prod = facs[0];
            for (size_t i = 1; i < facs.size(); ++i) prod = prod.mul(facs[i]);
            int upto = std::min(cp.min_precision(), prod.min_precision());
            if (!cp.truncate_coeffs(upto).congruent(prod.truncate_coeffs(upto), upto)) {
                TrialFailure tf{trial, trial_seed, int(px),
                                "char poly of reverse construction is wrong", {}};
                tf.details = json{{"theta", matrix_to_json(theta.matrix())},
                                  {"expected", poly_to_json(prod)},
                                  {"actual", poly_to_json(cp)}};
                return tf;
            }
            DecompositionResult dec = decompose(theta, facs);
            std::vector<int> degs;
            for (const auto& su : dec.summands) degs.push_back(su.factor.degree());
            std::sort(degs.rbegin(), degs.rend());
            if (degs != pd.conj.parts())
                return TrialFailure{trial, trial_seed, int(px),
                                    "decompose does not recover factor degrees", {}};
            JordanType jt = jordan_type_mod_t(theta);
            if (!(jt.block_sizes == pd.conj))
                return TrialFailure{trial, trial_seed, int(px),
                                    "Jordan type of reverse construction is wrong", {}};
        } catch (const Error& e) {
            return TrialFailure{trial, trial_seed, int(px),
                                std::string("bnr_reverse failed: ") + e.what(), {}};
        }
    }
    return std::nullopt;
}

ExpResult exp_delta_match(const ExpContext& ctx, int trial, uint64_t trial_seed) {
    const CampaignConfig& cfg = *ctx.cfg;
    long long total = 0;
    for (size_t px = 0; px < cfg.parabolic.points.size(); ++px) {
        PointData pd = point_data(cfg.parabolic.points[px]);
        uint64_t s = mix_seed(trial_seed, px);
        auto gp = sample_generic_poly(pd.gamma, cfg.field, cfg.precision, s);
        if (!gp)
            return TrialFailure{trial, trial_seed, int(px),
                                "no generic polynomial within 100 attempts", {}};
        long long expected_pt = 0;
        for (int m : pd.levi.multiplicities()) expected_pt += 1LL * m * (m - 1) / 2;
        try {
            SpectralOptions opts{cfg.extension_cap};
            long long delta = local_delta(gp->f, opts);
            if (delta != expected_pt) {
                TrialFailure tf{trial, trial_seed, int(px), "local delta mismatch", {}};
                tf.details = json{{"char_poly", poly_to_json(gp->f)},
                                  {"expected", expected_pt},
                                  {"actual", delta}};
                return tf;
            }
            total += delta;
        } catch (const Error& e) {
            TrialFailure tf{trial, trial_seed, int(px),
                            std::string("delta computation failed: ") + e.what(), {}};
            tf.details = json{{"char_poly", poly_to_json(gp->f)}};
            return tf;
        }
    }
    long long census_delta = delta_invariant(cfg.parabolic);
    if (total != census_delta) {
        TrialFailure tf{trial, trial_seed, -1, "sum of local deltas differs from census delta", {}};
        tf.details = json{{"expected", census_delta}, {"actual", total}};
        return tf;
    }
    return std::nullopt;
}

struct LeviCache {
    long long gamma_sum, flag_dim, pair_sum, min_pair_conj;
    bool trivial_flag;
};

ExpResult exp_census_identities(const ExpContext& ctx, int trial, uint64_t trial_seed) {
    (void)trial_seed;
    (void)ctx;
    const int max_r = 8, max_g = 5, max_points = 3;
    for (int r = 1; r <= max_r; ++r) {
        std::vector<LeviType> levis = all_compositions(r);
        std::vector<LeviCache> cache;
        cache.reserve(levis.size());
        for (const LeviType& lt : levis) {
            LeviCache c{};
            Partition srt = sort_to_partition(lt);
            LevelFunction gsrt = level_function(srt);
            for (int v : gsrt.values()) c.gamma_sum += v;
            c.flag_dim = flag_dimension(lt);
            for (int m : lt.multiplicities()) c.pair_sum += 1LL * m * (m - 1) / 2;
            c.min_pair_conj = to_int64(min_pair_sum(conjugate(srt)));
            c.trivial_flag = lt.length() == 1;
            if (c.pair_sum != c.min_pair_conj)
                return TrialFailure{trial, 0, -1,
                                    "min_pair_sum identity failed for r=" + std::to_string(r), {}};
            // gamma sum + dim G/P = r(r+1)/2, the per-point dimension identity
            if (c.gamma_sum + c.flag_dim != 1LL * r * (r + 1) / 2)
                return TrialFailure{trial, 0, -1,
                                    "per-point dimension identity failed for r=" + std::to_string(r),
                                    {}};
            cache.push_back(c);
        }
        // enumerate point multisets up to max_points and compare the closed
        // forms against the census functions on a sampled subset
        for (int degD = 0; degD <= max_points; ++degD) {
            std::vector<int> idx(size_t(degD), 0);
            long long combo = 0;
            auto advance = [&]() {
                for (int k = degD - 1; k >= 0; --k) {
                    if (idx[size_t(k)] + 1 < int(levis.size())) {
                        ++idx[size_t(k)];
                        for (int k2 = k + 1; k2 < degD; ++k2) idx[size_t(k2)] = idx[size_t(k)];
                        return true;
                    }
                }
                return false;
            };
            while (true) {
                long long gsum = 0, fsum = 0, psum = 0;
                bool all_trivial = true;
                for (int k = 0; k < degD; ++k) {
                    const LeviCache& c = cache[size_t(idx[size_t(k)])];
                    gsum += c.gamma_sum;
                    fsum += c.flag_dim;
                    psum += c.pair_sum;
                    all_trivial = all_trivial && c.trivial_flag;
                }
                for (int g = 2; g <= max_g; ++g) {
                    long long dim_par = 1 + 1LL * r * r * (g - 1) + 1LL * r * (r + 1) * degD / 2 - gsum;
                    long long dim_hg = 2 * ((1LL * (g - 1)) * r * r + 1 + fsum);
                    if (2 * dim_par != dim_hg)
                        return TrialFailure{
                            trial, 0, -1,
                            "half-dimension identity failed at g=" + std::to_string(g) +
                                " r=" + std::to_string(r) + " degD=" + std::to_string(degD),
                            {}};
                    long long pa = 1 + 1LL * r * r * (g - 1) + 1LL * r * (r - 1) * degD / 2;
                    long long pg = 1LL * r * r * (g - 1) + 1 + fsum;
                    if (pa - pg != psum)
                        return TrialFailure{trial, 0, -1, "delta bookkeeping identity failed", {}};
                    if (degD >= 1) {
                        long long dim_h = 1LL * r * r * (g - 1) + 1LL * r * (r + 1) * degD / 2;
                        if (dim_par > dim_h)
                            return TrialFailure{trial, 0, -1,
                                                "parabolic base exceeds full Hitchin base", {}};
                    }
                }
                // cross-check the closed forms against the census module
                if (combo % 997 == 0) {
                    std::vector<MarkedPoint> pts;
                    for (int k = 0; k < degD; ++k)
                        pts.emplace_back(levis[size_t(idx[size_t(k)])]);
                    ParabolicData pdata(2, r, 0, std::move(pts));
                    CensusReport cr = census(pdata);
                    long long dim_par = 1 + 1LL * r * r + 1LL * r * (r + 1) * degD / 2 - gsum;
                    bool weak_one = cr.weak_fiber_components == 1;
                    if (cr.dim_parabolic_base != dim_par || cr.dim_higgs != 2 * cr.dim_moduli ||
                        cr.delta != psum || weak_one != all_trivial)
                        return TrialFailure{trial, 0, -1, "census cross-check failed", {}};
                }
                ++combo;
                if (degD == 0 || !advance()) break;
            }
        }
    }
    return std::nullopt;
}

using ExpFn = ExpResult (*)(const ExpContext&, int, uint64_t);

ExpFn lookup_experiment(const std::string& name) {
    if (name == "valuation_bounds") return exp_valuation_bounds;
    if (name == "decomposition") return exp_decomposition;
    if (name == "jordan_type") return exp_jordan_type;
    if (name == "polygon_profile") return exp_polygon_profile;
    if (name == "bnr_roundtrip") return exp_bnr_roundtrip;
    if (name == "delta_match") return exp_delta_match;
    if (name == "census_identities") return exp_census_identities;
    throw Error("unknown experiment '" + name + "'");
}

}  // namespace

CampaignReport run_campaign(const CampaignConfig& cfg, int jobs,
                            std::optional<uint64_t> seed_override) {
    CampaignConfig effective = cfg;
    if (seed_override)
        for (ExperimentSpec& e : effective.experiments) e.seed = *seed_override;
    ExpContext ctx{&effective, &field_of(effective.field)};

    CampaignReport rep;
    rep.config_echo = effective.to_json();
    rep.census_block = census_to_json(census(effective.parabolic));

    struct Task {
        int exp;
        int trial;
    };
    std::vector<Task> tasks;
    std::vector<std::vector<ExpResult>> results(effective.experiments.size());
    for (size_t e = 0; e < effective.experiments.size(); ++e) {
        int trials = effective.experiments[e].name == "census_identities"
                         ? 1
                         : effective.experiments[e].trials;
        results[e].resize(size_t(trials));
        for (int t = 0; t < trials; ++t) tasks.push_back({int(e), t});
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t k = next.fetch_add(1);
            if (k >= tasks.size()) return;
            const Task& task = tasks[k];
            const ExperimentSpec& spec = effective.experiments[size_t(task.exp)];
            uint64_t trial_seed = mix_seed(spec.seed, uint64_t(task.trial));
            try {
                results[size_t(task.exp)][size_t(task.trial)] =
                    lookup_experiment(spec.name)(ctx, task.trial, trial_seed);
            } catch (const std::exception& e) {
                results[size_t(task.exp)][size_t(task.trial)] =
                    TrialFailure{task.trial, trial_seed, -1,
                                 std::string("unexpected error: ") + e.what(), {}};
            }
        }
    };
    int nthreads = std::max(1, jobs);
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (size_t e = 0; e < effective.experiments.size(); ++e) {
        ExperimentResult er;
        er.name = effective.experiments[e].name;
        er.trials = int(results[e].size());
        for (const ExpResult& r : results[e]) {
            if (r)
                er.failures.push_back(*r);
            else
                ++er.passes;
        }
        rep.all_passed = rep.all_passed && er.failures.empty();
        rep.experiments.push_back(std::move(er));
    }
    return rep;
}

json CampaignReport::to_json() const {
    json exps = json::array();
    for (const ExperimentResult& er : experiments) {
        json fails = json::array();
        for (const TrialFailure& tf : er.failures) {
            json f{{"trial", tf.trial},
                   {"trial_seed", tf.trial_seed},
                   {"reason", tf.reason}};
            if (tf.point >= 0) f["point"] = tf.point;
            if (!tf.details.is_null()) f["details"] = tf.details;
            fails.push_back(std::move(f));
        }
        exps.push_back(json{{"name", er.name},
                            {"trials", er.trials},
                            {"passes", er.passes},
                            {"failures", std::move(fails)}});
    }
    return json{{"schema", kReportSchema},
                {"tool_version", kToolVersion},
                {"config", config_echo},
                {"census", census_block},
                {"experiments", std::move(exps)},
                {"all_passed", all_passed}};
}

std::string report_human(const CampaignReport& rep) {
    std::ostringstream os;
    os << "parhitchin " << kToolVersion << "\n";
    os << "census:\n";
    const json& c = rep.census_block;
    for (auto it = c.begin(); it != c.end(); ++it) {
        os << "  " << it.key() << " = ";
        if (it->is_object() && it->contains("num"))
            os << (*it)["num"] << "/" << (*it)["den"];
        else
            os << *it;
        os << "\n";
    }
    if (!rep.experiments.empty()) {
        os << "experiments:\n";
        os << "  name                 trials   passes   failures\n";
        for (const ExperimentResult& er : rep.experiments) {
            os << "  " << er.name;
            for (size_t k = er.name.size(); k < 21; ++k) os << ' ';
            std::string t = std::to_string(er.trials), p = std::to_string(er.passes),
                        f = std::to_string(er.failures.size());
            os << t;
            for (size_t k = t.size(); k < 9; ++k) os << ' ';
            os << p;
            for (size_t k = p.size(); k < 9; ++k) os << ' ';
            os << f << "\n";
            for (const TrialFailure& tf : er.failures) {
                os << "    trial " << tf.trial << " seed " << tf.trial_seed;
                if (tf.point >= 0) os << " point " << tf.point;
                os << ": " << tf.reason << "\n";
            }
        }
    }
    os << (rep.all_passed ? "ALL PASSED" : "FAILURES PRESENT") << "\n";
    return os.str();
}

}  // namespace parhitchin
