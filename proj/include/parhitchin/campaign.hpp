#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "parhitchin/census.hpp"
#include "parhitchin/series_poly.hpp"
#include "parhitchin/smatrix.hpp"

namespace parhitchin {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kConfigSchema = "parhitchin-config/1";
inline constexpr const char* kReportSchema = "parhitchin-report/1";

// ---- serialization helpers (coefficient arrays; polynomials leading-first;
// ---- matrices row-major)
nlohmann::json series_to_json(const Series& s);
nlohmann::json poly_to_json(const SPoly& f);
nlohmann::json matrix_to_json(const SMatrix& m);
nlohmann::json bigint_to_json(const BigInt& v);  // number if it fits, else decimal string
nlohmann::json rational_to_json(const BigRat& v);
Series series_from_json(const Field& F, int prec, const nlohmann::json& j);
SPoly poly_from_json(const Field& F, int prec, const nlohmann::json& j);

struct ExperimentSpec {
    std::string name;
    int trials = 1;
    uint64_t seed = 0;
};

// The fixed experiment registry.
const std::vector<std::string>& experiment_registry();

struct CampaignConfig {
    FieldSpec field{101, 1};
    int precision = 32;
    int extension_cap = 6;
    ParabolicData parabolic;
    std::vector<ExperimentSpec> experiments;
    std::string output;  // optional output path

    static CampaignConfig from_json(const nlohmann::json& j);  // strict: unknown keys rejected
    nlohmann::json to_json() const;
};

struct TrialFailure {
    int trial = 0;
    uint64_t trial_seed = 0;
    int point = -1;
    std::string reason;
    nlohmann::json details;
};

struct ExperimentResult {
    std::string name;
    int trials = 0;
    int passes = 0;
    std::vector<TrialFailure> failures;
};

struct CampaignReport {
    nlohmann::json config_echo;
    nlohmann::json census_block;
    std::vector<ExperimentResult> experiments;
    bool all_passed = true;

    nlohmann::json to_json() const;
};

nlohmann::json census_to_json(const CensusReport& r);

// Runs the configured experiments. Trials are independent; with jobs > 1
// they run on a small thread pool and are merged by trial index, so the
// report is byte-identical regardless of parallelism.
CampaignReport run_campaign(const CampaignConfig& cfg, int jobs = 1,
                            std::optional<uint64_t> seed_override = {});

std::string report_human(const CampaignReport& rep);

}  // namespace parhitchin
