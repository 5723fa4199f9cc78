#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "parhitchin/campaign.hpp"

using namespace parhitchin;
using nlohmann::json;

namespace {

json base_config() {
    return json{{"schema", kConfigSchema},
                {"field", {{"p", 101}, {"m", 1}}},
                {"precision", 16},
                {"parabolic",
                 {{"genus", 2},
                  {"rank", 3},
                  {"degree", 0},
                  {"points", json::array({json{{"levi", {2, 1}}}})}}}};
}

}  // namespace

TEST_CASE("config parsing is strict") {
    json ok = base_config();
    CampaignConfig cfg = CampaignConfig::from_json(ok);
    CHECK(cfg.field.p == 101);
    CHECK(cfg.parabolic.rank == 3);
    CHECK(cfg.parabolic.points.size() == 1);

    json bad = base_config();
    bad["unknown"] = 1;
    CHECK_THROWS_AS(CampaignConfig::from_json(bad), Error);

    json bad2 = base_config();
    bad2["parabolic"]["bogus"] = true;
    CHECK_THROWS_AS(CampaignConfig::from_json(bad2), Error);

    json bad3 = base_config();
    bad3["experiments"] = json::array({json{{"name", "not_an_experiment"}, {"trials", 1}}});
    CHECK_THROWS_AS(CampaignConfig::from_json(bad3), Error);

    json bad4 = base_config();
    bad4["schema"] = "something/2";
    CHECK_THROWS_AS(CampaignConfig::from_json(bad4), Error);

    json bad5 = base_config();
    bad5["field"] = json{{"p", 2}};
    bad5["parabolic"]["rank"] = 2;
    bad5["parabolic"]["points"] = json::array({json{{"levi", {1, 1}}}});
    CHECK_THROWS_AS(CampaignConfig::from_json(bad5), Error);

    // explicit weights
    json w = base_config();
    w["parabolic"]["points"][0]["weights"] =
        json::array({json::array({0, 1}), json::array({1, 3}), json::array({1, 2}),
                     json::array({1, 1})});
    CHECK_THROWS_AS(CampaignConfig::from_json(w), Error);  // wrong count for sigma=2
    w["parabolic"]["points"][0]["weights"] =
        json::array({json::array({0, 1}), json::array({1, 3}), json::array({1, 1})});
    CHECK(CampaignConfig::from_json(w).parabolic.points[0].weights[1] ==
          BigRat(BigInt(1), BigInt(3)));
}

TEST_CASE("census-only campaign") {
    CampaignConfig cfg = CampaignConfig::from_json(base_config());
    CampaignReport rep = run_campaign(cfg);
    CHECK(rep.all_passed);
    CHECK(rep.experiments.empty());
    CHECK(rep.census_block["dim_moduli"] == 9 + 1 + 2);
    CHECK(rep.census_block["dim_parabolic_base"] == 12);
    json out = rep.to_json();
    CHECK(out["schema"] == kReportSchema);
    CHECK(out["all_passed"] == true);
    std::string human = report_human(rep);
    CHECK(human.find("dim_moduli") != std::string::npos);
    CHECK(human.find("ALL PASSED") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs and thread counts") {
    json j = base_config();
    j["experiments"] = json::array(
        {json{{"name", "valuation_bounds"}, {"trials", 8}, {"seed", 7}},
         json{{"name", "polygon_profile"}, {"trials", 4}, {"seed", 3}}});
    CampaignConfig cfg = CampaignConfig::from_json(j);
    std::string a = run_campaign(cfg, 1).to_json().dump(2);
    std::string b = run_campaign(cfg, 1).to_json().dump(2);
    std::string c = run_campaign(cfg, 2).to_json().dump(2);
    CHECK(a == b);
    CHECK(a == c);
}

TEST_CASE("experiments pass on a healthy configuration") {
    json j = base_config();
    j["experiments"] = json::array(
        {json{{"name", "valuation_bounds"}, {"trials", 25}, {"seed", 7}},
         json{{"name", "decomposition"}, {"trials", 5}, {"seed", 11}},
         json{{"name", "jordan_type"}, {"trials", 5}, {"seed", 13}},
         json{{"name", "polygon_profile"}, {"trials", 5}, {"seed", 17}},
         json{{"name", "bnr_roundtrip"}, {"trials", 5}, {"seed", 19}},
         json{{"name", "delta_match"}, {"trials", 3}, {"seed", 23}}});
    CampaignConfig cfg = CampaignConfig::from_json(j);
    CampaignReport rep = run_campaign(cfg, 2);
    for (const ExperimentResult& er : rep.experiments) {
        INFO(er.name);
        CHECK(er.failures.empty());
        CHECK(er.passes == er.trials);
    }
    CHECK(rep.all_passed);
    // registry order and size
    CHECK(experiment_registry().size() == 7);
}

TEST_CASE("seed override changes the outcome deterministically") {
    json j = base_config();
    j["experiments"] =
        json::array({json{{"name", "valuation_bounds"}, {"trials", 3}, {"seed", 1}}});
    CampaignConfig cfg = CampaignConfig::from_json(j);
    std::string a = run_campaign(cfg, 1, uint64_t(99)).to_json().dump(2);
    json j2 = base_config();
    j2["experiments"] =
        json::array({json{{"name", "valuation_bounds"}, {"trials", 3}, {"seed", 99}}});
    std::string b = run_campaign(CampaignConfig::from_json(j2), 1).to_json().dump(2);
    CHECK(a == b);
}

TEST_CASE("genuine failures are recorded and replayable") {
    // conjugate of (3) is (1,1,1): three equal-degree factors need three
    // distinct constant-term units, but F_3 only has two
    json j{{"schema", kConfigSchema},
           {"field", {{"p", 3}, {"m", 1}}},
           {"precision", 8},
           {"parabolic",
            {{"genus", 2}, {"rank", 3}, {"degree", 0},
             {"points", json::array({json{{"levi", {3}}}})}}},
           {"experiments",
            json::array({json{{"name", "bnr_roundtrip"}, {"trials", 2}, {"seed", 5}}})}};
    CampaignConfig cfg = CampaignConfig::from_json(j);
    CampaignReport rep = run_campaign(cfg);
    CHECK_FALSE(rep.all_passed);
    REQUIRE(rep.experiments.size() == 1);
    REQUIRE(rep.experiments[0].failures.size() == 2);
    CHECK(rep.experiments[0].failures[0].reason ==
          "field too small for distinct constant terms");
    CHECK(rep.experiments[0].failures[0].trial_seed != 0);
    // re-running the same config reproduces the failure byte-for-byte
    CHECK(run_campaign(cfg).to_json().dump(2) == rep.to_json().dump(2));
    std::string human = report_human(rep);
    CHECK(human.find("FAILURES PRESENT") != std::string::npos);
}

TEST_CASE("failure rows render with their seeds") {
    CampaignReport rep;
    rep.census_block = json::object();
    ExperimentResult er;
    er.name = "decomposition";
    er.trials = 2;
    er.passes = 1;
    er.failures.push_back(TrialFailure{1, 0xabcdef, 0, "synthetic failure", json::object()});
    rep.experiments.push_back(er);
    rep.all_passed = false;
    std::string human = report_human(rep);
    CHECK(human.find("synthetic failure") != std::string::npos);
    CHECK(human.find(std::to_string(0xabcdef)) != std::string::npos);
    CHECK(human.find("FAILURES PRESENT") != std::string::npos);
}

TEST_CASE("serialization round trips") {
    const Field& F5 = field_of(5);
    Series s = Series::from_ints(F5, 6, {1, 2, 3, 4});
    json js = series_to_json(s);
    Series back = series_from_json(F5, 6, js);
    CHECK(back.identical(s));
    SPoly f = SPoly::from_ints(F5, 6, {{1}, {0, 3}, {0, 1, 2}});
    json jf = poly_to_json(f);
    SPoly fback = poly_from_json(F5, 6, jf);
    CHECK(fback.congruent(f, 6));
    CHECK(jf[0][0] == 1);  // leading coefficient first
}
