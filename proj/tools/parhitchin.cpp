#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "parhitchin/campaign.hpp"

using namespace parhitchin;

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic verification campaigns for parabolic spectral data"};
    std::string config_path, out_path, format = "table";
    int jobs = 1;
    uint64_t seed = 0;
    app.add_option("--config", config_path, "campaign config (JSON)")->required();
    app.add_option("--out", out_path, "write the JSON report to this path");
    app.add_option("--format", format, "stdout format")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--jobs", jobs, "parallel trial workers")->check(CLI::PositiveNumber);
    CLI::Option* seed_opt =
        app.add_option("--seed", seed, "override every experiment base seed");
    CLI11_PARSE(app, argc, argv);

    try {
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "error: cannot open config " << config_path << "\n";
            return 2;
        }
        nlohmann::json jcfg = nlohmann::json::parse(in);
        CampaignConfig cfg = CampaignConfig::from_json(jcfg);
        std::optional<uint64_t> override;
        if (seed_opt->count() > 0) override = seed;
        CampaignReport rep = run_campaign(cfg, jobs, override);

        std::string outp = !out_path.empty() ? out_path : cfg.output;
        if (!outp.empty()) {
            std::ofstream of(outp);
            if (!of) {
                std::cerr << "error: cannot write report to " << outp << "\n";
                return 2;
            }
            of << rep.to_json().dump(2) << "\n";
        }
        if (format == "json")
            std::cout << rep.to_json().dump(2) << "\n";
        else
            std::cout << report_human(rep);
        return rep.all_passed ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
