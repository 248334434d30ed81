#include <json.hpp>
#include <ostream>

#include "wsnacc/accuracy.hpp"
#include "wsnacc/format.hpp"
#include "wsnacc/version.hpp"

namespace wsnacc {

void write_reports_csv(std::ostream& out, const std::vector<AccuracyReport>& reports) {
    out << "head_id,m,method,d_a,distortion,std_err,samples\n";
    for (const auto& r : reports) {
        out << "CH" << r.head_id << ',' << r.m << ',' << to_string(r.method) << ',' << fixed(r.d_a) << ','
            << fixed(r.distortion) << ',' << fixed(r.mc_std_error) << ',' << r.mc_samples << '\n';
    }
}

void write_reports_json(std::ostream& out, const std::vector<AccuracyReport>& reports, const RunEcho& echo) {
    const BetaFactors betas = beta_factors(echo.noise);
    nlohmann::ordered_json doc;
    doc["version"] = kVersion;
    doc["rng"] = kRngName;
    doc["log_base"] = kLogBase;
    doc["closed_form"] = kClosedFormNote;
    doc["seed"] = echo.seed;
    doc["theta1"] = echo.params.range();
    doc["theta2"] = echo.params.smoothness();
    doc["tau"] = echo.params.threshold();
    doc["noise"] = {
        {"signal", echo.noise.signal},
        {"observation", echo.noise.observation},
        {"transmission", echo.noise.transmission},
        {"head_observation", echo.noise.head_observation},
        {"power", echo.noise.power},
        {"beta", betas.beta},
        {"beta_ch", betas.beta_ch},
    };
    auto& rows = doc["reports"] = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json row = {
            {"head_id", "CH" + std::to_string(r.head_id)},
            {"m", r.m},
            {"method", to_string(r.method)},
            {"d_a", r.d_a},
            {"distortion", r.distortion},
            {"std_err", r.mc_std_error},
            {"samples", r.mc_samples},
        };
        if (r.method == AccuracyMethod::MonteCarlo) row["workers"] = r.mc_workers;
        rows.push_back(std::move(row));
    }
    out << doc.dump(2) << '\n';
}

}  // namespace wsnacc
