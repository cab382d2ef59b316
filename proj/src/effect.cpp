#include "causalbound/effect.hpp"

#include <json.hpp>

#include "causalbound/errors.hpp"

namespace causalbound {

std::string EffectEstimate::to_json() const {
    nlohmann::json j{{"estimator", estimator},
                     {"value", value},
                     {"n_treated", n_treated},
                     {"n_control", n_control},
                     {"clip", nullptr}};
    if (clip) j["clip"] = *clip;
    return j.dump(2);
}

double population_ape(const DiscreteJoint& dist) {
    return dist.mean_y_given_t(1) - dist.mean_y_given_t(0);
}

EffectEstimate sample_ape(const ObservationalDataset& data) {
    double sum[2] = {0.0, 0.0};
    std::size_t cnt[2] = {0, 0};
    for (const auto& r : data.rows()) {
        sum[r.t] += r.y;
        ++cnt[r.t];
    }
    if (cnt[0] == 0 || cnt[1] == 0) {
        throw DegenerateTreatment("sample APE needs at least one treated and one control row");
    }
    EffectEstimate est;
    est.value = sum[1] / static_cast<double>(cnt[1]) - sum[0] / static_cast<double>(cnt[0]);
    est.estimator = "ape";
    est.n_treated = cnt[1];
    est.n_control = cnt[0];
    return est;
}

}  // namespace causalbound
