#include "causalbound/estimators.hpp"

#include <sstream>

#include "causalbound/errors.hpp"

namespace causalbound {

std::map<std::uint32_t, Stratum> build_strata(const ObservationalDataset& data) {
    std::map<std::uint32_t, Stratum> strata;
    for (const auto& r : data.rows()) {
        strata[r.w].y[r.t].push_back(r.y);
    }
    return strata;
}

double mean_in_order(const std::vector<double>& xs) {
    double sum = 0.0;
    for (double x : xs) sum += x;
    return sum / static_cast<double>(xs.size());
}

namespace {

void require_both_arms(const ObservationalDataset& data, const char* who) {
    const std::size_t nt = data.count_treated();
    if (nt == 0 || nt == data.size()) {
        throw DegenerateTreatment(std::string(who) +
                                  " needs at least one treated and one control row");
    }
}

}  // namespace

EffectEstimate ipw_estimate(const ObservationalDataset& data, const PropensityModel& prop) {
    require_both_arms(data, "ipw");
    double s_treated = 0.0;
    double s_control = 0.0;
    for (const auto& r : data.rows()) {
        const double e = prop.score(r.w);
        if (e <= 0.0 || e >= 1.0) {
            std::ostringstream msg;
            msg << "propensity " << e << " at w=" << r.w << " makes the inverse weight unbounded";
            throw ExtremePropensity(msg.str());
        }
        if (r.t == 1) {
            s_treated += r.y / e;
        } else {
            s_control += r.y / (1.0 - e);
        }
    }
    EffectEstimate est;
    est.value = (s_treated - s_control) / static_cast<double>(data.size());
    est.estimator = "ipw";
    est.n_treated = data.count_treated();
    est.n_control = data.count_control();
    est.clip = prop.clip();
    return est;
}

EffectEstimate clipped_ipw_estimate(const ObservationalDataset& data, const PropensityModel& prop,
                                    double rho) {
    if (!(rho > 0.0 && rho < 0.5)) {
        throw DataError("clipping threshold must lie in (0, 0.5)");
    }
    EffectEstimate est = ipw_estimate(data, prop.with_clip(rho));
    est.estimator = "clipped-ipw";
    est.clip = rho;
    return est;
}

EffectEstimate backdoor_estimate(const ObservationalDataset& data) {
    require_both_arms(data, "backdoor");
    const auto strata = build_strata(data);
    const double n = static_cast<double>(data.size());
    double value = 0.0;
    for (const auto& [w, s] : strata) {
        if (s.y[1].empty() || s.y[0].empty()) {
            std::ostringstream msg;
            msg << "stratum w=" << w << " has no " << (s.y[1].empty() ? "treated" : "control")
                << " rows";
            throw EmptyArmInStratum(msg.str());
        }
        const double share = static_cast<double>(s.y[0].size() + s.y[1].size()) / n;
        value += share * (mean_in_order(s.y[1]) - mean_in_order(s.y[0]));
    }
    EffectEstimate est;
    est.value = value;
    est.estimator = "backdoor";
    est.n_treated = data.count_treated();
    est.n_control = data.count_control();
    return est;
}

double backdoor_ace(const DiscreteJoint& joint) {
    double value = 0.0;
    for (std::uint32_t w : joint.w_values()) {
        if (!(joint.mass_wt(w, 1) > 0.0) || !(joint.mass_wt(w, 0) > 0.0)) {
            std::ostringstream msg;
            msg << "stratum w=" << w << " lacks positive mass in both arms";
            throw EmptyArmInStratum(msg.str());
        }
        value += joint.mass_w(w) * (joint.mean_y_given_wt(w, 1) - joint.mean_y_given_wt(w, 0));
    }
    return value;
}

double population_ipw(const DiscreteJoint& joint) {
    if (!(joint.mass_t(1) > 0.0) || !(joint.mass_t(0) > 0.0)) {
        throw DegenerateTreatment("population IPW needs positive mass in both arms");
    }
    double value = 0.0;
    for (const JointCell& c : joint.cells()) {
        const double e = joint.propensity(c.w);
        if (c.t == 1) {
            if (!(e > 0.0)) throw ExtremePropensity("zero propensity under a treated cell");
            value += c.p * c.y / e;
        } else {
            if (!(e < 1.0)) throw ExtremePropensity("unit propensity under a control cell");
            value -= c.p * c.y / (1.0 - e);
        }
    }
    return value;
}

}  // namespace causalbound
