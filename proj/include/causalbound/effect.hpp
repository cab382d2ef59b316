#pragma once

#include <optional>
#include <string>

#include "causalbound/dataset.hpp"
#include "causalbound/discrete_joint.hpp"

namespace causalbound {

// Result of a treatment-effect estimator on a dataset.
struct EffectEstimate {
    double value = 0.0;
    std::string estimator;
    std::size_t n_treated = 0;
    std::size_t n_control = 0;
    std::optional<double> clip;

    std::string to_json() const;
};

// E[Y | T=1] - E[Y | T=0] computed exactly over a finite joint.
double population_ape(const DiscreteJoint& dist);

// Difference of arm means over the sample.
EffectEstimate sample_ape(const ObservationalDataset& data);

}  // namespace causalbound
