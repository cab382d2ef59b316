#include "causalbound/weight_function.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "causalbound/errors.hpp"

namespace causalbound {

WeightFunction WeightFunction::from_table(std::map<Key, double> table) {
    WeightFunction f;
    f.table_ = std::move(table);
    return f;
}

WeightFunction WeightFunction::constant(double k, const DiscreteJoint& support) {
    WeightFunction f;
    for (const JointCell& c : support.cells()) f.table_[{c.w, c.t}] = k;
    return f;
}

WeightFunction WeightFunction::constant(double k, const ObservationalDataset& support) {
    WeightFunction f;
    for (const auto& r : support.rows()) {
        f.table_[{r.w, 0}] = k;
        f.table_[{r.w, 1}] = k;
    }
    return f;
}

WeightFunction WeightFunction::ipw(const DiscreteJoint& q) {
    WeightFunction f;
    for (std::uint32_t w : q.w_values()) {
        for (int t : {0, 1}) {
            const double mwt = q.mass_wt(w, t);
            if (mwt > 0.0) {
                f.table_[{w, t}] = q.mass_w(w) / q.cond_w_given_t(w, t);
            }
        }
    }
    return f;
}

WeightFunction WeightFunction::ipw_from_data(const ObservationalDataset& data,
                                             std::optional<double> clip_rho) {
    if (clip_rho && !(*clip_rho > 0.0 && *clip_rho < 0.5)) {
        throw DataError("clipping threshold must lie in (0, 0.5)");
    }
    const std::size_t n = data.size();
    if (n == 0) throw EmptyInput("cannot build inverse-propensity weights from an empty dataset");

    std::map<std::uint32_t, std::pair<std::size_t, std::size_t>> counts;  // w -> (total, treated)
    std::size_t n_treated = 0;
    for (const auto& r : data.rows()) {
        auto& c = counts[r.w];
        ++c.first;
        c.second += static_cast<std::size_t>(r.t == 1);
        n_treated += static_cast<std::size_t>(r.t == 1);
    }
    const double q1 = static_cast<double>(n_treated) / static_cast<double>(n);

    WeightFunction f;
    for (const auto& [w, c] : counts) {
        double e = static_cast<double>(c.second) / static_cast<double>(c.first);
        if (clip_rho) {
            e = std::clamp(e, *clip_rho, 1.0 - *clip_rho);
        } else if (e <= 0.0 || e >= 1.0) {
            std::ostringstream msg;
            msg << "stratum w=" << w << " has empirical propensity " << e
                << "; clip or use another weighting";
            throw ExtremePropensity(msg.str());
        }
        f.table_[{w, 1}] = q1 / e;
        f.table_[{w, 0}] = (1.0 - q1) / (1.0 - e);
    }
    return f;
}

double WeightFunction::weight(std::uint32_t w, int t) const {
    auto it = table_.find({w, t});
    if (it == table_.end()) {
        throw MissingWeight("weight table has no entry for (w=" + std::to_string(w) +
                            ", t=" + std::to_string(t) + ")");
    }
    return it->second;
}

bool WeightFunction::contains(std::uint32_t w, int t) const {
    return table_.count({w, t}) > 0;
}

void WeightFunction::validate() const {
    for (const auto& [key, v] : table_) {
        if (!std::isfinite(v) || v < 0.0) {
            std::ostringstream msg;
            msg << "weight for (w=" << key.first << ", t=" << key.second << ") is " << v
                << "; weights must be finite and nonnegative";
            throw InvalidRepresentation(msg.str());
        }
    }
}

DiscreteJoint induce_representation(const DiscreteJoint& q, const WeightFunction& beta,
                                    bool renormalize) {
    beta.validate();
    std::vector<JointCell> cells;
    cells.reserve(q.cells().size());
    double total = 0.0;
    for (const JointCell& c : q.cells()) {
        if (!beta.contains(c.w, c.t)) {
            throw MissingWeight("source cell (w=" + std::to_string(c.w) +
                                ", t=" + std::to_string(c.t) + ") has no weight entry");
        }
        JointCell out = c;
        out.p = beta.weight(c.w, c.t) * c.p;
        total += out.p;
        cells.push_back(out);
    }
    if (renormalize) {
        return DiscreteJoint::from_unnormalized(q.covariate_dim(), std::move(cells));
    }
    if (std::abs(total - 1.0) > DiscreteJoint::kMassTolerance) {
        std::ostringstream msg;
        msg << "induced masses sum to " << total
            << "; not a valid weighting for this source (pass renormalize for estimated weights)";
        throw InvalidRepresentation(msg.str());
    }
    return DiscreteJoint(q.covariate_dim(), std::move(cells));
}

}  // namespace causalbound
