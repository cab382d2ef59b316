#include "causalbound/discrete_joint.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "causalbound/dataset.hpp"
#include "causalbound/errors.hpp"

namespace causalbound {

namespace {

bool cell_key_less(const JointCell& a, const JointCell& b) {
    if (a.w != b.w) return a.w < b.w;
    if (a.t != b.t) return a.t < b.t;
    return a.y < b.y;
}

// Sort, merge duplicates, drop zero-mass cells, validate basics.
std::vector<JointCell> canonicalize(int d, std::vector<JointCell> cells) {
    if (d < 0 || d > 31) {
        throw DataError("covariate dimension must be in [0, 31]");
    }
    const std::uint32_t limit = (d == 0) ? 1u : (1u << d);
    for (const JointCell& c : cells) {
        if (c.t != 0 && c.t != 1) throw DataError("joint cell: t must be 0 or 1");
        if (c.w >= limit) throw DataError("joint cell: covariate bits exceed dimension");
        if (!std::isfinite(c.y)) throw DataError("joint cell: y is not finite");
        if (!std::isfinite(c.p) || c.p < 0.0) {
            throw InvalidRepresentation("joint cell: mass must be finite and nonnegative");
        }
    }
    std::sort(cells.begin(), cells.end(), cell_key_less);
    std::vector<JointCell> merged;
    for (const JointCell& c : cells) {
        if (!merged.empty() && merged.back().w == c.w && merged.back().t == c.t &&
            merged.back().y == c.y) {
            merged.back().p += c.p;
        } else {
            merged.push_back(c);
        }
    }
    std::erase_if(merged, [](const JointCell& c) { return c.p == 0.0; });
    return merged;
}

}  // namespace

DiscreteJoint::DiscreteJoint(int covariate_dim, std::vector<JointCell> cells) {
    d_ = covariate_dim;
    cells_ = canonicalize(covariate_dim, std::move(cells));
    double total = 0.0;
    for (const JointCell& c : cells_) total += c.p;
    if (std::abs(total - 1.0) > kMassTolerance) {
        std::ostringstream msg;
        msg << "joint masses sum to " << total << ", expected 1 within " << kMassTolerance;
        throw InvalidRepresentation(msg.str());
    }
    build_caches();
}

DiscreteJoint DiscreteJoint::from_unnormalized(int covariate_dim, std::vector<JointCell> cells) {
    DiscreteJoint j;
    j.d_ = covariate_dim;
    j.cells_ = canonicalize(covariate_dim, std::move(cells));
    double total = 0.0;
    for (const JointCell& c : j.cells_) total += c.p;
    if (!(total > 0.0)) {
        throw InvalidRepresentation("cannot normalize a joint with zero total mass");
    }
    for (JointCell& c : j.cells_) c.p /= total;
    j.build_caches();
    return j;
}

void DiscreteJoint::build_caches() {
    w_mass_.clear();
    wt_.clear();
    t_mass_[0] = t_mass_[1] = 0.0;
    t_ysum_[0] = t_ysum_[1] = 0.0;
    for (const JointCell& c : cells_) {
        w_mass_[c.w] += c.p;
        t_mass_[c.t] += c.p;
        t_ysum_[c.t] += c.y * c.p;
        auto& wt = wt_[{c.w, c.t}];
        wt.first += c.p;
        wt.second += c.y * c.p;
    }
}

double DiscreteJoint::mass_w(std::uint32_t w) const {
    auto it = w_mass_.find(w);
    return it == w_mass_.end() ? 0.0 : it->second;
}

double DiscreteJoint::mass_t(int t) const {
    return (t == 0 || t == 1) ? t_mass_[t] : 0.0;
}

double DiscreteJoint::mass_wt(std::uint32_t w, int t) const {
    auto it = wt_.find({w, t});
    return it == wt_.end() ? 0.0 : it->second.first;
}

double DiscreteJoint::cond_w_given_t(std::uint32_t w, int t) const {
    const double mt = mass_t(t);
    if (!(mt > 0.0)) {
        throw DegenerateTreatment("arm T=" + std::to_string(t) + " has zero mass");
    }
    return mass_wt(w, t) / mt;
}

double DiscreteJoint::propensity(std::uint32_t w) const {
    const double mw = mass_w(w);
    if (!(mw > 0.0)) {
        throw SupportMismatch("covariate value has zero mass");
    }
    return mass_wt(w, 1) / mw;
}

double DiscreteJoint::mean_y() const {
    return t_ysum_[0] + t_ysum_[1];
}

double DiscreteJoint::mean_y_given_t(int t) const {
    const double mt = mass_t(t);
    if (!(mt > 0.0)) {
        throw DegenerateTreatment("arm T=" + std::to_string(t) + " has zero mass");
    }
    return t_ysum_[t] / mt;
}

double DiscreteJoint::mean_y_given_wt(std::uint32_t w, int t) const {
    auto it = wt_.find({w, t});
    if (it == wt_.end() || !(it->second.first > 0.0)) {
        throw SupportMismatch("cell (w, T=" + std::to_string(t) + ") has zero mass");
    }
    return it->second.second / it->second.first;
}

std::vector<std::uint32_t> DiscreteJoint::w_values() const {
    std::vector<std::uint32_t> out;
    out.reserve(w_mass_.size());
    for (const auto& [w, m] : w_mass_) {
        if (m > 0.0) out.push_back(w);
    }
    return out;
}

bool DiscreteJoint::identical_cells(const DiscreteJoint& other, double tol) const {
    if (d_ != other.d_ || cells_.size() != other.cells_.size()) return false;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        const JointCell& a = cells_[i];
        const JointCell& b = other.cells_[i];
        if (a.w != b.w || a.t != b.t || a.y != b.y) return false;
        if (std::abs(a.p - b.p) > tol) return false;
    }
    return true;
}

std::string DiscreteJoint::to_json() const {
    nlohmann::json cells = nlohmann::json::array();
    for (const JointCell& c : cells_) {
        nlohmann::json wbits = nlohmann::json::array();
        for (int j = 0; j < d_; ++j) wbits.push_back(ObservationalDataset::w_bit(c.w, j) ? 1 : 0);
        cells.push_back({{"w", wbits}, {"t", c.t}, {"y", c.y}, {"p", c.p}});
    }
    nlohmann::json out{{"d", d_}, {"cells", cells}};
    return out.dump(2);
}

DiscreteJoint DiscreteJoint::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DataError(std::string("joint JSON parse error: ") + e.what());
    }
    if (!j.contains("cells") || !j["cells"].is_array()) {
        throw DataError("joint JSON: missing `cells` array");
    }
    int d = j.value("d", -1);
    std::vector<JointCell> cells;
    for (const auto& jc : j["cells"]) {
        JointCell c;
        if (!jc.contains("w") || !jc["w"].is_array()) {
            throw DataError("joint JSON: cell missing `w` array");
        }
        const auto& wbits = jc["w"];
        if (d < 0) d = static_cast<int>(wbits.size());
        if (static_cast<int>(wbits.size()) != d) {
            throw DataError("joint JSON: inconsistent covariate dimension across cells");
        }
        for (int b = 0; b < d; ++b) {
            const int v = wbits[b].get<int>();
            if (v != 0 && v != 1) throw DataError("joint JSON: w bits must be 0 or 1");
            if (v) c.w |= (1u << b);
        }
        c.t = jc.at("t").get<int>();
        c.y = jc.at("y").get<double>();
        c.p = jc.at("p").get<double>();
        cells.push_back(c);
    }
    if (d < 0) throw DataError("joint JSON: empty cell list and no `d` field");
    return DiscreteJoint(d, std::move(cells));
}

DiscreteJoint DiscreteJoint::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open joint file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

void DiscreteJoint::to_json_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write joint file: " + path);
    out << to_json() << "\n";
}

}  // namespace causalbound
