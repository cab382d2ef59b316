#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace causalbound {

// One atom of a finite joint distribution over (W, T, Y).
struct JointCell {
    std::uint32_t w = 0;
    int t = 0;
    double y = 0.0;
    double p = 0.0;
};

// Exact finite joint distribution over (W, T, Y), used as the population
// object for oracle computations. Only positive-mass cells are stored;
// duplicate (w, t, y) cells are merged at construction. Marginal and
// conditional queries are exact sums over cells.
//
// Immutable after construction.
class DiscreteJoint {
public:
    // Strict: masses must be nonnegative and sum to 1 within 1e-12.
    DiscreteJoint(int covariate_dim, std::vector<JointCell> cells);

    // Tolerant: divides all masses by their sum (which must be positive).
    static DiscreteJoint from_unnormalized(int covariate_dim, std::vector<JointCell> cells);

    int covariate_dim() const { return d_; }
    const std::vector<JointCell>& cells() const { return cells_; }

    double mass_w(std::uint32_t w) const;
    double mass_t(int t) const;
    double mass_wt(std::uint32_t w, int t) const;

    // Pr(W = w | T = t); throws DegenerateTreatment when the arm has no mass.
    double cond_w_given_t(std::uint32_t w, int t) const;
    // Pr(T = 1 | W = w); throws SupportMismatch when w has no mass.
    double propensity(std::uint32_t w) const;

    double mean_y() const;
    // E[Y | T = t]; throws DegenerateTreatment when the arm has no mass.
    double mean_y_given_t(int t) const;
    // E[Y | T = t, W = w]; throws SupportMismatch when the cell has no mass.
    double mean_y_given_wt(std::uint32_t w, int t) const;

    // Distinct covariate values with positive mass, ascending.
    std::vector<std::uint32_t> w_values() const;

    bool identical_cells(const DiscreteJoint& other, double tol) const;

    // JSON: {"d":1,"cells":[{"w":[0],"t":0,"y":1.5,"p":0.0125}, ...]}
    std::string to_json() const;
    static DiscreteJoint from_json(const std::string& text);
    static DiscreteJoint from_json_file(const std::string& path);
    void to_json_file(const std::string& path) const;

    static constexpr double kMassTolerance = 1e-12;

private:
    DiscreteJoint() = default;
    void build_caches();

    int d_ = 0;
    std::vector<JointCell> cells_;
    std::map<std::uint32_t, double> w_mass_;
    double t_mass_[2] = {0.0, 0.0};
    double t_ysum_[2] = {0.0, 0.0};
    // (w, t) -> (mass, sum of y * mass)
    std::map<std::pair<std::uint32_t, int>, std::pair<double, double>> wt_;
};

}  // namespace causalbound
