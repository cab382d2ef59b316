#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace causalbound {

// A sample of (W, T, Y) units drawn from the source distribution.
//
// Covariates are binary vectors of fixed length d, packed into the low d
// bits of `w` (bit j = w_j). Treatment is 0/1, outcome is any finite real.
// Instances are immutable after construction; every operation on them is a
// pure function, so sharing across threads needs no synchronization.
class ObservationalDataset {
public:
    struct Row {
        std::uint32_t w = 0;
        int t = 0;
        double y = 0.0;
    };

    ObservationalDataset(int covariate_dim, std::vector<Row> rows);

    int covariate_dim() const { return d_; }
    std::size_t size() const { return rows_.size(); }
    const Row& row(std::size_t i) const { return rows_[i]; }
    const std::vector<Row>& rows() const { return rows_; }

    std::size_t count_treated() const;
    std::size_t count_control() const;

    static bool w_bit(std::uint32_t w, int j) { return (w >> j) & 1u; }

    // CSV format: header `w_0,...,w_{d-1},t,y`, one unit per line.
    // d = 0 is allowed (header is just `t,y`).
    static ObservationalDataset from_csv(std::istream& in);
    static ObservationalDataset from_csv_file(const std::string& path);
    void to_csv(std::ostream& out) const;
    void to_csv_file(const std::string& path) const;

private:
    int d_;
    std::vector<Row> rows_;
};

// Shortest decimal string that parses back to exactly the same double.
// Used by every CSV/JSON writer so outputs are byte-stable.
std::string format_double(double v);

}  // namespace causalbound
