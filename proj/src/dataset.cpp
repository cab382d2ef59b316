#include "causalbound/dataset.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "causalbound/errors.hpp"

namespace causalbound {

ObservationalDataset::ObservationalDataset(int covariate_dim, std::vector<Row> rows)
    : d_(covariate_dim), rows_(std::move(rows)) {
    if (d_ < 0 || d_ > 31) {
        throw DataError("covariate dimension must be in [0, 31], got " + std::to_string(d_));
    }
    const std::uint32_t limit = (d_ == 0) ? 1u : (1u << d_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Row& r = rows_[i];
        if (r.t != 0 && r.t != 1) {
            throw DataError("row " + std::to_string(i) + ": t must be 0 or 1");
        }
        if (r.w >= limit) {
            throw DataError("row " + std::to_string(i) + ": covariate bits exceed dimension " +
                            std::to_string(d_));
        }
        if (!std::isfinite(r.y)) {
            throw DataError("row " + std::to_string(i) + ": y is not finite");
        }
    }
}

std::size_t ObservationalDataset::count_treated() const {
    std::size_t n = 0;
    for (const Row& r : rows_) n += static_cast<std::size_t>(r.t == 1);
    return n;
}

std::size_t ObservationalDataset::count_control() const {
    return rows_.size() - count_treated();
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

ObservationalDataset ObservationalDataset::from_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw DataError("dataset CSV is empty");
    }
    const std::vector<std::string> header = split_csv_line(line);
    if (header.size() < 2 || header[header.size() - 2] != "t" || header.back() != "y") {
        throw DataError("dataset CSV header must end with `t,y`");
    }
    const int d = static_cast<int>(header.size()) - 2;
    for (int j = 0; j < d; ++j) {
        if (header[j] != "w_" + std::to_string(j)) {
            throw DataError("dataset CSV header: expected column `w_" + std::to_string(j) +
                            "`, got `" + header[j] + "`");
        }
    }

    std::vector<Row> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() != header.size()) {
            throw DataError("line " + std::to_string(lineno) + ": expected " +
                            std::to_string(header.size()) + " fields, got " +
                            std::to_string(fields.size()));
        }
        Row r;
        for (int j = 0; j < d; ++j) {
            if (fields[j] == "1") {
                r.w |= (1u << j);
            } else if (fields[j] != "0") {
                throw DataError("line " + std::to_string(lineno) + ": w_" + std::to_string(j) +
                                " must be 0 or 1, got `" + fields[j] + "`");
            }
        }
        if (fields[d] == "1") {
            r.t = 1;
        } else if (fields[d] != "0") {
            throw DataError("line " + std::to_string(lineno) + ": t must be 0 or 1, got `" +
                            fields[d] + "`");
        }
        char* end = nullptr;
        r.y = std::strtod(fields[d + 1].c_str(), &end);
        if (end == fields[d + 1].c_str() || *end != '\0' || !std::isfinite(r.y)) {
            throw DataError("line " + std::to_string(lineno) + ": y must be a finite number, got `" +
                            fields[d + 1] + "`");
        }
        rows.push_back(r);
    }
    return ObservationalDataset(d, std::move(rows));
}

ObservationalDataset ObservationalDataset::from_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open dataset file: " + path);
    }
    return from_csv(in);
}

void ObservationalDataset::to_csv(std::ostream& out) const {
    for (int j = 0; j < d_; ++j) out << "w_" << j << ",";
    out << "t,y\n";
    for (const Row& r : rows_) {
        for (int j = 0; j < d_; ++j) out << (w_bit(r.w, j) ? "1," : "0,");
        out << r.t << "," << format_double(r.y) << "\n";
    }
}

void ObservationalDataset::to_csv_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) {
        throw DataError("cannot write dataset file: " + path);
    }
    to_csv(out);
}

std::string format_double(double v) {
    // Try increasing precision until the value round-trips.
    char buf[40];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

}  // namespace causalbound
