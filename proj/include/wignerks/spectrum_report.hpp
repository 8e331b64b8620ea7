#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "wignerks/radial_grid.hpp"

namespace wignerks {

struct SpectrumRow {
    long level = 0;
    double numeric = 0.0;
    double analytic = 0.0;
    double abs_error = 0.0;
    double residual = 0.0;  // || A u - lambda W u || / || u ||
};

struct SpectrumReport {
    std::string kind;
    long ell = 0;
    RadialGrid grid;
    std::vector<SpectrumRow> rows;

    bool within(double tol) const {
        for (const auto& r : rows)
            if (!(r.abs_error <= tol)) return false;
        return true;
    }
    double max_error() const {
        double m = 0.0;
        for (const auto& r : rows) m = std::max(m, r.abs_error);
        return m;
    }
};

}  // namespace wignerks
