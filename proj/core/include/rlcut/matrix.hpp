#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace rlcut {

/// Dense row-major matrix of doubles. Small and dumb on purpose; every
/// matrix in this project is at most |V| x max(feature_dim, hidden_dim).
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(int r, int c, double fill = 0.0) : rows(r), cols(c), data(static_cast<size_t>(r) * c, fill) {}

    double& at(int r, int c) {
        assert(r >= 0 && r < rows && c >= 0 && c < cols);
        return data[static_cast<size_t>(r) * cols + c];
    }
    double at(int r, int c) const {
        assert(r >= 0 && r < rows && c >= 0 && c < cols);
        return data[static_cast<size_t>(r) * cols + c];
    }

    const double* row(int r) const { return data.data() + static_cast<size_t>(r) * cols; }
    double* row(int r) { return data.data() + static_cast<size_t>(r) * cols; }

    void fill(double v) { std::fill(data.begin(), data.end(), v); }
};

}  // namespace rlcut
