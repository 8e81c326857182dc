#pragma once

#include <cstddef>
#include <vector>

namespace kirch {

// plain dense row-major matrix
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0.0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    double* data() { return a_.data(); }
    const double* data() const { return a_.data(); }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> a_;
};

// dense symmetric matrix; set() mirrors so a_ij == a_ji exactly
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {}

    int order() const { return n_; }

    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    void set(int i, int j, double v) {
        a_[static_cast<size_t>(i) * n_ + j] = v;
        a_[static_cast<size_t>(j) * n_ + i] = v;
    }

    double* data() { return a_.data(); }
    const double* data() const { return a_.data(); }

private:
    int n_ = 0;
    std::vector<double> a_;
};

} // namespace kirch
