#pragma once

#include <symtens/scalar.hpp>

#include <vector>

namespace symtens {

// Dense exact matrix, row-major.  Small sizes only; this backs rank
// certificates, trace-completion solves and span comparisons.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), v_(static_cast<size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& operator()(int i, int j) { return v_[static_cast<size_t>(i) * cols_ + j]; }
    const Scalar& operator()(int i, int j) const { return v_[static_cast<size_t>(i) * cols_ + j]; }

    void append_rows(const Mat& other);

private:
    int rows_, cols_;
    std::vector<Scalar> v_;
};

// Exact rank.  All-rational matrices go through fraction-free (Bareiss)
// elimination on a denominator-cleared integer copy; matrices with radical
// entries use exact field elimination instead.
int rank(const Mat& m);

// Solve A x = b exactly (A square, nonsingular).  Throws internal_error on a
// singular system, since every call site solves a provably regular system.
std::vector<Scalar> solve(const Mat& a, const std::vector<Scalar>& b);

// Basis of the kernel of A (columns = unknowns), as coefficient vectors.
std::vector<std::vector<Scalar>> kernel(const Mat& a);

// True when the row spans of A and B coincide (exact mutual-rank test).
bool same_row_span(const Mat& a, const Mat& b);

}  // namespace symtens
