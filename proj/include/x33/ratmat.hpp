#pragma once

#include <optional>
#include <vector>

#include "x33/rational.hpp"

namespace x33 {

// Dense matrix over Q with exact Gauss-Jordan elimination.
class RatMat {
public:
    RatMat(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    RatMat transposed() const;

    // Reduced row echelon form; pivot columns reported in order.
    RatMat rref(std::vector<int>* pivot_cols = nullptr) const;
    int rank() const;
    long nullity() const { return cols_ - rank(); }

    // Basis of { x : A x = 0 }.
    std::vector<std::vector<Rat>> kernel_basis() const;

    // One solution of A x = b, or nullopt if the system is infeasible.
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;

private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

}  // namespace x33
