#include "x33/ratmat.hpp"

#include <stdexcept>

namespace x33 {

RatMat::RatMat(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    a_.assign(static_cast<size_t>(rows) * cols, Rat(0));
}

RatMat RatMat::transposed() const {
    RatMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMat RatMat::rref(std::vector<int>* pivot_cols) const {
    RatMat m(*this);
    if (pivot_cols) pivot_cols->clear();
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int piv = -1;
        for (int i = row; i < rows_; ++i) {
            if (m.at(i, col) != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(row, j));
        Rat inv = Rat(1) / m.at(row, col);
        for (int j = col; j < cols_; ++j) m.at(row, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (int j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++row;
    }
    return m;
}

int RatMat::rank() const {
    std::vector<int> piv;
    rref(&piv);
    return static_cast<int>(piv.size());
}

std::vector<std::vector<Rat>> RatMat::kernel_basis() const {
    std::vector<int> piv;
    RatMat r = rref(&piv);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(cols_, Rat(0));
        v[free] = 1;
        for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r.at(static_cast<int>(k), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rat>> RatMat::solve(const std::vector<Rat>& b) const {
    if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("rhs size mismatch");
    RatMat aug(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    std::vector<int> piv;
    RatMat r = aug.rref(&piv);
    for (int c : piv)
        if (c == cols_) return std::nullopt;  // pivot in the rhs column: 0 = 1
    std::vector<Rat> x(cols_, Rat(0));
    for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = r.at(static_cast<int>(k), cols_);
    return x;
}

}  // namespace x33
