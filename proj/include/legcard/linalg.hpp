#pragma once

#include <vector>

#include "legcard/finite_field.hpp"

namespace legcard {

/// Dense matrix over F_q, row-major.
class FqMatrix {
public:
    FqMatrix() = default;
    FqMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    FqElem& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    FqElem at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    /// Submatrix on the given row and column index lists.
    FqMatrix select(const std::vector<int>& rows, const std::vector<int>& cols) const;
    std::vector<FqElem> apply(const FiniteField& field, const std::vector<FqElem>& v) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<FqElem> data_;
};

int rank(const FiniteField& field, FqMatrix m);

/// Basis of the right kernel {v : M v = 0}.
std::vector<std::vector<FqElem>> kernel_basis(const FiniteField& field, FqMatrix m);

}  // namespace legcard
