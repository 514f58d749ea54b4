#include "legcard/linalg.hpp"

namespace legcard {

FqMatrix FqMatrix::select(const std::vector<int>& rows, const std::vector<int>& cols) const {
    FqMatrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
    return out;
}

std::vector<FqElem> FqMatrix::apply(const FiniteField& field, const std::vector<FqElem>& v) const {
    std::vector<FqElem> out(rows_, field.zero());
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (!field.is_zero(at(r, c)) && !field.is_zero(v[c]))
                out[r] = field.add(out[r], field.mul(at(r, c), v[c]));
    return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(const FiniteField& field, FqMatrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int r = row; r < m.rows(); ++r)
            if (!field.is_zero(m.at(r, col))) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(piv, c), m.at(row, c));
        FqElem inv = field.inv(m.at(row, col));
        for (int c = 0; c < m.cols(); ++c) m.at(row, c) = field.mul(m.at(row, c), inv);
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || field.is_zero(m.at(r, col))) continue;
            FqElem f = m.at(r, col);
            for (int c = 0; c < m.cols(); ++c) m.at(r, c) = field.sub(m.at(r, c), field.mul(f, m.at(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int rank(const FiniteField& field, FqMatrix m) { return static_cast<int>(rref(field, m).size()); }

std::vector<std::vector<FqElem>> kernel_basis(const FiniteField& field, FqMatrix m) {
    auto pivots = rref(field, m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<FqElem>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<FqElem> v(m.cols(), field.zero());
        v[free] = field.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = field.neg(m.at(static_cast<int>(r), free));
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace legcard
