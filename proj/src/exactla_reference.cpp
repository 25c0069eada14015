#include "hopf/exactla.hpp"

#include <utility>

namespace hopf::la::reference {

Matrix rref(const Matrix& m, std::vector<std::size_t>* pivot_columns) {
    Matrix a = m;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t p = rank;
        while (p < rows && a(p, col) == 0) ++p;
        if (p == rows) continue;
        if (p != rank)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(rank, j));
        const Rational lead = a(rank, col);
        for (std::size_t j = col; j < cols; ++j) a(rank, j) /= lead;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank) continue;
            const Rational f = a(i, col);
            if (f == 0) continue;
            for (std::size_t j = col; j < cols; ++j) a(i, j) -= f * a(rank, j);
        }
        pivots.push_back(col);
        ++rank;
    }
    if (pivot_columns) *pivot_columns = pivots;
    return a.row_block(0, rank);
}

Rational determinant(const Matrix& m) {
    if (!m.is_square()) throw NotSquare("determinant of a non-square matrix");
    Matrix a = m;
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Rational f = a(i, k) / a(k, k);
            if (f == 0) continue;
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

}  // namespace hopf::la::reference
