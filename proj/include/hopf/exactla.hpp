#pragma once

// Dense exact linear algebra over Q for the graded components of a Hopf
// algebra. Vectors are rows; a subspace is stored as a matrix of independent
// rows, canonically in reduced row-echelon form.

#include "hopf/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace hopf::la {

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    /// Row-major entries; entries.size() must equal rows * cols.
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(std::size_t cols, const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<Rational> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::vector<Rational> row_vector(std::size_t i) const;

    void append_row(std::span<const Rational> r);
    Matrix transpose() const;
    /// Rows [first, first + count).
    Matrix row_block(std::size_t first, std::size_t count) const;
    /// Rows of this matrix followed by the rows of `below`.
    Matrix stacked(const Matrix& below) const;

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    const std::vector<Rational>& entries() const { return data_; }

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

class AmbientMismatch : public DomainError {
public:
    using DomainError::DomainError;
};

class NotSquare : public DomainError {
public:
    using DomainError::DomainError;
};

class Singular : public DomainError {
public:
    using DomainError::DomainError;
};

/// Reduced row-echelon form with zero rows removed. Pivots are taken in the
/// leftmost available column, from the smallest eligible row index. Rows are
/// eliminated in parallel with fraction-free integer arithmetic; pivots are
/// normalized to 1 at the end.
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivot_columns = nullptr);

std::size_t rank(const Matrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination; throws NotSquare.
Rational determinant(const Matrix& m);

/// Throws Singular / NotSquare.
Matrix inverse(const Matrix& m);

/// Row-space coordinates: returns X with X * basis = targets. Every row of
/// `targets` must lie in the row space of `basis` (independent rows);
/// throws DomainError otherwise.
Matrix coordinates(const Matrix& targets, const Matrix& basis);

class Subspace {
public:
    /// The zero subspace of the given ambient dimension.
    explicit Subspace(std::size_t ambient_dim = 0);

    /// Span of arbitrary rows, stored canonically (RREF).
    static Subspace span(const Matrix& rows);
    /// Keeps the given rows as the basis; they must be independent.
    static Subspace from_independent_rows(const Matrix& rows);
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }

    Subspace canonical() const { return span(basis_); }
    bool contains(std::span<const Rational> v) const;
    bool contains(const Subspace& other) const;

    /// Equality of subspaces (not of chosen bases).
    friend bool operator==(const Subspace& a, const Subspace& b);

private:
    std::size_t ambient_;
    Matrix basis_;
};

/// { x : m * x^T = 0 }, canonical. rank(m) + dim = cols(m).
Subspace kernel_basis(const Matrix& m);

struct SpanOps {
    Subspace sum;
    Subspace intersection;
    Subspace complement_of_a_in_sum;
};

/// Throws AmbientMismatch.
SpanOps span_ops(const Subspace& a, const Subspace& b);

/// Complement of `sub` inside `within` (sub must be contained in within):
/// walks the candidate rows in order and keeps every one that enlarges the
/// span. The candidates default to the canonical basis of `within`.
Subspace complement(const Subspace& sub, const Subspace& within);
Subspace complement(const Subspace& sub, const Matrix& candidates);

/// Sum of several subspaces in one ambient space.
Subspace sum_of(std::span<const Subspace> parts);

struct GramDiagnosis {
    bool symmetric = false;
    bool nondegenerate = false;
    Rational det;
};

/// Throws NotSquare.
GramDiagnosis gram_diagnose(const Matrix& g);

/// Incrementally maintained fully reduced echelon basis; used to test
/// membership and to extend bases one vector at a time.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t ambient_dim);
    /// Reduces v against the basis; returns true and stores it if the
    /// remainder is nonzero.
    bool insert(std::span<const Rational> v);
    bool contains(std::span<const Rational> v) const;
    std::size_t dim() const { return rows_.size(); }

private:
    std::vector<Rational> reduce(std::span<const Rational> v) const;
    std::size_t ambient_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivots_;
};

namespace reference {

// Serial Gauss-Jordan over mpq, kept as the oracle for the parallel kernels.
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivot_columns = nullptr);
Rational determinant(const Matrix& m);

}  // namespace reference

}  // namespace hopf::la
