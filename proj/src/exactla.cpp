#include "hopf/exactla.hpp"

#include <omp.h>

#include <algorithm>
#include <utility>

namespace hopf::la {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) throw DomainError("matrix entry count does not match its shape");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DomainError("ragged matrix literal");
        for (long v : r) data_.emplace_back(v);
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<std::vector<Rational>>& rows) {
    Matrix m(0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

std::vector<Rational> Matrix::row_vector(std::size_t i) const {
    auto r = row(i);
    return {r.begin(), r.end()};
}

void Matrix::append_row(std::span<const Rational> r) {
    if (r.size() != cols_) throw AmbientMismatch("appended row has the wrong length");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::row_block(std::size_t first, std::size_t count) const {
    if (first + count > rows_) throw DomainError("row block out of range");
    return Matrix(count, cols_,
                  std::vector<Rational>(data_.begin() + first * cols_, data_.begin() + (first + count) * cols_));
}

Matrix Matrix::stacked(const Matrix& below) const {
    if (rows_ == 0) return Matrix(below.rows_, below.cols_, below.data_);
    if (below.rows_ == 0) return *this;
    if (below.cols_ != cols_) throw AmbientMismatch("stacking matrices of different widths");
    Matrix s = *this;
    s.data_.insert(s.data_.end(), below.data_.begin(), below.data_.end());
    s.rows_ += below.rows_;
    return s;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw AmbientMismatch("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (b(k, j) != 0) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw AmbientMismatch("matrix sum shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw AmbientMismatch("matrix difference shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
}

namespace {

using IntRow = std::vector<Integer>;

// Clears denominators of one row; returns the multiplier used.
Integer integer_row(std::span<const Rational> src, IntRow& dst) {
    Integer l = 1;
    for (const auto& q : src) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    dst.resize(src.size());
    for (std::size_t j = 0; j < src.size(); ++j) dst[j] = src[j].get_num() * (l / src[j].get_den());
    return l;
}

void make_primitive(IntRow& r, std::size_t from) {
    Integer g = 0;
    for (std::size_t j = from; j < r.size(); ++j) {
        if (r[j] == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r[j].get_mpz_t());
        if (g == 1) return;
    }
    if (g <= 1) return;
    for (std::size_t j = from; j < r.size(); ++j)
        if (r[j] != 0) mpz_divexact(r[j].get_mpz_t(), r[j].get_mpz_t(), g.get_mpz_t());
}

}  // namespace

Matrix rref(const Matrix& m, std::vector<std::size_t>* pivot_columns) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<IntRow> a(rows);
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < rows; ++i) {
        integer_row(m.row(i), a[i]);
        make_primitive(a[i], 0);
    }

    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t p = rank;
        while (p < rows && a[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        const IntRow& pivot_row = a[rank];
        const Integer pivot = pivot_row[col];

        // Every other row is updated independently: row <- pivot*row - f*pivot_row.
#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            IntRow& r = a[i];
            const Integer f = r[col];
            for (std::size_t j = 0; j < cols; ++j) {
                if (pivot_row[j] == 0) {
                    if (r[j] != 0) r[j] *= pivot;
                } else {
                    r[j] = pivot * r[j] - f * pivot_row[j];
                }
            }
            make_primitive(r, 0);
        }
        pivots.push_back(col);
        ++rank;
    }

    Matrix out(rank, cols);
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < rank; ++i) {
        const Integer& pivot = a[i][pivots[i]];
        for (std::size_t j = 0; j < cols; ++j) {
            if (a[i][j] == 0) continue;
            Rational q(a[i][j], pivot);
            q.canonicalize();
            out(i, j) = q;
        }
    }
    if (pivot_columns) *pivot_columns = std::move(pivots);
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rows(); }

Rational determinant(const Matrix& m) {
    if (!m.is_square()) throw NotSquare("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    std::vector<IntRow> a(n);
    Integer scale = 1;
    for (std::size_t i = 0; i < n; ++i) scale *= integer_row(m.row(i), a[i]);

    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        const IntRow& pk = a[k];
#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = k + 1; i < n; ++i) {
            IntRow& r = a[i];
            for (std::size_t j = k + 1; j < n; ++j) {
                r[j] = r[j] * pk[k] - r[k] * pk[j];
                mpz_divexact(r[j].get_mpz_t(), r[j].get_mpz_t(), prev.get_mpz_t());
            }
            r[k] = 0;
        }
        prev = pk[k];
    }
    Rational det(Integer(a[n - 1][n - 1] * sign), scale);
    det.canonicalize();
    return det;
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw NotSquare("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<std::size_t> pivots;
    const Matrix r = rref(aug, &pivots);
    if (r.rows() < n || pivots[n - 1] >= n) throw Singular("matrix is singular");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
    return inv;
}

Matrix coordinates(const Matrix& targets, const Matrix& basis) {
    if (targets.cols() != basis.cols()) throw AmbientMismatch("coordinates: ambient mismatch");
    const std::size_t k = basis.rows();
    const std::size_t t = targets.rows();
    const std::size_t d = basis.cols();
    // Solve basis^T * X^T = targets^T.
    Matrix aug(d, k + t);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t j = 0; j < k; ++j) aug(r, j) = basis(j, r);
        for (std::size_t j = 0; j < t; ++j) aug(r, k + j) = targets(j, r);
    }
    std::vector<std::size_t> pivots;
    const Matrix red = rref(aug, &pivots);
    if (pivots.size() < k || (k > 0 && pivots[k - 1] != k - 1))
        throw DomainError("coordinates: basis rows are dependent");
    if (pivots.size() > k) throw DomainError("coordinates: target is outside the row space");
    Matrix x(t, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < t; ++j) x(j, i) = red(i, k + j);
    return x;
}

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::span(const Matrix& rows) {
    Subspace s(rows.cols());
    s.basis_ = rref(rows);
    return s;
}

Subspace Subspace::from_independent_rows(const Matrix& rows) {
    if (rank(rows) != rows.rows()) throw DomainError("basis rows are linearly dependent");
    Subspace s(rows.cols());
    s.basis_ = rows;
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    Subspace s(ambient_dim);
    s.basis_ = Matrix::identity(ambient_dim);
    return s;
}

bool Subspace::contains(std::span<const Rational> v) const {
    if (v.size() != ambient_) throw AmbientMismatch("vector length differs from ambient dimension");
    EchelonBasis eb(ambient_);
    for (std::size_t i = 0; i < dim(); ++i) eb.insert(basis_.row(i));
    return eb.contains(v);
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw AmbientMismatch("subspaces live in different ambient spaces");
    EchelonBasis eb(ambient_);
    for (std::size_t i = 0; i < dim(); ++i) eb.insert(basis_.row(i));
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!eb.contains(other.basis_.row(i))) return false;
    return true;
}

bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.dim() == b.dim() && a.canonical().basis_ == b.canonical().basis_;
}

Subspace kernel_basis(const Matrix& m) {
    std::vector<std::size_t> pivots;
    const Matrix r = rref(m, &pivots);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;

    Matrix k(0, n);
    std::vector<Rational> v(n);
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::fill(v.begin(), v.end(), Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
        k.append_row(v);
    }
    return Subspace::span(k);
}

SpanOps span_ops(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch("span_ops: ambient dimensions differ");
    const std::size_t n = a.ambient_dim();
    const std::size_t ka = a.dim();
    const std::size_t kb = b.dim();

    SpanOps out{Subspace::span(a.basis().stacked(b.basis())), Subspace(n), Subspace(n)};

    // alpha * A = beta * B  <=>  [A^T | -B^T] (alpha, beta)^T = 0
    Matrix system(n, ka + kb);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i < ka; ++i) system(r, i) = a.basis()(i, r);
        for (std::size_t i = 0; i < kb; ++i) system(r, ka + i) = -b.basis()(i, r);
    }
    const Subspace relations = kernel_basis(system);
    Matrix meet(relations.dim(), n);
    for (std::size_t k = 0; k < relations.dim(); ++k)
        for (std::size_t i = 0; i < ka; ++i) {
            const Rational& alpha = relations.basis()(k, i);
            if (alpha == 0) continue;
            for (std::size_t j = 0; j < n; ++j) meet(k, j) += alpha * a.basis()(i, j);
        }
    out.intersection = Subspace::span(meet);
    out.complement_of_a_in_sum = complement(a, out.sum);
    return out;
}

Subspace complement(const Subspace& sub, const Matrix& candidates) {
    if (candidates.cols() != sub.ambient_dim()) throw AmbientMismatch("complement: ambient mismatch");
    EchelonBasis eb(sub.ambient_dim());
    for (std::size_t i = 0; i < sub.dim(); ++i) eb.insert(sub.basis().row(i));
    Matrix chosen(0, sub.ambient_dim());
    for (std::size_t i = 0; i < candidates.rows(); ++i)
        if (eb.insert(candidates.row(i))) chosen.append_row(candidates.row(i));
    return Subspace::span(chosen);
}

Subspace complement(const Subspace& sub, const Subspace& within) {
    if (!within.contains(sub)) throw DomainError("complement: subspace is not contained in the target");
    return complement(sub, within.canonical().basis());
}

Subspace sum_of(std::span<const Subspace> parts) {
    if (parts.empty()) throw DomainError("sum_of: no subspaces");
    Matrix all(0, parts.front().ambient_dim());
    for (const auto& p : parts) {
        if (p.ambient_dim() != all.cols()) throw AmbientMismatch("sum_of: ambient dimensions differ");
        all = all.stacked(p.basis());
    }
    return Subspace::span(all);
}

GramDiagnosis gram_diagnose(const Matrix& g) {
    if (!g.is_square()) throw NotSquare("gram matrix must be square");
    GramDiagnosis d;
    d.symmetric = (g == g.transpose());
    d.det = determinant(g);
    d.nondegenerate = d.det != 0;
    return d;
}

EchelonBasis::EchelonBasis(std::size_t ambient_dim) : ambient_(ambient_dim) {}

std::vector<Rational> EchelonBasis::reduce(std::span<const Rational> v) const {
    if (v.size() != ambient_) throw AmbientMismatch("vector length differs from ambient dimension");
    std::vector<Rational> r(v.begin(), v.end());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational f = r[pivots_[i]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (rows_[i][j] != 0) r[j] -= f * rows_[i][j];
    }
    return r;
}

bool EchelonBasis::contains(std::span<const Rational> v) const {
    const auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Rational& q) { return q == 0; });
}

bool EchelonBasis::insert(std::span<const Rational> v) {
    auto r = reduce(v);
    const auto it = std::find_if(r.begin(), r.end(), [](const Rational& q) { return q != 0; });
    if (it == r.end()) return false;
    const std::size_t p = static_cast<std::size_t>(it - r.begin());
    const Rational lead = r[p];
    for (auto& q : r) q /= lead;
    for (auto& row : rows_) {
        const Rational f = row[p];
        if (f == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (r[j] != 0) row[j] -= f * r[j];
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

}  // namespace hopf::la
