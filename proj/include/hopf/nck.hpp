#pragma once

// The noncommutative Connes-Kreimer Hopf algebra on planar rooted trees
// decorated by a graded set. The basis of degree n consists of the planar
// forests whose decoration degrees sum to n; the product is concatenation and
// the coproduct is given by admissible cuts.

#include "hopf/exactla.hpp"
#include "hopf/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hopf::nck {

struct Decoration {
    std::string label;
    int degree = 1;
};

/// Graded set of decorations. Labels are distinct, made of [A-Za-z0-9_],
/// and every degree is at least 1 (so that H_0 is the ground field).
class DecorationSet {
public:
    explicit DecorationSet(std::vector<Decoration> entries);
    /// One label "a" of degree 1.
    static DecorationSet single();

    std::size_t size() const { return entries_.size(); }
    const Decoration& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<Decoration>& entries() const { return entries_; }
    std::optional<std::size_t> find(std::string_view label) const;

private:
    std::vector<Decoration> entries_;
};

struct Tree {
    std::uint32_t label = 0;  // index into the DecorationSet
    std::vector<Tree> children;

    friend bool operator==(const Tree& a, const Tree& b);
    friend std::strong_ordering operator<=>(const Tree& a, const Tree& b);
};

/// Ordered sequence of trees; the empty forest is the unit 1.
struct Forest {
    std::vector<Tree> trees;

    bool is_unit() const { return trees.empty(); }
    friend bool operator==(const Forest& a, const Forest& b) = default;
    friend std::strong_ordering operator<=>(const Forest& a, const Forest& b);
};

Tree leaf(std::uint32_t label);
Forest single(Tree t);

int degree(const Tree& t, const DecorationSet& d);
int degree(const Forest& f, const DecorationSet& d);

/// label[child child ...]; a leaf is just its label. Forests join trees with
/// single spaces; the unit is the empty string.
std::string serialize(const Tree& t, const DecorationSet& d);
std::string serialize(const Forest& f, const DecorationSet& d);
/// Inverse of serialize; also accepts "1" for the unit. Throws ParseError.
Forest parse_forest(std::string_view text, const DecorationSet& d);

/// Concatenation product.
Forest product(const Forest& f, const Forest& g);

class DegreeZeroInput : public DomainError {
public:
    using DomainError::DomainError;
};

using SparseVector = std::map<Forest, Rational>;

/// Sparse element of H^{(x)k}; every key has exactly `order` forests.
class Tensor {
public:
    explicit Tensor(std::size_t order) : order_(order) {}

    std::size_t order() const { return order_; }
    const std::map<std::vector<Forest>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(std::vector<Forest> key, const Rational& coeff);
    Tensor& operator+=(const Tensor& other);
    Tensor& operator-=(const Tensor& other);
    Rational coefficient(const std::vector<Forest>& key) const;

    /// Componentwise product (a1 x ... x ak)(b1 x ... x bk) = a1b1 x ... x akbk.
    friend Tensor operator*(const Tensor& a, const Tensor& b);
    friend bool operator==(const Tensor&, const Tensor&) = default;

private:
    std::size_t order_;
    std::map<std::vector<Forest>, Rational> terms_;
};

/// Admissible cuts of a tree that keep the root: pairs (pruned branches,
/// trunk), including the empty cut (1, t). Branches are listed in
/// left-to-right depth-first order of their roots.
std::vector<std::pair<Forest, Tree>> rooted_cuts(const Tree& t);

/// Delta(t) = t (x) 1 + sum_c P^c(t) (x) R^c(t), extended multiplicatively.
Tensor coproduct(const Forest& f);
Tensor coproduct(const SparseVector& x);

/// Delta(x) - x (x) 1 - 1 (x) x. Throws DegreeZeroInput on the unit.
Tensor reduced_coproduct(const Forest& f);

enum class Association { Left, Right };

/// The k-fold iterate of the reduced coproduct, a tensor of order k + 1.
/// Left applies each new reduced coproduct to the first factor, Right to the
/// last one; coassociativity makes both agree. Throws DegreeZeroInput if x has
/// a component on the unit.
Tensor iterated_reduced(std::size_t k, const SparseVector& x, Association assoc = Association::Left);

/// Planar decorated forests of total degree n, ordered by serialized text.
std::vector<Forest> enumerate_forests(int n, const DecorationSet& d);

struct DegreeBasis {
    int degree = 0;
    std::vector<Forest> forests;
    std::vector<std::string> text;
    std::unordered_map<std::string, std::size_t> index;
    std::vector<bool> is_tree;

    std::size_t dim() const { return forests.size(); }
};

/// Dense element of H_n in the canonical basis.
struct GradedVector {
    int degree = 0;
    std::vector<Rational> coords;
};

/// Dense element of H_i (x) H_j, row-major in (left index, right index).
struct TensorVector {
    int left = 0;
    int right = 0;
    std::size_t right_dim = 0;
    std::vector<Rational> coords;

    const Rational& at(std::size_t a, std::size_t b) const { return coords[a * right_dim + b]; }
};

/// H_NCK over a decoration set, with lazily enumerated bases. The basis cache
/// is filled under a lock and never mutated afterwards, so const member
/// functions may be called from several threads.
class Algebra {
public:
    explicit Algebra(DecorationSet decorations = DecorationSet::single());

    const DecorationSet& decorations() const { return decorations_; }

    const DegreeBasis& basis(int n) const;
    std::size_t dim(int n) const { return basis(n).dim(); }
    std::size_t index_of(const Forest& f) const;
    int degree_of(const Forest& f) const { return degree(f, decorations_); }
    std::string text(const Forest& f) const { return serialize(f, decorations_); }

    GradedVector unit_vector(const Forest& f) const;
    GradedVector product(const GradedVector& x, const GradedVector& y) const;
    SparseVector to_sparse(const GradedVector& x) const;
    GradedVector to_dense(const SparseVector& x, int degree) const;

    /// Bidegree (i, deg f - i) component of Delta(f).
    TensorVector coproduct_block(const Forest& f, int i) const;

    /// Matrix of the reduced coproduct on H_n: one column per basis forest,
    /// rows indexed by (i, a, b) with 1 <= i <= n-1, a in H_i, b in H_{n-i}.
    /// Columns are filled in parallel.
    la::Matrix reduced_coproduct_matrix(int n) const;
    la::Matrix reduced_coproduct_matrix_serial(int n) const;

private:
    void fill_column(la::Matrix& m, std::size_t col, int n, const std::vector<std::size_t>& offsets,
                     const std::vector<const DegreeBasis*>& bases) const;
    std::vector<const DegreeBasis*> bases_up_to(int n) const;
    std::vector<std::size_t> block_offsets(int n) const;

    DecorationSet decorations_;
    mutable std::mutex cache_mutex_;
    mutable std::vector<std::unique_ptr<DegreeBasis>> cache_;
};

}  // namespace hopf::nck
