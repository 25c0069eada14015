#pragma once

// Degree-by-degree structure of H_NCK: primitive elements g_n (kernel of the
// reduced coproduct), decomposables (H+^2)_n, their intersection, brackets of
// lower-degree primitives, and the splitting
//     H_n = (g n H+^2)_n + m_n + h_n + w_n
// with deterministic complements.

#include "hopf/exactla.hpp"
#include "hopf/nck.hpp"

#include <map>
#include <mutex>

namespace hopf::structure {

using la::Subspace;

struct DegreeDecomposition {
    int degree = 0;
    Subspace primitives;     // g_n
    Subspace decomposables;  // (H+^2)_n
    Subspace core;           // g_n n (H+^2)_n
    Subspace m;              // complement of core in decomposables
    Subspace h;              // complement of core in primitives
    Subspace w;              // complement of primitives + decomposables in H_n

    /// Direct-sum identities, plus dim w = dim core.
    bool invariants_hold() const;
};

struct DimensionSplitReport {
    int degree = 0;
    std::size_t dim_h = 0;  // dim H_n
    std::size_t dim_primitives = 0;
    std::size_t dim_decomposables = 0;
    bool pass = false;
};

struct BracketReport {
    int degree = 0;
    std::size_t dim_brackets = 0;
    std::size_t dim_core = 0;
    bool pass = false;  // [g,g]_n == (g n H+^2)_n as subspaces
};

/// Caches per-degree results; safe to query from several threads.
class Analyzer {
public:
    explicit Analyzer(const nck::Algebra& algebra);

    const nck::Algebra& algebra() const { return algebra_; }

    /// Kernel of the reduced coproduct on H_n (n >= 1).
    const Subspace& primitives(int n) const;
    /// Span of all products H_i H_{n-i}, 1 <= i <= n-1.
    const Subspace& decomposables(int n) const;
    /// Span of the basis forests with at least two trees.
    Subspace multi_tree_span(int n) const;
    /// Span of [x, y] = xy - yx over primitive basis vectors of degrees i + j = n.
    const Subspace& bracket_space(int n) const;

    const DegreeDecomposition& decomposition(int n) const;

    DimensionSplitReport check_dimension_split(int n) const;
    BracketReport check_brackets(int n) const;

private:
    template <class T, class F>
    const T& cached(std::map<int, T>& cache, int n, F&& compute) const;

    const nck::Algebra& algebra_;
    mutable std::mutex mutex_;
    mutable std::map<int, Subspace> primitives_;
    mutable std::map<int, Subspace> decomposables_;
    mutable std::map<int, Subspace> brackets_;
    mutable std::map<int, DegreeDecomposition> decompositions_;
};

}  // namespace hopf::structure
