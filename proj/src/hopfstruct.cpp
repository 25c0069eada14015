#include "hopf/hopfstruct.hpp"

#include <array>

namespace hopf::structure {

bool DegreeDecomposition::invariants_hold() const {
    const std::size_t n = primitives.ambient_dim();
    const auto dim_sum = [](std::initializer_list<const Subspace*> parts) {
        std::size_t d = 0;
        for (auto* p : parts) d += p->dim();
        return d;
    };
    const std::array<Subspace, 2> core_m{core, m};
    const std::array<Subspace, 2> core_h{core, h};
    const std::array<Subspace, 4> all{core, m, h, w};
    return core == la::span_ops(primitives, decomposables).intersection &&
           la::sum_of(core_m) == decomposables && dim_sum({&core, &m}) == decomposables.dim() &&
           la::sum_of(core_h) == primitives && dim_sum({&core, &h}) == primitives.dim() &&
           la::sum_of(all) == Subspace::full(n) && dim_sum({&core, &m, &h, &w}) == n && w.dim() == core.dim();
}

Analyzer::Analyzer(const nck::Algebra& algebra) : algebra_(algebra) {}

template <class T, class F>
const T& Analyzer::cached(std::map<int, T>& cache, int n, F&& compute) const {
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    T value = compute();
    std::lock_guard lock(mutex_);
    return cache.try_emplace(n, std::move(value)).first->second;
}

const Subspace& Analyzer::primitives(int n) const {
    if (n < 1) throw DomainError("primitives: degree must be >= 1");
    return cached(primitives_, n, [&] { return la::kernel_basis(algebra_.reduced_coproduct_matrix(n)); });
}

const Subspace& Analyzer::decomposables(int n) const {
    if (n < 1) throw DomainError("decomposables: degree must be >= 1");
    return cached(decomposables_, n, [&] {
        const auto& target = algebra_.basis(n);
        la::Matrix rows(0, target.dim());
        std::vector<Rational> e(target.dim());
        for (int i = 1; i < n; ++i) {
            const auto& left = algebra_.basis(i);
            const auto& right = algebra_.basis(n - i);
            for (const auto& a : left.forests)
                for (const auto& b : right.forests) {
                    std::fill(e.begin(), e.end(), Rational(0));
                    e[algebra_.index_of(nck::product(a, b))] = 1;
                    rows.append_row(e);
                }
        }
        return Subspace::span(rows);
    });
}

Subspace Analyzer::multi_tree_span(int n) const {
    const auto& b = algebra_.basis(n);
    la::Matrix rows(0, b.dim());
    std::vector<Rational> e(b.dim());
    for (std::size_t i = 0; i < b.dim(); ++i) {
        if (b.is_tree[i]) continue;
        std::fill(e.begin(), e.end(), Rational(0));
        e[i] = 1;
        rows.append_row(e);
    }
    return Subspace::span(rows);
}

const Subspace& Analyzer::bracket_space(int n) const {
    if (n < 2) throw DomainError("bracket_space: degree must be >= 2");
    return cached(brackets_, n, [&] {
        la::Matrix rows(0, algebra_.dim(n));
        for (int i = 1; 2 * i <= n; ++i) {
            const int j = n - i;
            const auto& gi = primitives(i);
            const auto& gj = primitives(j);
            for (std::size_t a = 0; a < gi.dim(); ++a)
                for (std::size_t b = 0; b < gj.dim(); ++b) {
                    const nck::GradedVector x{i, gi.basis().row_vector(a)};
                    const nck::GradedVector y{j, gj.basis().row_vector(b)};
                    auto xy = algebra_.product(x, y);
                    const auto yx = algebra_.product(y, x);
                    for (std::size_t k = 0; k < xy.coords.size(); ++k) xy.coords[k] -= yx.coords[k];
                    rows.append_row(xy.coords);
                }
        }
        return Subspace::span(rows);
    });
}

const DegreeDecomposition& Analyzer::decomposition(int n) const {
    if (n < 1) throw DomainError("decomposition: degree must be >= 1");
    return cached(decompositions_, n, [&] {
        DegreeDecomposition d;
        d.degree = n;
        d.primitives = primitives(n);
        d.decomposables = decomposables(n);
        const auto ops = la::span_ops(d.primitives, d.decomposables);
        d.core = ops.intersection;
        d.m = la::complement(d.core, d.decomposables);
        d.h = la::complement(d.core, d.primitives);
        d.w = la::complement(ops.sum, la::Matrix::identity(algebra_.dim(n)));
        return d;
    });
}

DimensionSplitReport Analyzer::check_dimension_split(int n) const {
    DimensionSplitReport r;
    r.degree = n;
    r.dim_h = algebra_.dim(n);
    r.dim_primitives = primitives(n).dim();
    r.dim_decomposables = decomposables(n).dim();
    r.pass = r.dim_primitives + r.dim_decomposables == r.dim_h;
    return r;
}

BracketReport Analyzer::check_brackets(int n) const {
    BracketReport r;
    r.degree = n;
    const auto& brackets = bracket_space(n);
    const auto& core = decomposition(n).core;
    r.dim_brackets = brackets.dim();
    r.dim_core = core.dim();
    r.pass = brackets == core;
    return r;
}

}  // namespace hopf::structure
