#include "hopf/pairing.hpp"

#include <map>

namespace hopf::pairing {

using la::Matrix;

DegenerateBaseForm::DegenerateBaseForm(int d)
    : DomainError("base form on h_" + std::to_string(d) + " is degenerate"), degree(d) {}

std::vector<Matrix> identity_base_forms(const structure::Analyzer& analyzer, int max_degree) {
    std::vector<Matrix> forms(static_cast<std::size_t>(max_degree) + 1);
    for (int n = 1; n <= max_degree; ++n)
        forms[static_cast<std::size_t>(n)] = Matrix::identity(analyzer.decomposition(n).h.dim());
    return forms;
}

namespace {

// Bidegree blocks of Delta(z), keyed by the degree of the left factor.
std::map<int, Matrix> coproduct_blocks(const nck::Algebra& alg, const nck::Forest& z) {
    const int n = alg.degree_of(z);
    std::map<int, Matrix> blocks;
    for (const auto delta = nck::coproduct(z); const auto& [key, c] : delta.terms()) {
        const int i = alg.degree_of(key[0]);
        auto it = blocks.find(i);
        if (it == blocks.end()) it = blocks.emplace(i, Matrix(alg.dim(i), alg.dim(n - i))).first;
        it->second(alg.index_of(key[0]), alg.index_of(key[1])) += c;
    }
    return blocks;
}

struct Factorization {
    std::vector<int> degrees;         // degree of each tree
    std::vector<std::size_t> tree_index;  // index of each tree as a one-tree forest
    int first_degree = 0;
    std::size_t first_index = 0;  // first tree
    std::size_t rest_index = 0;   // remaining trees as a forest
};

Factorization factorize(const nck::Algebra& alg, const nck::Forest& f) {
    Factorization fz;
    for (const auto& t : f.trees) {
        const auto one = nck::single(t);
        fz.degrees.push_back(alg.degree_of(one));
        fz.tree_index.push_back(alg.index_of(one));
    }
    fz.first_degree = fz.degrees.front();
    fz.first_index = fz.tree_index.front();
    nck::Forest rest;
    rest.trees.assign(f.trees.begin() + 1, f.trees.end());
    fz.rest_index = alg.index_of(rest);
    return fz;
}

std::vector<Rational> solve_functional(const Matrix& basis_inverse, const std::vector<Rational>& values) {
    // psi with basis * psi^T = values^T
    const std::size_t r = values.size();
    std::vector<Rational> psi(r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t l = 0; l < r; ++l)
            if (values[l] != 0) psi[i] += basis_inverse(i, l) * values[l];
    return psi;
}

Matrix stack_blocks(const structure::DegreeDecomposition& d) {
    return d.core.basis().stacked(d.m.basis()).stacked(d.h.basis()).stacked(d.w.basis());
}

}  // namespace

PairingState build_pairing(const structure::Analyzer& analyzer, int max_degree,
                           const std::vector<Matrix>& base_forms) {
    if (max_degree < 0) throw DomainError("build_pairing: negative target degree");
    if (base_forms.size() < static_cast<std::size_t>(max_degree) + 1)
        throw DomainError("build_pairing: missing base forms");
    const auto& alg = analyzer.algebra();

    PairingState st;
    st.max_degree = max_degree;
    st.gram.push_back(Matrix{{1}});
    st.decomposition.emplace_back();
    st.base_form.emplace_back(0, 0);
    st.generators.emplace_back();

    for (int n = 1; n <= max_degree; ++n) {
        const auto& dec = analyzer.decomposition(n);
        const Matrix& base = base_forms[static_cast<std::size_t>(n)];
        if (base.rows() != dec.h.dim() || base.cols() != dec.h.dim())
            throw DomainError("base form for degree " + std::to_string(n) + " must be " +
                              std::to_string(dec.h.dim()) + "x" + std::to_string(dec.h.dim()));
        if (base != base.transpose()) throw DomainError("base form for degree " + std::to_string(n) + " is not symmetric");
        if (la::determinant(base) == 0) throw DegenerateBaseForm(n);

        const auto& basis = alg.basis(n);
        const std::size_t r = basis.dim();

        std::vector<std::optional<Factorization>> factors(r);
        for (std::size_t f = 0; f < r; ++f)
            if (!basis.is_tree[f]) factors[f] = factorize(alg, basis.forests[f]);

        // <f, z> for multi-tree f = t_1 * rest, through Delta(z).
        Matrix products(r, r);
#pragma omp parallel for schedule(dynamic)
        for (std::size_t j = 0; j < r; ++j) {
            const auto blocks = coproduct_blocks(alg, basis.forests[j]);
            std::map<int, Matrix> paired;
            for (std::size_t f = 0; f < r; ++f) {
                if (!factors[f]) continue;
                const int k = factors[f]->first_degree;
                auto it = paired.find(k);
                if (it == paired.end()) {
                    const auto b = blocks.find(k);
                    Matrix value = b == blocks.end()
                                       ? Matrix(alg.dim(k), alg.dim(n - k))
                                       : st.gram[static_cast<std::size_t>(k)] * b->second *
                                             st.gram[static_cast<std::size_t>(n - k)].transpose();
                    it = paired.emplace(k, std::move(value)).first;
                }
                products(f, j) = it->second(factors[f]->first_index, factors[f]->rest_index);
            }
        }

        const Matrix blocks = stack_blocks(dec);
        const Matrix blocks_inverse = la::inverse(blocks);
        const std::size_t nc = dec.core.dim(), nm = dec.m.dim(), nh = dec.h.dim(), nw = dec.w.dim();
        const std::size_t h_begin = nc + nm, w_begin = nc + nm + nh;

        Matrix psi(r, r);
        for (std::size_t l = 0; l < nc + nm; ++l) {
            const auto x = blocks.row(l);
            for (std::size_t f = 0; f < r; ++f) {
                if (x[f] == 0) continue;
                if (basis.is_tree[f]) throw Error("decomposable vector with a tree component");
                for (std::size_t j = 0; j < r; ++j) psi(l, j) += x[f] * products(f, j);
            }
        }

        std::vector<GeneratorFunctional> generators;
        for (std::size_t a = 0; a < nh; ++a) {
            std::vector<Rational> values(r);
            for (std::size_t b = 0; b < nh; ++b) values[h_begin + b] = base(a, b);
            auto fn = solve_functional(blocks_inverse, values);
            for (std::size_t j = 0; j < r; ++j) psi(h_begin + a, j) = fn[j];
            generators.push_back({GeneratorFunctional::Block::H, blocks.row_vector(h_begin + a), std::move(fn)});
        }

        for (std::size_t a = 0; a < nw; ++a) {
            const auto v = alg.to_sparse({n, blocks.row_vector(w_begin + a)});
            std::map<std::size_t, nck::Tensor> iterated;  // by number of factors
            std::vector<Rational> on_forest(r);
            for (std::size_t f = 0; f < r; ++f) {
                if (!factors[f]) continue;
                const auto& fz = *factors[f];
                const std::size_t k = fz.degrees.size();
                auto it = iterated.find(k);
                if (it == iterated.end()) it = iterated.emplace(k, nck::iterated_reduced(k - 1, v)).first;
                Rational acc = 0;
                for (const auto& [key, c] : it->second.terms()) {
                    Rational term = c;
                    for (std::size_t i = 0; i < k && term != 0; ++i) {
                        if (alg.degree_of(key[i]) != fz.degrees[i]) {
                            term = 0;
                            break;
                        }
                        term *= st.gram[static_cast<std::size_t>(fz.degrees[i])](fz.tree_index[i], alg.index_of(key[i]));
                    }
                    acc += term;
                }
                on_forest[f] = acc;
            }
            std::vector<Rational> values(r);
            for (std::size_t l = 0; l < nc + nm; ++l) {
                const auto x = blocks.row(l);
                for (std::size_t f = 0; f < r; ++f)
                    if (x[f] != 0) values[l] += x[f] * on_forest[f];
            }
            auto fn = solve_functional(blocks_inverse, values);
            for (std::size_t j = 0; j < r; ++j) psi(w_begin + a, j) = fn[j];
            generators.push_back({GeneratorFunctional::Block::W, blocks.row_vector(w_begin + a), std::move(fn)});
        }

        st.gram.push_back(blocks_inverse * psi);
        st.decomposition.push_back(dec);
        st.base_form.push_back(base);
        st.generators.push_back(std::move(generators));
    }
    return st;
}

PairingState build_pairing(const structure::Analyzer& analyzer, int max_degree) {
    return build_pairing(analyzer, max_degree, identity_base_forms(analyzer, max_degree));
}

VerificationReport verify_hopf_pairing(const nck::Algebra& alg, const PairingState& st) {
    VerificationReport rep;
    auto fail = [&rep](bool& flag, Violation v) {
        if (flag) rep.violations.push_back(std::move(v));
        flag = false;
    };

    const std::size_t levels = static_cast<std::size_t>(st.max_degree) + 1;
    if (st.gram.size() != levels) {
        fail(rep.homogeneity, {"homogeneity", st.max_degree, {}, "expected one gram block per degree"});
        return rep;
    }
    for (std::size_t n = 0; n < levels; ++n) {
        const auto& g = st.gram[n];
        if (g.rows() != alg.dim(static_cast<int>(n)) || g.cols() != g.rows())
            fail(rep.homogeneity, {"homogeneity", static_cast<int>(n), {}, "gram block is not dim H_n square"});
    }
    if (!rep.homogeneity) return rep;

    if (st.gram[0] != Matrix{{1}}) fail(rep.counit, {"counit", 0, {"1", "1"}, "<1, 1> != 1"});

    for (std::size_t n = 0; n < levels; ++n) {
        const auto& g = st.gram[n];
        const auto& b = alg.basis(static_cast<int>(n));
        for (std::size_t i = 0; i < g.rows() && rep.symmetry; ++i)
            for (std::size_t j = i + 1; j < g.cols(); ++j)
                if (g(i, j) != g(j, i)) {
                    fail(rep.symmetry, {"symmetry", static_cast<int>(n), {b.text[i], b.text[j]},
                                        to_string(g(i, j)) + " != " + to_string(g(j, i))});
                    break;
                }
        if (la::determinant(g) == 0)
            fail(rep.nondegeneracy, {"nondegeneracy", static_cast<int>(n), {}, "det gram = 0"});
        if (n >= 1 && n < st.decomposition.size() && n < st.base_form.size()) {
            const auto& hb = st.decomposition[n].h.basis();
            if (hb * g * hb.transpose() != st.base_form[n])
                fail(rep.restriction, {"restriction", static_cast<int>(n), {}, "gram on h_n differs from base form"});
        }
    }

    for (std::size_t n = 0; n < levels; ++n) {
        const int deg = static_cast<int>(n);
        const auto& basis = alg.basis(deg);
        const auto& gn = st.gram[n];
        std::vector<std::optional<Violation>> first(basis.dim());
        std::vector<std::size_t> counted(basis.dim(), 0);
#pragma omp parallel for schedule(dynamic)
        for (std::size_t z = 0; z < basis.dim(); ++z) {
            const auto blocks = coproduct_blocks(alg, basis.forests[z]);
            for (int i = 0; i <= deg && !first[z]; ++i) {
                const auto& gi = st.gram[static_cast<std::size_t>(i)];
                const auto& gj = st.gram[static_cast<std::size_t>(deg - i)];
                const auto bl = blocks.find(i);
                const Matrix dz = bl == blocks.end() ? Matrix(alg.dim(i), alg.dim(deg - i)) : bl->second;
                const Matrix left = gi * dz * gj.transpose();    // <x (x) y, Delta z>
                const Matrix right = gi.transpose() * dz * gj;   // <Delta z, x (x) y>
                const auto& bx = alg.basis(i);
                const auto& by = alg.basis(deg - i);
                for (std::size_t x = 0; x < bx.dim() && !first[z]; ++x)
                    for (std::size_t y = 0; y < by.dim(); ++y) {
                        ++counted[z];
                        const std::size_t p = alg.index_of(nck::product(bx.forests[x], by.forests[y]));
                        if (gn(p, z) != left(x, y) || gn(z, p) != right(x, y)) {
                            first[z] = Violation{"multiplicativity", deg, {bx.text[x], by.text[y], basis.text[z]},
                                                 "<xy,z> = " + to_string(gn(p, z)) + ", <x(x)y,Dz> = " +
                                                     to_string(left(x, y)) + ", <z,xy> = " + to_string(gn(z, p)) +
                                                     ", <Dz,x(x)y> = " + to_string(right(x, y))};
                            break;
                        }
                    }
            }
        }
        for (std::size_t z = 0; z < basis.dim(); ++z) {
            rep.triples_checked += counted[z];
            if (first[z]) fail(rep.multiplicativity, *first[z]);
        }
    }
    return rep;
}

OrthogonalityReport check_orthogonality(const structure::Analyzer& analyzer, const PairingState& st, int n) {
    if (n < 1 || n > st.max_degree) throw DomainError("check_orthogonality: degree outside the built range");
    OrthogonalityReport rep;
    rep.degree = n;
    rep.lower_degrees_nondegenerate = true;
    for (int k = 0; k < n; ++k)
        if (la::determinant(st.gram[static_cast<std::size_t>(k)]) == 0) rep.lower_degrees_nondegenerate = false;

    const auto& dec = analyzer.decomposables(n);
    const auto orthogonal = la::kernel_basis(dec.basis() * st.gram[static_cast<std::size_t>(n)]);
    const auto& prim = analyzer.primitives(n);
    rep.dim_orthogonal = orthogonal.dim();
    rep.dim_primitives = prim.dim();
    rep.pass = rep.lower_degrees_nondegenerate && orthogonal == prim;
    return rep;
}

bool has_adapted_block_form(const Matrix& g, std::size_t nc, std::size_t nm, std::size_t nh) {
    const std::size_t total = 2 * nc + nm + nh;
    if (g.rows() != total || g.cols() != total) return false;
    const std::size_t starts[5] = {0, nc, nc + nm, nc + nm + nh, total};
    auto block_of = [&](std::size_t i) {
        std::size_t b = 0;
        while (i >= starts[b + 1]) ++b;
        return b;
    };
    for (std::size_t i = 0; i < total; ++i)
        for (std::size_t j = 0; j < total; ++j) {
            const std::size_t bi = block_of(i), bj = block_of(j);
            const bool identity_block = (bi == 0 && bj == 3) || (bi == 3 && bj == 0);
            const bool diagonal_block = (bi == 1 && bj == 1) || (bi == 2 && bj == 2);
            if (identity_block) {
                const Rational expected = (i - starts[bi] == j - starts[bj]) ? 1 : 0;
                if (g(i, j) != expected) return false;
            } else if (!diagonal_block && g(i, j) != 0) {
                return false;
            }
        }
    auto sub = [&](std::size_t s, std::size_t len) {
        Matrix m(len, len);
        for (std::size_t i = 0; i < len; ++i)
            for (std::size_t j = 0; j < len; ++j) m(i, j) = g(s + i, s + j);
        return m;
    };
    for (const auto& [s, len] : {std::pair{starts[1], nm}, std::pair{starts[2], nh}}) {
        const Matrix m = sub(s, len);
        const auto diag = la::gram_diagnose(m);
        if (!diag.symmetric || !diag.nondegenerate) return false;
    }
    return true;
}

AdaptedDegree adapt_complement(const PairingState& st, int n) {
    if (n < 1 || n > st.max_degree) throw DomainError("adapt_complement: degree outside the built range");
    const auto& g = st.gram[static_cast<std::size_t>(n)];
    if (la::determinant(g) == 0) throw DomainError("adapt_complement: degenerate gram matrix");
    const auto& d = st.decomposition[static_cast<std::size_t>(n)];

    const Matrix& x = d.core.basis();
    const Matrix& y = d.m.basis();
    const Matrix& z = d.h.basis();
    const Matrix& t = d.w.basis();
    auto pair = [&g](const Matrix& a, const Matrix& b) { return a * g * b.transpose(); };
    auto safe_inverse = [](const Matrix& m) { return m.rows() == 0 ? m : la::inverse(m); };

    // Make the core / w block the identity.
    const Matrix t1 = safe_inverse(pair(x, t)).transpose() * t;
    // Remove the components pairing with m and h.
    const Matrix lambda = safe_inverse(pair(y, y)) * pair(y, t1);  // column i = lambda^(i)
    const Matrix mu = safe_inverse(pair(z, z)) * pair(z, t1);
    Matrix s = t1;
    if (y.rows()) s = s - lambda.transpose() * y;
    if (z.rows()) s = s - mu.transpose() * z;
    // Split the remaining self-pairing of w evenly against the dual core vectors.
    Matrix adapted = s;
    if (x.rows()) {
        Matrix half = pair(s, s);
        for (auto i = 0u; i < half.rows(); ++i)
            for (auto j = 0u; j < half.cols(); ++j) half(i, j) /= 2;
        adapted = s - half * x;
    }

    AdaptedDegree out;
    out.decomposition = d;
    out.decomposition.w = la::Subspace::from_independent_rows(adapted);
    out.basis = x.stacked(y).stacked(z).stacked(adapted);
    out.gram = pair(out.basis, out.basis);
    out.dim_core = x.rows();
    out.dim_m = y.rows();
    out.dim_h = z.rows();
    out.block_form = has_adapted_block_form(out.gram, out.dim_core, out.dim_m, out.dim_h);
    return out;
}

}  // namespace hopf::pairing
