#include "hopf/nck.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace hopf::nck {

DecorationSet::DecorationSet(std::vector<Decoration> entries) : entries_(std::move(entries)) {
    std::set<std::string> seen;
    for (const auto& e : entries_) {
        if (e.label.empty() || !std::all_of(e.label.begin(), e.label.end(), [](unsigned char c) {
                return std::isalnum(c) || c == '_';
            }))
            throw DomainError("decoration label '" + e.label + "' must be non-empty [A-Za-z0-9_]");
        if (e.degree < 1) throw DomainError("decoration '" + e.label + "' must have degree >= 1");
        if (!seen.insert(e.label).second) throw DomainError("duplicate decoration label '" + e.label + "'");
    }
}

DecorationSet DecorationSet::single() { return DecorationSet({{"a", 1}}); }

std::optional<std::size_t> DecorationSet::find(std::string_view label) const {
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i].label == label) return i;
    return std::nullopt;
}

bool operator==(const Tree& a, const Tree& b) { return a.label == b.label && a.children == b.children; }

std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
    if (auto c = a.label <=> b.label; c != 0) return c;
    return std::lexicographical_compare_three_way(a.children.begin(), a.children.end(), b.children.begin(),
                                                  b.children.end());
}

std::strong_ordering operator<=>(const Forest& a, const Forest& b) {
    return std::lexicographical_compare_three_way(a.trees.begin(), a.trees.end(), b.trees.begin(), b.trees.end());
}

Tree leaf(std::uint32_t label) { return Tree{label, {}}; }

Forest single(Tree t) {
    Forest f;
    f.trees.push_back(std::move(t));
    return f;
}

int degree(const Tree& t, const DecorationSet& d) {
    int deg = d[t.label].degree;
    for (const auto& c : t.children) deg += degree(c, d);
    return deg;
}

int degree(const Forest& f, const DecorationSet& d) {
    int deg = 0;
    for (const auto& t : f.trees) deg += degree(t, d);
    return deg;
}

namespace {

void write_tree(const Tree& t, const DecorationSet& d, std::string& out) {
    out += d[t.label].label;
    if (t.children.empty()) return;
    out += '[';
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        if (i) out += ' ';
        write_tree(t.children[i], d, out);
    }
    out += ']';
}

class ForestParser {
public:
    ForestParser(std::string_view text, const DecorationSet& d) : text_(text), d_(d) {}

    Forest parse() {
        Forest f = trees(false);
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return f;
    }

private:
    // Trees separated by exactly one space, no leading or trailing space.
    Forest trees(bool inside_brackets) {
        Forest f;
        if (pos_ == text_.size() || text_[pos_] == ']') {
            if (inside_brackets) fail("empty child list");
            return f;
        }
        f.trees.push_back(tree());
        while (pos_ < text_.size() && text_[pos_] == ' ') {
            ++pos_;
            f.trees.push_back(tree());
        }
        return f;
    }

    Tree tree() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) fail("expected a label");
        const auto label = text_.substr(start, pos_ - start);
        const auto idx = d_.find(label);
        if (!idx) fail("unknown decoration '" + std::string(label) + "'");
        Tree t{static_cast<std::uint32_t>(*idx), {}};
        if (pos_ < text_.size() && text_[pos_] == '[') {
            ++pos_;
            t.children = trees(true).trees;
            if (pos_ >= text_.size() || text_[pos_] != ']') fail("missing ']'");
            ++pos_;
        }
        return t;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("forest '" + std::string(text_) + "' at " + std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    const DecorationSet& d_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string serialize(const Tree& t, const DecorationSet& d) {
    std::string out;
    write_tree(t, d, out);
    return out;
}

std::string serialize(const Forest& f, const DecorationSet& d) {
    std::string out;
    for (std::size_t i = 0; i < f.trees.size(); ++i) {
        if (i) out += ' ';
        write_tree(f.trees[i], d, out);
    }
    return out;
}

Forest parse_forest(std::string_view text, const DecorationSet& d) {
    if (text == "1" && !d.find("1")) return {};
    return ForestParser(text, d).parse();
}

Forest product(const Forest& f, const Forest& g) {
    Forest r = f;
    r.trees.insert(r.trees.end(), g.trees.begin(), g.trees.end());
    return r;
}

void Tensor::add(std::vector<Forest> key, const Rational& coeff) {
    if (key.size() != order_) throw DomainError("tensor key has the wrong order");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Tensor& Tensor::operator+=(const Tensor& other) {
    if (other.order_ != order_) throw DomainError("adding tensors of different orders");
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& other) {
    if (other.order_ != order_) throw DomainError("subtracting tensors of different orders");
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
}

Rational Tensor::coefficient(const std::vector<Forest>& key) const {
    const auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

Tensor operator*(const Tensor& a, const Tensor& b) {
    if (a.order_ != b.order_) throw DomainError("multiplying tensors of different orders");
    Tensor r(a.order_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            std::vector<Forest> key(a.order_);
            for (std::size_t i = 0; i < a.order_; ++i) key[i] = product(ka[i], kb[i]);
            r.add(std::move(key), ca * cb);
        }
    return r;
}

std::vector<std::pair<Forest, Tree>> rooted_cuts(const Tree& t) {
    // Partial results: (branches so far, kept children so far).
    std::vector<std::pair<Forest, std::vector<Tree>>> partial{{Forest{}, {}}};
    for (const auto& child : t.children) {
        const auto below = rooted_cuts(child);
        std::vector<std::pair<Forest, std::vector<Tree>>> next;
        next.reserve(partial.size() * (below.size() + 1));
        for (const auto& [branches, kept] : partial) {
            // cut the edge above `child`
            next.emplace_back(product(branches, single(child)), kept);
            // keep the edge, cut inside the child
            for (const auto& [p, r] : below) {
                auto k = kept;
                k.push_back(r);
                next.emplace_back(product(branches, p), std::move(k));
            }
        }
        partial = std::move(next);
    }
    std::vector<std::pair<Forest, Tree>> out;
    out.reserve(partial.size());
    for (auto& [branches, kept] : partial) out.emplace_back(std::move(branches), Tree{t.label, std::move(kept)});
    return out;
}

namespace {

Tensor tree_coproduct(const Tree& t) {
    Tensor d(2);
    d.add({single(t), Forest{}}, 1);
    for (auto& [p, r] : rooted_cuts(t)) d.add({std::move(p), single(std::move(r))}, 1);
    return d;
}

}  // namespace

Tensor coproduct(const Forest& f) {
    Tensor result(2);
    result.add({Forest{}, Forest{}}, 1);
    for (const auto& t : f.trees) result = result * tree_coproduct(t);
    return result;
}

Tensor coproduct(const SparseVector& x) {
    Tensor result(2);
    for (const auto& [f, c] : x) {
        for (const auto delta = coproduct(f); const auto& [k, v] : delta.terms()) result.add(k, c * v);
    }
    return result;
}

Tensor reduced_coproduct(const Forest& f) {
    if (f.is_unit()) throw DegreeZeroInput("reduced coproduct of the unit");
    Tensor d = coproduct(f);
    d.add({f, Forest{}}, -1);
    d.add({Forest{}, f}, -1);
    return d;
}

Tensor iterated_reduced(std::size_t k, const SparseVector& x, Association assoc) {
    Tensor current(1);
    for (const auto& [f, c] : x) {
        if (c == 0) continue;
        if (f.is_unit()) throw DegreeZeroInput("iterated reduced coproduct of an element with a unit component");
        current.add({f}, c);
    }
    std::map<Forest, Tensor> memo;
    auto reduced = [&memo](const Forest& f) -> const Tensor& {
        auto it = memo.find(f);
        if (it == memo.end()) it = memo.emplace(f, reduced_coproduct(f)).first;
        return it->second;
    };
    for (std::size_t step = 0; step < k; ++step) {
        Tensor next(current.order() + 1);
        for (const auto& [key, c] : current.terms()) {
            const std::size_t pos = assoc == Association::Left ? 0 : key.size() - 1;
            for (const auto& [split, v] : reduced(key[pos]).terms()) {
                std::vector<Forest> nk;
                nk.reserve(key.size() + 1);
                nk.insert(nk.end(), key.begin(), key.begin() + static_cast<std::ptrdiff_t>(pos));
                nk.push_back(split[0]);
                nk.push_back(split[1]);
                nk.insert(nk.end(), key.begin() + static_cast<std::ptrdiff_t>(pos) + 1, key.end());
                next.add(std::move(nk), c * v);
            }
        }
        current = std::move(next);
    }
    return current;
}

std::vector<Forest> enumerate_forests(int n, const DecorationSet& d) {
    if (n < 0) throw DomainError("negative degree");
    std::vector<std::vector<Tree>> trees(static_cast<std::size_t>(n) + 1);
    std::vector<std::vector<Forest>> forests(static_cast<std::size_t>(n) + 1);
    forests[0].push_back(Forest{});
    for (int m = 1; m <= n; ++m) {
        for (std::uint32_t l = 0; l < d.size(); ++l) {
            const int k = d[l].degree;
            if (k > m) continue;
            for (const auto& f : forests[static_cast<std::size_t>(m - k)]) trees[static_cast<std::size_t>(m)].push_back(Tree{l, f.trees});
        }
        for (int k = 1; k <= m; ++k)
            for (const auto& t : trees[static_cast<std::size_t>(k)])
                for (const auto& rest : forests[static_cast<std::size_t>(m - k)])
                    forests[static_cast<std::size_t>(m)].push_back(product(single(t), rest));
    }

    auto& out = forests[static_cast<std::size_t>(n)];
    std::vector<std::string> text(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) text[i] = serialize(out[i], d);
    std::vector<std::size_t> order(out.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return text[a] < text[b]; });
    std::vector<Forest> sorted;
    sorted.reserve(out.size());
    for (auto i : order) sorted.push_back(std::move(out[i]));
    return sorted;
}

Algebra::Algebra(DecorationSet decorations) : decorations_(std::move(decorations)) {}

const DegreeBasis& Algebra::basis(int n) const {
    if (n < 0) throw DomainError("negative degree");
    std::lock_guard lock(cache_mutex_);
    while (cache_.size() <= static_cast<std::size_t>(n)) {
        auto b = std::make_unique<DegreeBasis>();
        b->degree = static_cast<int>(cache_.size());
        b->forests = enumerate_forests(b->degree, decorations_);
        b->text.reserve(b->forests.size());
        for (std::size_t i = 0; i < b->forests.size(); ++i) {
            b->text.push_back(serialize(b->forests[i], decorations_));
            b->index.emplace(b->text.back(), i);
            b->is_tree.push_back(b->forests[i].trees.size() == 1);
        }
        cache_.push_back(std::move(b));
    }
    return *cache_[static_cast<std::size_t>(n)];
}

std::vector<const DegreeBasis*> Algebra::bases_up_to(int n) const {
    std::vector<const DegreeBasis*> out;
    for (int k = 0; k <= n; ++k) out.push_back(&basis(k));
    return out;
}

std::size_t Algebra::index_of(const Forest& f) const {
    const auto& b = basis(degree_of(f));
    const auto it = b.index.find(text(f));
    if (it == b.index.end()) throw DomainError("forest '" + text(f) + "' missing from its degree basis");
    return it->second;
}

GradedVector Algebra::unit_vector(const Forest& f) const {
    const int n = degree_of(f);
    GradedVector v{n, std::vector<Rational>(dim(n))};
    v.coords[index_of(f)] = 1;
    return v;
}

GradedVector Algebra::product(const GradedVector& x, const GradedVector& y) const {
    const auto& bx = basis(x.degree);
    const auto& by = basis(y.degree);
    GradedVector r{x.degree + y.degree, std::vector<Rational>(dim(x.degree + y.degree))};
    const auto& br = basis(r.degree);
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
        if (x.coords[i] == 0) continue;
        for (std::size_t j = 0; j < y.coords.size(); ++j) {
            if (y.coords[j] == 0) continue;
            const std::string key = bx.text[i].empty()   ? by.text[j]
                                    : by.text[j].empty() ? bx.text[i]
                                                         : bx.text[i] + ' ' + by.text[j];
            r.coords[br.index.at(key)] += x.coords[i] * y.coords[j];
        }
    }
    return r;
}

SparseVector Algebra::to_sparse(const GradedVector& x) const {
    const auto& b = basis(x.degree);
    SparseVector s;
    for (std::size_t i = 0; i < x.coords.size(); ++i)
        if (x.coords[i] != 0) s.emplace(b.forests[i], x.coords[i]);
    return s;
}

GradedVector Algebra::to_dense(const SparseVector& x, int n) const {
    GradedVector v{n, std::vector<Rational>(dim(n))};
    for (const auto& [f, c] : x) {
        if (degree_of(f) != n) throw DomainError("to_dense: forest of the wrong degree");
        v.coords[index_of(f)] += c;
    }
    return v;
}

TensorVector Algebra::coproduct_block(const Forest& f, int i) const {
    const int n = degree_of(f);
    if (i < 0 || i > n) throw DomainError("coproduct_block: bidegree out of range");
    TensorVector t{i, n - i, dim(n - i), std::vector<Rational>(dim(i) * dim(n - i))};
    for (const auto delta = coproduct(f); const auto& [key, c] : delta.terms()) {
        if (degree_of(key[0]) != i) continue;
        t.coords[index_of(key[0]) * t.right_dim + index_of(key[1])] += c;
    }
    return t;
}

std::vector<std::size_t> Algebra::block_offsets(int n) const {
    std::vector<std::size_t> offsets(static_cast<std::size_t>(std::max(n, 1)) + 1, 0);
    for (int i = 1; i < n; ++i) offsets[static_cast<std::size_t>(i) + 1] = offsets[static_cast<std::size_t>(i)] + dim(i) * dim(n - i);
    return offsets;
}

void Algebra::fill_column(la::Matrix& m, std::size_t col, int n, const std::vector<std::size_t>& offsets,
                          const std::vector<const DegreeBasis*>& bases) const {
    const Forest& f = bases[static_cast<std::size_t>(n)]->forests[col];
    for (const auto delta = reduced_coproduct(f); const auto& [key, c] : delta.terms()) {
        const int i = degree(key[0], decorations_);
        const auto& left = *bases[static_cast<std::size_t>(i)];
        const auto& right = *bases[static_cast<std::size_t>(n - i)];
        const std::size_t a = left.index.at(serialize(key[0], decorations_));
        const std::size_t b = right.index.at(serialize(key[1], decorations_));
        m(offsets[static_cast<std::size_t>(i)] + a * right.dim() + b, col) += c;
    }
}

la::Matrix Algebra::reduced_coproduct_matrix(int n) const {
    if (n < 1) throw DegreeZeroInput("reduced coproduct matrix needs degree >= 1");
    const auto bases = bases_up_to(n);
    const auto offsets = block_offsets(n);
    la::Matrix m(offsets[static_cast<std::size_t>(n)], bases.back()->dim());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t col = 0; col < m.cols(); ++col) fill_column(m, col, n, offsets, bases);
    return m;
}

la::Matrix Algebra::reduced_coproduct_matrix_serial(int n) const {
    if (n < 1) throw DegreeZeroInput("reduced coproduct matrix needs degree >= 1");
    const auto bases = bases_up_to(n);
    const auto offsets = block_offsets(n);
    la::Matrix m(offsets[static_cast<std::size_t>(n)], bases.back()->dim());
    for (std::size_t col = 0; col < m.cols(); ++col) fill_column(m, col, n, offsets, bases);
    return m;
}

}  // namespace hopf::nck
