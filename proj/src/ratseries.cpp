#include "hopf/ratseries.hpp"

#include <algorithm>
#include <utility>

namespace hopf::series {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("a truncated series needs at least a constant term");
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t order) {
    TruncatedSeries s(order);
    s[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::variable(std::size_t order) {
    TruncatedSeries s(order);
    if (order >= 1) s[1] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
    std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + std::min(order, this->order()) + 1);
    c.resize(order + 1);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (std::size_t n = 0; n <= r.order(); ++n) r[n] = a[n] + b[n];
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (std::size_t n = 0; n <= r.order(); ++n) r[n] = a[n] - b[n];
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    TruncatedSeries r(order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j <= order; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a) {
    TruncatedSeries r(a.order());
    for (std::size_t n = 0; n <= a.order(); ++n) r[n] = c * a[n];
    return r;
}

TruncatedSeries TruncatedSeries::operator-() const { return Rational(-1) * *this; }

TruncatedSeries series_invert(const TruncatedSeries& a) {
    if (a[0] != 1) throw DomainError("series_invert: constant term must be 1");
    TruncatedSeries b(a.order());
    b[0] = 1;
    for (std::size_t n = 1; n <= a.order(); ++n) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= n; ++k) acc += a[k] * b[n - k];
        b[n] = -acc;
    }
    return b;
}

TruncatedSeries formal_sqrt(const TruncatedSeries& a) {
    if (a[0] != 1) throw DomainError("formal_sqrt: constant term must be 1");
    // (sum b_k h^k)^2 = A  =>  2 b_n = a_n - sum_{0<k<n} b_k b_{n-k}
    TruncatedSeries b(a.order());
    b[0] = 1;
    for (std::size_t n = 1; n <= a.order(); ++n) {
        Rational acc = a[n];
        for (std::size_t k = 1; k < n; ++k) acc -= b[k] * b[n - k];
        b[n] = acc / 2;
    }
    return b;
}

TruncatedSeries formal_log(const TruncatedSeries& a) {
    if (a[0] != 1) throw DomainError("formal_log: constant term must be 1");
    const std::size_t order = a.order();
    TruncatedSeries derivative(order == 0 ? 0 : order - 1);
    for (std::size_t n = 1; n <= order; ++n) derivative[n - 1] = Rational(static_cast<long>(n)) * a[n];
    const TruncatedSeries quotient = derivative * series_invert(a.truncated(derivative.order()));
    TruncatedSeries log(order);
    for (std::size_t n = 1; n <= order; ++n) log[n] = quotient[n - 1] / Rational(static_cast<long>(n));
    return log;
}

TruncatedSeries binomial_factor(std::size_t step, const Integer& exponent, std::size_t order) {
    TruncatedSeries r(order);
    r[0] = 1;
    if (step == 0) throw DomainError("binomial_factor: step must be positive");
    // coefficient of h^{step k} is (-1)^k binom(exponent, k)
    Rational binom = 1;
    for (std::size_t k = 1; k * step <= order; ++k) {
        binom *= Rational(exponent - static_cast<long>(k - 1));
        binom /= static_cast<long>(k);
        r[k * step] = (k % 2 == 0) ? binom : Rational(-binom);
    }
    return r;
}

int mobius(std::size_t n) {
    if (n == 0) throw DomainError("mobius(0) is undefined");
    int mu = 1;
    for (std::size_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

char kind_letter(Kind k) {
    switch (k) {
        case Kind::R: return 'R';
        case Kind::P: return 'P';
        case Kind::S: return 'S';
        case Kind::D: return 'D';
    }
    return '?';
}

Kind kind_from_letter(char c) {
    switch (c) {
        case 'R': case 'r': return Kind::R;
        case 'P': case 'p': return Kind::P;
        case 'S': case 's': return Kind::S;
        case 'D': case 'd': return Kind::D;
        default: throw ParseError(std::string("unknown series kind '") + c + "'");
    }
}

SeriesProfile::SeriesProfile(Kind k, std::vector<Rational> c) : kind(k), coeffs(std::move(c)) {
    if (coeffs.empty()) throw DomainError("a series profile needs truncation order >= 1");
}

SeriesProfile SeriesProfile::from_integers(Kind k, std::span<const long long> values) {
    std::vector<Rational> c;
    c.reserve(values.size());
    for (long long v : values) c.emplace_back(Integer(std::to_string(v)));
    return SeriesProfile(k, std::move(c));
}

TruncatedSeries SeriesProfile::to_series() const {
    TruncatedSeries s(order());
    s[0] = kind == Kind::R ? 1 : 0;
    for (std::size_t n = 1; n <= order(); ++n) s[n] = coeffs[n - 1];
    return s;
}

SeriesProfile SeriesProfile::from_series(Kind k, const TruncatedSeries& s) {
    return SeriesProfile(k, std::vector<Rational>(s.coeffs().begin() + 1, s.coeffs().end()));
}

SeriesProfile SeriesProfile::truncated(std::size_t n) const {
    if (n == 0 || n > order()) throw DomainError("cannot truncate a profile of order " + std::to_string(order()) +
                                                 " to order " + std::to_string(n));
    return SeriesProfile(kind, std::vector<Rational>(coeffs.begin(), coeffs.begin() + n));
}

bool SeriesProfile::all_integers() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& q) { return is_integer(q); });
}

NonIntegerExponent::NonIntegerExponent(std::size_t i, Rational v)
    : DomainError("p_" + std::to_string(i) + " = " + to_string(v) + " is not an integer exponent"),
      index(i),
      value(std::move(v)) {}

namespace {

void expect_kind(const SeriesProfile& s, Kind k, const char* op) {
    if (s.kind != k)
        throw KindMismatch(std::string(op) + ": expected a " + kind_letter(k) + "-profile, got " +
                           kind_letter(s.kind));
}

}  // namespace

SeriesProfile p_from_r(const SeriesProfile& r) {
    expect_kind(r, Kind::R, "p_from_r");
    const auto inv = series_invert(r.to_series());
    return SeriesProfile::from_series(Kind::P, TruncatedSeries::constant(1, r.order()) - inv);
}

SeriesProfile r_from_p(const SeriesProfile& p) {
    expect_kind(p, Kind::P, "r_from_p");
    const auto one = TruncatedSeries::constant(1, p.order());
    return SeriesProfile::from_series(Kind::R, series_invert(one - p.to_series()));
}

SeriesProfile s_from_p(const SeriesProfile& p) {
    expect_kind(p, Kind::P, "s_from_p");
    const std::size_t order = p.order();
    for (std::size_t n = 1; n <= order; ++n)
        if (!is_integer(p.at(n))) throw NonIntegerExponent(n, p.at(n));

    auto product = TruncatedSeries::constant(1, order);
    for (std::size_t n = 1; n <= order; ++n) {
        if (p.at(n) == 0) continue;
        product = product * binomial_factor(n, p.at(n).get_num(), order);
    }
    return SeriesProfile::from_series(Kind::S, TruncatedSeries::constant(1, order) - product);
}

PFromS p_from_s(const SeriesProfile& s) {
    expect_kind(s, Kind::S, "p_from_s");
    const std::size_t order = s.order();
    const auto one = TruncatedSeries::constant(1, order);
    // -log(1 - S) = sum_n p_n sum_k h^{nk}/k, so a_m = m [h^m] = sum_{n | m} n p_n
    const auto neg_log = -formal_log(one - s.to_series());

    std::vector<Rational> a(order + 1);
    for (std::size_t m = 1; m <= order; ++m) a[m] = Rational(static_cast<long>(m)) * neg_log[m];

    PFromS out;
    std::vector<Rational> p(order);
    for (std::size_t m = 1; m <= order; ++m) {
        Rational acc = 0;
        for (std::size_t d = 1; d <= m; ++d)
            if (m % d == 0) acc += mobius(m / d) * a[d];
        p[m - 1] = acc / static_cast<long>(m);
        if (out.integral && !is_integer(p[m - 1])) {
            out.integral = false;
            out.first_non_integer = m;
        }
    }
    out.p = SeriesProfile(Kind::P, std::move(p));
    return out;
}

SeriesProfile s_from_r(const SeriesProfile& r) {
    expect_kind(r, Kind::R, "s_from_r");
    return s_from_p(p_from_r(r));
}

SeriesProfile r_from_s(const SeriesProfile& s) {
    expect_kind(s, Kind::S, "r_from_s");
    return r_from_p(p_from_s(s).p);
}

SeriesProfile d_from_r(const SeriesProfile& r) {
    expect_kind(r, Kind::R, "d_from_r");
    const auto big_r = r.to_series();
    const auto numerator = big_r - TruncatedSeries::constant(1, r.order());
    return SeriesProfile::from_series(Kind::D, numerator * series_invert(big_r * big_r));
}

SeriesProfile r_from_d(const SeriesProfile& d) {
    expect_kind(d, Kind::D, "r_from_d");
    const std::size_t order = d.order();
    const auto one = TruncatedSeries::constant(1, order);
    const auto root = formal_sqrt(one - Rational(4) * d.to_series());
    // R = 2 / (1 + root) = 1 / ((1 + root)/2), and (1 + root)/2 has constant term 1
    const auto half_sum = Rational(1, 2) * (one + root);
    return SeriesProfile::from_series(Kind::R, series_invert(half_sum));
}

namespace {

GateVerdict nonnegative_integer_gate(SeriesProfile values) {
    GateVerdict v;
    for (std::size_t n = 1; n <= values.order(); ++n) {
        const Rational& c = values.at(n);
        if (!is_integer(c) || c < 0) {
            v.pass = false;
            v.first_failure = n;
            v.witness = c;
            break;
        }
    }
    v.values = std::move(values);
    return v;
}

void expect_integer_profile(const SeriesProfile& r, const char* op) {
    if (!r.all_integers()) throw DomainError(std::string(op) + ": dimension sequence must be integral");
}

}  // namespace

GateVerdict gate_free_cofree(const SeriesProfile& r) {
    expect_kind(r, Kind::R, "gate_free_cofree");
    expect_integer_profile(r, "gate_free_cofree");
    return nonnegative_integer_gate(s_from_r(r));
}

GateVerdict gate_nck(const SeriesProfile& r) {
    expect_kind(r, Kind::R, "gate_nck");
    expect_integer_profile(r, "gate_nck");
    return nonnegative_integer_gate(d_from_r(r));
}

}  // namespace hopf::series
