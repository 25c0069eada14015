#pragma once

// Truncated formal power series over Q and the conversions between the
// Poincare-Hilbert series R (dimensions), P (primitives), S (indecomposable
// primitives) and D (decorations of a Connes-Kreimer realization).

#include "hopf/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hopf::series {

/// Power series c_0 + c_1 h + ... + c_N h^N, known modulo h^{N+1}.
class TruncatedSeries {
public:
    /// Zero series of the given truncation order.
    explicit TruncatedSeries(std::size_t order);
    /// Takes coefficients c_0..c_N; order = size - 1. Must be non-empty.
    explicit TruncatedSeries(std::vector<Rational> coeffs);

    static TruncatedSeries constant(const Rational& c, std::size_t order);
    /// The series h (zero when order = 0).
    static TruncatedSeries variable(std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t n) const { return coeffs_[n]; }
    Rational& operator[](std::size_t n) { return coeffs_[n]; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    TruncatedSeries truncated(std::size_t order) const;

    // Binary operations truncate to the smaller of the two orders.
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a);
    TruncatedSeries operator-() const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

private:
    std::vector<Rational> coeffs_;
};

/// Multiplicative inverse of a series with constant term 1.
TruncatedSeries series_invert(const TruncatedSeries& a);

/// The square root with constant term +1 of a series with constant term 1,
/// by degree-by-degree solving of (sqrt A)^2 = A.
TruncatedSeries formal_sqrt(const TruncatedSeries& a);

/// log(A) for A with constant term 1, via (log A)' = A'/A.
TruncatedSeries formal_log(const TruncatedSeries& a);

/// (1 - h^step)^exponent for an integer exponent (negative allowed).
TruncatedSeries binomial_factor(std::size_t step, const Integer& exponent, std::size_t order);

/// Moebius function.
int mobius(std::size_t n);

enum class Kind { R, P, S, D };

char kind_letter(Kind k);
Kind kind_from_letter(char c);  // throws ParseError

/// Coefficients 1..N of one of the four generating series. The R series
/// carries an implicit constant term 1, the other three a constant term 0.
struct SeriesProfile {
    Kind kind = Kind::R;
    std::vector<Rational> coeffs;  // coeffs[n-1] is the coefficient of h^n

    SeriesProfile() = default;
    SeriesProfile(Kind k, std::vector<Rational> c);

    std::size_t order() const { return coeffs.size(); }
    const Rational& at(std::size_t n) const { return coeffs.at(n - 1); }

    /// Builds a profile from integer coefficients.
    static SeriesProfile from_integers(Kind k, std::span<const long long> values);

    TruncatedSeries to_series() const;
    static SeriesProfile from_series(Kind k, const TruncatedSeries& s);
    SeriesProfile truncated(std::size_t order) const;

    bool all_integers() const;

    friend bool operator==(const SeriesProfile&, const SeriesProfile&) = default;
};

/// Wrong profile kind handed to a conversion.
class KindMismatch : public DomainError {
public:
    using DomainError::DomainError;
};

/// s_from_p needs integer exponents p_n.
class NonIntegerExponent : public DomainError {
public:
    NonIntegerExponent(std::size_t index, Rational value);
    std::size_t index;
    Rational value;
};

/// P = 1 - 1/R
SeriesProfile p_from_r(const SeriesProfile& r);
/// R = 1/(1 - P)
SeriesProfile r_from_p(const SeriesProfile& p);
/// 1 - S = prod_n (1 - h^n)^{p_n}; throws NonIntegerExponent.
SeriesProfile s_from_p(const SeriesProfile& p);

struct PFromS {
    SeriesProfile p;
    bool integral = true;
    std::optional<std::size_t> first_non_integer;
};

/// Inverse of s_from_p by Moebius inversion of the logarithm of 1 - S.
/// Non-integral results are returned with integral = false.
PFromS p_from_s(const SeriesProfile& s);

SeriesProfile s_from_r(const SeriesProfile& r);
SeriesProfile r_from_s(const SeriesProfile& s);

/// D = (R - 1)/R^2
SeriesProfile d_from_r(const SeriesProfile& r);
/// R = 2/(1 + sqrt(1 - 4D))
SeriesProfile r_from_d(const SeriesProfile& d);

struct GateVerdict {
    bool pass = true;
    std::optional<std::size_t> first_failure;
    std::optional<Rational> witness;
    SeriesProfile values;  // the s- or d-profile that was tested
};

/// Free-and-cofree realizability: every S_n(r_1..r_n) is a nonnegative integer.
GateVerdict gate_free_cofree(const SeriesProfile& r);
/// Connes-Kreimer realizability: every D_n(r_1..r_n) is a nonnegative integer.
GateVerdict gate_nck(const SeriesProfile& r);

}  // namespace hopf::series
