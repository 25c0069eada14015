#include "oracles.hpp"

namespace oracle {

Q S1(const std::vector<Q>& r) { return r[0]; }
Q S2(const std::vector<Q>& r) { return r[1] - Q(3, 2) * r[0] * r[0] + Q(1, 2) * r[0]; }
Q S3(const std::vector<Q>& r) {
    return r[2] + r[0] / 3 - 3 * r[0] * r[1] - r[0] * r[0] / 2 + Q(13, 6) * r[0] * r[0] * r[0];
}
Q D1(const std::vector<Q>& r) { return r[0]; }
Q D2(const std::vector<Q>& r) { return r[1] - 2 * r[0] * r[0]; }
Q D3(const std::vector<Q>& r) { return r[2] - 4 * r[1] * r[0] + 3 * r[0] * r[0] * r[0]; }
Q D3_quadratic(const std::vector<Q>& r) { return r[2] - 4 * r[1] * r[0] + 3 * r[0] * r[0]; }

std::vector<Q> p_by_recurrence(const std::vector<Q>& r) {
    std::vector<Q> p(r.size());
    for (std::size_t n = 0; n < r.size(); ++n) {
        p[n] = r[n];
        for (std::size_t k = 0; k < n; ++k) p[n] -= r[k] * p[n - 1 - k];
    }
    return p;
}

namespace {

using Poly = std::vector<Q>;  // coefficients 0..N

Poly mul(const Poly& a, const Poly& b) {
    Poly c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

}  // namespace

std::vector<Q> d_by_recurrence(const std::vector<Q>& r) {
    const std::size_t N = r.size();
    Poly R(N + 1);
    R[0] = 1;
    for (std::size_t n = 1; n <= N; ++n) R[n] = r[n - 1];
    const Poly R2 = mul(R, R);
    std::vector<Q> d(N + 1);
    for (std::size_t n = 1; n <= N; ++n) {
        Q acc = R[n];
        for (std::size_t i = 1; i < n; ++i) acc -= d[i] * R2[n - i];
        d[n] = acc;
    }
    return {d.begin() + 1, d.end()};
}

std::vector<Q> s_by_expansion(const std::vector<long>& p) {
    const std::size_t N = p.size();
    Poly prod(N + 1);
    prod[0] = 1;
    for (std::size_t k = 1; k <= N; ++k) {
        Poly factor(N + 1);  // 1 - h^k, or its inverse 1 + h^k + h^2k + ...
        factor[0] = 1;
        if (p[k - 1] >= 0) {
            factor[k] = -1;
        } else {
            for (std::size_t j = k; j <= N; j += k) factor[j] = 1;
        }
        const long times = p[k - 1] >= 0 ? p[k - 1] : -p[k - 1];
        for (long t = 0; t < times; ++t) prod = mul(prod, factor);
    }
    std::vector<Q> s(N);
    for (std::size_t n = 1; n <= N; ++n) s[n - 1] = -prod[n];
    return s;
}

std::vector<Q> p_by_product_solving(const std::vector<Q>& s) {
    // With p_1..p_{n-1} fixed, [h^n] prod_{k<=n} (1-h^k)^{p_k} = c_n - p_n where c_n
    // comes from the factors k < n only; it must equal -s_n.
    const std::size_t N = s.size();
    std::vector<Q> p(N);
    Poly prod(N + 1);
    prod[0] = 1;
    for (std::size_t n = 1; n <= N; ++n) {
        p[n - 1] = s[n - 1] + prod[n];
        // multiply prod by (1 - h^n)^{p_n} = sum_j binom(p_n, j) (-h^n)^j
        Poly factor(N + 1);
        Q binom = 1;
        for (std::size_t j = 0; j * n <= N; ++j) {
            factor[j * n] = (j % 2 ? -binom : binom);
            binom = binom * (p[n - 1] - Q(static_cast<long>(j))) / Q(static_cast<long>(j + 1));
        }
        prod = mul(prod, factor);
    }
    return p;
}

int mobius(int n) {
    int result = 1;
    for (int q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        n /= q;
        if (n % q == 0) return 0;
        result = -result;
    }
    return n > 1 ? -result : result;
}

Q witt(long m, int n) {
    Z total = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        Z power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(n / d));
        total += mobius(d) * power;
    }
    Q w(total, n);
    w.canonicalize();
    return w;
}

std::vector<Z> catalan(int count) {
    std::vector<Z> c{1};
    for (int n = 1; n < count; ++n) {
        Z next = 0;
        for (int i = 0; i < n; ++i) next += c[i] * c[n - 1 - i];
        c.push_back(next);
    }
    return c;
}

}  // namespace oracle
