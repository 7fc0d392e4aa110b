#ifndef BKIT_TEST_UTIL_HPP
#define BKIT_TEST_UTIL_HPP

#include "laurent.hpp"

#include <random>
#include <vector>

namespace bkit::testutil {

// Shorthand for building Laurent polynomials in tests: L({{exp, num, den}...}).
inline LaurentPoly L(const std::vector<std::tuple<int, long, long>>& terms) {
    LaurentPoly p;
    for (const auto& [e, n, d] : terms) {
        Rational c(n, d);
        c.canonicalize();
        p = p + LaurentPoly::monomial(c, e);
    }
    return p;
}

inline LaurentPoly Li(const std::vector<std::pair<int, long>>& terms) {
    LaurentPoly p;
    for (const auto& [e, n] : terms) p = p + LaurentPoly::monomial(Rational(n), e);
    return p;
}

inline Rational random_rational(std::mt19937_64& rng, long height) {
    std::uniform_int_distribution<long> num(-height, height);
    std::uniform_int_distribution<long> den(1, height);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline LaurentPoly random_laurent(std::mt19937_64& rng, int max_span, long height, bool allow_zero = true) {
    std::uniform_int_distribution<int> span(0, max_span);
    std::uniform_int_distribution<int> low(-max_span, max_span);
    int s = span(rng);
    int lo = low(rng);
    LaurentPoly p;
    for (int e = lo; e <= lo + s; ++e) p = p + LaurentPoly::monomial(random_rational(rng, height), e);
    if (!allow_zero && p.is_zero()) return LaurentPoly(Rational(1)) + LaurentPoly::t();
    return p;
}

inline LaurentPoly random_nonzero_laurent(std::mt19937_64& rng, int max_span, long height) {
    for (int i = 0; i < 64; ++i) {
        auto p = random_laurent(rng, max_span, height);
        if (!p.is_zero()) return p;
    }
    return LaurentPoly(Rational(1));
}

// Random exactly bar-fixed polynomial (for hermitian diagonals).
inline LaurentPoly random_symmetric_laurent(std::mt19937_64& rng, int max_halfspan, long height) {
    std::uniform_int_distribution<int> half(0, max_halfspan);
    int m = half(rng);
    LaurentPoly p(random_rational(rng, height));
    for (int k = 1; k <= m; ++k) {
        Rational c = random_rational(rng, height);
        p = p + LaurentPoly::monomial(c, k) + LaurentPoly::monomial(c, -k);
    }
    return p;
}

} // namespace bkit::testutil

#include "linalg.hpp"

namespace bkit::testutil {

inline LambdaMatrix random_hermitian(std::mt19937_64& rng, size_t n, int max_span, long height) {
    LambdaMatrix a(n);
    for (size_t i = 0; i < n; ++i) {
        a.at(i, i) = random_symmetric_laurent(rng, max_span / 2, height);
        for (size_t j = i + 1; j < n; ++j) {
            a.at(i, j) = random_laurent(rng, max_span, height);
            a.at(j, i) = a.at(i, j).bar();
        }
    }
    return a;
}

inline LambdaMatrix random_admissible_hermitian(std::mt19937_64& rng, size_t n, int max_span, long height) {
    for (int tries = 0; tries < 1000; ++tries) {
        auto a = random_hermitian(rng, n, max_span, height);
        if (is_admissible(a)) return a;
    }
    // fall back to a diagonal that is always admissible
    LambdaMatrix a(n);
    for (size_t i = 0; i < n; ++i) a.at(i, i) = LaurentPoly(Rational(1));
    return a;
}

// Random unimodular matrix: a product of elementary operations.
inline LambdaMatrix random_unimodular(std::mt19937_64& rng, size_t n, int ops, int max_span, long height) {
    LambdaMatrix u = LambdaMatrix::identity(n);
    if (n < 2) return u;
    std::uniform_int_distribution<size_t> pick(0, n - 1);
    for (int k = 0; k < ops; ++k) {
        size_t i = pick(rng), j = pick(rng);
        if (i == j) continue;
        LaurentPoly lambda = random_laurent(rng, max_span, height);
        for (size_t c = 0; c < n; ++c) u.at(i, c) += lambda * u.at(j, c);
    }
    return u;
}

inline bool check_snf_identity(const LambdaMatrix& a, const SnfResult& snf) {
    size_t n = a.size();
    LambdaMatrix u(n), v(n), d(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            u.at(i, j) = snf.U[i][j];
            v.at(i, j) = snf.V[i][j];
        }
    for (size_t i = 0; i < n; ++i) d.at(i, i) = snf.diagonal[i];
    return (u * LambdaMatrix(a) * v) == d;
}

} // namespace bkit::testutil

#endif
