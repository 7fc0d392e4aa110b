#ifndef BKIT_QPOLY_HPP
#define BKIT_QPOLY_HPP

#include "rational.hpp"

#include <tuple>
#include <vector>

namespace bkit {

// Dense univariate polynomial over Q. coeffs()[i] is the coefficient of x^i;
// the vector is always trimmed, so the zero polynomial is the empty vector.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(const Rational& c);
    explicit QPoly(std::vector<Rational> coeffs);

    static QPoly monomial(const Rational& c, size_t deg);
    static QPoly x();

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const Rational& leading() const { return c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool operator==(const QPoly& o) const { return c_ == o.c_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }

    QPoly operator-() const;
    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator*(const Rational& c) const;

    QPoly pow(unsigned n) const;
    QPoly derivative() const;
    Rational evaluate_at(const Rational& x) const;

    // Substitute another polynomial for x.
    QPoly compose(const QPoly& inner) const;

private:
    std::vector<Rational> c_;
    void trim();
};

// a = q*b + r with deg(r) < deg(b). Throws zero_divisor on b = 0.
std::pair<QPoly, QPoly> qpoly_divmod(const QPoly& a, const QPoly& b);

// Exact quotient; throws internal if the division leaves a remainder.
QPoly qpoly_exact_div(const QPoly& a, const QPoly& b);

bool qpoly_divides(const QPoly& b, const QPoly& a);

// Monic gcd; gcd(0,0) = 0.
QPoly qpoly_gcd(QPoly a, QPoly b);

// Returns (g, u, v) with u*a + v*b = g, g monic (or zero).
std::tuple<QPoly, QPoly, QPoly> qpoly_ext_gcd(const QPoly& a, const QPoly& b);

// Inverse of a modulo m (gcd(a, m) must be 1).
QPoly qpoly_inverse_mod(const QPoly& a, const QPoly& m);

QPoly qpoly_mod(const QPoly& a, const QPoly& m);

// Splits p as content * primitive where primitive has coprime integer
// coefficients and positive leading coefficient.
std::pair<Rational, std::vector<BigInt>> qpoly_to_integer(const QPoly& p);
QPoly qpoly_from_integer(const std::vector<BigInt>& z);

} // namespace bkit

#endif
