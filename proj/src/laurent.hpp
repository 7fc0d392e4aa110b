#ifndef BKIT_LAURENT_HPP
#define BKIT_LAURENT_HPP

#include "qpoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>

namespace bkit {

class SymmetricPoly;

// A unit of Q[t,t^-1]: scalar * t^exponent with scalar != 0.
struct UnitFactor {
    Rational scalar{1};
    int exponent{0};

    bool operator==(const UnitFactor&) const = default;
};

// Laurent polynomial over Q with exact rational coefficients. Stored as a
// sparse exponent -> coefficient map holding no zero entries.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c);

    static LaurentPoly monomial(const Rational& c, int exp);
    static LaurentPoly t();
    static LaurentPoly one_plus_t();
    // Builds from strictly increasing (exponent, coefficient) pairs.
    static LaurentPoly from_pairs(const std::vector<std::pair<int, Rational>>& pairs);
    static LaurentPoly from_qpoly(const QPoly& p, int shift = 0);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    bool is_unit() const; // nonzero scalar * t^k
    std::optional<UnitFactor> as_unit() const;

    int low_exp() const;  // requires nonzero
    int high_exp() const; // requires nonzero
    std::optional<int> span_degree() const;
    Rational coeff(int exp) const;
    const std::map<int, Rational>& terms() const { return c_; }
    size_t term_count() const { return c_.size(); }

    bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    // Arbitrary total order, used for deterministic sorting.
    bool operator<(const LaurentPoly& o) const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const Rational& c) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly pow(unsigned n) const;
    LaurentPoly shifted(int dexp) const; // * t^dexp

    // The bar involution p(t) -> p(1/t).
    LaurentPoly bar() const;
    bool is_bar_fixed() const { return *this == bar(); }

    Rational evaluate_at(const Rational& x) const; // throws zero_point at x = 0

    // Largest m with (1+t)^m dividing p. Throws zero_input.
    int multiplicity_minus_one() const;

    // Ordinary-polynomial view: p = t^shift * poly with poly(0) != 0.
    std::pair<QPoly, int> to_qpoly() const; // requires nonzero

    std::string to_string() const; // human-readable, for diagnostics

private:
    std::map<int, Rational> c_;
    void set(int exp, const Rational& c);
};

// Polynomial in s = t + 1/t; the image of bar-fixed Laurent polynomials.
class SymmetricPoly {
public:
    SymmetricPoly() = default;
    explicit SymmetricPoly(const Rational& c) : p_(c) {}
    explicit SymmetricPoly(QPoly p) : p_(std::move(p)) {}

    static SymmetricPoly s();

    bool is_zero() const { return p_.is_zero(); }
    int degree() const { return p_.degree(); }
    const QPoly& poly() const { return p_; }
    Rational coeff(size_t i) const { return p_.coeff(i); }
    Rational evaluate_at(const Rational& s) const { return p_.evaluate_at(s); }

    bool operator==(const SymmetricPoly& o) const { return p_ == o.p_; }
    bool operator!=(const SymmetricPoly& o) const { return !(*this == o); }

    SymmetricPoly operator-() const { return SymmetricPoly(-p_); }
    SymmetricPoly operator+(const SymmetricPoly& o) const { return SymmetricPoly(p_ + o.p_); }
    SymmetricPoly operator-(const SymmetricPoly& o) const { return SymmetricPoly(p_ - o.p_); }
    SymmetricPoly operator*(const SymmetricPoly& o) const { return SymmetricPoly(p_ * o.p_); }
    SymmetricPoly operator*(const Rational& c) const { return SymmetricPoly(p_ * c); }
    SymmetricPoly pow(unsigned n) const { return SymmetricPoly(p_.pow(n)); }

private:
    QPoly p_;
};

// --- laurent_algebra operations ---

// Quotient/remainder with a = q*b + rem and span(rem) < span(b) (or rem = 0).
// Both inputs are shifted by the smaller of the two lowest exponents and then
// divided as ordinary polynomials.
std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);
bool divides(const LaurentPoly& b, const LaurentPoly& a);

// Decides a = unit * b; returns the unit applied to b, or nullopt.
std::optional<UnitFactor> unit_quotient(const LaurentPoly& a, const LaurentPoly& b);
bool associated(const LaurentPoly& a, const LaurentPoly& b);

// gcd normalized monic with lowest exponent 0, plus Bezout u*a + v*b = g.
std::tuple<LaurentPoly, LaurentPoly, LaurentPoly> gcd_ext(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Monic, lowest exponent 0: the canonical representative of the unit class.
LaurentPoly normalize_assoc(const LaurentPoly& p);

// The s-expression of the unique monic bar-fixed unit multiple of p, when one
// exists (p must have a bar-fixed unit multiple of even span).
std::optional<SymmetricPoly> normalize_symmetric(const LaurentPoly& p);

// Exact substitution s -> t + 1/t.
LaurentPoly s_substitute(const SymmetricPoly& q);

// Inverse of s_substitute on exactly bar-fixed inputs; throws precondition
// when p != bar(p).
SymmetricPoly to_symmetric(const LaurentPoly& p);

std::pair<SymmetricPoly, SymmetricPoly> divmod(const SymmetricPoly& a, const SymmetricPoly& b);
SymmetricPoly symmetric_gcd(const SymmetricPoly& a, const SymmetricPoly& b);
SymmetricPoly symmetric_mod(const SymmetricPoly& a, const SymmetricPoly& m);
SymmetricPoly symmetric_inverse_mod(const SymmetricPoly& a, const SymmetricPoly& m);

LaurentPoly unit_to_laurent(const UnitFactor& u);

} // namespace bkit

#endif
