#include "laurent.hpp"

#include "errors.hpp"

#include <sstream>

namespace bkit {

void LaurentPoly::set(int exp, const Rational& c) {
    if (bkit::is_zero(c))
        c_.erase(exp);
    else
        c_[exp] = c;
}

LaurentPoly::LaurentPoly(const Rational& c) { set(0, c); }

LaurentPoly LaurentPoly::monomial(const Rational& c, int exp) {
    LaurentPoly p;
    p.set(exp, c);
    return p;
}

LaurentPoly LaurentPoly::t() { return monomial(Rational(1), 1); }

LaurentPoly LaurentPoly::one_plus_t() {
    LaurentPoly p;
    p.set(0, Rational(1));
    p.set(1, Rational(1));
    return p;
}

LaurentPoly LaurentPoly::from_pairs(const std::vector<std::pair<int, Rational>>& pairs) {
    LaurentPoly p;
    for (const auto& [e, c] : pairs) {
        if (p.c_.count(e)) fail(errc::parse_error, "duplicate exponent in polynomial");
        p.set(e, c);
    }
    return p;
}

LaurentPoly LaurentPoly::from_qpoly(const QPoly& p, int shift) {
    LaurentPoly r;
    for (int i = 0; i <= p.degree(); ++i) r.set(i + shift, p.coeff(static_cast<size_t>(i)));
    return r;
}

bool LaurentPoly::is_one() const { return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1; }

bool LaurentPoly::is_unit() const { return c_.size() == 1; }

std::optional<UnitFactor> LaurentPoly::as_unit() const {
    if (!is_unit()) return std::nullopt;
    return UnitFactor{c_.begin()->second, c_.begin()->first};
}

int LaurentPoly::low_exp() const {
    if (is_zero()) fail(errc::zero_input, "zero polynomial has no exponent range");
    return c_.begin()->first;
}

int LaurentPoly::high_exp() const {
    if (is_zero()) fail(errc::zero_input, "zero polynomial has no exponent range");
    return c_.rbegin()->first;
}

std::optional<int> LaurentPoly::span_degree() const {
    if (is_zero()) return std::nullopt;
    return high_exp() - low_exp();
}

Rational LaurentPoly::coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? Rational(0) : it->second;
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    auto a = c_.begin();
    auto b = o.c_.begin();
    for (; a != c_.end(); ++a, ++b) {
        if (a->first != b->first) return a->first < b->first;
        int c = cmp(a->second, b->second);
        if (c != 0) return c < 0;
    }
    return false;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(*this);
    for (auto& [e, c] : r.c_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r(*this);
    for (const auto& [e, c] : o.c_) r.set(e, r.coeff(e) + c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r(*this);
    for (const auto& [e, c] : o.c_) r.set(e, r.coeff(e) - c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : c_)
        for (const auto& [e2, c2] : o.c_) r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::operator*(const Rational& c) const {
    LaurentPoly r;
    if (bkit::is_zero(c)) return r;
    for (const auto& [e, v] : c_) r.c_[e] = v * c;
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
    LaurentPoly r(Rational(1));
    LaurentPoly base(*this);
    while (n) {
        if (n & 1u) r = r * base;
        base = base * base;
        n >>= 1u;
    }
    return r;
}

LaurentPoly LaurentPoly::shifted(int dexp) const {
    LaurentPoly r;
    for (const auto& [e, c] : c_) r.c_[e + dexp] = c;
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : c_) r.c_[-e] = c;
    return r;
}

Rational LaurentPoly::evaluate_at(const Rational& x) const {
    if (bkit::is_zero(x)) fail(errc::zero_point, "cannot evaluate a Laurent polynomial at 0");
    Rational inv = Rational(1) / x;
    Rational acc(0);
    for (const auto& [e, c] : c_) {
        Rational p(1);
        Rational base = e >= 0 ? x : inv;
        for (int i = 0; i < std::abs(e); ++i) p *= base;
        acc += c * p;
    }
    return acc;
}

int LaurentPoly::multiplicity_minus_one() const {
    if (is_zero()) fail(errc::zero_input, "multiplicity of a root of the zero polynomial");
    LaurentPoly p = *this;
    LaurentPoly opt = one_plus_t();
    int m = 0;
    while (true) {
        if (!bkit::is_zero(p.evaluate_at(Rational(-1)))) return m;
        p = exact_div(p, opt);
        ++m;
    }
}

std::pair<QPoly, int> LaurentPoly::to_qpoly() const {
    if (is_zero()) fail(errc::zero_input, "zero polynomial has no ordinary form");
    int shift = low_exp();
    std::vector<Rational> c(static_cast<size_t>(high_exp() - shift) + 1, Rational(0));
    for (const auto& [e, v] : c_) c[static_cast<size_t>(e - shift)] = v;
    return {QPoly(std::move(c)), shift};
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : c_) {
        if (!first) out << (sgn(c) >= 0 ? " + " : " - ");
        else if (sgn(c) < 0)
            out << "-";
        Rational a = abs(c);
        if (e == 0 || a != 1) out << rational_to_string(a);
        if (e != 0) {
            if (a != 1) out << "*";
            out << "t";
            if (e != 1) out << "^" << e;
        }
        first = false;
    }
    return out.str();
}

SymmetricPoly SymmetricPoly::s() { return SymmetricPoly(QPoly::x()); }

std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) fail(errc::zero_divisor, "division by the zero polynomial");
    if (a.is_zero()) return {LaurentPoly(), LaurentPoly()};
    // Divide t^-m a by t^-beta b as ordinary polynomials, where m is the
    // smaller of the two lowest exponents; q picks up the t^(m-beta) factor
    // and rem = t^m R keeps span(rem) < span(b).
    int alpha = a.low_exp();
    int beta = b.low_exp();
    int m = std::min(alpha, beta);
    auto [A0, ashift] = a.to_qpoly();
    (void)ashift;
    QPoly A = A0 * QPoly::monomial(Rational(1), static_cast<size_t>(alpha - m));
    auto [B, bshift] = b.to_qpoly();
    (void)bshift;
    auto [q, r] = qpoly_divmod(A, B);
    return {LaurentPoly::from_qpoly(q, m - beta), LaurentPoly::from_qpoly(r, m)};
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) fail(errc::internal, "inexact Laurent division");
    return q;
}

bool divides(const LaurentPoly& b, const LaurentPoly& a) {
    if (b.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    return divmod(a, b).second.is_zero();
}

std::optional<UnitFactor> unit_quotient(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) fail(errc::zero_input, "unit comparison with the zero polynomial");
    if (a.term_count() != b.term_count()) return std::nullopt;
    if (a.span_degree() != b.span_degree()) return std::nullopt;
    int k = a.low_exp() - b.low_exp();
    Rational lambda = a.terms().begin()->second / b.terms().begin()->second;
    auto ita = a.terms().begin();
    auto itb = b.terms().begin();
    for (; ita != a.terms().end(); ++ita, ++itb) {
        if (ita->first != itb->first + k) return std::nullopt;
        if (ita->second != itb->second * lambda) return std::nullopt;
    }
    return UnitFactor{lambda, k};
}

bool associated(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return unit_quotient(a, b).has_value();
}

LaurentPoly normalize_assoc(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    auto [q, shift] = p.to_qpoly();
    (void)shift;
    return LaurentPoly::from_qpoly(q * (Rational(1) / q.leading()), 0);
}

std::tuple<LaurentPoly, LaurentPoly, LaurentPoly> gcd_ext(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) fail(errc::zero_input, "gcd(0, 0)");
    if (a.is_zero()) {
        LaurentPoly g = normalize_assoc(b);
        // b = u * g with u a unit; v = 1/u.
        LaurentPoly v = exact_div(g, b);
        return {g, LaurentPoly(), v};
    }
    if (b.is_zero()) {
        LaurentPoly g = normalize_assoc(a);
        LaurentPoly u = exact_div(g, a);
        return {g, u, LaurentPoly()};
    }
    auto [A, sa] = a.to_qpoly();
    auto [B, sb] = b.to_qpoly();
    auto [g, u, v] = qpoly_ext_gcd(A, B);
    // u*A + v*B = g, A = t^-sa * a, B = t^-sb * b.
    LaurentPoly G = LaurentPoly::from_qpoly(g, 0);
    LaurentPoly U = LaurentPoly::from_qpoly(u, -sa);
    LaurentPoly V = LaurentPoly::from_qpoly(v, -sb);
    // g already monic with nonzero constant term, i.e. lowest exponent 0.
    return {G, U, V};
}

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return LaurentPoly();
    if (a.is_zero()) return normalize_assoc(b);
    if (b.is_zero()) return normalize_assoc(a);
    auto [A, sa] = a.to_qpoly();
    auto [B, sb] = b.to_qpoly();
    (void)sa;
    (void)sb;
    return LaurentPoly::from_qpoly(qpoly_gcd(A, B), 0);
}

LaurentPoly s_substitute(const SymmetricPoly& q) {
    LaurentPoly s = LaurentPoly::monomial(Rational(1), 1) + LaurentPoly::monomial(Rational(1), -1);
    LaurentPoly acc;
    for (int i = q.degree(); i >= 0; --i) acc = acc * s + LaurentPoly(q.coeff(static_cast<size_t>(i)));
    return acc;
}

SymmetricPoly to_symmetric(const LaurentPoly& p) {
    if (!p.is_bar_fixed()) fail(errc::precondition, "polynomial is not bar-fixed");
    LaurentPoly rest = p;
    QPoly acc;
    // Peel off the top exponent with s^m; the remainder stays bar-fixed.
    while (!rest.is_zero()) {
        int m = rest.high_exp();
        if (m < 0) fail(errc::internal, "bar-fixed polynomial with negative top exponent");
        Rational c = rest.coeff(m);
        acc = acc + QPoly::monomial(c, static_cast<size_t>(m));
        SymmetricPoly sm(QPoly::monomial(c, static_cast<size_t>(m)));
        rest = rest - s_substitute(sm);
    }
    return SymmetricPoly(acc);
}

std::optional<SymmetricPoly> normalize_symmetric(const LaurentPoly& p) {
    if (p.is_zero()) fail(errc::zero_input, "cannot normalize the zero polynomial");
    auto u = unit_quotient(p.bar(), p);
    if (!u) return std::nullopt;
    // bar(p) = lambda t^k p; the shifted multiple t^(k/2) p is bar-fixed only
    // when lambda = 1 and k is even.
    if (u->scalar != 1 || (u->exponent % 2) != 0) return std::nullopt;
    LaurentPoly fixed = p.shifted(u->exponent / 2);
    SymmetricPoly s = to_symmetric(fixed);
    Rational lead = s.coeff(static_cast<size_t>(s.degree()));
    return s * (Rational(1) / lead);
}

std::pair<SymmetricPoly, SymmetricPoly> divmod(const SymmetricPoly& a, const SymmetricPoly& b) {
    auto [q, r] = qpoly_divmod(a.poly(), b.poly());
    return {SymmetricPoly(std::move(q)), SymmetricPoly(std::move(r))};
}

SymmetricPoly symmetric_gcd(const SymmetricPoly& a, const SymmetricPoly& b) {
    return SymmetricPoly(qpoly_gcd(a.poly(), b.poly()));
}

SymmetricPoly symmetric_mod(const SymmetricPoly& a, const SymmetricPoly& m) {
    return SymmetricPoly(qpoly_mod(a.poly(), m.poly()));
}

SymmetricPoly symmetric_inverse_mod(const SymmetricPoly& a, const SymmetricPoly& m) {
    return SymmetricPoly(qpoly_inverse_mod(a.poly(), m.poly()));
}

LaurentPoly unit_to_laurent(const UnitFactor& u) { return LaurentPoly::monomial(u.scalar, u.exponent); }

} // namespace bkit
