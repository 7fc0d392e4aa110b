#include "qpoly.hpp"

#include "errors.hpp"

namespace bkit {

void QPoly::trim() {
    while (!c_.empty() && bkit::is_zero(c_.back())) c_.pop_back();
}

QPoly::QPoly(const Rational& c) {
    if (!bkit::is_zero(c)) c_.push_back(c);
}

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(const Rational& c, size_t deg) {
    QPoly p;
    if (bkit::is_zero(c)) return p;
    p.c_.assign(deg + 1, Rational(0));
    p.c_[deg] = c;
    return p;
}

QPoly QPoly::x() { return monomial(Rational(1), 1); }

QPoly QPoly::operator-() const {
    QPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const Rational& c) const {
    if (bkit::is_zero(c)) return QPoly();
    QPoly r(*this);
    for (auto& x : r.c_) x *= c;
    return r;
}

QPoly QPoly::pow(unsigned n) const {
    QPoly r(Rational(1));
    QPoly base(*this);
    while (n) {
        if (n & 1u) r = r * base;
        base = base * base;
        n >>= 1u;
    }
    return r;
}

QPoly QPoly::derivative() const {
    if (c_.size() <= 1) return QPoly();
    std::vector<Rational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return QPoly(std::move(r));
}

Rational QPoly::evaluate_at(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

QPoly QPoly::compose(const QPoly& inner) const {
    QPoly acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * inner + QPoly(c_[i]);
    return acc;
}

std::pair<QPoly, QPoly> qpoly_divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) fail(errc::zero_divisor, "polynomial division by zero");
    if (a.degree() < b.degree()) return {QPoly(), a};
    std::vector<Rational> rem(a.coeffs());
    std::vector<Rational> quot(a.degree() - b.degree() + 1, Rational(0));
    const Rational& lc = b.leading();
    for (int i = a.degree(); i >= b.degree(); --i) {
        if (bkit::is_zero(rem[i])) continue;
        Rational f = rem[i] / lc;
        quot[i - b.degree()] = f;
        for (int j = 0; j <= b.degree(); ++j) rem[i - b.degree() + j] -= f * b.coeff(j);
    }
    return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly qpoly_exact_div(const QPoly& a, const QPoly& b) {
    auto [q, r] = qpoly_divmod(a, b);
    if (!r.is_zero()) fail(errc::internal, "inexact polynomial division");
    return q;
}

bool qpoly_divides(const QPoly& b, const QPoly& a) {
    if (b.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    return qpoly_divmod(a, b).second.is_zero();
}

QPoly qpoly_gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = qpoly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (Rational(1) / a.leading());
}

std::tuple<QPoly, QPoly, QPoly> qpoly_ext_gcd(const QPoly& a, const QPoly& b) {
    QPoly r0 = a, r1 = b;
    QPoly u0(Rational(1)), u1;
    QPoly v0, v1(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r2] = qpoly_divmod(r0, r1);
        QPoly u2 = u0 - q * u1;
        QPoly v2 = v0 - q * v1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (r0.is_zero()) return {QPoly(), QPoly(), QPoly()};
    Rational inv = Rational(1) / r0.leading();
    return {r0 * inv, u0 * inv, v0 * inv};
}

QPoly qpoly_inverse_mod(const QPoly& a, const QPoly& m) {
    auto [g, u, v] = qpoly_ext_gcd(a, m);
    (void)v;
    if (g.degree() != 0) fail(errc::not_unit, "element not invertible modulo the given polynomial");
    return qpoly_divmod(u, m).second;
}

QPoly qpoly_mod(const QPoly& a, const QPoly& m) { return qpoly_divmod(a, m).second; }

std::pair<Rational, std::vector<BigInt>> qpoly_to_integer(const QPoly& p) {
    if (p.is_zero()) return {Rational(0), {}};
    BigInt den_lcm(1);
    for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<BigInt> z(p.coeffs().size());
    BigInt content(0);
    for (size_t i = 0; i < z.size(); ++i) {
        Rational scaled = p.coeffs()[i] * Rational(den_lcm);
        z[i] = scaled.get_num();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z[i].get_mpz_t());
    }
    if (sgn(z.back()) < 0) content = -content;
    for (auto& c : z) c /= content;
    return {Rational(content, den_lcm), z};
}

QPoly qpoly_from_integer(const std::vector<BigInt>& z) {
    std::vector<Rational> c(z.size());
    for (size_t i = 0; i < z.size(); ++i) c[i] = Rational(z[i]);
    return QPoly(std::move(c));
}

} // namespace bkit
