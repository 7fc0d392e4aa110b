#include "pairing.hpp"

#include "errors.hpp"

namespace bkit {

TorsionValue TorsionValue::reduce(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) fail(errc::zero_denominator, "torsion value with zero denominator");
    TorsionValue v;
    if (num.is_zero()) return v;
    // Strip the denominator's unit: den = lc * t^beta * D with D monic, D(0) != 0.
    auto [dq, beta] = den.to_qpoly();
    Rational lc = dq.leading();
    QPoly d = dq * (Rational(1) / lc);
    if (d.degree() == 0) return v; // unit denominator: the class is 0
    // Numerator, with the unit folded in: N = num * t^-beta / lc.
    LaurentPoly n = num.shifted(-beta) * (Rational(1) / lc);
    // Replace negative powers of t via the inverse of t modulo D.
    QPoly tinv = qpoly_inverse_mod(QPoly::x(), d);
    QPoly acc;
    for (const auto& [e, c] : n.terms()) {
        QPoly p = (e >= 0) ? QPoly::monomial(Rational(1), static_cast<size_t>(e))
                           : tinv.pow(static_cast<unsigned>(-e));
        acc = acc + qpoly_mod(p * QPoly(c), d);
    }
    acc = qpoly_mod(acc, d);
    if (acc.is_zero()) return v;
    QPoly g = qpoly_gcd(acc, d);
    if (g.degree() > 0) {
        acc = qpoly_exact_div(acc, g);
        d = qpoly_exact_div(d, g);
    }
    if (d.degree() == 0) return TorsionValue();
    v.num_ = std::move(acc);
    v.den_ = std::move(d);
    return v;
}

TorsionValue TorsionValue::reduce_q(const QPoly& num, const QPoly& den) {
    return reduce(LaurentPoly::from_qpoly(num, 0), LaurentPoly::from_qpoly(den, 0));
}

TorsionValue TorsionValue::operator-() const {
    TorsionValue v(*this);
    v.num_ = -v.num_;
    return v;
}

TorsionValue TorsionValue::operator+(const TorsionValue& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    return reduce_q(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

TorsionValue TorsionValue::bar() const {
    if (is_zero()) return *this;
    return reduce(num_laurent().bar(), den_laurent().bar());
}

TorsionValue TorsionValue::times(const LaurentPoly& lambda) const {
    if (is_zero() || lambda.is_zero()) return TorsionValue();
    return reduce(num_laurent() * lambda, den_laurent());
}

TorsionValue TorsionValue::times(const Rational& c) const {
    return times(LaurentPoly(c));
}

BlanchfieldForm make_form(AlexanderModule module, std::vector<TorsionValue> gram) {
    size_t p = module.rank();
    if (gram.size() != p * p) fail(errc::dimension_mismatch, "Gram matrix size mismatch");
    BlanchfieldForm f{std::move(module), std::move(gram)};
    for (size_t i = 0; i < p; ++i)
        for (size_t j = 0; j < p; ++j) {
            if (!f.g(i, j).times(f.module.factor(i)).is_zero() ||
                !f.g(i, j).times(f.module.factor(j)).is_zero())
                fail(errc::invalid_order, "Gram entry not annihilated by the factor orders");
        }
    return f;
}

bool is_hermitian_form(const BlanchfieldForm& f) {
    size_t p = f.module.rank();
    for (size_t i = 0; i < p; ++i)
        for (size_t j = 0; j < p; ++j)
            if (f.g(i, j) != f.g(j, i).bar()) return false;
    return true;
}

BlanchfieldForm pairing_from_matrix(const LambdaMatrix& a) {
    if (!is_hermitian(a)) fail(errc::not_hermitian, "presentation matrix is not hermitian");
    size_t n = a.size();
    FractionMatrix l = neg_inverse(a); // throws on singular input
    auto snf = smith_normal_form(a);

    // U^{-1} = adj(U) / det(U), det(U) a unit.
    LambdaMatrix u(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) u.at(i, j) = snf.U[i][j];
    LaurentPoly udet = det_of_rows(snf.U);
    auto unit = udet.as_unit();
    if (!unit) fail(errc::internal, "SNF row transform is not unimodular");
    LambdaMatrix uinv = adjugate(u);
    LaurentPoly unit_inv = LaurentPoly::monomial(Rational(1) / unit->scalar, -unit->exponent);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) uinv.at(i, j) = uinv.at(i, j) * unit_inv;

    // Generators of the SNF basis expressed on the meridians: g_i = sum_j
    // Uinv[j][i] m_j, so G[i][j] = sum_{k,l} Uinv[k][i] bar(Uinv[l][j]) L[l][k].
    std::vector<size_t> keep;
    for (size_t i = 0; i < n; ++i)
        if (!snf.diagonal[i].is_unit()) keep.push_back(i);
    // paper order: largest factor first
    std::vector<LaurentPoly> factors;
    for (auto it = keep.rbegin(); it != keep.rend(); ++it)
        factors.push_back(normalize_assoc(snf.diagonal[*it]));
    AlexanderModule module(std::move(factors));

    size_t p = keep.size();
    std::vector<TorsionValue> gram(p * p);
    for (size_t bi = 0; bi < p; ++bi)
        for (size_t bj = 0; bj < p; ++bj) {
            size_t i = keep[p - 1 - bi];
            size_t j = keep[p - 1 - bj];
            LaurentPoly acc;
            for (size_t k = 0; k < n; ++k) {
                if (uinv.at(k, i).is_zero()) continue;
                for (size_t m = 0; m < n; ++m)
                    acc += uinv.at(k, i) * uinv.at(m, j).bar() * l.num_at(m, k);
            }
            gram[bi * p + bj] = TorsionValue::reduce(acc, l.den);
        }
    BlanchfieldForm f = make_form(std::move(module), std::move(gram));
    if (!is_hermitian_form(f)) fail(errc::internal, "extracted pairing is not hermitian");
    return f;
}

TorsionValue evaluate_pairing(const BlanchfieldForm& f, const std::vector<LaurentPoly>& x,
                              const std::vector<LaurentPoly>& y) {
    size_t p = f.module.rank();
    if (x.size() != p || y.size() != p)
        fail(errc::dimension_mismatch, "coordinate length does not match the module rank");
    TorsionValue acc;
    for (size_t i = 0; i < p; ++i) {
        LaurentPoly xi = divmod(x[i], f.module.factor(i)).second;
        if (xi.is_zero()) continue;
        for (size_t j = 0; j < p; ++j) {
            LaurentPoly yj = divmod(y[j], f.module.factor(j)).second;
            if (yj.is_zero()) continue;
            acc = acc + f.g(i, j).times(xi * yj.bar());
        }
    }
    return acc;
}

namespace {

// delta * G[i][j] as an exact Lambda element.
LaurentPoly cleared_entry(const TorsionValue& v, const LaurentPoly& delta) {
    if (v.is_zero()) return LaurentPoly();
    return exact_div(delta * v.num_laurent(), v.den_laurent());
}

} // namespace

bool is_nondegenerate(const BlanchfieldForm& f) {
    size_t p = f.module.rank();
    if (p == 0) return true;
    const LaurentPoly& delta = f.module.annihilator();
    LambdaMatrix h(p);
    for (size_t i = 0; i < p; ++i)
        for (size_t j = 0; j < p; ++j) h.at(i, j) = cleared_entry(f.g(i, j), delta);
    for (const auto& row : kernel_mod(h, delta)) {
        for (size_t i = 0; i < p; ++i)
            if (!divides(f.module.factor(i), row[i])) return false;
    }
    return true;
}

std::vector<LaurentPoly> dual_element(const BlanchfieldForm& f, const std::vector<LaurentPoly>& gamma,
                                      const LaurentPoly& p_order) {
    size_t p = f.module.rank();
    if (gamma.size() != p) fail(errc::dimension_mismatch, "coordinate length mismatch");
    if (p_order.is_zero()) fail(errc::no_solution, "order must be nonzero");
    if (p == 0) fail(errc::no_solution, "trivial module has no dual elements");
    bool zero = true;
    for (size_t i = 0; i < p; ++i)
        if (!divides(f.module.factor(i), gamma[i])) zero = false;
    if (zero) fail(errc::no_solution, "gamma is zero in the module");

    const LaurentPoly& delta = f.module.annihilator();
    if (!divides(p_order, delta)) fail(errc::no_solution, "order does not divide the annihilator");
    LaurentPoly target = exact_div(delta, p_order);

    // w_j = delta * phi(gamma, e_j) in Lambda
    std::vector<LaurentPoly> w(p);
    for (size_t j = 0; j < p; ++j) {
        LaurentPoly acc;
        for (size_t i = 0; i < p; ++i) {
            LaurentPoly gi = divmod(gamma[i], f.module.factor(i)).second;
            if (gi.is_zero()) continue;
            acc += gi * cleared_entry(f.g(i, j), delta);
        }
        w[j] = acc;
    }

    // gcd(delta, w_1, ..., w_p) with Bezout certificates:
    // g = m*delta + sum c_j w_j
    LaurentPoly g = delta;
    std::vector<LaurentPoly> c(p);
    for (size_t j = 0; j < p; ++j) {
        if (w[j].is_zero()) continue;
        auto [g2, u, v] = gcd_ext(g, w[j]);
        for (auto& ck : c) ck = u * ck;
        c[j] += v;
        g = g2;
    }
    if (!divides(g, target)) fail(errc::no_solution, "pairing congruence unsolvable (precondition violated)");
    LaurentPoly scale = exact_div(target, g);
    std::vector<LaurentPoly> eta(p);
    for (size_t j = 0; j < p; ++j) eta[j] = divmod((scale * c[j]).bar(), f.module.factor(j)).second;

    TorsionValue got = evaluate_pairing(f, gamma, eta);
    TorsionValue want = TorsionValue::reduce(LaurentPoly(Rational(1)), p_order);
    if (got != want) fail(errc::no_solution, "dual element verification failed (precondition violated)");
    return eta;
}

} // namespace bkit
