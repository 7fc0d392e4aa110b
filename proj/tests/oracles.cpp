#include "oracles.hpp"

#include "errors.hpp"
#include "qpoly.hpp"

#include <algorithm>

namespace bkit::oracles {

namespace {

std::vector<BigInt> signed_divisors(const BigInt& n) {
    std::vector<BigInt> out;
    BigInt a = abs(n);
    for (BigInt d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            out.push_back(-d);
            BigInt e = a / d;
            if (e != d) {
                out.push_back(e);
                out.push_back(-e);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Strips all rational roots (with multiplicity); returns linear factors.
void strip_rational_roots(QPoly& f, std::vector<QPoly>& out) {
    bool found = true;
    while (found && f.degree() >= 1) {
        found = false;
        auto [c_lead, z] = qpoly_to_integer(f);
        (void)c_lead;
        BigInt lead = z.back();
        BigInt constant = z.front();
        for (const auto& r : signed_divisors(constant)) {
            for (const auto& s : signed_divisors(lead)) {
                if (s < 0) continue;
                BigInt g;
                mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t());
                if (g != 1) continue;
                Rational root(r, s);
                root.canonicalize();
                if (f.evaluate_at(root) == 0) {
                    QPoly lin(std::vector<Rational>{Rational(-r), Rational(s)});
                    out.push_back(lin);
                    f = qpoly_exact_div(f, lin);
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
    }
}

void factor_degree4(QPoly f, std::vector<QPoly>& out) {
    // no rational roots at this point, degree exactly 4
    Rational f0 = f.evaluate_at(Rational(0));
    Rational f1 = f.evaluate_at(Rational(1));
    Rational fm1 = f.evaluate_at(Rational(-1));
    auto [cl, z] = qpoly_to_integer(f);
    (void)cl;
    QPoly fz = qpoly_from_integer(z);
    BigInt v0 = fz.evaluate_at(Rational(0)).get_num();
    BigInt v1 = fz.evaluate_at(Rational(1)).get_num();
    BigInt vm1 = fz.evaluate_at(Rational(-1)).get_num();
    (void)f0;
    (void)f1;
    (void)fm1;
    for (const auto& d0 : signed_divisors(v0)) {
        for (const auto& d1 : signed_divisors(v1)) {
            for (const auto& d2 : signed_divisors(vm1)) {
                // q(0)=d0, q(1)=d1, q(-1)=d2: q = d0 + b x + a x^2
                BigInt two_b = d1 - d2;
                BigInt two_a = d1 + d2 - 2 * d0;
                if (mpz_odd_p(two_b.get_mpz_t()) || mpz_odd_p(two_a.get_mpz_t())) continue;
                BigInt a = two_a / 2, b = two_b / 2;
                if (a == 0) continue;
                QPoly q(std::vector<Rational>{Rational(d0), Rational(b), Rational(a)});
                if (qpoly_divides(q, fz)) {
                    QPoly cof = qpoly_exact_div(fz, q);
                    out.push_back(q);
                    out.push_back(cof);
                    return;
                }
            }
        }
    }
    out.push_back(fz); // irreducible quartic
}

} // namespace

std::vector<LaurentPoly> kronecker_factor(const LaurentPoly& p) {
    if (p.is_zero()) fail(errc::zero_input, "oracle factorization of zero");
    auto [q, shift] = p.to_qpoly();
    (void)shift;
    if (q.degree() > 4) fail(errc::precondition, "oracle only handles span degree <= 4");
    std::vector<QPoly> parts;
    strip_rational_roots(q, parts);
    if (q.degree() == 4) {
        factor_degree4(q, parts);
    } else if (q.degree() >= 1) {
        parts.push_back(q); // degree 2 or 3 without rational roots: irreducible
    }
    std::vector<LaurentPoly> out;
    for (const auto& f : parts) out.push_back(normalize_assoc(LaurentPoly::from_qpoly(f, 0)));
    return out;
}

std::map<LaurentPoly, int> kronecker_multiset(const LaurentPoly& p) {
    std::map<LaurentPoly, int> m;
    for (const auto& f : kronecker_factor(p)) m[f] += 1;
    return m;
}

} // namespace bkit::oracles
