#include "factor.hpp"

#include "errors.hpp"

#include <algorithm>
#include <cstdint>

namespace bkit {

namespace {

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x], p an odd prime below 2^31. Polynomials are coefficient
// vectors (index = degree), trimmed, values in [0, p).
// ---------------------------------------------------------------------------

using FpPoly = std::vector<int64_t>;

void fp_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int64_t fp_inv(int64_t a, int64_t p) {
    int64_t t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        int64_t q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    return ((t % p) + p) % p;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, int64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    fp_trim(r);
    return r;
}

FpPoly fp_sub(FpPoly a, const FpPoly& b, int64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] - b[i] % p + p) % p;
    fp_trim(a);
    return a;
}

// a mod b, destructive on a
FpPoly fp_mod(FpPoly a, const FpPoly& b, int64_t p) {
    int64_t lcinv = fp_inv(b.back(), p);
    while (a.size() >= b.size()) {
        int64_t f = a.back() * lcinv % p;
        size_t off = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j) a[off + j] = (a[off + j] - f * b[j] % p + p) % p;
        fp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

std::pair<FpPoly, FpPoly> fp_divmod(FpPoly a, const FpPoly& b, int64_t p) {
    if (a.size() < b.size()) return {{}, a};
    FpPoly q(a.size() - b.size() + 1, 0);
    int64_t lcinv = fp_inv(b.back(), p);
    while (a.size() >= b.size()) {
        int64_t f = a.back() * lcinv % p;
        size_t off = a.size() - b.size();
        q[off] = f;
        for (size_t j = 0; j < b.size(); ++j) a[off + j] = (a[off + j] - f * b[j] % p + p) % p;
        fp_trim(a);
        if (a.empty()) break;
    }
    fp_trim(q);
    return {q, a};
}

FpPoly fp_gcd(FpPoly a, FpPoly b, int64_t p) {
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        int64_t inv = fp_inv(a.back(), p);
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

FpPoly fp_monic(FpPoly a, int64_t p) {
    if (a.empty()) return a;
    int64_t inv = fp_inv(a.back(), p);
    for (auto& c : a) c = c * inv % p;
    return a;
}

FpPoly fp_derivative(const FpPoly& a, int64_t p) {
    if (a.size() <= 1) return {};
    FpPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = static_cast<int64_t>(i % p) * a[i] % p;
    fp_trim(r);
    return r;
}

// base^e mod f, with e given as a GMP integer
FpPoly fp_powmod(FpPoly base, const BigInt& e, const FpPoly& f, int64_t p) {
    FpPoly result{1};
    base = fp_mod(std::move(base), f, p);
    BigInt n = e;
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) result = fp_mod(fp_mul(result, base, p), f, p);
        base = fp_mod(fp_mul(base, base, p), f, p);
        n >>= 1;
    }
    return result;
}

// Deterministic pseudo-random polynomial source for equal-degree splitting.
struct SplitRng {
    uint64_t state;
    explicit SplitRng(uint64_t seed) : state(seed * 6364136223846793005ULL + 1442695040888963407ULL) {}
    uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 17;
    }
};

void fp_edf(const FpPoly& f, int d, int64_t p, SplitRng& rng, std::vector<FpPoly>& out) {
    int deg = static_cast<int>(f.size()) - 1;
    if (deg == d) {
        out.push_back(f);
        return;
    }
    // Cantor-Zassenhaus splitting with exponent (p^d - 1)/2.
    BigInt m;
    mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
    m = (m - 1) / 2;
    while (true) {
        FpPoly r(static_cast<size_t>(deg), 0);
        for (auto& c : r) c = static_cast<int64_t>(rng.next() % static_cast<uint64_t>(p));
        fp_trim(r);
        if (r.size() <= 1) continue;
        FpPoly w = fp_powmod(r, m, f, p);
        if (w.empty()) continue;
        w[0] = (w[0] - 1 + p) % p;
        fp_trim(w);
        FpPoly g = fp_gcd(f, w, p);
        if (g.size() <= 1 || g.size() == f.size()) continue;
        FpPoly h = fp_divmod(f, g, p).first;
        fp_edf(g, d, p, rng, out);
        fp_edf(fp_monic(std::move(h), p), d, p, rng, out);
        return;
    }
}

// Distinct-degree then equal-degree factorization of a squarefree monic f.
std::vector<FpPoly> fp_factor_squarefree(FpPoly f, int64_t p) {
    std::vector<FpPoly> out;
    FpPoly x{0, 1};
    FpPoly h = x;
    int d = 0;
    SplitRng rng(static_cast<uint64_t>(p) * 1000003ULL + f.size());
    while (static_cast<int>(f.size()) - 1 > 2 * (d + 1) - 1) {
        ++d;
        h = fp_powmod(h, BigInt(static_cast<long>(p)), f, p);
        FpPoly hx = fp_sub(h, x, p);
        FpPoly g = fp_gcd(f, hx, p);
        if (g.size() > 1) {
            fp_edf(g, d, p, rng, out);
            f = fp_divmod(f, g, p).first;
            f = fp_monic(std::move(f), p);
            h = fp_mod(h, f, p);
        }
    }
    if (f.size() > 1) out.push_back(f);
    return out;
}

// ---------------------------------------------------------------------------
// Hensel lifting: from f = lc * prod(g_i) mod p to mod p^a.
// ---------------------------------------------------------------------------

using ZPoly = std::vector<BigInt>; // trimmed, index = degree

void z_trim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    z_trim(r);
    return r;
}

ZPoly z_sub(ZPoly a, const ZPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), BigInt(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    z_trim(a);
    return a;
}

ZPoly z_reduce(ZPoly f, const BigInt& m) {
    for (auto& c : f) {
        c %= m;
        if (c < 0) c += m;
    }
    z_trim(f);
    return f;
}

// coefficients into the symmetric range (-m/2, m/2]
ZPoly z_symmetric(ZPoly f, const BigInt& m) {
    BigInt half = m / 2;
    for (auto& c : f) {
        c %= m;
        if (c < 0) c += m;
        if (c > half) c -= m;
    }
    z_trim(f);
    return f;
}

ZPoly z_from_fp(const FpPoly& f) {
    ZPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = f[i];
    return r;
}

FpPoly fp_from_z(const ZPoly& f, int64_t p) {
    FpPoly r(f.size());
    BigInt pp(static_cast<long>(p));
    for (size_t i = 0; i < f.size(); ++i) {
        BigInt c = f[i] % pp;
        if (c < 0) c += pp;
        r[i] = c.get_si();
    }
    fp_trim(r);
    return r;
}

// One linear Hensel step: given f = g*h mod p^e with g monic and
// s*g + t*h = 1 mod p, lifts g, h to mod p^(e+1) in place.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, const FpPoly& s, const FpPoly& t, const BigInt& pe,
                 int64_t p) {
    ZPoly err = z_sub(f, z_mul(g, h));
    ZPoly err_div(err.size());
    for (size_t i = 0; i < err.size(); ++i) err_div[i] = err[i] / pe;
    FpPoly E = fp_from_z(err_div, p);
    FpPoly gp = fp_from_z(g, p);
    FpPoly hp = fp_from_z(h, p);
    // dg = E*t mod g;  dh = (E - dg*h)/g = E*s + ((E*t - dg)/g)*h  (mod p)
    FpPoly Et = fp_mul(E, t, p);
    FpPoly dg = fp_mod(Et, gp, p);
    FpPoly q = fp_divmod(Et, gp, p).first;
    FpPoly dh = fp_sub(fp_mul(E, s, p), fp_mul(fp_sub(FpPoly{}, q, p), hp, p), p);
    // g += pe*dg, h += pe*dh
    ZPoly zdg = z_from_fp(dg);
    ZPoly zdh = z_from_fp(dh);
    if (g.size() < zdg.size()) g.resize(zdg.size(), BigInt(0));
    for (size_t i = 0; i < zdg.size(); ++i) g[i] += pe * zdg[i];
    if (h.size() < zdh.size()) h.resize(zdh.size(), BigInt(0));
    for (size_t i = 0; i < zdh.size(); ++i) h[i] += pe * zdh[i];
    z_trim(g);
    z_trim(h);
}

// Lifts the pair (g, h) with f = g*h mod p, g monic mod p, to mod target.
void hensel_lift_pair(const ZPoly& f, FpPoly g0, FpPoly h0, int64_t p, const BigInt& target, ZPoly& g_out,
                      ZPoly& h_out) {
    // Bezout certificates mod p via the extended Euclid in F_p[x].
    FpPoly r0 = g0, r1 = h0;
    FpPoly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r2] = fp_divmod(r0, r1, p);
        FpPoly s2 = fp_sub(s0, fp_mul(q, s1, p), p);
        FpPoly t2 = fp_sub(t0, fp_mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1) fail(errc::internal, "modular factors not coprime during lifting");
    int64_t inv = fp_inv(r0[0], p);
    for (auto& c : s0) c = c * inv % p;
    for (auto& c : t0) c = c * inv % p;
    // s0*g0 + t0*h0 = 1 mod p; hensel_step wants s*g + t*h with s against g.
    ZPoly g = z_from_fp(g0);
    ZPoly h = z_from_fp(h0);
    BigInt pe(static_cast<long>(p));
    while (pe < target) {
        hensel_step(f, g, h, s0, t0, pe, p);
        pe *= static_cast<long>(p);
        g = z_reduce(std::move(g), pe);
        h = z_reduce(std::move(h), pe);
    }
    g_out = std::move(g);
    h_out = std::move(h);
}

// Multifactor lifting by splitting the factor list in halves.
// F = lc(F) * prod(monic g_i) mod p; returns monic lifts mod `target`.
void hensel_lift_tree(const ZPoly& F, const std::vector<FpPoly>& gs, size_t lo, size_t hi, int64_t p,
                      const BigInt& target, std::vector<ZPoly>& out) {
    if (hi - lo == 1) {
        // Monicize F mod target.
        BigInt lc = F.back() % target;
        if (lc < 0) lc += target;
        BigInt lcinv;
        if (mpz_invert(lcinv.get_mpz_t(), lc.get_mpz_t(), target.get_mpz_t()) == 0)
            fail(errc::internal, "leading coefficient not invertible modulo p^a");
        ZPoly g(F.size());
        for (size_t i = 0; i < F.size(); ++i) g[i] = (F[i] * lcinv) % target;
        g = z_reduce(std::move(g), target);
        out[lo] = std::move(g);
        return;
    }
    size_t mid = lo + (hi - lo) / 2;
    FpPoly gl{1}, gr{1};
    for (size_t i = lo; i < mid; ++i) gl = fp_mul(gl, gs[i], p);
    for (size_t i = mid; i < hi; ++i) gr = fp_mul(gr, gs[i], p);
    // fold lc into the right part
    FpPoly lcp = fp_from_z(ZPoly{F.back()}, p);
    gr = fp_mul(gr, lcp, p);
    ZPoly G, H;
    hensel_lift_pair(F, gl, gr, p, target, G, H);
    hensel_lift_tree(G, gs, lo, mid, p, target, out);
    hensel_lift_tree(H, gs, mid, hi, p, target, out);
}

// ---------------------------------------------------------------------------
// Zassenhaus driver for a primitive squarefree integer polynomial.
// ---------------------------------------------------------------------------

BigInt z_max_abs(const ZPoly& f) {
    BigInt m(0);
    for (const auto& c : f) {
        BigInt a = abs(c);
        if (a > m) m = a;
    }
    return m;
}

std::vector<ZPoly> zassenhaus_squarefree(const ZPoly& f) {
    int n = static_cast<int>(f.size()) - 1;
    if (n <= 0) return {};
    if (n == 1) return {f};

    static const int64_t primes[] = {3,  5,  7,  11, 13, 17,  19,  23,  29,  31,  37,  41,  43, 47,
                                     53, 59, 61, 67, 71, 73,  79,  83,  89,  97,  101, 103, 107, 109,
                                     113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191};
    int64_t p = 0;
    FpPoly fp;
    for (int64_t cand : primes) {
        BigInt lc = f.back() % cand;
        if (lc == 0) continue;
        FpPoly g = fp_from_z(f, cand);
        if (static_cast<int>(g.size()) - 1 != n) continue;
        FpPoly d = fp_derivative(g, cand);
        if (fp_gcd(g, d, cand).size() != 1) continue;
        p = cand;
        fp = fp_monic(std::move(g), cand);
        break;
    }
    if (p == 0) fail(errc::internal, "no suitable prime found for factorization");

    std::vector<FpPoly> modular = fp_factor_squarefree(fp, p);
    std::sort(modular.begin(), modular.end());
    if (modular.size() == 1) return {f};

    // Mignotte bound on the coefficients of any factor, times lc(f).
    BigInt bound = z_max_abs(f);
    BigInt sqrt_term;
    mpz_sqrt(sqrt_term.get_mpz_t(), BigInt(n + 1).get_mpz_t());
    bound *= (sqrt_term + 1);
    bound <<= static_cast<unsigned>(n);
    bound *= abs(f.back());
    BigInt target(static_cast<long>(p));
    while (target <= 2 * bound) target *= static_cast<long>(p);

    std::vector<ZPoly> lifted(modular.size());
    hensel_lift_tree(f, modular, 0, modular.size(), p, target, lifted);

    // Subset recombination over the lifted modular factors.
    std::vector<ZPoly> result;
    std::vector<size_t> live(lifted.size());
    for (size_t i = 0; i < live.size(); ++i) live[i] = i;
    ZPoly rest = f;

    auto try_subsets = [&](size_t card) -> bool {
        std::vector<size_t> idx(card);
        for (size_t i = 0; i < card; ++i) idx[i] = i;
        while (true) {
            // candidate = lc(rest) * prod lifted[live[idx]] mod target, symmetric
            ZPoly cand{rest.back()};
            for (size_t i : idx) cand = z_reduce(z_mul(cand, lifted[live[i]]), target);
            cand = z_symmetric(std::move(cand), target);
            BigInt content(0);
            for (const auto& c : cand) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
            if (content != 0) {
                ZPoly pp = cand;
                for (auto& c : pp) c /= content;
                if (sgn(pp.back()) < 0)
                    for (auto& c : pp) c = -c;
                QPoly qpp = qpoly_from_integer(pp);
                QPoly qrest = qpoly_from_integer(rest);
                if (pp.size() > 1 && qpoly_divides(qpp, qrest)) {
                    result.push_back(pp);
                    std::vector<size_t> remaining;
                    size_t k = 0;
                    for (size_t i = 0; i < live.size(); ++i) {
                        if (k < idx.size() && idx[k] == i) {
                            ++k;
                            continue;
                        }
                        remaining.push_back(live[i]);
                    }
                    live = std::move(remaining);
                    auto [c2, z2] = qpoly_to_integer(qpoly_exact_div(qrest, qpp));
                    (void)c2;
                    rest = ZPoly(z2.begin(), z2.end());
                    return true;
                }
            }
            // advance to the next index combination
            size_t i = card;
            while (true) {
                if (i == 0) return false;
                --i;
                if (idx[i] != i + live.size() - card) {
                    ++idx[i];
                    for (size_t j = i + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
            }
        }
    };

    size_t card = 1;
    while (2 * card <= live.size()) {
        if (!try_subsets(card)) ++card;
    }
    if (!live.empty()) {
        auto [c, z] = qpoly_to_integer(qpoly_from_integer(rest));
        (void)c;
        result.emplace_back(z.begin(), z.end());
    }
    return result;
}

} // namespace

LaurentPoly Factorization::product() const {
    LaurentPoly r = unit_to_laurent(unit);
    for (const auto& f : factors) r = r * f.prime.pow(static_cast<unsigned>(f.exponent));
    return r;
}

LaurentPoly SquarefreeDecomposition::product() const {
    LaurentPoly r = unit_to_laurent(unit);
    for (const auto& [f, m] : parts) r = r * f.pow(static_cast<unsigned>(m));
    return r;
}

SquarefreeDecomposition squarefree_decomposition(const LaurentPoly& p) {
    if (p.is_zero()) fail(errc::zero_input, "squarefree decomposition of zero");
    SquarefreeDecomposition out;
    auto [q, shift] = p.to_qpoly();
    Rational lead = q.leading();
    QPoly f = q * (Rational(1) / lead);
    // F[i] = gcd-chain; d_i = F[i-1]/F[i] collects primes of multiplicity >= i.
    std::vector<QPoly> chain{f};
    while (chain.back().degree() > 0) chain.push_back(qpoly_gcd(chain.back(), chain.back().derivative()));
    std::vector<QPoly> d;
    for (size_t i = 0; i + 1 < chain.size(); ++i) d.push_back(qpoly_exact_div(chain[i], chain[i + 1]));
    LaurentPoly prod(Rational(1));
    for (size_t i = 0; i < d.size(); ++i) {
        QPoly a = (i + 1 < d.size()) ? qpoly_exact_div(d[i], d[i + 1]) : d[i];
        if (a.degree() > 0) {
            LaurentPoly part = normalize_assoc(LaurentPoly::from_qpoly(a, 0));
            out.parts.emplace_back(part, static_cast<int>(i + 1));
            prod = prod * part.pow(static_cast<unsigned>(i + 1));
        }
    }
    LaurentPoly u = exact_div(p, prod);
    auto uf = u.as_unit();
    if (!uf) fail(errc::internal, "squarefree residual is not a unit");
    out.unit = *uf;
    (void)shift;
    return out;
}

SymmetryTag classify_prime(const LaurentPoly& prime) {
    if (associated(prime, LaurentPoly::one_plus_t())) return SymmetryTag::one_plus_t;
    if (associated(prime, prime.bar())) return SymmetryTag::symmetric;
    return SymmetryTag::asymmetric;
}

Factorization factor_rational(const LaurentPoly& p) {
    if (p.is_zero()) fail(errc::zero_input, "factorization of zero");
    Factorization out;
    auto sq = squarefree_decomposition(p);
    std::vector<std::pair<LaurentPoly, int>> collected;
    for (const auto& [part, mult] : sq.parts) {
        auto [q, shift] = part.to_qpoly();
        (void)shift;
        auto [content, z] = qpoly_to_integer(q);
        (void)content;
        ZPoly zp(z.begin(), z.end());
        for (const auto& factor : zassenhaus_squarefree(zp)) {
            LaurentPoly prime = normalize_assoc(LaurentPoly::from_qpoly(qpoly_from_integer(factor), 0));
            collected.emplace_back(prime, mult);
        }
    }
    // merge associated primes (cannot happen across squarefree parts, but keep
    // the invariant airtight) and order deterministically
    std::sort(collected.begin(), collected.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [prime, mult] : collected) {
        if (!out.factors.empty() && out.factors.back().prime == prime)
            out.factors.back().exponent += mult;
        else
            out.factors.push_back(PrimePower{prime, mult, classify_prime(prime)});
    }
    LaurentPoly prod(Rational(1));
    for (const auto& f : out.factors) prod = prod * f.prime.pow(static_cast<unsigned>(f.exponent));
    LaurentPoly u = exact_div(p, prod);
    auto uf = u.as_unit();
    if (!uf) fail(errc::internal, "factor residual is not a unit");
    out.unit = *uf;
    return out;
}

PrimaryPartition primary_collect(const Factorization& f) {
    PrimaryPartition out;
    std::vector<bool> used(f.factors.size(), false);
    for (size_t i = 0; i < f.factors.size(); ++i) {
        if (used[i]) continue;
        if (f.factors[i].tag != SymmetryTag::asymmetric) {
            out.singletons.push_back(i);
            used[i] = true;
            continue;
        }
        LaurentPoly partner = normalize_assoc(f.factors[i].prime.bar());
        bool matched = false;
        for (size_t j = i + 1; j < f.factors.size(); ++j) {
            if (used[j]) continue;
            if (f.factors[j].prime == partner) {
                out.conjugate_pairs.emplace_back(i, j);
                used[i] = used[j] = true;
                matched = true;
                break;
            }
        }
        if (!matched) {
            out.unmatched.push_back(i);
            used[i] = true;
        }
    }
    return out;
}

} // namespace bkit
