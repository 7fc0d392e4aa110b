#include "decompose.hpp"

#include "errors.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace bkit;
using namespace bkit::testutil;

namespace {

LaurentPoly sym_prime() { return Li({{-1, 1}, {0, -1}, {1, 1}}); } // t - 1 + 1/t

TorsionValue tv(const LaurentPoly& num, const LaurentPoly& den) { return TorsionValue::reduce(num, den); }

BlanchfieldForm form_of(std::vector<LaurentPoly> factors, std::vector<TorsionValue> gram) {
    return make_form(AlexanderModule(std::move(factors)), std::move(gram));
}

// kind/pi/n multiset, with hyperbolic primes canonicalized to the smaller of
// the conjugate pair
std::multiset<std::tuple<int, LaurentPoly, int>> block_multiset(const std::vector<CanonicalBlock>& blocks) {
    std::multiset<std::tuple<int, LaurentPoly, int>> out;
    for (const auto& b : blocks) {
        LaurentPoly key = normalize_assoc(b.pi);
        if (b.kind == BlockKind::hyperbolic_pair) {
            LaurentPoly partner = normalize_assoc(b.pi.bar());
            if (partner < key) key = partner;
        }
        out.insert({b.kind == BlockKind::symmetric_cyclic ? 0 : 1, key, b.n});
    }
    return out;
}

LambdaMatrix pair_matrix(const LaurentPoly& pi, int n) {
    LambdaMatrix a(2);
    a.at(0, 1) = pi.pow(static_cast<unsigned>(n));
    a.at(1, 0) = a.at(0, 1).bar();
    return a;
}

LambdaMatrix cyclic_matrix() {
    LambdaMatrix a(2);
    a.at(0, 0) = LaurentPoly(Rational(-1));
    a.at(0, 1) = LaurentPoly(Rational(1));
    a.at(1, 0) = LaurentPoly(Rational(1));
    a.at(1, 1) = -(LaurentPoly::t() + LaurentPoly::monomial(Rational(1), -1));
    return a;
}

// Conjugates the Gram by a random order-respecting automorphism of the module.
BlanchfieldForm conjugate_form(const BlanchfieldForm& f, std::mt19937_64& rng, int ops) {
    size_t p = f.module.rank();
    std::vector<std::vector<LaurentPoly>> m(p, std::vector<LaurentPoly>(p));
    for (size_t i = 0; i < p; ++i) m[i][i] = LaurentPoly(Rational(1));
    std::uniform_int_distribution<size_t> pick(0, p - 1);
    std::uniform_int_distribution<int> sgn01(0, 1);
    for (int k = 0; k < ops; ++k) {
        size_t i = pick(rng), j = pick(rng);
        if (i == j) {
            // unit scaling
            for (auto& e : m[i]) e = e * LaurentPoly::monomial(Rational(sgn01(rng) ? 1 : -1), 1);
            continue;
        }
        LaurentPoly lambda = random_laurent(rng, 1, 2);
        if (i < j) lambda = lambda * exact_div(f.module.factor(i), f.module.factor(j));
        // row_i += lambda * row_j  (g_i' = g_i + lambda g_j is order-legal)
        for (size_t c = 0; c < p; ++c) m[i][c] += lambda * m[j][c];
    }
    std::vector<TorsionValue> gram(p * p);
    for (size_t i = 0; i < p; ++i)
        for (size_t j = 0; j < p; ++j) gram[i * p + j] = evaluate_pairing(f, m[i], m[j]);
    return make_form(f.module, std::move(gram));
}

} // namespace

TEST_CASE("primary split") {
    // block-diagonal over two primes: two components, pairings preserved
    auto opt = LaurentPoly::one_plus_t();
    auto f = form_of({opt.pow(2) * sym_prime()},
                     {tv(LaurentPoly(Rational(1)), opt.pow(2) * sym_prime())});
    CHECK(is_hermitian_form(f));
    auto comps = primary_split(f);
    REQUIRE(comps.size() == 2);
    for (const auto& c : comps) {
        REQUIRE(c.coords.size() == 1);
        CHECK(c.orders[0] == (c.tag == SymmetryTag::one_plus_t ? 2 : 1));
    }

    // module with a lone asymmetric prime is rejected
    auto bad = make_form(AlexanderModule({Li({{0, -2}, {1, 1}})}),
                         {tv(LaurentPoly(Rational(1)), Li({{0, -2}, {1, 1}}))});
    CHECK_THROWS_AS(primary_split(bad), error);
}

TEST_CASE("decompose: cyclic symmetric worked example") {
    auto f = pairing_from_matrix(cyclic_matrix());
    auto r = decompose(f);
    REQUIRE(r.blocks.size() == 1);
    CHECK(r.blocks[0].kind == BlockKind::symmetric_cyclic);
    CHECK(associated(r.blocks[0].pi, sym_prime()));
    CHECK(r.blocks[0].n == 1);
    // P = s modulo s-1 is the class of 1
    CHECK(s_substitute(r.blocks[0].P).evaluate_at(Rational(1)) == 2);
    CHECK(verify_decomposition(f, r).ok);
}

TEST_CASE("decompose: paper pair matrices") {
    for (int n : {1, 3}) {
        auto f = pairing_from_matrix(pair_matrix(LaurentPoly::one_plus_t(), n));
        auto r = decompose(f);
        REQUIRE(r.blocks.size() == 1);
        CHECK(r.blocks[0].kind == BlockKind::hyperbolic_pair);
        CHECK(associated(r.blocks[0].pi, LaurentPoly::one_plus_t()));
        CHECK(r.blocks[0].n == n);
        CHECK(verify_decomposition(f, r).ok);
    }
}

TEST_CASE("decompose: conjugate pair roundtrip") {
    auto f = pairing_from_matrix(pair_matrix(Li({{0, -2}, {1, 1}}), 1));
    auto r = decompose(f);
    REQUIRE(r.blocks.size() == 1);
    CHECK(r.blocks[0].kind == BlockKind::hyperbolic_pair);
    CHECK((associated(r.blocks[0].pi, Li({{0, -2}, {1, 1}})) ||
           associated(r.blocks[0].pi, Li({{0, -2}, {1, 1}}).bar())));
    CHECK(r.blocks[0].n == 1);
    CHECK(verify_decomposition(f, r).ok);
}

TEST_CASE("decompose: diagonal and antidiagonal symmetric rank 2") {
    auto pi = sym_prime();
    auto d = form_of({pi, pi}, {tv(LaurentPoly(Rational(1)), pi), TorsionValue(), TorsionValue(),
                                tv(LaurentPoly(Rational(1)), pi)});
    auto rd = decompose(d);
    REQUIRE(rd.blocks.size() == 2);
    for (const auto& b : rd.blocks) {
        CHECK(b.kind == BlockKind::symmetric_cyclic);
        CHECK(b.n == 1);
    }

    // antidiagonal: the pivot comes from the g1+g2 device with numerator 2
    auto ad = form_of({pi, pi}, {TorsionValue(), tv(LaurentPoly(Rational(1)), pi),
                                 tv(LaurentPoly(Rational(1)), pi), TorsionValue()});
    CHECK(is_hermitian_form(ad));
    auto rad = decompose(ad);
    REQUIRE(rad.blocks.size() == 2);
    for (const auto& b : rad.blocks) CHECK(b.kind == BlockKind::symmetric_cyclic);
    CHECK(verify_decomposition(ad, rad).ok);
}

TEST_CASE("decompose: even 1+t power routes through t+2+1/t") {
    auto opt = LaurentPoly::one_plus_t();
    LaurentPoly spl2 = Li({{-1, 1}, {0, 2}, {1, 1}});
    auto f = form_of({opt.pow(2)}, {tv(LaurentPoly(Rational(1)), spl2)});
    auto r = decompose(f);
    REQUIRE(r.blocks.size() == 1);
    CHECK(r.blocks[0].kind == BlockKind::symmetric_cyclic);
    CHECK(r.blocks[0].pi == spl2);
    CHECK(r.blocks[0].n == 1);
    CHECK(verify_decomposition(f, r).ok);
}

TEST_CASE("decompose: mixed 1+t orders") {
    auto opt = LaurentPoly::one_plus_t();
    LaurentPoly spl2 = Li({{-1, 1}, {0, 2}, {1, 1}});
    std::vector<LaurentPoly> factors{opt.pow(3), opt.pow(3), opt.pow(2)};
    std::vector<TorsionValue> gram(9);
    gram[0 * 3 + 1] = tv(LaurentPoly(Rational(1)), opt.pow(3));
    gram[1 * 3 + 0] = gram[0 * 3 + 1].bar();
    gram[2 * 3 + 2] = tv(LaurentPoly(Rational(1)), spl2);
    auto f = form_of(factors, gram);
    CHECK(is_hermitian_form(f));
    REQUIRE(is_nondegenerate(f));
    auto r = decompose(f);
    REQUIRE(r.blocks.size() == 2);
    auto ms = block_multiset(r.blocks);
    CHECK(ms.count({1, opt, 3}) == 1);
    CHECK(ms.count({0, normalize_assoc(spl2), 1}) == 1);
    CHECK(verify_decomposition(f, r).ok);
}

TEST_CASE("decompose: block-diagonal sums") {
    // 3x3: cyclic symmetric (1x1 matrix) + hyperbolic (1+t) pair
    LambdaMatrix a(3);
    a.at(0, 0) = sym_prime();
    a.at(1, 2) = LaurentPoly::one_plus_t();
    a.at(2, 1) = LaurentPoly::one_plus_t().bar();
    auto f = pairing_from_matrix(a);
    auto r = decompose(f);
    REQUIRE(r.blocks.size() == 2);
    auto ms = block_multiset(r.blocks);
    CHECK(ms.count({0, normalize_assoc(sym_prime()), 1}) == 1);
    CHECK(ms.count({1, LaurentPoly::one_plus_t(), 1}) == 1);

    // 4x4: the two worked 2x2 matrices side by side
    LambdaMatrix b(4);
    auto cm = cyclic_matrix();
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) b.at(i, j) = cm.at(i, j);
    b.at(2, 3) = LaurentPoly::one_plus_t();
    b.at(3, 2) = LaurentPoly::one_plus_t().bar();
    auto f2 = pairing_from_matrix(b);
    auto r2 = decompose(f2);
    REQUIRE(r2.blocks.size() == 2);
    CHECK(verify_decomposition(f2, r2).ok);
}

TEST_CASE("decompose: invariant under basis conjugation") {
    std::mt19937_64 rng(103);
    auto pi = sym_prime();
    auto opt = LaurentPoly::one_plus_t();

    std::vector<BlanchfieldForm> bases;
    bases.push_back(form_of({pi.pow(2), pi},
                            {tv(LaurentPoly(Rational(1)), pi.pow(2)), TorsionValue(), TorsionValue(),
                             tv(LaurentPoly(Rational(2)), pi)}));
    {
        std::vector<TorsionValue> gram(4);
        gram[1] = tv(LaurentPoly(Rational(1)), opt.pow(3));
        gram[2] = gram[1].bar();
        bases.push_back(form_of({opt.pow(3), opt.pow(3)}, gram));
    }
    for (const auto& base : bases) {
        auto r0 = decompose(base);
        for (int trial = 0; trial < 6; ++trial) {
            auto g = conjugate_form(base, rng, 6);
            CHECK(is_hermitian_form(g));
            auto r = decompose(g);
            CHECK(block_multiset(r.blocks) == block_multiset(r0.blocks));
            CHECK(verify_decomposition(g, r).ok);
        }
    }
}

TEST_CASE("decompose: degenerate and invalid inputs") {
    auto opt = LaurentPoly::one_plus_t();
    // single ((1+t)) with zero Gram: module fails the classifier
    auto f1 = form_of({opt}, {TorsionValue()});
    CHECK_THROWS_AS(decompose(f1), error);

    // valid module, degenerate pairing
    auto f2 = form_of({opt.pow(2)}, {tv(LaurentPoly(Rational(1)), opt)});
    CHECK_THROWS_AS(decompose(f2), error);
}

TEST_CASE("verify decomposition flags tampering") {
    auto f = pairing_from_matrix(cyclic_matrix());
    auto r = decompose(f);
    REQUIRE(verify_decomposition(f, r).ok);
    auto tampered = r;
    tampered.basis[0][0] += LaurentPoly(Rational(1));
    CHECK_FALSE(verify_decomposition(f, tampered).ok);

    // empty module decomposes to nothing
    LambdaMatrix id = LambdaMatrix::identity(2);
    auto fe = pairing_from_matrix(id);
    auto re = decompose(fe);
    CHECK(re.blocks.empty());
    CHECK(verify_decomposition(fe, re).ok);
}

TEST_CASE("decompose: multiset matches primary decomposition") {
    auto pi = sym_prime();
    auto opt = LaurentPoly::one_plus_t();
    auto f = form_of({pi * opt.pow(2)},
                     {tv(LaurentPoly(Rational(1)), pi * opt.pow(2))});
    REQUIRE(is_hermitian_form(f));
    auto r = decompose(f);
    std::map<std::pair<LaurentPoly, int>, int> from_blocks;
    for (const auto& b : r.blocks) {
        LaurentPoly key = normalize_assoc(b.pi);
        int n = b.n;
        if (b.kind == BlockKind::symmetric_cyclic && key == normalize_assoc(Li({{-1, 1}, {0, 2}, {1, 1}}))) {
            key = opt; // count (t+2+1/t)^n as (1+t)^(2n)
            n = 2 * b.n;
        }
        from_blocks[{key, n}] += (b.kind == BlockKind::hyperbolic_pair) ? 2 : 1;
    }
    std::map<std::pair<LaurentPoly, int>, int> from_primary;
    for (const auto& c : primary_decomposition(f.module))
        for (int e : c.exponents) from_primary[{c.prime.prime, e}] += 1;
    CHECK(from_blocks == from_primary);
}
