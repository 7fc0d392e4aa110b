#include "linalg.hpp"

#include "errors.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace bkit;
using namespace bkit::testutil;

namespace {

LambdaMatrix paper_pair_matrix(int n) {
    LambdaMatrix a(2);
    a.at(0, 1) = LaurentPoly::one_plus_t().pow(static_cast<unsigned>(n));
    a.at(1, 0) = a.at(0, 1).bar();
    return a;
}

LambdaMatrix two_by_two_symmetric() {
    // [[-1, 1], [1, -(t + 1/t)]]
    LambdaMatrix a(2);
    a.at(0, 0) = LaurentPoly(Rational(-1));
    a.at(0, 1) = LaurentPoly(Rational(1));
    a.at(1, 0) = LaurentPoly(Rational(1));
    a.at(1, 1) = -(LaurentPoly::t() + LaurentPoly::monomial(Rational(1), -1));
    return a;
}

} // namespace

TEST_CASE("hermitian check") {
    CHECK(is_hermitian(paper_pair_matrix(1)));
    LambdaMatrix t1(1);
    t1.at(0, 0) = LaurentPoly::t();
    CHECK_FALSE(is_hermitian(t1));
    CHECK(is_hermitian(LambdaMatrix::identity(3)));
    CHECK(is_hermitian(two_by_two_symmetric()));
}

TEST_CASE("determinant") {
    auto a = paper_pair_matrix(1);
    CHECK(determinant(a) == -(LaurentPoly::one_plus_t() * LaurentPoly::one_plus_t().bar()));
    CHECK(determinant(two_by_two_symmetric()) ==
          Li({{-1, 1}, {0, -1}, {1, 1}}));
    CHECK(determinant(LambdaMatrix::identity(4)).is_one());
    CHECK(determinant(LambdaMatrix(0)).is_one());

    std::mt19937_64 rng(47);
    for (int i = 0; i < 25; ++i) {
        LambdaMatrix m(3), n(3);
        for (size_t r = 0; r < 3; ++r)
            for (size_t c = 0; c < 3; ++c) {
                m.at(r, c) = random_laurent(rng, 2, 3);
                n.at(r, c) = random_laurent(rng, 2, 3);
            }
        CHECK(determinant(m * n) == determinant(m) * determinant(n));
    }
}

TEST_CASE("admissibility") {
    CHECK(is_admissible(paper_pair_matrix(1)));
    CHECK(determinant(paper_pair_matrix(1)).evaluate_at(Rational(1)) == -4);
    LambdaMatrix bad(1);
    bad.at(0, 0) = LaurentPoly(Rational(1)) - LaurentPoly::t();
    CHECK_FALSE(is_admissible(bad));
    CHECK(is_admissible(LambdaMatrix::identity(2)));
}

TEST_CASE("negated inverse") {
    auto a = two_by_two_symmetric();
    auto inv = neg_inverse(a);
    // (1,1) entry of -A^{-1} is (t + 1/t) / (t - 1 + 1/t)
    LaurentPoly det = Li({{-1, 1}, {0, -1}, {1, 1}});
    CHECK(inv.den == det);
    CHECK(inv.num_at(0, 0) == Li({{-1, 1}, {1, 1}}));

    LambdaMatrix p(1);
    p.at(0, 0) = Li({{0, 2}, {1, 3}});
    auto invp = neg_inverse(p);
    CHECK(invp.num_at(0, 0) == LaurentPoly(Rational(-1)));
    CHECK(invp.den == Li({{0, 2}, {1, 3}}));

    LambdaMatrix sing(2);
    sing.at(0, 0) = LaurentPoly(Rational(1));
    sing.at(1, 1) = LaurentPoly();
    CHECK_THROWS_AS(neg_inverse(sing), error);

    std::mt19937_64 rng(53);
    for (int i = 0; i < 20; ++i) {
        LambdaMatrix m(3);
        for (size_t r = 0; r < 3; ++r)
            for (size_t c = 0; c < 3; ++c) m.at(r, c) = random_laurent(rng, 2, 3);
        if (determinant(m).is_zero()) continue;
        auto adj = adjugate(m);
        LambdaMatrix prod = m * adj;
        for (size_t r = 0; r < 3; ++r)
            for (size_t c = 0; c < 3; ++c)
                CHECK(prod.at(r, c) == (r == c ? determinant(m) : LaurentPoly()));
    }
}

TEST_CASE("smith normal form: paper matrix") {
    auto a = paper_pair_matrix(1);
    auto snf = smith_normal_form(a);
    REQUIRE(snf.diagonal.size() == 2);
    CHECK(associated(snf.diagonal[0], LaurentPoly::one_plus_t()));
    CHECK(associated(snf.diagonal[1], LaurentPoly::one_plus_t()));
    CHECK(check_snf_identity(a, snf));
}

TEST_CASE("smith normal form: diagonal and 1x1") {
    LambdaMatrix d(2);
    d.at(0, 0) = LaurentPoly::one_plus_t();
    d.at(1, 1) = LaurentPoly::one_plus_t().pow(2);
    auto snf = smith_normal_form(d);
    CHECK(associated(snf.diagonal[0], LaurentPoly::one_plus_t()));
    CHECK(associated(snf.diagonal[1], LaurentPoly::one_plus_t().pow(2)));

    LambdaMatrix one(1);
    one.at(0, 0) = Li({{-1, 1}, {0, -1}, {1, 1}});
    auto snf1 = smith_normal_form(one);
    CHECK(associated(snf1.diagonal[0], Li({{-1, 1}, {0, -1}, {1, 1}})));
}

TEST_CASE("smith normal form: random soundness") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 60; ++trial) {
        size_t n = 1 + trial % 4;
        LambdaMatrix a(n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) a.at(i, j) = random_laurent(rng, 3, 4);
        auto snf = smith_normal_form(a);
        CHECK(check_snf_identity(a, snf));
        // unimodular transforms
        CHECK(det_of_rows(snf.U).is_unit());
        CHECK(det_of_rows(snf.V).is_unit());
        // divisibility chain
        for (size_t i = 0; i + 1 < snf.diagonal.size(); ++i)
            CHECK(divides(snf.diagonal[i], snf.diagonal[i + 1]));
        // product of diagonal is det up to unit
        LaurentPoly det = determinant(a);
        LaurentPoly prod(Rational(1));
        for (const auto& dd : snf.diagonal) prod = prod * dd;
        if (det.is_zero())
            CHECK(prod.is_zero());
        else
            CHECK(associated(prod, det));
    }
}

TEST_CASE("smith normal form: hermitian diagonal symmetry") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 40; ++trial) {
        size_t n = 1 + trial % 4;
        auto a = random_hermitian(rng, n, 3, 4);
        auto snf = smith_normal_form(a);
        for (const auto& d : snf.diagonal)
            if (!d.is_zero()) CHECK(associated(d, d.bar()));
    }
}

TEST_CASE("kernel mod") {
    // identity, modulus d: generators are unit multiples of d*e_i
    LambdaMatrix id = LambdaMatrix::identity(2);
    LaurentPoly d = Li({{0, 1}, {1, 1}, {2, 1}});
    auto ker = kernel_mod(id, d);
    REQUIRE(ker.size() == 2);
    for (const auto& row : ker)
        for (const auto& e : row)
            if (!e.is_zero()) CHECK(associated(e, d));

    // H = [[d]], delta = d: everything solves
    LambdaMatrix h1(1);
    h1.at(0, 0) = d;
    auto ker1 = kernel_mod(h1, d);
    REQUIRE(ker1.size() == 1);
    CHECK(ker1[0][0].is_unit());

    // H = [[1+t]], delta = (1+t)^2: generator (1+t)e_1
    LambdaMatrix h2(1);
    h2.at(0, 0) = LaurentPoly::one_plus_t();
    auto ker2 = kernel_mod(h2, LaurentPoly::one_plus_t().pow(2));
    REQUIRE(ker2.size() == 1);
    CHECK(associated(ker2[0][0], LaurentPoly::one_plus_t()));

    CHECK_THROWS_AS(kernel_mod(id, LaurentPoly()), error);

    // every returned row satisfies the congruence
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 20; ++trial) {
        LambdaMatrix h(2);
        for (size_t i = 0; i < 2; ++i)
            for (size_t j = 0; j < 2; ++j) h.at(i, j) = random_laurent(rng, 2, 3);
        LaurentPoly delta = random_nonzero_laurent(rng, 3, 3);
        for (const auto& row : kernel_mod(h, delta)) {
            for (size_t j = 0; j < 2; ++j) {
                LaurentPoly acc;
                for (size_t i = 0; i < 2; ++i) acc += row[i] * h.at(i, j);
                CHECK(divides(delta, acc));
            }
        }
    }
}
