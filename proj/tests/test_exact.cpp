#include <doctest.h>

#include "cft/linalg.hpp"
#include "cft/matrix.hpp"
#include "cft/rational.hpp"
#include "cft/scalar_poly.hpp"
#include "oracles.hpp"

using namespace cft;
using cft::testing::Rng;
using cft::testing::cofactor_det;

namespace {

// det A^2 = 2h(16h^2 - 10h + 2hc + c), expanded.
ScalarPoly level2_det() {
    const ScalarPoly c = ScalarPoly::var_c();
    const ScalarPoly h = ScalarPoly::var_h();
    return h * Rational(2) *
           (h * h * Rational(16) - h * Rational(10) + h * c * Rational(2) + c);
}

DenseMatrix<ScalarPoly> level2_gram() {
    const ScalarPoly c = ScalarPoly::var_c();
    const ScalarPoly h = ScalarPoly::var_h();
    DenseMatrix<ScalarPoly> m(2, 2);
    m.at(0, 0) = h * Rational(4) + c * Rational(1, 2);
    m.at(0, 1) = h * Rational(6);
    m.at(1, 0) = h * Rational(6);
    m.at(1, 1) = h * h * Rational(8) + h * Rational(4);
    return m;
}

}  // namespace

TEST_CASE("rational arithmetic stays canonical") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK(Rational(-3, 6).str() == "-1/2");
    CHECK(Rational(7, 1).str() == "7");
    CHECK(*Rational::parse("-22/7") == Rational(-22, 7));
    CHECK(!Rational::parse("1/0").has_value());
    CHECK(!Rational::parse("x").has_value());
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("generalized binomial matches products") {
    CHECK(binomial(5, 2) == Rational(10));
    CHECK(binomial(3, 5) == Rational(0));
    CHECK(binomial(-1, 2) == Rational(1));
    CHECK(binomial(-2, 3) == Rational(-4));
    CHECK(binomial(7, 0) == Rational(1));
}

TEST_CASE("scalar poly ring identities on random samples") {
    Rng rng(11);
    for (int t = 0; t < 40; ++t) {
        const ScalarPoly p = rng.small_poly(), q = rng.small_poly(), r = rng.small_poly();
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("poly_eval is a substitution homomorphism") {
    Rng rng(12);
    for (int t = 0; t < 40; ++t) {
        const ScalarPoly p = rng.small_poly(), q = rng.small_poly();
        const Rational c0 = rng.small_rational(), h0 = rng.small_rational();
        CHECK((p + q).eval(c0, h0) == p.eval(c0, h0) + q.eval(c0, h0));
        CHECK((p * q).eval(c0, h0) == p.eval(c0, h0) * q.eval(c0, h0));
    }
}

TEST_CASE("poly_eval pinned values") {
    // The expanded level-2 determinant vanishes at (c,h) = (1, 1/4).
    CHECK(level2_det().eval(Rational(1), Rational(1, 4)) == Rational(0));
    CHECK(ScalarPoly(1).eval(Rational(5, 7), Rational(-3)) == Rational(1));
    const ScalarPoly ch = ScalarPoly::var_c() * ScalarPoly::var_h();
    CHECK(ch.eval(Rational(2, 3), Rational(3, 5)) == Rational(2, 5));
}

TEST_CASE("canonical polynomial printing") {
    CHECK(level2_det().str() == "32*h^3 + 4*c*h^2 - 20*h^2 + 2*c*h");
    CHECK(level2_gram().at(0, 0).str() == "4*h + 1/2*c");
    CHECK(ScalarPoly().str() == "0");
    CHECK((ScalarPoly(1) - ScalarPoly::var_h()).str() == "-h + 1");
    CHECK(ScalarPoly::monomial(2, 1, Rational(-1, 3)).str() == "-1/3*c^2*h");
}

TEST_CASE("bareiss determinant of the level-2 Gram matrix") {
    CHECK(bareiss_det(level2_gram()) == level2_det());
}

TEST_CASE("bareiss on identity and non-square errors") {
    CHECK(bareiss_det(DenseMatrix<ScalarPoly>::identity(3)) == ScalarPoly(1));
    CHECK(bareiss_det(DenseMatrix<Rational>::identity(4)) == Rational(1));
    DenseMatrix<Rational> rect(2, 3);
    CHECK_THROWS_AS(bareiss_det(rect), std::invalid_argument);
}

TEST_CASE("bareiss agrees with the cofactor oracle on rational matrices") {
    Rng rng(13);
    int checked = 0;
    for (std::size_t n = 1; n <= 5; ++n)
        for (int t = 0; t < 25; ++t) {
            const auto m = rng.rational_matrix(n);
            CHECK(bareiss_det(m) == cofactor_det(m));
            ++checked;
        }
    CHECK(checked >= 100);
}

TEST_CASE("bareiss agrees with the cofactor oracle on polynomial matrices") {
    Rng rng(14);
    for (std::size_t n = 1; n <= 3; ++n)
        for (int t = 0; t < 8; ++t) {
            const auto m = rng.poly_matrix(n);
            CHECK(bareiss_det(m) == cofactor_det(m));
        }
}

TEST_CASE("determinant commutes with specialization") {
    Rng rng(15);
    int checked = 0;
    for (std::size_t n = 1; n <= 3; ++n)
        for (int t = 0; t < 17; ++t) {
            const auto m = rng.poly_matrix(n);
            const Rational c0 = rng.small_rational(), h0 = rng.small_rational();
            RatMatrix num(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) num.at(i, j) = m.at(i, j).eval(c0, h0);
            CHECK(bareiss_det(m).eval(c0, h0) == bareiss_det(num));
            ++checked;
        }
    CHECK(checked >= 50);
}

TEST_CASE("bareiss survives zero pivots") {
    DenseMatrix<Rational> m(3, 3);
    // First pivot zero, matrix still regular.
    m.at(0, 1) = Rational(1);
    m.at(1, 0) = Rational(1);
    m.at(2, 2) = Rational(3);
    CHECK(bareiss_det(m) == cofactor_det(m));
    CHECK(bareiss_det(m) == Rational(-3));
}

TEST_CASE("exact polynomial division") {
    const ScalarPoly d = level2_det();
    const ScalarPoly h = ScalarPoly::var_h();
    const auto q = d.try_divide(h * Rational(2));
    REQUIRE(q.has_value());
    CHECK(*q * h * Rational(2) == d);
    CHECK(!d.try_divide(ScalarPoly::var_c() + h).has_value());
    CHECK_THROWS_AS(exact_div(ScalarPoly(1), ScalarPoly()), std::logic_error);
}

TEST_CASE("definiteness pinned examples") {
    // A^2 at (c,h) = (2,1): minors 5 and 24.
    const RatMatrix pd = level2_gram().at(0, 0).is_zero()
                             ? RatMatrix(2, 2)
                             : [] {
                                   RatMatrix m(2, 2);
                                   m.at(0, 0) = Rational(5);
                                   m.at(0, 1) = Rational(6);
                                   m.at(1, 0) = Rational(6);
                                   m.at(1, 1) = Rational(12);
                                   return m;
                               }();
    CHECK(definiteness(pd) == Definiteness::PositiveDefinite);

    // A^2 at (c,h) = (1,1/4): rank-one matrix with entries 3/2.
    RatMatrix psd(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) psd.at(i, j) = Rational(3, 2);
    CHECK(definiteness(psd) == Definiteness::PositiveSemidefinite);
    CHECK(nullity(psd) == 1);

    CHECK(definiteness(RatMatrix(3, 3)) == Definiteness::PositiveSemidefinite);

    RatMatrix indef(2, 2);
    indef.at(0, 0) = Rational(1);
    indef.at(1, 1) = Rational(-1);
    CHECK(definiteness(indef) == Definiteness::Indefinite);

    RatMatrix asym(2, 2);
    asym.at(0, 1) = Rational(1);
    CHECK_THROWS_AS(definiteness(asym), std::invalid_argument);
}

TEST_CASE("positive definiteness restricts to leading blocks") {
    Rng rng(16);
    int found = 0;
    for (int t = 0; t < 200 && found < 10; ++t) {
        // Random Gram matrices B^T B + I are positive definite.
        const auto b = rng.rational_matrix(4);
        RatMatrix g(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                Rational s(0);
                for (std::size_t k = 0; k < 4; ++k) s += b.at(k, i) * b.at(k, j);
                g.at(i, j) = s;
            }
        for (std::size_t i = 0; i < 4; ++i) g.at(i, i) += Rational(1);
        REQUIRE(definiteness(g) == Definiteness::PositiveDefinite);
        for (std::size_t k = 1; k <= 4; ++k)
            CHECK(definiteness(g.leading_block(k)) == Definiteness::PositiveDefinite);
        ++found;
    }
    CHECK(found == 10);
}

TEST_CASE("charpoly matches the determinant and trace") {
    Rng rng(17);
    for (int t = 0; t < 20; ++t) {
        const auto m = rng.rational_matrix(3);
        const auto a = charpoly(m);
        // det(tI - M) at t = 0 is (-1)^n det M.
        CHECK(a[0] == -cofactor_det(m));
        Rational tr(0);
        for (std::size_t i = 0; i < 3; ++i) tr += m.at(i, i);
        CHECK(a[2] == -tr);
        CHECK(a[3] == Rational(1));
    }
}

TEST_CASE("kernel basis solves and is normalized") {
    RatMatrix m(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m.at(i, j) = Rational(3, 2);
    const auto basis = kernel_basis(m);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0][0] == Rational(1));
    CHECK(basis[0][1] == Rational(-1));

    Rng rng(18);
    for (int t = 0; t < 20; ++t) {
        auto a = rng.rational_matrix(4);
        // Force a rank drop: last row = sum of the first two.
        for (std::size_t j = 0; j < 4; ++j) a.at(3, j) = a.at(0, j) + a.at(1, j);
        for (const auto& v : kernel_basis(a)) {
            for (std::size_t i = 0; i < 4; ++i) {
                Rational s(0);
                for (std::size_t j = 0; j < 4; ++j) s += a.at(i, j) * v[j];
                CHECK(s == Rational(0));
            }
        }
        CHECK(rank(a) + kernel_basis(a).size() == 4);
    }
}
