#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "pfaff/poly.hpp"

using namespace pfaff;

namespace {

MatchingPolynomial mono(int nv, Monomial m, Rational c) {
    MatchingPolynomial p(nv);
    p.add_term(m, c);
    return p;
}

MatchingPolynomial random_poly(std::mt19937_64& rng, int nv) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<int> nterms(0, 5);
    MatchingPolynomial p(nv);
    const int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        Monomial m;
        for (int v = 0; v < nv; ++v)
            if (rng() % 2) m.push_back(v);
        p.add_term(m, Rational(coeff(rng), den(rng)));
    }
    return p;
}

std::map<int, Rational> random_assignment(std::mt19937_64& rng, int nv) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    std::map<int, Rational> a;
    for (int v = 0; v < nv; ++v) a[v] = Rational(num(rng), den(rng));
    return a;
}

} // namespace

TEST_CASE("rational canonical form") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(3, 2).str() == "3/2");
    CHECK(Rational(5).str_slashed() == "5/1");
    CHECK(Rational::parse("-3/9") == Rational(-1, 3));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
    CHECK_THROWS_AS(Rational::parse("x"), DomainError);
}

TEST_CASE("combine: scaling by zero gives the zero polynomial") {
    const auto p = mono(3, {0, 1}, 2);
    const auto z = poly_combine({{Rational(0), p}});
    CHECK(z.is_zero());
}

TEST_CASE("combine: cancellation gives the zero polynomial") {
    const auto p = mono(3, {0, 1}, 2);
    const auto z = poly_combine({{Rational(1), p}, {Rational(-1), p}});
    CHECK(z.is_zero());
}

TEST_CASE("combine: like terms add") {
    const auto p = mono(2, {0, 1}, 1);
    const auto s = poly_combine({{Rational(2), p}, {Rational(3), p}});
    CHECK(s.coefficient({0, 1}) == Rational(5));
    CHECK(s.term_count() == 1);
}

TEST_CASE("combine rejects mismatched variable spaces") {
    CHECK_THROWS_AS(
        poly_combine({{Rational(1), MatchingPolynomial(2)},
                      {Rational(1), MatchingPolynomial(3)}}),
        DomainError);
    CHECK_THROWS_AS(poly_combine({}), DomainError);
}

TEST_CASE("monomial validation") {
    MatchingPolynomial p(3);
    CHECK_THROWS_AS(p.add_term({1, 1}, Rational(1)), DomainError);
    CHECK_THROWS_AS(p.add_term({2, 1}, Rational(1)), DomainError);
    CHECK_THROWS_AS(p.add_term({3}, Rational(1)), DomainError);
    CHECK_THROWS_AS(p.add_term({-1}, Rational(1)), DomainError);
}

TEST_CASE("eval: single monomial") {
    const auto p = mono(2, {0, 1}, 1);
    CHECK(poly_eval(p, {{0, Rational(2)}, {1, Rational(3)}}) == Rational(6));
}

TEST_CASE("eval: zero polynomial") {
    CHECK(poly_eval(MatchingPolynomial(4), {}) == Rational(0));
}

TEST_CASE("eval requires every used variable") {
    const auto p = mono(2, {0, 1}, 1);
    CHECK_THROWS_AS(poly_eval(p, {{0, Rational(1)}}), DomainError);
}

TEST_CASE("equality and canonical form across construction orders") {
    MatchingPolynomial a(4), b(4);
    a.add_term({0, 2}, Rational(1, 2));
    a.add_term({1, 3}, Rational(-2));
    a.add_term({}, Rational(3));
    b.add_term({}, Rational(3));
    b.add_term({1, 3}, Rational(-2));
    b.add_term({0, 2}, Rational(1, 4));
    b.add_term({0, 2}, Rational(1, 4));
    CHECK(poly_equal(a, b));
    b.add_term({0, 1}, Rational(1));
    CHECK_FALSE(poly_equal(a, b));
    CHECK_THROWS_AS(poly_equal(a, MatchingPolynomial(5)), DomainError);
}

TEST_CASE("ring laws on randomized polynomials") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int nv = 4;
        const auto p = random_poly(rng, nv);
        const auto q = random_poly(rng, nv);
        const auto r = random_poly(rng, nv);
        const Rational s(static_cast<long>(rng() % 7) - 3,
                         static_cast<long>(rng() % 3) + 1);

        // commutativity / associativity of combine
        const auto pq = poly_combine({{1, p}, {1, q}});
        const auto qp = poly_combine({{1, q}, {1, p}});
        CHECK(poly_equal(pq, qp));
        const auto left = poly_combine({{1, pq}, {1, r}});
        const auto right = poly_combine({{1, p}, {1, poly_combine({{1, q}, {1, r}})}});
        CHECK(poly_equal(left, right));

        // scalar distributes over combine
        const auto scaled_sum = poly_combine({{s, pq}});
        const auto sum_scaled = poly_combine({{s, p}, {s, q}});
        CHECK(poly_equal(scaled_sum, sum_scaled));
    }
}

TEST_CASE("eval is a ring homomorphism on combine") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const int nv = 4;
        const auto p = random_poly(rng, nv);
        const auto q = random_poly(rng, nv);
        const Rational c1(static_cast<long>(rng() % 9) - 4);
        const Rational c2(static_cast<long>(rng() % 9) - 4, 2);
        const auto assignment = random_assignment(rng, nv);
        const auto combined = poly_combine({{c1, p}, {c2, q}});
        CHECK(poly_eval(combined, assignment) ==
              c1 * poly_eval(p, assignment) + c2 * poly_eval(q, assignment));
    }
}

TEST_CASE("canonical rendering") {
    MatchingPolynomial p(4);
    CHECK(poly_render(p) == "0");
    p.add_term({0, 3}, Rational(1));
    p.add_term({1, 2}, Rational(-1));
    CHECK(poly_render(p) == "1/1*x0*x3 - 1/1*x1*x2");
    MatchingPolynomial q(2);
    q.add_term({}, Rational(-3, 2));
    q.add_term({0}, Rational(2));
    CHECK(poly_render(q) == "-3/2 + 2/1*x0");
}
