#include "support.hpp"

#include <doctest.h>

using namespace symres;
using symres::test::frac;
using symres::test::parse;

TEST_CASE("weights of the curve family")
{
    CHECK(Weights::for_curve(1, 1) == Weights{3, 4, 5});
    CHECK(Weights::for_curve(1, 2) == Weights{3, 5, 7});
    CHECK(Weights::for_curve(3, 2) == Weights{7, 9, 11});
    CHECK(Weights::for_curve(2, 1).valid());
    CHECK_FALSE(Weights{3, 6, 9}.valid());
    CHECK_THROWS_AS(Weights::for_curve(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(Weights::for_curve(1, 0), std::invalid_argument);
}

TEST_CASE("weighted degree")
{
    const Weights w = Weights::for_curve(1, 1);
    CHECK(weighted_degree(Monomial{0, 2, 0}, w) == 8);
    CHECK(weighted_degree(Monomial{}, w) == 0);
    CHECK(weighted_degree(Monomial{0, 0, 0}, w) == 0);
    CHECK(weighted_degree(Monomial{2, 1, 0}, w) == 10);
    const RingPtr ring = Ring::curve_ring(w);
    CHECK(ring->weighted_degree(Monomial{1, 1, 1}) == 12);
}

TEST_CASE("monomial operations")
{
    const Monomial a{2, 1, 0};
    const Monomial b{1, 3, 2};
    CHECK(a * b == Monomial{3, 4, 2});
    CHECK(a.lcm(b) == Monomial{2, 3, 2});
    CHECK(a.gcd(b) == Monomial{1, 1, 0});
    CHECK(Monomial{1, 1, 0}.divides(a));
    CHECK_FALSE(a.divides(b));
    CHECK((a * b) / b == a);
    CHECK(Monomial{1, 0, 0}.coprime(Monomial{0, 2, 5}));
    CHECK_FALSE(a.coprime(b));
    CHECK(b.total_degree() == 6);
    CHECK_THROWS(Monomial{kMaxExponent, 0, 0} * Monomial{1, 0, 0});
    CHECK_THROWS(Monomial{-1, 0, 0});
}

TEST_CASE("addition")
{
    const CurveIdeal c = make_curve(1, 1);
    const Polynomial zero(c.ring);
    CHECK(c.f + zero == c.f);
    CHECK((c.f + (-c.f)).is_zero());
    CHECK(c.g3 + parse(c, "x1*x3") == parse(c, "x2^2"));
    CHECK(c.g1 - c.g1 == zero);
}

TEST_CASE("multiplication")
{
    const CurveIdeal c = make_curve(1, 1);
    CHECK(c.f * Polynomial(c.ring, Rational(1)) == c.f);
    CHECK((c.f * Polynomial(c.ring)).is_zero());
    const Polynomial sq = c.g3 * c.g3;
    CHECK(sq == parse(c, "x2^4 - 2*x1*x2^2*x3 + x1^2*x3^2"));
    CHECK(sq.homogeneous_degree() == 16);
    CHECK(c.g3.pow(3) == sq * c.g3);
    CHECK(c.g3.pow(0) == Polynomial(c.ring, Rational(1)));
}

TEST_CASE("weighted homogeneity")
{
    const CurveIdeal c = make_curve(1, 1);
    CHECK(c.f.homogeneous_degree() == 15);
    CHECK(c.g2.homogeneous_degree() == 9);
    CHECK(c.g1.homogeneous_degree() == 10);
    CHECK(c.g3.homogeneous_degree() == 8);
    const Polynomial mixed = parse(c, "x2^2 + x3");
    CHECK_FALSE(mixed.homogeneous_degree().has_value());
    CHECK_FALSE(mixed.is_weighted_homogeneous());
    CHECK(mixed.max_degree() == 8);

    const Polynomial zero(c.ring);
    CHECK_FALSE(zero.homogeneous_degree().has_value());
    CHECK_FALSE(zero.max_degree().has_value());
    CHECK(zero.is_weighted_homogeneous());
}

TEST_CASE("exact rational coefficients")
{
    const CurveIdeal c = make_curve(1, 1);
    const Polynomial p = parse(c, "1/3*x1 + 2/6*x1");
    CHECK(p == parse(c, "2/3*x1"));
    CHECK(p.leading_coeff() == frac(2, 3));
    const Polynomial q = p * parse(c, "3/2*x2");
    CHECK(q == parse(c, "x1*x2"));
    CHECK(parse(c, "1/3*x1").scaled(3) == parse(c, "x1"));
}

TEST_CASE("canonical text")
{
    const CurveIdeal c = make_curve(1, 1);
    CHECK(c.f.to_string() == "-x1^5 + 3*x1^2*x2*x3 - x1*x2^3 - x3^3");
    CHECK(c.g1.to_string() == "x1^2*x2 - x3^2");
    CHECK(Polynomial(c.ring).to_string() == "0");
    CHECK(parse(c, "-2/3*x3 + 1").to_string() == "-2/3*x3 + 1");
    for (const auto& p : {c.f, c.g1, c.g2, c.g3, c.f * c.g1}) {
        CHECK(Polynomial::parse(c.ring, p.to_string()) == p);
    }
    CHECK_THROWS(Polynomial::parse(c.ring, "x4"));
    CHECK_THROWS(Polynomial::parse(c.ring, "x1 +"));
}

TEST_CASE("rings must match")
{
    const CurveIdeal a = make_curve(1, 1);
    const CurveIdeal b = make_curve(1, 2);
    CHECK_THROWS_AS(a.g1 + b.g1, std::invalid_argument);
    CHECK_THROWS_AS(a.g1 * b.g1, std::invalid_argument);
    // Equal rings built separately are interchangeable.
    const CurveIdeal a2 = make_curve(1, 1);
    CHECK(a.g1 + a2.g1 == a.g1.scaled(2));
}

TEST_CASE("monomial order")
{
    const RingPtr ring = Ring::curve_ring(Weights::for_curve(1, 1));
    // Weighted degree first.
    CHECK(ring->compare(Monomial{0, 0, 2}, Monomial{0, 2, 0}) == std::strong_ordering::greater);
    // Ties broken with x1 > x2 > x3.
    CHECK(ring->compare(Monomial{2, 1, 1}, Monomial{1, 3, 0}) == std::strong_ordering::greater);
    CHECK(ring->compare(Monomial{1, 0, 1}, Monomial{0, 2, 0}) == std::strong_ordering::greater);
    CHECK(ring->compare(Monomial{}, Monomial{0, 0, 1}) == std::strong_ordering::less);

    const RingPtr elim = Ring::elimination_ring(ring);
    CHECK(elim->arity() == 4);
    CHECK(elim->names().back() == "t");
    // Any power of t beats every t-free monomial.
    CHECK(elim->compare(Monomial{0, 0, 0, 1}, Monomial{9, 9, 9, 0}) == std::strong_ordering::greater);
    CHECK(elim->compare(Monomial{1, 0, 0, 1}, Monomial{0, 0, 0, 1}) == std::strong_ordering::greater);
}

TEST_CASE("substitution and transfer")
{
    const CurveIdeal c = make_curve(1, 1);
    CHECK(c.f.drop_variable(0) == parse(c, "-x3^3"));
    CHECK(c.g3.drop_variable(0) == parse(c, "x2^2"));
    const RingPtr elim = Ring::elimination_ring(c.ring);
    const std::size_t map[] = {0, 1, 2};
    const Polynomial lifted = c.f.transfer(elim, map);
    CHECK(lifted.ring()->arity() == 4);
    CHECK(lifted.to_string() == c.f.to_string());
}
