// Randomized properties. Seeds are fixed so failures reproduce.

#include "support.hpp"

#include "symres/regularity.hpp"

#include <doctest.h>

#include <algorithm>

using namespace symres;
using symres::test::frac;
using symres::test::random_homogeneous;
using symres::test::random_monomial;
using symres::test::random_polynomial;

namespace {

constexpr int kCases = 100;

RingPtr ring11()
{
    return Ring::curve_ring(Weights::for_curve(1, 1));
}

// Small random homogeneous ideal with 2 or 3 generators of low degree.
Ideal random_ideal(std::mt19937& rng, const RingPtr& ring)
{
    std::uniform_int_distribution<int> count(2, 3);
    std::uniform_int_distribution<long> deg(8, 14);
    std::vector<Polynomial> gens;
    const int k = count(rng);
    while (static_cast<int>(gens.size()) < k) {
        Polynomial g = random_homogeneous(rng, ring, deg(rng), 3);
        if (!g.is_zero()) {
            gens.push_back(std::move(g));
        }
    }
    return Ideal(ring, std::move(gens));
}

MonomialIdeal2 random_monomial_ideal(std::mt19937& rng, int d2, int d3)
{
    std::uniform_int_distribution<int> count(1, 6);
    std::uniform_int_distribution<int> e(0, 7);
    std::vector<Exp2> gens;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
        gens.push_back(Exp2{e(rng), e(rng)});
    }
    return MonomialIdeal2(d2, d3, gens);
}

} // namespace

TEST_CASE("ring axioms")
{
    std::mt19937 rng(101);
    const RingPtr ring = ring11();
    for (int i = 0; i < kCases; ++i) {
        const Polynomial a = random_polynomial(rng, ring, 4, 3);
        const Polynomial b = random_polynomial(rng, ring, 4, 3);
        const Polynomial c = random_polynomial(rng, ring, 3, 3);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * Polynomial(ring, Rational(1)) == a);
        CHECK(Polynomial::parse(ring, a.to_string()) == a);
    }
}

TEST_CASE("monomial order axioms")
{
    std::mt19937 rng(202);
    for (const RingPtr& ring : {ring11(), Ring::elimination_ring(ring11())}) {
        const std::size_t n = ring->arity();
        for (int i = 0; i < kCases; ++i) {
            const Monomial a = random_monomial(rng, n, 5);
            const Monomial b = random_monomial(rng, n, 5);
            const Monomial c = random_monomial(rng, n, 5);
            CHECK((ring->compare(a, b) == std::strong_ordering::equal) == (a == b));
            CHECK((ring->compare(a, b) < 0) == (ring->compare(b, a) > 0));
            CHECK(ring->compare(a * c, b * c) == ring->compare(a, b));
            CHECK(ring->compare(Monomial{}, a * c) != std::strong_ordering::greater);
            if (ring->compare(a, b) < 0 && ring->compare(b, c) < 0) {
                CHECK(ring->compare(a, c) < 0);
            }
        }
    }
}

TEST_CASE("products of homogeneous elements are homogeneous")
{
    std::mt19937 rng(303);
    const RingPtr ring = ring11();
    std::uniform_int_distribution<long> deg(3, 20);
    int tested = 0;
    while (tested < kCases) {
        const long da = deg(rng);
        const long db = deg(rng);
        const Polynomial a = random_homogeneous(rng, ring, da, 3);
        const Polynomial b = random_homogeneous(rng, ring, db, 3);
        if (a.is_zero() || b.is_zero()) {
            continue;
        }
        ++tested;
        CHECK((a * b).homogeneous_degree() == da + db);
        const Polynomial s = a + b;
        if (da != db && !s.is_zero()) {
            CHECK_FALSE(s.homogeneous_degree().has_value());
        }
    }
}

TEST_CASE("Buchberger output is a reduced Groebner basis")
{
    std::mt19937 rng(404);
    const RingPtr ring = ring11();
    for (int i = 0; i < kCases; ++i) {
        const Ideal ideal = random_ideal(rng, ring);
        const GroebnerBasis& gb = ideal.basis();
        const auto& el = gb.elements();
        for (std::size_t a = 0; a < el.size(); ++a) {
            CHECK(el[a].leading_coeff() == 1);
            for (std::size_t b = a + 1; b < el.size(); ++b) {
                CHECK(gb.reduces_to_zero(s_polynomial(el[a], el[b])));
            }
            // Reduced: no term of one element is divisible by another leading monomial.
            for (std::size_t b = 0; b < el.size(); ++b) {
                if (a == b) {
                    continue;
                }
                for (const auto& t : el[a].terms()) {
                    CHECK_FALSE(el[b].leading_monomial().divides(t.mono));
                }
            }
        }
        for (const auto& g : ideal.generators()) {
            CHECK(ideal_member(ideal, g));
        }
    }
}

TEST_CASE("reduced bases do not depend on the presentation")
{
    std::mt19937 rng(505);
    const RingPtr ring = ring11();
    for (int i = 0; i < kCases; ++i) {
        const Ideal ideal = random_ideal(rng, ring);
        std::vector<Polynomial> gens = ideal.generators();
        std::shuffle(gens.begin(), gens.end(), rng);
        // Add a combination of existing generators, homogeneous of its own degree.
        const Polynomial extra = gens.front() * random_homogeneous(rng, ring, 8, 2);
        if (!extra.is_zero()) {
            gens.push_back(extra);
        }
        gens.push_back(gens.back().scaled(frac(-7, 3)));
        const Ideal other(ring, gens);
        CHECK(other.basis() == ideal.basis());
    }
}

TEST_CASE("colon ideals are sandwiched")
{
    std::mt19937 rng(606);
    const RingPtr ring = ring11();
    std::uniform_int_distribution<std::size_t> var(0, 2);
    for (int i = 0; i < kCases; ++i) {
        const Ideal ideal = random_ideal(rng, ring);
        const Polynomial x = Polynomial::variable(ring, var(rng));
        const Ideal col = colon_by_element(ideal, x);
        CHECK(ideal_subset(ideal, col));
        // x (I : x) lies in I.
        for (const auto& g : col.basis().elements()) {
            CHECK(ideal_member(ideal, g * x));
        }
    }
}

TEST_CASE("containment is a partial order on ideals")
{
    std::mt19937 rng(707);
    const RingPtr ring = ring11();
    for (int i = 0; i < kCases; ++i) {
        const Ideal a = random_ideal(rng, ring);
        const Ideal b = random_ideal(rng, ring);
        const Ideal s = ideal_sum(a, b);
        const Ideal p = ideal_product(a, b);
        CHECK(ideal_subset(a, a));
        CHECK(ideal_subset(a, s));
        CHECK(ideal_subset(b, s));
        CHECK(ideal_subset(p, a));
        CHECK(ideal_subset(p, b));
        CHECK(ideal_subset(p, s));
        CHECK(ideal_equal(ideal_sum(s, a), s));
        if (ideal_subset(a, b) && ideal_subset(b, a)) {
            CHECK(ideal_equal(a, b));
        }
    }
}

TEST_CASE("minimization is idempotent and order independent")
{
    std::mt19937 rng(808);
    for (int i = 0; i < kCases; ++i) {
        const MonomialIdeal2 ideal = random_monomial_ideal(rng, 4, 5);
        const MonomialIdeal2 min = minimize(ideal);
        CHECK(min.is_minimal());
        CHECK(minimize(min).generators() == min.generators());
        std::vector<Exp2> gens = ideal.generators();
        std::shuffle(gens.begin(), gens.end(), rng);
        CHECK(minimize(MonomialIdeal2(4, 5, gens)).generators() == min.generators());
        for (Exp2 g : ideal.generators()) {
            CHECK(min.contains(g));
        }
    }
}

TEST_CASE("Hilbert series from Hilbert-Burch matches counting")
{
    std::mt19937 rng(909);
    for (int i = 0; i < kCases; ++i) {
        const MonomialIdeal2 ideal = random_monomial_ideal(rng, 5, 7);
        const HilbertComparison cmp = compare_hilbert_series(ideal, hilbert_check_bound(ideal));
        CHECK(cmp.equal());
    }
}

TEST_CASE("monomial colon ideals")
{
    std::mt19937 rng(1010);
    std::uniform_int_distribution<int> e(0, 4);
    for (int i = 0; i < kCases; ++i) {
        const MonomialIdeal2 ideal = random_monomial_ideal(rng, 4, 5);
        const Exp2 u{e(rng), e(rng)};
        const MonomialIdeal2 col = monomial_colon(ideal, u);
        const MonomialIdeal2 min = minimize(ideal);
        for (Exp2 g : min.generators()) {
            CHECK(col.contains(g));
        }
        for (Exp2 g : col.generators()) {
            CHECK(ideal.contains(g * u));
        }
    }
}
