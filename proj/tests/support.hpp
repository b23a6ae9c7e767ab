#ifndef SYMRES_TESTS_SUPPORT_HPP
#define SYMRES_TESTS_SUPPORT_HPP

#include "symres/curve.hpp"

#include <random>
#include <utility>
#include <vector>

namespace symres::test {

// Parameters used throughout; all satisfy gcd(2q+1, m) = 1.
inline const std::vector<std::pair<int, int>> kGrid = {{1, 1}, {1, 2}, {1, 4}, {2, 1}, {2, 2}, {3, 1}, {3, 2}};

// Canonical num/den; gmpxx does not reduce two-argument constructions.
inline Rational frac(long num, long den)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Polynomial parse(const CurveIdeal& c, const char* text)
{
    return Polynomial::parse(c.ring, text);
}

inline Ideal ideal_of(const CurveIdeal& c, std::vector<Polynomial> gens)
{
    return Ideal(c.ring, std::move(gens));
}

inline Monomial random_monomial(std::mt19937& rng, std::size_t arity, int max_exp)
{
    std::uniform_int_distribution<int> e(0, max_exp);
    std::vector<int> exps(arity);
    for (auto& x : exps) {
        x = e(rng);
    }
    return Monomial(std::span<const int>(exps));
}

inline Rational random_coeff(std::mt19937& rng)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    int n = num(rng);
    if (n == 0) {
        n = 1;
    }
    Rational r(n, den(rng));
    r.canonicalize();
    return r;
}

inline Polynomial random_polynomial(std::mt19937& rng, const RingPtr& ring, int terms, int max_exp)
{
    Polynomial p(ring);
    for (int i = 0; i < terms; ++i) {
        p += Polynomial(ring, random_monomial(rng, ring->arity(), max_exp), random_coeff(rng));
    }
    return p;
}

// Sum of `terms` random monomials of weighted degree `deg`; zero when no
// monomial has that degree.
inline Polynomial random_homogeneous(std::mt19937& rng, const RingPtr& ring, long deg, int terms)
{
    std::vector<Monomial> monos;
    const auto& w = ring->weights();
    for (int a = 0; a * w[0] <= deg; ++a) {
        for (int b = 0; a * w[0] + b * w[1] <= deg; ++b) {
            const long rest = deg - a * w[0] - b * w[1];
            if (rest % w[2] == 0) {
                monos.push_back(Monomial{a, b, static_cast<int>(rest / w[2])});
            }
        }
    }
    Polynomial p(ring);
    if (monos.empty()) {
        return p;
    }
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    for (int i = 0; i < terms; ++i) {
        p += Polynomial(ring, monos[pick(rng)], random_coeff(rng));
    }
    return p;
}

} // namespace symres::test

#endif
