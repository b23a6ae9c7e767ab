#include "symres/curve.hpp"

#include <numeric>
#include <stdexcept>

namespace symres {

bool CurveParams::valid() const
{
    return q >= 1 && m >= 1 && std::gcd(d(), m) == 1;
}

void CurveParams::validate() const
{
    if (q < 1 || m < 1) {
        throw std::invalid_argument("curve parameters must be positive (q=" + std::to_string(q) +
                                    ", m=" + std::to_string(m) + ")");
    }
    if (std::gcd(d(), m) != 1) {
        throw std::invalid_argument("gcd(2q+1, m) = " + std::to_string(std::gcd(d(), m)) + " for q=" +
                                    std::to_string(q) + ", m=" + std::to_string(m));
    }
}

CurveIdeal make_curve(int q, int m)
{
    return make_curve(CurveParams{q, m});
}

CurveIdeal make_curve(const CurveParams& params)
{
    params.validate();
    const int q = params.q;
    const int m = params.m;
    const Weights w = Weights::for_curve(q, m);
    const RingPtr ring = Ring::curve_ring(w);

    auto mono = [&ring](int a, int b, int c, const Rational& coeff) {
        return Polynomial(ring, Monomial{a, b, c}, coeff);
    };
    Polynomial g1 = mono(m + q, 1, 0, 1) + mono(0, 0, q + 1, -1);
    Polynomial g2 = mono(m + q + 1, 0, 0, 1) + mono(0, 1, q, -1);
    Polynomial g3 = mono(0, 2, 0, 1) + mono(1, 0, 1, -1);
    Polynomial f = mono(2 * (m + q) + 1, 0, 0, -1) + mono(m + q - 1, 3, q - 1, -1) + mono(m + q, 1, q, 3) +
                   mono(0, 0, 2 * q + 1, -1);

    Ideal p(ring, {g1, g2, g3});
    Ideal maximal(ring, {Polynomial::variable(ring, 0), Polynomial::variable(ring, 1), Polynomial::variable(ring, 2)});
    return CurveIdeal{params, w, ring, std::move(g1), std::move(g2), std::move(g3), std::move(f), std::move(p),
                      std::move(maximal)};
}

IdentityCheck verify_cofactor_identities(const CurveIdeal& c)
{
    const int q = c.params.q;
    const int m = c.params.m;
    const RingPtr& r = c.ring;
    auto mono = [&r](int a, int b, int e) { return Polynomial(r, Monomial{a, b, e}); };

    IdentityCheck check;
    auto expect = [&check](const char* name, const Polynomial& lhs, const Polynomial& rhs) {
        if (!(lhs == rhs)) {
            check.ok = false;
            check.failures.emplace_back(name);
        }
    };
    expect("x1*f = -g2^2 - x3^(q-1)*g1*g3", c.x(1) * c.f, -(c.g2 * c.g2) - mono(0, 0, q - 1) * c.g1 * c.g3);
    expect("x2*f = -x1^(m+q-1)*x3^(q-1)*g3^2 - g1*g2", c.x(2) * c.f,
           -(mono(m + q - 1, 0, q - 1) * c.g3 * c.g3) - c.g1 * c.g2);
    expect("x3*f = -g1^2 + x1^(m+q-1)*g2*g3", c.x(3) * c.f, -(c.g1 * c.g1) + mono(m + q - 1, 0, 0) * c.g2 * c.g3);
    expect("f = x3^q*g1 - x1^(m+q)*g2 - x1^(m+q-1)*x2*x3^(q-1)*g3", c.f,
           mono(0, 0, q) * c.g1 - mono(m + q, 0, 0) * c.g2 - mono(m + q - 1, 1, q - 1) * c.g3);
    return check;
}

namespace {

Ideal second_symbolic(const CurveIdeal& c)
{
    return ideal_sum(ideal_power(c.p, 2), Ideal(c.ring, {c.f}));
}

} // namespace

Ideal symbolic_power_structural(const CurveIdeal& c, int n)
{
    if (n < 1) {
        throw std::invalid_argument("symbolic power needs n >= 1");
    }
    if (n == 1) {
        return c.p;
    }
    const Ideal even = ideal_power(second_symbolic(c), n / 2);
    return n % 2 == 0 ? even : ideal_product(c.p, even);
}

Ideal symbolic_power_oracle(const CurveIdeal& c, int n)
{
    if (n < 1) {
        throw std::invalid_argument("symbolic power needs n >= 1");
    }
    return saturate(ideal_power(c.p, n), c.x(1));
}

MonomialIdeal2 reduce_mod_x1(const Ideal& ideal)
{
    const Weights w = ideal.ring()->curve_weights();
    std::vector<Exp2> gens;
    for (const auto& g : ideal.generators()) {
        const Polynomial image = g.drop_variable(0);
        if (image.is_zero()) {
            continue;
        }
        if (image.size() != 1) {
            throw std::domain_error("image mod x1 is not a monomial: " + image.to_string());
        }
        const Monomial mono = image.leading_monomial();
        gens.push_back(Exp2{mono.exponent(1), mono.exponent(2)});
    }
    return minimize(MonomialIdeal2(w.d2, w.d3, std::move(gens)));
}

PowerCache::PowerCache(CurveIdeal curve) : curve_(std::move(curve)) {}

Ideal PowerCache::ordinary(int n)
{
    if (n < 1) {
        throw std::invalid_argument("ordinary power needs n >= 1");
    }
    std::lock_guard lock(mutex_);
    if (auto it = ordinary_.find(n); it != ordinary_.end()) {
        return it->second;
    }
    Ideal result = n == 1 ? curve_.p : ideal_product(ordinary(n - 1), curve_.p);
    ordinary_.emplace(n, result);
    return result;
}

Ideal PowerCache::symbolic(int n)
{
    if (n < 1) {
        throw std::invalid_argument("symbolic power needs n >= 1");
    }
    std::lock_guard lock(mutex_);
    if (auto it = symbolic_.find(n); it != symbolic_.end()) {
        return it->second;
    }
    Ideal result = curve_.p;
    if (n == 2) {
        result = second_symbolic(curve_);
    } else if (n % 2 == 0) {
        result = ideal_product(symbolic(n - 2), symbolic(2));
    } else if (n > 1) {
        result = ideal_product(curve_.p, symbolic(n - 1));
    }
    symbolic_.emplace(n, result);
    return result;
}

} // namespace symres
