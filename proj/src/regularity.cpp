#include "symres/regularity.hpp"

#include "symres/curve.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace symres {

namespace {

// Closed forms carry halves (d d3 / 2); evaluate them in exact rationals and
// insist on an integer result.
long exact_integer(const Rational& value, const char* what)
{
    if (value.get_den() != 1) {
        throw std::logic_error(std::string(what) + " is not an integer: " + to_string(value));
    }
    return value.get_num().get_si();
}

void check_nonempty(const MonomialIdeal2& ideal)
{
    if (ideal.empty()) {
        throw std::invalid_argument("resolution of the zero ideal requested");
    }
}

} // namespace

MonomialIdeal2 build_In(int q, int m, int n)
{
    CurveParams{q, m}.validate();
    if (n < 1) {
        throw std::invalid_argument("I_n needs n >= 1");
    }
    const Weights w = Weights::for_curve(q, m);
    const MonomialIdeal2 j1(w.d2, w.d3, {{2, 0}, {1, q}, {0, q + 1}});
    const MonomialIdeal2 j2(w.d2, w.d3, {{0, 2 * q + 1}});
    MonomialIdeal2 result(w.d2, w.d3);
    for (int a2 = 0; 2 * a2 <= n; ++a2) {
        const int a1 = n - 2 * a2;
        MonomialIdeal2 term(w.d2, w.d3, {{0, 0}});
        if (a1 > 0) {
            term = monomial_power(j1, a1);
        }
        if (a2 > 0) {
            term = monomial_product(term, monomial_power(j2, a2));
        }
        result = monomial_sum(result, term);
    }
    return result;
}

HBResolution hilbert_burch(const MonomialIdeal2& ideal)
{
    check_nonempty(ideal);
    const MonomialIdeal2 min = minimize(ideal);
    const auto& g = min.generators();
    HBResolution res;
    for (std::size_t i = 0; i < g.size(); ++i) {
        res.generator_degrees.push_back(min.degree(g[i]));
        if (i + 1 < g.size()) {
            // Sorted by descending x2-exponent: lcm takes a from g[i], b from g[i+1].
            res.syzygy_degrees.push_back(min.degree(Exp2{g[i].a, g[i + 1].b}));
        }
    }
    return res;
}

long regularity_quotient(const MonomialIdeal2& ideal)
{
    const HBResolution res = hilbert_burch(ideal);
    long reg = 0;
    for (long deg : res.generator_degrees) {
        reg = std::max(reg, deg - 1);
    }
    for (long deg : res.syzygy_degrees) {
        reg = std::max(reg, deg - 2);
    }
    return reg;
}

long regularity_closed(int q, int m, int n)
{
    CurveParams{q, m}.validate();
    if (n < 1) {
        throw std::invalid_argument("regularity needs n >= 1");
    }
    const Weights w = Weights::for_curve(q, m);
    const Rational d(w.d1);
    const Rational d2(w.d2);
    const Rational d3(w.d3);
    const Rational half = d * d3 / 2;
    Rational value;
    if (n == 1) {
        value = d2 + (q + 1) * d3 - 2;
    } else if (q == 1 && m == 1) {
        value = 2 * d2 * n - 2 * d2 + d * d3 - 2;
    } else if (n % 2 == 0) {
        value = half * n + 2 * d2 - 2;
    } else if (q == 1 && m == 2) {
        value = half * n + 4 * d2 - half - 2;
    } else {
        value = half * n + d2 + (-d / 2 + q + 1) * d3 - 2;
    }
    return exact_integer(value, "regularity closed form");
}

long regularity_mod_x2sq_closed(int q, int m, int n)
{
    CurveParams{q, m}.validate();
    const Weights w = Weights::for_curve(q, m);
    const Rational d(w.d1);
    const Rational d3(w.d3);
    const Rational half = d * d3 / 2;
    const Rational value =
        n % 2 == 0 ? Rational(half * n + 2 * w.d2 - 2) : Rational(half * n + w.d2 + (-d / 2 + q + 1) * d3 - 2);
    return exact_integer(value, "regularity mod x2^2");
}

long regularity_mod_x3d_closed(int q, int m, int n)
{
    CurveParams{q, m}.validate();
    if (n % 2 != 0) {
        throw std::invalid_argument("regularity mod x3^d is stated for even n");
    }
    const Weights w = Weights::for_curve(q, m);
    return 2L * w.d2 * n - 2L * w.d2 + static_cast<long>(w.d1) * w.d3 - 2;
}

std::optional<long> regularity_odd_stated_11(int q, int m, int n)
{
    if (q != 1 || m != 1 || n < 3 || n % 2 == 0) {
        return std::nullopt;
    }
    const Weights w = Weights::for_curve(q, m);
    return 2L * w.d2 * n - 2L * w.d2 + static_cast<long>(w.d1) * w.d3 - 2 + 2L * w.d2;
}

HilbertComparison compare_hilbert_series(const MonomialIdeal2& ideal, long bound)
{
    const HBResolution res = hilbert_burch(ideal);
    const std::size_t len = static_cast<std::size_t>(bound) + 1;
    HilbertComparison out;

    // Numerator 1 - sum t^gen + sum t^syz, then divide by (1 - t^d2)(1 - t^d3)
    // by two running sums.
    std::vector<long> series(len, 0);
    auto add = [&series, len](long deg, long c) {
        if (deg >= 0 && static_cast<std::size_t>(deg) < len) {
            series[static_cast<std::size_t>(deg)] += c;
        }
    };
    add(0, 1);
    for (long deg : res.generator_degrees) {
        add(deg, -1);
    }
    for (long deg : res.syzygy_degrees) {
        add(deg, 1);
    }
    for (int step : {ideal.d2(), ideal.d3()}) {
        for (std::size_t i = static_cast<std::size_t>(step); i < len; ++i) {
            series[i] += series[i - static_cast<std::size_t>(step)];
        }
    }
    out.from_resolution = std::move(series);

    out.by_counting.assign(len, 0);
    for (long a = 0; a * ideal.d2() <= bound; ++a) {
        for (long b = 0; a * ideal.d2() + b * ideal.d3() <= bound; ++b) {
            const Exp2 e{static_cast<int>(a), static_cast<int>(b)};
            if (!ideal.contains(e)) {
                ++out.by_counting[static_cast<std::size_t>(ideal.degree(e))];
            }
        }
    }
    return out;
}

long hilbert_check_bound(const MonomialIdeal2& ideal)
{
    const HBResolution res = hilbert_burch(ideal);
    long top = 0;
    for (long deg : res.syzygy_degrees) {
        top = std::max(top, deg);
    }
    for (long deg : res.generator_degrees) {
        top = std::max(top, deg);
    }
    return top + static_cast<long>(ideal.d2()) * ideal.d3();
}

} // namespace symres
