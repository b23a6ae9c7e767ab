#include "symres/transfer_checks.hpp"

#include "symres/regularity.hpp"

#include <stdexcept>

namespace symres {

namespace {

LemmaCheck monomial_check(std::string id, int n, const MonomialIdeal2& computed, const MonomialIdeal2& expected)
{
    return LemmaCheck{std::move(id), n, computed == expected, minimize(computed).to_string(),
                      minimize(expected).to_string()};
}

LemmaCheck value_check(std::string id, int n, long computed, long expected)
{
    return LemmaCheck{std::move(id), n, computed == expected, std::to_string(computed), std::to_string(expected)};
}

// I R + (x1) for a monomial ideal I of k[x2, x3].
Ideal lift_plus_x1(const CurveIdeal& c, const MonomialIdeal2& ideal)
{
    std::vector<Polynomial> gens{c.x(1)};
    for (const Exp2 e : ideal.generators()) {
        gens.emplace_back(c.ring, Monomial{0, e.a, e.b});
    }
    return Ideal(c.ring, std::move(gens));
}

} // namespace

std::vector<LemmaCheck> check_transfer_lemmas(PowerCache& powers, int n_max, bool with_groebner)
{
    if (n_max < 1) {
        throw std::invalid_argument("lemma checks need n_max >= 1");
    }
    const CurveIdeal& c = powers.curve();
    const int q = c.params.q;
    const int m = c.params.m;
    const int d = c.params.d();
    const Weights w = c.weights;
    std::vector<LemmaCheck> out;

    // I_n is needed up to the largest index any check touches.
    std::vector<MonomialIdeal2> in{MonomialIdeal2(w.d2, w.d3)};
    for (int n = 1; n <= n_max; ++n) {
        in.push_back(build_In(q, m, n));
    }

    for (int n = 1; n <= n_max; ++n) {
        const Ideal sym = powers.symbolic(n);
        out.push_back(monomial_check("mod_x1_image", n, reduce_mod_x1(sym), in[n]));
        if (with_groebner) {
            const bool same = ideal_equal(ideal_sum(sym, Ideal(c.ring, {c.x(1)})), lift_plus_x1(c, in[n]));
            out.push_back(LemmaCheck{"mod_x1_groebner", n, same, same ? "equal" : "different", "equal"});
            const bool nzd = ideal_equal(colon_by_element(sym, c.x(1)), sym);
            out.push_back(LemmaCheck{"x1_nonzerodivisor", n, nzd, nzd ? "equal" : "different", "equal"});
        }
    }

    for (int k = 1; 2 * k <= n_max; ++k) {
        out.push_back(monomial_check("even_power", 2 * k, monomial_power(in[2], k), in[2 * k]));
        if (2 * k + 1 <= n_max) {
            out.push_back(monomial_check("odd_product", 2 * k + 1, monomial_product(in[1], in[2 * k]), in[2 * k + 1]));
        }
        if (k >= 2) {
            out.push_back(monomial_check("colon_x3d", 2 * k, monomial_colon(in[2 * k], Exp2{0, d}), in[2 * k - 2]));
        }
        if (2 * k + 1 <= n_max) {
            out.push_back(monomial_check("colon_x2sq", 2 * k + 1, monomial_colon(in[2 * k + 1], Exp2{2, 0}), in[2 * k]));
        }
    }

    for (int n = 1; n <= n_max; ++n) {
        const MonomialIdeal2 plus_x2sq = monomial_sum(in[n], MonomialIdeal2(w.d2, w.d3, {{2, 0}}));
        out.push_back(value_check("reg_mod_x2sq", n, regularity_quotient(plus_x2sq), regularity_mod_x2sq_closed(q, m, n)));
        if (n % 2 == 0) {
            const MonomialIdeal2 plus_x3d = monomial_sum(in[n], MonomialIdeal2(w.d2, w.d3, {{0, d}}));
            out.push_back(value_check("reg_mod_x3d", n, regularity_quotient(plus_x3d), regularity_mod_x3d_closed(q, m, n)));
        }
    }
    return out;
}

} // namespace symres
