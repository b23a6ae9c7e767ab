#include "symres/invariants.hpp"

#include "symres/regularity.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace symres {

namespace {

// gmpxx leaves a two-argument mpq_class uncanonicalized, and comparisons assume
// canonical form.
Rational ratio(long num, long den)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

} // namespace

long alpha(const Ideal& ideal)
{
    if (ideal.is_zero()) {
        throw std::invalid_argument("alpha of the zero ideal");
    }
    long best = std::numeric_limits<long>::max();
    for (const auto& g : ideal.basis().elements()) {
        const auto deg = g.homogeneous_degree();
        if (!deg) {
            throw std::invalid_argument("alpha needs a weighted-homogeneous ideal");
        }
        best = std::min(best, *deg);
    }
    return best;
}

long alpha_symbolic_closed(int q, int m, int n)
{
    CurveParams{q, m}.validate();
    if (n < 1) {
        throw std::invalid_argument("alpha of p^(n) needs n >= 1");
    }
    if (q == 1 && m == 1) {
        return n % 2 == 0 ? 15L * (n / 2) : 15L * ((n - 1) / 2) + 8;
    }
    return 2L * n * Weights::for_curve(q, m).d2;
}

Rational waldschmidt_closed(int q, int m)
{
    CurveParams{q, m}.validate();
    if (q == 1 && m == 1) {
        return ratio(15, 2);
    }
    return Rational(2 * Weights::for_curve(q, m).d2);
}

WaldschmidtResult waldschmidt(PowerCache& powers, int n_max)
{
    if (n_max < 1) {
        throw std::invalid_argument("waldschmidt needs n_max >= 1");
    }
    const CurveParams& params = powers.curve().params;
    WaldschmidtResult out;
    out.closed = waldschmidt_closed(params.q, params.m);
    for (int n = 1; n <= n_max; ++n) {
        const Rational value = ratio(alpha(powers.symbolic(n)), n);
        if (out.attained_at == 0 || value < out.estimate) {
            out.estimate = value;
            out.attained_at = n;
        }
    }
    return out;
}

int rho_n_closed(int q, int n)
{
    if (q < 1 || n < 1) {
        throw std::invalid_argument("rho_n needs q >= 1 and n >= 1");
    }
    const int k = n / (2 * q + 2);
    const int j = n % (2 * q + 2);
    const int base = k * (2 * q + 1) + j;
    return j <= 1 ? base + 1 : base;
}

RhoResult rho_n_computed(PowerCache& powers, int n, std::optional<int> cap)
{
    const int limit = cap.value_or(n + 1);
    const Ideal sym = powers.symbolic(n);
    RhoResult out;
    out.n = n;
    out.closed = rho_n_closed(powers.curve().params.q, n);

    // First r >= from with sym not inside p^r. Every r below it in the scan
    // was a verified containment.
    auto scan = [&](int from) -> bool {
        for (int r = from; r <= limit; ++r) {
            if (auto w = first_non_member(sym, powers.ordinary(r))) {
                out.value = r;
                out.witness = std::move(w);
                out.contained_below = r > from || r == 1;
                return true;
            }
        }
        return false;
    };

    const int start = std::max(1, out.closed - 1);
    const bool found = scan(start);
    if (!found || out.value != out.closed || !out.contained_below) {
        out.full_scan = true;
        if (!scan(1)) {
            throw std::runtime_error("rho_" + std::to_string(n) + " exceeds the scan cap " + std::to_string(limit));
        }
    }
    return out;
}

Rational resurgence_closed(int q)
{
    if (q < 1) {
        throw std::invalid_argument("resurgence needs q >= 1");
    }
    return ratio(2 * q + 2, 2 * q + 1);
}

ResurgenceResult resurgence(int q, int n_max)
{
    std::vector<RhoResult> table;
    for (int n = 1; n <= n_max; ++n) {
        RhoResult r;
        r.n = n;
        r.value = rho_n_closed(q, n);
        table.push_back(std::move(r));
    }
    return resurgence(q, table);
}

ResurgenceResult resurgence(int q, const std::vector<RhoResult>& table)
{
    ResurgenceResult out;
    out.closed = resurgence_closed(q);
    for (const auto& r : table) {
        const Rational value = ratio(r.n, r.value);
        if (out.attained_at == 0 || value > out.estimate) {
            out.estimate = value;
            out.attained_at = r.n;
        }
    }
    return out;
}

namespace {

std::string power_name(const char* base, int e)
{
    if (e == 0) {
        return "";
    }
    return e == 1 ? std::string(base) : std::string(base) + "^" + std::to_string(e);
}

ContainmentOutcome containment(PowerCache& powers, int symbolic, int m_exp, int p_exp)
{
    const CurveIdeal& c = powers.curve();
    Ideal target = powers.ordinary(p_exp);
    if (m_exp > 0) {
        target = ideal_product(ideal_power(c.maximal, m_exp), target);
    }
    ContainmentOutcome out;
    out.statement = "p^(" + std::to_string(symbolic) + ") in " + power_name("m", m_exp) + (m_exp > 0 ? "*" : "") +
                    power_name("p", p_exp);
    out.witness = first_non_member(powers.symbolic(symbolic), target);
    out.holds = !out.witness.has_value();
    return out;
}

} // namespace

HHReport check_hh_containments(PowerCache& powers, int n)
{
    if (n < 1) {
        throw std::invalid_argument("containment checks need n >= 1");
    }
    const int c = powers.curve().params.q == 1 ? n : 2 * n;
    HHReport out;
    out.n = n;
    out.even = containment(powers, 2 * n, c, n);
    out.odd = containment(powers, 2 * n - 1, n - 1, n);
    out.odd_stronger = containment(powers, 2 * n - 1, c, n);
    return out;
}

ChudnovskyResult check_chudnovsky(PowerCache& powers, int n)
{
    ChudnovskyResult out;
    out.lhs = ratio(alpha(powers.symbolic(n)), n);
    out.rhs = ratio(alpha(powers.curve().p) + 1, 2);
    out.holds = out.lhs >= out.rhs;
    return out;
}

BHResult check_bh_inequality(const CurveIdeal& curve)
{
    const CurveParams& params = curve.params;
    BHResult out;
    out.alpha_p = alpha(curve.p);
    out.reg_quotient = regularity_quotient(build_In(params.q, params.m, 1));
    out.gamma = waldschmidt_closed(params.q, params.m);
    out.rho = resurgence_closed(params.q);
    out.lower = Rational(out.alpha_p) / out.gamma;
    out.upper = Rational(out.reg_quotient + 1) / out.gamma;
    out.upper_quotient = Rational(out.reg_quotient) / out.gamma;
    out.holds = out.lower <= out.rho && out.rho <= out.upper;
    out.holds_quotient = out.lower <= out.rho && out.rho <= out.upper_quotient;
    return out;
}

namespace {

std::string element_name(int f_exp, bool with_g1)
{
    std::string name = with_g1 ? "g1*" : "";
    return name + power_name("f", f_exp);
}

WitnessCheck witness_check(PowerCache& powers, int f_exp, bool with_g1, int symbolic, int ordinary)
{
    const CurveIdeal& c = powers.curve();
    Polynomial element = c.f.pow(static_cast<unsigned>(f_exp));
    if (with_g1) {
        element = c.g1 * element;
    }
    WitnessCheck out;
    out.statement = element_name(f_exp, with_g1) + " in p^(" + std::to_string(symbolic) + "), not in p^" +
                    std::to_string(ordinary);
    out.in_symbolic = ideal_member(powers.symbolic(symbolic), element);
    out.outside_ordinary = !ideal_member(powers.ordinary(ordinary), element);

    const Polynomial image = element.drop_variable(0);
    if (image.size() == 1) {
        const Monomial mono = image.leading_monomial();
        const MonomialIdeal2 target = monomial_power(reduce_mod_x1(c.p), ordinary);
        out.outside_mod_x1 = !target.contains(Exp2{mono.exponent(1), mono.exponent(2)});
    }
    return out;
}

} // namespace

std::vector<WitnessCheck> check_rho_witnesses(PowerCache& powers, int n_max)
{
    const int q = powers.curve().params.q;
    std::vector<WitnessCheck> out;
    for (int k = 0; k * (2 * q + 2) <= n_max; ++k) {
        const int base = k * (2 * q + 2);
        if (k >= 1) {
            out.push_back(witness_check(powers, k * (q + 1), false, base, k * (2 * q + 1) + 1));
            if (base + 1 <= n_max) {
                out.push_back(witness_check(powers, k * (q + 1), true, base + 1, k * (2 * q + 1) + 2));
            }
        }
        for (int jp = 1; jp <= q && base + 2 * jp <= n_max; ++jp) {
            out.push_back(witness_check(powers, k * (q + 1) + jp, false, base + 2 * jp, k * (2 * q + 1) + 2 * jp));
            if (base + 2 * jp + 1 <= n_max) {
                out.push_back(
                    witness_check(powers, k * (q + 1) + jp, true, base + 2 * jp + 1, k * (2 * q + 1) + 2 * jp + 1));
            }
        }
    }
    return out;
}

InvariantReport invariant_report(PowerCache& powers, int n_max, int rho_n_max, int hh_n_max)
{
    const CurveIdeal& c = powers.curve();
    InvariantReport out;
    out.params = c.params;
    out.alpha_p = alpha(c.p);
    for (int n = 1; n <= n_max; ++n) {
        out.alpha_symbolic[n] = alpha(powers.symbolic(n));
        out.alpha_symbolic_closed[n] = alpha_symbolic_closed(c.params.q, c.params.m, n);
        out.chudnovsky_checks.push_back(check_chudnovsky(powers, n));
    }
    out.gamma = waldschmidt(powers, n_max);
    for (int n = 1; n <= rho_n_max; ++n) {
        out.rho_table.push_back(rho_n_computed(powers, n));
    }
    out.resurgence = resurgence(c.params.q, out.rho_table);
    for (int n = 1; n <= hh_n_max; ++n) {
        out.hh_checks.push_back(check_hh_containments(powers, n));
    }
    out.bh_inequality = check_bh_inequality(c);
    return out;
}

} // namespace symres
