#include "symres/monomial_ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace symres {

MonomialIdeal2::MonomialIdeal2(int d2, int d3, std::vector<Exp2> generators)
    : d2_(d2), d3_(d3), gens_(std::move(generators))
{
    if (d2 <= 0 || d3 <= 0) {
        throw std::invalid_argument("monomial ideal weights must be positive");
    }
    for (const auto& g : gens_) {
        if (g.a < 0 || g.b < 0) {
            throw std::invalid_argument("negative exponent in monomial ideal generator");
        }
    }
}

bool MonomialIdeal2::contains(Exp2 e) const
{
    return std::any_of(gens_.begin(), gens_.end(), [e](Exp2 g) { return g.divides(e); });
}

bool MonomialIdeal2::is_minimal() const
{
    for (std::size_t i = 0; i + 1 < gens_.size(); ++i) {
        if (!(gens_[i].a > gens_[i + 1].a && gens_[i].b < gens_[i + 1].b)) {
            return false;
        }
    }
    return true;
}

std::string MonomialIdeal2::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        const Exp2 g = gens_[i];
        std::string mono;
        auto factor = [&mono](const char* name, int e) {
            if (e == 0) {
                return;
            }
            if (!mono.empty()) {
                mono += '*';
            }
            mono += name;
            if (e > 1) {
                mono += '^' + std::to_string(e);
            }
        };
        factor("x2", g.a);
        factor("x3", g.b);
        out += mono.empty() ? "1" : mono;
    }
    return out + ")";
}

bool operator==(const MonomialIdeal2& a, const MonomialIdeal2& b)
{
    return a.same_grading(b) && minimize(a).gens_ == minimize(b).gens_;
}

MonomialIdeal2 minimize(const MonomialIdeal2& ideal)
{
    std::vector<Exp2> gens = ideal.generators();
    // Ascending in b, then a: a generator survives iff its x2-exponent is
    // below every x2-exponent seen so far.
    std::sort(gens.begin(), gens.end(), [](Exp2 x, Exp2 y) { return x.b != y.b ? x.b < y.b : x.a < y.a; });
    std::vector<Exp2> kept;
    for (const Exp2 g : gens) {
        if (kept.empty() || g.a < kept.back().a) {
            kept.push_back(g);
        }
    }
    return MonomialIdeal2(ideal.d2(), ideal.d3(), std::move(kept));
}

namespace {

void check_grading(const MonomialIdeal2& a, const MonomialIdeal2& b)
{
    if (!a.same_grading(b)) {
        throw std::invalid_argument("monomial ideals have different gradings");
    }
}

} // namespace

MonomialIdeal2 monomial_sum(const MonomialIdeal2& a, const MonomialIdeal2& b)
{
    check_grading(a, b);
    std::vector<Exp2> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return minimize(MonomialIdeal2(a.d2(), a.d3(), std::move(gens)));
}

MonomialIdeal2 monomial_product(const MonomialIdeal2& a, const MonomialIdeal2& b)
{
    check_grading(a, b);
    std::vector<Exp2> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const Exp2 x : a.generators()) {
        for (const Exp2 y : b.generators()) {
            gens.push_back(x * y);
        }
    }
    return minimize(MonomialIdeal2(a.d2(), a.d3(), std::move(gens)));
}

MonomialIdeal2 monomial_power(const MonomialIdeal2& ideal, int n)
{
    if (n < 1) {
        throw std::invalid_argument("monomial_power needs n >= 1");
    }
    MonomialIdeal2 result = minimize(ideal);
    for (int k = 1; k < n; ++k) {
        result = monomial_product(result, ideal);
    }
    return result;
}

MonomialIdeal2 monomial_colon(const MonomialIdeal2& ideal, Exp2 divisor)
{
    std::vector<Exp2> gens;
    gens.reserve(ideal.generators().size());
    for (const Exp2 g : ideal.generators()) {
        gens.push_back(Exp2{std::max(g.a - divisor.a, 0), std::max(g.b - divisor.b, 0)});
    }
    return minimize(MonomialIdeal2(ideal.d2(), ideal.d3(), std::move(gens)));
}

} // namespace symres
