// Monomial ideals of T = k[x2, x3] with weights (d2, d3).

#ifndef SYMRES_MONOMIAL_IDEAL_HPP
#define SYMRES_MONOMIAL_IDEAL_HPP

#include <compare>
#include <string>
#include <vector>

namespace symres {

/// x2^a * x3^b.
struct Exp2 {
    int a = 0;
    int b = 0;

    bool divides(Exp2 other) const { return a <= other.a && b <= other.b; }
    Exp2 operator*(Exp2 other) const { return {a + other.a, b + other.b}; }

    friend auto operator<=>(const Exp2&, const Exp2&) = default;
};

class MonomialIdeal2 {
public:
    MonomialIdeal2(int d2, int d3, std::vector<Exp2> generators = {});

    int d2() const { return d2_; }
    int d3() const { return d3_; }
    const std::vector<Exp2>& generators() const { return gens_; }
    bool empty() const { return gens_.empty(); }

    long degree(Exp2 e) const { return static_cast<long>(e.a) * d2_ + static_cast<long>(e.b) * d3_; }
    bool contains(Exp2 e) const;
    /// No generator divides another and generators are sorted by descending
    /// x2-exponent (hence strictly increasing x3-exponent).
    bool is_minimal() const;
    bool same_grading(const MonomialIdeal2& other) const { return d2_ == other.d2_ && d3_ == other.d3_; }

    /// "(x2^2, x2*x3, x3^2)".
    std::string to_string() const;

    /// Equal as ideals: compares minimal generating sets.
    friend bool operator==(const MonomialIdeal2& a, const MonomialIdeal2& b);

private:
    int d2_;
    int d3_;
    std::vector<Exp2> gens_;
};

/// Drops every generator divisible by another (and duplicates), then sorts
/// by descending x2-exponent.
MonomialIdeal2 minimize(const MonomialIdeal2& ideal);

MonomialIdeal2 monomial_sum(const MonomialIdeal2& a, const MonomialIdeal2& b);
MonomialIdeal2 monomial_product(const MonomialIdeal2& a, const MonomialIdeal2& b);
/// n >= 1.
MonomialIdeal2 monomial_power(const MonomialIdeal2& ideal, int n);
/// (I : x2^a x3^b), by exponent subtraction.
MonomialIdeal2 monomial_colon(const MonomialIdeal2& ideal, Exp2 divisor);

} // namespace symres

#endif
