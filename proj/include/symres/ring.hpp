// Exact sparse polynomials over the rationals in at most four variables,
// graded by positive integer weights.

#ifndef SYMRES_RING_HPP
#define SYMRES_RING_HPP

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symres {

using Rational = mpq_class;
using Integer = mpz_class;

inline constexpr std::size_t kMaxVars = 4;
inline constexpr int kMaxExponent = (1 << 15) - 1;

/// Weights of x1, x2, x3 for the curve C(d, d+m, d+2m).
struct Weights {
    int d1 = 1;
    int d2 = 1;
    int d3 = 1;

    /// d1 = 2q+1, d2 = d1+m, d3 = d1+2m. Throws on q < 1 or m < 1.
    static Weights for_curve(int q, int m);

    int m() const { return d2 - d1; }
    int q() const { return (d1 - 1) / 2; }
    /// Arithmetic progression with odd d1 and gcd(d1, m) = 1.
    bool valid() const;

    friend bool operator==(const Weights&, const Weights&) = default;
};

/// Exponent vector packed into 16-bit lanes. Bit 15 of each lane is kept
/// clear so that lane-wise comparisons can be done with one subtraction.
class Monomial {
public:
    constexpr Monomial() = default;
    explicit Monomial(std::initializer_list<int> exps);
    explicit Monomial(std::span<const int> exps);

    int exponent(std::size_t var) const { return static_cast<int>((bits_ >> (16 * var)) & 0xffffu); }
    int total_degree() const;
    bool is_one() const { return bits_ == 0; }

    bool divides(Monomial other) const { return (((other.bits_ | kGuard) - bits_) & kGuard) == kGuard; }
    bool coprime(Monomial other) const;

    Monomial operator*(Monomial other) const;
    /// Requires divides(*this).
    Monomial operator/(Monomial divisor) const { return Monomial(bits_ - divisor.bits_); }
    Monomial lcm(Monomial other) const;
    Monomial gcd(Monomial other) const;

    std::uint64_t bits() const { return bits_; }

    friend bool operator==(Monomial, Monomial) = default;

private:
    explicit constexpr Monomial(std::uint64_t bits) : bits_(bits) {}

    static constexpr std::uint64_t kGuard = 0x8000800080008000ull;
    std::uint64_t bits_ = 0;
};

enum class OrderKind {
    /// Weighted degree, ties broken lexicographically with x1 > x2 > x3.
    WeightedLex,
    /// Last variable is an auxiliary t of weight 0; monomials are compared
    /// by t-degree first, then by WeightedLex on the remaining variables.
    Elimination,
};

/// Totally ordered, additive encoding of a monomial under a ring's order.
using OrderKey = __int128;

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Polynomial ring context: variable names, weights and monomial order.
class Ring {
public:
    /// Three variables x1, x2, x3 with the given weights, WeightedLex order.
    static RingPtr curve_ring(const Weights& w);
    /// `base` extended by an auxiliary variable t of weight 0, Elimination order.
    static RingPtr elimination_ring(const RingPtr& base);
    static RingPtr make(std::vector<int> weights, OrderKind order, std::vector<std::string> names);

    std::size_t arity() const { return weights_.size(); }
    const std::vector<int>& weights() const { return weights_; }
    OrderKind order() const { return order_; }
    const std::vector<std::string>& names() const { return names_; }
    std::size_t variable_index(std::string_view name) const;

    long weighted_degree(Monomial mono) const;
    OrderKey key(Monomial mono) const;
    std::strong_ordering compare(Monomial a, Monomial b) const { return key(a) <=> key(b); }

    /// Weights as a Weights triple; only meaningful for three-variable rings
    /// or the x-part of an elimination ring.
    Weights curve_weights() const;

    bool same_as(const Ring& other) const;

private:
    Ring(std::vector<int> weights, OrderKind order, std::vector<std::string> names);

    std::vector<int> weights_;
    OrderKind order_;
    std::vector<std::string> names_;
    std::vector<std::array<long, kMaxVars>> rows_;
};

long weighted_degree(Monomial mono, const Weights& w);

struct Term {
    Monomial mono;
    OrderKey key = 0;
    Rational coeff;
};

/// Sparse polynomial with terms strictly decreasing in the ring's order and
/// no zero coefficients.
class Polynomial {
public:
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, const Rational& c);
    Polynomial(RingPtr ring, Monomial mono, const Rational& c = 1);

    /// Parses sums of terms like "-x1^5 + 3*x1^2*x2*x3 - 2/3*x3".
    static Polynomial parse(RingPtr ring, std::string_view text);
    static Polynomial variable(RingPtr ring, std::size_t index, int exponent = 1);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Monomial leading_monomial() const { return terms_.front().mono; }
    const Rational& leading_coeff() const { return terms_.front().coeff; }

    /// Common weighted degree of all terms; nullopt when the polynomial is
    /// zero or not weighted-homogeneous.
    std::optional<long> homogeneous_degree() const;
    bool is_weighted_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }
    /// Largest weighted degree of a term; nullopt for zero.
    std::optional<long> max_degree() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial scaled(const Rational& c) const;
    Polynomial mul_term(Monomial mono, const Rational& c) const;
    Polynomial pow(unsigned e) const;
    Polynomial monic() const;

    /// Substitutes 0 for variable `var`.
    Polynomial drop_variable(std::size_t var) const;
    /// Re-expresses the polynomial in `target`, mapping variable i to
    /// variable `var_map[i]` of the target ring.
    Polynomial transfer(const RingPtr& target, std::span<const std::size_t> var_map) const;

    /// Canonical text: terms in decreasing order, "-x1^5 + 3*x1^2*x2*x3 - x1*x2^3".
    std::string to_string() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    /// Builds from unsorted terms, combining duplicates and dropping zeros.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

private:
    void check_ring(const Polynomial& other) const;

    RingPtr ring_;
    std::vector<Term> terms_;
};

std::string to_string(const Rational& r);

} // namespace symres

#endif
