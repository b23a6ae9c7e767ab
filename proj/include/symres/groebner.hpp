// Buchberger's algorithm and the ideal operations built on it.

#ifndef SYMRES_GROEBNER_HPP
#define SYMRES_GROEBNER_HPP

#include "symres/ring.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <span>
#include <vector>

namespace symres {

namespace detail {
struct IntegralBasis;
}

/// Reduced Groebner basis: monic elements sorted by increasing leading
/// monomial. Two bases of the same ring are equal iff their ideals are.
class GroebnerBasis {
public:
    GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }

    /// True iff `f` reduces to zero.
    bool reduces_to_zero(const Polynomial& f) const;
    /// Normal form, made primitive over the integers (zero iff f is a member).
    Polynomial reduce_primitive(const Polynomial& f) const;

    friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b);

private:
    RingPtr ring_;
    std::vector<Polynomial> elements_;
    // Primitive integer copies of the elements for fast reduction.
    std::shared_ptr<const detail::IntegralBasis> integral_;
};

/// Remainder of f on division by `divisors`: repeatedly reduces the greatest
/// reducible term against the first divisor (in list order) whose leading
/// monomial divides it. f - r lies in the ideal of `divisors`.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors);

struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};
/// normal_form with the quotients: f = sum quotients[i]*divisors[i] + remainder.
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors);

/// Reduced Groebner basis of the ideal generated by `gens` (zeros ignored).
/// Normal selection strategy with Gebauer-Moeller pair pruning.
GroebnerBasis buchberger(RingPtr ring, std::span<const Polynomial> gens);

/// Like buchberger, for the ideal generated by `known_basis` and `gens`, where
/// `known_basis` is already a Groebner basis: pairs among its elements are
/// skipped.
GroebnerBasis complete_basis(RingPtr ring, std::span<const Polynomial> known_basis, std::span<const Polynomial> gens);

/// S-polynomial of two nonzero polynomials.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Finitely generated ideal with a lazily computed reduced Groebner basis.
/// Copies share the cached basis; the cache is filled at most once.
class Ideal {
public:
    Ideal(RingPtr ring, std::vector<Polynomial> generators);
    /// Ideal generated by the basis elements, with the basis cached.
    static Ideal from_basis(GroebnerBasis basis);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return generators_; }
    bool is_zero() const { return generators_.empty(); }

    const GroebnerBasis& basis() const;
    bool has_basis() const;

    std::string to_string() const;

private:
    struct Cache {
        std::once_flag once;
        std::unique_ptr<GroebnerBasis> basis;
    };

    RingPtr ring_;
    std::vector<Polynomial> generators_;
    std::shared_ptr<Cache> cache_;
};

bool ideal_member(const Ideal& ideal, const Polynomial& f);
/// First generator of `inner` that is not in `outer`, if any.
std::optional<Polynomial> first_non_member(const Ideal& inner, const Ideal& outer);
bool ideal_subset(const Ideal& inner, const Ideal& outer);
bool ideal_equal(const Ideal& a, const Ideal& b);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
/// Pairwise products, dropping those that the already kept ones divide to zero.
Ideal ideal_product(const Ideal& a, const Ideal& b);
/// n >= 1; computed by iterated products.
Ideal ideal_power(const Ideal& ideal, int n);

/// (I : f) through I ∩ (f) in the ring extended by t under the elimination
/// order, followed by exact division by f.
Ideal colon_by_element(const Ideal& ideal, const Polynomial& f);
/// (I : f^∞) as the fixed point of repeated colons.
Ideal saturate(const Ideal& ideal, const Polynomial& f);

/// Exact quotient f / g; throws if g does not divide f.
Polynomial exact_quotient(const Polynomial& f, const Polynomial& g);

/// Generators of `gens` kept in order, skipping zeros, scalar duplicates and
/// elements that divide to zero against those already kept.
std::vector<Polynomial> prune_generators(std::span<const Polynomial> gens);

} // namespace symres

#endif
