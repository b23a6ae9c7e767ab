// The defining prime of the monomial curve C(d, d+m, d+2m), d = 2q+1, and its
// symbolic powers.

#ifndef SYMRES_CURVE_HPP
#define SYMRES_CURVE_HPP

#include "symres/groebner.hpp"
#include "symres/monomial_ideal.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace symres {

struct CurveParams {
    int q = 1;
    int m = 1;

    int d() const { return 2 * q + 1; }
    /// q, m >= 1 and gcd(2q+1, m) = 1.
    bool valid() const;
    /// Throws std::invalid_argument naming the violated condition.
    void validate() const;

    friend auto operator<=>(const CurveParams&, const CurveParams&) = default;
};

/// Distinguished elements of the curve ideal p = (g1, g2, g3):
///   g1 = x1^(m+q) x2 - x3^(q+1)
///   g2 = x1^(m+q+1) - x2 x3^q
///   g3 = x2^2 - x1 x3
///   f  = -x1^(2(m+q)+1) - x1^(m+q-1) x2^3 x3^(q-1) + 3 x1^(m+q) x2 x3^q - x3^(2q+1)
/// f lies in the second symbolic power but not in p^2.
struct CurveIdeal {
    CurveParams params;
    Weights weights;
    RingPtr ring;
    Polynomial g1;
    Polynomial g2;
    Polynomial g3;
    Polynomial f;
    Ideal p;
    Ideal maximal;

    Polynomial x(std::size_t i) const { return Polynomial::variable(ring, i - 1); }
};

CurveIdeal make_curve(int q, int m);
CurveIdeal make_curve(const CurveParams& params);

struct IdentityCheck {
    bool ok = true;
    /// Names of identities that failed.
    std::vector<std::string> failures;
};

/// The exact identities
///   x1 f = -g2^2 - x3^(q-1) g1 g3
///   x2 f = -x1^(m+q-1) x3^(q-1) g3^2 - g1 g2
///   x3 f = -g1^2 + x1^(m+q-1) g2 g3
///   f    = x3^q g1 - x1^(m+q) g2 - x1^(m+q-1) x2 x3^(q-1) g3
IdentityCheck verify_cofactor_identities(const CurveIdeal& curve);

/// p^(1) = p, p^(2k) = (p^2 + (f))^k, p^(2k+1) = p * p^(2k).
Ideal symbolic_power_structural(const CurveIdeal& curve, int n);
/// (p^n : x1^inf). Independent of f and of the recursion above.
Ideal symbolic_power_oracle(const CurveIdeal& curve, int n);

/// Image of the generators under x1 -> 0 as a monomial ideal of k[x2, x3].
/// Throws std::domain_error if an image is not a single term.
MonomialIdeal2 reduce_mod_x1(const Ideal& ideal);

/// Memoized ordinary and symbolic powers of one curve. Safe for concurrent use.
class PowerCache {
public:
    explicit PowerCache(CurveIdeal curve);

    const CurveIdeal& curve() const { return curve_; }
    /// p^n, n >= 1.
    Ideal ordinary(int n);
    /// Structural p^(n), n >= 1.
    Ideal symbolic(int n);

private:
    CurveIdeal curve_;
    std::recursive_mutex mutex_;
    std::map<int, Ideal> ordinary_;
    std::map<int, Ideal> symbolic_;
};

} // namespace symres

#endif
