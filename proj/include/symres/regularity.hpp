// Regularity of R/p^(n) through the monomial ideals I_n of T = k[x2, x3].

#ifndef SYMRES_REGULARITY_HPP
#define SYMRES_REGULARITY_HPP

#include "symres/monomial_ideal.hpp"

#include <optional>
#include <vector>

namespace symres {

/// I_n = sum over a1 + 2 a2 = n of J1^a1 J2^a2 with J1 = (x2^2, x2 x3^q, x3^(q+1))
/// and J2 = (x3^(2q+1)), minimized. n >= 1.
MonomialIdeal2 build_In(int q, int m, int n);

/// Degrees in the length-two resolution 0 -> F2 -> F1 -> T of T/I.
struct HBResolution {
    std::vector<long> generator_degrees;
    std::vector<long> syzygy_degrees;
};

/// Minimal resolution of a nonempty minimized ideal: one syzygy per pair of
/// consecutive generators, in degree of their lcm.
HBResolution hilbert_burch(const MonomialIdeal2& ideal);

/// max(shift - homological position) over hilbert_burch, i.e. reg(T/I).
long regularity_quotient(const MonomialIdeal2& ideal);

/// Closed form for reg(R/p^(n)) = reg(T/I_n).
long regularity_closed(int q, int m, int n);

/// Closed forms for reg(T/(I_n + (x2^2))) and, n even, reg(T/(I_n + (x3^d))).
long regularity_mod_x2sq_closed(int q, int m, int n);
long regularity_mod_x3d_closed(int q, int m, int n);

/// The odd-index value 2d2(n) - 2d2 + d d3 - 2 + 2d2 that is stated for
/// (q, m) = (1, 1) alongside the even case. It exceeds the true regularity by
/// 2d2 and is kept only so reports can show the discrepancy. Empty unless
/// (q, m) = (1, 1) and n >= 3 is odd.
std::optional<long> regularity_odd_stated_11(int q, int m, int n);

/// Coefficients 0..bound of the weighted Hilbert series of T/I, from the
/// resolution and by counting standard monomials. Equal iff the resolution's
/// degree data is consistent.
struct HilbertComparison {
    std::vector<long> from_resolution;
    std::vector<long> by_counting;
    bool equal() const { return from_resolution == by_counting; }
};
HilbertComparison compare_hilbert_series(const MonomialIdeal2& ideal, long bound);
/// Bound used by the default truncation check: max syzygy degree + d2 d3.
long hilbert_check_bound(const MonomialIdeal2& ideal);

} // namespace symres

#endif
