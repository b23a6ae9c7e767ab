// Initial degree, Waldschmidt constant, rho_n and resurgence of the curve
// ideal, with the containment checks that accompany them.

#ifndef SYMRES_INVARIANTS_HPP
#define SYMRES_INVARIANTS_HPP

#include "symres/curve.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace symres {

/// Least weighted degree of a nonzero element of a homogeneous ideal.
long alpha(const Ideal& ideal);
long alpha_symbolic_closed(int q, int m, int n);

struct WaldschmidtResult {
    /// min over 1 <= n <= n_max of alpha(p^(n)) / n.
    Rational estimate;
    int attained_at = 0;
    Rational closed;
};
Rational waldschmidt_closed(int q, int m);
WaldschmidtResult waldschmidt(PowerCache& powers, int n_max);

/// rho_n from n = k(2q+2) + j, 0 <= j <= 2q+1. rho_1 = 2 (k = 0, j = 1).
int rho_n_closed(int q, int n);

struct RhoResult {
    int n = 0;
    int value = 0;
    int closed = 0;
    /// Generator of p^(n) outside p^value.
    std::optional<Polynomial> witness;
    /// Every generator of p^(n) lies in p^(value-1).
    bool contained_below = false;
    /// The scan starting near the closed form disagreed and was redone from r = 1.
    bool full_scan = false;
};
/// Smallest r with p^(n) not inside p^r. The scan starts one below the closed
/// form and stops with std::runtime_error beyond `cap` (default n + 1).
RhoResult rho_n_computed(PowerCache& powers, int n, std::optional<int> cap = std::nullopt);

struct ResurgenceResult {
    Rational closed;
    /// max n / rho_n over the table, and where it is reached.
    Rational estimate;
    int attained_at = 0;
};
Rational resurgence_closed(int q);
/// Estimate over the closed-form table for 1 <= n <= n_max.
ResurgenceResult resurgence(int q, int n_max);
/// Estimate over computed values.
ResurgenceResult resurgence(int q, const std::vector<RhoResult>& table);

struct ContainmentOutcome {
    std::string statement;
    bool holds = false;
    /// Generator of the left side outside the right side, when it fails.
    std::optional<Polynomial> witness;
};

struct HHReport {
    int n = 0;
    /// p^(2n) in m^c p^n, c = n for q = 1 and 2n otherwise.
    ContainmentOutcome even;
    /// p^(2n-1) in m^(n-1) p^n.
    ContainmentOutcome odd;
    /// p^(2n-1) in m^c p^n with the even-case c. Recorded, not a requirement.
    ContainmentOutcome odd_stronger;
};
HHReport check_hh_containments(PowerCache& powers, int n);

struct ChudnovskyResult {
    Rational lhs;  // alpha(p^(n)) / n
    Rational rhs;  // (alpha(p) + 1) / 2
    bool holds = false;
};
ChudnovskyResult check_chudnovsky(PowerCache& powers, int n);

struct BHResult {
    long alpha_p = 0;
    long reg_quotient = 0; // reg(R/p)
    Rational gamma;
    Rational lower;          // alpha(p) / gamma
    Rational rho;            // resurgence
    Rational upper;          // (reg(R/p) + 1) / gamma
    Rational upper_quotient; // reg(R/p) / gamma
    bool holds = false;      // lower <= rho <= upper
    bool holds_quotient = false;
};
BHResult check_bh_inequality(const CurveIdeal& curve);

/// The non-containments that pin rho_n, checked by Groebner reduction and
/// independently modulo x1 in k[x2, x3].
struct WitnessCheck {
    std::string statement;
    bool in_symbolic = false;      // element lies in the claimed symbolic power
    bool outside_ordinary = false; // element is not in the ordinary power
    bool outside_mod_x1 = false;   // its image mod x1 is not in the image of the ordinary power
    bool ok() const { return in_symbolic && outside_ordinary && outside_mod_x1; }
};
/// f^(k(q+1)) and g1 f^(k(q+1)) for k >= 1; with j' in 1..q also
/// f^(k(q+1)+j') and g1 f^(k(q+1)+j') for k >= 0. Only elements whose
/// symbolic index is at most n_max are checked.
std::vector<WitnessCheck> check_rho_witnesses(PowerCache& powers, int n_max);

struct InvariantReport {
    CurveParams params;
    long alpha_p = 0;
    std::map<int, long> alpha_symbolic;
    std::map<int, long> alpha_symbolic_closed;
    WaldschmidtResult gamma;
    std::vector<RhoResult> rho_table;
    ResurgenceResult resurgence;
    std::vector<HHReport> hh_checks;
    std::vector<ChudnovskyResult> chudnovsky_checks;
    BHResult bh_inequality;
};
/// alpha and Chudnovsky for n <= n_max, rho_n for n <= rho_n_max, HH for
/// n <= hh_n_max.
InvariantReport invariant_report(PowerCache& powers, int n_max, int rho_n_max, int hh_n_max);

} // namespace symres

#endif
