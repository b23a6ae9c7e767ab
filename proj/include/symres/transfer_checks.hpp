// Checks of the facts that carry reg(R/p^(n)) over to reg(T/I_n), with
// T = k[x2, x3].

#ifndef SYMRES_TRANSFER_CHECKS_HPP
#define SYMRES_TRANSFER_CHECKS_HPP

#include "symres/curve.hpp"

#include <string>
#include <vector>

namespace symres {

struct LemmaCheck {
    std::string id;
    int n = 0;
    bool ok = false;
    std::string computed;
    std::string expected;
};

/// For n <= n_max:
///   mod_x1_image      p^(n) mod x1 = I_n, as minimal monomial sets
///   mod_x1_groebner   p^(n) + (x1) = I_n R + (x1)
///   x1_nonzerodivisor (p^(n) : x1) = p^(n)
///   even_power        I_2n = I_2^n
///   odd_product       I_(2n+1) = I_1 I_2n
///   colon_x3d         (I_2n : x3^d) = I_(2n-2)
///   colon_x2sq        (I_(2n+1) : x2^2) = I_2n
///   reg_mod_x2sq      reg(T/(I_n + (x2^2))) against its closed form
///   reg_mod_x3d       reg(T/(I_2n + (x3^d))) against its closed form
/// The index n of a record is the index of the ideal being examined. Colon
/// checks by x1 are skipped when `with_groebner` is unset.
std::vector<LemmaCheck> check_transfer_lemmas(PowerCache& powers, int n_max, bool with_groebner = true);

} // namespace symres

#endif
