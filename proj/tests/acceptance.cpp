// End-to-end acceptance run: one [PASS]/[FAIL] line per criterion.
// The randomized property suites are linked in and run through doctest.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "symres/invariants.hpp"
#include "symres/regularity.hpp"
#include "symres/transfer_checks.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

using namespace symres;

namespace {

// (1, 3) is not a valid pair (3 divides 2q+1); (1, 4) takes its place.
const std::vector<std::pair<int, int>> kGrid = {{1, 1}, {1, 2}, {1, 4}, {2, 1}, {2, 2}, {3, 1}, {3, 2}};

std::map<std::pair<int, int>, std::unique_ptr<PowerCache>> caches;

PowerCache& powers(int q, int m)
{
    auto& slot = caches[{q, m}];
    if (!slot) {
        slot = std::make_unique<PowerCache>(make_curve(q, m));
    }
    return *slot;
}

int n_max(int q)
{
    return 2 * (2 * q + 2);
}

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void fail(const std::string& what)
    {
        if (ok) {
            detail << "first failure: " << what;
        }
        ok = false;
    }
};

std::string at(int q, int m, int n)
{
    return "(" + std::to_string(q) + "," + std::to_string(m) + "," + std::to_string(n) + ")";
}

Outcome cofactor_identities()
{
    Outcome out;
    try {
        make_curve(1, 3);
        out.fail("(1,3) was accepted");
    } catch (const std::invalid_argument&) {
    }
    const auto start = std::chrono::steady_clock::now();
    for (auto [q, m] : kGrid) {
        const IdentityCheck check = verify_cofactor_identities(powers(q, m).curve());
        if (!check.ok) {
            out.fail(at(q, m, 0) + " " + check.failures.front());
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 1.0) {
        out.fail("took " + std::to_string(secs) + " s");
    }
    if (out.ok) {
        out.detail << kGrid.size() << " points, (1,3) rejected";
    }
    return out;
}

Outcome oracle_equivalence()
{
    Outcome out;
    int compared = 0;
    for (auto [q, m] : kGrid) {
        PowerCache& p = powers(q, m);
        for (int n = 1; n <= n_max(q); ++n) {
            const Ideal oracle = symbolic_power_oracle(p.curve(), n);
            if (!(oracle.basis() == p.symbolic(n).basis())) {
                out.fail(at(q, m, n));
            }
            ++compared;
        }
    }
    if (out.ok) {
        out.detail << compared << " reduced bases identical";
    }
    return out;
}

Outcome rho_table()
{
    Outcome out;
    int computed = 0;
    int witnesses = 0;
    for (auto [q, m] : kGrid) {
        PowerCache& p = powers(q, m);
        const int top = n_max(q) + 2;
        std::vector<RhoResult> table;
        for (int n = 1; n <= top; ++n) {
            RhoResult r = rho_n_computed(p, n);
            if (r.value != r.closed || !r.contained_below || !r.witness) {
                out.fail(at(q, m, n) + " rho " + std::to_string(r.value) + " vs " + std::to_string(r.closed));
            }
            table.push_back(std::move(r));
            ++computed;
        }
        for (const auto& w : check_rho_witnesses(p, top)) {
            if (!w.ok()) {
                out.fail(at(q, m, 0) + " " + w.statement);
            }
            ++witnesses;
        }
        const ResurgenceResult est = resurgence(q, table);
        if (!(est.estimate < est.closed)) {
            out.fail(at(q, m, 0) + " estimate not below the resurgence");
        }
        // Convergence along the closed-form table.
        Rational previous_gap = est.closed - est.estimate;
        for (int big : {10 * top, 100 * top}) {
            const ResurgenceResult far = resurgence(q, big);
            const Rational gap = far.closed - far.estimate;
            if (!(gap > 0 && gap < previous_gap)) {
                out.fail(at(q, m, big) + " estimates do not approach the resurgence");
            }
            previous_gap = gap;
        }
    }
    if (out.ok) {
        out.detail << computed << " values of rho_n, " << witnesses << " witnesses verified";
    }
    return out;
}

Outcome alpha_gamma()
{
    Outcome out;
    for (auto [q, m] : kGrid) {
        PowerCache& p = powers(q, m);
        for (int n = 1; n <= n_max(q); ++n) {
            const long a = alpha(p.symbolic(n));
            if (a != alpha_symbolic_closed(q, m, n)) {
                out.fail(at(q, m, n) + " alpha " + std::to_string(a));
            }
        }
        const WaldschmidtResult w = waldschmidt(p, n_max(q));
        if (w.estimate != w.closed) {
            out.fail(at(q, m, 0) + " gamma " + to_string(w.estimate) + " vs " + to_string(w.closed));
        }
    }
    if (out.ok) {
        out.detail << "gamma(1,1) = " << to_string(waldschmidt_closed(1, 1)) << ", 2 d2 elsewhere";
    }
    return out;
}

Outcome chudnovsky()
{
    Outcome out;
    int checked = 0;
    for (auto [q, m] : kGrid) {
        PowerCache& p = powers(q, m);
        for (int n = 1; n <= n_max(q); ++n) {
            const ChudnovskyResult c = check_chudnovsky(p, n);
            if (!c.holds) {
                out.fail(at(q, m, n) + " " + to_string(c.lhs) + " < " + to_string(c.rhs));
            }
            ++checked;
        }
    }
    if (out.ok) {
        out.detail << checked << " cases";
    }
    return out;
}

Outcome hh_containments()
{
    Outcome out;
    int checked = 0;
    int stronger_fails = 0;
    for (auto [q, m] : kGrid) {
        PowerCache& p = powers(q, m);
        for (int n = 1; n <= q + 2; ++n) {
            const HHReport h = check_hh_containments(p, n);
            if (!h.even.holds) {
                out.fail(at(q, m, n) + " " + h.even.statement);
            }
            if (!h.odd.holds) {
                out.fail(at(q, m, n) + " " + h.odd.statement);
            }
            stronger_fails += h.odd_stronger.holds ? 0 : 1;
            checked += 2;
        }
    }
    if (out.ok) {
        out.detail << checked << " containments; stronger odd form fails in " << stronger_fails << " cases (recorded)";
    }
    return out;
}

Outcome regularity()
{
    Outcome out;
    int checked = 0;
    for (auto [q, m] : kGrid) {
        for (int n = 1; n <= n_max(q); ++n) {
            const long got = regularity_quotient(build_In(q, m, n));
            if (got != regularity_closed(q, m, n)) {
                out.fail(at(q, m, n) + " reg " + std::to_string(got));
            }
            ++checked;
        }
    }
    const long spots[][4] = {{1, 1, 1, 12}, {1, 1, 3, 29}, {1, 2, 2, 29}};
    for (const auto& s : spots) {
        const int q = static_cast<int>(s[0]);
        const int m = static_cast<int>(s[1]);
        const int n = static_cast<int>(s[2]);
        if (regularity_quotient(build_In(q, m, n)) != s[3]) {
            out.fail(at(q, m, n) + " spot value");
        }
    }
    if (out.ok) {
        out.detail << checked << " values, spot values 12, 29, 29";
    }
    return out;
}

Outcome transfer_lemmas()
{
    Outcome out;
    std::size_t checked = 0;
    for (auto [q, m] : kGrid) {
        for (const auto& c : check_transfer_lemmas(powers(q, m), n_max(q))) {
            if (!c.ok) {
                out.fail(at(q, m, c.n) + " " + c.id + ": " + c.computed + " vs " + c.expected);
            }
            ++checked;
        }
    }
    if (out.ok) {
        out.detail << checked << " checks";
    }
    return out;
}

Outcome bh_inequality()
{
    Outcome out;
    for (auto [q, m] : kGrid) {
        const BHResult b = check_bh_inequality(powers(q, m).curve());
        if (!b.holds) {
            out.fail(at(q, m, 0) + " " + to_string(b.lower) + " <= " + to_string(b.rho) + " <= " + to_string(b.upper));
        }
    }
    if (out.ok) {
        out.detail << kGrid.size() << " points";
    }
    return out;
}

Outcome property_suites()
{
    Outcome out;
    doctest::Context context;
    context.setOption("minimal", true);
    const int failed = context.run();
    if (failed != 0) {
        out.fail("doctest reported failures");
    } else {
        out.detail << "all randomized suites passed, 100 cases each";
    }
    return out;
}

} // namespace

int main()
{
    std::cout << std::fixed << std::setprecision(3);
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"cofactor identities", cofactor_identities},
        {"symbolic power oracle", oracle_equivalence},
        {"rho_n table and resurgence", rho_table},
        {"alpha and Waldschmidt constant", alpha_gamma},
        {"Chudnovsky bound", chudnovsky},
        {"Harbourne-Huneke containments", hh_containments},
        {"regularity of symbolic powers", regularity},
        {"transfer lemmas", transfer_lemmas},
        {"resurgence bounds", bh_inequality},
        {"property suites", property_suites},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += o.ok ? 0 : 1;
        std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << i + 1 << ". " << criteria[i].first << ": " << o.detail.str()
                  << " (" << secs << " s)" << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
