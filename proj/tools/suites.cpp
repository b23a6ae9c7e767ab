#include "suites.hpp"

#include "symres/invariants.hpp"
#include "symres/regularity.hpp"
#include "symres/transfer_checks.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace symres::cli {

std::optional<ConfigError> resolve_suites(const std::vector<std::string>& names, std::set<std::string>& out)
{
    out.clear();
    for (const auto& name : names) {
        if (name == "all") {
            out.insert(kAllSuites.begin(), kAllSuites.end());
        } else if (std::find(kAllSuites.begin(), kAllSuites.end(), name) != kAllSuites.end()) {
            out.insert(name);
        } else {
            return ConfigError{"unknown suite '" + name + "'"};
        }
    }
    if (out.empty()) {
        return ConfigError{"no suites selected"};
    }
    return std::nullopt;
}

std::vector<std::pair<int, int>> grid(const RunConfig& config, std::ostream& notes)
{
    std::set<std::pair<int, int>> points;
    for (int q : config.q_list) {
        for (int m : config.m_list) {
            const CurveParams params{q, m};
            if (params.valid()) {
                points.emplace(q, m);
            } else {
                notes << "skipping (q, m) = (" << q << ", " << m << "): need q, m >= 1 and gcd(2q+1, m) = 1\n";
            }
        }
    }
    return {points.begin(), points.end()};
}

namespace {

using Clock = std::chrono::steady_clock;

class PointRunner {
public:
    PointRunner(const RunConfig& config, int q, int m, std::ostream& notes)
        : config_(config), q_(q), m_(m), notes_(notes), powers_(make_curve(q, m))
    {
    }

    std::vector<Record> run()
    {
        for (const auto& suite : kAllSuites) {
            if (!config_.suites.contains(suite)) {
                continue;
            }
            if (suite == "identities") {
                identities();
            } else if (suite == "symbolic-oracle") {
                oracle();
            } else if (suite == "rho") {
                rho();
            } else if (suite == "alpha-gamma") {
                alpha_gamma();
            } else if (suite == "hh") {
                hh();
            } else if (suite == "chudnovsky") {
                chudnovsky();
            } else if (suite == "regularity") {
                regularity();
            } else if (suite == "transfer") {
                transfer();
            } else if (suite == "bh") {
                bh();
            }
        }
        return std::move(records_);
    }

private:
    // Runs `fill` and records it with its wall time.
    template <class Fill>
    void add(std::optional<int> n, std::string check_id, Fill&& fill)
    {
        Record r;
        r.q = q_;
        r.m = m_;
        r.n = n;
        r.check_id = std::move(check_id);
        const auto start = Clock::now();
        fill(r);
        r.runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        records_.push_back(std::move(r));
    }

    void identities()
    {
        add(std::nullopt, "cofactor_identities", [&](Record& r) {
            const IdentityCheck check = verify_cofactor_identities(powers_.curve());
            r.closed_form = "all hold";
            r.computed = check.ok ? "all hold" : "failed";
            r.match = check.ok;
            if (!check.ok) {
                std::string failed;
                for (const auto& f : check.failures) {
                    failed += (failed.empty() ? "" : "; ") + f;
                }
                r.witness = failed;
            }
        });
    }

    void oracle()
    {
        if (!config_.oracle) {
            notes_ << "(" << q_ << ", " << m_ << "): symbolic-oracle skipped, pass --oracle to run saturations\n";
            return;
        }
        for (int n = 1; n <= config_.n_max; ++n) {
            add(n, "symbolic_oracle", [&](Record& r) {
                const Ideal structural = powers_.symbolic(n);
                const Ideal saturated = symbolic_power_oracle(powers_.curve(), n);
                r.match = ideal_equal(structural, saturated);
                r.computed = std::to_string(saturated.basis().size()) + " basis elements";
                r.closed_form = std::to_string(structural.basis().size()) + " basis elements";
                if (!r.match) {
                    if (auto w = first_non_member(saturated, structural)) {
                        r.witness = w->to_string();
                    } else if (auto v = first_non_member(structural, saturated)) {
                        r.witness = v->to_string();
                    }
                }
            });
        }
    }

    void rho()
    {
        std::vector<RhoResult> table;
        for (int n = 1; n <= config_.n_max; ++n) {
            add(n, "rho_n", [&](Record& r) {
                try {
                    RhoResult res = rho_n_computed(powers_, n, config_.rho_cap);
                    r.computed = std::to_string(res.value);
                    r.closed_form = std::to_string(res.closed);
                    r.match = res.value == res.closed && res.contained_below && res.witness.has_value();
                    if (res.witness) {
                        r.witness = res.witness->to_string();
                    }
                    table.push_back(std::move(res));
                } catch (const std::runtime_error& e) {
                    r.computed = "scan cap exceeded";
                    r.closed_form = std::to_string(rho_n_closed(q_, n));
                    r.witness = e.what();
                }
            });
        }
        for (const WitnessCheck& w : check_rho_witnesses(powers_, config_.n_max)) {
            // "... in p^(N), ..." names the symbolic index.
            const auto open = w.statement.find("p^(") + 3;
            const int n = std::stoi(w.statement.substr(open));
            add(n, "rho_witness", [&](Record& r) {
                r.closed_form = "member; non-member; non-member mod x1";
                r.computed = std::string(w.in_symbolic ? "member" : "not a member") + "; " +
                             (w.outside_ordinary ? "non-member" : "member") + "; " +
                             (w.outside_mod_x1 ? "non-member mod x1" : "member mod x1");
                r.match = w.ok();
                r.witness = w.statement;
            });
        }
        add(std::nullopt, "resurgence", [&](Record& r) {
            const ResurgenceResult res = resurgence(q_, table);
            r.computed = to_string(res.estimate);
            r.closed_form = to_string(res.closed);
            // The supremum is approached, never reached.
            r.match = table.size() == static_cast<std::size_t>(config_.n_max) && res.estimate < res.closed &&
                      res.closed == Rational(2 * q_ + 2, 2 * q_ + 1);
            r.witness = "max n/rho_n at n = " + std::to_string(res.attained_at);
        });
    }

    void alpha_gamma()
    {
        for (int n = 1; n <= config_.n_max; ++n) {
            add(n, "alpha", [&](Record& r) {
                const long value = alpha(powers_.symbolic(n));
                const long closed = alpha_symbolic_closed(q_, m_, n);
                r.computed = std::to_string(value);
                r.closed_form = std::to_string(closed);
                r.match = value == closed;
            });
        }
        add(std::nullopt, "waldschmidt", [&](Record& r) {
            const WaldschmidtResult res = waldschmidt(powers_, config_.n_max);
            r.computed = to_string(res.estimate);
            r.closed_form = to_string(res.closed);
            r.match = res.estimate == res.closed;
            r.witness = "min alpha/n at n = " + std::to_string(res.attained_at);
        });
    }

    void hh()
    {
        for (int n = 1; 2 * n <= config_.n_max; ++n) {
            HHReport report;
            add(2 * n, "hh_even", [&](Record& r) {
                report = check_hh_containments(powers_, n);
                containment(r, report.even);
            });
            add(2 * n - 1, "hh_odd", [&](Record& r) { containment(r, report.odd); });
            add(2 * n - 1, "hh_odd_stronger", [&](Record& r) {
                // Outcome recorded; the claim is not part of the pass criteria.
                r.computed = report.odd_stronger.holds ? "holds" : "fails";
                r.closed_form = "recorded";
                r.match = true;
                r.witness = report.odd_stronger.statement +
                            (report.odd_stronger.witness ? "; outside: " + report.odd_stronger.witness->to_string()
                                                         : std::string());
            });
        }
    }

    static void containment(Record& r, const ContainmentOutcome& outcome)
    {
        r.computed = outcome.holds ? "holds" : "fails";
        r.closed_form = "holds";
        r.match = outcome.holds;
        r.witness = outcome.statement;
        if (outcome.witness) {
            *r.witness += "; outside: " + outcome.witness->to_string();
        }
    }

    void chudnovsky()
    {
        for (int n = 1; n <= config_.n_max; ++n) {
            add(n, "chudnovsky", [&](Record& r) {
                const ChudnovskyResult res = check_chudnovsky(powers_, n);
                r.computed = to_string(res.lhs);
                r.closed_form = ">= " + to_string(res.rhs);
                r.match = res.holds;
            });
        }
    }

    void regularity()
    {
        for (int n = 1; n <= config_.n_max; ++n) {
            add(n, "regularity", [&](Record& r) {
                const long value = regularity_quotient(build_In(q_, m_, n));
                const long closed = regularity_closed(q_, m_, n);
                r.computed = std::to_string(value);
                r.closed_form = std::to_string(closed);
                r.match = value == closed;
                if (auto stated = regularity_odd_stated_11(q_, m_, n)) {
                    r.witness = "odd-index value " + std::to_string(*stated) + " listed for (1, 1) is unreconciled";
                }
            });
            add(n, "hilbert_series", [&](Record& r) {
                const MonomialIdeal2 in = build_In(q_, m_, n);
                const long bound = hilbert_check_bound(in);
                const bool equal = compare_hilbert_series(in, bound).equal();
                r.computed = equal ? "agree" : "differ";
                r.closed_form = "agree";
                r.match = equal;
                r.witness = "coefficients 0.." + std::to_string(bound);
            });
        }
    }

    void transfer()
    {
        for (const LemmaCheck& c : check_transfer_lemmas(powers_, config_.n_max)) {
            add(c.n, c.id, [&](Record& r) {
                r.computed = c.computed;
                r.closed_form = c.expected;
                r.match = c.ok;
            });
        }
    }

    void bh()
    {
        add(std::nullopt, "bh_inequality", [&](Record& r) {
            const BHResult res = check_bh_inequality(powers_.curve());
            r.computed = to_string(res.lower) + " <= " + to_string(res.rho) + " <= " + to_string(res.upper);
            r.closed_form = "alpha/gamma <= rho <= (reg(R/p)+1)/gamma";
            r.match = res.holds;
            r.witness = "with reg(R/p)/gamma = " + to_string(res.upper_quotient) + ": " +
                        (res.holds_quotient ? "holds" : "fails");
        });
    }

    const RunConfig& config_;
    int q_;
    int m_;
    std::ostream& notes_;
    PowerCache powers_;
    std::vector<Record> records_;
};

} // namespace

std::vector<Record> run(const RunConfig& config, std::ostream& notes)
{
    std::vector<Record> out;
    for (const auto& [q, m] : grid(config, notes)) {
        std::vector<Record> point = PointRunner(config, q, m, notes).run();
        std::stable_sort(point.begin(), point.end(),
                         [](const Record& a, const Record& b) { return a.n.value_or(0) < b.n.value_or(0); });
        out.insert(out.end(), std::make_move_iterator(point.begin()), std::make_move_iterator(point.end()));
    }
    return out;
}

} // namespace symres::cli
