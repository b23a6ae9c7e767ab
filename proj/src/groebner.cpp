#include "symres/groebner.hpp"

#include "kernel_int.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace symres {

// ---------------------------------------------------------------------------
// Integer kernel
//
// Reductions run fraction-free on primitive integer polynomials: to cancel a
// term c*M of p against g with leading coefficient a and leading monomial L,
// p <- (a/h)*p - (c/h)*(M/L)*g with h = gcd(a, c), followed by content removal.
// Order keys are additive, so key(M/L * u) = key(M) - key(L) + key(u).

namespace detail {

struct IntTerm {
    OrderKey key;
    Monomial mono;
    KernelInt coeff;
};
using IntPoly = std::vector<IntTerm>;

struct IntegralBasis {
    std::vector<IntPoly> elements;
};

} // namespace detail

using detail::IntPoly;
using detail::IntTerm;
using detail::KernelInt;

namespace {

void make_primitive(IntPoly& p)
{
    if (p.empty()) {
        return;
    }
    KernelInt g = KernelInt::gcd(p.front().coeff, p.front().coeff);
    for (std::size_t i = 1; i < p.size() && !g.is_one(); ++i) {
        g = KernelInt::gcd(g, p[i].coeff);
    }
    if (p.front().coeff.sign() < 0) {
        g = -g;
    }
    if (!g.is_one()) {
        for (auto& t : p) {
            t.coeff = t.coeff.divexact(g);
        }
    }
}

IntPoly to_integral(const Polynomial& f)
{
    Integer den = 1;
    for (const auto& t : f.terms()) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
    IntPoly out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        const Integer c = t.coeff.get_num() * (den / t.coeff.get_den());
        out.push_back(IntTerm{t.key, t.mono, KernelInt(c)});
    }
    make_primitive(out);
    return out;
}

Polynomial to_rational(const RingPtr& ring, const IntPoly& p, bool monic)
{
    std::vector<Term> terms;
    terms.reserve(p.size());
    const Integer lead = p.empty() ? Integer(1) : p.front().coeff.to_mpz();
    for (const auto& t : p) {
        Rational c(t.coeff.to_mpz());
        if (monic) {
            c /= lead;
        }
        terms.push_back(Term{t.mono, t.key, std::move(c)});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

// Scratch buffer reused across reduction steps on one thread.
IntPoly& scratch()
{
    thread_local IntPoly buffer;
    return buffer;
}

// Cancels p[pos] using g, whose leading monomial divides p[pos].mono.
void reduce_step(IntPoly& p, std::size_t pos, const IntPoly& g)
{
    const KernelInt h = KernelInt::gcd(g.front().coeff, p[pos].coeff);
    const KernelInt scale_p = g.front().coeff.divexact(h);
    const KernelInt scale_g = p[pos].coeff.divexact(h);
    const bool unit_scale = scale_p.is_one();
    const Monomial shift = p[pos].mono / g.front().mono;
    const OrderKey shift_key = p[pos].key - g.front().key;

    IntPoly& out = scratch();
    out.clear();
    out.reserve(p.size() + g.size());
    for (std::size_t i = 0; i < pos; ++i) {
        out.push_back(std::move(p[i]));
        if (!unit_scale) {
            out.back().coeff *= scale_p;
        }
    }
    std::size_t i = pos + 1;
    std::size_t j = 1;
    while (i < p.size() || j < g.size()) {
        const bool take_p = j == g.size() || (i < p.size() && p[i].key > g[j].key + shift_key);
        const bool take_g = i == p.size() || (j < g.size() && g[j].key + shift_key > p[i].key);
        if (take_p) {
            out.push_back(std::move(p[i]));
            if (!unit_scale) {
                out.back().coeff *= scale_p;
            }
            ++i;
        } else if (take_g) {
            out.push_back(IntTerm{g[j].key + shift_key, g[j].mono * shift, -(g[j].coeff * scale_g)});
            ++j;
        } else {
            KernelInt c = KernelInt::mul_sub(p[i].coeff, scale_p, g[j].coeff, scale_g);
            if (!c.is_zero()) {
                out.push_back(IntTerm{p[i].key, p[i].mono, std::move(c)});
            }
            ++i;
            ++j;
        }
    }
    std::swap(p, out);
    make_primitive(p);
}

const IntPoly* find_divisor(Monomial mono, std::span<const IntPoly* const> basis)
{
    for (const IntPoly* g : basis) {
        if (g->front().mono.divides(mono)) {
            return g;
        }
    }
    return nullptr;
}

// Reduces p modulo `basis`. With `full` unset only the leading term is made
// irreducible.
void reduce(IntPoly& p, std::span<const IntPoly* const> basis, bool full)
{
    std::size_t pos = 0;
    while (pos < p.size()) {
        const IntPoly* g = find_divisor(p[pos].mono, basis);
        if (g == nullptr) {
            if (!full) {
                return;
            }
            ++pos;
            continue;
        }
        reduce_step(p, pos, *g);
    }
}

// S-polynomial with the leading terms cancelled; lcm_key is the key of
// lcm(lm f, lm g).
IntPoly s_poly(const IntPoly& f, const IntPoly& g, OrderKey lcm_key)
{
    const Monomial lcm = f.front().mono.lcm(g.front().mono);
    const KernelInt h = KernelInt::gcd(f.front().coeff, g.front().coeff);
    const KernelInt cf = g.front().coeff.divexact(h);
    const KernelInt cg = f.front().coeff.divexact(h);
    const Monomial sf = lcm / f.front().mono;
    const Monomial sg = lcm / g.front().mono;
    const OrderKey shift_f = lcm_key - f.front().key;
    const OrderKey shift_g = lcm_key - g.front().key;
    IntPoly out;
    out.reserve(f.size() + g.size());
    std::size_t i = 1;
    std::size_t j = 1;
    while (i < f.size() || j < g.size()) {
        const bool take_f = j == g.size() || (i < f.size() && f[i].key + shift_f > g[j].key + shift_g);
        const bool take_g = i == f.size() || (j < g.size() && g[j].key + shift_g > f[i].key + shift_f);
        if (take_f) {
            out.push_back(IntTerm{f[i].key + shift_f, f[i].mono * sf, f[i].coeff * cf});
            ++i;
        } else if (take_g) {
            out.push_back(IntTerm{g[j].key + shift_g, g[j].mono * sg, -(g[j].coeff * cg)});
            ++j;
        } else {
            KernelInt c = KernelInt::mul_sub(f[i].coeff, cf, g[j].coeff, cg);
            if (!c.is_zero()) {
                out.push_back(IntTerm{f[i].key + shift_f, f[i].mono * sf, std::move(c)});
            }
            ++i;
            ++j;
        }
    }
    return out;
}

std::vector<const IntPoly*> pointers(const std::vector<IntPoly>& polys)
{
    std::vector<const IntPoly*> out;
    out.reserve(polys.size());
    for (const auto& p : polys) {
        out.push_back(&p);
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// GroebnerBasis

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements)
    : ring_(std::move(ring)), elements_(std::move(elements))
{
    auto integral = std::make_shared<detail::IntegralBasis>();
    integral->elements.reserve(elements_.size());
    for (const auto& e : elements_) {
        if (e.is_zero()) {
            throw std::invalid_argument("Groebner basis element is zero");
        }
        if (!e.ring()->same_as(*ring_)) {
            throw std::invalid_argument("basis element belongs to a different ring");
        }
        integral->elements.push_back(to_integral(e));
    }
    integral_ = std::move(integral);
}

Polynomial GroebnerBasis::reduce_primitive(const Polynomial& f) const
{
    if (!f.ring()->same_as(*ring_)) {
        throw std::invalid_argument("polynomial and basis belong to different rings");
    }
    IntPoly p = to_integral(f);
    reduce(p, pointers(integral_->elements), true);
    return to_rational(ring_, p, false);
}

bool GroebnerBasis::reduces_to_zero(const Polynomial& f) const
{
    if (f.is_zero()) {
        return true;
    }
    if (!f.ring()->same_as(*ring_)) {
        throw std::invalid_argument("polynomial and basis belong to different rings");
    }
    IntPoly p = to_integral(f);
    // A nonzero irreducible leading term means a nonzero normal form.
    reduce(p, pointers(integral_->elements), false);
    return p.empty();
}

bool operator==(const GroebnerBasis& a, const GroebnerBasis& b)
{
    return a.ring_->same_as(*b.ring_) && a.elements_ == b.elements_;
}

// ---------------------------------------------------------------------------
// Division

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors)
{
    const RingPtr& ring = f.ring();
    DivisionResult result{{}, Polynomial(ring)};
    std::vector<std::vector<Term>> quotient_terms(divisors.size());
    for (const auto& g : divisors) {
        if (g.is_zero()) {
            throw std::invalid_argument("division by the zero polynomial");
        }
        if (!g.ring()->same_as(*ring)) {
            throw std::invalid_argument("dividend and divisor belong to different rings");
        }
    }
    std::vector<Term> remainder;
    Polynomial p = f;
    while (!p.is_zero()) {
        const Term& lead = p.terms().front();
        std::size_t k = 0;
        while (k < divisors.size() && !divisors[k].leading_monomial().divides(lead.mono)) {
            ++k;
        }
        if (k == divisors.size()) {
            remainder.push_back(lead);
            p -= Polynomial(ring, lead.mono, lead.coeff);
            continue;
        }
        const Monomial shift = lead.mono / divisors[k].leading_monomial();
        const Rational c = lead.coeff / divisors[k].leading_coeff();
        quotient_terms[k].push_back(Term{shift, ring->key(shift), c});
        p -= divisors[k].mul_term(shift, c);
    }
    for (auto& q : quotient_terms) {
        result.quotients.push_back(Polynomial::from_terms(ring, std::move(q)));
    }
    result.remainder = Polynomial::from_terms(ring, std::move(remainder));
    return result;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors)
{
    return divide(f, divisors).remainder;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g)
{
    if (f.is_zero() || g.is_zero()) {
        throw std::invalid_argument("S-polynomial of zero");
    }
    const Monomial lcm = f.leading_monomial().lcm(g.leading_monomial());
    return f.mul_term(lcm / f.leading_monomial(), Rational(1) / f.leading_coeff()) -
           g.mul_term(lcm / g.leading_monomial(), Rational(1) / g.leading_coeff());
}

// ---------------------------------------------------------------------------
// Buchberger

namespace {

struct Pair {
    std::size_t i;
    std::size_t j; // == i marks an input generator waiting to be inserted
    Monomial lcm;
    OrderKey lcm_key;
    long sugar;
};

bool pair_before(const Pair& a, const Pair& b)
{
    if (a.sugar != b.sugar) {
        return a.sugar < b.sugar;
    }
    if (a.lcm_key != b.lcm_key) {
        return a.lcm_key < b.lcm_key;
    }
    if (a.i != b.i) {
        return a.i < b.i;
    }
    return a.j < b.j;
}

// Reduced basis from a minimal one (no leading monomial divides another).
GroebnerBasis interreduce(const RingPtr& ring, std::vector<IntPoly> members)
{
    std::vector<Polynomial> elements;
    elements.reserve(members.size());
    for (std::size_t k = 0; k < members.size(); ++k) {
        std::vector<const IntPoly*> others;
        for (std::size_t o = 0; o < members.size(); ++o) {
            if (o != k) {
                others.push_back(&members[o]);
            }
        }
        IntPoly p = members[k];
        reduce(p, others, true);
        elements.push_back(to_rational(ring, p, true));
    }
    std::sort(elements.begin(), elements.end(), [](const Polynomial& a, const Polynomial& b) {
        return a.terms().front().key < b.terms().front().key;
    });
    return GroebnerBasis(ring, std::move(elements));
}

class BuchbergerRun {
public:
    explicit BuchbergerRun(RingPtr ring) : ring_(std::move(ring)) {}

    // `known` must already be a Groebner basis; pairs among its elements are
    // never formed.
    GroebnerBasis run(std::span<const Polynomial> known, std::span<const Polynomial> gens)
    {
        for (const auto& g : known) {
            if (g.is_zero()) {
                continue;
            }
            if (!g.ring()->same_as(*ring_)) {
                throw std::invalid_argument("basis element belongs to a different ring");
            }
            IntPoly p = to_integral(g);
            const Monomial lead = p.front().mono;
            const bool redundant = std::any_of(polys_.begin(), polys_.end(), [lead](const IntPoly& o) {
                return o.front().mono.divides(lead);
            });
            if (redundant) {
                continue;
            }
            for (std::size_t k = 0; k < polys_.size(); ++k) {
                if (active_[k] && lead.divides(polys_[k].front().mono)) {
                    active_[k] = false;
                }
            }
            polys_.push_back(std::move(p));
            sugar_.push_back(*g.max_degree());
            active_.push_back(true);
        }
        for (const auto& g : gens) {
            if (g.is_zero()) {
                continue;
            }
            if (!g.ring()->same_as(*ring_)) {
                throw std::invalid_argument("generator belongs to a different ring");
            }
            IntPoly p = to_integral(g);
            const long sugar = *g.max_degree();
            const std::size_t idx = polys_.size();
            polys_.push_back(std::move(p));
            sugar_.push_back(sugar);
            active_.push_back(false);
            pairs_.push_back(Pair{idx, idx, polys_[idx].front().mono, polys_[idx].front().key, sugar});
        }

        while (!pairs_.empty()) {
            auto it = std::min_element(pairs_.begin(), pairs_.end(), pair_before);
            const Pair pair = *it;
            *it = pairs_.back();
            pairs_.pop_back();

            IntPoly h;
            if (pair.i == pair.j) {
                h = polys_[pair.i];
            } else {
                h = s_poly(polys_[pair.i], polys_[pair.j], pair.lcm_key);
                make_primitive(h);
            }
            reduce(h, active_basis(), true);
            if (h.empty()) {
                continue;
            }
            insert(std::move(h), pair.sugar);
        }
        return finish();
    }

private:
    std::vector<const IntPoly*> active_basis() const
    {
        std::vector<const IntPoly*> basis;
        for (std::size_t k = 0; k < polys_.size(); ++k) {
            if (active_[k]) {
                basis.push_back(&polys_[k]);
            }
        }
        return basis;
    }

    Pair make_pair(std::size_t i, std::size_t j) const
    {
        const Monomial li = polys_[i].front().mono;
        const Monomial lj = polys_[j].front().mono;
        const Monomial lcm = li.lcm(lj);
        const long dl = ring_->weighted_degree(lcm);
        const long sugar = std::max(sugar_[i] + dl - ring_->weighted_degree(li), sugar_[j] + dl - ring_->weighted_degree(lj));
        return Pair{i, j, lcm, ring_->key(lcm), sugar};
    }

    // Gebauer-Moeller update.
    void insert(IntPoly h, long sugar)
    {
        const std::size_t hi = polys_.size();
        polys_.push_back(std::move(h));
        sugar_.push_back(sugar);
        active_.push_back(false);
        const Monomial lh = polys_[hi].front().mono;

        std::vector<Pair> candidates;
        for (std::size_t k = 0; k < hi; ++k) {
            if (active_[k]) {
                candidates.push_back(make_pair(k, hi));
            }
        }
        std::vector<Pair> kept;
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            const Pair& p = candidates[c];
            bool keep = lh.coprime(polys_[p.i].front().mono);
            if (!keep) {
                keep = true;
                for (std::size_t o = c + 1; o < candidates.size() && keep; ++o) {
                    keep = !candidates[o].lcm.divides(p.lcm);
                }
                for (std::size_t o = 0; o < kept.size() && keep; ++o) {
                    keep = !kept[o].lcm.divides(p.lcm);
                }
            }
            if (keep) {
                kept.push_back(p);
            }
        }

        std::erase_if(pairs_, [&](const Pair& p) {
            if (p.i == p.j || !lh.divides(p.lcm)) {
                return false;
            }
            return polys_[p.i].front().mono.lcm(lh) != p.lcm && polys_[p.j].front().mono.lcm(lh) != p.lcm;
        });
        for (const Pair& p : kept) {
            if (!lh.coprime(polys_[p.i].front().mono)) {
                pairs_.push_back(p);
            }
        }

        for (std::size_t k = 0; k < hi; ++k) {
            if (active_[k] && lh.divides(polys_[k].front().mono)) {
                active_[k] = false;
            }
        }
        active_[hi] = true;
    }

    GroebnerBasis finish()
    {
        std::vector<IntPoly> members;
        for (std::size_t k = 0; k < polys_.size(); ++k) {
            if (active_[k]) {
                members.push_back(std::move(polys_[k]));
            }
        }
        return interreduce(ring_, std::move(members));
    }

    RingPtr ring_;
    std::vector<IntPoly> polys_;
    std::vector<long> sugar_;
    std::vector<bool> active_;
    std::vector<Pair> pairs_;
};

} // namespace

GroebnerBasis buchberger(RingPtr ring, std::span<const Polynomial> gens)
{
    return BuchbergerRun(std::move(ring)).run({}, gens);
}

GroebnerBasis complete_basis(RingPtr ring, std::span<const Polynomial> known_basis, std::span<const Polynomial> gens)
{
    return BuchbergerRun(std::move(ring)).run(known_basis, gens);
}

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>())
{
    for (auto& g : generators) {
        if (!g.ring()->same_as(*ring_)) {
            throw std::invalid_argument("generator belongs to a different ring");
        }
        if (!g.is_zero()) {
            generators_.push_back(std::move(g));
        }
    }
}

Ideal Ideal::from_basis(GroebnerBasis basis)
{
    Ideal ideal(basis.ring(), basis.elements());
    std::call_once(ideal.cache_->once,
                   [&ideal, &basis] { ideal.cache_->basis = std::make_unique<GroebnerBasis>(std::move(basis)); });
    return ideal;
}

const GroebnerBasis& Ideal::basis() const
{
    std::call_once(cache_->once, [this] {
        cache_->basis = std::make_unique<GroebnerBasis>(buchberger(ring_, generators_));
    });
    return *cache_->basis;
}

bool Ideal::has_basis() const
{
    // once_flag has no query; a filled pointer is only observed after
    // call_once has completed on this thread or a synchronizing one.
    return cache_->basis != nullptr;
}

std::string Ideal::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += generators_[i].to_string();
    }
    return out + ")";
}

bool ideal_member(const Ideal& ideal, const Polynomial& f)
{
    return ideal.basis().reduces_to_zero(f);
}

std::optional<Polynomial> first_non_member(const Ideal& inner, const Ideal& outer)
{
    const GroebnerBasis& gb = outer.basis();
    for (const auto& g : inner.generators()) {
        if (!gb.reduces_to_zero(g)) {
            return g;
        }
    }
    return std::nullopt;
}

bool ideal_subset(const Ideal& inner, const Ideal& outer)
{
    return !first_non_member(inner, outer).has_value();
}

bool ideal_equal(const Ideal& a, const Ideal& b)
{
    return a.basis() == b.basis();
}

std::vector<Polynomial> prune_generators(std::span<const Polynomial> gens)
{
    std::vector<Polynomial> kept;
    std::vector<IntPoly> kept_integral;
    // Primitive forms are canonical up to scalars, so exact duplicates are
    // found by comparing against kept elements with the same leading monomial.
    std::unordered_multimap<std::uint64_t, std::size_t> by_lead;
    auto same = [](const IntPoly& x, const IntPoly& y) {
        if (x.size() != y.size()) {
            return false;
        }
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i].key != y[i].key || x[i].coeff != y[i].coeff) {
                return false;
            }
        }
        return true;
    };
    for (const auto& g : gens) {
        if (g.is_zero()) {
            continue;
        }
        IntPoly p = to_integral(g);
        const std::uint64_t lead = p.front().mono.bits();
        auto [lo, hi] = by_lead.equal_range(lead);
        if (std::any_of(lo, hi, [&](const auto& entry) { return same(kept_integral[entry.second], p); })) {
            continue;
        }
        std::vector<const IntPoly*> basis;
        basis.reserve(kept_integral.size());
        for (const auto& k : kept_integral) {
            basis.push_back(&k);
        }
        IntPoly r = p;
        reduce(r, basis, false);
        if (r.empty()) {
            continue;
        }
        by_lead.emplace(lead, kept.size());
        kept.push_back(g);
        kept_integral.push_back(std::move(p));
    }
    return kept;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b)
{
    if (!a.ring()->same_as(*b.ring())) {
        throw std::invalid_argument("ideals belong to different rings");
    }
    std::vector<Polynomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return Ideal(a.ring(), prune_generators(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b)
{
    if (!a.ring()->same_as(*b.ring())) {
        throw std::invalid_argument("ideals belong to different rings");
    }
    std::vector<Polynomial> products;
    products.reserve(a.generators().size() * b.generators().size());
    for (const auto& f : a.generators()) {
        for (const auto& g : b.generators()) {
            products.push_back(f * g);
        }
    }
    // Low-degree products first so that pruning sees small divisors early.
    std::stable_sort(products.begin(), products.end(), [](const Polynomial& x, const Polynomial& y) {
        return x.terms().front().key < y.terms().front().key;
    });
    return Ideal(a.ring(), prune_generators(products));
}

Ideal ideal_power(const Ideal& ideal, int n)
{
    if (n < 1) {
        throw std::invalid_argument("ideal_power needs n >= 1");
    }
    Ideal result = ideal;
    for (int k = 1; k < n; ++k) {
        result = ideal_product(result, ideal);
    }
    return result;
}

// ---------------------------------------------------------------------------
// Colon and saturation

Polynomial exact_quotient(const Polynomial& f, const Polynomial& g)
{
    if (g.is_zero()) {
        throw std::invalid_argument("division by the zero polynomial");
    }
    if (g.size() == 1) {
        const Term& lead = g.terms().front();
        std::vector<Term> terms;
        terms.reserve(f.size());
        for (const auto& t : f.terms()) {
            if (!lead.mono.divides(t.mono)) {
                throw std::domain_error("polynomial is not divisible by " + g.to_string());
            }
            terms.push_back(Term{t.mono / lead.mono, t.key - lead.key, t.coeff / lead.coeff});
        }
        return Polynomial::from_terms(f.ring(), std::move(terms));
    }
    const Polynomial divisor[] = {g};
    auto division = divide(f, divisor);
    if (!division.remainder.is_zero()) {
        throw std::domain_error("polynomial is not divisible by " + g.to_string());
    }
    return division.quotients.front();
}

Ideal colon_by_element(const Ideal& ideal, const Polynomial& f)
{
    if (f.is_zero()) {
        throw std::invalid_argument("colon by the zero polynomial");
    }
    const RingPtr& ring = ideal.ring();
    if (!f.ring()->same_as(*ring)) {
        throw std::invalid_argument("colon element belongs to a different ring");
    }
    if (ideal.is_zero()) {
        return ideal;
    }
    const RingPtr elim = Ring::elimination_ring(ring);
    const std::size_t n = ring->arity();
    std::vector<std::size_t> up(n);
    for (std::size_t i = 0; i < n; ++i) {
        up[i] = i;
    }
    const Polynomial t = Polynomial::variable(elim, n);
    const Polynomial one(elim, Rational(1));

    // t * GB(I) is already a Groebner basis in the extended ring.
    std::vector<Polynomial> known;
    known.reserve(ideal.basis().size());
    for (const auto& g : ideal.basis().elements()) {
        known.push_back(t * g.transfer(elim, up));
    }
    const Polynomial extra[] = {(t - one) * f.transfer(elim, up)};
    const GroebnerBasis gb = complete_basis(elim, known, extra);

    std::vector<std::size_t> down(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        down[i] = i;
    }
    down[n] = 0; // t never occurs in the kept elements
    // The t-free part is a Groebner basis of I ∩ (f); dividing by f keeps
    // the leading monomials minimal, so the quotients form a Groebner basis
    // of (I : f).
    std::vector<IntPoly> quotients;
    for (const auto& g : gb.elements()) {
        if (g.leading_monomial().exponent(n) != 0) {
            continue;
        }
        quotients.push_back(to_integral(exact_quotient(g.transfer(ring, down), f)));
    }
    return Ideal::from_basis(interreduce(ring, std::move(quotients)));
}

Ideal saturate(const Ideal& ideal, const Polynomial& f)
{
    if (f.is_zero()) {
        throw std::invalid_argument("saturation by the zero polynomial");
    }
    Ideal current = ideal;
    while (true) {
        Ideal next = colon_by_element(current, f);
        if (ideal_equal(next, current)) {
            return next;
        }
        current = std::move(next);
    }
}

} // namespace symres
