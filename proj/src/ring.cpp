#include "symres/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symres {

Weights Weights::for_curve(int q, int m)
{
    if (q < 1 || m < 1) {
        throw std::invalid_argument("curve parameters must be positive (q=" + std::to_string(q) +
                                    ", m=" + std::to_string(m) + ")");
    }
    const int d = 2 * q + 1;
    return Weights{d, d + m, d + 2 * m};
}

bool Weights::valid() const
{
    return d1 > 0 && d1 % 2 == 1 && d2 - d1 > 0 && d3 - d2 == d2 - d1 && std::gcd(d1, d2 - d1) == 1;
}

long weighted_degree(Monomial mono, const Weights& w)
{
    return static_cast<long>(mono.exponent(0)) * w.d1 + static_cast<long>(mono.exponent(1)) * w.d2 +
           static_cast<long>(mono.exponent(2)) * w.d3;
}

// ---------------------------------------------------------------------------
// Monomial

namespace {

std::uint64_t pack(std::span<const int> exps)
{
    if (exps.size() > kMaxVars) {
        throw std::invalid_argument("monomial has more than four exponents");
    }
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0 || exps[i] > kMaxExponent) {
            throw std::out_of_range("monomial exponent out of range: " + std::to_string(exps[i]));
        }
        bits |= static_cast<std::uint64_t>(exps[i]) << (16 * i);
    }
    return bits;
}

} // namespace

Monomial::Monomial(std::initializer_list<int> exps) : bits_(pack(std::span<const int>(exps.begin(), exps.size()))) {}

Monomial::Monomial(std::span<const int> exps) : bits_(pack(exps)) {}

int Monomial::total_degree() const
{
    int total = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        total += exponent(i);
    }
    return total;
}

bool Monomial::coprime(Monomial other) const
{
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        if (exponent(i) != 0 && other.exponent(i) != 0) {
            return false;
        }
    }
    return true;
}

Monomial Monomial::operator*(Monomial other) const
{
    const std::uint64_t sum = bits_ + other.bits_;
    if ((sum & kGuard) != 0) {
        throw std::overflow_error("monomial exponent overflow");
    }
    return Monomial(sum);
}

Monomial Monomial::lcm(Monomial other) const
{
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        bits |= static_cast<std::uint64_t>(std::max(exponent(i), other.exponent(i))) << (16 * i);
    }
    return Monomial(bits);
}

Monomial Monomial::gcd(Monomial other) const
{
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        bits |= static_cast<std::uint64_t>(std::min(exponent(i), other.exponent(i))) << (16 * i);
    }
    return Monomial(bits);
}

// ---------------------------------------------------------------------------
// Ring
//
// An order is a list of integer rows; the key of a monomial is the row values
// written as balanced base-2^32 digits. Row values stay far below 2^31 given
// the exponent and weight bounds, so comparing keys compares the rows
// lexicographically and key(a*b) = key(a) + key(b). The final row of a full
// matrix order is implied by the others and omitted.

namespace {

constexpr int kMaxWeight = 1 << 12;

} // namespace

Ring::Ring(std::vector<int> weights, OrderKind order, std::vector<std::string> names)
    : weights_(std::move(weights)), order_(order), names_(std::move(names))
{
    const std::size_t n = weights_.size();
    if (n == 0 || n > kMaxVars || names_.size() != n) {
        throw std::invalid_argument("ring needs 1..4 named variables");
    }
    for (int w : weights_) {
        if (w < 0 || w > kMaxWeight) {
            throw std::invalid_argument("variable weight out of range");
        }
    }
    auto unit = [](std::size_t i) {
        std::array<long, kMaxVars> row{};
        row[i] = 1;
        return row;
    };
    std::array<long, kMaxVars> weight_row{};
    std::copy(weights_.begin(), weights_.end(), weight_row.begin());

    if (order_ == OrderKind::WeightedLex) {
        if (std::any_of(weights_.begin(), weights_.end(), [](int w) { return w == 0; })) {
            throw std::invalid_argument("weighted order needs positive weights");
        }
        rows_.push_back(weight_row);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            rows_.push_back(unit(i));
        }
    } else {
        if (n < 2 || weights_.back() != 0 ||
            std::any_of(weights_.begin(), weights_.end() - 1, [](int w) { return w == 0; })) {
            throw std::invalid_argument("elimination order needs positive weights and a final weight-0 variable");
        }
        rows_.push_back(unit(n - 1));
        rows_.push_back(weight_row);
        for (std::size_t i = 0; i + 2 < n; ++i) {
            rows_.push_back(unit(i));
        }
    }
}

RingPtr Ring::make(std::vector<int> weights, OrderKind order, std::vector<std::string> names)
{
    return RingPtr(new Ring(std::move(weights), order, std::move(names)));
}

RingPtr Ring::curve_ring(const Weights& w)
{
    return make({w.d1, w.d2, w.d3}, OrderKind::WeightedLex, {"x1", "x2", "x3"});
}

RingPtr Ring::elimination_ring(const RingPtr& base)
{
    if (base->order() != OrderKind::WeightedLex || base->arity() >= kMaxVars) {
        throw std::invalid_argument("elimination ring needs a weighted base ring with a free variable slot");
    }
    auto weights = base->weights();
    auto names = base->names();
    weights.push_back(0);
    names.emplace_back("t");
    return make(std::move(weights), OrderKind::Elimination, std::move(names));
}

std::size_t Ring::variable_index(std::string_view name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) {
            return i;
        }
    }
    throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

long Ring::weighted_degree(Monomial mono) const
{
    long deg = 0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        deg += static_cast<long>(weights_[i]) * mono.exponent(i);
    }
    return deg;
}

OrderKey Ring::key(Monomial mono) const
{
    OrderKey key = 0;
    for (const auto& row : rows_) {
        long value = 0;
        for (std::size_t i = 0; i < weights_.size(); ++i) {
            value += row[i] * mono.exponent(i);
        }
        key = key * (OrderKey(1) << 32) + value;
    }
    return key;
}

Weights Ring::curve_weights() const
{
    if (weights_.size() < 3) {
        throw std::logic_error("ring has fewer than three variables");
    }
    return Weights{weights_[0], weights_[1], weights_[2]};
}

bool Ring::same_as(const Ring& other) const
{
    return this == &other || (weights_ == other.weights_ && order_ == other.order_ && names_ == other.names_);
}

// ---------------------------------------------------------------------------
// Polynomial

std::string to_string(const Rational& r)
{
    return r.get_str();
}

Polynomial::Polynomial(RingPtr ring, const Rational& c) : ring_(std::move(ring))
{
    if (c != 0) {
        terms_.push_back(Term{Monomial(), 0, c});
    }
}

Polynomial::Polynomial(RingPtr ring, Monomial mono, const Rational& c) : ring_(std::move(ring))
{
    if (c != 0) {
        terms_.push_back(Term{mono, ring_->key(mono), c});
    }
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index, int exponent)
{
    if (index >= ring->arity()) {
        throw std::out_of_range("variable index out of range");
    }
    std::array<int, kMaxVars> exps{};
    exps[index] = exponent;
    return Polynomial(ring, Monomial(std::span<const int>(exps.data(), ring->arity())));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.key > b.key; });
    Polynomial out(std::move(ring));
    for (auto& t : terms) {
        if (!out.terms_.empty() && out.terms_.back().key == t.key) {
            out.terms_.back().coeff += t.coeff;
            if (out.terms_.back().coeff == 0) {
                out.terms_.pop_back();
            }
        } else if (t.coeff != 0) {
            out.terms_.push_back(std::move(t));
        }
    }
    return out;
}

void Polynomial::check_ring(const Polynomial& other) const
{
    if (!ring_->same_as(*other.ring_)) {
        throw std::invalid_argument("polynomials belong to different rings");
    }
}

std::optional<long> Polynomial::homogeneous_degree() const
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    const long deg = ring_->weighted_degree(terms_.front().mono);
    for (const auto& t : terms_) {
        if (ring_->weighted_degree(t.mono) != deg) {
            return std::nullopt;
        }
    }
    return deg;
}

std::optional<long> Polynomial::max_degree() const
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    long deg = 0;
    for (const auto& t : terms_) {
        deg = std::max(deg, ring_->weighted_degree(t.mono));
    }
    return deg;
}

Polynomial Polynomial::operator-() const
{
    Polynomial out(*this);
    for (auto& t : out.terms_) {
        t.coeff = -t.coeff;
    }
    return out;
}

namespace {

// Merges two sorted term lists as a + sign*b.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign)
{
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->key > j->key)) {
            out.push_back(*i++);
        } else if (i == a.end() || j->key > i->key) {
            out.push_back(Term{j->mono, j->key, sign > 0 ? Rational(j->coeff) : Rational(-j->coeff)});
            ++j;
        } else {
            Rational c = sign > 0 ? Rational(i->coeff + j->coeff) : Rational(i->coeff - j->coeff);
            if (c != 0) {
                out.push_back(Term{i->mono, i->key, std::move(c)});
            }
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    check_ring(other);
    terms_ = merge(terms_, other.terms_, 1);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    check_ring(other);
    terms_ = merge(terms_, other.terms_, -1);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    a.check_ring(b);
    if (a.is_zero() || b.is_zero()) {
        return Polynomial(a.ring_);
    }
    std::vector<Term> products;
    products.reserve(a.size() * b.size());
    for (const auto& s : a.terms_) {
        for (const auto& t : b.terms_) {
            products.push_back(Term{s.mono * t.mono, s.key + t.key, s.coeff * t.coeff});
        }
    }
    return Polynomial::from_terms(a.ring_, std::move(products));
}

Polynomial& Polynomial::operator*=(const Polynomial& other)
{
    *this = *this * other;
    return *this;
}

Polynomial Polynomial::scaled(const Rational& c) const
{
    if (c == 0) {
        return Polynomial(ring_);
    }
    Polynomial out(*this);
    for (auto& t : out.terms_) {
        t.coeff *= c;
    }
    return out;
}

Polynomial Polynomial::mul_term(Monomial mono, const Rational& c) const
{
    if (c == 0) {
        return Polynomial(ring_);
    }
    const OrderKey k = ring_->key(mono);
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        out.terms_.push_back(Term{t.mono * mono, t.key + k, t.coeff * c});
    }
    return out;
}

Polynomial Polynomial::pow(unsigned e) const
{
    Polynomial result(ring_, Rational(1));
    Polynomial base(*this);
    while (e > 0) {
        if (e & 1u) {
            result *= base;
        }
        e >>= 1;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

Polynomial Polynomial::monic() const
{
    if (is_zero()) {
        return *this;
    }
    return scaled(Rational(1) / leading_coeff());
}

Polynomial Polynomial::drop_variable(std::size_t var) const
{
    Polynomial out(ring_);
    for (const auto& t : terms_) {
        if (t.mono.exponent(var) == 0) {
            out.terms_.push_back(t);
        }
    }
    return out;
}

Polynomial Polynomial::transfer(const RingPtr& target, std::span<const std::size_t> var_map) const
{
    if (var_map.size() != ring_->arity()) {
        throw std::invalid_argument("variable map has wrong length");
    }
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::array<int, kMaxVars> exps{};
        for (std::size_t i = 0; i < var_map.size(); ++i) {
            if (var_map[i] >= target->arity()) {
                throw std::out_of_range("variable map points outside the target ring");
            }
            exps[var_map[i]] += t.mono.exponent(i);
        }
        Monomial mono(std::span<const int>(exps.data(), target->arity()));
        terms.push_back(Term{mono, target->key(mono), t.coeff});
    }
    return from_terms(target, std::move(terms));
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    if (!a.ring_->same_as(*b.ring_) || a.terms_.size() != b.terms_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) {
            return false;
        }
    }
    return true;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
        Rational mag = abs(t.coeff);
        const bool negative = sgn(t.coeff) < 0;
        if (first) {
            if (negative) {
                out << '-';
            }
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        std::string factors;
        for (std::size_t i = 0; i < ring_->arity(); ++i) {
            const int e = t.mono.exponent(i);
            if (e == 0) {
                continue;
            }
            if (!factors.empty()) {
                factors += '*';
            }
            factors += ring_->names()[i];
            if (e > 1) {
                factors += '^' + std::to_string(e);
            }
        }
        if (factors.empty()) {
            out << mag.get_str();
        } else if (mag == 1) {
            out << factors;
        } else {
            out << mag.get_str() << '*' << factors;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
public:
    Parser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

    Polynomial parse()
    {
        std::vector<Term> terms;
        skip_space();
        if (pos_ == text_.size()) {
            fail("empty polynomial");
        }
        bool first = true;
        while (pos_ < text_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_space();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            terms.push_back(parse_term(sign));
            skip_space();
        }
        return Polynomial::from_terms(ring_, std::move(terms));
    }

private:
    Term parse_term(int sign)
    {
        Rational coeff = sign;
        std::array<int, kMaxVars> exps{};
        bool expect_factor = true;
        while (expect_factor) {
            skip_space();
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff *= parse_number();
            } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
                const std::size_t start = pos_;
                while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
                    ++pos_;
                }
                const std::size_t var = ring_->variable_index(text_.substr(start, pos_ - start));
                int e = 1;
                skip_space();
                if (peek() == '^') {
                    ++pos_;
                    skip_space();
                    e = static_cast<int>(parse_unsigned());
                }
                exps[var] += e;
            } else {
                fail("expected coefficient or variable");
            }
            skip_space();
            expect_factor = peek() == '*';
            if (expect_factor) {
                ++pos_;
            }
        }
        Monomial mono(std::span<const int>(exps.data(), ring_->arity()));
        return Term{mono, ring_->key(mono), coeff};
    }

    Rational parse_number()
    {
        Rational value(parse_unsigned_text());
        if (peek() == '/') {
            ++pos_;
            Rational den(parse_unsigned_text());
            if (den == 0) {
                fail("zero denominator");
            }
            value /= den;
        }
        return value;
    }

    std::string parse_unsigned_text()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected digits");
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    unsigned long parse_unsigned() { return std::stoul(parse_unsigned_text()); }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("cannot parse polynomial at offset " + std::to_string(pos_) + ": " + what);
    }

    const RingPtr& ring_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial Polynomial::parse(RingPtr ring, std::string_view text)
{
    return Parser(ring, text).parse();
}

} // namespace symres
