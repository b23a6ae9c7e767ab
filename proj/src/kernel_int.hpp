// Integer coefficients for the reduction kernel: a machine word while the
// value stays below 2^62 in magnitude, a heap-allocated mpz beyond that.
// Values are kept normalized, so equal numbers have equal representations.

#ifndef SYMRES_KERNEL_INT_HPP
#define SYMRES_KERNEL_INT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <numeric>

namespace symres::detail {

class KernelInt {
public:
    KernelInt() = default;
    KernelInt(std::int64_t v) // NOLINT(google-explicit-constructor)
    {
        if (fits_small(v)) {
            small_ = v;
        } else {
            big_ = std::make_unique<mpz_class>(static_cast<long>(v));
        }
    }
    explicit KernelInt(const mpz_class& v) { assign_mpz(v); }

    KernelInt(const KernelInt& o) : small_(o.small_), big_(o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr) {}
    KernelInt& operator=(const KernelInt& o)
    {
        if (this != &o) {
            small_ = o.small_;
            big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    KernelInt(KernelInt&&) noexcept = default;
    KernelInt& operator=(KernelInt&&) noexcept = default;

    bool is_small() const { return !big_; }

    mpz_class to_mpz() const { return big_ ? *big_ : mpz_class(static_cast<long>(small_)); }

    int sign() const
    {
        if (big_) {
            return sgn(*big_);
        }
        return (small_ > 0) - (small_ < 0);
    }
    bool is_zero() const { return !big_ && small_ == 0; }
    bool is_one() const { return !big_ && small_ == 1; }

    friend bool operator==(const KernelInt& a, const KernelInt& b)
    {
        if (a.big_ || b.big_) {
            return a.big_ && b.big_ && *a.big_ == *b.big_;
        }
        return a.small_ == b.small_;
    }

    KernelInt operator-() const
    {
        KernelInt out;
        if (big_) {
            out.assign_mpz(-*big_);
        } else {
            out.small_ = -small_;
        }
        return out;
    }

    friend KernelInt operator*(const KernelInt& a, const KernelInt& b)
    {
        KernelInt out;
        if (!a.big_ && !b.big_) {
            out.assign_wide(static_cast<__int128>(a.small_) * b.small_);
        } else {
            out.assign_mpz(a.to_mpz() * b.to_mpz());
        }
        return out;
    }

    KernelInt& operator*=(const KernelInt& s)
    {
        *this = *this * s;
        return *this;
    }

    /// a*s - b*t.
    static KernelInt mul_sub(const KernelInt& a, const KernelInt& s, const KernelInt& b, const KernelInt& t)
    {
        KernelInt out;
        if (!a.big_ && !s.big_ && !b.big_ && !t.big_) {
            out.assign_wide(static_cast<__int128>(a.small_) * s.small_ - static_cast<__int128>(b.small_) * t.small_);
        } else {
            mpz_class r = a.to_mpz() * s.to_mpz();
            mpz_class bt = b.to_mpz();
            mpz_class tt = t.to_mpz();
            mpz_submul(r.get_mpz_t(), bt.get_mpz_t(), tt.get_mpz_t());
            out.assign_mpz(r);
        }
        return out;
    }

    /// Nonnegative gcd.
    static KernelInt gcd(const KernelInt& a, const KernelInt& b)
    {
        KernelInt out;
        if (!a.big_ && !b.big_) {
            out.small_ = static_cast<std::int64_t>(
                std::gcd(static_cast<std::uint64_t>(a.small_ < 0 ? -a.small_ : a.small_),
                         static_cast<std::uint64_t>(b.small_ < 0 ? -b.small_ : b.small_)));
        } else {
            mpz_class g;
            mpz_class x = a.to_mpz();
            mpz_class y = b.to_mpz();
            mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
            out.assign_mpz(g);
        }
        return out;
    }

    /// Exact division; `g` must divide the value.
    KernelInt divexact(const KernelInt& g) const
    {
        KernelInt out;
        if (!big_ && !g.big_) {
            out.small_ = small_ / g.small_;
        } else {
            mpz_class r;
            mpz_class x = to_mpz();
            mpz_class y = g.to_mpz();
            mpz_divexact(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
            out.assign_mpz(r);
        }
        return out;
    }

private:
    static constexpr std::int64_t kLimit = std::int64_t(1) << 62;

    static bool fits_small(std::int64_t v) { return v > -kLimit && v < kLimit; }

    void assign_wide(__int128 v)
    {
        if (v > -kLimit && v < kLimit) {
            small_ = static_cast<std::int64_t>(v);
            big_.reset();
            return;
        }
        const bool negative = v < 0;
        unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
        mpz_class r(static_cast<unsigned long>(mag >> 64));
        r <<= 64;
        r += static_cast<unsigned long>(mag & ~std::uint64_t(0));
        if (negative) {
            r = -r;
        }
        small_ = 0;
        big_ = std::make_unique<mpz_class>(std::move(r));
    }

    void assign_mpz(const mpz_class& v)
    {
        if (mpz_fits_slong_p(v.get_mpz_t()) && fits_small(v.get_si())) {
            small_ = v.get_si();
            big_.reset();
        } else {
            small_ = 0;
            big_ = std::make_unique<mpz_class>(v);
        }
    }

    std::int64_t small_ = 0;
    std::unique_ptr<mpz_class> big_;
};

} // namespace symres::detail

#endif
