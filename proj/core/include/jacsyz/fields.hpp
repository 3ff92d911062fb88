#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace jacsyz {

// Exact rational coefficient field.
class Rationals {
public:
    using Elem = mpq_class;

    std::uint64_t characteristic() const { return 0; }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_long(long v) const { return Elem(v); }
    Elem from_mpz(const mpz_class& v) const { return Elem(v); }
    Elem from_fraction(const mpz_class& num, const mpz_class& den) const {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        Elem r(num, den);
        r.canonicalize();
        return r;
    }

    Elem add(const Elem& a, const Elem& b) const { return Elem(a + b); }
    Elem sub(const Elem& a, const Elem& b) const { return Elem(a - b); }
    Elem mul(const Elem& a, const Elem& b) const { return Elem(a * b); }
    Elem neg(const Elem& a) const { return Elem(-a); }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return Elem(1 / a);
    }
    Elem div(const Elem& a, const Elem& b) const {
        if (b == 0) throw std::domain_error("division by zero");
        return Elem(a / b);
    }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }

    std::string to_string(const Elem& a) const { return a.get_str(); }

    bool operator==(const Rationals&) const { return true; }
};

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    return r;
}

}  // namespace detail

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = detail::powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = detail::mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

// Z/p with canonical representatives in [0, p).
class PrimeField {
public:
    using Elem = std::uint64_t;

    static constexpr std::uint64_t kDefaultPrime = 2147483647ull;  // 2^31 - 1

    explicit PrimeField(std::uint64_t p = kDefaultPrime) : p_(p) {
        if (p < 2 || p > (1ull << 32) || !is_prime_u64(p))
            throw std::invalid_argument("PrimeField modulus must be a prime < 2^32");
    }

    std::uint64_t characteristic() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    Elem from_long(long v) const {
        long long r = static_cast<long long>(v) % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<Elem>(r);
    }
    Elem from_mpz(const mpz_class& v) const {
        mpz_class r = v % static_cast<unsigned long>(p_);
        if (r < 0) r += static_cast<unsigned long>(p_);
        return r.get_ui();
    }
    Elem from_fraction(const mpz_class& num, const mpz_class& den) const {
        return mul(from_mpz(num), inv(from_mpz(den)));
    }

    Elem add(Elem a, Elem b) const { Elem r = a + b; return r >= p_ ? r - p_ : r; }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem mul(Elem a, Elem b) const { return detail::mulmod_u64(a, b, p_); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return detail::powmod_u64(a, p_ - 2, p_);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == 1; }
    bool equal(Elem a, Elem b) const { return a == b; }

    std::string to_string(Elem a) const { return std::to_string(a); }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint64_t p_;
};

}  // namespace jacsyz
