#pragma once

// Prime field F_p for word-sized p. Elements carry their modulus; mixing moduli throws.

#include <cstdint>
#include <ostream>
#include <string>

#include "pcalg/errors.hpp"
#include "pcalg/rational.hpp"

namespace pcalg {

namespace detail {

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

inline uint64_t invmod_u64(uint64_t a, uint64_t p) {
    if (a == 0) throw DivisionByZero();
    // extended Euclid on (a, p)
    int64_t t = 0, newt = 1;
    int64_t r = static_cast<int64_t>(p), newr = static_cast<int64_t>(a % p);
    while (newr != 0) {
        int64_t q = r / newr;
        int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw NonInvertible("gcd(" + std::to_string(a) + ", " + std::to_string(p) + ") != 1");
    if (t < 0) t += static_cast<int64_t>(p);
    return static_cast<uint64_t>(t);
}

inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        if (n % d == 0) return n == d;
    }
    // deterministic Miller-Rabin for 64-bit
    uint64_t s = n - 1;
    int r = 0;
    while ((s & 1) == 0) {
        s >>= 1;
        ++r;
    }
    auto powmod = [&](uint64_t b, uint64_t e) {
        uint64_t acc = 1;
        b %= n;
        while (e) {
            if (e & 1) acc = mulmod_u64(acc, b, n);
            b = mulmod_u64(b, b, n);
            e >>= 1;
        }
        return acc;
    };
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (a % n == 0) continue;
        uint64_t x = powmod(a, s);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

}  // namespace detail

class PrimeFieldElem {
public:
    PrimeFieldElem() : v_(0), p_(0) {}
    PrimeFieldElem(uint64_t v, uint64_t p) : v_(v % p), p_(p) {}

    static PrimeFieldElem from_int(long long n, uint64_t p) {
        long long r = n % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return PrimeFieldElem(static_cast<uint64_t>(r), p);
    }

    uint64_t value() const { return v_; }
    uint64_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    PrimeFieldElem operator-() const { return PrimeFieldElem(v_ == 0 ? 0 : p_ - v_, p_); }
    PrimeFieldElem operator+(const PrimeFieldElem& o) const {
        check(o);
        uint64_t s = v_ + o.v_;
        if (s >= p_) s -= p_;
        return PrimeFieldElem(s, p_);
    }
    PrimeFieldElem operator-(const PrimeFieldElem& o) const {
        check(o);
        return PrimeFieldElem(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_);
    }
    PrimeFieldElem operator*(const PrimeFieldElem& o) const {
        check(o);
        return PrimeFieldElem(detail::mulmod_u64(v_, o.v_, p_), p_);
    }
    PrimeFieldElem operator/(const PrimeFieldElem& o) const {
        check(o);
        return *this * o.inverse();
    }
    PrimeFieldElem& operator+=(const PrimeFieldElem& o) { return *this = *this + o; }
    PrimeFieldElem& operator-=(const PrimeFieldElem& o) { return *this = *this - o; }
    PrimeFieldElem& operator*=(const PrimeFieldElem& o) { return *this = *this * o; }
    PrimeFieldElem& operator/=(const PrimeFieldElem& o) { return *this = *this / o; }

    PrimeFieldElem inverse() const {
        if (v_ == 0) throw DivisionByZero();
        return PrimeFieldElem(detail::invmod_u64(v_, p_), p_);
    }

    bool operator==(const PrimeFieldElem& o) const {
        check(o);
        return v_ == o.v_;
    }
    bool operator!=(const PrimeFieldElem& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(v_); }

    friend std::ostream& operator<<(std::ostream& os, const PrimeFieldElem& e) {
        return os << e.str();
    }

private:
    void check(const PrimeFieldElem& o) const {
        if (p_ != o.p_) {
            throw MixedDomains("F_" + std::to_string(p_) + " vs F_" + std::to_string(o.p_));
        }
    }

    uint64_t v_;
    uint64_t p_;
};

// canonical ring map Q -> F_p; q = n/d requires gcd(d, p) = 1
inline PrimeFieldElem embed_rational_fp(const Rational& q, uint64_t p) {
    mpz_class n = q.num(), d = q.den();
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class nr = n % pz;
    if (nr < 0) nr += pz;
    mpz_class dr = d % pz;
    if (dr == 0) throw NonEmbeddable(q.str() + " into F_" + std::to_string(p));
    uint64_t nu = nr.get_ui();
    uint64_t du = dr.get_ui();
    if (du == 0) throw NonEmbeddable(q.str() + " into F_" + std::to_string(p));
    uint64_t dinv;
    try {
        dinv = detail::invmod_u64(du, p);
    } catch (const NonInvertible&) {
        throw NonEmbeddable(q.str() + " into F_" + std::to_string(p));
    }
    return PrimeFieldElem(detail::mulmod_u64(nu, dinv, p), p);
}

}  // namespace pcalg
