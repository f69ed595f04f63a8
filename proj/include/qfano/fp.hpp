#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qfano {

bool is_prime(std::uint64_t p);

// Element of F_p, p prime and p <= 2^31. The modulus travels with the value
// so polynomials over F_p need no global state.
class Fp {
public:
    Fp() = default;
    Fp(long long v, std::uint32_t p) : p_(p) {
        long long r = v % static_cast<long long>(p);
        r_ = static_cast<std::uint32_t>(r < 0 ? r + p : r);
    }

    std::uint32_t value() const { return r_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return r_ == 0; }
    std::string str() const { return std::to_string(r_); }

    Fp& operator+=(const Fp& o) { r_ = static_cast<std::uint32_t>((std::uint64_t(r_) + o.r_) % p_); return *this; }
    Fp& operator-=(const Fp& o) { r_ = static_cast<std::uint32_t>((std::uint64_t(r_) + p_ - o.r_) % p_); return *this; }
    Fp& operator*=(const Fp& o) { r_ = static_cast<std::uint32_t>(std::uint64_t(r_) * o.r_ % p_); return *this; }
    Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    Fp operator-() const { return Fp(0, p_) -= *this; }
    friend Fp operator*(Fp a, long k) { return a *= Fp(k, a.p_); }

    friend bool operator==(const Fp& a, const Fp& b) { return a.r_ == b.r_ && a.p_ == b.p_; }

    Fp pow(std::uint64_t e) const {
        Fp acc(1, p_), b = *this;
        for (; e; e >>= 1, b *= b)
            if (e & 1) acc *= b;
        return acc;
    }
    Fp inverse() const {
        if (r_ == 0) throw std::domain_error("Fp: inverse of zero");
        return pow(p_ - 2);
    }

private:
    std::uint32_t r_ = 0;
    std::uint32_t p_ = 2;
};

}  // namespace qfano
