#pragma once

#include <string>

#include "persym/bigint.hpp"

namespace persym {

// Exact dyadic rational m * 2^e. Canonical form keeps m odd (or zero with
// e = 0), so is_integer() is just a sign test on the exponent. Addition and
// multiplication never round; these are the only denominators the moment
// equations produce.
class Dyadic {
  public:
    Dyadic() = default;
    Dyadic(const BigInt& mantissa, long exponent = 0) : m_(mantissa), e_(exponent) { canonicalize(); }
    Dyadic(long long v) : Dyadic(BigInt(v)) {}
    Dyadic(int v) : Dyadic(BigInt(v)) {}

    static Dyadic pow2(long exponent) { return Dyadic(BigInt(1), exponent); }

    const BigInt& mantissa() const { return m_; }
    long exponent() const { return e_; }
    bool is_zero() const { return m_.is_zero(); }
    bool is_negative() const { return m_.is_negative(); }
    bool is_integer() const { return m_.is_zero() || e_ >= 0; }

    Dyadic& operator+=(const Dyadic& rhs);
    Dyadic& operator-=(const Dyadic& rhs);
    Dyadic& operator*=(const Dyadic& rhs);
    Dyadic operator-() const { return Dyadic(-m_, e_); }

    friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
    friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
    friend Dyadic operator*(Dyadic a, const Dyadic& b) { return a *= b; }

    // value * 2^shift, exact for either sign of shift
    Dyadic scaled_pow2(long shift) const { return Dyadic(m_, e_ + shift); }

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.e_ == b.e_ && a.m_ == b.m_;
    }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }

    // requires is_integer()
    BigInt to_integer() const;

    // "m" for integers, "m/2^k" otherwise
    std::string to_string() const;

  private:
    BigInt m_;
    long e_ = 0;

    void canonicalize();
};

}  // namespace persym
