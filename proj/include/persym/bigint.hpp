#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace persym {

struct BigIntDivMod;

// Arbitrary-precision signed integer, little-endian 64-bit limbs.
// Covers the value ranges the formula catalog needs (2^(7n) grows past
// 128 bits around n = 18); only the operations used by exact counting
// are provided: add, sub, mul, shifts, divmod, decimal printing.
class BigInt {
  public:
    BigInt() = default;
    BigInt(long long v);
    BigInt(unsigned long long v);
    BigInt(long v) : BigInt(static_cast<long long>(v)) {}
    BigInt(unsigned long v) : BigInt(static_cast<unsigned long long>(v)) {}
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}
    BigInt(unsigned v) : BigInt(static_cast<unsigned long long>(v)) {}

    static BigInt pow2(unsigned long exponent);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_odd() const { return sign_ != 0 && (mag_[0] & 1u); }

    // -1, 0, +1
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);
    BigInt& operator<<=(unsigned long bits);
    BigInt& operator>>=(unsigned long bits);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
    friend BigInt operator<<(BigInt a, unsigned long s) { return a <<= s; }
    friend BigInt operator>>(BigInt a, unsigned long s) { return a >>= s; }

    // quotient truncated toward zero, remainder has the dividend's sign
    BigIntDivMod divmod(const BigInt& divisor) const;
    BigInt operator/(const BigInt& d) const;
    BigInt operator%(const BigInt& d) const;

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b);
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    // number of trailing zero bits (0 for the zero value)
    unsigned long trailing_zero_bits() const;
    // position of the highest set bit plus one (0 for the zero value)
    unsigned long bit_length() const;

    bool fits_uint64() const { return sign_ >= 0 && mag_.size() <= 1; }
    std::uint64_t to_uint64() const;

    std::string to_string() const;

  private:
    int sign_ = 0;
    std::vector<std::uint64_t> mag_;  // no trailing zero limbs; empty iff sign_ == 0

    void trim();
    static int cmp_mag(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b);
    static std::vector<std::uint64_t> add_mag(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint64_t> sub_mag(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b);
};

struct BigIntDivMod {
    BigInt quot;
    BigInt rem;
};

inline BigInt BigInt::operator/(const BigInt& d) const { return divmod(d).quot; }
inline BigInt BigInt::operator%(const BigInt& d) const { return divmod(d).rem; }

inline BigInt pow2(unsigned long e) { return BigInt::pow2(e); }

}  // namespace persym
