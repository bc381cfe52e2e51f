#include "persym/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace persym {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long a = v < 0 ? 0ULL - static_cast<unsigned long long>(v)
                                 : static_cast<unsigned long long>(v);
    mag_.push_back(a);
}

BigInt::BigInt(unsigned long long v) {
    if (v == 0) return;
    sign_ = 1;
    mag_.push_back(v);
}

BigInt BigInt::pow2(unsigned long exponent) {
    BigInt r;
    r.sign_ = 1;
    r.mag_.assign(exponent / 64 + 1, 0);
    r.mag_.back() = u64{1} << (exponent % 64);
    return r;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<u64> BigInt::add_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
    const std::vector<u64>& lo = a.size() < b.size() ? a : b;
    const std::vector<u64>& hi = a.size() < b.size() ? b : a;
    std::vector<u64> r(hi.size() + 1, 0);
    u128 carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        u128 s = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
        r[i] = static_cast<u64>(s);
        carry = s >> 64;
    }
    r[hi.size()] = static_cast<u64>(carry);
    return r;
}

std::vector<u64> BigInt::sub_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
    std::vector<u64> r(a.size(), 0);
    u64 borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        u64 bi = i < b.size() ? b[i] : 0;
        u64 d = a[i] - bi;
        u64 nb = (a[i] < bi) ? 1 : 0;
        u64 d2 = d - borrow;
        nb |= (d < borrow) ? 1 : 0;
        r[i] = d2;
        borrow = nb;
    }
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (rhs.sign_ == 0) return *this;
    if (sign_ == 0) return *this = rhs;
    if (sign_ == rhs.sign_) {
        mag_ = add_mag(mag_, rhs.mag_);
    } else {
        int c = cmp_mag(mag_, rhs.mag_);
        if (c == 0) {
            mag_.clear();
            sign_ = 0;
            return *this;
        }
        if (c > 0) {
            mag_ = sub_mag(mag_, rhs.mag_);
        } else {
            mag_ = sub_mag(rhs.mag_, mag_);
            sign_ = rhs.sign_;
        }
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt& BigInt::operator*=(const BigInt& rhs) {
    if (sign_ == 0 || rhs.sign_ == 0) {
        mag_.clear();
        sign_ = 0;
        return *this;
    }
    std::vector<u64> r(mag_.size() + rhs.mag_.size(), 0);
    for (std::size_t i = 0; i < mag_.size(); ++i) {
        u128 carry = 0;
        for (std::size_t j = 0; j < rhs.mag_.size(); ++j) {
            u128 cur = r[i + j] + static_cast<u128>(mag_[i]) * rhs.mag_[j] + carry;
            r[i + j] = static_cast<u64>(cur);
            carry = cur >> 64;
        }
        r[i + rhs.mag_.size()] += static_cast<u64>(carry);
    }
    mag_ = std::move(r);
    sign_ *= rhs.sign_;
    trim();
    return *this;
}

BigInt& BigInt::operator<<=(unsigned long bits) {
    if (sign_ == 0 || bits == 0) return *this;
    unsigned long words = bits / 64, rem = bits % 64;
    std::vector<u64> r(mag_.size() + words + 1, 0);
    for (std::size_t i = 0; i < mag_.size(); ++i) {
        r[i + words] |= rem ? (mag_[i] << rem) : mag_[i];
        if (rem) r[i + words + 1] |= mag_[i] >> (64 - rem);
    }
    mag_ = std::move(r);
    trim();
    return *this;
}

BigInt& BigInt::operator>>=(unsigned long bits) {
    if (sign_ == 0 || bits == 0) return *this;
    unsigned long words = bits / 64, rem = bits % 64;
    if (words >= mag_.size()) {
        mag_.clear();
        sign_ = 0;
        return *this;
    }
    std::vector<u64> r(mag_.size() - words, 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = rem ? (mag_[i + words] >> rem) : mag_[i + words];
        if (rem && i + words + 1 < mag_.size()) r[i] |= mag_[i + words + 1] << (64 - rem);
    }
    mag_ = std::move(r);
    trim();
    return *this;
}

unsigned long BigInt::trailing_zero_bits() const {
    if (sign_ == 0) return 0;
    unsigned long n = 0;
    for (std::size_t i = 0; i < mag_.size(); ++i) {
        if (mag_[i] == 0) {
            n += 64;
        } else {
            n += static_cast<unsigned long>(__builtin_ctzll(mag_[i]));
            break;
        }
    }
    return n;
}

unsigned long BigInt::bit_length() const {
    if (sign_ == 0) return 0;
    return 64ul * (mag_.size() - 1) + (64ul - static_cast<unsigned long>(__builtin_clzll(mag_.back())));
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    int c = BigInt::cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c < 0 : c > 0;
}

BigIntDivMod BigInt::divmod(const BigInt& divisor) const {
    if (divisor.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    BigIntDivMod out;
    if (sign_ == 0) return out;
    BigInt a = this->abs();
    BigInt b = divisor.abs();
    if (cmp_mag(a.mag_, b.mag_) < 0) {
        out.rem = *this;
        return out;
    }
    // shift-and-subtract long division on magnitudes
    unsigned long shift = a.bit_length() - b.bit_length();
    BigInt d = b << shift;
    BigInt q;
    q.sign_ = 1;
    q.mag_.assign(shift / 64 + 1, 0);
    BigInt r = a;
    for (unsigned long s = shift + 1; s-- > 0;) {
        if (cmp_mag(r.mag_, d.mag_) >= 0) {
            r -= d;
            q.mag_[s / 64] |= u64{1} << (s % 64);
        }
        d >>= 1;
    }
    q.trim();
    r.trim();
    q.sign_ = q.mag_.empty() ? 0 : sign_ * divisor.sign_;
    r.sign_ = r.mag_.empty() ? 0 : sign_;
    out.quot = std::move(q);
    out.rem = std::move(r);
    return out;
}

std::uint64_t BigInt::to_uint64() const {
    if (!fits_uint64()) throw std::overflow_error("BigInt: value does not fit in uint64");
    return mag_.empty() ? 0 : mag_[0];
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    // peel 19 decimal digits at a time with a single-limb divisor
    constexpr u64 kChunk = 10'000'000'000'000'000'000ull;
    std::vector<u64> m = mag_;
    std::string out;
    while (!m.empty()) {
        u128 rem = 0;
        for (std::size_t i = m.size(); i-- > 0;) {
            u128 cur = (rem << 64) | m[i];
            m[i] = static_cast<u64>(cur / kChunk);
            rem = cur % kChunk;
        }
        while (!m.empty() && m.back() == 0) m.pop_back();
        std::string digits = std::to_string(static_cast<u64>(rem));
        if (m.empty()) {
            out = digits + out;
        } else {
            out = std::string(19 - digits.size(), '0') + digits + out;
        }
    }
    return sign_ < 0 ? "-" + out : out;
}

}  // namespace persym
