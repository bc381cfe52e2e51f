#include "persym/dyadic.hpp"

#include <stdexcept>

namespace persym {

void Dyadic::canonicalize() {
    if (m_.is_zero()) {
        e_ = 0;
        return;
    }
    unsigned long tz = m_.trailing_zero_bits();
    if (tz) {
        m_ >>= tz;
        e_ += static_cast<long>(tz);
    }
}

Dyadic& Dyadic::operator+=(const Dyadic& rhs) {
    if (rhs.m_.is_zero()) return *this;
    if (m_.is_zero()) return *this = rhs;
    long e = e_ < rhs.e_ ? e_ : rhs.e_;
    BigInt a = m_ << static_cast<unsigned long>(e_ - e);
    BigInt b = rhs.m_ << static_cast<unsigned long>(rhs.e_ - e);
    m_ = a + b;
    e_ = e;
    canonicalize();
    return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& rhs) { return *this += -rhs; }

Dyadic& Dyadic::operator*=(const Dyadic& rhs) {
    m_ *= rhs.m_;
    e_ = m_.is_zero() ? 0 : e_ + rhs.e_;
    return *this;
}

BigInt Dyadic::to_integer() const {
    if (!is_integer()) throw std::domain_error("Dyadic: not an integer: " + to_string());
    return m_ << static_cast<unsigned long>(e_);
}

std::string Dyadic::to_string() const {
    if (is_integer()) return to_integer().to_string();
    return m_.to_string() + "/2^" + std::to_string(-e_);
}

}  // namespace persym
