#include "canq/field.hpp"

#include <stdexcept>

namespace canq {

namespace {

bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Inverse of a mod p by extended Euclid; requires gcd(a, p) = 1.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw std::domain_error("inv_mod: element not invertible");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
    if (p > (1ull << 31)) throw std::invalid_argument("Field::prime: p exceeds 2^31");
    if (!is_prime_u64(p)) throw std::invalid_argument("Field::prime: p is not prime");
    return Field(p);
}

std::uint64_t Field::modulus() const {
    if (p_ == 0) throw std::logic_error("Field::modulus: rational field has no modulus");
    return p_;
}

std::string Field::to_string() const {
    return p_ == 0 ? "Q" : "F" + std::to_string(p_);
}

Fq Fq::of(long value, const Field& f) {
    Fq x(f);
    if (f.is_rational()) {
        x.rat_ = mpq_class(value);
    } else {
        std::int64_t p = static_cast<std::int64_t>(f.modulus());
        std::int64_t r = value % p;
        if (r < 0) r += p;
        x.res_ = static_cast<std::uint64_t>(r);
    }
    return x;
}

Fq Fq::ratio(long num, long den, const Field& f) {
    if (den == 0) throw std::domain_error("Fq::ratio: zero denominator");
    return of(num, f) / of(den, f);
}

bool Fq::is_zero() const {
    return field_.is_rational() ? rat_ == 0 : res_ == 0;
}

bool Fq::is_one() const {
    return field_.is_rational() ? rat_ == 1 : res_ == 1;
}

namespace {
void check_same_field(const Field& a, const Field& b) {
    if (!(a == b)) throw std::logic_error("Fq: mixed-field arithmetic");
}
}  // namespace

Fq Fq::operator+(const Fq& o) const {
    check_same_field(field_, o.field_);
    Fq x(field_);
    if (field_.is_rational()) {
        x.rat_ = rat_ + o.rat_;
        x.rat_.canonicalize();
    } else {
        std::uint64_t p = field_.modulus();
        x.res_ = res_ + o.res_;
        if (x.res_ >= p) x.res_ -= p;
    }
    return x;
}

Fq Fq::operator-(const Fq& o) const { return *this + (-o); }

Fq Fq::operator*(const Fq& o) const {
    check_same_field(field_, o.field_);
    Fq x(field_);
    if (field_.is_rational()) {
        x.rat_ = rat_ * o.rat_;
        x.rat_.canonicalize();
    } else {
        x.res_ = (res_ * o.res_) % field_.modulus();
    }
    return x;
}

Fq Fq::operator/(const Fq& o) const { return *this * o.inv(); }

Fq Fq::operator-() const {
    Fq x(field_);
    if (field_.is_rational()) {
        x.rat_ = -rat_;
    } else {
        x.res_ = res_ == 0 ? 0 : field_.modulus() - res_;
    }
    return x;
}

Fq Fq::inv() const {
    if (is_zero()) throw std::domain_error("Fq::inv: division by zero");
    Fq x(field_);
    if (field_.is_rational()) {
        x.rat_ = 1 / rat_;
        x.rat_.canonicalize();
    } else {
        x.res_ = inv_mod(res_, field_.modulus());
    }
    return x;
}

Fq Fq::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Fq acc = one(field_);
    Fq base = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

bool Fq::operator==(const Fq& o) const {
    if (!(field_ == o.field_)) return false;
    return field_.is_rational() ? rat_ == o.rat_ : res_ == o.res_;
}

std::string Fq::to_string() const {
    return field_.is_rational() ? rat_.get_str() : std::to_string(res_);
}

}  // namespace canq
