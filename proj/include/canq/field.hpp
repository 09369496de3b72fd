#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace canq {

// Coefficient field descriptor: the rationals, or F_p for an odd-or-even prime
// p <= 2^31 (so products of residues fit in unsigned 64-bit arithmetic).
class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime(std::uint64_t p);

    bool is_rational() const { return p_ == 0; }
    // 0 for the rationals, p for F_p.
    std::uint64_t characteristic() const { return p_; }
    std::uint64_t modulus() const;

    bool operator==(const Field&) const = default;
    std::string to_string() const;

private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_;
};

// Exact field element. Rationals are GMP-backed and kept canonical (lowest
// terms, positive denominator); F_p elements are residues in [0, p).
class Fq {
public:
    Fq() : Fq(zero(Field::rationals())) {}

    static Fq zero(const Field& f) { return of(0, f); }
    static Fq one(const Field& f) { return of(1, f); }
    static Fq of(long value, const Field& f);
    static Fq ratio(long num, long den, const Field& f);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Fq operator+(const Fq& o) const;
    Fq operator-(const Fq& o) const;
    Fq operator*(const Fq& o) const;
    Fq operator/(const Fq& o) const;
    Fq operator-() const;
    Fq inv() const;
    // Integer exponents of either sign; negative exponents invert first.
    Fq pow(long e) const;

    bool operator==(const Fq& o) const;
    bool operator!=(const Fq& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    explicit Fq(const Field& f) : field_(f), res_(0) {}

    Field field_;
    mpq_class rat_;      // used when field_ is rational
    std::uint64_t res_;  // used when field_ is F_p
};

}  // namespace canq
