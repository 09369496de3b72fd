#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "canq/field.hpp"

namespace canq {

// Exponent vector, one entry per ring variable. Entries may be negative in a
// Laurent ring.
using Expo = std::vector<std::int32_t>;

inline long expo_degree(const Expo& e) {
    long d = 0;
    for (auto x : e) d += x;
    return d;
}

// Graded lexicographic order with the first variable strongest. Total order on
// exponent vectors of equal length; used both for canonical term storage and
// as the division order of the Groebner kernel.
struct GrlexLess {
    bool operator()(const Expo& a, const Expo& b) const {
        long da = expo_degree(a), db = expo_degree(b);
        if (da != db) return da < db;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

// Commutative coefficient ring descriptor. truncation >= 0 turns the ring into
// power series truncated at that total degree (terms of degree < truncation
// are kept); laurent allows negative exponents.
struct Ring {
    Field field = Field::rationals();
    std::vector<std::string> vars;
    bool laurent = false;
    int truncation = -1;

    bool operator==(const Ring&) const = default;
};

Ring poly_ring(const Field& f, std::vector<std::string> vars);
Ring laurent_ring(const Field& f, std::vector<std::string> vars);
Ring series_ring(const Field& f, std::vector<std::string> vars, int truncation);

// Sparse multivariate polynomial (or Laurent polynomial / truncated series,
// depending on its ring). Terms are held in canonical grlex order with nonzero
// coefficients only; all operations on two polynomials require identical rings.
class Poly {
public:
    using Terms = std::map<Expo, Fq, GrlexLess>;

    explicit Poly(Ring r) : ring_(std::move(r)) {}

    static Poly constant(const Ring& r, const Fq& c);
    static Poly constant(const Ring& r, long c) { return constant(r, Fq::of(c, r.field)); }
    static Poly one(const Ring& r) { return constant(r, 1); }
    static Poly var(const Ring& r, int index, int exp = 1);
    static Poly monomial(const Ring& r, const Expo& e, const Fq& c);

    const Ring& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Fq constant_term() const;
    // Highest total degree among terms; meaningless on the zero polynomial.
    long total_degree() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const Fq& c) const;
    Poly pow(unsigned e) const;

    bool operator==(const Poly& o) const { return ring_ == o.ring_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Drop terms of total degree >= n.
    Poly truncated(int n) const;
    // Ring morphism: variable i maps to images[i] (a polynomial in the target
    // ring). Negative exponents invert the image, which requires a truncated
    // target ring and an invertible image.
    Poly substituted(const Ring& target, const std::vector<Poly>& images) const;

    std::string to_string() const;

private:
    void add_term(const Expo& e, const Fq& c);
    void normalize();

    Ring ring_;
    Terms terms_;
};

// Multiplicative inverse in a truncated series ring; the argument must have a
// nonzero constant term.
Poly series_invert(const Poly& s);

}  // namespace canq
