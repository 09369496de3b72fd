#include "canq/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace canq {

Ring poly_ring(const Field& f, std::vector<std::string> vars) {
    return Ring{f, std::move(vars), false, -1};
}

Ring laurent_ring(const Field& f, std::vector<std::string> vars) {
    return Ring{f, std::move(vars), true, -1};
}

Ring series_ring(const Field& f, std::vector<std::string> vars, int truncation) {
    if (truncation < 0) throw std::invalid_argument("series_ring: negative truncation");
    return Ring{f, std::move(vars), false, truncation};
}

namespace {
void check_same_ring(const Ring& a, const Ring& b) {
    if (!(a == b)) throw std::logic_error("Poly: mixed-ring arithmetic");
}

void check_expo(const Ring& r, const Expo& e) {
    if (e.size() != r.vars.size()) throw std::logic_error("Poly: exponent arity mismatch");
    if (!r.laurent)
        for (auto x : e)
            if (x < 0) throw std::logic_error("Poly: negative exponent outside Laurent ring");
}
}  // namespace

Poly Poly::constant(const Ring& r, const Fq& c) {
    return monomial(r, Expo(r.vars.size(), 0), c);
}

Poly Poly::var(const Ring& r, int index, int exp) {
    Expo e(r.vars.size(), 0);
    e.at(index) = exp;
    return monomial(r, e, Fq::one(r.field));
}

Poly Poly::monomial(const Ring& r, const Expo& e, const Fq& c) {
    check_expo(r, e);
    Poly p(r);
    if (!c.is_zero() && (r.truncation < 0 || expo_degree(e) < r.truncation))
        p.terms_.emplace(e, c);
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && expo_degree(terms_.begin()->first) == 0 &&
           terms_.begin()->first == Expo(ring_.vars.size(), 0);
}

Fq Poly::constant_term() const {
    auto it = terms_.find(Expo(ring_.vars.size(), 0));
    return it == terms_.end() ? Fq::zero(ring_.field) : it->second;
}

long Poly::total_degree() const {
    long d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        long de = expo_degree(e);
        if (first || de > d) d = de;
        first = false;
    }
    return d;
}

void Poly::add_term(const Expo& e, const Fq& c) {
    if (c.is_zero()) return;
    if (ring_.truncation >= 0 && expo_degree(e) >= ring_.truncation) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Poly::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero() ||
            (ring_.truncation >= 0 && expo_degree(it->first) >= ring_.truncation))
            it = terms_.erase(it);
        else
            ++it;
    }
}

Poly Poly::operator+(const Poly& o) const {
    check_same_ring(ring_, o.ring_);
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly r(ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly Poly::scaled(const Fq& c) const {
    Poly r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) {
        Fq v = k * c;
        if (!v.is_zero()) r.terms_.emplace(e, v);
    }
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_same_ring(ring_, o.ring_);
    Poly r(ring_);
    for (const auto& [ea, ca] : terms_) {
        long da = expo_degree(ea);
        for (const auto& [eb, cb] : o.terms_) {
            if (ring_.truncation >= 0 && da + expo_degree(eb) >= ring_.truncation) continue;
            Expo e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly acc = one(ring_);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Poly Poly::truncated(int n) const {
    Poly r(ring_);
    for (const auto& [e, c] : terms_)
        if (expo_degree(e) < n) r.terms_.emplace(e, c);
    return r;
}

Poly Poly::substituted(const Ring& target, const std::vector<Poly>& images) const {
    if (images.size() != ring_.vars.size())
        throw std::logic_error("Poly::substituted: image count mismatch");
    for (const auto& img : images) check_same_ring(img.ring(), target);

    std::vector<Poly> inverses;  // computed lazily per variable
    inverses.assign(images.size(), Poly(target));
    std::vector<bool> have_inverse(images.size(), false);

    Poly result(target);
    for (const auto& [e, c] : terms_) {
        Poly term = Poly::constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (e[i] > 0) {
                term = term * images[i].pow(static_cast<unsigned>(e[i]));
            } else {
                if (!have_inverse[i]) {
                    inverses[i] = series_invert(images[i]);
                    have_inverse[i] = true;
                }
                term = term * inverses[i].pow(static_cast<unsigned>(-e[i]));
            }
        }
        result = result + term;
    }
    return result;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Leading term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Fq coeff = c;
        bool negative = false;
        if (ring_.field.is_rational()) {
            std::string s = c.to_string();
            if (!s.empty() && s[0] == '-') {
                negative = true;
                coeff = -c;
            }
        }
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_.vars[i];
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        std::string body;
        if (mono.empty())
            body = coeff.to_string();
        else if (coeff.is_one())
            body = mono;
        else
            body = coeff.to_string() + "*" + mono;

        if (first) {
            if (negative) out << "-";
            out << body;
            first = false;
        } else {
            out << (negative ? " - " : " + ") << body;
        }
    }
    return out.str();
}

Poly series_invert(const Poly& s) {
    const Ring& r = s.ring();
    if (r.truncation < 0) throw std::domain_error("series_invert: ring is not truncated");
    Fq c = s.constant_term();
    if (c.is_zero()) throw std::domain_error("series_invert: zero constant term");
    Poly u = Poly::constant(r, c.inv());
    Poly u0 = u;
    Poly one = Poly::one(r);
    // Each pass clears the lowest remaining error layer, so at most
    // `truncation` rounds are needed.
    for (int i = 0; i < r.truncation + 1; ++i) {
        Poly err = one - s * u;
        if (err.is_zero()) break;
        u = u + u0 * err;
    }
    return u;
}

}  // namespace canq
