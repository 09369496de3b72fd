#include "canq/slopes.hpp"

#include <numeric>
#include <stdexcept>

namespace canq {

std::vector<ValidationIssue> validate(const PlumbingSpec& spec) {
    std::vector<ValidationIssue> issues;
    if (spec.slopes.size() < 2)
        issues.push_back({"slope-count", -1, "need at least two slopes (n >= 1)"});
    for (std::size_t i = 0; i < spec.slopes.size(); ++i) {
        const auto& s = spec.slopes[i];
        if (s.k < 0 || s.l < 0)
            issues.push_back({"slope-negative", static_cast<int>(i),
                              "slope " + std::to_string(i) + " has negative entries"});
        else if (s.k != 1 && s.l != 1)
            issues.push_back({"slope-constraint", static_cast<int>(i),
                              "slope constraint violated at index " + std::to_string(i) +
                                  ": need k=1 or l=1 (got k=" + std::to_string(s.k) +
                                  ", l=" + std::to_string(s.l) + ")"});
    }
    if (spec.poly_truncation < 1)
        issues.push_back({"truncation-range", -1, "poly truncation must be >= 1"});
    if (spec.winding_bound < 0)
        issues.push_back({"winding-range", -1, "winding bound must be >= 0"});
    return issues;
}

std::string ThreeManifoldType::to_string() const {
    switch (kind) {
        case Kind::S1xS2: return "S1xS2";
        case Kind::Sphere: return "S3";
        case Kind::Lens:
            return "L(" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
    return "?";
}

long slope_det(const SlopeDatum& a, const SlopeDatum& b) {
    long ax = a.k, ay = static_cast<long>(sign_value(a.sign)) * a.l;
    long bx = b.k, by = static_cast<long>(sign_value(b.sign)) * b.l;
    return ax * by - ay * bx;
}

namespace {

// x, y with a*x + b*y = gcd(a, b) >= 0.
std::tuple<long, long, long> egcd(long a, long b) {
    if (b == 0) return a >= 0 ? std::tuple{a, 1l, 0l} : std::tuple{-a, -1l, 0l};
    auto [g, x, y] = egcd(b, a % b);
    return {g, y, x - (a / b) * y};
}

long mod_pos(long a, long p) {
    long r = a % p;
    return r < 0 ? r + p : r;
}

}  // namespace

ThreeManifoldType matching_cycle_type(const SlopeDatum& a, const SlopeDatum& b) {
    long d = slope_det(a, b);
    long p = d < 0 ? -d : d;
    if (p == 0) return {ThreeManifoldType::Kind::S1xS2, 0, 0};
    if (p == 1) return {ThreeManifoldType::Kind::Sphere, 0, 0};

    long sx = a.k, sy = static_cast<long>(sign_value(a.sign)) * a.l;
    auto [g, x, y] = egcd(sx, sy);
    if (g != 1) throw std::logic_error("matching_cycle_type: non-primitive slope vector");
    // Basis completion t with det(s, t) = sx*v - sy*u = 1.
    long u = -y, v = x;
    long bx = b.k, by = static_cast<long>(sign_value(b.sign)) * b.l;
    // b = alpha*s + beta*t with beta = det(s, b) = +-p; alpha = det(b, t).
    long alpha = bx * v - by * u;
    long q = mod_pos(alpha, p);
    if (q == 0 || std::gcd(q, p) != 1)
        throw std::logic_error("matching_cycle_type: degenerate coefficient");
    auto [gq, qi, yy] = egcd(q, p);
    (void)gq;
    (void)yy;
    long qinv = mod_pos(qi, p);
    long best = q;
    for (long c : {p - q, qinv, p - qinv})
        if (c < best) best = c;
    return {ThreeManifoldType::Kind::Lens, p, best};
}

std::vector<ThreeManifoldType> core_types(const PlumbingSpec& spec) {
    int m = static_cast<int>(spec.slopes.size());
    std::vector<ThreeManifoldType> out;
    out.reserve(m);
    for (int i = 0; i < m; ++i)
        out.push_back(matching_cycle_type(spec.slopes[(i + m - 1) % m], spec.slopes[i]));
    return out;
}

Assumptions assumptions(const PlumbingSpec& spec) {
    Assumptions r;
    r.A = validate(spec).empty();
    int n = spec.n();
    if (!r.A || n < 1) return r;
    r.B = slope_det(spec.slopes[0], spec.slopes[n]) != 0;
    r.C = true;
    for (int i = 0; i <= n && r.C; ++i)
        for (int j = i + 1; j <= n && r.C; ++j)
            if (slope_det(spec.slopes[i], spec.slopes[j]) == 0) r.C = false;
    const auto& s0 = spec.slopes[0];
    const auto& sn = spec.slopes[n];
    r.B_literal_pairs = !(s0.k == sn.k && sign_value(s0.sign) * s0.l == sign_value(sn.sign) * sn.l);
    return r;
}

std::string curve_type_string(CurveType t) {
    return t == CurveType::NegNeg ? "(-1,-1)" : "(0,-2)";
}

std::vector<CurveType> exceptional_curve_types(const PlumbingSpec& spec) {
    auto cores = core_types(spec);
    std::vector<CurveType> out;
    for (int i = 1; i <= spec.n(); ++i)
        out.push_back(cores[i].kind == ThreeManifoldType::Kind::Sphere ? CurveType::NegNeg
                                                                       : CurveType::ZeroNegTwo);
    return out;
}

Poly f_component(const SlopeDatum& s, const Ring& r) {
    if (r.vars.size() != 2) throw std::logic_error("f_component: need a 2-variable ring");
    Expo ey(2, 0), ex(2, 0);
    ey[1] = s.k;
    ex[0] = s.l;
    Fq one = Fq::one(r.field);
    Poly p = Poly::monomial(r, ey, one);
    return p + Poly::monomial(r, ex, s.sign == Sign::plus ? one : -one);
}

Poly f_component(const PlumbingSpec& spec, int i, const Ring& r) {
    return f_component(spec.slopes.at(i), r);
}

Poly f_total(const PlumbingSpec& spec, const Ring& r) {
    Poly p = Poly::one(r);
    for (const auto& s : spec.slopes) p = p * f_component(s, r);
    return p;
}

}  // namespace canq
