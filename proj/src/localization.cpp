#include "canq/localization.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "canq/dg.hpp"

namespace canq {

namespace {

void require_valid(const PlumbingSpec& spec) {
    auto issues = validate(spec);
    if (!issues.empty()) throw std::invalid_argument(issues.front().message);
}

using Mat = std::vector<std::vector<long long>>;

// Column-transform half of the Smith normal form: D = U A V with the diagonal
// d[0] | d[1] | ... nonnegative. Only V is tracked; x lies in the row lattice
// of A exactly when every coordinate of x V is divisible by the matching
// diagonal entry (zero diagonal demands a zero coordinate).
struct Snf {
    Mat V;
    std::vector<long long> d;
    int cols = 0;
};

Snf smith_normal_form(Mat A) {
    const int r = static_cast<int>(A.size());
    const int c = r == 0 ? 0 : static_cast<int>(A[0].size());
    Snf out;
    out.cols = c;
    out.V.assign(c, std::vector<long long>(c, 0));
    for (int j = 0; j < c; ++j) out.V[j][j] = 1;

    auto col_axpy = [&](int j, long long q, int t) {  // col_j -= q * col_t
        for (int i = 0; i < r; ++i) A[i][j] -= q * A[i][t];
        for (int k = 0; k < c; ++k) out.V[k][j] -= q * out.V[k][t];
    };
    auto col_swap = [&](int j, int t) {
        for (int i = 0; i < r; ++i) std::swap(A[i][j], A[i][t]);
        for (int k = 0; k < c; ++k) std::swap(out.V[k][j], out.V[k][t]);
    };
    auto col_negate = [&](int t) {
        for (int i = 0; i < r; ++i) A[i][t] = -A[i][t];
        for (int k = 0; k < c; ++k) out.V[k][t] = -out.V[k][t];
    };

    const int steps = std::min(r, c);
    for (int t = 0; t < steps; ++t) {
        for (;;) {
            int pi = -1, pj = -1;
            for (int i = t; i < r; ++i)
                for (int j = t; j < c; ++j)
                    if (A[i][j] != 0 &&
                        (pi < 0 || std::llabs(A[i][j]) < std::llabs(A[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) break;  // submatrix is zero
            if (pi != t) std::swap(A[pi], A[t]);
            if (pj != t) col_swap(pj, t);
            bool clean = true;
            for (int i = t + 1; i < r; ++i) {
                if (A[i][t] == 0) continue;
                long long q = A[i][t] / A[t][t];
                for (int j = 0; j < c; ++j) A[i][j] -= q * A[t][j];
                if (A[i][t] != 0) clean = false;
            }
            for (int j = t + 1; j < c; ++j) {
                if (A[t][j] == 0) continue;
                long long q = A[t][j] / A[t][t];
                col_axpy(j, q, t);
                if (A[t][j] != 0) clean = false;
            }
            if (!clean) continue;  // pivot shrank, repeat
            bool divisible = true;
            for (int i = t + 1; i < r && divisible; ++i)
                for (int j = t + 1; j < c && divisible; ++j)
                    if (A[i][j] % A[t][t] != 0) {
                        for (int jj = 0; jj < c; ++jj) A[t][jj] += A[i][jj];
                        divisible = false;
                    }
            if (divisible) break;
        }
        if (A[t][t] < 0) col_negate(t);
    }
    for (int t = 0; t < steps; ++t) out.d.push_back(A[t][t]);
    return out;
}

std::vector<long long> times_v(const Snf& s, const std::vector<long long>& x) {
    std::vector<long long> y(s.cols, 0);
    for (int j = 0; j < s.cols; ++j)
        for (int k = 0; k < s.cols; ++k) y[j] += x[k] * s.V[k][j];
    return y;
}

bool in_lattice(const Snf& s, const std::vector<long long>& x) {
    auto y = times_v(s, x);
    for (int j = 0; j < s.cols; ++j) {
        long long dj = j < static_cast<int>(s.d.size()) ? s.d[j] : 0;
        if (dj == 0) {
            if (y[j] != 0) return false;
        } else if (y[j] % dj != 0) {
            return false;
        }
    }
    return true;
}

struct ElemOrder {
    bool finite = false;
    std::uint64_t m = 0;
};

ElemOrder quotient_order(const Snf& s, const std::vector<long long>& x) {
    auto y = times_v(s, x);
    std::uint64_t m = 1;
    for (int j = 0; j < s.cols; ++j) {
        long long dj = j < static_cast<int>(s.d.size()) ? s.d[j] : 0;
        if (dj == 0) {
            if (y[j] != 0) return {false, 0};
            continue;
        }
        std::uint64_t rem = static_cast<std::uint64_t>(std::llabs(y[j]) % dj);
        std::uint64_t mj = static_cast<std::uint64_t>(dj) /
                           std::gcd(static_cast<std::uint64_t>(dj), rem == 0 ? static_cast<std::uint64_t>(dj) : rem);
        m = std::lcm(m, mj);
    }
    return {true, m};
}

std::uint64_t mod_pos(long long v, std::uint64_t m) {
    long long mm = static_cast<long long>(m);
    return static_cast<std::uint64_t>(((v % mm) + mm) % mm);
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t m) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        out.push_back(p);
        while (m % p == 0) m /= p;
    }
    if (m > 1) out.push_back(m);
    return out;
}

bool certify_order(const Snf& s, std::vector<long long> e, std::uint64_t m) {
    auto scaled = [&](std::uint64_t f) {
        std::vector<long long> v = e;
        for (auto& x : v) x *= static_cast<long long>(f);
        return v;
    };
    if (!in_lattice(s, scaled(m))) return false;
    for (std::uint64_t p : prime_divisors(m))
        if (in_lattice(s, scaled(m / p))) return false;
    return true;
}

}  // namespace

LocalizedPresentation build_localized(const PlumbingSpec& spec) {
    require_valid(spec);
    const int n = spec.n();
    Ring zr = laurent_ring(spec.field, {"z1", "z2"});
    Quiver q;
    q.vertex_count = n;
    q.label_base = 1;
    for (int v = 0; v + 1 < n; ++v)
        q.arrows.push_back({"a" + std::to_string(v + 1), v, v + 1});
    for (int v = 0; v + 1 < n; ++v)
        q.arrows.push_back({"b" + std::to_string(v + 1), v + 1, v});
    const int eps_first = static_cast<int>(q.arrows.size());
    q.arrows.push_back({"eps0", 0, 0});
    const int eps_last = eps_first + 1;
    q.arrows.push_back({"eps" + std::to_string(n), n - 1, n - 1});
    std::map<Presentation::RuleKey, std::pair<Poly, int>> rules;
    const int nb = n - 1;
    for (int v = 0; v + 1 < n; ++v) {
        Poly f = f_component(spec, v + 1, zr);
        rules.insert({{v, nb + v}, {f, v + 1}});
        rules.insert({{nb + v, v}, {f, v}});
    }
    std::set<Presentation::RuleKey> zero{{eps_first, eps_first}, {eps_last, eps_last}};
    return {spec,
            Presentation(std::move(q), zr, std::move(rules), std::move(zero), Shape::Linear),
            eps_first,
            eps_last,
            f_component(spec, 0, zr),
            f_component(spec, n, zr)};
}

Element LocalizedPresentation::differential(const Element& u) const {
    return graded_differential(graded, {{eps_first, f_first}, {eps_last, f_last}}, u);
}

std::pair<Poly, Poly> unit_relations(const PlumbingSpec& spec) {
    require_valid(spec);
    Ring zr = laurent_ring(spec.field, {"z1", "z2"});
    auto rel = [&](const SlopeDatum& s) {
        Poly z1l = Poly::monomial(zr, {s.l, 0}, Fq::of(1, spec.field));
        Poly z2k = Poly::monomial(zr, {0, s.k}, Fq::of(sign_value(s.sign), spec.field));
        return z1l + z2k;
    };
    return {rel(spec.slopes.front()), rel(spec.slopes.back())};
}

TorsionReport torsion_orders(const PlumbingSpec& spec) {
    require_valid(spec);
    const SlopeDatum& s0 = spec.slopes.front();
    const SlopeDatum& sn = spec.slopes.back();
    const long long du = static_cast<long long>(s0.k) * sn.l - static_cast<long long>(sn.k) * s0.l;
    TorsionReport rep;

    if (spec.field.characteristic() == 2) {
        // No sign to track: the relations read z1^{l_i} z2^{-k_i} = 1.
        Mat A{{s0.l, -s0.k}, {sn.l, -sn.k}};
        Snf snf = smith_normal_form(A);
        if (du == 0) {
            rep.kind = TorsionReport::Kind::NonTorsion;
            return rep;
        }
        rep.kind = TorsionReport::Kind::Finite;
        auto o1 = quotient_order(snf, {1, 0});
        auto o2 = quotient_order(snf, {0, 1});
        rep.z1_order = o1.m;
        rep.z2_order = o2.m;
        rep.group_order = static_cast<std::uint64_t>(snf.d[0]) * static_cast<std::uint64_t>(snf.d[1]);
        const std::uint64_t M = static_cast<std::uint64_t>(snf.d[1]);
        rep.root_modulus = M;
        int t = 1;  // component with d[t] == M
        auto y1 = times_v(snf, {1, 0});
        auto y2 = times_v(snf, {0, 1});
        rep.z1_exponent = mod_pos(y1[t] * static_cast<long long>(M / snf.d[t]), M);
        rep.z2_exponent = mod_pos(y2[t] * static_cast<long long>(M / snf.d[t]), M);
        rep.orders_certified = certify_order(snf, {1, 0}, o1.m) && certify_order(snf, {0, 1}, o2.m);
        auto rel_ok = [&](const SlopeDatum& s) {
            long long v = static_cast<long long>(s.l) * static_cast<long long>(rep.z1_exponent) -
                          static_cast<long long>(s.k) * static_cast<long long>(rep.z2_exponent);
            return mod_pos(v, M) == 0;
        };
        rep.substitution_checked = rel_ok(s0) && rel_ok(sn);
        return rep;
    }

    const long long b0 = s0.sign == Sign::plus ? 1 : 0;
    const long long bn = sn.sign == Sign::plus ? 1 : 0;
    Mat A{{s0.l, -s0.k, b0}, {sn.l, -sn.k, bn}, {0, 0, 2}};
    Snf snf = smith_normal_form(A);
    if (in_lattice(snf, {0, 0, 1})) {
        // The relations force 1 = -1: the localized ring is zero.
        rep.kind = TorsionReport::Kind::Collapsed;
        rep.z1_order = rep.z2_order = 1;
        rep.group_order = 1;
        return rep;
    }
    if (du == 0) {
        rep.kind = TorsionReport::Kind::NonTorsion;
        return rep;
    }
    rep.kind = TorsionReport::Kind::Finite;
    auto o1 = quotient_order(snf, {1, 0, 0});
    auto o2 = quotient_order(snf, {0, 1, 0});
    rep.z1_order = o1.m;
    rep.z2_order = o2.m;
    rep.group_order = static_cast<std::uint64_t>(snf.d[0]) * static_cast<std::uint64_t>(snf.d[1]) *
                      static_cast<std::uint64_t>(snf.d[2]);
    const std::uint64_t M = static_cast<std::uint64_t>(snf.d[2]);
    rep.root_modulus = M;
    // Pick a diagonal component on which the sign element has order exactly 2;
    // the corresponding coordinate character sends it to M/2.
    auto ys = times_v(snf, {0, 0, 1});
    int t = -1;
    for (int j = 0; j < 3; ++j) {
        if (snf.d[j] == 0) continue;
        std::uint64_t dj = static_cast<std::uint64_t>(snf.d[j]);
        std::uint64_t rem = static_cast<std::uint64_t>(std::llabs(ys[j]) % snf.d[j]);
        std::uint64_t ord = dj / std::gcd(dj, rem == 0 ? dj : rem);
        if (ord == 2) {
            t = j;
            break;
        }
    }
    if (t < 0) throw std::logic_error("torsion_orders: sign element lost its order-2 component");
    auto y1 = times_v(snf, {1, 0, 0});
    auto y2 = times_v(snf, {0, 1, 0});
    const std::uint64_t scale = M / static_cast<std::uint64_t>(snf.d[t]);
    rep.z1_exponent = mod_pos(y1[t] * static_cast<long long>(scale), M);
    rep.z2_exponent = mod_pos(y2[t] * static_cast<long long>(scale), M);
    const std::uint64_t sign_value_exp = mod_pos(ys[t] * static_cast<long long>(scale), M);
    if (sign_value_exp != M / 2)
        throw std::logic_error("torsion_orders: witness character misplaced the sign");
    rep.orders_certified =
        certify_order(snf, {1, 0, 0}, o1.m) && certify_order(snf, {0, 1, 0}, o2.m);
    auto rel_ok = [&](const SlopeDatum& s, long long b) {
        long long v = static_cast<long long>(s.l) * static_cast<long long>(rep.z1_exponent) -
                      static_cast<long long>(s.k) * static_cast<long long>(rep.z2_exponent) +
                      b * static_cast<long long>(M / 2);
        return mod_pos(v, M) == 0;
    };
    rep.substitution_checked = rel_ok(s0, b0) && rel_ok(sn, bn);
    return rep;
}

std::string TorsionReport::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Finite:
            os << "finite: ord(z1) = " << z1_order << ", ord(z2) = " << z2_order
               << ", witness z1 = zeta_" << root_modulus << "^" << z1_exponent
               << ", z2 = zeta_" << root_modulus << "^" << z2_exponent;
            break;
        case Kind::Collapsed:
            os << "collapsed: the unit relations force 1 = -1, the localized ring is zero";
            break;
        case Kind::NonTorsion:
            os << "non-torsion: the unit relations leave a free multiplicative direction";
            break;
    }
    return os.str();
}

}  // namespace canq
