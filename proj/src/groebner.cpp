#include "canq/groebner.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace canq {

namespace {

void check_groebner_ring(const Ring& r) {
    if (r.laurent || r.truncation >= 0)
        throw std::logic_error("groebner: plain polynomial ring required");
}

const std::pair<const Expo, Fq>& leading(const Poly& p) { return *p.terms().rbegin(); }

bool divides(const Expo& a, const Expo& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Expo quotient(const Expo& b, const Expo& a) {
    Expo q(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) q[i] = b[i] - a[i];
    return q;
}

Expo lcm(const Expo& a, const Expo& b) {
    Expo m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
    return m;
}

Poly make_monic(const Poly& p) { return p.scaled(leading(p).second.inv()); }

Poly s_poly(const Poly& f, const Poly& g) {
    const auto& [ef, cf] = leading(f);
    const auto& [eg, cg] = leading(g);
    Expo m = lcm(ef, eg);
    const Ring& r = f.ring();
    Poly a = Poly::monomial(r, quotient(m, ef), cf.inv());
    Poly b = Poly::monomial(r, quotient(m, eg), cg.inv());
    return a * f - b * g;
}

}  // namespace

Poly normal_form(Poly f, const std::vector<Poly>& divisors) {
    if (divisors.empty() || f.is_zero()) return f;
    check_groebner_ring(f.ring());
    const Ring& ring = f.ring();
    Poly result(ring);
    while (!f.is_zero()) {
        // Highest term of the working remainder.
        const auto& [e, c] = leading(f);
        const Poly* div = nullptr;
        for (const auto& g : divisors) {
            if (!g.is_zero() && divides(leading(g).first, e)) {
                div = &g;
                break;
            }
        }
        if (div == nullptr) {
            Poly t = Poly::monomial(ring, e, c);
            result = result + t;
            f = f - t;
        } else {
            const auto& [eg, cg] = leading(*div);
            f = f - Poly::monomial(ring, quotient(e, eg), c / cg) * (*div);
        }
    }
    return result;
}

std::vector<Poly> groebner_basis(std::vector<Poly> gens) {
    std::vector<Poly> basis;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        check_groebner_ring(g.ring());
        basis.push_back(make_monic(g));
    }
    if (basis.empty()) return basis;

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        // Buchberger's coprimality criterion.
        Expo m = lcm(leading(basis[i]).first, leading(basis[j]).first);
        if (expo_degree(m) ==
            expo_degree(leading(basis[i]).first) + expo_degree(leading(basis[j]).first))
            continue;
        Poly r = normal_form(s_poly(basis[i], basis[j]), basis);
        if (!r.is_zero()) {
            basis.push_back(make_monic(r));
            for (std::size_t k = 0; k + 1 < basis.size(); ++k)
                pairs.emplace_back(k, basis.size() - 1);
        }
    }

    // Minimize: drop elements whose leading term another leading term divides.
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            const Expo& li = leading(basis[i]).first;
            const Expo& lj = leading(basis[j]).first;
            if (divides(lj, li) && (li != lj || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Tail-reduce each element against the others; leading terms survive
    // because the set is minimal.
    std::vector<Poly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(make_monic(normal_form(minimal[i], others)));
    }

    std::sort(reduced.begin(), reduced.end(), [](const Poly& a, const Poly& b) {
        return GrlexLess{}(leading(a).first, leading(b).first);
    });
    return reduced;
}

QuotientDim quotient_dimension(const std::vector<Poly>& groebner) {
    if (groebner.empty()) return {false, 0};
    std::size_t nvars = groebner.front().ring().vars.size();

    std::vector<Expo> lts;
    for (const auto& g : groebner) {
        if (g.is_zero()) continue;
        if (g.is_constant()) return {true, 0};
        lts.push_back(leading(g).first);
    }
    if (lts.empty()) return {false, 0};

    // Bounded staircase needs a pure power of every variable among the
    // leading terms.
    std::vector<std::int64_t> bound(nvars, -1);
    for (const auto& e : lts) {
        int support = 0, which = -1;
        for (std::size_t i = 0; i < nvars; ++i)
            if (e[i] > 0) {
                ++support;
                which = static_cast<int>(i);
            }
        if (support == 1 && (bound[which] < 0 || e[which] < bound[which]))
            bound[which] = e[which];
    }
    for (auto b : bound)
        if (b < 0) return {false, 0};

    std::uint64_t cells = 1;
    for (auto b : bound) {
        cells *= static_cast<std::uint64_t>(b);
        if (cells > 100000000ull)
            throw std::runtime_error("quotient_dimension: staircase too large");
    }

    // Walk the bounding box and count monomials no leading term divides.
    std::uint64_t dim = 0;
    Expo e(nvars, 0);
    while (true) {
        bool standard = true;
        for (const auto& lt : lts)
            if (divides(lt, e)) {
                standard = false;
                break;
            }
        if (standard) ++dim;
        std::size_t i = 0;
        while (i < nvars) {
            if (++e[i] < bound[i]) break;
            e[i] = 0;
            ++i;
        }
        if (i == nvars) break;
    }
    return {true, dim};
}

}  // namespace canq
