#include "canq/dg.hpp"

#include <stdexcept>

namespace canq {

namespace {

void require_valid(const PlumbingSpec& spec) {
    auto issues = validate(spec);
    if (!issues.empty()) throw std::invalid_argument(issues.front().message);
}

}  // namespace

DgPresentation build_dg(const PlumbingSpec& spec) {
    require_valid(spec);
    const int n = spec.n();
    Ring base = poly_ring(spec.field, {"x", "y"});
    Quiver q;
    q.vertex_count = n;
    q.label_base = 1;
    for (int v = 0; v + 1 < n; ++v)
        q.arrows.push_back({"a" + std::to_string(v + 1), v, v + 1});
    for (int v = 0; v + 1 < n; ++v)
        q.arrows.push_back({"b" + std::to_string(v + 1), v + 1, v});
    const int alpha = static_cast<int>(q.arrows.size());
    q.arrows.push_back({"alpha", 0, 0});
    const int beta = alpha + 1;
    q.arrows.push_back({"beta", n - 1, n - 1});
    std::map<Presentation::RuleKey, std::pair<Poly, int>> rules;
    const int nb = n - 1;
    for (int v = 0; v + 1 < n; ++v) {
        Poly f = f_component(spec, v + 1, base);
        rules.insert({{v, nb + v}, {f, v + 1}});
        rules.insert({{nb + v, v}, {f, v}});
    }
    std::set<Presentation::RuleKey> zero{{alpha, alpha}, {beta, beta}};
    DgPresentation out{spec,
                       Presentation(std::move(q), base, std::move(rules), std::move(zero),
                                    Shape::Linear),
                       alpha,
                       beta,
                       f_component(spec, 0, base),
                       f_component(spec, n, base)};
    return out;
}

int DgPresentation::word_degree(const PathWord& w) const {
    int d = 0;
    for (int a : w.arrows) d += arrow_degree(a);
    return d;
}

Element graded_differential(const Presentation& pres, const std::map<int, Poly>& images,
                            const Element& u) {
    Element acc = pres.zero();
    const Field& field = pres.coeff_ring().field;
    for (const auto& [w, c] : u.terms()) {
        int odd_left = 0;
        for (size_t p = 0; p < w.arrows.size(); ++p) {
            const int a = w.arrows[p];
            auto img = images.find(a);
            if (img == images.end()) continue;
            PathWord rest;
            rest.arrows.assign(w.arrows.begin(), w.arrows.end());
            rest.arrows.erase(rest.arrows.begin() + static_cast<long>(p));
            if (rest.arrows.empty())
                rest.vertex = pres.quiver().arrows[a].src;
            else
                rest.vertex = pres.quiver().arrows[rest.arrows.back()].src;
            Poly coeff = c * img->second;
            if (odd_left % 2 != 0) coeff = coeff.scaled(Fq::of(-1, field));
            acc = acc + pres.element(rest, coeff);
            ++odd_left;
        }
    }
    return acc;
}

Element DgPresentation::differential(const Element& u) const {
    return graded_differential(graded, {{alpha, f_first}, {beta, f_last}}, u);
}

ContractionAlgebra h0(const PlumbingSpec& spec) {
    require_valid(spec);
    const int n = spec.n();
    Ring base = poly_ring(spec.field, {"x", "y"});
    std::vector<Poly> f;
    for (int i = 0; i <= n; ++i) f.push_back(f_component(spec, i, base));

    std::vector<std::vector<std::vector<Poly>>> J(
        n, std::vector<std::vector<Poly>>(n));
    J[0][0].push_back(f[0]);
    J[n - 1][n - 1].push_back(f[n]);
    for (auto& row : J)
        for (auto& comp : row) comp = groebner_basis(comp);

    ContractionAlgebra out;
    out.spec = spec;
    out.base = base;
    const int pass_limit = 100;
    bool changed = true;
    while (changed) {
        if (++out.closure_passes > pass_limit)
            throw std::logic_error("h0: ideal closure failed to stabilize");
        changed = false;
        auto snapshot = J;
        std::vector<std::vector<std::vector<Poly>>> incoming(
            n, std::vector<std::vector<Poly>>(n));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                for (const Poly& g : snapshot[i][j]) {
                    if (i + 1 < n)
                        incoming[i + 1][j].push_back(i < j ? g * f[i + 1] : g);
                    if (i - 1 >= 0)
                        incoming[i - 1][j].push_back(i > j ? g * f[i] : g);
                    if (j - 1 >= 0)
                        incoming[i][j - 1].push_back(i < j ? g * f[j] : g);
                    if (j + 1 < n)
                        incoming[i][j + 1].push_back(i > j ? g * f[j + 1] : g);
                }
            }
        }
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (incoming[i][j].empty()) continue;
                std::vector<Poly> gens = J[i][j];
                gens.insert(gens.end(), incoming[i][j].begin(), incoming[i][j].end());
                std::vector<Poly> next = groebner_basis(gens);
                if (next != J[i][j]) {
                    J[i][j] = std::move(next);
                    changed = true;
                }
            }
        }
    }

    out.component_ideal = J;
    out.component_dim.assign(n, std::vector<QuotientDim>(n));
    bool all_finite = true;
    std::uint64_t total = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            out.component_dim[i][j] = quotient_dimension(J[i][j]);
            if (out.component_dim[i][j].finite)
                total += out.component_dim[i][j].dim;
            else
                all_finite = false;
        }
    }
    out.total = all_finite ? QuotientDim{true, total} : QuotientDim{false, 0};
    return out;
}

std::vector<std::vector<QuotientDim>> dim_vector(const ContractionAlgebra& c) {
    return c.component_dim;
}

}  // namespace canq
