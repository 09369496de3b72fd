#include "canq/fukaya.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace canq {

namespace {

void require_valid(const PlumbingSpec& spec) {
    auto issues = validate(spec);
    if (!issues.empty()) throw std::invalid_argument(issues.front().message);
}

std::vector<Poly> psi_coefficient_images(const Ring& target) {
    Poly x = Poly::var(target, 0);
    Poly y = Poly::var(target, 1);
    Poly one = Poly::one(target);
    return {x - one, y - one};
}

}  // namespace

FukayaPresentation build_fukaya(const PlumbingSpec& spec) {
    require_valid(spec);
    const int n = spec.n();
    const int m = n + 1;
    Quiver q;
    q.vertex_count = m;
    q.label_base = 0;
    for (int i = 0; i < m; ++i)
        q.arrows.push_back({"eta" + std::to_string(i), i, (i + 1) % m});
    for (int i = 0; i < m; ++i)
        q.arrows.push_back({"del" + std::to_string(i), (i + 1) % m, i});
    Ring zr = laurent_ring(spec.field, {"z1", "z2"});
    std::map<Presentation::RuleKey, std::pair<Poly, int>> rules;
    for (int i = 0; i < m; ++i) {
        Poly fi = f_component(spec.slopes[i], zr);
        rules.insert({{i, m + i}, {fi, (i + 1) % m}});  // eta_i del_i -> f_i theta_{i+1}
        rules.insert({{m + i, i}, {fi, i}});            // del_i eta_i -> f_i theta_i
    }
    return {spec, Presentation(std::move(q), std::move(zr), std::move(rules), {}, Shape::Cyclic)};
}

Element FukayaPresentation::winding_element(int vertex, int r) const {
    return pres.element(pres.cycle_word(vertex, r), Poly::one(pres.coeff_ring()));
}

Poly FukayaPresentation::curve_coefficient(int i) const {
    return f_component(spec.slopes[i], pres.coeff_ring());
}

EndoCheck endomorphism_ring_check(const FukayaPresentation& fp, int vertex, int winding_bound) {
    EndoCheck out;
    const Ring& zr = fp.pres.coeff_ring();
    Element full = fp.theta(vertex).scaled(f_total(fp.spec, zr));
    Element x1 = fp.winding_element(vertex, 1);
    Element xm1 = fp.winding_element(vertex, -1);
    auto fail = [&](const std::string& msg) {
        if (out.detail.empty()) out.detail = msg;
    };
    ++out.products_checked;
    if (xm1 * x1 != full) fail("x_{-1} x_1 differs from (prod f_i) theta");
    ++out.products_checked;
    if (x1 * xm1 != full) fail("x_1 x_{-1} differs from (prod f_i) theta");
    std::map<int, Element> xs;
    for (int r = -2 * winding_bound; r <= 2 * winding_bound; ++r)
        xs.emplace(r, fp.winding_element(vertex, r));
    for (int r = -winding_bound; r <= winding_bound; ++r) {
        for (int s = -winding_bound; s <= winding_bound; ++s) {
            if (static_cast<long>(r) * s < 0) continue;
            ++out.products_checked;
            if (xs.at(r) * xs.at(s) != xs.at(r + s)) {
                std::ostringstream os;
                os << "x_" << r << " x_" << s << " differs from x_" << r + s << " at vertex "
                   << vertex;
                fail(os.str());
            }
        }
    }
    out.pass = out.detail.empty();
    return out;
}

Presentation mirror_target(const PlumbingSpec& spec, int truncation) {
    require_valid(spec);
    const int n = spec.n();
    Presentation base = build_cyclic_presentation(n, spec.field);
    Ring sr = series_ring(spec.field, {"x", "y"}, truncation);
    Poly xm1 = Poly::var(sr, 0) - Poly::one(sr);
    Poly ym1 = Poly::var(sr, 1) - Poly::one(sr);
    std::vector<Poly> images;
    for (int i = 0; i <= n; ++i) {
        const SlopeDatum& s = spec.slopes[i];
        Poly f = ym1.pow(static_cast<unsigned>(s.k)) +
                 xm1.pow(static_cast<unsigned>(s.l)).scaled(Fq::of(sign_value(s.sign), spec.field));
        images.push_back(std::move(f));
    }
    return base_change(base, sr, images);
}

Element psi(const FukayaPresentation& fp, const Presentation& target, const Element& u) {
    const Ring& sr = target.coeff_ring();
    std::vector<Poly> images = psi_coefficient_images(sr);
    Element acc = target.zero();
    for (const auto& [w, c] : u.terms()) acc = acc + target.element(w, c.substituted(sr, images));
    return acc;
}

PsiReport verify_psi_iso(const PlumbingSpec& spec, int winding_bound, int truncation) {
    PsiReport rep;
    FukayaPresentation fp = build_fukaya(spec);
    Presentation target = mirror_target(spec, truncation);
    const int n = spec.n();
    const int m = n + 1;
    const Ring& zr = fp.pres.coeff_ring();
    const Ring& sr = target.coeff_ring();
    std::vector<Poly> images = psi_coefficient_images(sr);
    auto fail = [&](const std::string& msg) {
        if (rep.detail.empty()) rep.detail = msg;
    };

    // The defining relations must map to the target rules: psi(eta_i)psi(del_i)
    // has to match psi(f_i) times the idempotent.
    rep.rules_compatible = true;
    for (int i = 0; i < m; ++i) {
        Poly f_img = fp.curve_coefficient(i).substituted(sr, images);
        Element ai = target.arrow_element(i);
        Element bi = target.arrow_element(m + i);
        bool ok = (ai * bi == target.idempotent((i + 1) % m).scaled(f_img)) &&
                  (bi * ai == target.idempotent(i).scaled(f_img));
        if (!ok) {
            rep.rules_compatible = false;
            fail("relation image mismatch at slope " + std::to_string(i));
        }
    }

    // Multiplicativity on sample elements, including Laurent coefficients that
    // force series inversion on the mirror side.
    Poly z1 = Poly::var(zr, 0), z2 = Poly::var(zr, 1);
    Poly z1inv = Poly::monomial(zr, {-1, 0}, Fq::of(1, spec.field));
    Poly z2inv = Poly::monomial(zr, {0, -1}, Fq::of(1, spec.field));
    std::vector<std::pair<Element, Element>> samples;
    samples.emplace_back(fp.eta(0), fp.del(0));
    samples.emplace_back(fp.del(0), fp.eta(0));
    samples.emplace_back(fp.theta(0).scaled(z1inv), fp.theta(0).scaled(z1));
    samples.emplace_back(fp.theta(0).scaled(z2inv * z2inv), fp.theta(0).scaled(z2 * z2));
    samples.emplace_back(fp.eta(0).scaled(z2inv), fp.del(0).scaled(z1 * z2));
    samples.emplace_back(fp.winding_element(0, 1), fp.winding_element(0, 2));
    samples.emplace_back(fp.winding_element(0, -1), fp.winding_element(0, 1));
    samples.emplace_back(fp.eta(0) + fp.theta(0).scaled(z1), fp.del(0) + fp.theta(0));
    rep.products_preserved = true;
    for (const auto& [u, v] : samples) {
        if (psi(fp, target, u * v) != psi(fp, target, u) * psi(fp, target, v)) {
            rep.products_preserved = false;
            fail("psi failed to preserve a sample product");
        }
    }

    // Per-block comparison over the monomial bases.
    std::vector<Expo> expos;
    for (int a = 0; a < truncation; ++a)
        for (int b = 0; a + b < truncation; ++b) expos.push_back({a, b});
    std::sort(expos.begin(), expos.end(), GrlexLess{});
    rep.block_dim = Presentation::monomial_count(sr, truncation);
    rep.blocks_match = expos.size() == rep.block_dim;
    if (!rep.blocks_match) fail("monomial count mismatch");
    GrlexLess less;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            auto src_paths = fp.pres.basis_paths(i, j, winding_bound);
            auto tgt_paths = target.basis_paths(i, j, winding_bound);
            if (src_paths.size() != tgt_paths.size()) {
                rep.blocks_match = false;
                fail("basis path count mismatch");
                continue;
            }
            for (size_t t = 0; t < src_paths.size(); ++t) {
                const auto& bp = src_paths[t];
                if (!(bp.path == tgt_paths[t].path) || bp.winding != tgt_paths[t].winding) {
                    rep.blocks_match = false;
                    fail("basis path mismatch between the two sides");
                    continue;
                }
                ++rep.blocks_checked;
                for (const Expo& e : expos) {
                    Element src = fp.pres.element(bp.path, Poly::monomial(zr, e, Fq::of(1, spec.field)));
                    Element img = psi(fp, target, src);
                    bool ok = img.terms().size() == 1 && img.terms().begin()->first == bp.path;
                    if (ok) {
                        const Poly& c = img.terms().begin()->second;
                        bool diag_seen = false;
                        for (const auto& [me, mc] : c.terms()) {
                            if (me == e) {
                                diag_seen = mc.is_one();
                            } else if (!less(me, e)) {
                                ok = false;
                            }
                        }
                        ok = ok && diag_seen;
                    }
                    if (!ok) {
                        rep.blocks_match = false;
                        std::ostringstream os;
                        os << "block (" << i << "," << j << ",w=" << bp.winding
                           << ") lost triangularity at coefficient exponent (" << e[0] << ","
                           << e[1] << ")";
                        fail(os.str());
                    }
                }
            }
        }
    }
    rep.pass = rep.rules_compatible && rep.products_preserved && rep.blocks_match;
    return rep;
}

}  // namespace canq
