#include <doctest.h>

#include "canq/fukaya.hpp"

using namespace canq;

namespace {

PlumbingSpec make_spec(std::vector<SlopeDatum> s, Field f = Field::rationals()) {
    PlumbingSpec spec;
    spec.slopes = std::move(s);
    spec.field = f;
    return spec;
}

}  // namespace

TEST_CASE("defining relations of the endomorphism presentation") {
    auto spec = make_spec({{1, 0, Sign::plus}, {0, 1, Sign::plus}, {1, 2, Sign::minus}});
    FukayaPresentation fp = build_fukaya(spec);
    for (int i = 0; i <= spec.n(); ++i) {
        Poly fi = fp.curve_coefficient(i);
        int next = (i + 1) % (spec.n() + 1);
        CHECK(fp.eta(i) * fp.del(i) == fp.theta(next).scaled(fi));
        CHECK(fp.del(i) * fp.eta(i) == fp.theta(i).scaled(fi));
    }
}

TEST_CASE("curve coefficients live in the laurent ring") {
    auto spec = make_spec({{2, 1, Sign::minus}, {1, 3, Sign::plus}});
    FukayaPresentation fp = build_fukaya(spec);
    const Ring& zr = fp.pres.coeff_ring();
    CHECK(zr.laurent);
    Poly z1 = Poly::var(zr, 0), z2 = Poly::var(zr, 1);
    CHECK(fp.curve_coefficient(0) == z2 * z2 - z1);
    CHECK(fp.curve_coefficient(1) == z2 + z1.pow(3));
}

TEST_CASE("winding elements compose additively") {
    auto spec = make_spec({{1, 1, Sign::plus}, {1, 2, Sign::minus}});
    FukayaPresentation fp = build_fukaya(spec);
    for (int v = 0; v <= spec.n(); ++v) {
        CHECK(fp.winding_element(v, 0) == fp.theta(v));
        CHECK(fp.winding_element(v, 1) * fp.winding_element(v, 1) == fp.winding_element(v, 2));
        CHECK(fp.winding_element(v, -1) * fp.winding_element(v, -1) ==
              fp.winding_element(v, -2));

        // opposite windings meet in the product of the curve coefficients
        Poly ftot = Poly::one(fp.pres.coeff_ring());
        for (int i = 0; i <= spec.n(); ++i) ftot = ftot * fp.curve_coefficient(i);
        CHECK(fp.winding_element(v, -1) * fp.winding_element(v, 1) ==
              fp.theta(v).scaled(ftot));
        CHECK(fp.winding_element(v, 1) * fp.winding_element(v, -1) ==
              fp.theta(v).scaled(ftot));
    }
}

TEST_CASE("endomorphism ring check passes across fields and signs") {
    for (Field f : {Field::rationals(), Field::prime(5), Field::prime(2)}) {
        auto spec = make_spec({{1, 0, Sign::plus}, {0, 1, Sign::minus}, {1, 1, Sign::plus}}, f);
        FukayaPresentation fp = build_fukaya(spec);
        for (int v = 0; v <= spec.n(); ++v) {
            EndoCheck c = endomorphism_ring_check(fp, v, 2);
            CHECK(c.pass);
            CHECK(c.products_checked > 0);
            CHECK(c.detail.empty());
        }
    }
}

TEST_CASE("mirror target recenters the coefficients") {
    auto spec = make_spec({{1, 0, Sign::plus}, {0, 1, Sign::plus}});
    Presentation target = mirror_target(spec, 6);
    const Ring& s = target.coeff_ring();
    REQUIRE(s.vars.size() == 2);
    CHECK(s.truncation == 6);
    Poly x = Poly::var(s, 0), y = Poly::var(s, 1);
    // slope (1,0,+): (y-1)^1 + (x-1)^0 = y; slope (0,1,+): 1 + (x-1) = x
    auto r0 = target.rules().at({0, 2});
    CHECK(r0.first == y);
    auto r1 = target.rules().at({1, 3});
    CHECK(r1.first == x);
}

TEST_CASE("the comparison map is multiplicative on samples") {
    auto spec = make_spec({{1, 2, Sign::minus}, {1, 1, Sign::plus}});
    FukayaPresentation fp = build_fukaya(spec);
    Presentation target = mirror_target(spec, 6);
    const Ring& zr = fp.pres.coeff_ring();
    Poly z1 = Poly::var(zr, 0), z2 = Poly::var(zr, 1);
    Poly z1i = Poly::var(zr, 0, -1);

    Element pairs[] = {
        fp.eta(0), fp.del(0), fp.theta(0).scaled(z1), fp.theta(1).scaled(z2),
        fp.theta(0).scaled(z1i), fp.winding_element(0, 1), fp.winding_element(1, -1),
        fp.eta(1).scaled(z2) + fp.eta(1)};
    for (const Element& u : pairs)
        for (const Element& v : pairs) {
            Element lhs = psi(fp, target, u * v);
            Element rhs = psi(fp, target, u) * psi(fp, target, v);
            CHECK(lhs == rhs);
        }

    // psi hits the recentering on coefficients
    const Ring& s = target.coeff_ring();
    Poly xm1 = Poly::var(s, 0) - Poly::one(s);
    CHECK(psi(fp, target, fp.theta(0).scaled(z1)) == target.idempotent(0).scaled(xm1));
    // z1 z1^{-1} = 1 maps to 1
    CHECK(psi(fp, target, fp.theta(0).scaled(z1 * z1i)) == target.idempotent(0));
}

TEST_CASE("block isomorphism verification") {
    auto spec = make_spec({{1, 0, Sign::plus}, {0, 1, Sign::plus}});
    PsiReport r = verify_psi_iso(spec, 2, 6);
    CHECK(r.pass);
    CHECK(r.rules_compatible);
    CHECK(r.products_preserved);
    CHECK(r.blocks_match);
    CHECK(r.blocks_checked == 20);  // 2x2 vertex pairs, 5 windings
    CHECK(r.block_dim == 21);       // monomials of degree < 6 in two variables
    CHECK(r.detail.empty());
}

TEST_CASE("block isomorphism verification with signs over a prime field") {
    auto spec = make_spec({{1, 1, Sign::minus}, {2, 1, Sign::plus}}, Field::prime(7));
    PsiReport r = verify_psi_iso(spec, 1, 4);
    CHECK(r.pass);
    CHECK(r.blocks_checked == 12);  // 2x2 vertex pairs, 3 windings
    CHECK(r.block_dim == 10);
}
