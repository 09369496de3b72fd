#include <doctest.h>

#include "canq/localization.hpp"

using namespace canq;

namespace {

PlumbingSpec make_spec(std::vector<SlopeDatum> s, Field f = Field::rationals()) {
    PlumbingSpec spec;
    spec.slopes = std::move(s);
    spec.field = f;
    return spec;
}

}  // namespace

TEST_CASE("localized presentation keeps the dg structure") {
    auto spec = make_spec({{1, 1, Sign::plus}, {1, 0, Sign::plus}, {2, 1, Sign::minus}});
    LocalizedPresentation lp = build_localized(spec);
    CHECK(lp.graded.coeff_ring().laurent);

    Element ef = lp.graded.arrow_element(lp.eps_first);
    Element el = lp.graded.arrow_element(lp.eps_last);
    CHECK(lp.differential(ef) == lp.graded.idempotent(0).scaled(lp.f_first));
    CHECK(lp.differential(el) == lp.graded.idempotent(spec.n() - 1).scaled(lp.f_last));
    CHECK((ef * ef).is_zero());
    CHECK(lp.differential(lp.differential(ef * lp.graded.arrow_element(0))).is_zero());
}

TEST_CASE("unit relations are the end component polynomials") {
    auto spec = make_spec({{1, 1, Sign::plus}, {1, 0, Sign::plus}, {2, 1, Sign::plus}});
    auto [r0, rn] = unit_relations(spec);
    const Ring& zr = r0.ring();
    Poly z1 = Poly::var(zr, 0), z2 = Poly::var(zr, 1);
    CHECK(r0 == z2 + z1);
    CHECK(rn == z2 * z2 + z1);
}

TEST_CASE("worked torsion case: orders (2,1)") {
    auto rep = torsion_orders(make_spec({{1, 1, Sign::plus}, {2, 1, Sign::plus}}));
    CHECK(rep.kind == TorsionReport::Kind::Finite);
    CHECK(rep.z1_order == 2);
    CHECK(rep.z2_order == 1);
    CHECK(rep.root_modulus == 2);
    CHECK(rep.orders_certified);
    CHECK(rep.substitution_checked);
    CHECK(rep.all_units_torsion());
}

TEST_CASE("transverse axes give orders (2,2)") {
    auto rep = torsion_orders(make_spec({{1, 0, Sign::plus}, {0, 1, Sign::plus}}));
    CHECK(rep.kind == TorsionReport::Kind::Finite);
    CHECK(rep.z1_order == 2);
    CHECK(rep.z2_order == 2);
    CHECK(rep.orders_certified);
    CHECK(rep.substitution_checked);
}

TEST_CASE("opposite signs on the same slope collapse the localization") {
    auto rep = torsion_orders(make_spec({{1, 2, Sign::plus}, {1, 2, Sign::minus}}));
    CHECK(rep.kind == TorsionReport::Kind::Collapsed);
    CHECK(rep.group_order == 1);
    CHECK(rep.all_units_torsion());

    // parallel-but-degenerate endpoints still collapse even though the
    // endpoint determinant vanishes
    auto deg = torsion_orders(make_spec({{0, 1, Sign::plus}, {0, 1, Sign::minus}}));
    CHECK(deg.kind == TorsionReport::Kind::Collapsed);
}

TEST_CASE("parallel equal endpoints are non-torsion") {
    auto rep = torsion_orders(make_spec({{1, 1, Sign::plus}, {1, 1, Sign::plus}}));
    CHECK(rep.kind == TorsionReport::Kind::NonTorsion);
    CHECK_FALSE(rep.all_units_torsion());
}

TEST_CASE("characteristic two drops the sign lattice column") {
    auto fin = torsion_orders(make_spec({{1, 1, Sign::plus}, {2, 1, Sign::plus}},
                                        Field::prime(2)));
    CHECK(fin.kind == TorsionReport::Kind::Finite);
    CHECK(fin.z1_order == 1);
    CHECK(fin.z2_order == 1);
    CHECK(fin.orders_certified);

    // +- is the same relation in characteristic two: z1^2 = z2 twice
    auto non = torsion_orders(make_spec({{1, 2, Sign::plus}, {1, 2, Sign::minus}},
                                        Field::prime(2)));
    CHECK(non.kind == TorsionReport::Kind::NonTorsion);
}

TEST_CASE("torsion agrees with the endpoint determinant on the unit-slope domain") {
    for (int k0 = 1; k0 <= 3; ++k0)
        for (int kn = 1; kn <= 3; ++kn)
            for (Sign s0 : {Sign::plus, Sign::minus})
                for (Sign sn : {Sign::plus, Sign::minus}) {
                    auto spec = make_spec({{k0, 1, s0}, {kn, 1, sn}});
                    auto rep = torsion_orders(spec);
                    bool b = assumptions(spec).B;
                    CHECK(rep.all_units_torsion() == b);
                    if (rep.kind == TorsionReport::Kind::Finite && kn != k0) {
                        // the second unit's order divides 2(k_n - k_0)
                        long bound = 2 * (kn > k0 ? kn - k0 : k0 - kn);
                        CHECK(bound % static_cast<long>(rep.z2_order) == 0);
                    }
                }
}

TEST_CASE("report string mentions the verdict") {
    auto rep = torsion_orders(make_spec({{1, 0, Sign::plus}, {0, 1, Sign::plus}}));
    CHECK(rep.to_string().find("finite") != std::string::npos);
}
