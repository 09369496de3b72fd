#include <doctest.h>

#include "canq/slopes.hpp"

using namespace canq;

namespace {

PlumbingSpec spec_of(std::vector<SlopeDatum> s) {
    PlumbingSpec spec;
    spec.slopes = std::move(s);
    return spec;
}

}  // namespace

TEST_CASE("validation names the offending index") {
    auto issues = validate(spec_of({{1, 0, Sign::plus}, {2, 3, Sign::plus}}));
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].index == 1);
    CHECK(issues[0].message ==
          "slope constraint violated at index 1: need k=1 or l=1 (got k=2, l=3)");

    CHECK(validate(spec_of({{1, 0, Sign::plus}, {0, 1, Sign::plus}})).empty());
    CHECK_FALSE(validate(spec_of({{1, 1, Sign::plus}})).empty());  // too short
}

TEST_CASE("slope determinant respects signs") {
    CHECK(slope_det({1, 0, Sign::plus}, {0, 1, Sign::plus}) == 1);
    CHECK(slope_det({1, 1, Sign::plus}, {1, 1, Sign::minus}) == -2);
    CHECK(slope_det({1, 1, Sign::plus}, {1, 1, Sign::plus}) == 0);
    CHECK(slope_det({1, 2, Sign::minus}, {2, 1, Sign::plus}) == 5);
}

TEST_CASE("matching cycle classification") {
    CHECK(matching_cycle_type({1, 0, Sign::plus}, {0, 1, Sign::plus}).kind ==
          ThreeManifoldType::Kind::Sphere);
    CHECK(matching_cycle_type({1, 0, Sign::plus}, {1, 0, Sign::minus}).kind ==
          ThreeManifoldType::Kind::S1xS2);
    auto lens = matching_cycle_type({1, 2, Sign::plus}, {1, 2, Sign::minus});
    CHECK(lens.kind == ThreeManifoldType::Kind::Lens);
    CHECK(lens.p == 4);
    CHECK(lens.to_string() == "L(4,1)");
}

TEST_CASE("lens parameter q is canonical") {
    // Swapping the two slopes inverts q mod p; the canonical choice agrees.
    SlopeDatum a{1, 2, Sign::plus}, b{2, 1, Sign::minus};
    auto t1 = matching_cycle_type(a, b);
    auto t2 = matching_cycle_type(b, a);
    CHECK(t1 == t2);
    CHECK(t1.p == 5);
}

TEST_CASE("core types pair each slope with its predecessor") {
    // Entry i joins slopes i-1 and i around the cycle; entry 0 wraps.
    auto types = core_types(spec_of({{1, 0, Sign::plus}, {0, 1, Sign::plus}, {1, 2, Sign::plus}}));
    REQUIRE(types.size() == 3);
    CHECK(types[0].to_string() == "L(2,1)");
    CHECK(types[1].to_string() == "S3");
    CHECK(types[2].to_string() == "S3");
}

TEST_CASE("lens family from the k-parameter examples") {
    for (int k = 0; k <= 5; ++k) {
        auto types = core_types(
            spec_of({{1, 0, Sign::plus}, {0, 1, Sign::plus}, {1, k, Sign::plus}}));
        CHECK(types[1].kind == ThreeManifoldType::Kind::Sphere);
        CHECK(types[2].kind == ThreeManifoldType::Kind::Sphere);
        if (k == 0)
            CHECK(types[0].kind == ThreeManifoldType::Kind::S1xS2);
        else if (k == 1)
            CHECK(types[0].kind == ThreeManifoldType::Kind::Sphere);
        else
            CHECK(types[0] == ThreeManifoldType{ThreeManifoldType::Kind::Lens, k, 1});
    }
}

TEST_CASE("assumptions distinguish endpoint parallelism from literal equality") {
    auto a = assumptions(spec_of({{1, 0, Sign::plus}, {0, 1, Sign::plus}, {1, 2, Sign::plus}}));
    CHECK(a.A);
    CHECK(a.B);
    CHECK(a.C);
    CHECK(a.B_literal_pairs);

    // Parallel but unequal endpoints: literal pair test passes, det test fails.
    auto b = assumptions(spec_of({{0, 1, Sign::plus}, {1, 1, Sign::plus}, {0, 1, Sign::minus}}));
    CHECK(b.A);
    CHECK_FALSE(b.B);
    CHECK(b.B_literal_pairs);

    auto c = assumptions(spec_of({{1, 1, Sign::plus}, {1, 1, Sign::plus}}));
    CHECK_FALSE(c.B);
    CHECK_FALSE(c.B_literal_pairs);
}

TEST_CASE("exceptional curve types follow the sphere test") {
    auto curves = exceptional_curve_types(
        spec_of({{1, 0, Sign::plus}, {0, 1, Sign::plus}, {1, 2, Sign::plus}}));
    REQUIRE(curves.size() == 2);
    CHECK(curve_type_string(curves[0]) == "(-1,-1)");
    CHECK(curve_type_string(curves[1]) == "(-1,-1)");

    auto flat = exceptional_curve_types(spec_of({{1, 2, Sign::plus}, {1, 2, Sign::minus}}));
    REQUIRE(flat.size() == 1);
    CHECK(curve_type_string(flat[0]) == "(0,-2)");
}

TEST_CASE("component polynomials") {
    Ring r = poly_ring(Field::rationals(), {"x", "y"});
    Poly x = Poly::var(r, 0), y = Poly::var(r, 1);
    CHECK(f_component({2, 1, Sign::plus}, r) == y * y + x);
    CHECK(f_component({1, 3, Sign::minus}, r) == y - x.pow(3));
    auto spec = spec_of({{1, 1, Sign::plus}, {1, 1, Sign::minus}});
    CHECK(f_total(spec, r) == (y + x) * (y - x));
}
