#include <doctest.h>

#include <random>

#include "canq/quiver.hpp"

using namespace canq;
using Strategy = Presentation::Strategy;

namespace {

// Random composable word: walk the cyclic quiver from a random vertex, then
// reverse so the first applied arrow sits rightmost.
PathWord random_walk(int m, std::mt19937_64& rng, int max_len) {
    int start = static_cast<int>(rng() % static_cast<unsigned>(m));
    int len = static_cast<int>(rng() % static_cast<unsigned>(max_len + 1));
    std::vector<int> applied;
    int at = start;
    for (int s = 0; s < len; ++s) {
        if (rng() & 1) {
            applied.push_back(at);  // forward arrow a_at: at -> at+1
            at = (at + 1) % m;
        } else {
            int b = (at + m - 1) % m;  // backward arrow b_{at-1}: at -> at-1
            applied.push_back(m + b);
            at = b;
        }
    }
    PathWord w;
    w.vertex = start;
    w.arrows.assign(applied.rbegin(), applied.rend());
    return w;
}

Element random_element(const Presentation& p, std::mt19937_64& rng) {
    const int m = p.quiver().vertex_count;
    Element u = p.zero();
    int parts = 1 + static_cast<int>(rng() % 3);
    for (int s = 0; s < parts; ++s) {
        PathWord w = random_walk(m, rng, 4);
        Expo e(p.coeff_ring().vars.size(), 0);
        e[rng() % e.size()] = static_cast<int>(rng() % 3);
        Fq c = Fq::of(1 + static_cast<long>(rng() % 5), p.coeff_ring().field);
        u = u + p.element(w, Poly::monomial(p.coeff_ring(), e, c));
    }
    return u;
}

}  // namespace

TEST_CASE("cyclic presentation rules") {
    Presentation p = build_cyclic_presentation(2, Field::rationals());
    const Ring& r = p.coeff_ring();
    Poly t0 = Poly::var(r, 0);

    Element a0 = p.arrow_element(0), b0 = p.arrow_element(3);
    CHECK(a0 * b0 == p.idempotent(1).scaled(t0));
    CHECK(b0 * a0 == p.idempotent(0).scaled(t0));

    // mismatched endpoints multiply to zero
    CHECK((a0 * a0).is_zero());
    CHECK((p.idempotent(0) * p.idempotent(1)).is_zero());
    CHECK(p.idempotent(1) * a0 == a0);
    CHECK(a0 * p.idempotent(0) == a0);
}

TEST_CASE("reduction strategies agree on random words") {
    std::mt19937_64 rng(23);
    for (int n = 1; n <= 4; ++n) {
        Presentation p = build_cyclic_presentation(n, Field::rationals());
        const int m = n + 1;
        for (int t = 0; t < 250; ++t) {
            PathWord w = random_walk(m, rng, 8);
            Poly c = Poly::one(p.coeff_ring());
            CHECK(p.element(w, c, Strategy::Leftmost) == p.element(w, c, Strategy::Rightmost));
        }
    }
}

TEST_CASE("products associate") {
    std::mt19937_64 rng(29);
    for (int n : {1, 3}) {
        Presentation p = build_cyclic_presentation(n, Field::rationals());
        for (int t = 0; t < 120; ++t) {
            Element u = random_element(p, rng);
            Element v = random_element(p, rng);
            Element w = random_element(p, rng);
            CHECK((u * v) * w == u * (v * w));
            CHECK(u * (v + w) == u * v + u * w);
        }
    }
}

TEST_CASE("basis paths enumerate one path per winding") {
    Presentation p = build_cyclic_presentation(2, Field::rationals());
    const int m = 3, W = 2;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            auto paths = p.basis_paths(i, j, W);
            REQUIRE(paths.size() == 2 * W + 1);
            int expected_w = -W;
            for (const auto& bp : paths) {
                CHECK(bp.winding == expected_w++);
                CHECK(p.path_source(bp.path) == j);
                CHECK(p.path_target(bp.path) == i);
                // basis paths are already normal forms
                Element e = p.element(bp.path, Poly::one(p.coeff_ring()));
                REQUIRE(e.terms().size() == 1);
                CHECK(e.terms().begin()->first == bp.path);
                CHECK(e.terms().begin()->second == Poly::one(p.coeff_ring()));
            }
        }
    CHECK(p.basis_paths(0, 0, 0).size() == 1);
    CHECK(p.basis_paths(0, 0, 0)[0].path.is_idempotent());
}

TEST_CASE("cycle words wind around the quiver") {
    Presentation p = build_cyclic_presentation(2, Field::rationals());
    for (int v = 0; v < 3; ++v) {
        CHECK(p.cycle_word(v, 0).is_idempotent());
        for (int r : {-2, -1, 1, 2}) {
            PathWord w = p.cycle_word(v, r);
            CHECK(p.path_source(w) == v);
            CHECK(p.path_target(w) == v);
            CHECK(static_cast<int>(w.arrows.size()) == 3 * (r > 0 ? r : -r));
        }
    }
}

TEST_CASE("monomial counting") {
    Ring r2 = poly_ring(Field::rationals(), {"x", "y"});
    CHECK(Presentation::monomial_count(r2, 6) == 21);
    CHECK(Presentation::monomial_count(r2, 1) == 1);
    Ring r3 = poly_ring(Field::rationals(), {"x", "y", "z"});
    CHECK(Presentation::monomial_count(r3, 3) == 10);
}

TEST_CASE("linear presentation keeps the chain finite") {
    Presentation p = build_linear_presentation(3, Field::rationals());
    const Ring& r = p.coeff_ring();
    Element a1 = p.arrow_element(0);  // vertex 0 -> 1
    Element b1 = p.arrow_element(2);  // vertex 1 -> 0
    CHECK(a1 * b1 == p.idempotent(1).scaled(Poly::var(r, 1)));
    CHECK(b1 * a1 == p.idempotent(0).scaled(Poly::var(r, 1)));
    // no arrow continues past the ends
    CHECK(p.quiver().arrows.size() == 4);
}

TEST_CASE("base change carries rule coefficients through the morphism") {
    Presentation p = build_cyclic_presentation(1, Field::rationals());
    Ring target = poly_ring(Field::rationals(), {"x", "y"});
    std::vector<Poly> images = {Poly::var(target, 0), Poly::var(target, 1)};
    Presentation q = base_change(p, target, images);
    Element a0 = q.arrow_element(0), b0 = q.arrow_element(2);
    CHECK(a0 * b0 == q.idempotent(1).scaled(Poly::var(target, 0)));
    CHECK(b0 * a0 == q.idempotent(0).scaled(Poly::var(target, 0)));
}

TEST_CASE("zero rules annihilate squares") {
    Quiver q;
    q.vertex_count = 1;
    q.label_base = 0;
    q.arrows.push_back({"c", 0, 0});
    Ring r = poly_ring(Field::rationals(), {"t"});
    Presentation p(q, r, {}, {{0, 0}});
    Element c = p.arrow_element(0);
    CHECK((c * c).is_zero());
    CHECK_FALSE(c.is_zero());
}

TEST_CASE("non-confluent rules are rejected") {
    Quiver q;
    q.vertex_count = 1;
    q.label_base = 0;
    q.arrows.push_back({"c", 0, 0});
    q.arrows.push_back({"d", 0, 0});
    Ring r = poly_ring(Field::rationals(), {"t"});
    std::map<Presentation::RuleKey, std::pair<Poly, int>> rules;
    rules.insert({{0, 1}, {Poly::one(r), 0}});
    rules.insert({{1, 0}, {Poly::constant(r, 2), 0}});
    // (cd)c = c but c(dc) = 2c
    CHECK_THROWS_AS(Presentation(q, r, rules, {}), std::logic_error);

    // same coefficients are fine
    rules.clear();
    rules.insert({{0, 1}, {Poly::one(r), 0}});
    rules.insert({{1, 0}, {Poly::one(r), 0}});
    CHECK_NOTHROW(Presentation(q, r, rules, {}));
}

TEST_CASE("malformed rules are rejected") {
    Quiver q;
    q.vertex_count = 2;
    q.label_base = 0;
    q.arrows.push_back({"a", 0, 1});
    q.arrows.push_back({"b", 1, 0});
    Ring r = poly_ring(Field::rationals(), {"t"});
    std::map<Presentation::RuleKey, std::pair<Poly, int>> rules;
    rules.insert({{0, 0}, {Poly::one(r), 0}});  // a a does not compose
    CHECK_THROWS_AS(Presentation(q, r, rules, {}), std::logic_error);
}

TEST_CASE("elements from different presentations do not mix") {
    Presentation p1 = build_cyclic_presentation(1, Field::rationals());
    Presentation p2 = build_cyclic_presentation(1, Field::rationals());
    CHECK_THROWS_AS(p1.arrow_element(0) + p2.arrow_element(0), std::logic_error);
}
