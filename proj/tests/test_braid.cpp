#include <doctest.h>

#include <random>
#include <stdexcept>

#include "canq/braid.hpp"

using namespace canq;

TEST_CASE("free word reduction and inversion") {
    CHECK(free_reduced({1, -1}) == FreeWord{});
    CHECK(free_reduced({1, 2, -2, -1, 3}) == FreeWord{3});
    CHECK(free_mul({1, 2}, {-2, 3}) == FreeWord{1, 3});
    CHECK(free_inv({1, 2, -3}) == FreeWord{3, -2, -1});
    CHECK(free_mul({1, 2, -3}, free_inv({1, 2, -3})) == FreeWord{});
    CHECK_THROWS(free_reduced({1, 0}));
}

TEST_CASE("cyclic equality detects conjugacy of reduced words") {
    CHECK(cyclic_words_equal({1, 2}, {2, 1}));
    CHECK(cyclic_words_equal({1, 2, -1}, {2}));
    CHECK(cyclic_words_equal({-3, 1, 2, 3}, {1, 2}));
    CHECK_FALSE(cyclic_words_equal({1}, {2}));
    CHECK_FALSE(cyclic_words_equal({1, 2}, {1, -2}));
    CHECK_FALSE(cyclic_words_equal({1, 1}, {1}));
    CHECK(cyclic_words_equal({}, {1, -1}));
}

TEST_CASE("automorphism application and composition") {
    FreeAuto f = identity_auto(3);
    f.images[0] = {1, 2, -1};  // x1 -> x1 x2 x1^-1
    f.images[1] = {1};         // x2 -> x1
    CHECK(apply_auto(f, {1, 2}) == FreeWord{1, 2});
    CHECK(apply_auto(f, {-1}) == FreeWord{1, -2, -1});
    FreeAuto g = identity_auto(3);
    g.images[2] = {3, 3};
    CHECK(compose(f, g).images[2] == FreeWord{3, 3});
}

TEST_CASE("model rejects too few punctures") {
    CHECK_THROWS_AS(BraidModel(1), std::invalid_argument);
    CHECK_NOTHROW(BraidModel(2));
}

TEST_CASE("presentation relations hold for small models") {
    for (int n = 2; n <= 4; ++n) {
        BraidModel m(n);
        PresentationCheck pc = verify_presentation(m);
        CHECK(pc.pass);
        CHECK(pc.commutation);
        CHECK(pc.braid);
        CHECK(pc.rotation);
        CHECK(pc.relations_checked > 0);
        CHECK(pc.detail.empty());
    }
}

TEST_CASE("rotation conjugates the generators cyclically") {
    BraidModel m(3);
    for (int i = 1; i < 3; ++i)
        CHECK(compose(compose(m.rho(), m.sigma(i)), m.rho_inv()) == m.sigma(i + 1));
    CHECK(compose(compose(m.rho(), m.sigma(3)), m.rho_inv()) == m.sigma(0));
    CHECK(compose(compose(m.rho(), m.sigma(0)), m.rho_inv()) == m.sigma(1));
    CHECK(compose(m.rho(), m.rho_inv()) == identity_auto(m.rank()));
}

TEST_CASE("word action composes like functions") {
    BraidModel m(2);
    std::mt19937_64 rng(53);
    const int cnt = m.generator_count() + 1;  // letters include the rotation
    for (int t = 0; t < 50; ++t) {
        std::vector<int> w1, w2;
        for (int s = 0; s < 4; ++s) {
            int a = 1 + static_cast<int>(rng() % static_cast<unsigned>(cnt));
            w1.push_back((rng() & 1) ? a : -a);
            int b = 1 + static_cast<int>(rng() % static_cast<unsigned>(cnt));
            w2.push_back((rng() & 1) ? b : -b);
        }
        std::vector<int> cat = w1;
        cat.insert(cat.end(), w2.begin(), w2.end());
        CHECK(m.braid_word_auto(cat) ==
              compose(m.braid_word_auto(w1), m.braid_word_auto(w2)));
    }
    CHECK(m.braid_word_auto({1, -1}) == identity_auto(m.rank()));
    CHECK(m.braid_word_auto({}) == identity_auto(m.rank()));
}

TEST_CASE("generators preserve the boundary and the puncture product") {
    for (int n = 2; n <= 3; ++n) {
        BraidModel m(n);
        for (int i = 0; i <= n; ++i) {
            CHECK(preserves_boundary_exactly(m, m.sigma(i)));
            CHECK(preserves_boundary_exactly(m, m.sigma_inv(i)));
            CHECK(preserves_product_up_to_conjugacy(m, m.sigma(i)));
            CHECK(preserves_product_up_to_conjugacy(m, m.sigma_inv(i)));
        }
        CHECK(preserves_boundary_exactly(m, m.rho()));
        CHECK(preserves_product_up_to_conjugacy(m, m.rho()));
    }
}

TEST_CASE("random braid words preserve the invariants") {
    BraidModel m(3);
    std::mt19937_64 rng(59);
    const int cnt = m.generator_count() + 1;
    for (int t = 0; t < 100; ++t) {
        std::vector<int> w;
        int len = 1 + static_cast<int>(rng() % 8);
        for (int s = 0; s < len; ++s) {
            int a = 1 + static_cast<int>(rng() % static_cast<unsigned>(cnt));
            w.push_back((rng() & 1) ? a : -a);
        }
        FreeAuto f = m.braid_word_auto(w);
        CHECK(preserves_boundary_exactly(m, f));
        CHECK(preserves_product_up_to_conjugacy(m, f));
    }
}

TEST_CASE("sampled pure braid words act nontrivially") {
    BraidModel m(2);
    NontrivialityReport rep = nontriviality_sample(m, 8, 100, 7);
    CHECK(rep.trials == 100);
    CHECK(rep.all_nontrivial());
    CHECK(rep.max_length == 8);
    CHECK(rep.seed == 7);
}
