#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sl3qt/quiver.hpp"
#include "sl3qt/verify.hpp"

using namespace sl3qt;

namespace {

// eps'_ij = -eps_ij if k in {i,j}, else eps_ij + (eps_ik |eps_kj| + |eps_ik| eps_kj) / 2; doubled entries
i64 mutated_entry2(const Seed& s, std::size_t k, std::size_t i, std::size_t j) {
    if (i == k || j == k) return -s.eps2(i, j);
    i64 a = s.eps2(i, k), b = s.eps2(k, j);
    i64 num = a * std::abs(b) + std::abs(a) * b;  // 4 * (eps_ik |eps_kj| + |eps_ik| eps_kj)
    return s.eps2(i, j) + num / 4;
}

Seed random_integer_seed(std::mt19937_64& rng, std::size_t n) {
    Seed s = oracle::random_seed(rng, n);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = v + 1; w < n; ++w) s.set_eps2(v, w, 2 * (s.eps2(v, w) / 2));
    return s;
}

}  // namespace

TEST_CASE("quiver mutation against the entry formula") {
    Seed c3 = Seed::parse(read_file(SL3QT_DATA_DIR "/seed_cycle3.seed"));
    Seed m = mutate_quiver(c3, "2");
    CHECK(m.eps(0, 1).twice == -2);
    CHECK(m.eps(1, 2).twice == -2);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(m.eps2(i, j) == mutated_entry2(c3, 1, i, j));

    std::mt19937_64 rng(11);
    for (int k = 0; k < 30; ++k) {
        Seed s = random_integer_seed(rng, 2 + k % 6);
        std::size_t u = k % s.size();
        Seed t = mutate_quiver(s, u);
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = 0; j < s.size(); ++j) REQUIRE(t.eps2(i, j) == mutated_entry2(s, u, i, j));
        CHECK(mutate_quiver(t, u) == s);
    }
}

TEST_CASE("zero quiver and frozen nodes") {
    Seed z({"a", "b", "c"}, {false, false, true});
    CHECK(mutate_quiver(z, "a") == z);
    CHECK_THROWS_AS(mutate_quiver(z, "c"), InputError);
    CHECK_THROWS_AS(mutate_quiver(z, "x"), InputError);
}

TEST_CASE("permutations and seed equality") {
    Seed a2 = Seed::parse(read_file(SL3QT_DATA_DIR "/seed_a2.seed"));
    CHECK(permute_seed(a2, {}) == a2);
    Seed p = permute_seed(a2, {{"v", "w"}, {"w", "v"}});
    CHECK(p.eps2(p.index("v"), p.index("w")) == -2);
    CHECK(permute_seed(p, {{"v", "w"}, {"w", "v"}}) == a2);
    CHECK(seeds_equal(a2, a2));
    CHECK(seeds_equal(a2, mutate_quiver(mutate_quiver(a2, "v"), "v")));
    CHECK_FALSE(seeds_equal(a2, mutate_quiver(a2, "v")));
}

TEST_CASE("seed text format") {
    Seed four = Seed::parse(read_file(SL3QT_DATA_DIR "/seed_four.seed"));
    CHECK(four.frozen(four.index("5")));
    CHECK(four.eps2(four.index("5"), four.index("6")) == 1);
    CHECK(Seed::parse(four.render()) == four);
    CHECK_THROWS_AS(Seed::parse("node a\neps a b 1\n"), InputError);
    CHECK_THROWS_AS(Seed::parse("node a\nnode b\neps a b 1/3\n"), InputError);
}
