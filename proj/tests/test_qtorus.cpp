#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sl3qt/qtorus.hpp"
#include "sl3qt/verify.hpp"

using namespace sl3qt;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng, std::size_t n, int terms = 3) {
    LaurentPoly p(n);
    std::uniform_int_distribution<int> c(-3, 3), ph(-4, 4);
    for (int k = 0; k < terms; ++k) p.add_term(oracle::random_exps(rng, n), OmegaPoly::omega_half(ph(rng), c(rng)));
    return p;
}

}  // namespace

TEST_CASE("product of Weyl monomials") {
    Seed s({"1", "2"}, {false, false});
    s.set_eps2(0, 1, 2);
    WeylMonomial z1{OmegaPoly(1), {1, 0}}, z2{OmegaPoly(1), {0, 1}};
    WeylMonomial p = mono_mul(s, z1, z2);
    CHECK(p.exps == Exps{1, 1});
    CHECK(p.coeff == OmegaPoly::omega_half(2));
    WeylMonomial m{OmegaPoly(1), {2, -1}}, mi{OmegaPoly(1), {-2, 1}};
    CHECK(mono_mul(s, m, mi).coeff == OmegaPoly(1));
    CHECK(mono_mul(s, m, mi).exps == Exps{0, 0});
}

TEST_CASE("X-hat commutes past a monomial with q^{2 alpha}") {
    Quadrilateral Q = load_quadrilateral(SL3QT_DATA_DIR);
    std::mt19937_64 rng(3);
    for (int k = 0; k < 40; ++k) {
        Exps a = random_balanced(Q.T, Q.s, rng);
        std::size_t u = Q.F.at[k % 4];
        ThirdInt alpha = commutation_exponent(Q.s, u, a);
        LaurentPoly M = LaurentPoly::monomial(a), X = x_hat(Q.s.size(), u);
        CHECK(poly_mul(Q.s, X, M) == poly_mul(Q.s, M, X).scaled(OmegaPoly::omega_half(12 * alpha.thrice)));
    }
}

TEST_CASE("ring laws and star") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 30; ++k) {
        Seed s = oracle::random_seed(rng, 2 + k % 5);
        std::size_t n = s.size();
        LaurentPoly a = random_poly(rng, n), b = random_poly(rng, n), c = random_poly(rng, n);
        CHECK(poly_mul(s, a, LaurentPoly::constant(n, OmegaPoly(1))) == a);
        CHECK(poly_mul(s, a + b, c) == poly_mul(s, a, c) + poly_mul(s, b, c));
        CHECK(poly_mul(s, poly_mul(s, a, b), c) == poly_mul(s, a, poly_mul(s, b, c)));
        CHECK(star(poly_mul(s, a, b)) == poly_mul(s, star(b), star(a)));
        CHECK(classicalize(weyl_quantize(classicalize(a))) == classicalize(a));
    }
    Exps e{1, -2};
    CHECK(star(LaurentPoly::monomial(e)) == LaurentPoly::monomial(e));
    CHECK(star(LaurentPoly::monomial(e, OmegaPoly::omega_half(1))) == LaurentPoly::monomial(e, OmegaPoly::omega_half(-1)));
    CHECK(classicalize(LaurentPoly::monomial(e, OmegaPoly::q_power(1))) == LaurentPoly::monomial(e));
    CHECK(weyl_quantize(LaurentPoly::constant(2, OmegaPoly(1))) == LaurentPoly::constant(2, OmegaPoly(1)));
}

TEST_CASE("multiplicity-free and highest terms") {
    LaurentPoly a = LaurentPoly::monomial({3, 0});
    LaurentPoly b = LaurentPoly::monomial({0, 3});
    CHECK(is_multiplicity_free(a));
    CHECK(is_multiplicity_free(a + b));
    CHECK_FALSE(is_multiplicity_free(a.scaled(OmegaPoly::q_power(1) + OmegaPoly::q_power(-1))));
    auto h = highest_term(a);
    REQUIRE(h);
    CHECK(h->exps == Exps{3, 0});
    CHECK_FALSE(highest_term(a + b).has_value());
    CHECK(highest_term(a + LaurentPoly::monomial({-3, 0})).value().exps == Exps{3, 0});
}

TEST_CASE("rendering") {
    Seed s({"1", "2"}, {false, false});
    CHECK(render(s, LaurentPoly(2)) == "0");
    CHECK(render(s, LaurentPoly::monomial({1, -3})) == "+w^{0} X1^{1/3} X2^{-1}");
    CHECK(render(s, LaurentPoly::monomial({2, 0}, OmegaPoly::omega_half(-1, -1))) == "-w^{-1/2} X1^{2/3}");
}
