#include <doctest.h>

#include <random>

#include "sl3qt/balance.hpp"
#include "sl3qt/verify.hpp"

using namespace sl3qt;

TEST_CASE("balancedness") {
    Quadrilateral Q = load_quadrilateral(SL3QT_DATA_DIR);
    std::size_t n = Q.s.size();
    Exps integral(n, 3);
    CHECK(is_delta_balanced(Q.T, Q.s, integral).balanced);
    CHECK(is_delta_balanced(Q.T, Q.s, LaurentPoly(n)).balanced);

    Exps one_third(n, 0);
    one_third[Q.s.index("1")] = 1;
    BalanceReport r = is_delta_balanced(Q.T, Q.s, one_third);
    CHECK_FALSE(r.balanced);
    bool be2 = false;
    for (auto& f : r.failures) be2 = be2 || (f.condition == "BE2" && f.where == "B");
    CHECK(be2);
    CHECK(r.render().find("BE2") != std::string::npos);

    for (std::size_t c = 0; c < Q.webs.size(); ++c)
        for (auto st : all_states()) CHECK(is_delta_balanced(Q.T, Q.s, edge_trace(Q.T, Q.s, Q.webs[c], st)).balanced);
}

TEST_CASE("balanced residues and random vectors") {
    Quadrilateral Q = load_quadrilateral(SL3QT_DATA_DIR);
    for (auto& b : balanced_residue_basis(Q.T, Q.s)) CHECK(is_delta_balanced(Q.T, Q.s, b).balanced);
    std::mt19937_64 rng(1);
    for (int k = 0; k < 50; ++k) {
        Exps a = random_balanced(Q.T, Q.s, rng);
        CHECK(is_delta_balanced(Q.T, Q.s, a).balanced);
        CHECK(be3_alternative_holds(Q.T, Q.s, a));
        // the nodes of the diagonal and the two faces
        for (std::size_t u : Q.F.at) CHECK(is_u_balanced(Q.s, u, a));
    }
}

TEST_CASE("u-balancedness and exponent transform") {
    Quadrilateral Q = load_quadrilateral(SL3QT_DATA_DIR);
    std::size_t n = Q.s.size(), u = Q.s.index("3");
    CHECK(is_u_balanced(Q.s, u, Exps(n, 0)));
    Exps a(n, 0);
    a[Q.s.index("7")] = 1;  // eps_{3,7} = -1
    CHECK(commutation_exponent(Q.s, u, a) == ThirdInt{-1});
    CHECK_FALSE(is_u_balanced(Q.s, u, a));
    CHECK(transform_exponents(Q.s, u, Exps(n, 0)) == Exps(n, 0));
    Exps b(n, 0);
    b[u] = 3;
    Exps tb = transform_exponents(Q.s, u, b);
    CHECK(tb[u] == -3);
}
