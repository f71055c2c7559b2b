#include <doctest.h>

#include "sl3qt/verify.hpp"

using namespace sl3qt;

namespace {

Exps named(const Seed& s, std::initializer_list<std::pair<const char*, i64>> l) {
    Exps e(s.size(), 0);
    for (auto& [v, k] : l) e[s.index(v)] = k;
    return e;
}

LaurentPoly det_of(std::size_t n, const TermMatrix& M) { return classical_det(n, M); }

}  // namespace

TEST_CASE("edge and turn matrices") {
    Quadrilateral Q = load_quadrilateral(SL3QT_DATA_DIR);
    const Seed& s = Q.s;
    std::size_t n = s.size(), t = Q.T.triangle_index("t");
    LaurentPoly one = LaurentPoly::constant(n, OmegaPoly(1));
    for (int a = 0; a < 3; ++a) {
        TermMatrix D = edge_side_matrix(Q.T, s, t, a, true);
        auto [p1, p2] = Q.T.local_nodes(t, a);
        CHECK(to_poly(n, D[0][0]) == LaurentPoly::monomial(named(s, {{Q.T.name(p2).c_str(), 1}, {Q.T.name(p1).c_str(), 2}})));
        CHECK(D[0][1].empty());
        CHECK(det_of(n, D) == one);
        CHECK(det_of(n, edge_side_matrix(Q.T, s, t, a, false)) == one);
    }
    TermMatrix L = turn_matrix(Q.T, s, t, Turn::left), R = turn_matrix(Q.T, s, t, Turn::right);
    CHECK(to_poly(n, L[0][1]) == LaurentPoly::monomial(named(s, {{"7", 2}})) + LaurentPoly::monomial(named(s, {{"7", -1}})));
    CHECK(to_poly(n, R[2][1]) == LaurentPoly::monomial(named(s, {{"7", 1}})) + LaurentPoly::monomial(named(s, {{"7", -2}})));
    CHECK(L[2][0].empty());
    CHECK(det_of(n, L) == one);
    CHECK(det_of(n, R) == one);
}

TEST_CASE("single-triangle web") {
    Quadrilateral Q = load_quadrilateral(SL3QT_DATA_DIR);
    const Seed& s = Q.s;
    const WebPath& w = Q.webs[0];
    LaurentPoly v11 = edge_trace(Q.T, s, w, {1, 1});
    CHECK(classicalize(v11) == LaurentPoly::monomial(named(s, {{"6", 1}, {"5", 2}, {"7", 2}, {"1", 1}, {"2", 2}})));
    CHECK(render(s, v11) == "+w^{0} X1^{1/3} X2^{2/3} X5^{2/3} X6^{1/3} X7^{2/3}");
    CHECK(edge_trace(Q.T, s, w, {2, 1}).is_zero());
    CHECK(edge_trace(Q.T, s, w, {3, 1}).is_zero());
    std::size_t t = w.steps[0].tri;
    for (auto st : all_states())
        CHECK(single_triangle_trace(Q.T, s, t, w.steps[0].entry, w.steps[0].turn, st) == edge_trace(Q.T, s, w, st));
}

TEST_CASE("webs crossing the diagonal") {
    Quadrilateral Q = load_quadrilateral(SL3QT_DATA_DIR);
    LaurentPoly v = edge_trace(Q.T, Q.s, Q.webs[2], {1, 2});
    CHECK(v.size() == 4);
    CHECK(is_multiplicity_free(v));
    CHECK(web_crosses(Q.T, Q.webs[2], "e"));
    CHECK_FALSE(web_crosses(Q.T, Q.webs[0], "e"));
    CHECK(web_enter_arc(Q.T, Q.webs[2]) == "B");
    CHECK(web_exit_arc(Q.T, Q.webs[2]) == "C");
    for (std::size_t c = 2; c < 6; ++c)
        for (auto st : all_states()) CHECK(cutting_axiom(Q.T, Q.webs[c], "e", st).ok);
}

TEST_CASE("web parsing") {
    Quadrilateral Q = load_quadrilateral(SL3QT_DATA_DIR);
    WebPath w = parse_web(Q.T, "web case3 enter B triangle t turn L triangle u turn L exit C");
    CHECK(render_web(Q.T, w) == render_web(Q.T, Q.webs[2]));
    CHECK_THROWS_AS(parse_web(Q.T, "web case3 enter B triangle t turn L exit C"), InputError);
    CHECK_THROWS_AS(parse_web(Q.T, "web case3 enter B triangle u turn L exit C"), InputError);
    CHECK_THROWS_AS(parse_web(Q.T, "web case3 enter B triangle t turn Q exit A"), InputError);
    CHECK_THROWS_AS(edge_trace(Q.T, Q.s, Q.webs[0], {4, 1}), InputError);
}

TEST_CASE("rerouting after the flip") {
    Quadrilateral Q = load_quadrilateral(SL3QT_DATA_DIR);
    for (std::size_t c = 0; c < Q.webs.size(); ++c) {
        CHECK(web_enter_arc(Q.F.after, Q.webs_after[c]) == web_enter_arc(Q.T, Q.webs[c]));
        CHECK(web_exit_arc(Q.F.after, Q.webs_after[c]) == web_exit_arc(Q.T, Q.webs[c]));
    }
    // the crossing webs become single-triangle webs and vice versa
    CHECK(Q.webs_after[0].steps.size() == 2);
    CHECK(Q.webs_after[2].steps.size() == 1);
}

TEST_CASE("peripheral loop") {
    Triangulation S = Triangulation::parse(read_file(SL3QT_DATA_DIR "/punctured_square.tri"));
    Seed s = build_quiver(S);
    WebPath loop = parse_webs(S, read_file(SL3QT_DATA_DIR "/punctured_square.webs")).at(0);
    LaurentPoly v = loop_trace(S, s, loop);
    CHECK(v.size() == 3);
    for (auto& [e, c] : v.terms()) CHECK(c == OmegaPoly(1));
    auto h = peripheral_highest_term(S, s, loop);
    REQUIRE(h);
    CHECK(h->coeff == OmegaPoly(1));
    CHECK(highest_term(v).value().exps == h->exps);
    // the all-right loop is the mirror case
    for (auto& p : S.vertices())
        if (p.puncture) {
            LaurentPoly r = loop_trace(S, s, peripheral_loop(S, p, Turn::right));
            CHECK(r.size() == 3);
        }
    CHECK_THROWS_AS(edge_trace(S, s, loop, {1, 1}), InputError);
}
