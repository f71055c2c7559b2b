#pragma once
// SL3 quantum trace values of simple oriented webs over a triangulation.
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sl3qt/qtorus.hpp"
#include "sl3qt/surface.hpp"

namespace sl3qt {

enum class Turn { left, right };

struct WebStep {
    std::size_t tri;
    int entry, exit;
    Turn turn;
};

struct WebPath {
    std::string id;
    std::vector<WebStep> steps;
    bool closed = false;
};

struct StatePair {
    int eps1 = 1, eps2 = 1;  // in {1,2,3}
};

// A monomial with an integer coefficient; lists keep expansion order.
struct Term {
    Exps exps;
    i64 coeff;
};
using TermList = std::vector<Term>;
using TermMatrix = std::array<std::array<TermList, 3>, 3>;

WebPath parse_web(const Triangulation& T, const std::string& text);
std::vector<WebPath> parse_webs(const Triangulation& T, const std::string& text);
std::string render_web(const Triangulation& T, const WebPath& w);
// Boundary arcs where a non-closed web starts and ends.
std::string web_enter_arc(const Triangulation& T, const WebPath& w);
std::string web_exit_arc(const Triangulation& T, const WebPath& w);
bool web_crosses(const Triangulation& T, const WebPath& w, const std::string& arc);

// diag(Z_{e,2} Z_{e,1}^2, Z_{e,2} Z_{e,1}^{-1}, Z_{e,2}^{-2} Z_{e,1}^{-1}) for entering side a of triangle t;
// leaving uses the roles swapped.
TermMatrix edge_side_matrix(const Triangulation& T, const Seed& s, std::size_t t, int a, bool entering);
TermMatrix turn_matrix(const Triangulation& T, const Seed& s, std::size_t t, Turn turn);
TermMatrix mat_mul(const TermMatrix& A, const TermMatrix& B);
LaurentPoly to_poly(std::size_t nvars, const TermList& l);
// classical monodromy of a non-closed web, expanded in path order
TermMatrix monodromy(const Triangulation& T, const Seed& s, const WebPath& w);

LaurentPoly edge_trace(const Triangulation& T, const Seed& s, const WebPath& w, StatePair st);
// Weyl-ordered triple product of one triangle's matrices, computed with the quantum product.
LaurentPoly single_triangle_trace(const Triangulation& T, const Seed& s, std::size_t tri, int entry, Turn turn,
                                  StatePair st);
LaurentPoly loop_trace(const Triangulation& T, const Seed& s, const WebPath& loop);
std::optional<WeylMonomial> peripheral_highest_term(const Triangulation& T, const Seed& s, const WebPath& loop);
// all-left (or all-right) loop around a puncture vertex
WebPath peripheral_loop(const Triangulation& T, const Vertex& v, Turn turn = Turn::left);

// determinant at omega = 1 of a 3x3 matrix
LaurentPoly classical_det(std::size_t nvars, const TermMatrix& M);

// i(Tr_T(W,s)) == sum_{s_e} Tr(W_1,(eps1,s_e)) Tr(W_2,(s_e,eps2)) for a web crossing arc e once.
struct CuttingCheck {
    bool ok;
    std::string lhs, rhs;
};
CuttingCheck cutting_axiom(const Triangulation& T, const WebPath& w, const std::string& arc, StatePair st);

// The same web rerouted in the flipped triangulation: every maximal run through the
// two triangles of the flip is replaced by the unique route between its entry and exit sides.
WebPath reroute_after_flip(const Triangulation& before, const Triangulation& after, std::size_t t, std::size_t u,
                           const WebPath& w);

}  // namespace sl3qt
