#include "sl3qt/trace.hpp"

#include <algorithm>
#include <sstream>

namespace sl3qt {

namespace {

Term mono(std::size_t n, std::initializer_list<std::pair<std::size_t, i64>> f) {
    Term t{Exps(n, 0), 1};
    for (auto [i, k] : f) t.exps[i] += k;
    return t;
}

std::size_t node_of(const Triangulation& T, const Seed& s, const std::string& structured) {
    return s.index(T.name(structured));
}

}  // namespace

static std::vector<std::string> tokens(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    for (std::string w; is >> w;) out.push_back(w);
    return out;
}

static int side_of(const Triangulation& T, std::size_t t, const std::string& arc) {
    for (int a = 0; a < 3; ++a)
        if (T.triangles()[t].sides[a] == arc) return a;
    throw InputError("arc '" + arc + "' is not a side of triangle '" + T.triangles()[t].id + "'");
}

static Turn parse_turn(const std::string& x) {
    if (x == "L" || x == "l" || x == "left") return Turn::left;
    if (x == "R" || x == "r" || x == "right") return Turn::right;
    throw InputError("turn must be L or R, got '" + x + "'");
}

static int exit_side(int entry, Turn t) { return t == Turn::left ? (entry + 1) % 3 : (entry + 2) % 3; }

// Follows triangle/turn pairs from a given entry side of the first triangle.
static std::optional<std::vector<WebStep>> follow(const Triangulation& T,
                                                  const std::vector<std::pair<std::size_t, Turn>>& hops,
                                                  int first_entry, std::string* err) {
    std::vector<WebStep> steps;
    int entry = first_entry;
    for (std::size_t i = 0; i < hops.size(); ++i) {
        auto [tri, turn] = hops[i];
        int ex = exit_side(entry, turn);
        steps.push_back({tri, entry, ex, turn});
        if (i + 1 < hops.size()) {
            auto o = T.opposite(Slot{tri, ex});
            if (!o || o->tri != hops[i + 1].first) {
                if (err)
                    *err = "web leaves triangle '" + T.triangles()[tri].id + "' through '" + T.triangles()[tri].sides[ex] +
                           "', which does not lead into triangle '" + T.triangles()[hops[i + 1].first].id + "'";
                return std::nullopt;
            }
            entry = o->side;
        }
    }
    return steps;
}

WebPath parse_web(const Triangulation& T, const std::string& text) {
    auto tok = tokens(text);
    if (tok.size() < 2 || (tok[0] != "web" && tok[0] != "loop")) throw InputError("expected 'web <id> ...' or 'loop <id> ...'");
    WebPath w;
    w.id = tok[1];
    w.closed = tok[0] == "loop";
    std::size_t i = 2;
    std::optional<std::string> enter, exit;
    if (i + 1 < tok.size() && tok[i] == "enter") {
        enter = tok[i + 1];
        i += 2;
    }
    std::vector<std::pair<std::size_t, Turn>> hops;
    while (i < tok.size() && tok[i] == "triangle") {
        if (i + 3 >= tok.size() || tok[i + 2] != "turn") throw InputError("expected 'triangle <id> turn <L|R>'");
        hops.emplace_back(T.triangle_index(tok[i + 1]), parse_turn(tok[i + 3]));
        i += 4;
    }
    if (hops.empty()) throw InputError("web '" + w.id + "' visits no triangle");
    if (!w.closed) {
        if (!enter) throw InputError("web '" + w.id + "' needs 'enter <arc>'");
        if (i + 1 >= tok.size() || tok[i] != "exit") throw InputError("web '" + w.id + "' needs 'exit <arc>'");
        exit = tok[i + 1];
        i += 2;
        if (!T.arc(*enter).boundary) throw InputError("web '" + w.id + "' must enter through a boundary arc");
        std::string err;
        auto steps = follow(T, hops, side_of(T, hops[0].first, *enter), &err);
        if (!steps) throw InputError(err);
        w.steps = *steps;
        const auto& last = w.steps.back();
        std::string got = T.triangles()[last.tri].sides[last.exit];
        if (got != *exit) throw InputError("web '" + w.id + "' exits through '" + got + "', not '" + *exit + "'");
        if (!T.arc(got).boundary) throw InputError("web '" + w.id + "' must exit through a boundary arc");
    } else {
        if (i >= tok.size() || tok[i] != "closed") throw InputError("loop '" + w.id + "' must end with 'closed'");
        ++i;
        std::vector<std::vector<WebStep>> found;
        for (int e = 0; e < 3; ++e) {
            if (enter && T.triangles()[hops[0].first].sides[e] != *enter) continue;
            auto steps = follow(T, hops, e, nullptr);
            if (!steps) continue;
            auto o = T.opposite(Slot{steps->back().tri, steps->back().exit});
            if (o && o->tri == hops[0].first && o->side == e) found.push_back(*steps);
        }
        if (found.empty()) throw InputError("loop '" + w.id + "' does not close up");
        if (found.size() > 1) throw InputError("loop '" + w.id + "' is ambiguous; add 'enter <arc>'");
        w.steps = found[0];
    }
    if (i != tok.size()) throw InputError("trailing tokens in web '" + w.id + "'");
    return w;
}

std::vector<WebPath> parse_webs(const Triangulation& T, const std::string& text) {
    std::istringstream in(text);
    std::vector<WebPath> out;
    for (std::string line; std::getline(in, line);) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        if (tokens(line).empty()) continue;
        out.push_back(parse_web(T, line));
    }
    return out;
}

std::string web_enter_arc(const Triangulation& T, const WebPath& w) {
    return T.triangles()[w.steps.front().tri].sides[w.steps.front().entry];
}
std::string web_exit_arc(const Triangulation& T, const WebPath& w) {
    return T.triangles()[w.steps.back().tri].sides[w.steps.back().exit];
}

std::string render_web(const Triangulation& T, const WebPath& w) {
    std::string s = (w.closed ? "loop " : "web ") + w.id + " enter " + web_enter_arc(T, w);
    for (auto& st : w.steps)
        s += " triangle " + T.triangles()[st.tri].id + " turn " + (st.turn == Turn::left ? "L" : "R");
    s += w.closed ? " closed" : " exit " + web_exit_arc(T, w);
    return s;
}

bool web_crosses(const Triangulation& T, const WebPath& w, const std::string& arc) {
    for (auto& st : w.steps) {
        if (T.triangles()[st.tri].sides[st.exit] == arc) return true;
        if (T.triangles()[st.tri].sides[st.entry] == arc) return true;
    }
    return false;
}

TermMatrix edge_side_matrix(const Triangulation& T, const Seed& s, std::size_t t, int a, bool entering) {
    auto [p1, p2] = T.local_nodes(t, a);
    std::size_t v1 = node_of(T, s, p1), v2 = node_of(T, s, p2);
    if (!entering) std::swap(v1, v2);
    std::size_t n = s.size();
    TermMatrix M;
    // written order: the linear node first, then the squared one
    M[0][0] = {mono(n, {{v2, 1}, {v1, 2}})};
    M[1][1] = {mono(n, {{v2, 1}, {v1, -1}})};
    M[2][2] = {mono(n, {{v2, -2}, {v1, -1}})};
    return M;
}

TermMatrix turn_matrix(const Triangulation& T, const Seed& s, std::size_t t, Turn turn) {
    std::size_t n = s.size();
    std::size_t f = node_of(T, s, Triangulation::face_node(T.triangles()[t].id));
    auto Z = [&](i64 k) { return mono(n, {{f, k}}); };
    TermMatrix M;
    if (turn == Turn::left) {
        M[0][0] = {Z(2)};
        M[0][1] = {Z(2), Z(-1)};
        M[0][2] = {Z(-1)};
        M[1][1] = {Z(-1)};
        M[1][2] = {Z(-1)};
        M[2][2] = {Z(-1)};
    } else {
        M[0][0] = {Z(1)};
        M[1][0] = {Z(1)};
        M[1][1] = {Z(1)};
        M[2][0] = {Z(1)};
        M[2][1] = {Z(1), Z(-2)};
        M[2][2] = {Z(-2)};
    }
    return M;
}

TermMatrix mat_mul(const TermMatrix& A, const TermMatrix& B) {
    TermMatrix C;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (auto& a : A[i][k])
                    for (auto& b : B[k][j]) {
                        Term t{a.exps, checked_mul(a.coeff, b.coeff)};
                        for (std::size_t x = 0; x < t.exps.size(); ++x) t.exps[x] += b.exps[x];
                        C[i][j].push_back(std::move(t));
                    }
    return C;
}

LaurentPoly to_poly(std::size_t nvars, const TermList& l) {
    LaurentPoly p(nvars);
    for (auto& t : l) p.add_term(t.exps, OmegaPoly(t.coeff));
    return p;
}

static std::vector<TermMatrix> factors(const Triangulation& T, const Seed& s, const WebPath& w) {
    std::vector<TermMatrix> f;
    for (std::size_t i = 0; i < w.steps.size(); ++i) {
        const WebStep& st = w.steps[i];
        f.push_back(edge_side_matrix(T, s, st.tri, st.entry, true));
        f.push_back(turn_matrix(T, s, st.tri, st.turn));
        if (i + 1 == w.steps.size() && !w.closed) f.push_back(edge_side_matrix(T, s, st.tri, st.exit, false));
    }
    return f;
}

TermMatrix monodromy(const Triangulation& T, const Seed& s, const WebPath& w) {
    auto f = factors(T, s, w);
    // right-to-left accumulation gives lexicographic order in the intermediate indices
    TermMatrix M = f.back();
    for (std::size_t i = f.size() - 1; i-- > 0;) M = mat_mul(f[i], M);
    return M;
}

LaurentPoly edge_trace(const Triangulation& T, const Seed& s, const WebPath& w, StatePair st) {
    if (w.closed) throw InputError("edge_trace needs a web with endpoints");
    if (st.eps1 < 1 || st.eps1 > 3 || st.eps2 < 1 || st.eps2 > 3) throw InputError("states must lie in {1,2,3}");
    TermMatrix M = monodromy(T, s, w);
    return weyl_quantize(to_poly(s.size(), M[st.eps1 - 1][st.eps2 - 1]));
}

LaurentPoly single_triangle_trace(const Triangulation& T, const Seed& s, std::size_t tri, int entry, Turn turn,
                                  StatePair st) {
    std::size_t n = s.size();
    TermMatrix Din = edge_side_matrix(T, s, tri, entry, true);
    TermMatrix Tm = turn_matrix(T, s, tri, turn);
    TermMatrix Dout = edge_side_matrix(T, s, tri, exit_side(entry, turn), false);
    int i = st.eps1 - 1, j = st.eps2 - 1;
    LaurentPoly r(n);
    for (auto& a : Din[i][i])
        for (auto& b : Tm[i][j])
            for (auto& c : Dout[j][j]) {
                WeylMonomial x{OmegaPoly(a.coeff), a.exps}, y{OmegaPoly(b.coeff), b.exps}, z{OmegaPoly(c.coeff), c.exps};
                WeylMonomial p = mono_mul(s, mono_mul(s, x, y), z);
                // Weyl ordering of the product discards the phase
                r.add_term(p.exps, OmegaPoly(p.coeff.eval_at_one()));
            }
    return r;
}

LaurentPoly loop_trace(const Triangulation& T, const Seed& s, const WebPath& loop) {
    if (!loop.closed) throw InputError("loop_trace needs a closed web");
    for (auto& st : loop.steps)
        if (st.turn != loop.steps[0].turn)
            throw InputError("only uniform-turn (peripheral) loops are supported");
    TermMatrix M = monodromy(T, s, loop);
    TermList tr;
    for (int k = 0; k < 3; ++k) tr.insert(tr.end(), M[k][k].begin(), M[k][k].end());
    return weyl_quantize(to_poly(s.size(), tr));
}

std::optional<WeylMonomial> peripheral_highest_term(const Triangulation& T, const Seed& s, const WebPath& loop) {
    return highest_term(loop_trace(T, s, loop));
}

WebPath peripheral_loop(const Triangulation& T, const Vertex& v, Turn turn) {
    if (!v.puncture) throw InputError("peripheral loops need an interior puncture");
    for (auto& c : v.corners)
        if (c.tri >= T.triangles().size()) throw InputError("vertex does not belong to this triangulation");
    WebPath w;
    w.id = "peripheral";
    w.closed = true;
    if (turn == Turn::left) {
        for (auto& c : v.corners) w.steps.push_back({c.tri, c.side, (c.side + 1) % 3, Turn::left});
    } else {
        for (auto it = v.corners.rbegin(); it != v.corners.rend(); ++it)
            w.steps.push_back({it->tri, (it->side + 1) % 3, it->side, Turn::right});
    }
    return w;
}

LaurentPoly classical_det(std::size_t n, const TermMatrix& M) {
    auto P = [&](int i, int j) { return to_poly(n, M[i][j]); };
    auto m = [](const LaurentPoly& a, const LaurentPoly& b) { return classical_mul(a, b); };
    LaurentPoly d(n);
    d += m(P(0, 0), m(P(1, 1), P(2, 2)) - m(P(1, 2), P(2, 1)));
    d -= m(P(0, 1), m(P(1, 0), P(2, 2)) - m(P(1, 2), P(2, 0)));
    d += m(P(0, 2), m(P(1, 0), P(2, 1)) - m(P(1, 1), P(2, 0)));
    return d;
}

CuttingCheck cutting_axiom(const Triangulation& T, const WebPath& w, const std::string& arc, StatePair st) {
    if (w.closed) throw InputError("cutting_axiom needs a web with endpoints");
    std::size_t cross = w.steps.size();
    int count = 0;
    for (std::size_t i = 0; i + 1 < w.steps.size(); ++i)
        if (T.triangles()[w.steps[i].tri].sides[w.steps[i].exit] == arc) {
            cross = i;
            ++count;
        }
    if (count != 1) throw InputError("web must cross the cut arc exactly once");
    Seed s = build_quiver(T);
    CutResult c = cut(T, arc);
    Seed se = build_quiver(c.cut);
    WebPath w1{w.id + "_1", {w.steps.begin(), w.steps.begin() + static_cast<long>(cross) + 1}, false};
    WebPath w2{w.id + "_2", {w.steps.begin() + static_cast<long>(cross) + 1, w.steps.end()}, false};
    LaurentPoly lhs = cutting_map(s, se, c.glue, edge_trace(T, s, w, st));
    LaurentPoly rhs(se.size());
    for (int k = 1; k <= 3; ++k)
        rhs += poly_mul(se, edge_trace(c.cut, se, w1, {st.eps1, k}), edge_trace(c.cut, se, w2, {k, st.eps2}));
    return {lhs == rhs, render(se, lhs), render(se, rhs)};
}

WebPath reroute_after_flip(const Triangulation& before, const Triangulation& after, std::size_t t, std::size_t u,
                           const WebPath& w) {
    auto inside = [&](std::size_t x) { return x == t || x == u; };
    std::vector<WebStep> steps = w.steps;
    std::size_t rot = 0;
    if (w.closed) {
        while (rot < steps.size() && inside(steps[rot].tri)) ++rot;
        if (rot == steps.size()) throw InputError("loop lies inside the flipped quadrilateral");
        std::rotate(steps.begin(), steps.begin() + static_cast<long>(rot), steps.end());
    }
    std::string diag;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (after.triangles()[t].sides[a] == after.triangles()[u].sides[b]) diag = after.triangles()[t].sides[a];
    WebPath out{w.id, {}, w.closed};
    auto route = [&](const std::string& X, const std::string& Y) {
        std::size_t tx = t;
        int ix = -1;
        for (std::size_t cand : {t, u})
            for (int a = 0; a < 3; ++a)
                if (after.triangles()[cand].sides[a] == X) { tx = cand; ix = a; }
        if (ix < 0) throw std::logic_error("reroute: entry side not found");
        const auto& sx = after.triangles()[tx].sides;
        for (int a = 0; a < 3; ++a)
            if (sx[a] == Y) {
                Turn tn = (ix + 1) % 3 == a ? Turn::left : Turn::right;
                out.steps.push_back({tx, ix, a, tn});
                return;
            }
        int id = 0;
        while (sx[id] != diag) ++id;
        out.steps.push_back({tx, ix, id, (ix + 1) % 3 == id ? Turn::left : Turn::right});
        std::size_t ty = tx == t ? u : t;
        const auto& sy = after.triangles()[ty].sides;
        int jd = 0, jy = -1;
        while (sy[jd] != diag) ++jd;
        for (int a = 0; a < 3; ++a)
            if (sy[a] == Y) jy = a;
        if (jy < 0) throw std::logic_error("reroute: exit side not found");
        out.steps.push_back({ty, jd, jy, (jd + 1) % 3 == jy ? Turn::left : Turn::right});
    };
    for (std::size_t i = 0; i < steps.size();) {
        if (!inside(steps[i].tri)) {
            out.steps.push_back(steps[i]);
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < steps.size() && inside(steps[j + 1].tri)) ++j;
        std::string X = before.triangles()[steps[i].tri].sides[steps[i].entry];
        std::string Y = before.triangles()[steps[j].tri].sides[steps[j].exit];
        if (X == Y) throw InputError("web returns through the side it entered; not a simple route");
        route(X, Y);
        i = j + 1;
    }
    return out;
}

}  // namespace sl3qt
