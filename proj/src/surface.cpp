#include "sl3qt/surface.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace sl3qt {

struct SurfaceBuilder {
    static Triangulation make(std::vector<Triangle> tris, std::set<std::string> boundary,
                              std::map<std::string, std::string> refs, std::map<std::string, std::string> aliases,
                              std::vector<std::pair<std::string, std::vector<std::string>>> punctures) {
        Triangulation T;
        T.tris_ = std::move(tris);
        T.aliases_ = std::move(aliases);
        T.declared_punctures_ = std::move(punctures);
        for (std::size_t t = 0; t < T.tris_.size(); ++t) {
            if (T.tri_idx_.count(T.tris_[t].id)) throw InputError("duplicate triangle id '" + T.tris_[t].id + "'");
            T.tri_idx_[T.tris_[t].id] = t;
            for (int a = 0; a < 3; ++a) {
                const std::string& id = T.tris_[t].sides[a];
                auto it = T.arc_idx_.find(id);
                if (it == T.arc_idx_.end()) {
                    it = T.arc_idx_.emplace(id, T.arcs_.size()).first;
                    T.arcs_.push_back(Arc{id, false, {}, 0});
                }
                T.arcs_[it->second].slots.push_back({t, a});
            }
        }
        for (auto& b : boundary) {
            auto it = T.arc_idx_.find(b);
            if (it == T.arc_idx_.end()) throw InputError("boundary arc '" + b + "' is not a side of any triangle");
            T.arcs_[it->second].boundary = true;
        }
        for (auto& [a, tri] : refs) {
            auto it = T.arc_idx_.find(a);
            if (it == T.arc_idx_.end()) throw InputError("ref for unknown arc '" + a + "'");
            Arc& arc = T.arcs_[it->second];
            std::size_t ti = T.triangle_index(tri);
            int found = -1;
            for (std::size_t k = 0; k < arc.slots.size(); ++k)
                if (arc.slots[k].tri == ti) found = static_cast<int>(k);
            if (found < 0) throw InputError("ref triangle '" + tri + "' does not contain arc '" + a + "'");
            arc.ref = found;
        }
        T.index_and_validate();
        return T;
    }
};

void Triangulation::index_and_validate() {
    for (auto& t : tris_) {
        if (t.sides[0] == t.sides[1] || t.sides[1] == t.sides[2] || t.sides[0] == t.sides[2])
            throw InputError("triangle '" + t.id + "' is self-folded (repeated side)");
    }
    for (auto& a : arcs_) {
        if (a.boundary && a.slots.size() != 1)
            throw InputError("boundary arc '" + a.id + "' must bound exactly one triangle side");
        if (!a.boundary && a.slots.size() != 2)
            throw InputError("arc '" + a.id + "' bounds " + std::to_string(a.slots.size()) +
                             " side(s); internal arcs need 2 (declare boundary arcs explicitly)");
    }
    std::set<std::string> seen_alias;
    for (auto& [k, v] : aliases_) {
        if (!seen_alias.insert(v).second) throw InputError("duplicate node label '" + v + "'");
    }
    auto vs = vertices();
    for (auto& v : vs)
        if (v.puncture && v.corners.size() < 3)
            throw InputError("puncture of valence " + std::to_string(v.corners.size()) + " (valence >= 3 required)");
    for (auto& [pid, incident] : declared_punctures_) {
        std::multiset<std::string> want(incident.begin(), incident.end());
        bool ok = false;
        for (auto& v : vs) {
            if (!v.puncture) continue;
            std::multiset<std::string> have;
            for (auto& c : v.corners) have.insert(tris_[c.tri].sides[(c.side + 1) % 3]);
            if (have == want) ok = true;
        }
        if (!ok) throw InputError("declared puncture '" + pid + "' does not match any interior vertex");
        if (incident.size() < 3) throw InputError("puncture '" + pid + "' has valence < 3");
    }
}

const Arc& Triangulation::arc(const std::string& id) const {
    auto it = arc_idx_.find(id);
    if (it == arc_idx_.end()) throw InputError("unknown arc '" + id + "'");
    return arcs_[it->second];
}

std::size_t Triangulation::triangle_index(const std::string& id) const {
    auto it = tri_idx_.find(id);
    if (it == tri_idx_.end()) throw InputError("unknown triangle '" + id + "'");
    return it->second;
}

std::pair<std::string, std::string> Triangulation::local_nodes(std::size_t t, int a) const {
    const Arc& ar = arc(tris_[t].sides[a]);
    const Slot& r = ar.slots[ar.ref];
    if (r.tri == t && r.side == a) return {ar.id + ":1", ar.id + ":2"};
    return {ar.id + ":2", ar.id + ":1"};
}

NodeId Triangulation::name(const std::string& structured) const {
    auto it = aliases_.find(structured);
    return it == aliases_.end() ? structured : it->second;
}

QuiverLabeling Triangulation::labeling() const {
    QuiverLabeling L;
    for (auto& a : arcs_) {
        L[a.id + ":1"] = name(a.id + ":1");
        L[a.id + ":2"] = name(a.id + ":2");
    }
    for (auto& t : tris_) L[face_node(t.id)] = name(face_node(t.id));
    return L;
}

std::optional<Slot> Triangulation::opposite(const Slot& s) const {
    const Arc& ar = arc(tris_[s.tri].sides[s.side]);
    if (ar.boundary) return std::nullopt;
    for (auto& o : ar.slots)
        if (!(o == s)) return o;
    return std::nullopt;
}

std::vector<Vertex> Triangulation::vertices() const {
    // corner (t,a) -> across side a+1 -> corner (t', b) where side b of t' is that arc
    std::size_t n = tris_.size() * 3;
    std::vector<int> visited(n, 0);
    std::vector<Vertex> out;
    auto next = [&](const Slot& c) -> std::optional<Slot> {
        auto o = opposite(Slot{c.tri, (c.side + 1) % 3});
        if (!o) return std::nullopt;
        return Slot{o->tri, o->side};
    };
    auto prev = [&](const Slot& c) -> std::optional<Slot> {
        auto o = opposite(Slot{c.tri, c.side});
        if (!o) return std::nullopt;
        return Slot{o->tri, (o->side + 2) % 3};
    };
    for (std::size_t i = 0; i < n; ++i) {
        if (visited[i]) continue;
        Slot start{i / 3, static_cast<int>(i % 3)};
        // rewind to a boundary start if there is one
        Slot s = start;
        bool closed = false;
        for (std::size_t k = 0; k <= n; ++k) {
            auto p = prev(s);
            if (!p) break;
            s = *p;
            if (s == start) { closed = true; break; }
        }
        Vertex v;
        v.puncture = closed;
        Slot c = closed ? start : s;
        for (std::size_t k = 0; k <= n; ++k) {
            visited[c.tri * 3 + c.side] = 1;
            v.corners.push_back(c);
            auto nx = next(c);
            if (!nx || *nx == (closed ? start : s)) break;
            c = *nx;
        }
        out.push_back(std::move(v));
    }
    return out;
}

Triangulation Triangulation::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<Triangle> tris;
    std::set<std::string> boundary;
    std::map<std::string, std::string> refs, aliases;
    std::vector<std::pair<std::string, std::vector<std::string>>> punctures;
    int lineno = 0;
    auto err = [&](const std::string& m) { return InputError("triangulation line " + std::to_string(lineno) + ": " + m); };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        std::vector<std::string> f;
        for (std::string w; ls >> w;) f.push_back(w);
        if (kw == "triangle") {
            if (f.size() != 4) throw err("triangle needs an id and three sides");
            tris.push_back(Triangle{f[0], {f[1], f[2], f[3]}});
        } else if (kw == "boundary") {
            if (f.empty()) throw err("boundary needs at least one arc");
            boundary.insert(f.begin(), f.end());
        } else if (kw == "puncture") {
            if (f.size() < 2 || f[1] != "incident") throw err("expected 'puncture <id> incident <arcs...>'");
            punctures.emplace_back(f[0], std::vector<std::string>(f.begin() + 2, f.end()));
        } else if (kw == "label") {
            if (f.size() != 2) throw err("expected 'label <node> <name>'");
            aliases[f[0]] = f[1];
        } else if (kw == "ref") {
            if (f.size() != 2) throw err("expected 'ref <arc> <triangle>'");
            refs[f[0]] = f[1];
        } else {
            throw err("unknown keyword '" + kw + "'");
        }
    }
    if (tris.empty()) throw InputError("triangulation has no triangles");
    return SurfaceBuilder::make(std::move(tris), std::move(boundary), std::move(refs), std::move(aliases),
                                std::move(punctures));
}

std::string Triangulation::render() const {
    std::ostringstream os;
    for (auto& t : tris_) os << "triangle " << t.id << " " << t.sides[0] << " " << t.sides[1] << " " << t.sides[2] << "\n";
    std::vector<std::string> b;
    for (auto& a : arcs_)
        if (a.boundary) b.push_back(a.id);
    if (!b.empty()) {
        os << "boundary";
        for (auto& x : b) os << " " << x;
        os << "\n";
    }
    for (auto& a : arcs_)
        if (!a.boundary) os << "ref " << a.id << " " << tris_[a.slots[a.ref].tri].id << "\n";
    for (auto& [pid, inc] : declared_punctures_) {
        os << "puncture " << pid << " incident";
        for (auto& x : inc) os << " " << x;
        os << "\n";
    }
    for (auto& [k, v] : aliases_) os << "label " << k << " " << v << "\n";
    return os.str();
}

Triangulation build_triangulation(const std::string& description) { return Triangulation::parse(description); }

Seed build_quiver(const Triangulation& T) {
    std::vector<NodeId> names;
    std::vector<bool> frozen;
    for (auto& a : T.arcs()) {
        names.push_back(T.name(a.id + ":1"));
        names.push_back(T.name(a.id + ":2"));
        frozen.push_back(a.boundary);
        frozen.push_back(a.boundary);
    }
    for (auto& t : T.triangles()) {
        names.push_back(T.name(Triangulation::face_node(t.id)));
        frozen.push_back(false);
    }
    Seed s(names, frozen);
    for (std::size_t t = 0; t < T.triangles().size(); ++t) {
        std::size_t face = s.index(T.name(Triangulation::face_node(T.triangles()[t].id)));
        for (int a = 0; a < 3; ++a) {
            auto [p1, p2] = T.local_nodes(t, a);
            auto [n1, n2] = T.local_nodes(t, (a + 1) % 3);
            std::size_t v1 = s.index(T.name(p1)), v2 = s.index(T.name(p2));
            std::size_t w1 = s.index(T.name(n1));
            s.add_eps2(v1, v2, 1);    // half arrow along the side
            s.add_eps2(v2, face, 2);  // side -> face
            s.add_eps2(face, v1, 2);  // face -> side
            s.add_eps2(w1, v2, 2);    // corner arrow
        }
    }
    s.validate();
    return s;
}

std::vector<std::vector<int>> arc_adjacency_matrix(const Triangulation& T) {
    std::size_t n = T.arcs().size();
    std::map<std::string, std::size_t> ix;
    for (std::size_t i = 0; i < n; ++i) ix[T.arcs()[i].id] = i;
    std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
    for (auto& t : T.triangles())
        for (int a = 0; a < 3; ++a) {
            std::size_t j = ix[t.sides[a]], i = ix[t.sides[(a + 1) % 3]];
            b[i][j] += 1;  // i is the clockwise next one to j
            b[j][i] -= 1;
        }
    return b;
}

FlipResult flip(const Triangulation& T, const std::string& arc_id) {
    const Arc& e = T.arc(arc_id);
    if (e.boundary) throw InputError("cannot flip boundary arc '" + arc_id + "'");
    Slot st = e.slots[e.ref], su = e.slots[1 - e.ref];
    if (st.tri == su.tri) throw InputError("flip of arc '" + arc_id + "' with a single adjacent triangle is unsupported");
    const Triangle& t = T.triangles()[st.tri];
    const Triangle& u = T.triangles()[su.tri];
    int i = st.side, j = su.side;
    std::string A = t.sides[(i + 1) % 3], B = t.sides[(i + 2) % 3];
    std::string C = u.sides[(j + 1) % 3], E = u.sides[(j + 2) % 3];
    std::set<std::string> outer{A, B, C, E};
    if (outer.size() != 4)
        throw InputError("flip of arc '" + arc_id + "': context nodes coincide (unsupported configuration)");

    FlipContext ctx;
    ctx.arc = arc_id;
    ctx.t = st.tri;
    ctx.u = su.tri;
    auto [b1, b2] = T.local_nodes(st.tri, (i + 2) % 3);
    auto [a1, a2] = T.local_nodes(st.tri, (i + 1) % 3);
    auto [c1, c2] = T.local_nodes(su.tri, (j + 1) % 3);
    auto [e1, e2] = T.local_nodes(su.tri, (j + 2) % 3);
    ctx.vs = {b1, b2, arc_id + ":1", arc_id + ":2", a1, a2, Triangulation::face_node(t.id),
              c1, c2, e1, e2, Triangulation::face_node(u.id)};
    for (int k = 0; k < 12; ++k) ctx.v[k] = T.name(ctx.vs[k]);

    // new triangles keep the ids and positions of t and u
    std::vector<Triangle> tris = T.triangles();
    tris[st.tri] = Triangle{t.id, {B, C, arc_id}};
    tris[su.tri] = Triangle{u.id, {E, A, arc_id}};

    // structured node bijection old -> new
    std::map<std::string, std::string> sb;
    sb[arc_id + ":1"] = Triangulation::face_node(t.id);
    sb[arc_id + ":2"] = Triangulation::face_node(u.id);
    sb[Triangulation::face_node(t.id)] = arc_id + ":2";
    sb[Triangulation::face_node(u.id)] = arc_id + ":1";

    // orientation references: outer arcs keep their local orientation
    std::map<std::string, std::string> refs;
    auto new_tri_of = [&](const std::string& arc) -> std::string {
        if (arc == A || arc == E) return u.id;
        return t.id;
    };
    for (auto& a : T.arcs()) {
        if (a.boundary) continue;
        if (a.id == arc_id) { refs[a.id] = t.id; continue; }
        const Slot& r = a.slots[a.ref];
        if (r.tri == st.tri || r.tri == su.tri) refs[a.id] = new_tri_of(a.id);
        else refs[a.id] = T.triangles()[r.tri].id;
    }
    std::set<std::string> boundary;
    for (auto& a : T.arcs())
        if (a.boundary) boundary.insert(a.id);

    std::map<std::string, std::string> aliases;
    for (auto& [k, v] : T.aliases()) {
        auto it = sb.find(k);
        aliases[it == sb.end() ? k : it->second] = v;
    }
    std::vector<std::pair<std::string, std::vector<std::string>>> punct;  // incidences change; not carried
    FlipResult r{SurfaceBuilder::make(tris, boundary, refs, aliases, punct), ctx, {}};

    for (auto& [k, v] : T.labeling()) {
        auto it = sb.find(k);
        r.bijection[v] = r.flipped.name(it == sb.end() ? k : it->second);
    }
    // sanity: outer local nodes keep their order
    auto [nb1, nb2] = r.flipped.local_nodes(st.tri, 0);
    auto [na1, na2] = r.flipped.local_nodes(su.tri, 1);
    if (nb1 != b1 || nb2 != b2 || na1 != a1 || na2 != a2) throw std::logic_error("flip orientation bookkeeping");
    return r;
}

bool equivalent(const Triangulation& a, const Triangulation& b) {
    auto norm = [](const Triangulation& T) {
        std::multiset<std::array<std::string, 3>> tr;
        for (auto& t : T.triangles()) {
            std::array<std::string, 3> best = t.sides;
            for (int r = 1; r < 3; ++r) {
                std::array<std::string, 3> c{t.sides[r], t.sides[(r + 1) % 3], t.sides[(r + 2) % 3]};
                best = std::min(best, c);
            }
            tr.insert(best);
        }
        std::set<std::string> bd;
        for (auto& x : T.arcs())
            if (x.boundary) bd.insert(x.id);
        return std::make_pair(tr, bd);
    };
    return norm(a) == norm(b);
}

CutResult cut(const Triangulation& T, const std::string& arc_id) {
    const Arc& e = T.arc(arc_id);
    if (e.boundary) throw InputError("cannot cut along boundary arc '" + arc_id + "'");
    Slot st = e.slots[e.ref], su = e.slots[1 - e.ref];
    std::string e1 = arc_id + "'", e2 = arc_id + "''";
    std::vector<Triangle> tris = T.triangles();
    tris[st.tri].sides[st.side] = e1;
    tris[su.tri].sides[su.side] = e2;
    std::set<std::string> boundary{e1, e2};
    std::map<std::string, std::string> refs;
    for (auto& a : T.arcs()) {
        if (a.boundary) boundary.insert(a.id);
        else if (a.id != arc_id) refs[a.id] = T.triangles()[a.slots[a.ref].tri].id;
    }
    // structured glue map for the duplicated nodes
    std::map<std::string, std::string> sg{{e1 + ":1", arc_id + ":1"},
                                          {e1 + ":2", arc_id + ":2"},
                                          {e2 + ":1", arc_id + ":2"},
                                          {e2 + ":2", arc_id + ":1"}};
    std::map<std::string, std::string> aliases;
    for (auto& [k, v] : T.aliases())
        if (k.rfind(arc_id + ":", 0) != 0) aliases[k] = v;
    for (auto& [k, v] : sg) {
        std::string base = T.name(v);
        aliases[k] = base + (k.rfind(e1 + ":", 0) == 0 ? "'" : "''");
    }
    CutResult r{SurfaceBuilder::make(tris, boundary, refs, aliases, {}), {}};
    for (auto& [k, v] : r.cut.labeling()) {
        auto it = sg.find(k);
        r.glue[v] = T.name(it == sg.end() ? k : it->second);
    }
    return r;
}

LaurentPoly cutting_map(const Seed& original, const Seed& cut_seed, const std::map<NodeId, NodeId>& glue,
                        const LaurentPoly& p) {
    std::vector<std::size_t> src(cut_seed.size());
    for (std::size_t w = 0; w < cut_seed.size(); ++w) src[w] = original.index(glue.at(cut_seed.node(w)));
    LaurentPoly r(cut_seed.size());
    for (auto& [e, c] : p.terms()) {
        Exps f(cut_seed.size());
        for (std::size_t w = 0; w < f.size(); ++w) f[w] = e[src[w]];
        r.add_term(f, c);
    }
    return r;
}

}  // namespace sl3qt
