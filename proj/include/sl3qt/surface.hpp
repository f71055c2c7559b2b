#pragma once
// Combinatorial ideal triangulations, their 3-triangulation quivers, flips and cuts.
#include <array>
#include <map>
#include <string>
#include <vector>

#include "sl3qt/qtorus.hpp"
#include "sl3qt/quiver.hpp"

namespace sl3qt {

struct Triangle {
    std::string id;
    std::array<std::string, 3> sides;  // clockwise
};

struct Slot {
    std::size_t tri;
    int side;
    friend bool operator==(const Slot&, const Slot&) = default;
};

struct Arc {
    std::string id;
    bool boundary = false;
    std::vector<Slot> slots;  // slots[ref] fixes the orientation of arc:1 -> arc:2
    int ref = 0;
};

// A vertex of the triangulation: an orbit of triangle corners.  Corner (t, a)
// sits between side a and the clockwise-next side a+1.
struct Vertex {
    std::vector<Slot> corners;  // in walk order; for punctures this is the all-left loop
    bool puncture = false;      // all incident arcs internal
};

// structured node id ("e:1", "e:2", "t:t") -> display NodeId
using QuiverLabeling = std::map<std::string, NodeId>;

class Triangulation {
public:
    static Triangulation parse(const std::string& text);
    std::string render() const;

    const std::vector<Triangle>& triangles() const { return tris_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const Arc& arc(const std::string& id) const;
    bool has_arc(const std::string& id) const { return arc_idx_.count(id) > 0; }
    std::size_t triangle_index(const std::string& id) const;

    // structured ids of the local nodes of side a of triangle t, in clockwise order
    std::pair<std::string, std::string> local_nodes(std::size_t t, int a) const;
    static std::string face_node(const std::string& tri_id) { return tri_id + ":t"; }
    // display name of a structured node id
    NodeId name(const std::string& structured) const;
    QuiverLabeling labeling() const;

    std::vector<Vertex> vertices() const;
    // slot across the arc of slot s, if internal
    std::optional<Slot> opposite(const Slot& s) const;

    const std::map<std::string, std::string>& aliases() const { return aliases_; }

private:
    friend struct SurfaceBuilder;
    void index_and_validate();

    std::vector<Triangle> tris_;
    std::vector<Arc> arcs_;
    std::map<std::string, std::size_t> arc_idx_;
    std::map<std::string, std::size_t> tri_idx_;
    std::map<std::string, std::string> aliases_;
    std::vector<std::pair<std::string, std::vector<std::string>>> declared_punctures_;
};

Triangulation build_triangulation(const std::string& description);
Seed build_quiver(const Triangulation& T);
// b_ij for arcs in the order of Triangulation::arcs()
std::vector<std::vector<int>> arc_adjacency_matrix(const Triangulation& T);

struct FlipContext {
    std::string arc;
    std::size_t t = 0, u = 0;          // triangle indices; t holds the reference slot of the arc
    std::array<NodeId, 12> v;          // v[0] = v1 ... v[11] = v12, display names in the old triangulation
    std::array<std::string, 12> vs;    // same, structured ids
};

struct FlipResult {
    Triangulation flipped;
    FlipContext ctx;
    std::map<NodeId, NodeId> bijection;  // display names: old -> new
};

FlipResult flip(const Triangulation& T, const std::string& arc);
// equal as sets of cyclic side triples and boundary sets (triangle ids ignored)
bool equivalent(const Triangulation& a, const Triangulation& b);

struct CutResult {
    Triangulation cut;
    std::map<NodeId, NodeId> glue;  // display names: node of cut surface -> node of original
};

CutResult cut(const Triangulation& T, const std::string& arc);
// exponent at w equals exponent at g(w)
LaurentPoly cutting_map(const Seed& original, const Seed& cut_seed, const std::map<NodeId, NodeId>& glue,
                        const LaurentPoly& p);

}  // namespace sl3qt
