#pragma once
// Edge labelings that split the interior edges into a south-to-north set T1
// and an east-to-west set T2, the local rotation conditions that make such a
// labeling valid, and the face-side test for when the induced layout is
// area-universal.

#include <cstdint>
#include <vector>

#include "plane_graph.hpp"

namespace aul {

enum class EdgeLabel : std::int8_t {
    Unset = 0,
    T1Fwd,  // T1, directed lo -> hi of the stored edge
    T1Rev,
    T2Fwd,
    T2Rev,
};

struct Rel {
    std::vector<EdgeLabel> lab;  // by undirected edge id

    bool operator==(const Rel&) const = default;
};

inline Rel make_empty_rel(const PlaneGraph& g) { return Rel{std::vector<EdgeLabel>(g.edge_count, EdgeLabel::Unset)}; }

inline int label_set(EdgeLabel l) {
    switch (l) {
        case EdgeLabel::T1Fwd:
        case EdgeLabel::T1Rev: return 1;
        case EdgeLabel::T2Fwd:
        case EdgeLabel::T2Rev: return 2;
        default: return 0;
    }
}

/* Label the edge u-v with set 1 or 2, directed u -> v. */
inline EdgeLabel make_label(int u, int v, int set) {
    bool fwd = u < v;
    if (set == 1) return fwd ? EdgeLabel::T1Fwd : EdgeLabel::T1Rev;
    return fwd ? EdgeLabel::T2Fwd : EdgeLabel::T2Rev;
}

inline void assign_label(Rel& r, const PlaneGraph& g, int u, int v, int set) {
    r.lab[g.edge_id(u, v)] = make_label(u, v, set);
}

/* True iff the edge carries a label directed u -> v. */
inline bool directed_uv(const PlaneGraph& g, const Rel& r, int u, int v) {
    EdgeLabel l = r.lab[g.edge_id(u, v)];
    if (l == EdgeLabel::Unset) return false;
    bool fwd = l == EdgeLabel::T1Fwd || l == EdgeLabel::T2Fwd;
    return fwd == (u < v);
}

/* 0 = unlabeled; 1/2 with sign: +set if directed u -> v, -set otherwise. */
inline int directed_label(const PlaneGraph& g, const Rel& r, int u, int v) {
    EdgeLabel l = r.lab[g.edge_id(u, v)];
    int s = label_set(l);
    if (s == 0) return 0;
    return directed_uv(g, r, u, v) ? s : -s;
}

// edge category around a vertex, in the cyclic-order convention
enum : int { kT1Out = 0, kT2Out = 1, kT1In = 2, kT2In = 3, kUnlabeled = -1 };

inline int edge_category(const PlaneGraph& g, const Rel& r, int v, int nbr) {
    switch (directed_label(g, r, v, nbr)) {
        case 1: return kT1Out;
        case 2: return kT2Out;
        case -1: return kT1In;
        case -2: return kT2In;
        default: return kUnlabeled;
    }
}

/* The cyclic word must be a rotation of T1out+ T2out+ T1in+ T2in+ with all
   four blocks nonempty: exactly four category changes, each advancing by one. */
inline bool cyclic_blocks_ok(const std::vector<int>& cats) {
    int k = (int)cats.size();
    if (k < 4) return false;
    int changes = 0;
    for (int i = 0; i < k; ++i) {
        int a = cats[i], b = cats[(i + 1) % k];
        if (a < 0 || b < 0) return false;
        if (a != b) {
            if (b != (a + 1) % 4) return false;
            ++changes;
        }
    }
    return changes == 4;
}

/* Check the labeling conditions: frame edges unlabeled, every other edge
   labeled, the four-block rotation pattern at interior vertices, and the
   uniform corner patterns (everything at N is T1 entering, at S T1 leaving,
   at W T2 entering, at E T2 leaving). */
inline ValidationReport validate_rel(const PlaneGraph& g, const Rel& r) {
    ValidationReport rep;
    if ((int)r.lab.size() != g.edge_count) {
        rep.fail("labeling covers " + std::to_string(r.lab.size()) + " edges, graph has " +
                 std::to_string(g.edge_count));
        return rep;
    }
    FaceSet fs = compute_faces(g);
    std::vector<char> ext_edge = exterior_edge_mask(g, fs);
    for (int e = 0; e < g.edge_count; ++e) {
        auto [u, v] = g.edge_list[e];
        bool labeled = r.lab[e] != EdgeLabel::Unset;
        if (ext_edge[e] && labeled)
            rep.fail("frame edge " + std::to_string(u) + "-" + std::to_string(v) + " is labeled");
        if (!ext_edge[e] && !labeled)
            rep.fail("interior edge " + std::to_string(u) + "-" + std::to_string(v) + " is unlabeled");
    }
    if (!rep.pass) return rep;

    std::vector<char> ext_vert = exterior_vertex_mask(g, fs);
    for (int v = 0; v < g.n; ++v) {
        if (g.corners.contains(v)) continue;
        if (ext_vert[v]) continue;  // only the four corners lie on the exterior of a proper graph
        std::vector<int> cats;
        for (int u : g.rot[v]) cats.push_back(edge_category(g, r, v, u));
        if (!cyclic_blocks_ok(cats)) {
            std::string msg = "vertex " + std::to_string(v) + " rotation violates the block pattern (";
            for (size_t i = 0; i < cats.size(); ++i) msg += (i ? "," : "") + std::to_string(cats[i]);
            rep.fail(msg + ")");
        }
    }
    auto corner_check = [&](int c, int want, const char* name) {
        for (int u : g.rot[c]) {
            if (ext_edge[g.edge_id(c, u)]) continue;
            int cat = edge_category(g, r, c, u);
            if (cat != want)
                rep.fail(std::string("corner ") + name + ": edge to " + std::to_string(u) +
                         " has category " + std::to_string(cat) + ", expected " + std::to_string(want));
        }
    };
    corner_check(g.corners.N, kT1In, "N");
    corner_check(g.corners.S, kT1Out, "S");
    corner_check(g.corners.W, kT2In, "W");
    corner_check(g.corners.E, kT2Out, "E");
    return rep;
}

/* Directed frame edges completing T1 into the south-to-north graph (which=1)
   or T2 into the east-to-west graph (which=2). */
inline std::vector<std::pair<int, int>> frame_arcs(const PlaneGraph& g, int which) {
    const Corners& c = g.corners;
    if (which == 1) return {{c.S, c.W}, {c.S, c.E}, {c.W, c.N}, {c.E, c.N}};
    return {{c.E, c.S}, {c.S, c.W}, {c.E, c.N}, {c.N, c.W}};
}

/* Out-neighbor lists of the directed graph T_which plus its frame arcs. */
inline std::vector<std::vector<int>> oriented_out_lists(const PlaneGraph& g, const Rel& r, int which) {
    std::vector<std::vector<int>> out(g.n);
    for (int e = 0; e < g.edge_count; ++e) {
        if (label_set(r.lab[e]) != which) continue;
        auto [lo, hi] = g.edge_list[e];
        if (directed_uv(g, r, lo, hi))
            out[lo].push_back(hi);
        else
            out[hi].push_back(lo);
    }
    for (auto [a, b] : frame_arcs(g, which)) out[a].push_back(b);
    return out;
}

inline bool is_acyclic(const std::vector<std::vector<int>>& out) {
    int n = (int)out.size();
    std::vector<int> indeg(n, 0);
    for (auto& l : out)
        for (int v : l) ++indeg[v];
    std::vector<int> stack;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) stack.push_back(v);
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (int u : out[v])
            if (--indeg[u] == 0) stack.push_back(u);
    }
    return seen == n;
}

/* The plane subgraph carrying T_which and the corresponding frame arcs,
   with rotations inherited from g.  Face tracing on it yields the faces of
   the directed graph. */
inline PlaneGraph oriented_plane_subgraph(const PlaneGraph& g, const Rel& r, int which) {
    auto arcs = frame_arcs(g, which);
    auto keep = [&](int a, int b) {
        int e = g.edge_id(a, b);
        if (label_set(r.lab[e]) == which) return true;
        for (auto [x, y] : arcs)
            if ((x == a && y == b) || (x == b && y == a)) return true;
        return false;
    };
    std::vector<std::vector<int>> rot(g.n);
    for (int v = 0; v < g.n; ++v)
        for (int u : g.rot[v])
            if (keep(v, u)) rot[v].push_back(u);
    PlaneGraph sub;
    sub.n = g.n;
    sub.rot = std::move(rot);
    sub.corners = g.corners;
    sub.labels = g.labels;
    sub.finalize();
    return sub;
}

/* A bounded face of one of the oriented subgraphs, split into its two
   source-to-sink sides.  For the south-to-north graph the ccw side is the
   east side of the face; for the east-to-west graph it is the north side. */
struct StFaceSides {
    int source = -1, sink = -1;
    std::vector<int> ccw_side;  // vertex path source..sink along the ccw cycle
    std::vector<int> cw_side;
};

inline StFaceSides split_face_sides(const PlaneGraph& g, const Rel& r, const PlaneGraph& sub,
                                    const Face& f, int which) {
    int k = (int)f.cycle.size();
    std::vector<char> fwd(k);
    for (int i = 0; i < k; ++i) {
        int a = f.cycle[i], b = f.cycle[(i + 1) % k];
        int dl = directed_label(g, r, a, b);
        bool forward;
        if (dl != 0) {
            forward = dl > 0;
        } else {
            // frame arc
            forward = false;
            for (auto [x, y] : frame_arcs(g, which))
                if (x == a && y == b) forward = true;
        }
        fwd[i] = forward;
    }
    StFaceSides s;
    int src_i = -1, sink_i = -1;
    for (int i = 0; i < k; ++i) {
        int prev = (i + k - 1) % k;
        if (fwd[i] && !fwd[prev]) {
            if (src_i != -1) throw std::logic_error("face has two sources");
            src_i = i;
        }
        if (!fwd[i] && fwd[prev]) {
            if (sink_i != -1) throw std::logic_error("face has two sinks");
            sink_i = i;
        }
    }
    if (src_i < 0 || sink_i < 0) throw std::logic_error("face of an oriented subgraph has no source/sink");
    s.source = f.cycle[src_i];
    s.sink = f.cycle[sink_i];
    for (int i = src_i;; i = (i + 1) % k) {
        s.ccw_side.push_back(f.cycle[i]);
        if (i == sink_i) break;
    }
    for (int i = sink_i;; i = (i + 1) % k) {
        s.cw_side.push_back(f.cycle[i]);
        if (i == src_i) break;
    }
    std::reverse(s.cw_side.begin(), s.cw_side.end());  // also source..sink
    (void)sub;
    return s;
}

/* One of the two oriented views of a labeling: the directed graph together
   with its bounded faces, each split into its two source-to-sink sides. */
struct OrientedSubgraph {
    int which = 0;  // 1 south-to-north, 2 east-to-west
    PlaneGraph sub;
    FaceSet faces;
    std::vector<StFaceSides> sides;        // for bounded faces, by position in bounded_ids
    std::vector<int> bounded_ids;          // face indices, exterior excluded
    std::vector<std::vector<int>> out;     // directed adjacency
};

inline OrientedSubgraph oriented_subgraph(const PlaneGraph& g, const Rel& r, int which) {
    OrientedSubgraph o;
    o.which = which;
    o.sub = oriented_plane_subgraph(g, r, which);
    o.faces = compute_faces(o.sub);
    for (int i = 0; i < (int)o.faces.faces.size(); ++i) {
        if (i == o.faces.exterior) continue;
        o.bounded_ids.push_back(i);
        o.sides.push_back(split_face_sides(g, r, o.sub, o.faces.faces[i], which));
    }
    o.out = oriented_out_lists(g, r, which);
    return o;
}

/* Answer plus, on failure, a face whose two sides both have three or more
   edges. */
struct SlantCheck {
    bool slant = true;
    int which = 0;                  // subgraph of the witness
    std::vector<int> witness_face;  // its vertex cycle
};

/* A valid labeling is slant when in both oriented subgraphs every bounded
   face has a side of at most two edges, i.e. some rectangle spans the whole
   corresponding segment of the layout. */
inline SlantCheck check_slant(const PlaneGraph& g, const Rel& r) {
    for (int which : {1, 2}) {
        OrientedSubgraph o = oriented_subgraph(g, r, which);
        for (size_t k = 0; k < o.sides.size(); ++k) {
            const StFaceSides& s = o.sides[k];
            size_t a = s.ccw_side.size() - 1, b = s.cw_side.size() - 1;
            if (std::min(a, b) > 2)
                return {false, which, o.faces.faces[o.bounded_ids[k]].cycle};
        }
    }
    return {};
}

inline bool is_slant(const PlaneGraph& g, const Rel& r) { return check_slant(g, r).slant; }

/* Length classes of the two unfinished sides of a face still open on a cut:
   counts clamped to 2, since only one-versus-more matters.  (2,2) means no
   completion can give the face a two-edge side. */
struct OpenFaceKind {
    int lower = 0, upper = 0;

    bool operator==(const OpenFaceKind&) const = default;
    bool dead() const { return lower >= 2 && upper >= 2; }
};

inline Json rel_to_json(const PlaneGraph& g, const Rel& r) {
    std::vector<int> order(g.edge_count);
    for (int e = 0; e < g.edge_count; ++e) order[e] = e;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.edge_list[a] < g.edge_list[b]; });
    Json out = Json::array();
    for (int e : order) {
        if (r.lab[e] == EdgeLabel::Unset) continue;
        auto [u, v] = g.edge_list[e];
        Json je;
        je["u"] = u;
        je["v"] = v;
        je["set"] = label_set(r.lab[e]) == 1 ? "T1" : "T2";
        je["dir"] = directed_uv(g, r, u, v) ? "uv" : "vu";
        out.push_back(je);
    }
    return out;
}

inline Rel rel_from_json(const PlaneGraph& g, const Json& j) {
    if (!j.is_array()) throw GraphError("labeling json: expected an array");
    Rel r = make_empty_rel(g);
    for (const Json& je : j) {
        int u = je.at("u").get<int>();
        int v = je.at("v").get<int>();
        if (u < 0 || u >= g.n || v < 0 || v >= g.n || !g.adjacent(u, v))
            throw GraphError("labeling json: no edge " + std::to_string(u) + "-" + std::to_string(v));
        std::string set = je.at("set").get<std::string>();
        std::string dir = je.at("dir").get<std::string>();
        if ((set != "T1" && set != "T2") || (dir != "uv" && dir != "vu"))
            throw GraphError("labeling json: bad set/dir on edge " + std::to_string(u) + "-" +
                             std::to_string(v));
        int e = g.edge_id(u, v);
        if (r.lab[e] != EdgeLabel::Unset) throw GraphError("labeling json: duplicate edge entry");
        int a = dir == "uv" ? u : v, b = dir == "uv" ? v : u;
        assign_label(r, g, a, b, set == "T1" ? 1 : 2);
    }
    return r;
}

}  // namespace aul
