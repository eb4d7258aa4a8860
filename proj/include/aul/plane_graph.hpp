#pragma once
// Plane graphs with an explicit rotation system: face traversal, corner
// bookkeeping, extension by the four boundary vertices, and the validity
// checks needed before any labeling work starts.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace aul {

using Json = nlohmann::json;

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Designated exterior vertices. N/W/S/E name the boundary rectangle each one
   turns into in a layout.  All -1 on a graph that has not been extended yet. */
struct Corners {
    int N = -1, W = -1, S = -1, E = -1;

    std::array<int, 4> as_array() const { return {N, W, S, E}; }
    bool contains(int v) const { return v == N || v == W || v == S || v == E; }
    bool designated() const { return N >= 0 && W >= 0 && S >= 0 && E >= 0; }
};

struct PlaneGraph {
    int n = 0;
    std::vector<std::vector<int>> rot;  // ccw neighbor lists
    Corners corners;
    std::vector<std::string> labels;

    // derived, filled by finalize()
    int edge_count = 0;
    std::vector<std::pair<int, int>> edge_list;  // undirected, lo < hi
    std::vector<int> eid_flat;                   // n*n -> undirected edge id or -1
    std::vector<int> rotpos_flat;                // n*n -> index of u in rot[v] or -1

    static PlaneGraph build(int n, std::vector<std::vector<int>> rot, Corners corners,
                            std::vector<std::string> labels = {}) {
        PlaneGraph g;
        g.n = n;
        g.rot = std::move(rot);
        g.corners = corners;
        g.labels = std::move(labels);
        g.finalize();
        return g;
    }

    void finalize() {
        if ((int)rot.size() != n) throw GraphError("rotation table size mismatch");
        if (labels.empty()) {
            labels.resize(n);
            for (int v = 0; v < n; ++v) labels[v] = std::to_string(v);
        }
        bool any = false, all = true;
        for (int c : corners.as_array()) {
            if (c >= n) throw GraphError("corner id out of range");
            if (c >= 0)
                any = true;
            else
                all = false;
        }
        if (any && !all) throw GraphError("missing corner designation");
        eid_flat.assign((size_t)n * n, -1);
        rotpos_flat.assign((size_t)n * n, -1);
        edge_list.clear();
        for (int v = 0; v < n; ++v) {
            for (int i = 0; i < (int)rot[v].size(); ++i) {
                int u = rot[v][i];
                if (u < 0 || u >= n || u == v) throw GraphError("bad neighbor id in rotation");
                if (rotpos_flat[(size_t)v * n + u] != -1)
                    throw GraphError("duplicate neighbor in rotation of vertex " + std::to_string(v));
                rotpos_flat[(size_t)v * n + u] = i;
            }
        }
        for (int v = 0; v < n; ++v)
            for (int u : rot[v]) {
                if (rotpos_flat[(size_t)u * n + v] == -1)
                    throw GraphError("asymmetric adjacency between " + std::to_string(v) + " and " +
                                     std::to_string(u));
                if (v < u) {
                    eid_flat[(size_t)v * n + u] = eid_flat[(size_t)u * n + v] = (int)edge_list.size();
                    edge_list.push_back({v, u});
                }
            }
        edge_count = (int)edge_list.size();
    }

    int degree(int v) const { return (int)rot[v].size(); }
    bool adjacent(int u, int v) const { return eid_flat[(size_t)u * n + v] >= 0; }
    int edge_id(int u, int v) const { return eid_flat[(size_t)u * n + v]; }
    int rot_pos(int v, int u) const { return rotpos_flat[(size_t)v * n + u]; }

    // neighbor following u counterclockwise around v
    int next_ccw(int v, int u) const {
        int i = rot_pos(v, u);
        return rot[v][(i + 1) % rot[v].size()];
    }
    int prev_ccw(int v, int u) const {
        int i = rot_pos(v, u);
        return rot[v][(i + rot[v].size() - 1) % rot[v].size()];
    }

    /* Neighbors of v from a to b inclusive, walking clockwise (resp. ccw).
       Both a and b must be neighbors of v. */
    std::vector<int> arc_cw(int v, int a, int b) const {
        std::vector<int> out{a};
        int x = a;
        while (x != b) {
            x = prev_ccw(v, x);
            out.push_back(x);
            if ((int)out.size() > degree(v) + 1) throw GraphError("arc walk did not close");
        }
        return out;
    }
    std::vector<int> arc_ccw(int v, int a, int b) const {
        std::vector<int> out{a};
        int x = a;
        while (x != b) {
            x = next_ccw(v, x);
            out.push_back(x);
            if ((int)out.size() > degree(v) + 1) throw GraphError("arc walk did not close");
        }
        return out;
    }
};

struct Face {
    std::vector<int> cycle;  // vertex cycle; interior faces ccw, exterior cw
    bool exterior = false;
};

struct FaceSet {
    std::vector<Face> faces;
    std::vector<int> face_of_flat;  // directed (u,v) -> face index
    int exterior = -1;
    int n = 0;

    int face_of(int u, int v) const { return face_of_flat[(size_t)u * n + v]; }
};

/* Trace all faces of the rotation system.  With ccw rotations the walk
   "arrive at v from u, continue to prev_ccw(v,u)" traces every bounded face
   counterclockwise and the unbounded face clockwise.  No face is marked
   exterior yet. */
inline FaceSet trace_faces(const PlaneGraph& g) {
    FaceSet fs;
    fs.n = g.n;
    fs.face_of_flat.assign((size_t)g.n * g.n, -1);
    for (int v = 0; v < g.n; ++v) {
        for (int u : g.rot[v]) {
            if (fs.face_of_flat[(size_t)v * g.n + u] != -1) continue;
            int id = (int)fs.faces.size();
            Face f;
            int a = v, b = u;
            while (true) {
                fs.face_of_flat[(size_t)a * g.n + b] = id;
                f.cycle.push_back(a);
                int c = g.prev_ccw(b, a);
                a = b;
                b = c;
                if (a == v && b == u) break;
                if ((int)f.cycle.size() > 4 * g.edge_count + 4)
                    throw GraphError("face walk did not close");
            }
            fs.faces.push_back(std::move(f));
        }
    }
    long long euler = (long long)g.n - g.edge_count + (long long)fs.faces.size();
    if (euler != 2)
        throw GraphError("rotation system not planar-consistent (V-E+F=" + std::to_string(euler) + ")");
    return fs;
}

/* True iff the corner vertices among cycle, consecutive repeats collapsed,
   read exactly a,b,c,d cyclically (each once). */
inline bool cycle_visits_in_order(const std::vector<int>& cycle, std::array<int, 4> want) {
    std::vector<int> seq;
    for (int v : cycle)
        if (v == want[0] || v == want[1] || v == want[2] || v == want[3]) seq.push_back(v);
    std::vector<int> dedup;
    for (int v : seq)
        if (dedup.empty() || dedup.back() != v) dedup.push_back(v);
    while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
    if (dedup.size() != 4) return false;
    int start = -1;
    for (int i = 0; i < 4; ++i)
        if (dedup[i] == want[0]) start = i;
    if (start < 0) return false;
    for (int i = 0; i < 4; ++i)
        if (dedup[(start + i) % 4] != want[i]) return false;
    return true;
}

/* Faces plus the exterior, identified as the unique face visiting the four
   corners in N,E,S,W cyclic order (the clockwise reading of the unbounded
   face). */
inline FaceSet compute_faces(const PlaneGraph& g) {
    if (!g.corners.designated()) throw GraphError("missing corner designation");
    FaceSet fs = trace_faces(g);
    std::array<int, 4> want{g.corners.N, g.corners.E, g.corners.S, g.corners.W};
    for (int i = 0; i < (int)fs.faces.size(); ++i) {
        if (cycle_visits_in_order(fs.faces[i].cycle, want)) {
            if (fs.exterior != -1) throw GraphError("ambiguous exterior face");
            fs.exterior = i;
            fs.faces[i].exterior = true;
        }
    }
    if (fs.exterior == -1) throw GraphError("no face visits the corners in exterior order");
    return fs;
}

inline std::vector<char> exterior_edge_mask(const PlaneGraph& g, const FaceSet& fs) {
    std::vector<char> mask(g.edge_count, 0);
    const Face& ext = fs.faces[fs.exterior];
    int k = (int)ext.cycle.size();
    for (int i = 0; i < k; ++i) {
        int u = ext.cycle[i], v = ext.cycle[(i + 1) % k];
        mask[g.edge_id(u, v)] = 1;
    }
    return mask;
}

inline std::vector<char> exterior_vertex_mask(const PlaneGraph& g, const FaceSet& fs) {
    std::vector<char> mask(g.n, 0);
    for (int v : fs.faces[fs.exterior].cycle) mask[v] = 1;
    return mask;
}

struct ValidationReport {
    bool pass = true;
    std::vector<std::string> violations;

    void fail(std::string msg) {
        pass = false;
        violations.push_back(std::move(msg));
    }
};

/* Triangles that are not faces.  Listed with ascending vertex ids. */
inline std::vector<std::array<int, 3>> find_separating_triangles(const PlaneGraph& g) {
    std::optional<FaceSet> fs;
    try {
        fs = compute_faces(g);
    } catch (const GraphError&) {
        fs.reset();
    }
    auto is_face_triangle = [&](std::array<int, 3> t) {
        if (!fs) return false;
        for (const Face& f : fs->faces) {
            if (f.cycle.size() != 3) continue;
            std::array<int, 3> c{f.cycle[0], f.cycle[1], f.cycle[2]};
            std::sort(c.begin(), c.end());
            if (c == t) return true;
        }
        return false;
    };
    std::vector<std::array<int, 3>> out;
    for (auto [u, v] : g.edge_list) {
        for (int w : g.rot[u]) {
            if (w <= v || !g.adjacent(v, w)) continue;
            // u < v < w by construction of edge_list plus the w filter
            std::array<int, 3> t{u, v, w};
            if (!is_face_triangle(t)) out.push_back(t);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/* A proper triangular plane graph: every interior face a triangle, exterior
   face a quadrangle through the four corners, and no separating triangle. */
inline ValidationReport validate_proper_triangular(const PlaneGraph& g) {
    ValidationReport rep;
    std::optional<FaceSet> fs;
    try {
        fs = compute_faces(g);
    } catch (const GraphError& e) {
        rep.fail(e.what());
        return rep;
    }
    for (int i = 0; i < (int)fs->faces.size(); ++i) {
        if (i == fs->exterior) continue;
        if (fs->faces[i].cycle.size() != 3) {
            std::string msg = "interior face of length " + std::to_string(fs->faces[i].cycle.size()) + " (";
            for (size_t j = 0; j < fs->faces[i].cycle.size(); ++j)
                msg += (j ? "," : "") + std::to_string(fs->faces[i].cycle[j]);
            rep.fail(msg + ") is not a triangle");
        }
    }
    const Face& ext = fs->faces[fs->exterior];
    if (ext.cycle.size() != 4)
        rep.fail("exterior face has length " + std::to_string(ext.cycle.size()) + ", expected a quadrangle");
    for (auto t : find_separating_triangles(g))
        rep.fail("separating triangle (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                 std::to_string(t[2]) + ")");
    return rep;
}

/* Surround g with the four boundary vertices.  a,b,c,d are the exterior
   vertices destined for the SW, NW, NE and SE corners, in clockwise order
   along the exterior face.  The new vertices take ids n..n+3 in the order
   N, W, S, E and become the corners of the result. */
inline PlaneGraph extend_graph(const PlaneGraph& g, int a, int b, int c, int d) {
    if (a == b || a == c || a == d || b == c || b == d || c == d)
        throw GraphError("corner vertices must be distinct");
    for (int v : {a, b, c, d})
        if (v < 0 || v >= g.n) throw GraphError("corner vertex out of range");
    /* The rotation system alone does not say which face is unbounded; the
       corner choice does: it is the face reading a,b,c,d clockwise. */
    FaceSet fs = trace_faces(g);
    int ext_id = -1;
    for (int i = 0; i < (int)fs.faces.size(); ++i) {
        if (cycle_visits_in_order(fs.faces[i].cycle, {a, b, c, d})) {
            if (ext_id != -1) throw GraphError("corner choice does not pick a unique exterior face");
            ext_id = i;
        }
    }
    if (ext_id == -1) throw GraphError("corners are not on a common face in the given order");
    const Face& ext = fs.faces[ext_id];  // read clockwise when declared unbounded
    int k = (int)ext.cycle.size();
    auto find_on_boundary = [&](int v) {
        for (int i = 0; i < k; ++i)
            if (ext.cycle[i] == v) return i;
        throw GraphError("designated corner " + std::to_string(v) + " is not on the exterior face");
    };
    int ia = find_on_boundary(a);

    int vN = g.n, vW = g.n + 1, vS = g.n + 2, vE = g.n + 3;
    std::vector<std::vector<int>> rot = g.rot;
    rot.resize(g.n + 4);

    // walk the exterior clockwise from a and cut it at the corners
    std::vector<int> walk(k);
    for (int i = 0; i < k; ++i) walk[i] = ext.cycle[(ia + i) % k];
    auto cut_at = [&](int v, int from) {
        for (int i = from; i < k; ++i)
            if (walk[i] == v) return i;
        throw GraphError("corners are not in clockwise order on the exterior face");
    };
    int ib = cut_at(b, 1), ic = cut_at(c, ib + 1), id_ = cut_at(d, ic + 1);

    auto span = [&](int from, int to) {  // inclusive, wrapping at the end
        std::vector<int> s;
        for (int i = from; i <= to; ++i) s.push_back(walk[i % k]);
        return s;
    };
    std::vector<int> span_ab = span(0, ib);        // west side, south to north
    std::vector<int> span_bc = span(ib, ic);       // north side, west to east
    std::vector<int> span_cd = span(ic, id_);      // east side, north to south
    std::vector<int> span_da = span(id_, k);       // south side, east to west

    auto check_span = [&](const std::vector<int>& sp) {
        for (size_t i = 1; i + 1 < sp.size(); ++i)
            if (sp[i] == sp[0] || sp[i] == sp.back())
                throw GraphError("exterior span revisits a corner; graph not extendable");
    };
    check_span(span_ab);
    check_span(span_bc);
    check_span(span_cd);
    check_span(span_da);

    // rotations of the new vertices (ccw)
    rot[vW] = {vS};
    rot[vW].insert(rot[vW].end(), span_ab.begin(), span_ab.end());
    rot[vW].push_back(vN);
    rot[vN] = {vW};
    rot[vN].insert(rot[vN].end(), span_bc.begin(), span_bc.end());
    rot[vN].push_back(vE);
    rot[vE] = {vN};
    rot[vE].insert(rot[vE].end(), span_cd.begin(), span_cd.end());
    rot[vE].push_back(vS);
    rot[vS] = {vE};
    rot[vS].insert(rot[vS].end(), span_da.begin(), span_da.end());
    rot[vS].push_back(vW);

    /* Each boundary vertex gains its new neighbors in the exterior gap, which
       sits between its clockwise successor and predecessor on the boundary.
       In a ccw rotation the insertion point is right after the successor. */
    auto insert_after_succ = [&](int v, int succ, std::vector<int> add) {
        auto& r = rot[v];
        auto it = std::find(r.begin(), r.end(), succ);
        if (it == r.end()) throw GraphError("exterior walk inconsistent with rotations");
        r.insert(it + 1, add.begin(), add.end());
    };
    for (int i = 0; i < k; ++i) {
        int v = walk[i];
        int succ = walk[(i + 1) % k];  // clockwise successor
        std::vector<int> add;
        if (v == a) add = {vW, vS};
        else if (v == b) add = {vN, vW};
        else if (v == c) add = {vE, vN};
        else if (v == d) add = {vS, vE};
        else if (i < ib) add = {vW};
        else if (i < ic) add = {vN};
        else if (i < id_) add = {vE};
        else add = {vS};
        insert_after_succ(v, succ, add);
    }

    std::vector<std::string> labels = g.labels;
    labels.resize(g.n + 4);
    labels[vN] = "N";
    labels[vW] = "W";
    labels[vS] = "S";
    labels[vE] = "E";
    Corners corners{vN, vW, vS, vE};
    return PlaneGraph::build(g.n + 4, std::move(rot), corners, std::move(labels));
}

/* Rebuild a plane graph from an explicit face list.  Interior faces are given
   as ccw vertex cycles, the exterior as a cw cycle.  Rotations are recovered
   from the rule that in a face (..., w, u, v, ...) vertex w follows v in the
   ccw order around u. */
inline PlaneGraph plane_graph_from_faces(int n, const std::vector<std::vector<int>>& interior,
                                         const std::vector<int>& exterior_cw, Corners corners,
                                         std::vector<std::string> labels = {}) {
    std::vector<std::vector<std::pair<int, int>>> succ(n);  // at u: v -> w
    auto feed = [&](const std::vector<int>& cyc) {
        int k = (int)cyc.size();
        for (int i = 0; i < k; ++i) {
            int w = cyc[i], u = cyc[(i + 1) % k], v = cyc[(i + 2) % k];
            for (auto& [key, val] : succ[u])
                if (key == v) throw GraphError("face list traverses an edge twice in one direction");
            succ[u].push_back({v, w});
        }
    };
    for (auto& f : interior) feed(f);
    feed(exterior_cw);

    std::vector<std::vector<int>> rot(n);
    for (int u = 0; u < n; ++u) {
        if (succ[u].empty()) throw GraphError("isolated vertex in face list");
        int start = succ[u][0].first;
        int x = start;
        do {
            rot[u].push_back(x);
            int nx = -1;
            for (auto& [key, val] : succ[u])
                if (key == x) nx = val;
            if (nx == -1) throw GraphError("face list is not closed around vertex " + std::to_string(u));
            x = nx;
            if ((int)rot[u].size() > (int)succ[u].size()) throw GraphError("face list rotation did not close");
        } while (x != start);
        if (rot[u].size() != succ[u].size()) throw GraphError("face list leaves extra corners at a vertex");
    }
    return PlaneGraph::build(n, std::move(rot), corners, std::move(labels));
}

inline Json graph_to_json(const PlaneGraph& g) {
    Json verts = Json::array();
    for (int v = 0; v < g.n; ++v) {
        Json jv;
        jv["id"] = v;
        if (!g.labels[v].empty() && g.labels[v] != std::to_string(v)) jv["label"] = g.labels[v];
        jv["neighbors_ccw"] = g.rot[v];
        verts.push_back(jv);
    }
    Json j;
    j["vertices"] = verts;
    j["corners"] = {{"N", g.corners.N}, {"W", g.corners.W}, {"S", g.corners.S}, {"E", g.corners.E}};
    return j;
}

inline PlaneGraph graph_from_json(const Json& j) {
    if (!j.contains("vertices") || !j["vertices"].is_array()) throw GraphError("graph json: missing vertices");
    if (!j.contains("corners")) throw GraphError("missing corner designation");
    int n = (int)j["vertices"].size();
    std::vector<std::vector<int>> rot(n);
    std::vector<std::string> labels(n);
    std::vector<char> seen(n, 0);
    for (const Json& jv : j["vertices"]) {
        int id = jv.at("id").get<int>();
        if (id < 0 || id >= n) throw GraphError("graph json: vertex ids must be dense 0..V-1");
        if (seen[id]) throw GraphError("graph json: duplicate vertex id " + std::to_string(id));
        seen[id] = 1;
        rot[id] = jv.at("neighbors_ccw").get<std::vector<int>>();
        labels[id] = jv.contains("label") ? jv["label"].get<std::string>() : std::to_string(id);
    }
    const Json& jc = j["corners"];
    Corners c;
    c.N = jc.at("N").get<int>();
    c.W = jc.at("W").get<int>();
    c.S = jc.at("S").get<int>();
    c.E = jc.at("E").get<int>();
    return PlaneGraph::build(n, std::move(rot), c, std::move(labels));
}

}  // namespace aul
