#pragma once
// Building blocks for growing a labeling face by face: fans and mirror-fans,
// the growth frontier (cut) with per-edge bookkeeping, stitching, and the
// pairing predicates that decide which growth step may follow which.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "rel.hpp"

namespace aul {

// ---------------------------------------------------------------- path bits

inline std::pair<int, int> path_first_edge(const std::vector<int>& p) { return {p[0], p[1]}; }
inline std::pair<int, int> path_last_edge(const std::vector<int>& p) { return {p[p.size() - 2], p.back()}; }

inline bool path_has_vertex(const std::vector<int>& p, int v) {
    return std::find(p.begin(), p.end(), v) != p.end();
}

inline bool path_has_edge(const std::vector<int>& p, int a, int b) {
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] == a && p[i + 1] == b) return true;
    return false;
}

/* needle appears in haystack as a contiguous run, same direction */
inline bool path_contains_subpath(const std::vector<int>& haystack, const std::vector<int>& needle) {
    if (needle.size() > haystack.size()) return false;
    for (size_t i = 0; i + needle.size() <= haystack.size(); ++i)
        if (std::equal(needle.begin(), needle.end(), haystack.begin() + i)) return true;
    return false;
}

/* Inclusive section of p from vertex a to vertex b; a may not come after b. */
inline std::vector<int> path_section(const std::vector<int>& p, int a, int b) {
    auto ia = std::find(p.begin(), p.end(), a);
    auto ib = std::find(p.begin(), p.end(), b);
    if (ia == p.end() || ib == p.end() || ib < ia) throw GraphError("path_section: bad endpoints");
    return {ia, ib + 1};
}

// ------------------------------------------------------------------ gadgets

enum class GadgetKind : std::int8_t { Fan, MirrorFan };

/* One growth step, spanned between three anchor vertices.  Both boundaries
   run from l to h; alpha is the front (the new frontier once stitched), beta
   the back (what it consumes).  A fan has its apex m on the back, a
   mirror-fan on the front.  gamma holds the inner arcs with their east-west
   directions: away from a fan's apex, into a mirror-fan's. */
struct Gadget {
    GadgetKind kind = GadgetKind::Fan;
    int l = -1, m = -1, h = -1;
    std::vector<int> alpha;
    std::vector<int> beta;
    std::vector<std::pair<int, int>> gamma;

    bool operator==(const Gadget& o) const {
        return kind == o.kind && l == o.l && m == o.m && h == o.h;
    }
};

namespace detail {

/* Neighbor walk around m from l to h, cw or ccw.  Usable as a gadget boundary
   only when it forms a chord-free path: consecutive vertices adjacent and no
   other pair, (l,h) itself included.  Nullopt otherwise. */
inline std::optional<std::vector<int>> wedge_path(const PlaneGraph& g, int m, int l, int h, bool cw) {
    if (l == h || l == m || h == m) return std::nullopt;
    if (!g.adjacent(m, l) || !g.adjacent(m, h)) return std::nullopt;
    if (g.adjacent(l, h)) return std::nullopt;
    std::vector<int> p = cw ? g.arc_cw(m, l, h) : g.arc_ccw(m, l, h);
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.adjacent(p[i], p[i + 1])) return std::nullopt;
    for (size_t i = 0; i + 2 < p.size(); ++i)
        for (size_t j = i + 2; j < p.size(); ++j)
            if (g.adjacent(p[i], p[j])) return std::nullopt;
    return p;
}

}  // namespace detail

inline std::optional<Gadget> make_fan(const PlaneGraph& g, int l, int m, int h) {
    auto p = detail::wedge_path(g, m, l, h, true);
    if (!p || p->size() < 3) return std::nullopt;
    Gadget gd;
    gd.kind = GadgetKind::Fan;
    gd.l = l;
    gd.m = m;
    gd.h = h;
    gd.alpha = std::move(*p);
    gd.beta = {l, m, h};
    for (size_t i = 1; i + 1 < gd.alpha.size(); ++i) gd.gamma.push_back({m, gd.alpha[i]});
    return gd;
}

inline std::optional<Gadget> make_mirror_fan(const PlaneGraph& g, int l, int m, int h) {
    auto p = detail::wedge_path(g, m, l, h, false);
    if (!p || p->size() < 3) return std::nullopt;
    Gadget gd;
    gd.kind = GadgetKind::MirrorFan;
    gd.l = l;
    gd.m = m;
    gd.h = h;
    gd.alpha = {l, m, h};
    gd.beta = std::move(*p);
    for (size_t i = 1; i + 1 < gd.beta.size(); ++i) gd.gamma.push_back({gd.beta[i], m});
    return gd;
}

/* The seed step: growth always starts by fanning around the east corner. */
inline std::optional<Gadget> initial_fan(const PlaneGraph& g) {
    return make_fan(g, g.corners.S, g.corners.E, g.corners.N);
}

/* The closing step: the mirror-fan around the west corner. */
inline std::optional<Gadget> final_mirror_fan(const PlaneGraph& g) {
    return make_mirror_fan(g, g.corners.S, g.corners.W, g.corners.N);
}

inline bool is_initial_fan(const PlaneGraph& g, const Gadget& gd) {
    return gd.kind == GadgetKind::Fan && gd.l == g.corners.S && gd.m == g.corners.E &&
           gd.h == g.corners.N;
}

inline bool is_final_mirror_fan(const PlaneGraph& g, const Gadget& gd) {
    return gd.kind == GadgetKind::MirrorFan && gd.l == g.corners.S && gd.m == g.corners.W &&
           gd.h == g.corners.N;
}

/* Worst-case gadget count, summed over possible apex vertices. */
inline long long gadget_count_bound(const PlaneGraph& g) {
    long long total = 0;
    for (int v = 0; v < g.n; ++v) {
        long long d = g.degree(v);
        total += std::max<long long>(0, 2 * d * (d - 3));
    }
    return total;
}

/* All gadgets, one entry each, in rotation order per apex.  A shape with a
   single inner arc reads as either kind and is listed once, as the fan; the
   final mirror-fan keeps its own entry even then, because growth has to
   recognize the closing step by that identity. */
inline std::vector<Gadget> enumerate_gadgets(const PlaneGraph& g) {
    /* A fan whose wedge holds a single vertex w is the same directed labeled
       subgraph as the mirror with apex w, so each such shape is emitted once,
       in fan form.  The one exception is the closing shape over the west
       corner: it is emitted in mirror form so the final stitch is always
       present under its own name. */
    const Corners& c = g.corners;
    std::vector<Gadget> out;
    for (int m = 0; m < g.n; ++m)
        for (int l : g.rot[m])
            for (int h : g.rot[m]) {
                if (l == h) continue;
                if (auto f = make_fan(g, l, m, h)) {
                    bool closer_twin = f->alpha.size() == 3 && f->alpha[0] == c.S &&
                                       f->alpha[1] == c.W && f->alpha[2] == c.N;
                    if (!closer_twin) out.push_back(std::move(*f));
                }
                if (auto mf = make_mirror_fan(g, l, m, h))
                    if (mf->beta.size() >= 4 || is_final_mirror_fan(g, *mf))
                        out.push_back(std::move(*mf));
            }
    return out;
}

// ------------------------------------------------------- corner constraints

/* The four outer rectangle edges; these never carry a label. */
inline bool is_frame_edge(const PlaneGraph& g, int u, int v) {
    const Corners& c = g.corners;
    auto is = [&](int a, int b) { return (u == a && v == b) || (u == b && v == a); };
    return is(c.S, c.W) || is(c.W, c.N) || is(c.S, c.E) || is(c.E, c.N);
}

/* Whether labeling the arc a->b with the given set respects the fixed corner
   environments: everything at N enters rising, leaves S rising, enters W
   east-west, leaves E east-west. */
inline bool corner_admits(const PlaneGraph& g, int a, int b, int set) {
    const Corners& c = g.corners;
    for (int v : {a, b}) {
        if (v == c.N && !(set == 1 && b == v)) return false;
        if (v == c.S && !(set == 1 && a == v)) return false;
        if (v == c.W && !(set == 2 && b == v)) return false;
        if (v == c.E && !(set == 2 && a == v)) return false;
    }
    return true;
}

/* Every edge the gadget would label is admissible at the corners.  Gadgets
   failing this can never take part in building a labeling; search skips them
   up front.  Frame edges are exempt (never labeled). */
inline bool gadget_respects_corners(const PlaneGraph& g, const Gadget& gd) {
    for (size_t i = 0; i + 1 < gd.alpha.size(); ++i)
        if (!is_frame_edge(g, gd.alpha[i], gd.alpha[i + 1]) &&
            !corner_admits(g, gd.alpha[i], gd.alpha[i + 1], 1))
            return false;
    for (size_t i = 0; i + 1 < gd.beta.size(); ++i)
        if (!is_frame_edge(g, gd.beta[i], gd.beta[i + 1]) &&
            !corner_admits(g, gd.beta[i], gd.beta[i + 1], 1))
            return false;
    for (auto [a, b] : gd.gamma)
        if (!corner_admits(g, a, b, 2)) return false;
    return true;
}

/* The coarser filter used by the admission loop: the front may not pass
   through the south or north pole.  Implied by gadget_respects_corners. */
inline bool alpha_avoids_poles(const PlaneGraph& g, const Gadget& gd) {
    for (size_t i = 1; i + 1 < gd.alpha.size(); ++i)
        if (gd.alpha[i] == g.corners.S || gd.alpha[i] == g.corners.N) return false;
    return true;
}

// ----------------------------------------------------------------- pairings

/* gl's whole back-boundary rides on gr's front, same direction.  Stitching
   gl when gr built that stretch of the frontier is always safe. */
inline bool is_g_pair(const Gadget& gl, const Gadget& gr) {
    return path_contains_subpath(gr.alpha, gl.beta);
}

/* Stitching gd right after gp stretches the face at the shared frontier end
   past both bounds: gd's back begins on the last front edge of gp, or ends on
   its first. */
inline bool is_forbidden_pair(const Gadget& gd, const Gadget& gp) {
    return (path_has_vertex(gp.alpha, gd.l) && path_first_edge(gd.beta) == path_last_edge(gp.alpha)) ||
           (path_has_vertex(gp.alpha, gd.h) && path_last_edge(gd.beta) == path_first_edge(gp.alpha));
}

/* go's back begins on gb's front and ends on gu's front, with neither
   attachment forbidden.  Only mirror-fans ever need two supporters; a fan's
   two-edge back either rides one front or clashes. */
inline bool is_m_triple(const Gadget& gb, const Gadget& go, const Gadget& gu) {
    if (go.kind != GadgetKind::MirrorFan) return false;
    auto [a1, b1] = path_first_edge(go.beta);
    auto [a2, b2] = path_last_edge(go.beta);
    return path_has_edge(gb.alpha, a1, b1) && path_has_edge(gu.alpha, a2, b2) &&
           !is_forbidden_pair(go, gb) && !is_forbidden_pair(go, gu);
}

// -------------------------------------------------------------- connections

enum class ConnectionKind : std::int8_t { GPair, MTriple };

/* A pairing that justifies admitting a gadget: gl riding gr, or gb and gu
   each taking one end of go's back.  Members are indices into a gadget
   inventory; alpha caches the combined front. */
struct Connection {
    ConnectionKind kind = ConnectionKind::GPair;
    int gl = -1, gr = -1;
    int gb = -1, go = -1, gu = -1;
    std::vector<int> alpha;
    /* Pre-admitted boundary pairing of a carved-out region.  Never pocket
       checked: its own pocket is the region itself, so it joins back
       boundaries split into its contiguous stretches instead. */
    bool seeded = false;

    bool operator==(const Connection& o) const {
        return kind == o.kind && gl == o.gl && gr == o.gr && gb == o.gb && go == o.go &&
               gu == o.gu;
    }
    std::vector<int> members() const {
        if (kind == ConnectionKind::GPair) return {gl, gr};
        return {gb, go, gu};
    }
    /* the gadget the connection admits */
    int subject() const { return kind == ConnectionKind::GPair ? gl : go; }
};

/* Combined front of a pair: gr's front with the ridden stretch replaced by
   gl's front. */
inline Connection make_g_pair_connection(const std::vector<Gadget>& inv, int gl, int gr) {
    const Gadget& L = inv[gl];
    const Gadget& R = inv[gr];
    Connection c;
    c.kind = ConnectionKind::GPair;
    c.gl = gl;
    c.gr = gr;
    c.alpha = path_section(R.alpha, R.l, L.l);
    c.alpha.insert(c.alpha.end(), L.alpha.begin() + 1, L.alpha.end());
    std::vector<int> tail = path_section(R.alpha, L.h, R.h);
    c.alpha.insert(c.alpha.end(), tail.begin() + 1, tail.end());
    return c;
}

/* Combined front of a triple: gb's front up to go's low anchor, go's front,
   then gu's front from go's high anchor. */
inline Connection make_m_triple_connection(const std::vector<Gadget>& inv, int gb, int go, int gu) {
    const Gadget& B = inv[gb];
    const Gadget& O = inv[go];
    const Gadget& U = inv[gu];
    Connection c;
    c.kind = ConnectionKind::MTriple;
    c.gb = gb;
    c.go = go;
    c.gu = gu;
    c.alpha = path_section(B.alpha, B.l, O.l);
    c.alpha.insert(c.alpha.end(), O.alpha.begin() + 1, O.alpha.end());
    std::vector<int> tail = path_section(U.alpha, O.h, U.h);
    c.alpha.insert(c.alpha.end(), tail.begin() + 1, tail.end());
    return c;
}

// --------------------------------------------------------------------- cuts

enum : std::int8_t { kAlphaFirst = 0, kAlphaMiddle = 1, kAlphaLast = 2 };

/* Side classes of the unfinished face east of a frontier edge, read off the
   edge's position on the front that created it (counts clamped at 2). */
inline OpenFaceKind classify_open_face(GadgetKind kind, std::int8_t pos) {
    (void)kind;  // the map happens to agree for both kinds
    if (pos == kAlphaFirst) return {1, 2};
    if (pos == kAlphaLast) return {2, 1};
    return {1, 1};
}

struct CutEdge {
    int creator = -1;  // caller-chosen id of the stitch that made this edge; -1 initially
    std::int8_t pos = kAlphaFirst;
    OpenFaceKind face{1, 1};
};

/* Growth frontier: a simple vertex path from the south to the north corner.
   edges[i] spans verts[i] -> verts[i+1].  gaps lists vertices an optimistic
   admission skipped over; nothing covering them may be admitted later. */
struct Cut {
    std::vector<int> verts;
    std::vector<CutEdge> edges;
    std::vector<int> gaps;
};

inline Cut initial_cut(const PlaneGraph& g) {
    Cut c;
    c.verts = {g.corners.S, g.corners.E, g.corners.N};
    c.edges.assign(2, CutEdge{});
    return c;
}

inline bool cut_is_final(const PlaneGraph& g, const Cut& c) {
    return c.verts == std::vector<int>{g.corners.S, g.corners.W, g.corners.N};
}

/* Start index of gd's back-boundary on the cut, or -1 if absent. */
inline int beta_position(const Cut& c, const Gadget& gd) {
    if (gd.beta.size() > c.verts.size()) return -1;
    for (size_t i = 0; i + gd.beta.size() <= c.verts.size(); ++i)
        if (std::equal(gd.beta.begin(), gd.beta.end(), c.verts.begin() + i))
            return static_cast<int>(i);
    return -1;
}

inline bool suitable(const Cut& c, const Gadget& gd) { return beta_position(c, gd) >= 0; }

/* No interior front vertex may sit on the cut (the endpoints always do). */
inline bool alpha_clear_of_cut(const Cut& c, const Gadget& gd) {
    for (size_t i = 1; i + 1 < gd.alpha.size(); ++i)
        if (path_has_vertex(c.verts, gd.alpha[i])) return false;
    return true;
}

/* Reroute the cut through gd's front.  New edges carry their position on the
   front and the matching face classes; the initial fan's faces close on the
   east frame arcs immediately, so its edges carry (1,1) instead. */
inline Cut stitch(const PlaneGraph& g, const Cut& c, const Gadget& gd, int creator = -1) {
    int i = beta_position(c, gd);
    if (i < 0) throw GraphError("stitch: back-boundary not on the cut");
    if (!alpha_clear_of_cut(c, gd)) throw GraphError("stitch: front touches the cut");
    Cut out;
    out.verts.assign(c.verts.begin(), c.verts.begin() + i);
    out.verts.insert(out.verts.end(), gd.alpha.begin(), gd.alpha.end());
    out.verts.insert(out.verts.end(), c.verts.begin() + i + gd.beta.size(), c.verts.end());
    out.edges.assign(c.edges.begin(), c.edges.begin() + i);
    int k = static_cast<int>(gd.alpha.size()) - 1;
    bool initial = is_initial_fan(g, gd);
    for (int j = 0; j < k; ++j) {
        CutEdge e;
        e.creator = creator;
        e.pos = j == 0 ? kAlphaFirst : (j == k - 1 ? kAlphaLast : kAlphaMiddle);
        e.face = initial ? OpenFaceKind{1, 1} : classify_open_face(gd.kind, e.pos);
        out.edges.push_back(e);
    }
    out.edges.insert(out.edges.end(), c.edges.begin() + i + gd.beta.size() - 1, c.edges.end());
    out.gaps = c.gaps;
    return out;
}

// ------------------------------------------------------------- growth steps

/* What one growth step did to the open faces at the seam.  first/last give
   the side classes at the two consumed ends afterwards; the flags mark a face
   pushed to two long sides, which no later step can repair. */
struct StitchReport {
    OpenFaceKind first{1, 1}, last{1, 1};
    bool forbidden_first = false;
    bool forbidden_last = false;
    bool dead_middle = false;
    bool ok() const { return !forbidden_first && !forbidden_last && !dead_middle; }
};

struct GrowthState {
    Rel rel;
    Cut cut;
};

inline GrowthState initial_state(const PlaneGraph& g) {
    return {make_empty_rel(g), initial_cut(g)};
}

/* Apply one growth step: label gd's front rising and its inner arcs
   east-west, then reroute the cut.  Frame edges on the front stay unlabeled.
   The step is applied even when the report shows damage, so callers replaying
   bad steps can inspect the result. */
inline StitchReport grow(const PlaneGraph& g, GrowthState& st, const Gadget& gd, int creator = -1) {
    int i = beta_position(st.cut, gd);
    if (i < 0) throw GraphError("grow: back-boundary not on the cut");
    if (!alpha_clear_of_cut(st.cut, gd)) throw GraphError("grow: front touches the cut");

    for (size_t j = 0; j + 1 < gd.beta.size(); ++j) {
        int u = gd.beta[j], v = gd.beta[j + 1];
        if (is_frame_edge(g, u, v)) continue;
        if (directed_label(g, st.rel, u, v) != 1)
            throw GraphError("grow: cut edge not directed south to north");
    }
    for (size_t j = 0; j + 1 < gd.alpha.size(); ++j) {
        int u = gd.alpha[j], v = gd.alpha[j + 1];
        if (is_frame_edge(g, u, v)) continue;
        if (st.rel.lab[g.edge_id(u, v)] != EdgeLabel::Unset)
            throw GraphError("grow: front edge already labeled");
        assign_label(st.rel, g, u, v, 1);
    }
    for (auto [a, b] : gd.gamma) {
        if (st.rel.lab[g.edge_id(a, b)] != EdgeLabel::Unset)
            throw GraphError("grow: inner edge already labeled");
        assign_label(st.rel, g, a, b, 2);
    }

    StitchReport rep;
    int nb = static_cast<int>(gd.beta.size()) - 1;
    OpenFaceKind pf = st.cut.edges[i].face;
    OpenFaceKind pl = st.cut.edges[i + nb - 1].face;
    auto clamp2 = [](int x) { return x > 2 ? 2 : x; };
    bool closes_first = is_frame_edge(g, gd.alpha[0], gd.alpha[1]);
    bool closes_last = is_frame_edge(g, gd.alpha[gd.alpha.size() - 2], gd.alpha.back());
    if (is_initial_fan(g, gd)) {
        // faces close on the east frame arcs; nothing extends
    } else {
        if (closes_first) {  // face completes against the west frame
            rep.first = {clamp2(pf.lower + 1), clamp2(pf.upper + 1)};
            rep.forbidden_first = pf.dead();
        } else {
            rep.first = {pf.lower, clamp2(pf.upper + 1)};
            rep.forbidden_first = rep.first.dead();
        }
        if (closes_last) {
            rep.last = {clamp2(pl.lower + 1), clamp2(pl.upper + 1)};
            rep.forbidden_last = pl.dead();
        } else {
            rep.last = {clamp2(pl.lower + 1), pl.upper};
            rep.forbidden_last = rep.last.dead();
        }
    }
    for (int j = 1; j + 1 < nb; ++j)
        if (st.cut.edges[i + j].face.dead()) rep.dead_middle = true;

    st.cut = stitch(g, st.cut, gd, creator);
    return rep;
}

/* Run a whole growth sequence from scratch, using sequence positions as
   creator ids.  Structural misuse throws; seam reports are appended so
   callers can tell whether every step stayed clean. */
inline GrowthState apply_sequence(const PlaneGraph& g, const std::vector<Gadget>& seq,
                                  std::vector<StitchReport>* reports = nullptr) {
    GrowthState st = initial_state(g);
    for (size_t i = 0; i < seq.size(); ++i) {
        StitchReport r = grow(g, st, seq[i], static_cast<int>(i));
        if (reports) reports->push_back(r);
    }
    return st;
}

/* Decide from the static pairing rules alone whether stitching gd keeps every
   open face repairable: some builder of the current frontier must accept gd's
   whole back (pair route), or two of them take one end each without a clash
   (triple route).  Builders are resolved through the inventory by the creator
   ids stored on the cut; undefined on the bare initial cut, whose only legal
   step is the seed fan. */
inline bool check_valid_extension(const PlaneGraph& g, const GrowthState& st,
                                  const std::vector<Gadget>& inventory, const Gadget& gd) {
    if (beta_position(st.cut, gd) < 0) throw GraphError("check_valid_extension: not suitable");
    if (!alpha_clear_of_cut(st.cut, gd))
        throw GraphError("check_valid_extension: front touches the cut");
    std::vector<int> support;
    for (const CutEdge& e : st.cut.edges)
        if (e.creator >= 0 && std::find(support.begin(), support.end(), e.creator) == support.end())
            support.push_back(e.creator);
    for (int r : support)
        if (is_g_pair(gd, inventory[r])) return true;
    if (gd.kind == GadgetKind::MirrorFan)
        for (int b : support)
            for (int u : support)
                if (is_m_triple(inventory[b], gd, inventory[u])) return true;
    return false;
}

// ------------------------------------------------------------ verification

namespace detail {

/* Recompute the two open side lengths of the face east of cut edge (a,b) by
   tracing it in the east-west arcs assigned so far plus the east frame arcs,
   with (a,b) itself as the closing bridge.  Returns raw, unclamped counts.
   Only meaningful for edges created by a stitch, not the initial cut. */
inline std::pair<int, int> open_face_sides(const PlaneGraph& g, const Rel& r, int a, int b) {
    const Corners& c = g.corners;
    auto east_frame = [&](int u, int v) {
        auto is = [&](int x, int y) { return (u == x && v == y) || (u == y && v == x); };
        return is(c.E, c.S) || is(c.E, c.N);
    };
    auto in_h = [&](int u, int v) {
        if ((u == a && v == b) || (u == b && v == a)) return true;
        int dl = directed_label(g, r, u, v);
        return dl == 2 || dl == -2 || east_frame(u, v);
    };
    auto step = [&](int v, int u) {  // arrived u -> v, continue around the face
        int w = g.prev_ccw(v, u);
        while (!in_h(v, w)) w = g.prev_ccw(v, w);
        return w;
    };
    std::vector<std::pair<int, int>> walk;
    int u = b, v = a;
    for (;;) {
        int w = step(v, u);
        u = v;
        v = w;
        if (u == b && v == a) break;
        walk.push_back({u, v});
        if ((int)walk.size() > 4 * g.n) throw GraphError("open_face_sides: runaway trace");
    }
    std::vector<bool> along;  // arc direction agrees with the walk
    for (auto [p, q] : walk) {
        int dl = directed_label(g, r, p, q);
        if (dl == 2)
            along.push_back(true);
        else if (dl == -2)
            along.push_back(false);
        else if (p == c.E && (q == c.S || q == c.N))
            along.push_back(true);
        else if (q == c.E && (p == c.S || p == c.N))
            along.push_back(false);
        else
            throw GraphError("open_face_sides: boundary edge without east-west direction");
    }
    size_t lower = 0;
    while (lower < along.size() && !along[lower]) ++lower;
    for (size_t i = lower; i < along.size(); ++i)
        if (!along[i]) throw GraphError("open_face_sides: sides not split at one source");
    return {(int)lower, (int)(along.size() - lower)};
}

}  // namespace detail

// --------------------------------------------------------------------- json

inline Json gadget_to_json(const Gadget& gd) {
    Json j;
    j["kind"] = gd.kind == GadgetKind::Fan ? "fan" : "mirror";
    j["v_l"] = gd.l;
    j["v_m"] = gd.m;
    j["v_h"] = gd.h;
    j["alpha"] = gd.alpha;
    j["beta"] = gd.beta;
    Json gj = Json::array();
    for (auto [a, b] : gd.gamma) gj.push_back(Json::array({a, b}));
    j["gamma"] = gj;
    return j;
}

}  // namespace aul
