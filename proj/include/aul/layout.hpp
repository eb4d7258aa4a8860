#pragma once
// Rectangular layout geometry: coordinates from a labeling via longest-path
// ranks over the two face duals, maximal segment extraction, the one-sided
// segment test for area universality, derivation of the labeling back from
// coordinates, and an iterative cartogram solver.

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "rel.hpp"
#include "util.hpp"

namespace aul {

struct RectLayout {
    int n = 0;
    Rect bounds;
    std::vector<Rect> rect;  // by vertex id
};

inline RectLayout layout_from_rects(std::vector<Rect> rects, Rect bounds) {
    RectLayout l;
    l.n = (int)rects.size();
    l.bounds = bounds;
    l.rect = std::move(rects);
    return l;
}

namespace detail {

/* Direction of an edge of one of the oriented subgraphs: labeled edges by
   their label, the four frame edges by the fixed arcs. */
inline std::pair<int, int> arc_direction(const PlaneGraph& g, const Rel& r, int which, int a, int b) {
    int dl = directed_label(g, r, a, b);
    if (dl == which) return {a, b};
    if (dl == -which) return {b, a};
    for (auto [x, y] : frame_arcs(g, which))
        if ((x == a && y == b) || (x == b && y == a)) return {x, y};
    throw std::logic_error("edge is not part of this oriented subgraph");
}

inline std::vector<int> longest_path_ranks(const std::vector<std::vector<int>>& out) {
    int n = (int)out.size();
    std::vector<int> indeg(n, 0), rank(n, 0), stack;
    for (const auto& l : out)
        for (int v : l) ++indeg[v];
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) stack.push_back(v);
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (int u : out[v]) {
            if (rank[u] < rank[v] + 1) rank[u] = rank[v] + 1;
            if (--indeg[u] == 0) stack.push_back(u);
        }
    }
    if (seen != n) throw std::logic_error("face dual of an oriented subgraph has a cycle");
    return rank;
}

}  // namespace detail

/* Coordinates for one axis: rank every face of the oriented subgraph by
   longest path in the left-to-right dual, then read each vertex interval off
   the faces flanking its through-flow.  Axis 1 gives x, axis 2 gives y. */
inline void apply_axis_coordinates(const PlaneGraph& g, const Rel& r, int which, RectLayout& l) {
    PlaneGraph sub = oriented_plane_subgraph(g, r, which);
    FaceSet fs = compute_faces(sub);
    int F = (int)fs.faces.size();
    int near = F, far = F + 1;  // outer node split: west/south side and east/north side
    auto lo_node = [&](int f) { return f == fs.exterior ? near : f; };
    auto hi_node = [&](int f) { return f == fs.exterior ? far : f; };

    std::vector<std::vector<int>> dual(F + 2);
    for (int e = 0; e < sub.edge_count; ++e) {
        auto [u, v] = sub.edge_list[e];
        auto [a, b] = detail::arc_direction(g, r, which, u, v);
        // the face left of the flow direction is the low side of the edge
        dual[lo_node(fs.face_of(a, b))].push_back(hi_node(fs.face_of(b, a)));
    }
    std::vector<int> rank = detail::longest_path_ranks(dual);
    int span = rank[far];

    auto is_out = [&](int v, int u) { return detail::arc_direction(g, r, which, v, u).first == v; };
    auto lo_rank = [&](int from, int to) { return rank[lo_node(fs.face_of(from, to))]; };
    auto hi_rank = [&](int from, int to) { return rank[hi_node(fs.face_of(from, to))]; };

    const Corners& c = g.corners;
    for (int v = 0; v < g.n; ++v) {
        double lo, hi;
        int m = sub.degree(v);
        int last_out = -1, last_in = -1;
        for (int i = 0; i < m; ++i) {
            int u = sub.rot[v][i], w = sub.rot[v][(i + 1) % m];
            bool ou = is_out(v, u), ow = is_out(v, w);
            if (ou && !ow) last_out = u;
            if (!ou && ow) last_in = u;
        }
        if (last_out >= 0 && last_in >= 0) {
            // generic: low side flanks the last outgoing, high side the last incoming
            lo = lo_rank(v, last_out);
            hi = hi_rank(v, last_in);
        } else if (which == 1) {
            // the south and north poles span the full width
            lo = 0;
            hi = span;
        } else if (v == c.E) {
            lo = lo_rank(c.S, c.E);
            hi = hi_rank(c.E, c.N);
        } else {
            // v == c.W
            lo = lo_rank(c.W, c.S);
            hi = hi_rank(c.N, c.W);
        }
        if (which == 1) {
            l.rect[v].x0 = lo;
            l.rect[v].x1 = hi;
        } else {
            l.rect[v].y0 = lo;
            l.rect[v].y1 = hi;
        }
    }
    if (which == 1)
        l.bounds.x1 = span;
    else
        l.bounds.y1 = span;
}

/* Integer-coordinate layout of a valid labeling.  Every vertex, the four
   frame strips included, gets one rectangle; together they tile the bounds. */
inline RectLayout rel_to_layout(const PlaneGraph& g, const Rel& r) {
    ValidationReport rep = validate_rel(g, r);
    if (!rep.pass) throw GraphError("labeling invalid: " + rep.violations.front());
    RectLayout l;
    l.n = g.n;
    l.bounds = {0, 0, 0, 0};
    l.rect.assign(g.n, Rect{});
    apply_axis_coordinates(g, r, 1, l);
    apply_axis_coordinates(g, r, 2, l);
    for (int v = 0; v < g.n; ++v)
        if (!(l.rect[v].x0 < l.rect[v].x1) || !(l.rect[v].y0 < l.rect[v].y1))
            throw std::logic_error("degenerate rectangle for vertex " + std::to_string(v));
    return l;
}

/* Read the labeling back off the geometry: an edge whose rectangles stack
   vertically points up in set 1, one whose rectangles sit side by side points
   east-to-west in set 2. */
inline Rel derive_rel_from_layout(const PlaneGraph& g, const RectLayout& l, double eps = 1e-7) {
    FaceSet fs = compute_faces(g);
    std::vector<char> ext = exterior_edge_mask(g, fs);
    Rel r = make_empty_rel(g);
    auto overlap = [](double a0, double a1, double b0, double b1) {
        return std::min(a1, b1) - std::max(a0, b0);
    };
    for (int e = 0; e < g.edge_count; ++e) {
        if (ext[e]) continue;
        auto [u, v] = g.edge_list[e];
        const Rect &a = l.rect[u], &b = l.rect[v];
        double oy = overlap(a.y0, a.y1, b.y0, b.y1), ox = overlap(a.x0, a.x1, b.x0, b.x1);
        if (std::abs(a.x1 - b.x0) < eps && oy > eps)
            assign_label(r, g, v, u, 2);  // u west of v
        else if (std::abs(b.x1 - a.x0) < eps && oy > eps)
            assign_label(r, g, u, v, 2);
        else if (std::abs(a.y1 - b.y0) < eps && ox > eps)
            assign_label(r, g, u, v, 1);  // u below v
        else if (std::abs(b.y1 - a.y0) < eps && ox > eps)
            assign_label(r, g, v, u, 1);
        else
            throw GraphError("adjacent vertices " + std::to_string(u) + "," + std::to_string(v) +
                             " share no positive-length boundary");
    }
    return r;
}

struct MaximalSegment {
    bool vertical = false;
    double coord = 0;        // x for vertical, y for horizontal
    double lo = 0, hi = 0;   // extent on the other axis
    std::vector<int> low_side;   // rectangles west of a vertical, south of a horizontal
    std::vector<int> high_side;
};

/* All interior maximal segments: collinear touching rectangle sides merged
   until no further extension is possible.  The four sides of the bounding
   rectangle are not included. */
inline std::vector<MaximalSegment> maximal_segments(const RectLayout& l, double eps = 1e-7) {
    struct Piece {
        double coord, lo, hi;
        int id;
        bool high_side;
    };
    std::vector<MaximalSegment> out;
    for (int vertical = 1; vertical >= 0; --vertical) {
        std::vector<Piece> pieces;
        for (int v = 0; v < l.n; ++v) {
            const Rect& rc = l.rect[v];
            double c0 = vertical ? rc.x0 : rc.y0, c1 = vertical ? rc.x1 : rc.y1;
            double o0 = vertical ? rc.y0 : rc.x0, o1 = vertical ? rc.y1 : rc.x1;
            double b0 = vertical ? l.bounds.x0 : l.bounds.y0;
            double b1 = vertical ? l.bounds.x1 : l.bounds.y1;
            if (c0 > b0 + eps) pieces.push_back({c0, o0, o1, v, true});
            if (c1 < b1 - eps) pieces.push_back({c1, o0, o1, v, false});
        }
        std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
            return std::tie(a.coord, a.lo, a.id) < std::tie(b.coord, b.lo, b.id);
        });
        size_t i = 0;
        while (i < pieces.size()) {
            // cluster of one axis coordinate
            size_t j = i;
            while (j < pieces.size() && pieces[j].coord - pieces[i].coord < eps) ++j;
            std::vector<Piece> run(pieces.begin() + i, pieces.begin() + j);
            std::sort(run.begin(), run.end(),
                      [](const Piece& a, const Piece& b) { return std::tie(a.lo, a.id) < std::tie(b.lo, b.id); });
            size_t k = 0;
            while (k < run.size()) {
                MaximalSegment seg;
                seg.vertical = vertical;
                seg.coord = run[k].coord;
                seg.lo = run[k].lo;
                seg.hi = run[k].hi;
                size_t m = k;
                while (m < run.size() && run[m].lo <= seg.hi + eps) {
                    seg.hi = std::max(seg.hi, run[m].hi);
                    (run[m].high_side ? seg.high_side : seg.low_side).push_back(run[m].id);
                    ++m;
                }
                std::sort(seg.low_side.begin(), seg.low_side.end());
                std::sort(seg.high_side.begin(), seg.high_side.end());
                out.push_back(std::move(seg));
                k = m;
            }
            i = j;
        }
    }
    return out;
}

struct GeomCheck {
    bool universal = true;
    MaximalSegment witness;  // meaningful only when not universal
};

/* A layout realizes every area assignment exactly when each interior maximal
   segment coincides with a full side of some rectangle. */
inline GeomCheck is_area_universal_geometric(const RectLayout& l, double eps = 1e-7) {
    for (const MaximalSegment& seg : maximal_segments(l, eps)) {
        bool full = false;
        auto probe = [&](const std::vector<int>& ids) {
            for (int v : ids) {
                const Rect& rc = l.rect[v];
                double o0 = seg.vertical ? rc.y0 : rc.x0, o1 = seg.vertical ? rc.y1 : rc.x1;
                if (std::abs(o0 - seg.lo) < eps && std::abs(o1 - seg.hi) < eps) full = true;
            }
        };
        probe(seg.low_side);
        probe(seg.high_side);
        if (!full) return {false, seg};
    }
    return {};
}

/* Structural checks shared by constructed and hand-made layouts: positive
   rectangles tiling the bounds, disjoint interiors, no four rectangles at a
   point, and rectangle contacts matching the graph. */
inline ValidationReport validate_layout(const PlaneGraph& g, const RectLayout& l, double eps = 1e-7) {
    ValidationReport rep;
    if (l.n != g.n) {
        rep.fail("layout covers " + std::to_string(l.n) + " vertices, graph has " + std::to_string(g.n));
        return rep;
    }
    double total = 0;
    for (int v = 0; v < l.n; ++v) {
        const Rect& rc = l.rect[v];
        if (!(rc.x0 < rc.x1 && rc.y0 < rc.y1)) rep.fail("degenerate rectangle " + std::to_string(v));
        total += rc.area();
    }
    if (!rep.pass) return rep;
    if (std::abs(total - l.bounds.area()) > eps * std::max(1.0, l.bounds.area()))
        rep.fail("rectangle areas do not sum to the bounding area");
    auto overlap = [](double a0, double a1, double b0, double b1) {
        return std::min(a1, b1) - std::max(a0, b0);
    };
    std::map<std::pair<long long, long long>, int> corner_count;
    auto quantize = [&](double x) { return (long long)std::llround(x / eps / 16.0); };
    for (int v = 0; v < l.n; ++v) {
        const Rect& a = l.rect[v];
        for (double cx : {a.x0, a.x1})
            for (double cy : {a.y0, a.y1}) ++corner_count[{quantize(cx), quantize(cy)}];
        for (int u = v + 1; u < l.n; ++u) {
            const Rect& b = l.rect[u];
            double ox = overlap(a.x0, a.x1, b.x0, b.x1), oy = overlap(a.y0, a.y1, b.y0, b.y1);
            bool contact = (std::abs(a.x1 - b.x0) < eps || std::abs(b.x1 - a.x0) < eps) && oy > eps;
            contact = contact || ((std::abs(a.y1 - b.y0) < eps || std::abs(b.y1 - a.y0) < eps) && ox > eps);
            if (ox > eps && oy > eps)
                rep.fail("rectangles " + std::to_string(v) + " and " + std::to_string(u) + " overlap");
            if (contact && !g.adjacent(v, u))
                rep.fail("rectangles " + std::to_string(v) + " and " + std::to_string(u) +
                         " touch but the vertices are not adjacent");
            if (!contact && g.adjacent(v, u))
                rep.fail("adjacent vertices " + std::to_string(v) + " and " + std::to_string(u) +
                         " have no rectangle contact");
        }
    }
    for (auto& [pt, cnt] : corner_count)
        if (cnt >= 4) rep.fail("four rectangles meet at one point");
    return rep;
}

// positive target area per vertex, frame strips included
using AreaAssignment = std::vector<double>;

struct RealizeResult {
    RectLayout layout;
    bool converged = false;
    bool rel_preserved = false;
    int sweeps = 0;
    double max_rel_err = 0;
};

/* Realize target areas on the layout class of a slant labeling.  Treats the
   interior maximal segment coordinates as unknowns inside a fixed square and
   relaxes them by damped per-segment sweeps until every rectangle is within
   tolerance of its target. */
inline RealizeResult realize_areas(const PlaneGraph& g, const Rel& r, const AreaAssignment& target,
                                   int max_sweeps = 10000, double tol = 1e-6) {
    if ((int)target.size() != g.n)
        throw GraphError("area assignment covers " + std::to_string(target.size()) +
                         " vertices, graph has " + std::to_string(g.n));
    for (double t : target)
        if (!(t > 0)) throw GraphError("area assignment must be positive");
    if (!validate_rel(g, r).pass) throw GraphError("cartogram requires a valid labeling");
    if (!is_slant(g, r)) throw GraphError("cartogram requires a slant labeling");

    RectLayout l = rel_to_layout(g, r);
    double total = 0;
    for (double t : target) total += t;
    double side = std::sqrt(total);
    double sx = side / l.bounds.width(), sy = side / l.bounds.height();
    for (Rect& rc : l.rect) {
        rc.x0 *= sx;
        rc.x1 *= sx;
        rc.y0 *= sy;
        rc.y1 *= sy;
    }
    l.bounds = {0, 0, side, side};

    // segment variables; each rectangle side is either a segment or the frame
    std::vector<MaximalSegment> segs = maximal_segments(l);
    int ns = (int)segs.size();
    std::vector<double> pos(ns);
    // side index per vertex: -1 frame, else segment id
    std::vector<int> left(g.n, -1), right(g.n, -1), bottom(g.n, -1), top(g.n, -1);
    for (int s = 0; s < ns; ++s) {
        pos[s] = segs[s].coord;
        for (int v : segs[s].low_side) (segs[s].vertical ? right : top)[v] = s;
        for (int v : segs[s].high_side) (segs[s].vertical ? left : bottom)[v] = s;
    }
    auto coord = [&](int idx, double frame) { return idx < 0 ? frame : pos[idx]; };
    auto width = [&](int v) { return coord(right[v], side) - coord(left[v], 0); };
    auto height = [&](int v) { return coord(top[v], side) - coord(bottom[v], 0); };

    RealizeResult res;
    for (res.sweeps = 0; res.sweeps < max_sweeps; ++res.sweeps) {
        res.max_rel_err = 0;
        for (int v = 0; v < g.n; ++v)
            res.max_rel_err = std::max(res.max_rel_err, std::abs(width(v) * height(v) - target[v]) / target[v]);
        if (res.max_rel_err <= tol) {
            res.converged = true;
            break;
        }
        for (int s = 0; s < ns; ++s) {
            const MaximalSegment& seg = segs[s];
            double len = 0, push = 0, room_lo = 1e300, room_hi = 1e300;
            for (int v : seg.low_side) {
                len += seg.vertical ? height(v) : width(v);
                push += target[v] - width(v) * height(v);
                room_lo = std::min(room_lo, seg.vertical ? width(v) : height(v));
            }
            for (int v : seg.high_side) {
                push -= target[v] - width(v) * height(v);
                room_hi = std::min(room_hi, seg.vertical ? width(v) : height(v));
            }
            // moving up-axis grows the low side; damped, and never past a neighbor
            double delta = 0.25 * push / len;
            delta = std::min(delta, 0.45 * room_hi);
            delta = std::max(delta, -0.45 * room_lo);
            pos[s] += delta;
        }
    }
    for (int v = 0; v < g.n; ++v)
        l.rect[v] = {coord(left[v], 0), coord(bottom[v], 0), coord(right[v], side), coord(top[v], side)};
    res.layout = l;
    try {
        res.rel_preserved = derive_rel_from_layout(g, l) == r;
    } catch (const GraphError&) {
        res.rel_preserved = false;
    }
    return res;
}

inline Json layout_to_json(const RectLayout& l) {
    Json j;
    j["bounds"] = {l.bounds.x0, l.bounds.y0, l.bounds.x1, l.bounds.y1};
    Json rects = Json::array();
    for (int v = 0; v < l.n; ++v) {
        const Rect& rc = l.rect[v];
        rects.push_back({{"v", v}, {"x0", rc.x0}, {"y0", rc.y0}, {"x1", rc.x1}, {"y1", rc.y1}});
    }
    j["rects"] = rects;
    return j;
}

inline RectLayout layout_from_json(const Json& j) {
    RectLayout l;
    const Json& b = j.at("bounds");
    if (!b.is_array() || b.size() != 4) throw GraphError("layout json: bounds must be [x0,y0,x1,y1]");
    l.bounds = {b[0].get<double>(), b[1].get<double>(), b[2].get<double>(), b[3].get<double>()};
    const Json& rects = j.at("rects");
    l.n = (int)rects.size();
    l.rect.assign(l.n, Rect{});
    std::vector<char> seen(l.n, 0);
    for (const Json& je : rects) {
        int v = je.at("v").get<int>();
        if (v < 0 || v >= l.n || seen[v]) throw GraphError("layout json: rectangle ids must be dense and unique");
        seen[v] = 1;
        l.rect[v] = {je.at("x0").get<double>(), je.at("y0").get<double>(), je.at("x1").get<double>(),
                     je.at("y1").get<double>()};
    }
    return l;
}

/* One svg rect per vertex, pastel-filled, labeled at the center. */
inline std::string layout_to_svg(const PlaneGraph& g, const RectLayout& l, double width = 640,
                                 double height = 0) {
    double aspect = l.bounds.height() / l.bounds.width();
    if (height <= 0) height = width * aspect;
    double sx = width / l.bounds.width(), sy = height / l.bounds.height();
    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
                      "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
                      std::to_string(width) + " " + std::to_string(height) + "\">\n";
    for (int v = 0; v < l.n; ++v) {
        const Rect& rc = l.rect[v];
        double x = (rc.x0 - l.bounds.x0) * sx, y = (l.bounds.y1 - rc.y1) * sy;
        double w = rc.width() * sx, h = rc.height() * sy;
        int hue = (v * 47) % 360;
        svg += "  <rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) + "\" width=\"" +
               std::to_string(w) + "\" height=\"" + std::to_string(h) + "\" fill=\"hsl(" +
               std::to_string(hue) + ",55%,82%)\" stroke=\"#333\" stroke-width=\"1\"/>\n";
        std::string name = v < (int)g.labels.size() && !g.labels[v].empty() ? g.labels[v] : std::to_string(v);
        double fs = std::min({w * 0.8 / std::max<size_t>(1, name.size()), h * 0.6, 16.0});
        svg += "  <text x=\"" + std::to_string(x + w / 2) + "\" y=\"" + std::to_string(y + h / 2) +
               "\" font-family=\"sans-serif\" font-size=\"" + std::to_string(fs) +
               "\" text-anchor=\"middle\" dominant-baseline=\"middle\">" + name + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace aul
