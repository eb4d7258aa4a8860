#pragma once
// Random instances: slice the unit square into n rectangles, then take the
// dual with four frame vertices.  Any such dual is a proper triangular plane
// graph, which makes this a cheap source of valid test inputs.

#include <string>
#include <vector>

#include "plane_graph.hpp"
#include "util.hpp"

namespace aul {

/* Dual of a rectangle tiling of box.  Interior vertex i stands for rects[i];
   frame vertices take ids n..n+3 in the order N, W, S, E.  Rotations come
   from a ccw walk of each rectangle's perimeter (east side bottom to top,
   north right to left, west top to bottom, south left to right).
   Coordinates are compared exactly, so build tilings by splitting: children
   inherit their parent's outer coordinates. */
inline PlaneGraph dual_of_partition(const std::vector<Rect>& rects, Rect box) {
    int n = (int)rects.size();
    int vN = n, vW = n + 1, vS = n + 2, vE = n + 3;
    std::vector<std::vector<int>> rot(n + 4);

    struct Hit {
        double key;
        int id;
    };
    auto by_key = [](const Hit& a, const Hit& b) { return a.key < b.key; };

    // neighbors across one side of rects[i]; key orders them along the walk
    auto side = [&](int i, char dir) {
        const Rect& r = rects[i];
        std::vector<Hit> hits;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const Rect& s = rects[j];
            double lo, hi;
            switch (dir) {
                case 'E':
                    if (s.x0 != r.x1) continue;
                    lo = std::max(r.y0, s.y0), hi = std::min(r.y1, s.y1);
                    if (hi > lo) hits.push_back({lo, j});  // bottom to top
                    break;
                case 'N':
                    if (s.y0 != r.y1) continue;
                    lo = std::max(r.x0, s.x0), hi = std::min(r.x1, s.x1);
                    if (hi > lo) hits.push_back({-lo, j});  // right to left
                    break;
                case 'W':
                    if (s.x1 != r.x0) continue;
                    lo = std::max(r.y0, s.y0), hi = std::min(r.y1, s.y1);
                    if (hi > lo) hits.push_back({-lo, j});  // top to bottom
                    break;
                case 'S':
                    if (s.y1 != r.y0) continue;
                    lo = std::max(r.x0, s.x0), hi = std::min(r.x1, s.x1);
                    if (hi > lo) hits.push_back({lo, j});  // left to right
                    break;
            }
        }
        std::sort(hits.begin(), hits.end(), by_key);
        std::vector<int> ids;
        for (auto& h : hits) ids.push_back(h.id);
        return ids;
    };

    for (int i = 0; i < n; ++i) {
        const Rect& r = rects[i];
        auto append = [&](char dir, int frame, bool on_frame) {
            if (on_frame)
                rot[i].push_back(frame);
            else
                for (int j : side(i, dir)) rot[i].push_back(j);
        };
        append('E', vE, r.x1 == box.x1);
        append('N', vN, r.y1 == box.y1);
        append('W', vW, r.x0 == box.x0);
        append('S', vS, r.y0 == box.y0);
    }

    // frame rows/columns, ordered along the frame vertex's ccw sweep
    auto frame_row = [&](char which) {
        std::vector<Hit> hits;
        for (int j = 0; j < n; ++j) {
            const Rect& s = rects[j];
            switch (which) {
                case 'N':
                    if (s.y1 == box.y1) hits.push_back({s.x0, j});  // west to east
                    break;
                case 'W':
                    if (s.x0 == box.x0) hits.push_back({s.y0, j});  // bottom to top
                    break;
                case 'S':
                    if (s.y0 == box.y0) hits.push_back({-s.x0, j});  // east to west
                    break;
                case 'E':
                    if (s.x1 == box.x1) hits.push_back({-s.y0, j});  // top to bottom
                    break;
            }
        }
        std::sort(hits.begin(), hits.end(), by_key);
        std::vector<int> ids;
        for (auto& h : hits) ids.push_back(h.id);
        return ids;
    };
    rot[vN].push_back(vW);
    for (int j : frame_row('N')) rot[vN].push_back(j);
    rot[vN].push_back(vE);
    rot[vW].push_back(vS);
    for (int j : frame_row('W')) rot[vW].push_back(j);
    rot[vW].push_back(vN);
    rot[vS].push_back(vE);
    for (int j : frame_row('S')) rot[vS].push_back(j);
    rot[vS].push_back(vW);
    rot[vE].push_back(vN);
    for (int j : frame_row('E')) rot[vE].push_back(j);
    rot[vE].push_back(vS);

    std::vector<std::string> labels(n + 4);
    for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
    labels[vN] = "N";
    labels[vW] = "W";
    labels[vS] = "S";
    labels[vE] = "E";
    return PlaneGraph::build(n + 4, std::move(rot), Corners{vN, vW, vS, vE}, std::move(labels));
}

struct RandomInstance {
    PlaneGraph graph;
    std::vector<Rect> rects;  // the tiling the graph is the dual of
};

/* n rectangles by n-1 random guillotine splits of the unit square.  Split
   fractions stay in [0.3, 0.7] so slivers never collapse numerically. */
inline RandomInstance random_instance(int n, std::uint64_t seed) {
    if (n < 1) throw GraphError("instance needs at least one rectangle");
    Rng rng(seed);
    std::vector<Rect> rects{{0, 0, 1, 1}};
    for (int step = 1; step < n; ++step) {
        int i = (int)rng.next_below(rects.size());
        bool horizontal = rng.next_below(2) == 1;
        double frac = 0.3 + 0.4 * rng.uniform01();
        Rect r = rects[i];
        if (horizontal) {  // horizontal cut line, bottom child stays at i
            double y = r.y0 + frac * (r.y1 - r.y0);
            rects[i] = {r.x0, r.y0, r.x1, y};
            rects.push_back({r.x0, y, r.x1, r.y1});
        } else {
            double x = r.x0 + frac * (r.x1 - r.x0);
            rects[i] = {r.x0, r.y0, x, r.y1};
            rects.push_back({x, r.y0, r.x1, r.y1});
        }
    }
    return {dual_of_partition(rects, Rect{0, 0, 1, 1}), std::move(rects)};
}

}  // namespace aul
