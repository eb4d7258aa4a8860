#pragma once
// Small named instances used across the tests: the single-rectangle dual,
// the two-rectangle dual, and the pinwheel.

#include <vector>

#include "generator.hpp"
#include "rel.hpp"

namespace aul {

// one rectangle in the frame; dual is the 4-wheel
inline PlaneGraph fixture_w1() { return dual_of_partition({{0, 0, 1, 1}}, Rect{0, 0, 1, 1}); }

// two rectangles side by side
inline PlaneGraph fixture_h2() {
    return dual_of_partition({{0, 0, 1, 2}, {1, 0, 2, 2}}, Rect{0, 0, 2, 2});
}

/* Two side-by-side columns split at different heights.  The full-height
   divider has rectangles stacked on both sides, so neither of the two
   labelings this dual admits is slant. */
inline PlaneGraph fixture_t4() {
    return dual_of_partition({{0, 1, 1, 2}, {0, 0, 1, 1}, {1, 1.5, 2, 2}, {1, 0, 2, 1.5}},
                             Rect{0, 0, 2, 2});
}

inline std::vector<Rect> fixture_p5_rects() {
    // ids: 0=center, 1=top-left, 2=right, 3=bottom-right, 4=left
    return {{2, 2, 3, 3}, {0, 3, 3, 5}, {3, 2, 5, 5}, {2, 0, 5, 2}, {0, 0, 2, 3}};
}

// pinwheel of four rectangles around a center square
inline PlaneGraph fixture_p5() { return dual_of_partition(fixture_p5_rects(), Rect{0, 0, 5, 5}); }

/* The pinwheel's unique slant labeling (ids as in fixture_p5: C=0, N=1, E=2,
   S=3, W=4, then vN=5, vW=6, vS=7, vE=8). */
inline Rel p5_slant_rel(const PlaneGraph& g) {
    Rel r = make_empty_rel(g);
    for (auto [u, v] : std::vector<std::pair<int, int>>{
             {7, 3}, {7, 4}, {3, 0}, {0, 1}, {4, 1}, {3, 2}, {2, 5}, {1, 5}})
        assign_label(r, g, u, v, 1);
    for (auto [u, v] : std::vector<std::pair<int, int>>{
             {4, 6}, {1, 6}, {0, 4}, {3, 4}, {2, 0}, {2, 1}, {8, 3}, {8, 2}})
        assign_label(r, g, u, v, 2);
    return r;
}

/* The uneven-columns labeling as drawn: the left column west of the right one,
   each column stacked bottom to top (ids as in fixture_t4: top left 0, bottom
   left 1, top right 2, bottom right 3, then vN=4, vW=5, vS=6, vE=7). */
inline Rel t4_drawn_rel(const PlaneGraph& g) {
    Rel r = make_empty_rel(g);
    for (auto [u, v] :
         std::vector<std::pair<int, int>>{{1, 0}, {3, 2}, {6, 1}, {6, 3}, {0, 4}, {2, 4}})
        assign_label(r, g, u, v, 1);
    for (auto [u, v] : std::vector<std::pair<int, int>>{
             {2, 0}, {3, 0}, {3, 1}, {0, 5}, {1, 5}, {7, 2}, {7, 3}})
        assign_label(r, g, u, v, 2);
    return r;
}

}  // namespace aul
