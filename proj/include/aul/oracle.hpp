#pragma once
// Ground-truth machinery sized for small instances: exhaustive enumeration of
// all valid labelings by constraint search over the local rotation conditions.
// Deliberately refuses large inputs; it certifies the polynomial algorithm on
// desk-scale graphs rather than competing with it.

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <vector>

#include "gadget.hpp"
#include "rel.hpp"

namespace aul {

inline int interior_vertex_count(const PlaneGraph& g) {
    int k = 0;
    for (int v = 0; v < g.n; ++v)
        if (!g.corners.contains(v)) ++k;
    return k;
}

namespace detail {

/* Labels the edge may take without breaking the uniform pattern at an
   incident corner.  Probes all four options through a scratch labeling. */
inline std::vector<EdgeLabel> corner_allowed_labels(const PlaneGraph& g, Rel& scratch, int e) {
    auto [u, v] = g.edge_list[e];
    std::vector<EdgeLabel> keep;
    for (EdgeLabel l : {EdgeLabel::T1Fwd, EdgeLabel::T1Rev, EdgeLabel::T2Fwd, EdgeLabel::T2Rev}) {
        scratch.lab[e] = l;
        bool ok = true;
        for (int end : {u, v}) {
            int other = end == u ? v : u;
            int want = kUnlabeled;
            if (end == g.corners.N)
                want = kT1In;
            else if (end == g.corners.S)
                want = kT1Out;
            else if (end == g.corners.W)
                want = kT2In;
            else if (end == g.corners.E)
                want = kT2Out;
            if (want != kUnlabeled && edge_category(g, scratch, end, other) != want) ok = false;
        }
        if (ok) keep.push_back(l);
    }
    scratch.lab[e] = EdgeLabel::Unset;
    return keep;
}

/* Can a partly labeled rotation still complete to the four-block pattern?
   While gaps remain it is enough that some rotation start makes the known
   categories nondecreasing; nonemptiness of all four blocks is only
   decidable, and checked, once the vertex is fully labeled. */
inline bool rotation_completable(const std::vector<int>& cats, bool complete) {
    int k = (int)cats.size();
    if (k < 4) return false;
    if (complete) return cyclic_blocks_ok(cats);
    for (int s = 0; s < k; ++s) {
        int prev = 0;
        bool ok = true;
        for (int i = 0; i < k; ++i) {
            int c = cats[(s + i) % k];
            if (c == kUnlabeled) continue;
            if (c < prev) {
                ok = false;
                break;
            }
            prev = c;
        }
        if (ok) return true;
    }
    return false;
}

inline std::vector<int> bfs_dist(const PlaneGraph& g, int src) {
    std::vector<int> dist(g.n, -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : g.rot[v])
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                q.push(u);
            }
    }
    return dist;
}

}  // namespace detail

/* All valid labelings of g, by depth-first search over per-edge choices with
   eager pruning of rotation patterns.  Deterministic order.  Throws when the
   instance has more interior vertices than the cap allows. */
inline std::vector<Rel> enumerate_all_rels(const PlaneGraph& g, int interior_cap = 8) {
    if (!g.corners.designated()) throw GraphError("enumeration requires corner designation");
    int in_n = interior_vertex_count(g);
    if (in_n > interior_cap)
        throw GraphError("refusing exhaustive enumeration: " + std::to_string(in_n) +
                         " interior vertices exceeds the cap of " + std::to_string(interior_cap));
    FaceSet fs = compute_faces(g);
    std::vector<char> ext_edge = exterior_edge_mask(g, fs);

    std::vector<int> dist = detail::bfs_dist(g, g.corners.S);
    std::vector<int> edges;
    for (int e = 0; e < g.edge_count; ++e)
        if (!ext_edge[e]) edges.push_back(e);
    std::sort(edges.begin(), edges.end(), [&](int a, int b) {
        auto [au, av] = g.edge_list[a];
        auto [bu, bv] = g.edge_list[b];
        int da = std::min(dist[au], dist[av]), db = std::min(dist[bu], dist[bv]);
        return std::tie(da, g.edge_list[a]) < std::tie(db, g.edge_list[b]);
    });

    Rel r = make_empty_rel(g);
    std::vector<std::vector<EdgeLabel>> allowed(g.edge_count);
    for (int e : edges) allowed[e] = detail::corner_allowed_labels(g, r, e);

    // per-interior-vertex category tracker, by rotation position
    std::vector<std::vector<int>> cats(g.n);
    std::vector<int> missing(g.n, 0);
    for (int v = 0; v < g.n; ++v)
        if (!g.corners.contains(v)) {
            cats[v].assign(g.degree(v), kUnlabeled);
            missing[v] = g.degree(v);
        }

    std::vector<Rel> out;
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == edges.size()) {
            if (validate_rel(g, r).pass) out.push_back(r);
            return;
        }
        int e = edges[i];
        auto [u, v] = g.edge_list[e];
        for (EdgeLabel l : allowed[e]) {
            r.lab[e] = l;
            bool ok = true;
            for (int end : {u, v}) {
                if (g.corners.contains(end)) continue;
                int other = end == u ? v : u;
                cats[end][g.rot_pos(end, other)] = edge_category(g, r, end, other);
                --missing[end];
            }
            for (int end : {u, v}) {
                if (g.corners.contains(end)) continue;
                if (!detail::rotation_completable(cats[end], missing[end] == 0)) ok = false;
            }
            if (ok) self(self, i + 1);
            for (int end : {u, v}) {
                if (g.corners.contains(end)) continue;
                int other = end == u ? v : u;
                cats[end][g.rot_pos(end, other)] = kUnlabeled;
                ++missing[end];
            }
        }
        r.lab[e] = EdgeLabel::Unset;
    };
    rec(rec, 0);
    return out;
}

/* Exhaustive growth search: try every stitching order of every cleanly
   attachable gadget, pruning the steps that push an open face past repair.
   States reached by several orders are explored once; each complete labeling
   is recorded once, in a canonical order.  The optional probe sees every
   pruned step together with the state it would have applied to.  Graphs
   without interior vertices have no growth steps at all and fall back to
   filtered enumeration. */
inline std::vector<Rel> enumerate_slant_rels_exhaustive(
    const PlaneGraph& g, int interior_cap = 8,
    const std::function<void(const GrowthState&, const Gadget&)>& on_pruned = {}) {
    if (interior_vertex_count(g) > interior_cap)
        throw GraphError("slant enumeration oracle: instance too large");
    std::vector<Rel> out;
    if (interior_vertex_count(g) == 0) {
        for (const Rel& r : enumerate_all_rels(g, interior_cap))
            if (is_slant(g, r)) out.push_back(r);
        return out;
    }

    std::vector<Gadget> inv;
    for (Gadget& gd : enumerate_gadgets(g))
        if (gadget_respects_corners(g, gd)) inv.push_back(std::move(gd));

    std::set<std::vector<EdgeLabel>> seen;
    auto rec = [&](auto&& self, const GrowthState& st) -> void {
        if (!seen.insert(st.rel.lab).second) return;
        if (cut_is_final(g, st.cut)) {
            out.push_back(st.rel);
            return;
        }
        for (size_t gi = 0; gi < inv.size(); ++gi) {
            const Gadget& gd = inv[gi];
            if (!suitable(st.cut, gd) || !alpha_clear_of_cut(st.cut, gd)) continue;
            GrowthState next = st;
            StitchReport rep = grow(g, next, gd, static_cast<int>(gi));
            if (!rep.ok()) {
                if (on_pruned) on_pruned(st, gd);
                continue;
            }
            self(self, next);
        }
    };
    rec(rec, initial_state(g));

    std::sort(out.begin(), out.end(), [](const Rel& a, const Rel& b) { return a.lab < b.lab; });
    return out;
}

inline bool has_slant_rel_bruteforce(const PlaneGraph& g, int interior_cap = 8) {
    return !enumerate_slant_rels_exhaustive(g, interior_cap).empty();
}

}  // namespace aul
