#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <functional>
#include <set>
#include <vector>

#include <aul/fixtures.hpp>
#include <aul/gadget.hpp>
#include <aul/generator.hpp>
#include <aul/oracle.hpp>

using namespace aul;

namespace {

/* A gadget as the bare labeled digraph it induces, so differently named
   constructions of the same shape compare equal. */
using Sig = std::set<std::array<int, 3>>;

Sig gadget_sig(const Gadget& gd) {
    Sig s;
    for (size_t i = 0; i + 1 < gd.alpha.size(); ++i) s.insert({gd.alpha[i], gd.alpha[i + 1], 1});
    for (size_t i = 0; i + 1 < gd.beta.size(); ++i) s.insert({gd.beta[i], gd.beta[i + 1], 1});
    for (auto [a, b] : gd.gamma) s.insert({a, b, 2});
    return s;
}

/* Brute scan straight off the definition: every apex, every ordered pair of
   its neighbors, both turning senses, with adjacency and chords checked by
   raw neighbor lookups.  Kept deliberately separate from the library's
   construction path. */
std::set<Sig> literal_shape_scan(const PlaneGraph& g) {
    auto adjacent = [&](int a, int b) {
        for (int x : g.rot[a])
            if (x == b) return true;
        return false;
    };
    std::set<Sig> shapes;
    for (int m = 0; m < g.n; ++m) {
        const std::vector<int>& r = g.rot[m];
        int d = (int)r.size();
        for (int pl = 0; pl < d; ++pl)
            for (int ph = 0; ph < d; ++ph) {
                if (pl == ph) continue;
                if (adjacent(r[pl], r[ph])) continue;
                for (int dir : {-1, +1}) {  // -1 walks cw along a ccw rotation
                    std::vector<int> wedge{r[pl]};
                    for (int p = pl; p != ph;) {
                        p = (p + dir + d) % d;
                        wedge.push_back(r[p]);
                    }
                    bool path = true;
                    for (size_t i = 0; i + 1 < wedge.size() && path; ++i)
                        path = adjacent(wedge[i], wedge[i + 1]);
                    for (size_t i = 0; i < wedge.size() && path; ++i)
                        for (size_t j = i + 2; j < wedge.size(); ++j)
                            if (adjacent(wedge[i], wedge[j])) path = false;
                    if (!path || wedge.size() < 3) continue;
                    Sig s;
                    for (size_t i = 0; i + 1 < wedge.size(); ++i)
                        s.insert({wedge[i], wedge[i + 1], 1});
                    s.insert({r[pl], m, 1});
                    s.insert({m, r[ph], 1});
                    for (size_t i = 1; i + 1 < wedge.size(); ++i)
                        s.insert(dir < 0 ? std::array<int, 3>{m, wedge[i], 2}
                                         : std::array<int, 3>{wedge[i], m, 2});
                    shapes.insert(s);
                }
            }
    }
    return shapes;
}

long long literal_bound(const PlaneGraph& g) {
    long long b = 0;
    for (int v = 0; v < g.n; ++v) {
        long long d = (long long)g.rot[v].size();
        b += 2 * d * (d - 3);
    }
    return b;
}

void check_enumeration(const PlaneGraph& g) {
    std::vector<Gadget> inv = enumerate_gadgets(g);
    std::set<Sig> seen;
    for (const Gadget& gd : inv) {
        REQUIRE(seen.insert(gadget_sig(gd)).second);  // each shape once
        bool lh_edge = false;
        for (int x : g.rot[gd.l]) lh_edge |= x == gd.h;
        REQUIRE_FALSE(lh_edge);
    }
    REQUIRE(seen == literal_shape_scan(g));
    REQUIRE((long long)inv.size() <= literal_bound(g));
    REQUIRE(literal_bound(g) == gadget_count_bound(g));
    REQUIRE(initial_fan(g).has_value());
    REQUIRE(final_mirror_fan(g).has_value());
    bool has0 = false, hasT = false;
    for (const Gadget& gd : inv) {
        has0 |= is_initial_fan(g, gd);
        hasT |= is_final_mirror_fan(g, gd);
    }
    REQUIRE(has0);
    REQUIRE(hasT);
}

std::vector<Gadget> usable_inventory(const PlaneGraph& g) {
    std::vector<Gadget> inv;
    for (Gadget& gd : enumerate_gadgets(g))
        if (gadget_respects_corners(g, gd)) inv.push_back(std::move(gd));
    return inv;
}

/* Walk every reachable clean growth state once.  visit(state) runs per state;
   candidate(state, gadget, report-after-forced-stitch, index) runs for every
   suitable non-touching gadget. */
struct Walker {
    std::function<void(const GrowthState&)> visit;
    std::function<void(const GrowthState&, const Gadget&, const StitchReport&, int)> candidate;
};

int walk_states(const PlaneGraph& g, const Walker& w) {
    std::vector<Gadget> inv = usable_inventory(g);
    std::set<std::vector<EdgeLabel>> seen;
    int states = 0;
    auto rec = [&](auto&& self, const GrowthState& st) -> void {
        if (!seen.insert(st.rel.lab).second) return;
        ++states;
        if (w.visit) w.visit(st);
        if (cut_is_final(g, st.cut)) return;
        for (size_t gi = 0; gi < inv.size(); ++gi) {
            const Gadget& gd = inv[gi];
            if (!suitable(st.cut, gd) || !alpha_clear_of_cut(st.cut, gd)) continue;
            GrowthState next = st;
            StitchReport rep = grow(g, next, gd, (int)gi);
            if (w.candidate) w.candidate(st, gd, rep, (int)gi);
            if (rep.ok()) self(self, next);
        }
    };
    rec(rec, initial_state(g));
    return states;
}

OpenFaceKind clamped_sides(const PlaneGraph& g, const Rel& r, int a, int b) {
    auto [lo, up] = detail::open_face_sides(g, r, a, b);
    return {lo > 2 ? 2 : lo, up > 2 ? 2 : up};
}

PlaneGraph diagonal_square(bool east_west) {
    if (east_west)
        return plane_graph_from_faces(4, {{0, 1, 3}, {1, 2, 3}}, {0, 3, 2, 1},
                                      Corners{0, 1, 2, 3});
    return plane_graph_from_faces(4, {{0, 1, 2}, {0, 2, 3}}, {0, 3, 2, 1}, Corners{0, 1, 2, 3});
}

}  // namespace

TEST_CASE("path helpers") {
    std::vector<int> p{4, 7, 2, 9};
    REQUIRE(path_first_edge(p) == std::pair<int, int>(4, 7));
    REQUIRE(path_last_edge(p) == std::pair<int, int>(2, 9));
    REQUIRE(path_has_vertex(p, 2));
    REQUIRE_FALSE(path_has_vertex(p, 3));
    REQUIRE(path_has_edge(p, 7, 2));
    REQUIRE_FALSE(path_has_edge(p, 2, 7));  // directed
    REQUIRE_FALSE(path_has_edge(p, 4, 2));
    REQUIRE(path_contains_subpath(p, {7, 2, 9}));
    REQUIRE_FALSE(path_contains_subpath(p, {7, 9}));
    REQUIRE(path_section(p, 7, 9) == std::vector<int>{7, 2, 9});
    REQUIRE(path_section(p, 2, 2) == std::vector<int>{2});
    REQUIRE_THROWS_AS(path_section(p, 9, 7), GraphError);
    REQUIRE_THROWS_AS(path_section(p, 4, 3), GraphError);
}

TEST_CASE("opening and closing shapes of the fixtures") {
    PlaneGraph w1 = fixture_w1();
    Gadget g0 = *initial_fan(w1);
    REQUIRE(g0.kind == GadgetKind::Fan);
    REQUIRE(g0.alpha == std::vector<int>{3, 0, 1});
    REQUIRE(g0.beta == std::vector<int>{3, 4, 1});
    REQUIRE(g0.gamma == std::vector<std::pair<int, int>>{{4, 0}});
    Gadget gt = *final_mirror_fan(w1);
    REQUIRE(gt.kind == GadgetKind::MirrorFan);
    REQUIRE(gt.alpha == std::vector<int>{3, 2, 1});
    REQUIRE(gt.beta == std::vector<int>{3, 0, 1});
    REQUIRE(gt.gamma == std::vector<std::pair<int, int>>{{0, 2}});
    REQUIRE(is_initial_fan(w1, g0));
    REQUIRE(is_final_mirror_fan(w1, gt));
    REQUIRE_FALSE(is_initial_fan(w1, gt));

    PlaneGraph t4 = fixture_t4();
    REQUIRE(initial_fan(t4)->alpha == std::vector<int>{6, 3, 2, 4});
    Gadget t4t = *final_mirror_fan(t4);
    REQUIRE(t4t.beta == std::vector<int>{6, 1, 0, 4});
    REQUIRE(t4t.gamma == std::vector<std::pair<int, int>>{{1, 5}, {0, 5}});

    PlaneGraph p5 = fixture_p5();
    REQUIRE(initial_fan(p5)->alpha == std::vector<int>{7, 3, 2, 5});
    REQUIRE(final_mirror_fan(p5)->beta == std::vector<int>{7, 4, 1, 5});

    SECTION("identity is the name, not the shape") {
        Gadget again = *initial_fan(w1);
        REQUIRE(g0 == again);
        REQUIRE_FALSE(g0 == gt);
    }
    SECTION("an adjacent flank pair yields nothing") {
        REQUIRE_FALSE(make_fan(w1, 4, 0, 3).has_value());  // 3 and 4 share an edge
        REQUIRE_FALSE(make_mirror_fan(w1, 4, 0, 3).has_value());
    }
}

TEST_CASE("enumeration matches a literal scan, shape for shape") {
    check_enumeration(fixture_w1());
    check_enumeration(fixture_h2());
    check_enumeration(fixture_t4());
    check_enumeration(fixture_p5());
    for (int n = 1; n <= 5; ++n)
        for (std::uint64_t seed = 1; seed <= 3; ++seed)
            check_enumeration(random_instance(n, seed).graph);

    SECTION("frozen inventory sizes") {
        REQUIRE(enumerate_gadgets(fixture_w1()).size() == 8);
        REQUIRE(enumerate_gadgets(fixture_h2()).size() == 18);
        REQUIRE(enumerate_gadgets(fixture_t4()).size() == 54);
        REQUIRE(enumerate_gadgets(fixture_p5()).size() == 80);
    }
    SECTION("the smallest dual sits exactly at the counting bound") {
        REQUIRE(gadget_count_bound(fixture_w1()) == 8);
    }
    SECTION("every neighbor path is chord-free, rechecked pairwise") {
        PlaneGraph g = fixture_p5();
        for (const Gadget& gd : enumerate_gadgets(g)) {
            const std::vector<int>& wedge =
                gd.kind == GadgetKind::Fan ? gd.alpha : gd.beta;
            for (size_t i = 0; i < wedge.size(); ++i)
                for (size_t j = i + 2; j < wedge.size(); ++j) {
                    bool adj = false;
                    for (int x : g.rot[wedge[i]]) adj |= x == wedge[j];
                    REQUIRE_FALSE(adj);
                }
        }
    }
}

TEST_CASE("corner screening of the inventories") {
    struct Row {
        PlaneGraph g;
        size_t usable;
    };
    std::vector<Row> rows;
    rows.push_back({fixture_w1(), 2});
    rows.push_back({fixture_h2(), 3});
    rows.push_back({fixture_t4(), 8});
    rows.push_back({fixture_p5(), 16});
    for (const Row& row : rows) {
        std::vector<Gadget> inv = usable_inventory(row.g);
        REQUIRE(inv.size() == row.usable);
        bool has0 = false, hasT = false;
        for (const Gadget& gd : inv) {
            REQUIRE(alpha_avoids_poles(row.g, gd));  // screening subsumes the pole rule
            has0 |= is_initial_fan(row.g, gd);
            hasT |= is_final_mirror_fan(row.g, gd);
        }
        REQUIRE(has0);
        REQUIRE(hasT);
    }
}

TEST_CASE("open face classes by front position") {
    OpenFaceKind first = classify_open_face(GadgetKind::Fan, kAlphaFirst);
    OpenFaceKind mid = classify_open_face(GadgetKind::Fan, kAlphaMiddle);
    OpenFaceKind last = classify_open_face(GadgetKind::Fan, kAlphaLast);
    REQUIRE((first == OpenFaceKind{1, 2}));
    REQUIRE((mid == OpenFaceKind{1, 1}));
    REQUIRE((last == OpenFaceKind{2, 1}));
    OpenFaceKind mfirst = classify_open_face(GadgetKind::MirrorFan, kAlphaFirst);
    OpenFaceKind mlast = classify_open_face(GadgetKind::MirrorFan, kAlphaLast);
    REQUIRE((mfirst == OpenFaceKind{1, 2}));
    REQUIRE((mlast == OpenFaceKind{2, 1}));
    REQUIRE_FALSE(OpenFaceKind{1, 2}.dead());
    REQUIRE(OpenFaceKind{2, 2}.dead());
}

TEST_CASE("growing the single rectangle from east wall to west wall") {
    PlaneGraph g = fixture_w1();
    GrowthState st = initial_state(g);
    REQUIRE(st.cut.verts == std::vector<int>{3, 4, 1});
    REQUIRE(st.cut.edges.size() == 2);
    REQUIRE(st.cut.edges[0].creator == -1);

    Gadget g0 = *initial_fan(g);
    StitchReport r0 = grow(g, st, g0, 0);
    REQUIRE(r0.ok());
    REQUIRE_FALSE(r0.forbidden_first);
    REQUIRE(st.cut.verts == std::vector<int>{3, 0, 1});
    for (const CutEdge& e : st.cut.edges) {
        REQUIRE(e.creator == 0);
        // the east frame closes these faces as soon as they appear
        REQUIRE((e.face == OpenFaceKind{1, 1}));
    }
    REQUIRE(directed_label(g, st.rel, 4, 0) == 2);

    SECTION("a consumed back-boundary cannot be stitched again") {
        REQUIRE_THROWS_AS(grow(g, st, g0, 9), GraphError);
        REQUIRE_THROWS_AS(stitch(g, st.cut, g0), GraphError);
    }
    SECTION("the closing mirror completes the labeling") {
        Gadget gt = *final_mirror_fan(g);
        StitchReport rt = grow(g, st, gt, 1);
        REQUIRE(rt.ok());
        REQUIRE(cut_is_final(g, st.cut));
        REQUIRE(directed_label(g, st.rel, 3, 0) == 1);
        REQUIRE(directed_label(g, st.rel, 0, 1) == 1);
        REQUIRE(directed_label(g, st.rel, 4, 0) == 2);
        REQUIRE(directed_label(g, st.rel, 0, 2) == 2);
        REQUIRE(validate_rel(g, st.rel).pass);
        REQUIRE(is_slant(g, st.rel));
        std::vector<Rel> all = enumerate_slant_rels_exhaustive(g);
        REQUIRE(all.size() == 1);
        REQUIRE(all[0].lab == st.rel.lab);
    }
}

TEST_CASE("the two-column dual grows through its middle fan") {
    PlaneGraph g = fixture_h2();
    Gadget g0 = *initial_fan(g);
    REQUIRE(g0.beta == std::vector<int>{4, 5, 2});
    Gadget mid = *make_fan(g, 4, 1, 2);
    REQUIRE(mid.alpha == std::vector<int>{4, 0, 2});
    Gadget gt = *final_mirror_fan(g);
    std::vector<StitchReport> reports;
    GrowthState st = apply_sequence(g, {g0, mid, gt}, &reports);
    REQUIRE(reports.size() == 3);
    for (const StitchReport& r : reports) REQUIRE(r.ok());
    REQUIRE(cut_is_final(g, st.cut));
    REQUIRE(validate_rel(g, st.rel).pass);
    REQUIRE(is_slant(g, st.rel));

    SECTION("the middle step leaves genuinely open faces") {
        GrowthState mid_st = apply_sequence(g, {g0, mid});
        REQUIRE(mid_st.cut.verts == std::vector<int>{4, 0, 2});
        REQUIRE(mid_st.cut.edges[0].creator == 1);
        REQUIRE((mid_st.cut.edges[0].face == OpenFaceKind{1, 2}));
        REQUIRE((mid_st.cut.edges[1].face == OpenFaceKind{2, 1}));
    }
}

TEST_CASE("a suitable front that lands on the cut is rejected loudly") {
    PlaneGraph g = fixture_t4();
    GrowthState st = apply_sequence(g, {*initial_fan(g), *make_fan(g, 6, 3, 2)});
    REQUIRE(st.cut.verts == std::vector<int>{6, 1, 0, 2, 4});
    Gadget bad = *make_fan(g, 1, 0, 2);
    REQUIRE(bad.alpha == std::vector<int>{1, 5, 4, 2});
    REQUIRE(suitable(st.cut, bad));
    REQUIRE_FALSE(alpha_clear_of_cut(st.cut, bad));
    REQUIRE_THROWS_AS(stitch(g, st.cut, bad), GraphError);
    REQUIRE_THROWS_AS(grow(g, st, bad), GraphError);
    REQUIRE_THROWS_AS(check_valid_extension(g, st, enumerate_gadgets(g), bad), GraphError);
}

TEST_CASE("stored face classes agree with retracing them") {
    auto audit = [](const PlaneGraph& g) {
        Walker w;
        w.visit = [&](const GrowthState& st) {
            for (size_t i = 0; i < st.cut.edges.size(); ++i) {
                const CutEdge& e = st.cut.edges[i];
                if (e.creator < 0) continue;
                OpenFaceKind k = clamped_sides(g, st.rel, st.cut.verts[i], st.cut.verts[i + 1]);
                REQUIRE((k == e.face));
            }
        };
        return walk_states(g, w);
    };
    REQUIRE(audit(fixture_w1()) == 3);
    REQUIRE(audit(fixture_h2()) == 4);
    REQUIRE(audit(fixture_t4()) == 4);
    REQUIRE(audit(fixture_p5()) == 10);
    for (int n = 1; n <= 5; ++n)
        for (std::uint64_t seed = 1; seed <= 3; ++seed) audit(random_instance(n, seed).graph);
}

TEST_CASE("admission decisions match forced stitches everywhere") {
    // the module keystone: the pairing rules admit a gadget exactly when the
    // stitched labeling stays clean, on every reachable state
    auto keystone = [](const PlaneGraph& g) {
        std::vector<Gadget> inv = usable_inventory(g);
        int checked = 0;
        Walker w;
        w.candidate = [&](const GrowthState& st, const Gadget& gd, const StitchReport& rep, int) {
            for (const CutEdge& e : st.cut.edges)
                if (e.creator < 0) return;  // pairing rules need a full creator record
            ++checked;
            REQUIRE(check_valid_extension(g, st, inv, gd) == rep.ok());
        };
        walk_states(g, w);
        return checked;
    };
    REQUIRE(keystone(fixture_w1()) == 1);
    REQUIRE(keystone(fixture_h2()) == 2);
    REQUIRE(keystone(fixture_t4()) == 3);
    REQUIRE(keystone(fixture_p5()) == 10);
    int generated = 0;
    for (int n = 1; n <= 6; ++n)
        for (std::uint64_t seed = 1; seed <= 3; ++seed)
            generated += keystone(random_instance(n, seed).graph);
    REQUIRE(generated > 50);
}

TEST_CASE("pruned stitches always leave a face with two long sides") {
    int events = 0;
    auto replay = [&](const PlaneGraph& g) {
        Walker w;
        w.candidate = [&](const GrowthState& st, const Gadget& gd, const StitchReport& rep, int) {
            if (rep.ok()) return;
            ++events;
            GrowthState forced = st;
            grow(g, forced, gd, 999);
            bool damaged = false;
            auto probe = [&](int a, int b) {
                auto [lo, up] = detail::open_face_sides(g, forced.rel, a, b);
                damaged |= lo >= 2 && up >= 2;
            };
            if (rep.forbidden_first) probe(gd.alpha[0], gd.alpha[1]);
            if (rep.forbidden_last) probe(gd.alpha[gd.alpha.size() - 2], gd.alpha.back());
            REQUIRE(damaged);
        };
        walk_states(g, w);
    };
    replay(fixture_w1());
    replay(fixture_h2());
    replay(fixture_t4());
    replay(fixture_p5());
    REQUIRE(events == 3);  // one on the pinwheel, two on the five-block
    for (int n = 1; n <= 6; ++n)
        for (std::uint64_t seed = 1; seed <= 6; ++seed) replay(random_instance(n, seed).graph);
}

TEST_CASE("pair and triple predicates") {
    PlaneGraph w1 = fixture_w1();
    Gadget g0 = *initial_fan(w1);
    Gadget gt = *final_mirror_fan(w1);
    REQUIRE(is_g_pair(gt, g0));  // the closer rides the opener's front
    REQUIRE_FALSE(is_g_pair(g0, gt));
    REQUIRE_FALSE(is_forbidden_pair(gt, g0));

    PlaneGraph p5 = fixture_p5();
    Gadget gd = *make_fan(p5, 2, 0, 4);
    Gadget gp = *make_fan(p5, 5, 1, 0);
    REQUIRE(gd.alpha == std::vector<int>{2, 3, 4});
    REQUIRE(gp.alpha == std::vector<int>{5, 2, 0});
    REQUIRE(is_forbidden_pair(gd, gp));
    REQUIRE_FALSE(is_forbidden_pair(gp, gd));

    SECTION("disjoint boundaries never pair") {
        std::vector<Gadget> inv = enumerate_gadgets(p5);
        int disjoint = 0;
        for (const Gadget& a : inv)
            for (const Gadget& b : inv) {
                bool share = false;
                for (int v : a.alpha) share |= path_has_vertex(b.alpha, v) || path_has_vertex(b.beta, v);
                for (int v : a.beta) share |= path_has_vertex(b.alpha, v) || path_has_vertex(b.beta, v);
                if (share) continue;
                ++disjoint;
                REQUIRE_FALSE(is_g_pair(a, b));
                REQUIRE_FALSE(is_forbidden_pair(a, b));
            }
        REQUIRE(disjoint > 0);
    }
    SECTION("a frozen triple and the exhaustive triple count") {
        std::vector<Gadget> inv = enumerate_gadgets(p5);
        Gadget b = *make_fan(p5, 2, 1, 6);
        Gadget o = *make_mirror_fan(p5, 2, 3, 7);
        Gadget u = *make_mirror_fan(p5, 0, 4, 7);
        REQUIRE(is_m_triple(b, o, u));
        REQUIRE_FALSE(is_m_triple(u, o, b));
        REQUIRE_FALSE(is_m_triple(b, u, o));  // the middle member must be a mirror over both
        int triples = 0;
        for (const Gadget& x : inv)
            for (const Gadget& y : inv)
                for (const Gadget& z : inv) triples += is_m_triple(x, y, z);
        REQUIRE(triples == 136);
    }
}

TEST_CASE("connections cache the combined front") {
    PlaneGraph w1 = fixture_w1();
    std::vector<Gadget> inv = enumerate_gadgets(w1);
    int i0 = -1, it = -1;
    for (size_t i = 0; i < inv.size(); ++i) {
        if (is_initial_fan(w1, inv[i])) i0 = (int)i;
        if (is_final_mirror_fan(w1, inv[i])) it = (int)i;
    }
    REQUIRE(is_g_pair(inv[it], inv[i0]));
    Connection c = make_g_pair_connection(inv, it, i0);
    REQUIRE(c.kind == ConnectionKind::GPair);
    REQUIRE(c.alpha == std::vector<int>{3, 2, 1});
    REQUIRE(c.members() == std::vector<int>{it, i0});
    REQUIRE(c.subject() == it);
    REQUIRE(path_contains_subpath(inv[i0].alpha, inv[it].beta));

    PlaneGraph p5 = fixture_p5();
    std::vector<Gadget> pinv = enumerate_gadgets(p5);
    auto find = [&](const Gadget& gd) {
        for (size_t i = 0; i < pinv.size(); ++i)
            if (pinv[i] == gd) return (int)i;
        return -1;
    };
    int b = find(*make_fan(p5, 2, 1, 6));
    int o = find(*make_mirror_fan(p5, 2, 3, 7));
    int u = find(*make_mirror_fan(p5, 0, 4, 7));
    REQUIRE((b >= 0 && o >= 0 && u >= 0));
    Connection t = make_m_triple_connection(pinv, b, o, u);
    REQUIRE(t.alpha == std::vector<int>{2, 3, 7});
    REQUIRE(t.subject() == o);
    REQUIRE(t.members() == std::vector<int>{b, o, u});
    REQUIRE_FALSE(c == t);
}

TEST_CASE("degenerate four-corner graphs have no growth machinery to run") {
    for (bool ew : {true, false}) {
        PlaneGraph g = diagonal_square(ew);
        REQUIRE(validate_proper_triangular(g).pass);
        REQUIRE(interior_vertex_count(g) == 0);
        std::vector<Rel> rels = enumerate_slant_rels_exhaustive(g);
        REQUIRE(rels.size() == 1);
        REQUIRE(is_slant(g, rels[0]));
        if (ew)
            REQUIRE(directed_label(g, rels[0], 3, 1) == 2);  // east wall drains west
        else
            REQUIRE(directed_label(g, rels[0], 2, 0) == 1);  // south wall rises north
    }
}

TEST_CASE("gadget json carries the full description") {
    PlaneGraph g = fixture_w1();
    Json j = gadget_to_json(*initial_fan(g));
    REQUIRE(j["kind"] == "fan");
    REQUIRE(j["v_l"] == 3);
    REQUIRE(j["v_m"] == 4);
    REQUIRE(j["v_h"] == 1);
    REQUIRE(j["alpha"] == Json({3, 0, 1}));
    REQUIRE(j["beta"] == Json({3, 4, 1}));
    REQUIRE(j["gamma"].size() == 1);
    REQUIRE(gadget_to_json(*final_mirror_fan(g))["kind"] == "mirror");
}
