#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include <aul/fixtures.hpp>
#include <aul/oracle.hpp>
#include <aul/rel.hpp>

using namespace aul;

namespace {

/* The single-rectangle dual (center 0, vN=1, vW=2, vS=3, vE=4): every spoke
   label is forced by the corner rules. */
Rel w1_rel(const PlaneGraph& g) {
    Rel r = make_empty_rel(g);
    assign_label(r, g, 3, 0, 1);
    assign_label(r, g, 0, 1, 1);
    assign_label(r, g, 4, 0, 2);
    assign_label(r, g, 0, 2, 2);
    return r;
}

/* The labeling the two-column fixture inherits from its own drawing
   (A=0 top-left, B=1 bottom-left, C=2 top-right, D=3 bottom-right). */
bool mentions(const ValidationReport& rep, const std::string& needle) {
    for (const auto& v : rep.violations)
        if (v.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("cyclic block pattern recognizer") {
    REQUIRE(cyclic_blocks_ok({0, 1, 2, 3}));
    REQUIRE(cyclic_blocks_ok({2, 3, 0, 1}));
    REQUIRE(cyclic_blocks_ok({0, 0, 1, 2, 2, 3}));
    REQUIRE_FALSE(cyclic_blocks_ok({0, 1, 2}));
    REQUIRE_FALSE(cyclic_blocks_ok({0, 1, 2, 2}));
    REQUIRE_FALSE(cyclic_blocks_ok({0, 2, 1, 3}));
    REQUIRE_FALSE(cyclic_blocks_ok({0, 1, 2, 3, 0, 1, 2, 3}));
    REQUIRE_FALSE(cyclic_blocks_ok({0, 1, 2, kUnlabeled}));
}

TEST_CASE("the single-rectangle dual accepts exactly its forced labeling") {
    PlaneGraph g = fixture_w1();
    Rel r = w1_rel(g);
    REQUIRE(validate_rel(g, r).pass);

    SECTION("misplacing the east spoke violates the corner rule") {
        Rel bad = r;
        assign_label(bad, g, 4, 0, 1);
        ValidationReport rep = validate_rel(g, bad);
        REQUIRE_FALSE(rep.pass);
        REQUIRE(mentions(rep, "corner E"));
    }
    SECTION("an unlabeled interior edge is reported") {
        Rel bad = r;
        bad.lab[g.edge_id(0, 1)] = EdgeLabel::Unset;
        ValidationReport rep = validate_rel(g, bad);
        REQUIRE_FALSE(rep.pass);
        REQUIRE(mentions(rep, "unlabeled"));
    }
    SECTION("labeling a frame edge is reported") {
        Rel bad = r;
        assign_label(bad, g, 3, 4, 1);
        ValidationReport rep = validate_rel(g, bad);
        REQUIRE_FALSE(rep.pass);
        REQUIRE(mentions(rep, "frame edge"));
    }
}

TEST_CASE("exhaustive search forces the unique labelings of the smallest duals") {
    PlaneGraph w1 = fixture_w1();
    auto wr = enumerate_all_rels(w1);
    REQUIRE(wr.size() == 1);
    REQUIRE(wr[0] == w1_rel(w1));

    PlaneGraph h2 = fixture_h2();
    auto hr = enumerate_all_rels(h2);
    REQUIRE(hr.size() == 1);
    // the shared edge runs east to west between the rectangles
    REQUIRE(directed_label(h2, hr[0], 1, 0) == 2);
}

TEST_CASE("east-to-west view of the two-rectangle dual is a single chain") {
    PlaneGraph g = fixture_h2();
    Rel r = enumerate_all_rels(g)[0];
    OrientedSubgraph o = oriented_subgraph(g, r, 2);
    auto has = [&](int a, int b) {
        return std::find(o.out[a].begin(), o.out[a].end(), b) != o.out[a].end();
    };
    REQUIRE(has(5, 1));  // vE -> right rect
    REQUIRE(has(1, 0));
    REQUIRE(has(0, 3));  // left rect -> vW
    REQUIRE(is_acyclic(o.out));
    REQUIRE(o.bounded_ids.size() == 2);  // one band north of the chain, one south
    REQUIRE(is_slant(g, r));
}

TEST_CASE("oriented views of the single-rectangle labeling") {
    PlaneGraph g = fixture_w1();
    Rel r = w1_rel(g);
    for (int which : {1, 2}) {
        OrientedSubgraph o = oriented_subgraph(g, r, which);
        REQUIRE(o.bounded_ids.size() == 2);
        for (const StFaceSides& s : o.sides) {
            REQUIRE(s.ccw_side.size() == 3);
            REQUIRE(s.cw_side.size() == 3);
            REQUIRE(s.ccw_side.front() == s.source);
            REQUIRE(s.cw_side.front() == s.source);
            REQUIRE(s.ccw_side.back() == s.sink);
            REQUIRE(s.cw_side.back() == s.sink);
        }
        REQUIRE(is_acyclic(o.out));
    }
    REQUIRE(is_slant(g, r));
}

TEST_CASE("pinwheel labelings: frozen counts and structural invariants") {
    PlaneGraph g = fixture_p5();
    auto rels = enumerate_all_rels(g);
    REQUIRE(rels.size() == 2);  // frozen after first verified run
    int slant = 0, frozen_seen = 0;
    Rel fr = p5_slant_rel(g);
    for (const Rel& r : rels) {
        REQUIRE(validate_rel(g, r).pass);
        slant += is_slant(g, r);
        frozen_seen += r == fr;
        for (int which : {1, 2}) {
            OrientedSubgraph o = oriented_subgraph(g, r, which);
            REQUIRE(is_acyclic(o.out));
            // every face side has at least two edges
            for (const StFaceSides& s : o.sides) {
                REQUIRE(s.ccw_side.size() >= 3);
                REQUIRE(s.cw_side.size() >= 3);
            }
            // one global source and one global sink, at the right corners
            std::vector<int> indeg(g.n, 0), outdeg(g.n, 0);
            for (int v = 0; v < g.n; ++v)
                for (int u : o.out[v]) {
                    ++outdeg[v];
                    ++indeg[u];
                }
            int src = which == 1 ? g.corners.S : g.corners.E;
            int snk = which == 1 ? g.corners.N : g.corners.W;
            for (int v = 0; v < g.n; ++v) {
                if (indeg[v] == 0) REQUIRE(v == src);
                if (outdeg[v] == 0) REQUIRE(v == snk);
            }
        }
    }
    REQUIRE(slant == 2);  // frozen
    REQUIRE(frozen_seen == 1);
}

TEST_CASE("the two-column fixture has labelings but none of them slant") {
    PlaneGraph g = fixture_t4();
    REQUIRE(validate_proper_triangular(g).pass);
    auto rels = enumerate_all_rels(g);
    REQUIRE(rels.size() == 2);  // frozen
    for (const Rel& r : rels) REQUIRE_FALSE(is_slant(g, r));

    Rel drawn = t4_drawn_rel(g);
    REQUIRE(validate_rel(g, drawn).pass);
    SlantCheck sc = check_slant(g, drawn);
    REQUIRE_FALSE(sc.slant);
    // witness: the south-to-north face straddling the full-height divider
    REQUIRE(sc.which == 1);
    std::vector<int> cyc = sc.witness_face;
    std::sort(cyc.begin(), cyc.end());
    REQUIRE(cyc == std::vector<int>{0, 1, 2, 3, 4, 6});
}

TEST_CASE("labeling serialization round-trips and rejects malformed input") {
    PlaneGraph g = fixture_p5();
    Rel r = p5_slant_rel(g);
    Json j = rel_to_json(g, r);
    REQUIRE(rel_from_json(g, j) == r);

    SECTION("unknown edge") {
        Json bad = Json::array();
        bad.push_back({{"u", 0}, {"v", 7}, {"set", "T1"}, {"dir", "uv"}});
        REQUIRE_THROWS_WITH(rel_from_json(g, bad), Catch::Matchers::ContainsSubstring("no edge"));
    }
    SECTION("bad set name") {
        Json bad = Json::array();
        bad.push_back({{"u", 0}, {"v", 1}, {"set", "T3"}, {"dir", "uv"}});
        REQUIRE_THROWS_WITH(rel_from_json(g, bad), Catch::Matchers::ContainsSubstring("bad set/dir"));
    }
    SECTION("duplicate entry") {
        Json bad = Json::array();
        bad.push_back({{"u", 0}, {"v", 1}, {"set", "T1"}, {"dir", "uv"}});
        bad.push_back({{"u", 1}, {"v", 0}, {"set", "T2"}, {"dir", "vu"}});
        REQUIRE_THROWS_WITH(rel_from_json(g, bad), Catch::Matchers::ContainsSubstring("duplicate"));
    }
    SECTION("a frame edge round-trips through parsing but fails validation") {
        Json withframe = rel_to_json(g, r);
        withframe.push_back({{"u", 5}, {"v", 6}, {"set", "T1"}, {"dir", "uv"}});
        Rel parsed = rel_from_json(g, withframe);
        REQUIRE_FALSE(validate_rel(g, parsed).pass);
    }
}

TEST_CASE("exhaustive search refuses oversized instances") {
    REQUIRE_THROWS_WITH(enumerate_all_rels(fixture_p5(), 3),
                        Catch::Matchers::ContainsSubstring("cap"));
}
