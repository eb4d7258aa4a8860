#pragma once
// The admission engine.  Instead of tracking every growth frontier explicitly
// (there can be exponentially many), it keeps two stores: the pile of steps
// admitted so far and the pairings that justified them.  A step joins the pile
// when some admitted step carries its whole back on one front, or, for a
// mirror-fan, when a chain of stored pairings covers its back end to end.
// Growth succeeds exactly when the closing step over the west corner joins.

#include <limits>
#include <map>
#include <optional>
#include <set>

#include "gadget.hpp"

namespace aul {

// ------------------------------------------------------------------- stores

/* One admission event: which step joined, which stored pairing justified it
   (-1 for seeds), and the event counter at that moment.  A step may be
   admitted repeatedly under different pairings; each insertion leaves its own
   record. */
struct AdmissionRecord {
    int gadget = -1;
    int connection = -1;
    int iteration = 0;
};

/* The candidate pool plus the admitted subset.  The opener is admitted from
   the start and needs no record; every other admitted entry has at least
   one. */
struct GadgetStore {
    std::vector<Gadget> inventory;
    std::vector<char> admitted;
    std::vector<AdmissionRecord> records;
    int opener = -1;
    int closer = -1;

    bool has(int i) const { return i >= 0 && admitted[i]; }
    int find(GadgetKind k, int l, int m, int h) const {
        for (int i = 0; i < (int)inventory.size(); ++i) {
            const Gadget& gd = inventory[i];
            if (gd.kind == k && gd.l == l && gd.m == m && gd.h == h) return i;
        }
        return -1;
    }
};

/* Deduplicated pairings.  Insertion order is the discovery order, which makes
   reruns reproducible. */
struct ConnectionStore {
    std::vector<Connection> conns;

    int find(const Connection& c) const {
        for (int i = 0; i < (int)conns.size(); ++i)
            if (conns[i] == c) return i;
        return -1;
    }
    bool contains(const Connection& c) const { return find(c) >= 0; }
    int insert(const Connection& c) {
        int i = find(c);
        if (i >= 0) return i;
        conns.push_back(c);
        return (int)conns.size() - 1;
    }
};

/* Counters surfaced for tests and the trace; absorbed upward through pocket
   recursion. */
struct GrowthStats {
    long long iterations = 0;
    long long pocket_checks = 0;
    long long pocket_failures = 0;
    long long malformed_pockets = 0;
    long long case2_pockets = 0;
    long long skipped_orderings = 0;
    long long end_rule_fallbacks = 0;
    int deepest_recursion = 0;

    void absorb(const GrowthStats& o) {
        pocket_checks += o.pocket_checks;
        pocket_failures += o.pocket_failures;
        malformed_pockets += o.malformed_pockets;
        case2_pockets += o.case2_pockets;
        skipped_orderings += o.skipped_orderings;
        end_rule_fallbacks += o.end_rule_fallbacks;
        deepest_recursion = std::max(deepest_recursion, o.deepest_recursion);
    }
};

/* Memo of pocket verdicts, keyed by the owning pairing's members plus the
   exact back-boundary section the pocket spans (two back-boundaries may route
   differently between the same end pair, so the key carries the section). */
using PocketMemo = std::map<std::vector<int>, char>;

/* State threaded through pocket recursion.  Region checks must be grounded:
   a check that depends on itself (two pairings each needing the other's
   region to pass) certifies nothing, so evaluations in progress are tracked
   by a signature in original-graph coordinates and a re-entry fails that
   route without being memoized.  Cap vertices created along the way get
   unique negative ids so signatures never collide across levels. */
struct RecurseState {
    std::set<std::vector<int>> active;
    int next_cap = -2;
};

struct FaceGrowingResult {
    bool has_slant = false;
    GadgetStore gadgets;
    ConnectionStore connections;
    long long connection_bound = 0;  // pairs + triples over the whole pool
    GrowthStats stats;
};

// ------------------------------------------------- fronts on a back-boundary

/* A stored pairing viewed against a fixed back-boundary L: which L positions
   its combined front touches, whether the contact is broken by pockets, and
   which member hands growth over at each end. */
struct BackboneNode {
    int conn = -1;
    int lower = -1, higher = -1;  // member inventory indices
    std::vector<int> span;        // sorted L indices touched by the front
    bool fractional = false;
    std::vector<int> alpha_eff;   // front with any pocketed stretch replaced by L
    bool source = false, sink = false;
};

/* Nodes are pairings whose fronts cover pieces of L; an edge says the left
   node hands its top member over as the right node's bottom member, with no
   gap between their stretches.  A path from a source to a sink certifies
   that L is covered end to end. */
struct BackboneGraph {
    std::vector<int> L;
    std::vector<BackboneNode> nodes;
    std::vector<std::vector<int>> out;
};

/* An interval of L where the pairing's front detaches: the two boundary walks
   share only the interval ends.  The enclosed region must be growable on its
   own before the pairing may vouch for L. */
struct Pocket {
    std::vector<int> lsec;   // back-boundary walk from a to b
    std::vector<int> asec;   // front walk from a to b
    std::vector<int> verts;  // region vertices, boundary included
    bool well_formed = false;
};

enum class ConnectionUse : std::int8_t { Usable, Bad };

namespace detail {

/* Face ids strictly inside a simple cycle of existing edges, or nullopt when
   the walk is not simple or does not separate.  The inside is the dual
   component not containing the unbounded face. */
inline std::optional<std::vector<int>> faces_inside_cycle(const PlaneGraph& g, const FaceSet& fs,
                                                          const std::vector<int>& cyc) {
    int k = (int)cyc.size();
    if (k < 3) return std::nullopt;
    {
        std::vector<int> s = cyc;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) return std::nullopt;
    }
    std::vector<char> wall(g.edge_count, 0);
    for (int i = 0; i < k; ++i) {
        int u = cyc[i], v = cyc[(i + 1) % k];
        if (!g.adjacent(u, v)) return std::nullopt;
        wall[g.edge_id(u, v)] = 1;
    }
    auto flood = [&](int seed) {
        std::vector<char> in(fs.faces.size(), 0);
        std::vector<int> stack{seed}, out;
        in[seed] = 1;
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            out.push_back(f);
            const std::vector<int>& c = fs.faces[f].cycle;
            for (size_t i = 0; i < c.size(); ++i) {
                int a = c[i], b = c[(i + 1) % c.size()];
                if (wall[g.edge_id(a, b)]) continue;
                int nb = fs.face_of(b, a);
                if (!in[nb]) {
                    in[nb] = 1;
                    stack.push_back(nb);
                }
            }
        }
        return out;
    };
    auto has_ext = [&](const std::vector<int>& comp) {
        return std::find(comp.begin(), comp.end(), fs.exterior) != comp.end();
    };
    int f1 = fs.face_of(cyc[0], cyc[1]);
    int f2 = fs.face_of(cyc[1], cyc[0]);
    if (f1 == f2) return std::nullopt;
    std::vector<int> comp = flood(f1);
    if (has_ext(comp)) {
        comp = flood(f2);
        if (has_ext(comp)) return std::nullopt;
    }
    std::sort(comp.begin(), comp.end());
    return comp;
}

inline std::vector<int> verts_of_faces(const FaceSet& fs, const std::vector<int>& faces) {
    std::set<int> vs;
    for (int f : faces)
        for (int v : fs.faces[f].cycle) vs.insert(v);
    return {vs.begin(), vs.end()};
}

}  // namespace detail

/* All detachment intervals of conn's front along L.  A front that never
   detaches (every touched stretch of L rides the front edge for edge) yields
   none; such a pairing needs no region checks. */
inline std::vector<Pocket> find_pockets(const PlaneGraph& g, const Connection& conn,
                                        const std::vector<int>& L) {
    std::vector<Pocket> out;
    std::vector<int> common;  // L indices whose vertex is on the front
    for (int i = 0; i < (int)L.size(); ++i)
        if (path_has_vertex(conn.alpha, L[i])) common.push_back(i);
    std::optional<FaceSet> fs;
    for (size_t j = 0; j + 1 < common.size(); ++j) {
        int p = common[j], q = common[j + 1];
        if (q == p + 1 && path_has_edge(conn.alpha, L[p], L[q])) continue;
        Pocket pk;
        pk.lsec.assign(L.begin() + p, L.begin() + q + 1);
        int ia = -1, ib = -1;
        for (int i = 0; i < (int)conn.alpha.size(); ++i) {
            if (conn.alpha[i] == L[p]) ia = i;
            if (conn.alpha[i] == L[q]) ib = i;
        }
        if (ia >= 0 && ib > ia) {
            pk.asec.assign(conn.alpha.begin() + ia, conn.alpha.begin() + ib + 1);
            std::vector<int> cyc = pk.lsec;
            for (int i = (int)pk.asec.size() - 2; i >= 1; --i) cyc.push_back(pk.asec[i]);
            if (!fs) fs = compute_faces(g);
            if (auto inside = detail::faces_inside_cycle(g, *fs, cyc)) {
                std::set<int> vs;
                for (int f : *inside)
                    for (int v : fs->faces[f].cycle) vs.insert(v);
                for (int v : cyc) vs.insert(v);
                pk.verts.assign(vs.begin(), vs.end());
                pk.well_formed = true;
            }
        }
        out.push_back(std::move(pk));
    }
    return out;
}

/* A region cut out of the host graph and capped with fresh exterior corner
   vertices so the engine can run on it alone.  to_parent maps region ids back
   to the host (-1 for the caps); admissions lists the pre-admitted steps with
   the pairing justifying each (nullopt for the opener); mask limits the loop
   to steps wholly inside the pocket plus the caps' own opener and closer. */
struct AuxiliaryGraph {
    PlaneGraph graph;
    std::vector<int> to_parent;
    std::vector<Gadget> inventory;
    std::vector<std::pair<int, std::optional<Connection>>> admissions;
    std::vector<char> mask;
};

namespace detail {

inline int find_by_boundaries(const std::vector<Gadget>& inv, const std::vector<int>& alpha,
                              const std::vector<int>& beta) {
    for (int i = 0; i < (int)inv.size(); ++i)
        if (inv[i].alpha == alpha && inv[i].beta == beta) return i;
    return -1;
}

}  // namespace detail

/* Build the standalone graph for one pocket of conn on L.  The region spans
   the pairing's whole front: east boundary = the backs of the pairing's
   anchor steps (plus the bridging edge for a triple), west boundary = the
   front with the pocketed stretch swapped for the back-boundary walk.  A new
   east cap (triple case) and west cap close it into a four-cornered graph.
   Returns nullopt when the walks do not bound a region of the host graph. */
inline std::optional<AuxiliaryGraph> build_auxiliary_graph(const PlaneGraph& g,
                                                           const std::vector<Gadget>& inv,
                                                           const Connection& conn, const Pocket& pk,
                                                           GrowthStats* stats = nullptr) {
    GrowthStats local;
    GrowthStats& st = stats ? *stats : local;
    if (!pk.well_formed || pk.lsec.size() < 2) {
        ++st.malformed_pockets;
        return std::nullopt;
    }
    int a = pk.lsec.front(), b = pk.lsec.back();
    const std::vector<int>& aP = conn.alpha;
    int aLo = aP.front(), aHi = aP.back();

    std::vector<int> west;  // front of the pairing with [a,b] replaced by the pocket's L walk
    try {
        west = path_section(aP, aLo, a);
        west.insert(west.end(), pk.lsec.begin() + 1, pk.lsec.end());
        std::vector<int> tail = path_section(aP, b, aHi);
        west.insert(west.end(), tail.begin() + 1, tail.end());
    } catch (const GraphError&) {
        ++st.malformed_pockets;
        return std::nullopt;
    }

    std::vector<int> east;  // backs of the anchor steps, bridged for a triple
    const Gadget* sB = nullptr;
    const Gadget* sO = nullptr;
    const Gadget* sU = nullptr;
    const Gadget* sL = nullptr;
    if (conn.kind == ConnectionKind::GPair) {
        sL = &inv[conn.gl];
        east = inv[conn.gr].beta;
    } else {
        ++st.case2_pockets;
        sB = &inv[conn.gb];
        sO = &inv[conn.go];
        sU = &inv[conn.gu];
        east = sB->beta;
        if (sB->h != sU->l) {
            if (!g.adjacent(sB->h, sU->l)) {
                ++st.malformed_pockets;
                return std::nullopt;
            }
            east.push_back(sU->l);
        }
        east.insert(east.end(), sU->beta.begin() + 1, sU->beta.end());
    }
    if (east.front() != aLo || east.back() != aHi) {
        ++st.malformed_pockets;
        return std::nullopt;
    }

    std::vector<int> cyc = east;
    for (int i = (int)west.size() - 2; i >= 1; --i) cyc.push_back(west[i]);
    std::optional<FaceSet> fs;
    std::optional<std::vector<int>> inside;
    try {
        fs = compute_faces(g);
        inside = detail::faces_inside_cycle(g, *fs, cyc);
    } catch (const GraphError&) {
        inside.reset();
    }
    if (!inside) {
        ++st.malformed_pockets;
        return std::nullopt;
    }

    std::set<int> vset(cyc.begin(), cyc.end());
    for (int f : *inside)
        for (int v : fs->faces[f].cycle) vset.insert(v);
    std::vector<int> old_ids(vset.begin(), vset.end());
    std::vector<int> to_new(g.n, -1);
    for (int i = 0; i < (int)old_ids.size(); ++i) to_new[old_ids[i]] = i;
    int k = (int)old_ids.size();
    bool cap_east = conn.kind == ConnectionKind::MTriple;
    int ce = cap_east ? k : to_new[east[1]];  // pair case: the right step's apex
    int cw = cap_east ? k + 1 : k;
    int n_new = k + (cap_east ? 2 : 1);

    auto remap = [&](const std::vector<int>& p) {
        std::vector<int> q;
        q.reserve(p.size());
        for (int v : p) {
            if (to_new[v] < 0) return std::vector<int>{};
            q.push_back(to_new[v]);
        }
        return q;
    };
    std::vector<std::vector<int>> faces;
    for (int f : *inside) {
        std::vector<int> c = remap(fs->faces[f].cycle);
        if (c.empty()) {
            ++st.malformed_pockets;
            return std::nullopt;
        }
        faces.push_back(std::move(c));
    }
    std::vector<int> westN = remap(west), eastN = remap(east);
    if (westN.empty() || eastN.empty()) {
        ++st.malformed_pockets;
        return std::nullopt;
    }
    for (size_t i = 0; i + 1 < westN.size(); ++i)
        faces.push_back({cw, westN[i], westN[i + 1]});
    if (cap_east)
        for (size_t i = 0; i + 1 < eastN.size(); ++i)
            faces.push_back({ce, eastN[i + 1], eastN[i]});

    int sN = to_new[aHi], sS = to_new[aLo];
    std::vector<std::string> labels(n_new);
    for (int i = 0; i < k; ++i) labels[i] = g.labels[old_ids[i]];
    if (cap_east) labels[ce] = "E'";
    labels[cw] = "W'";

    AuxiliaryGraph aux;
    try {
        aux.graph = plane_graph_from_faces(n_new, faces, {sN, ce, sS, cw},
                                           Corners{sN, cw, sS, ce}, labels);
    } catch (const GraphError&) {
        ++st.malformed_pockets;
        return std::nullopt;
    }
    if (!validate_proper_triangular(aux.graph).pass) {
        ++st.malformed_pockets;
        return std::nullopt;
    }
    aux.to_parent.assign(n_new, -1);
    for (int i = 0; i < k; ++i) aux.to_parent[i] = old_ids[i];

    aux.inventory = enumerate_gadgets(aux.graph);
    int opener = -1;
    for (int i = 0; i < (int)aux.inventory.size(); ++i) {
        const Gadget& gd = aux.inventory[i];
        if (gd.l == sS && gd.m == ce && gd.h == sN && gd.kind == GadgetKind::Fan) opener = i;
    }
    if (opener < 0) {
        ++st.malformed_pockets;
        return std::nullopt;
    }
    aux.admissions.push_back({opener, std::nullopt});

    /* Boundary steps enter pre-admitted, with their pairings marked as
       seeds.  A seed pairing is never pocket checked (its pocket is this very
       region, so checking it would rebuild this graph and the recursion would
       never shrink); back-boundary scans use only its solid stretches, so the
       carved stretch must be re-earned by growth inside the pocket. */
    auto seed_admit = [&](const Gadget& s) {
        return detail::find_by_boundaries(aux.inventory, remap(s.alpha), remap(s.beta));
    };
    auto seeded_pair = [&](int gl, int gr) {
        Connection c = make_g_pair_connection(aux.inventory, gl, gr);
        c.seeded = true;
        return c;
    };
    if (conn.kind == ConnectionKind::GPair) {
        int il = seed_admit(*sL);
        if (il < 0) {
            ++st.malformed_pockets;
            return std::nullopt;
        }
        try {
            aux.admissions.push_back({il, seeded_pair(il, opener)});
        } catch (const GraphError&) {
            ++st.malformed_pockets;
            return std::nullopt;
        }
    } else {
        int ib = seed_admit(*sB);
        int iu = seed_admit(*sU);
        if (ib < 0 || iu < 0) {
            ++st.malformed_pockets;
            return std::nullopt;
        }
        try {
            aux.admissions.push_back({ib, seeded_pair(ib, opener)});
            aux.admissions.push_back({iu, seeded_pair(iu, opener)});
        } catch (const GraphError&) {
            ++st.malformed_pockets;
            return std::nullopt;
        }
        /* The middle mirror's own wedge lies east of the region, so it enters
           as a synthetic entry: same front, back rerouted along the anchors'
           fronts and the bridge, no inner arcs of its own. */
        Gadget rew;
        rew.kind = GadgetKind::MirrorFan;
        std::vector<int> rb;
        try {
            rb = path_section(sB->alpha, sO->l, sB->h);
            if (sB->h != sU->l) rb.push_back(sU->l);
            std::vector<int> t2 = path_section(sU->alpha, sU->l, sO->h);
            rb.insert(rb.end(), t2.begin() + 1, t2.end());
        } catch (const GraphError&) {
            ++st.malformed_pockets;
            return std::nullopt;
        }
        rew.l = to_new[sO->l];
        rew.m = to_new[sO->m];
        rew.h = to_new[sO->h];
        if (rew.l < 0 || rew.m < 0 || rew.h < 0) {
            ++st.malformed_pockets;
            return std::nullopt;
        }
        rew.alpha = {rew.l, rew.m, rew.h};
        rew.beta = remap(rb);
        if (rew.beta.empty()) {
            ++st.malformed_pockets;
            return std::nullopt;
        }
        aux.inventory.push_back(rew);
        int io = (int)aux.inventory.size() - 1;
        try {
            Connection tc = make_m_triple_connection(aux.inventory, ib, io, iu);
            tc.seeded = true;
            aux.admissions.push_back({io, tc});
        } catch (const GraphError&) {
            ++st.malformed_pockets;
            return std::nullopt;
        }
    }

    std::set<int> pocket_new;
    for (int v : pk.verts)
        if (to_new[v] >= 0) pocket_new.insert(to_new[v]);
    aux.mask.assign(aux.inventory.size(), 0);
    int closer = -1;
    for (int i = 0; i < (int)aux.inventory.size(); ++i) {
        const Gadget& gd = aux.inventory[i];
        if (gd.kind == GadgetKind::MirrorFan && gd.l == sS && gd.m == cw && gd.h == sN) closer = i;
    }
    for (int i = 0; i < (int)aux.inventory.size(); ++i) {
        if (i == opener || i == closer) {
            aux.mask[i] = 1;
            continue;
        }
        bool inside_pocket = true;
        for (int v : aux.inventory[i].alpha)
            if (!pocket_new.count(v)) inside_pocket = false;
        for (int v : aux.inventory[i].beta)
            if (!pocket_new.count(v)) inside_pocket = false;
        if (inside_pocket) aux.mask[i] = 1;
    }
    return aux;
}

// forward declaration: pocket checks re-enter the engine on the cut-out region
inline FaceGrowingResult run_growth(const PlaneGraph& g, std::vector<Gadget> inventory,
                                    std::vector<std::pair<int, std::optional<Connection>>> seeds,
                                    std::vector<char> mask, int depth, GrowthStats* absorb_into,
                                    std::vector<int> to_root = {}, RecurseState* rs = nullptr);

/* Whether conn may stand in for a solid stretch of L: every pocket's region,
   grown on its own with the boundary steps pre-admitted, must reach its west
   cap.  Completed verdicts are memoized; a malformed pocket counts as
   failing, and so does a check already underway further up the stack. */
inline ConnectionUse classify_connection(const PlaneGraph& g, const std::vector<Gadget>& inv,
                                         const Connection& conn, const std::vector<int>& L,
                                         PocketMemo* memo, GrowthStats* stats, int depth,
                                         const std::vector<int>& to_root = {},
                                         RecurseState* rs = nullptr) {
    GrowthStats local;
    GrowthStats& st = stats ? *stats : local;
    RecurseState own;
    RecurseState& rec = rs ? *rs : own;
    if (depth > 32) throw GraphError("classify_connection: pocket recursion ran away");
    auto rt = [&](int v) { return to_root.empty() ? v : to_root[v]; };
    for (const Pocket& pk : find_pockets(g, conn, L)) {
        std::vector<int> key{(int)conn.kind, conn.gl, conn.gr, conn.gb, conn.go, conn.gu};
        key.insert(key.end(), pk.lsec.begin(), pk.lsec.end());
        if (memo) {
            auto it = memo->find(key);
            if (it != memo->end()) {
                if (!it->second) return ConnectionUse::Bad;
                continue;
            }
        }
        std::vector<int> sig{(int)conn.kind};
        for (int m : conn.members()) {
            for (int v : inv[m].alpha) sig.push_back(rt(v));
            sig.push_back(std::numeric_limits<int>::max());  // separators outside any id
            for (int v : inv[m].beta) sig.push_back(rt(v));
            sig.push_back(std::numeric_limits<int>::max() - 1);
        }
        for (int v : pk.lsec) sig.push_back(rt(v));
        if (rec.active.count(sig)) {
            ++st.pocket_failures;
            return ConnectionUse::Bad;  // self-supporting route; not memoized
        }
        ++st.pocket_checks;
        bool pass = false;
        if (auto aux = build_auxiliary_graph(g, inv, conn, pk, &st)) {
            std::vector<int> sub_root(aux->graph.n);
            for (int i = 0; i < aux->graph.n; ++i)
                sub_root[i] = aux->to_parent[i] >= 0 ? rt(aux->to_parent[i]) : rec.next_cap--;
            rec.active.insert(sig);
            FaceGrowingResult sub =
                run_growth(aux->graph, std::move(aux->inventory), std::move(aux->admissions),
                           std::move(aux->mask), depth + 1, &st, std::move(sub_root), &rec);
            rec.active.erase(sig);
            pass = sub.has_slant;
        }
        if (memo) (*memo)[key] = pass ? 1 : 0;
        if (!pass) {
            ++st.pocket_failures;
            return ConnectionUse::Bad;
        }
    }
    return ConnectionUse::Usable;
}

namespace detail {

/* Which member hands growth downward (lower) and which upward (higher) on L.
   The lower member's touches must reach the bottom of the stretch, the
   higher member's its top.  Nested touches leave the handover genuinely
   two-sided, so every consistent orientation comes back and each gets its
   own node; unusable ones simply never chain.  A triple whose middle touches
   L sits between its anchors by construction; when only the two anchors
   touch, the generic test decides and the case is counted. */
inline std::vector<std::pair<int, int>> resolve_orientations(const std::vector<Gadget>& inv,
                                                             const Connection& conn,
                                                             const std::vector<int>& pos,
                                                             const BackboneNode& node,
                                                             GrowthStats& st) {
    int lo = node.span.front(), hi = node.span.back();
    auto hits = [&](int gi) {
        std::vector<int> h;
        for (int v : inv[gi].alpha)
            if (pos[v] >= lo && pos[v] <= hi) h.push_back(pos[v]);
        std::sort(h.begin(), h.end());
        return h;
    };
    auto consistent = [&](int a, int b) {
        std::vector<int> A = hits(a), B = hits(b);
        return !A.empty() && !B.empty() && A.front() == lo && B.back() == hi;
    };
    auto gen = [&](std::initializer_list<int> ms) {
        std::vector<std::pair<int, int>> out;
        for (int x : ms)
            for (int y : ms)
                if (consistent(x, y)) out.push_back({x, y});
        return out;
    };
    if (conn.kind == ConnectionKind::GPair) {
        if (node.span.size() == 1) {
            int v = -1;
            for (int i = 0; i < (int)pos.size(); ++i)
                if (pos[i] == node.span[0]) v = i;
            // a single shared vertex at an end of the rider's front is decisive
            if (v == inv[conn.gl].l) return {{conn.gr, conn.gl}};
            if (v == inv[conn.gl].h) return {{conn.gl, conn.gr}};
        }
        return gen({conn.gl, conn.gr});
    }
    bool hb = !hits(conn.gb).empty(), ho = !hits(conn.go).empty(), hu = !hits(conn.gu).empty();
    if (hb && ho && hu) return {{conn.gb, conn.gu}};
    if (hb && ho) return {{conn.gb, conn.go}};
    if (ho && hu) return {{conn.go, conn.gu}};
    if (hb && hu) {
        ++st.end_rule_fallbacks;
        return gen({conn.gb, conn.gu});
    }
    if (hb) return gen({conn.gb});
    if (ho) return gen({conn.go});
    if (hu) return gen({conn.gu});
    return {};
}

}  // namespace detail

/* The chain graph over L = the mirror-fan's back.  Nodes are stored pairings
   touching L with at least two member fronts, cleaned of ends that face the
   wrong way; pocketed pairings are kept only if every pocket passes its
   region check, and then act with the pocketed stretch filled in.  An edge
   joins nodes whose stretches meet or overlap and whose shared member is the
   upper of the left and the lower of the right. */
inline BackboneGraph build_backbone_graph(const PlaneGraph& g, const GadgetStore& gs,
                                          const ConnectionStore& cs, const Gadget& mirror,
                                          PocketMemo* memo = nullptr, GrowthStats* stats = nullptr,
                                          int depth = 0, const std::vector<int>& to_root = {},
                                          RecurseState* rs = nullptr) {
    GrowthStats local;
    GrowthStats& st = stats ? *stats : local;
    const std::vector<Gadget>& inv = gs.inventory;
    BackboneGraph bg;
    bg.L = mirror.beta;
    int t = (int)bg.L.size();
    std::vector<int> pos(g.n, -1);
    for (int i = 0; i < t; ++i) pos[bg.L[i]] = i;

    struct Cand {
        BackboneNode node;
        std::vector<std::pair<int, int>> orients;
        std::vector<Pocket> pockets;
    };
    auto emit = [&bg](const BackboneNode& base, const std::vector<std::pair<int, int>>& orients) {
        for (auto [lo, hi] : orients) {
            BackboneNode n = base;
            n.lower = lo;
            n.higher = hi;
            bg.nodes.push_back(std::move(n));
        }
    };
    std::vector<Cand> cands;
    for (int ci = 0; ci < (int)cs.conns.size(); ++ci) {
        const Connection& conn = cs.conns[ci];
        int touching = 0;
        for (int m : conn.members()) {
            bool hit = false;
            for (int v : inv[m].alpha)
                if (pos[v] >= 0) hit = true;
            if (hit) ++touching;
        }
        if (touching < 2) continue;
        BackboneNode node;
        node.conn = ci;
        int last = -1;
        bool ordered = true;
        for (int v : conn.alpha)
            if (pos[v] >= 0) {
                if (pos[v] <= last) ordered = false;
                last = pos[v];
                node.span.push_back(pos[v]);
            }
        if (node.span.empty()) continue;
        if (!ordered) {
            ++st.skipped_orderings;
            continue;
        }
        if (conn.seeded) {
            /* Seeds never stand in for carved stretches: one solid node per
               run of touches that are adjacent on both L and the front. */
            int prev_pos = -2, prev_ai = -2, run_start = -1;
            std::vector<std::pair<int, int>> runs;
            for (int ai = 0; ai < (int)conn.alpha.size(); ++ai) {
                int p = pos[conn.alpha[ai]];
                if (p < 0) continue;
                if (run_start < 0) run_start = p;
                else if (p != prev_pos + 1 || ai != prev_ai + 1) {
                    runs.push_back({run_start, prev_pos});
                    run_start = p;
                }
                prev_pos = p;
                prev_ai = ai;
            }
            if (run_start >= 0) runs.push_back({run_start, prev_pos});
            for (auto [lo, hi] : runs) {
                BackboneNode rn;
                rn.conn = ci;
                for (int p = lo; p <= hi; ++p) {
                    rn.span.push_back(p);
                    rn.alpha_eff.push_back(bg.L[p]);
                }
                emit(rn, detail::resolve_orientations(inv, conn, pos, rn, st));
            }
            continue;
        }
        Cand c;
        c.orients = detail::resolve_orientations(inv, conn, pos, node, st);
        if (c.orients.empty()) {
            ++st.skipped_orderings;
            continue;
        }
        c.node = node;
        c.pockets = find_pockets(g, conn, bg.L);
        c.node.fractional = !c.pockets.empty();
        cands.push_back(std::move(c));
    }

    /* Every pocketed candidate is screened on its own merits.  Containment
       between candidates is not used to drop the inner one: the outer node's
       spliced front hides the member fronts the closing triple must mount
       on, and a failing outer tells nothing about the stretch it contains. */
    for (Cand& c : cands) {
        if (!c.node.fractional) {
            c.node.alpha_eff = cs.conns[c.node.conn].alpha;
            emit(c.node, c.orients);
            continue;
        }
        if (classify_connection(g, inv, cs.conns[c.node.conn], bg.L, memo, &st, depth, to_root,
                                rs) != ConnectionUse::Usable)
            continue;
        const Connection& conn = cs.conns[c.node.conn];
        int u = bg.L[c.node.span.front()], w = bg.L[c.node.span.back()];
        try {
            std::vector<int> eff = path_section(conn.alpha, conn.alpha.front(), u);
            eff.insert(eff.end(), bg.L.begin() + c.node.span.front() + 1,
                       bg.L.begin() + c.node.span.back() + 1);
            std::vector<int> tail = path_section(conn.alpha, w, conn.alpha.back());
            eff.insert(eff.end(), tail.begin() + 1, tail.end());
            c.node.alpha_eff = std::move(eff);
        } catch (const GraphError&) {
            ++st.skipped_orderings;
            continue;
        }
        int lo = c.node.span.front(), hi = c.node.span.back();
        c.node.span.clear();
        for (int p = lo; p <= hi; ++p) c.node.span.push_back(p);
        emit(c.node, c.orients);
    }

    /* End screening: a pairing whose upper member reaches the bottom of L
       belongs below L, not on it; mirrored at the top.  The four outer
       corners anchor instead when L starts or ends there. */
    int vS = g.corners.S, vN = g.corners.N;
    std::vector<BackboneNode> kept;
    for (BackboneNode& node : bg.nodes) {
        if (bg.L.front() != vS && path_has_vertex(inv[node.higher].alpha, bg.L.front())) continue;
        if (bg.L.back() != vN && path_has_vertex(inv[node.lower].alpha, bg.L.back())) continue;
        kept.push_back(std::move(node));
    }
    bg.nodes = std::move(kept);

    for (BackboneNode& node : bg.nodes) {
        bool has_opener = false;
        for (int m : cs.conns[node.conn].members())
            if (m == gs.opener) has_opener = true;
        /* A chain may open (close) on a member whose front carries the first
           (last) back edge; when the back starts or ends at an outer corner,
           a pairing holding the opening step anchors there as well. */
        node.source = node.span.front() == 0 &&
                      (path_has_edge(inv[node.lower].alpha, bg.L[0], bg.L[1]) ||
                       (bg.L.front() == vS && has_opener));
        node.sink = node.span.back() == t - 1 &&
                    (path_has_edge(inv[node.higher].alpha, bg.L[t - 2], bg.L[t - 1]) ||
                     (bg.L.back() == vN && has_opener));
    }

    bg.out.assign(bg.nodes.size(), {});
    for (int i = 0; i < (int)bg.nodes.size(); ++i)
        for (int j = 0; j < (int)bg.nodes.size(); ++j) {
            if (i == j) continue;
            const BackboneNode& x = bg.nodes[i];
            const BackboneNode& y = bg.nodes[j];
            if (std::max(x.span.front(), y.span.front()) >
                std::min(x.span.back(), y.span.back()) + 1)
                continue;
            if (x.higher != y.lower) continue;
            bg.out[i].push_back(j);
        }
    return bg;
}

/* All triples (bottom, mirror, top) certified by a source-to-sink chain in
   the graph over the mirror's back.  The bottom anchor must carry the first
   back edge on its front, the top anchor the last. */
inline std::vector<Connection> feasible_m_triples(const PlaneGraph& g, const GadgetStore& gs,
                                                  const ConnectionStore& cs, int mirror_idx,
                                                  PocketMemo* memo = nullptr,
                                                  GrowthStats* stats = nullptr, int depth = 0,
                                                  const std::vector<int>& to_root = {},
                                                  RecurseState* rs = nullptr) {
    const std::vector<Gadget>& inv = gs.inventory;
    const Gadget& mirror = inv[mirror_idx];
    BackboneGraph bg = build_backbone_graph(g, gs, cs, mirror, memo, stats, depth, to_root, rs);
    int t = (int)bg.L.size();
    std::vector<Connection> out;
    auto push_unique = [&](Connection c) {
        for (const Connection& o : out)
            if (o == c) return;
        out.push_back(std::move(c));
    };
    for (int s = 0; s < (int)bg.nodes.size(); ++s) {
        if (!bg.nodes[s].source) continue;
        std::vector<char> seen(bg.nodes.size(), 0);
        std::vector<int> queue{s};
        seen[s] = 1;
        for (size_t qi = 0; qi < queue.size(); ++qi)
            for (int nx : bg.out[queue[qi]])
                if (!seen[nx]) {
                    seen[nx] = 1;
                    queue.push_back(nx);
                }
        for (int e : queue) {
            if (!bg.nodes[e].sink) continue;
            std::vector<int> bots, tops;
            for (int m : cs.conns[bg.nodes[s].conn].members())
                if (path_has_edge(inv[m].alpha, bg.L[0], bg.L[1])) bots.push_back(m);
            for (int m : cs.conns[bg.nodes[e].conn].members())
                if (path_has_edge(inv[m].alpha, bg.L[t - 2], bg.L[t - 1])) tops.push_back(m);
            for (int mb : bots)
                for (int mu : tops)
                    if (is_m_triple(inv[mb], mirror, inv[mu]))
                        push_unique(make_m_triple_connection(inv, mb, mirror_idx, mu));
        }
    }
    return out;
}

/* All pairings (g, r) with r admitted and g's back riding r's front, minus
   those already stored. */
inline std::vector<Connection> candidate_g_pairs(const GadgetStore& gs, const ConnectionStore& cs,
                                                 int gi) {
    std::vector<Connection> out;
    for (int r = 0; r < (int)gs.inventory.size(); ++r) {
        if (!gs.has(r) || r == gi) continue;
        if (!is_g_pair(gs.inventory[gi], gs.inventory[r])) continue;
        Connection c = make_g_pair_connection(gs.inventory, gi, r);
        if (!cs.contains(c)) out.push_back(std::move(c));
    }
    return out;
}

/* The engine loop: sweep the pool in a fixed order, admitting any step some
   stored front fully carries, and any mirror-fan whose back a pairing chain
   covers; repeat until a full sweep adds nothing.  Growth succeeded when the
   closing step over the west corner was admitted. */
inline FaceGrowingResult run_growth(const PlaneGraph& g, std::vector<Gadget> inventory,
                                    std::vector<std::pair<int, std::optional<Connection>>> seeds,
                                    std::vector<char> mask, int depth, GrowthStats* absorb_into,
                                    std::vector<int> to_root, RecurseState* rs) {
    RecurseState own;
    RecurseState& rec = rs ? *rs : own;
    FaceGrowingResult res;
    GadgetStore& gs = res.gadgets;
    ConnectionStore& cs = res.connections;
    gs.inventory = std::move(inventory);
    long long n = (long long)gs.inventory.size();
    res.connection_bound = n * n + n * n * n;
    gs.admitted.assign(gs.inventory.size(), 0);
    gs.opener = gs.find(GadgetKind::Fan, g.corners.S, g.corners.E, g.corners.N);
    gs.closer = gs.find(GadgetKind::MirrorFan, g.corners.S, g.corners.W, g.corners.N);
    res.stats.deepest_recursion = depth;
    if (gs.opener < 0) {
        /* Degenerate four-corner graphs carry no growth steps; both forms
           hold exactly one labeling, and it slants. */
        res.has_slant = g.n == 4;
        if (absorb_into) absorb_into->absorb(res.stats);
        return res;
    }
    gs.admitted[gs.opener] = 1;
    for (auto& [gi, conn] : seeds) {
        if (gi == gs.opener) continue;
        gs.admitted[gi] = 1;
        int ci = conn ? cs.insert(*conn) : -1;
        gs.records.push_back({gi, ci, 0});
    }
    if (mask.empty()) mask.assign(gs.inventory.size(), 1);

    PocketMemo memo;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int gi = 0; gi < (int)gs.inventory.size(); ++gi) {
            if (!mask[gi]) continue;
            const Gadget& cand = gs.inventory[gi];
            if (!alpha_avoids_poles(g, cand)) continue;
            std::vector<Connection> found = candidate_g_pairs(gs, cs, gi);
            if (!found.empty()) {
                ++res.stats.iterations;
                gs.admitted[gi] = 1;
                for (Connection& c : found)
                    gs.records.push_back({gi, cs.insert(c), (int)res.stats.iterations});
                progress = true;
            }
            if (cand.kind == GadgetKind::MirrorFan && cand.beta.size() >= 4) {
                std::vector<Connection> trips =
                    feasible_m_triples(g, gs, cs, gi, &memo, &res.stats, depth, to_root, &rec);
                std::vector<Connection> fresh;
                for (Connection& c : trips)
                    if (!cs.contains(c)) fresh.push_back(std::move(c));
                if (!fresh.empty()) {
                    ++res.stats.iterations;
                    gs.admitted[gi] = 1;
                    for (Connection& c : fresh)
                        gs.records.push_back({gi, cs.insert(c), (int)res.stats.iterations});
                    progress = true;
                }
            }
        }
    }
    if (gs.closer >= 0 && gs.admitted[gs.closer]) res.has_slant = true;
    if (absorb_into) absorb_into->absorb(res.stats);
    return res;
}

inline FaceGrowingResult run_face_growing(const PlaneGraph& g) {
    return run_growth(g, enumerate_gadgets(g), {}, {}, 0, nullptr);
}

// --------------------------------------------------------------------- json

inline Json admission_record_to_json(const GadgetStore& gs, const ConnectionStore& cs,
                                     const AdmissionRecord& r) {
    Json j;
    j["gadget"] = gadget_to_json(gs.inventory[r.gadget]);
    j["iteration"] = r.iteration;
    if (r.connection >= 0) {
        const Connection& c = cs.conns[r.connection];
        Json cj;
        cj["kind"] = c.kind == ConnectionKind::GPair ? "pair" : "triple";
        Json mem = Json::array();
        for (int m : c.members()) mem.push_back(m);
        cj["members"] = mem;
        cj["front"] = c.alpha;
        j["connection"] = cj;
    }
    return j;
}

}  // namespace aul
