#include "barnette/stein.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace barnette {

std::vector<std::pair<int, int>> HamiltonCycle::edge_set(const PlaneGraph& g) const {
    std::vector<std::pair<int, int>> out;
    for (int e : crossing_edges) out.push_back(g.edges()[e]);
    std::sort(out.begin(), out.end());
    return out;
}

std::string HamiltonCycle::to_line() const {
    std::ostringstream os;
    for (size_t i = 0; i < dual_vertices.size(); ++i) {
        if (i) os << ' ';
        os << dual_vertices[i];
    }
    return os.str();
}

ForestBipartition restrict_to_big(const PlaneGraph& g, const TriColoring& coloring,
                                  const BigSmallSplit& split, const BigSubgraph& J,
                                  const ForestBipartition& uw) {
    require_forest_bipartition(g, uw);
    (void)coloring;
    (void)split;
    ForestBipartition L;
    L.part_of.assign(J.graph.vertex_count(), 0);
    for (int j = 0; j < J.graph.vertex_count(); ++j) L.part_of[j] = uw.part_of[J.big_to_orig[j]];
    require_forest_bipartition(J.graph, L);
    auto w = is_compatible(J.graph, J.types, L);
    if (!w.compatible)
        fail(errc::contract_breach,
             "restriction not compatible at face " + std::to_string(w.first_violation()));
    return L;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    bool same(int a, int b) { return find(a) == find(b); }
};

}  // namespace

ForestBipartition extend_to_full(const PlaneGraph& g, const TriColoring& coloring,
                                 const SmallPathCover& cover,
                                 const std::vector<int>& part_of_big,
                                 const std::vector<ExtendChoice>* overrides) {
    SmallCover full;
    full.paths = cover.paths;
    return extend_to_full(g, coloring, full, part_of_big, overrides);
}

ForestBipartition extend_to_full(const PlaneGraph& g, const TriColoring& coloring,
                                 const SmallCover& cover,
                                 const std::vector<int>& part_of_big,
                                 const std::vector<ExtendChoice>* overrides) {
    const int n = g.vertex_count();
    std::vector<int> part(n, -1);
    Dsu dsu(n);
    auto colour = [&](int v, int p) {
        part[v] = p;
        for (int w : g.neighbors(v))
            if (part[w] == p) dsu.unite(v, w);
    };
    for (int v = 0; v < n; ++v)
        if (part_of_big[v] == 0 || part_of_big[v] == 1) colour(v, part_of_big[v]);

    for (size_t pi = 0; pi < cover.paths.size(); ++pi) {
        const CoverPath& p = cover.paths[pi];
        int b = p.flank_b, d = p.flank_d;
        int tb = part[b], td = part[d];
        if (tb < 0 || td < 0) fail(errc::bad_input, "flank of a cover path is uncoloured");
        ExtendChoice choice =
            overrides ? (*overrides)[pi] : ExtendChoice::automatic;

        const auto& seq = p.vertices;
        if (tb != td) {
            // Alternate starting from the colour of the first end; the last
            // end must come out consistent.
            int first = part[seq.front()];
            if (first < 0) fail(errc::bad_input, "path end uncoloured");
            for (size_t i = 1; i + 1 < seq.size(); ++i)
                colour(seq[i], (i % 2 == 0) ? first : 1 - first);
            int expect_last = (seq.size() % 2 == 1) ? first : 1 - first;
            if (part[seq.back()] != expect_last)
                fail(errc::contract_breach, "alternation does not meet the far end");
        } else {
            bool connected = dsu.same(b, d);
            bool pin_v0 = false;
            switch (choice) {
                case ExtendChoice::automatic: pin_v0 = !connected; break;
                case ExtendChoice::all_opposite: pin_v0 = false; break;
                case ExtendChoice::pin_lowest_inner: pin_v0 = true; break;
            }
            if (pin_v0 && connected)
                fail(errc::contract_breach, "pinning an inner vertex would close a flank cycle");
            int v0 = pin_v0 ? *std::min_element(p.inner.begin(), p.inner.end()) : -1;
            for (int v : p.inner) colour(v, v == v0 ? tb : 1 - tb);
        }

        // Every intermediate state must stay a two-forest partition.
        for (int which = 0; which < 2; ++which) {
            std::vector<char> mask(n, 0);
            for (int v = 0; v < n; ++v) mask[v] = part[v] == which;
            if (!induces_forest(g, mask).is_forest)
                fail(errc::contract_breach,
                     "part acquired a cycle while extending path " + std::to_string(pi));
        }
    }
    // Triangle triples: the two equal-coloured flanks push their between
    // vertex opposite; the chain hangs off the odd flank as a path, so both
    // parts stay forests unconditionally.
    for (const TriangleTriple& tt : cover.triples) {
        int p = tt.p, q = tt.q, r = tt.r;
        int s_pq = tt.s_pq, s_qr = tt.s_qr, s_rp = tt.s_rp;
        if (part[p] < 0 || part[q] < 0 || part[r] < 0)
            fail(errc::bad_input, "triple flank uncoloured");
        // Normalize by cyclic rotation: p, q share a colour, r is the odd one.
        auto rotate = [&]() {
            int np = q, nq = r, nr = p;
            int n_pq = s_qr, n_qr = s_rp, n_rp = s_pq;
            p = np; q = nq; r = nr;
            s_pq = n_pq; s_qr = n_qr; s_rp = n_rp;
        };
        if (part[q] == part[r]) rotate();
        else if (part[r] == part[p]) { rotate(); rotate(); }
        if (part[p] != part[q] || part[r] == part[p])
            fail(errc::contract_breach, "flank triangle colours do not split two-one");
        if (q < p) {
            std::swap(p, q);
            std::swap(s_qr, s_rp);
        }
        auto joins = [&](int s, int x, int y) { return g.has_edge(s, x) && g.has_edge(s, y); };
        if (!joins(s_pq, p, q) || !joins(s_qr, q, r) || !joins(s_rp, r, p))
            fail(errc::contract_breach, "triple adjacency lost in normalization");
        int sigma = part[p];
        colour(s_pq, 1 - sigma);
        colour(s_qr, 1 - sigma);
        colour(s_rp, sigma);
        for (int which = 0; which < 2; ++which) {
            std::vector<char> mask(n, 0);
            for (int v = 0; v < n; ++v) mask[v] = part[v] == which;
            if (!induces_forest(g, mask).is_forest)
                fail(errc::contract_breach, "triple extension closed a cycle");
        }
    }

    for (int v = 0; v < n; ++v)
        if (part[v] < 0) fail(errc::contract_breach, "cover misses vertex " + std::to_string(v));
    ForestBipartition out;
    out.part_of = std::move(part);
    (void)coloring;
    return out;
}

HamiltonCycle forest_partition_to_hamilton(const PlaneGraph& g, const ForestBipartition& uw) {
    const int n = g.vertex_count();
    if (n < 4) fail(errc::bad_input, "needs at least four vertices");
    std::vector<int> crossing;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        if (uw.part_of[u] != uw.part_of[v]) crossing.push_back(e);
    }
    const int expect = 2 * n - 4;
    if (static_cast<int>(crossing.size()) != expect)
        fail(errc::not_two_trees, "crossing edges " + std::to_string(crossing.size()) + " != " +
                                      std::to_string(expect));

    // Exactly two crossing edges per face; they stitch the dual cycle.
    std::vector<std::vector<std::pair<int, int>>> at_face(g.face_count());
    for (int e : crossing) {
        auto [u, v] = g.edges()[e];
        auto [f1, f2] = g.faces_of_edge(u, v);
        at_face[f1].push_back({e, f2});
        at_face[f2].push_back({e, f1});
    }
    for (int f = 0; f < g.face_count(); ++f)
        if (at_face[f].size() != 2)
            fail(errc::not_two_trees, "face " + std::to_string(f) + " has " +
                                          std::to_string(at_face[f].size()) + " crossing edges");

    HamiltonCycle h;
    std::vector<char> seen(g.face_count(), 0);
    int start = 0;
    int cur = start;
    // Deterministic orientation: leave the start face across the smaller edge id.
    int via = std::min(at_face[start][0].first, at_face[start][1].first);
    while (true) {
        h.dual_vertices.push_back(cur);
        h.crossing_edges.push_back(via);
        seen[cur] = 1;
        int nxt = at_face[cur][0].first == via ? at_face[cur][0].second : at_face[cur][1].second;
        int leave = at_face[nxt][0].first == via ? at_face[nxt][1].first : at_face[nxt][0].first;
        cur = nxt;
        via = leave;
        if (cur == start) break;
        if (seen[cur])
            fail(errc::disconnected_cycle, "dual walk revisits face " + std::to_string(cur));
    }
    if (static_cast<int>(h.dual_vertices.size()) != g.face_count()) {
        int missing = 0;
        for (char s : seen) missing += !s;
        fail(errc::disconnected_cycle,
             "two-factor splits; " + std::to_string(missing) + " faces unreached");
    }
    return h;
}

ForestBipartition hamilton_to_forest_partition(const PlaneGraph& g, const HamiltonCycle& h) {
    verify_hamilton_cycle(g, h);
    std::vector<char> is_crossing(g.edge_count(), 0);
    for (int e : h.crossing_edges) is_crossing[e] = 1;
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = ncomp;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (is_crossing[g.edge_id(v, w)] || comp[w] != -1) continue;
                comp[w] = ncomp;
                stack.push_back(w);
            }
        }
        ++ncomp;
    }
    if (ncomp != 2)
        fail(errc::contract_breach, "cycle split gives " + std::to_string(ncomp) + " sides");
    ForestBipartition out;
    out.part_of = comp;
    // Both sides are trees: acyclic with |part|-1 inner edges.
    for (int which = 0; which < 2; ++which) {
        std::vector<int> verts = out.part(which);
        int inner = 0;
        for (auto [u, v] : g.edges())
            if (out.part_of[u] == which && out.part_of[v] == which) ++inner;
        if (inner != static_cast<int>(verts.size()) - 1)
            fail(errc::contract_breach, "side is not a tree");
    }
    require_forest_bipartition(g, out);
    return out;
}

void verify_hamilton_cycle(const PlaneGraph& g, const HamiltonCycle& h) {
    const int nf = g.face_count();
    if (static_cast<int>(h.dual_vertices.size()) != nf)
        fail(errc::contract_breach, "cycle length != face count");
    std::vector<char> seen(nf, 0);
    for (int f : h.dual_vertices) {
        if (f < 0 || f >= nf || seen[f]) fail(errc::contract_breach, "not a permutation of faces");
        seen[f] = 1;
    }
    if (h.crossing_edges.size() != h.dual_vertices.size())
        fail(errc::contract_breach, "edge list length mismatch");
    for (size_t i = 0; i < h.dual_vertices.size(); ++i) {
        int f1 = h.dual_vertices[i];
        int f2 = h.dual_vertices[(i + 1) % h.dual_vertices.size()];
        int e = h.crossing_edges[i];
        auto [u, v] = g.edges()[e];
        auto fs = g.faces_of_edge(u, v);
        bool match = (fs.first == f1 && fs.second == f2) || (fs.first == f2 && fs.second == f1);
        if (!match)
            fail(errc::contract_breach, "edge " + std::to_string(e) + " does not join faces " +
                                            std::to_string(f1) + "," + std::to_string(f2));
    }
}

namespace {

void require_mixed_faces(const PlaneGraph& g, const BigSmallSplit& split) {
    for (const Face& f : g.faces()) {
        bool any_small = false, any_big = false;
        for (int v : f.boundary) (split.is_big[v] ? any_big : any_small) = true;
        if (!any_small)
            fail(errc::hypothesis_failed, "face " + std::to_string(f.id) + " is all big");
        if (!any_big)
            fail(errc::hypothesis_failed, "face " + std::to_string(f.id) + " is all small");
    }
}

std::vector<int> part_on_big(const PlaneGraph& g, const BigSubgraph& J,
                             const ForestBipartition& L) {
    std::vector<int> out(g.vertex_count(), -1);
    for (int j = 0; j < J.graph.vertex_count(); ++j) out[J.big_to_orig[j]] = L.part_of[j];
    return out;
}

}  // namespace

HamiltonCycle bipartite_fastpath(const PlaneGraph& g, const TriColoring& coloring,
                                   const BigSmallSplit& split) {
    require_mixed_faces(g, split);
    if (classify_family(g, split).kind != FamilyKind::GeneralBig3)
        fail(errc::hypothesis_failed, "fast path needs at least three big vertices");
    BigSubgraph J = big_subgraph(g, coloring, split);
    for (const Face& f : J.graph.faces())
        if (f.length() != 4)
            fail(errc::contract_breach, "big subgraph has a non-quadrilateral face");
    auto bip = is_bipartite(J.graph);
    if (!bip) fail(errc::contract_breach, "big subgraph not bipartite");
    ForestBipartition L;
    L.part_of = *bip;
    auto w = is_compatible(J.graph, J.types, L);
    if (!w.compatible) fail(errc::contract_breach, "bipartition not compatible");

    SmallPathCover cover = small_path_cover(g, coloring, split);
    ForestBipartition full = extend_to_full(g, coloring, cover, part_on_big(g, J, L));
    HamiltonCycle h = forest_partition_to_hamilton(g, full);
    verify_hamilton_cycle(g, h);
    return h;
}

LowerBoundResult hamilton_lower_bound(const PlaneGraph& g, const TriColoring& coloring,
                                      const BigSmallSplit& split) {
    require_mixed_faces(g, split);
    if (classify_family(g, split).kind != FamilyKind::GeneralBig3)
        fail(errc::hypothesis_failed, "needs at least three big vertices");
    BigSubgraph J = big_subgraph(g, coloring, split);
    auto bip = is_bipartite(J.graph);
    if (!bip) fail(errc::contract_breach, "big subgraph not bipartite");
    SmallPathCover cover = small_path_cover(g, coloring, split);

    const int nb = J.graph.vertex_count();
    int maxdeg = 0;
    for (int v = 0; v < nb; ++v) maxdeg = std::max(maxdeg, J.graph.degree(v));

    auto cycle_key = [&](const HamiltonCycle& h) { return h.edge_set(g); };
    std::set<std::vector<std::pair<int, int>>> distinct;
    LowerBoundResult res;
    auto push_cycle = [&](HamiltonCycle h) {
        verify_hamilton_cycle(g, h);
        if (distinct.insert(cycle_key(h)).second) res.cycles.push_back(std::move(h));
    };

    bool is_quad = nb == 4 && J.graph.edge_count() == 4;
    if (is_quad) {
        // Quadrilateral big subgraph: enumerate the base colourings and every
        // extension variant of the two flanking paths.
        res.k = 2;  // ceil((4-2)/(4*2-7))
        for (int bits = 0; bits < 16; ++bits) {
            std::vector<int> base(g.vertex_count(), -1);
            for (int j = 0; j < 4; ++j) base[J.big_to_orig[j]] = (bits >> j) & 1;
            // Variant space: per path, -1 = all opposite, otherwise the pinned
            // inner vertex position.
            std::vector<std::vector<int>> options;
            for (const CoverPath& p : cover.paths) {
                std::vector<int> opts{-1};
                for (size_t i = 0; i < p.inner.size(); ++i) opts.push_back(static_cast<int>(i));
                options.push_back(opts);
            }
            std::vector<size_t> idx(options.size(), 0);
            while (true) {
                std::vector<int> part = base;
                bool valid = true;
                for (size_t pi = 0; pi < cover.paths.size() && valid; ++pi) {
                    const CoverPath& p = cover.paths[pi];
                    int tb = part[p.flank_b], td = part[p.flank_d];
                    int pin = options[pi][idx[pi]];
                    if (tb != td) {
                        if (pin != -1) { valid = false; break; }
                        int first = part[p.vertices.front()];
                        for (size_t i = 1; i + 1 < p.vertices.size(); ++i)
                            part[p.vertices[i]] = (i % 2 == 0) ? first : 1 - first;
                        int expect = (p.vertices.size() % 2 == 1) ? first : 1 - first;
                        if (part[p.vertices.back()] != expect) valid = false;
                    } else {
                        for (size_t i = 0; i < p.inner.size(); ++i)
                            part[p.inner[i]] = (static_cast<int>(i) == pin) ? tb : 1 - tb;
                    }
                }
                if (valid) {
                    ForestBipartition full;
                    full.part_of = part;
                    bool forests = true;
                    for (int which = 0; which < 2 && forests; ++which) {
                        std::vector<char> mask(g.vertex_count(), 0);
                        for (int v = 0; v < g.vertex_count(); ++v) mask[v] = part[v] == which;
                        forests = induces_forest(g, mask).is_forest;
                    }
                    if (forests) push_cycle(forest_partition_to_hamilton(g, full));
                }
                // Advance the mixed-radix counter.
                size_t pos = 0;
                while (pos < idx.size()) {
                    if (++idx[pos] < options[pos].size()) break;
                    idx[pos++] = 0;
                }
                if (pos == idx.size()) break;
            }
        }
        if (static_cast<int>(res.cycles.size()) < 10)
            fail(errc::contract_breach, "quadrilateral case produced fewer than ten cycles");
        return res;
    }

    res.k = (nb - 2 + (4 * maxdeg - 7) - 1) / (4 * maxdeg - 7);

    // Face-adjacency graph of G[B]; greedy colouring; largest class K.
    const int nf = J.graph.face_count();
    std::vector<std::set<int>> face_verts(nf);
    for (const Face& f : J.graph.faces()) face_verts[f.id].insert(f.boundary.begin(), f.boundary.end());
    std::vector<std::vector<int>> adj(nf);
    for (int f1 = 0; f1 < nf; ++f1)
        for (int f2 = f1 + 1; f2 < nf; ++f2) {
            bool share = false;
            for (int v : face_verts[f1]) share |= face_verts[f2].count(v) > 0;
            if (share) {
                adj[f1].push_back(f2);
                adj[f2].push_back(f1);
            }
        }
    std::vector<int> col(nf, -1);
    int ncol = 0;
    for (int f = 0; f < nf; ++f) {
        std::set<int> used;
        for (int o : adj[f])
            if (col[o] >= 0) used.insert(col[o]);
        int c = 0;
        while (used.count(c)) ++c;
        col[f] = c;
        ncol = std::max(ncol, c + 1);
    }
    int bestc = 0, bestsz = -1;
    for (int c = 0; c < ncol; ++c) {
        int sz = static_cast<int>(std::count(col.begin(), col.end(), c));
        if (sz > bestsz) {
            bestsz = sz;
            bestc = c;
        }
    }
    std::vector<int> kfaces;
    for (int f = 0; f < nf; ++f)
        if (col[f] == bestc) kfaces.push_back(f);
    if (static_cast<int>(kfaces.size()) < res.k)
        fail(errc::contract_breach, "greedy class smaller than the guaranteed bound");

    // Map K faces to cover paths and reorder so they come first.
    std::vector<int> path_of_face(nf, -1);
    for (size_t pi = 0; pi < cover.paths.size(); ++pi) {
        const CoverPath& p = cover.paths[pi];
        std::set<int> fs{J.orig_to_big[p.end_a()], J.orig_to_big[p.flank_b],
                         J.orig_to_big[p.end_c()], J.orig_to_big[p.flank_d]};
        for (int f = 0; f < nf; ++f)
            if (face_verts[f] == fs) path_of_face[f] = static_cast<int>(pi);
    }
    SmallPathCover ordered;
    std::vector<char> taken(cover.paths.size(), 0);
    for (int f : kfaces) {
        if (path_of_face[f] < 0) fail(errc::contract_breach, "face without a cover path");
        ordered.paths.push_back(cover.paths[path_of_face[f]]);
        taken[path_of_face[f]] = 1;
    }
    const size_t nk = ordered.paths.size();
    for (size_t pi = 0; pi < cover.paths.size(); ++pi)
        if (!taken[pi]) ordered.paths.push_back(cover.paths[pi]);

    std::vector<int> base = part_on_big(g, J, [&] {
        ForestBipartition L;
        L.part_of = *bip;
        return L;
    }());
    for (uint64_t bits = 0; bits < (uint64_t{1} << nk); ++bits) {
        std::vector<ExtendChoice> choice(ordered.paths.size(), ExtendChoice::automatic);
        for (size_t i = 0; i < nk; ++i)
            choice[i] = (bits >> i) & 1 ? ExtendChoice::pin_lowest_inner : ExtendChoice::all_opposite;
        ForestBipartition full = extend_to_full(g, coloring, ordered, base, &choice);
        push_cycle(forest_partition_to_hamilton(g, full));
    }
    if (res.cycles.size() != (size_t{1} << nk))
        fail(errc::contract_breach, "variant cycles are not pairwise distinct");
    return res;
}

std::vector<int> primal_vertex_faces(const PlaneGraph& p, const PlaneGraph& dual_graph) {
    // Vertex v of p corresponds to the face of dual(p) bounded by the duals of
    // v's incident edges; identify it by matching boundary vertex sets (face
    // ids of p around v).
    std::vector<std::set<int>> around(p.vertex_count());
    for (int v = 0; v < p.vertex_count(); ++v)
        for (int w : p.neighbors(v)) around[v].insert(p.face_of_dart(v, w));
    std::vector<int> out(p.vertex_count(), -1);
    for (const Face& f : dual_graph.faces()) {
        std::set<int> fs(f.boundary.begin(), f.boundary.end());
        for (int v = 0; v < p.vertex_count(); ++v)
            if (around[v] == fs && p.degree(v) == f.length()) out[v] = f.id;
    }
    for (int v = 0; v < p.vertex_count(); ++v)
        if (out[v] < 0) fail(errc::contract_breach, "vertex-face correspondence incomplete");
    return out;
}

HamiltonizeResult hamiltonize(const PlaneGraph& g) {
    require_eulerian_triangulation(g);
    if (g.vertex_count() == 3) fail(errc::is_three_cycle, "the 3-cycle has no cubic dual");
    TriColoring coloring = three_coloring(g);
    BigSmallSplit split = big_small_split(g);
    FamilyTag tag = classify_family(g, split);

    HamiltonizeResult res;
    if (tag.kind == FamilyKind::DoubleWheel) {
        res.family = "double-wheel";
        // Direct construction: hubs are the two mutually non-adjacent vertices
        // seeing every rim vertex.
        int h1 = -1, h2 = -1;
        if (tag.wheel_l == 2) {
            h1 = 0;
            for (int v = 1; v < 6; ++v)
                if (!g.has_edge(0, v)) h2 = v;
        } else {
            for (int v = 0; v < g.vertex_count(); ++v)
                if (g.degree(v) == g.vertex_count() - 2) (h1 < 0 ? h1 : h2) = v;
        }
        const auto& rim = g.neighbors(h1);
        const int m = static_cast<int>(rim.size());
        std::vector<int> top(m), bottom(m);
        for (int i = 0; i < m; ++i) {
            int r1 = rim[i], r2 = rim[(i + 1) % m];
            int f = g.face_at_corner(h1, r1, r2);
            if (f < 0) f = g.face_at_corner(h1, r2, r1);
            top[i] = f;
            int fb = -1;
            for (auto cand : {g.face_at_corner(h2, r1, r2), g.face_at_corner(h2, r2, r1)})
                if (cand >= 0) fb = cand;
            bottom[i] = fb;
        }
        HamiltonCycle h;
        for (int i = 0; i < m; ++i) h.dual_vertices.push_back(top[i]);
        for (int i = m - 1; i >= 0; --i) h.dual_vertices.push_back(bottom[i]);
        // Crossing edges between consecutive faces.
        auto shared_edge = [&](int f1, int f2) {
            const Face& a = g.face(f1);
            std::set<std::pair<int, int>> edges;
            for (int i = 0; i < a.length(); ++i) {
                int u = a.boundary[i], v = a.boundary[(i + 1) % a.length()];
                edges.insert({std::min(u, v), std::max(u, v)});
            }
            const Face& bfc = g.face(f2);
            for (int i = 0; i < bfc.length(); ++i) {
                int u = bfc.boundary[i], v = bfc.boundary[(i + 1) % bfc.length()];
                if (edges.count({std::min(u, v), std::max(u, v)})) return g.edge_id(u, v);
            }
            return -1;
        };
        for (size_t i = 0; i < h.dual_vertices.size(); ++i) {
            int e = shared_edge(h.dual_vertices[i],
                                h.dual_vertices[(i + 1) % h.dual_vertices.size()]);
            if (e < 0) fail(errc::contract_breach, "wheel faces not adjacent");
            h.crossing_edges.push_back(e);
        }
        verify_hamilton_cycle(g, h);
        res.partition = hamilton_to_forest_partition(g, h);
        res.cycle = std::move(h);
        return res;
    }

    res.family = "general";
    if (big_neighbour_bound(g, split) > 4)
        fail(errc::hypothesis_not_met,
             "a vertex has more than four big neighbours (bound = " +
                 std::to_string(big_neighbour_bound(g, split)) + ")");
    BigSubgraph J = big_subgraph(g, coloring, split);
    TriColoring roles = assign_engine_roles(J.graph, J.types);
    ThetaPartitionResult theta = forest_partition_theta(J.graph, roles);
    // Compatibility with the natural classes (restriction of the unique
    // colouring) also holds: the predicate is role-free.
    auto cw = is_compatible(J.graph, J.types, theta.partition);
    if (!cw.compatible) fail(errc::contract_breach, "partition incompatible with big classes");

    SmallCover cover = small_cover(g, coloring, split);
    std::vector<int> base(g.vertex_count(), -1);
    for (int j = 0; j < J.graph.vertex_count(); ++j)
        base[J.big_to_orig[j]] = theta.partition.part_of[j];
    ForestBipartition full = extend_to_full(g, coloring, cover, base);
    HamiltonCycle h = forest_partition_to_hamilton(g, full);
    verify_hamilton_cycle(g, h);
    res.cycle = std::move(h);
    res.partition = std::move(full);
    res.steps = std::move(theta.steps);
    return res;
}

}  // namespace barnette
