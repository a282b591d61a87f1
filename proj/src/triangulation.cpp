#include "barnette/triangulation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace barnette {

TriColoring TriColoring::from_classes(int n, const std::array<std::vector<int>, 3>& cls) {
    TriColoring c;
    c.class_of.assign(n, 0);
    c.classes = cls;
    for (int k = 0; k < 3; ++k)
        for (int v : cls[k]) {
            if (v < 0 || v >= n || c.class_of[v] != 0) fail(errc::bad_input, "bad class assignment");
            c.class_of[v] = k + 1;
        }
    for (int v = 0; v < n; ++v)
        if (c.class_of[v] == 0) fail(errc::bad_input, "vertex without class");
    return c;
}

TriColoring TriColoring::from_assignment(std::vector<int> class_of) {
    TriColoring c;
    c.class_of = std::move(class_of);
    for (int v = 0; v < static_cast<int>(c.class_of.size()); ++v) {
        int k = c.class_of[v];
        if (k < 1 || k > 3) fail(errc::bad_input, "class out of range");
        c.classes[k - 1].push_back(v);
    }
    return c;
}

bool TriColoring::proper_on(const PlaneGraph& g) const {
    for (auto [u, v] : g.edges())
        if (class_of[u] == class_of[v]) return false;
    return true;
}

std::array<int, 3> TriColoring::sizes() const {
    return {static_cast<int>(classes[0].size()), static_cast<int>(classes[1].size()),
            static_cast<int>(classes[2].size())};
}

std::string Diagnostics::report() const {
    if (ok && errors.empty()) return three_cycle ? "OK three-cycle\n" : "OK\n";
    std::ostringstream os;
    for (const auto& e : errors) os << "ERR " << e << '\n';
    return os.str();
}

Diagnostics validate_eulerian_triangulation(const PlaneGraph& g) {
    Diagnostics d;
    if (g.vertex_count() < 3) {
        d.ok = false;
        d.errors.push_back("NotTriangulation fewer than 3 vertices");
        return d;
    }
    for (const Face& f : g.faces())
        if (f.length() != 3) {
            d.ok = false;
            d.errors.push_back("NotTriangulation face " + std::to_string(f.id) + " has length " +
                               std::to_string(f.length()));
        }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) % 2 != 0) {
            d.ok = false;
            d.errors.push_back("OddDegree " + std::to_string(v));
        }
    if (g.edge_count() != 3 * g.vertex_count() - 6) {
        d.ok = false;
        d.errors.push_back("NotTriangulation |E| != 3|V|-6");
    }
    if (d.ok && g.vertex_count() == 3) d.three_cycle = true;
    return d;
}

void require_eulerian_triangulation(const PlaneGraph& g) {
    Diagnostics d = validate_eulerian_triangulation(g);
    if (!d.ok) fail(errc::not_triangulation, d.report());
}

TriColoring three_coloring(const PlaneGraph& g, int seed_face) {
    require_eulerian_triangulation(g);
    if (seed_face < 0 || seed_face >= g.face_count()) fail(errc::bad_input, "seed face out of range");
    const int n = g.vertex_count();
    std::vector<int> col(n, 0);
    const Face& f0 = g.face(seed_face);
    col[f0.boundary[0]] = 1;
    col[f0.boundary[1]] = 2;
    col[f0.boundary[2]] = 3;

    // Propagate across face adjacencies: two coloured corners force the third.
    std::vector<int> queue{seed_face};
    std::vector<char> visited(g.face_count(), 0);
    visited[seed_face] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        const Face& f = g.face(queue[qi]);
        int a = f.boundary[0], b = f.boundary[1], c = f.boundary[2];
        if (col[a] && col[b] && !col[c]) col[c] = 6 - col[a] - col[b];
        if (col[a] && col[c] && !col[b]) col[b] = 6 - col[a] - col[c];
        if (col[b] && col[c] && !col[a]) col[a] = 6 - col[b] - col[c];
        if (!col[a] || !col[b] || !col[c]) fail(errc::coloring_conflict, "face left uncoloured");
        if (col[a] == col[b] || col[b] == col[c] || col[a] == col[c])
            fail(errc::coloring_conflict, "monochromatic edge on face " + std::to_string(f.id));
        for (int i = 0; i < 3; ++i) {
            int u = f.boundary[i], v = f.boundary[(i + 1) % 3];
            int nf = g.face_of_dart(v, u);
            if (!visited[nf]) {
                visited[nf] = 1;
                queue.push_back(nf);
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (!col[v]) fail(errc::coloring_conflict, "vertex unreached by propagation");
    TriColoring c = TriColoring::from_assignment(std::move(col));
    if (!c.proper_on(g)) fail(errc::coloring_conflict, "propagation produced improper colouring");
    return c;
}

BigSmallSplit big_small_split(const PlaneGraph& g) {
    BigSmallSplit s;
    s.is_big.assign(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) >= 6) {
            s.is_big[v] = 1;
            s.big.push_back(v);
        } else if (g.degree(v) == 4) {
            s.small.push_back(v);
        }
    }
    return s;
}

namespace {

// DoubleWheel(l): two non-adjacent hubs adjacent to every rim vertex; the rim
// is an induced 2l-cycle of degree-4 vertices.
std::optional<int> detect_double_wheel(const PlaneGraph& g) {
    const int n = g.vertex_count();
    if (n < 6 || n % 2 != 0) return std::nullopt;
    if (n == 6) {
        for (int v = 0; v < 6; ++v)
            if (g.degree(v) != 4) return std::nullopt;
        return 2;  // octahedron
    }
    std::vector<int> hubs;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == n - 2) hubs.push_back(v);
    if (hubs.size() != 2) return std::nullopt;
    if (g.has_edge(hubs[0], hubs[1])) return std::nullopt;
    for (int v = 0; v < n; ++v) {
        if (v == hubs[0] || v == hubs[1]) continue;
        if (g.degree(v) != 4) return std::nullopt;
        if (!g.has_edge(hubs[0], v) || !g.has_edge(hubs[1], v)) return std::nullopt;
    }
    return (n - 2) / 2;
}

}  // namespace

FamilyTag classify_family(const PlaneGraph& g, const BigSmallSplit& split) {
    if (g.vertex_count() == 3) return {FamilyKind::ThreeCycle, 0};
    if (auto l = detect_double_wheel(g)) {
        int big = static_cast<int>(split.big.size());
        if ((*l == 2 && big == 0) || (*l >= 3 && big == 2)) return {FamilyKind::DoubleWheel, *l};
    }
    if (split.big.size() >= 3) return {FamilyKind::GeneralBig3, 0};
    fail(errc::unclassified_family,
         "no family matches: |B| = " + std::to_string(split.big.size()));
}

BigSubgraph big_subgraph(const PlaneGraph& g, const TriColoring& coloring,
                         const BigSmallSplit& split) {
    FamilyTag tag = classify_family(g, split);
    if (tag.kind != FamilyKind::GeneralBig3)
        fail(errc::bad_input, "big subgraph requires at least three big vertices");
    BigSubgraph bs;
    bs.graph = induced_plane_subgraph(g, split.big, &bs.big_to_orig);
    bs.orig_to_big.assign(g.vertex_count(), -1);
    for (int j = 0; j < static_cast<int>(bs.big_to_orig.size()); ++j)
        bs.orig_to_big[bs.big_to_orig[j]] = j;

    std::vector<int> cls(bs.graph.vertex_count());
    for (int j = 0; j < bs.graph.vertex_count(); ++j) cls[j] = coloring.class_of[bs.big_to_orig[j]];
    bs.types = TriColoring::from_assignment(std::move(cls));

    // Theta certificate per the equivalence bundle.
    if (!is_k_connected(bs.graph, 2)) fail(errc::theta_violation, "G[B] is not 2-connected");
    for (const Face& f : bs.graph.faces())
        if (f.length() != 3 && f.length() != 4)
            fail(errc::theta_violation,
                 "G[B] face of length " + std::to_string(f.length()));
    if (!bs.types.proper_on(bs.graph)) fail(errc::theta_violation, "restricted colouring improper");
    return bs;
}

SmallCover small_cover(const PlaneGraph& g, const TriColoring& coloring,
                       const BigSmallSplit& split) {
    FamilyTag tag = classify_family(g, split);
    if (tag.kind != FamilyKind::GeneralBig3)
        fail(errc::bad_input, "path cover requires the general family");

    BigSubgraph J = big_subgraph(g, coloring, split);

    // All-small facial triangles form the octahedral configuration around a
    // big triangle; other shapes contradict the family trichotomy.
    std::vector<char> in_triple(g.vertex_count(), 0);
    std::vector<TriangleTriple> triples;
    for (const Face& f : g.faces()) {
        bool all_small = true;
        for (int v : f.boundary) all_small &= !split.is_big[v];
        if (!all_small) continue;
        TriangleTriple tt;
        std::set<int> bigs;
        std::vector<std::pair<int, std::pair<int, int>>> small_flanks;
        for (int t : f.boundary) {
            std::vector<int> flank;
            for (int w : g.neighbors(t))
                if (split.is_big[w]) flank.push_back(w);
            if (flank.size() != 2)
                fail(errc::all_small_triangle,
                     "small triangle vertex " + std::to_string(t) + " lacks a big pair");
            bigs.insert(flank.begin(), flank.end());
            small_flanks.push_back({t, {flank[0], flank[1]}});
        }
        if (bigs.size() != 3)
            fail(errc::all_small_triangle, "small triangle without a big flank triangle");
        std::vector<int> bs(bigs.begin(), bigs.end());
        if (!g.has_edge(bs[0], bs[1]) || !g.has_edge(bs[1], bs[2]) || !g.has_edge(bs[0], bs[2]))
            fail(errc::all_small_triangle, "flank vertices do not form a triangle");
        tt.p = bs[0];
        tt.q = bs[1];
        tt.r = bs[2];
        auto small_for = [&](int a, int b) {
            for (auto& [t, fl] : small_flanks)
                if ((fl.first == a && fl.second == b) || (fl.first == b && fl.second == a))
                    return t;
            fail(errc::all_small_triangle, "octahedral pattern incomplete");
        };
        tt.s_pq = small_for(tt.p, tt.q);
        tt.s_qr = small_for(tt.q, tt.r);
        tt.s_rp = small_for(tt.r, tt.p);
        for (int t : f.boundary) {
            if (in_triple[t]) fail(errc::all_small_triangle, "triangles share a vertex");
            in_triple[t] = 1;
        }
        triples.push_back(tt);
    }

    const int n = g.vertex_count();
    auto common_big_neighbors = [&](const std::vector<int>& vs) {
        std::vector<int> common;
        for (int w : g.neighbors(vs[0])) {
            if (!split.is_big[w]) continue;
            bool all = true;
            for (size_t i = 1; i < vs.size() && all; ++i) all = g.has_edge(vs[i], w);
            if (all) common.push_back(w);
        }
        return common;
    };

    SmallCover cover;
    cover.triples = std::move(triples);
    std::vector<char> used(n, 0);
    for (int s = 0; s < n; ++s) {
        if (split.is_big[s] || g.degree(s) != 4 || used[s] || in_triple[s]) continue;
        // Component of the small-induced subgraph containing s.
        std::vector<int> comp{s};
        used[s] = 1;
        for (size_t qi = 0; qi < comp.size(); ++qi)
            for (int w : g.neighbors(comp[qi]))
                if (!split.is_big[w] && !used[w] && !in_triple[w]) {
                    used[w] = 1;
                    comp.push_back(w);
                }

        CoverPath path;
        if (comp.size() == 1) {
            // Isolated small vertex: two candidate diagonals; pick the one
            // whose end pair contains the smallest neighbour id.
            int v = comp[0];
            const auto& rot = g.neighbors(v);
            for (int w : rot)
                if (!split.is_big[w]) fail(errc::recursion_invariant_broken, "small component not closed");
            std::vector<int> d1{rot[0], rot[2]}, d2{rot[1], rot[3]};
            int m = *std::min_element(rot.begin(), rot.end());
            std::vector<int> ends = (d1[0] == m || d1[1] == m) ? d1 : d2;
            std::vector<int> flanks = (ends == d1) ? d2 : d1;
            path.vertices = {std::min(ends[0], ends[1]), v, std::max(ends[0], ends[1])};
            path.inner = {v};
            path.flank_b = std::min(flanks[0], flanks[1]);
            path.flank_d = std::max(flanks[0], flanks[1]);
        } else {
            // Order the component as a path; a small cycle would contradict
            // the family classification.
            std::vector<int> endpoints;
            for (int v : comp) {
                int small_deg = 0;
                for (int w : g.neighbors(v)) small_deg += !split.is_big[w];
                if (small_deg == 1) endpoints.push_back(v);
                if (small_deg > 2) fail(errc::recursion_invariant_broken, "small component branches");
            }
            if (endpoints.size() != 2)
                fail(errc::recursion_invariant_broken, "small component is not a path");
            int start = std::min(endpoints[0], endpoints[1]);
            std::vector<int> seq{start};
            int prev = -1, cur = start;
            while (true) {
                int nxt = -1;
                for (int w : g.neighbors(cur))
                    if (!split.is_big[w] && w != prev) nxt = w;
                if (nxt == -1) break;
                seq.push_back(nxt);
                prev = cur;
                cur = nxt;
            }
            if (seq.size() != comp.size())
                fail(errc::recursion_invariant_broken, "small path walk incomplete");

            auto flanks = common_big_neighbors(seq);
            if (flanks.size() != 2)
                fail(errc::recursion_invariant_broken, "flank pair of a small path is not unique");
            path.flank_b = std::min(flanks[0], flanks[1]);
            path.flank_d = std::max(flanks[0], flanks[1]);
            auto end_of = [&](int v) {
                for (int w : g.neighbors(v))
                    if (split.is_big[w] && w != path.flank_b && w != path.flank_d) return w;
                fail(errc::recursion_invariant_broken, "path end missing");
            };
            int a = end_of(seq.front());
            int c = end_of(seq.back());
            if (a == c) fail(errc::recursion_invariant_broken, "path ends coincide");
            path.inner = seq;
            path.vertices.push_back(a);
            path.vertices.insert(path.vertices.end(), seq.begin(), seq.end());
            path.vertices.push_back(c);
        }

        // Flanks must be adjacent to every path vertex and of the same type;
        // abcd must be a facial 4-cycle of G[B].
        for (int v : path.vertices) {
            if (!g.has_edge(path.flank_b, v) || !g.has_edge(path.flank_d, v))
                fail(errc::recursion_invariant_broken, "flank not adjacent to whole path");
        }
        if (coloring.class_of[path.flank_b] != coloring.class_of[path.flank_d])
            fail(errc::recursion_invariant_broken, "flank pair types differ");
        int ja = J.orig_to_big[path.end_a()], jb = J.orig_to_big[path.flank_b];
        int jc = J.orig_to_big[path.end_c()], jd = J.orig_to_big[path.flank_d];
        bool facial = false;
        for (const Face& f : J.graph.faces()) {
            if (f.length() != 4) continue;
            std::set<int> fs(f.boundary.begin(), f.boundary.end());
            if (fs == std::set<int>{ja, jb, jc, jd}) {
                // Ends must be the non-consecutive pair of the face.
                for (int i = 0; i < 4; ++i)
                    if (f.boundary[i] == ja && f.boundary[(i + 2) % 4] == jc) facial = true;
            }
        }
        if (!facial) fail(errc::recursion_invariant_broken, "cover path without facial 4-cycle in G[B]");
        cover.paths.push_back(std::move(path));
    }

    // The inner sets and triples partition the small vertices.
    std::vector<char> covered(n, 0);
    for (const CoverPath& p : cover.paths)
        for (int v : p.inner) {
            if (covered[v]) fail(errc::recursion_invariant_broken, "inner sets overlap");
            covered[v] = 1;
        }
    for (const TriangleTriple& t : cover.triples)
        for (int v : {t.s_pq, t.s_qr, t.s_rp}) {
            if (covered[v]) fail(errc::recursion_invariant_broken, "triple overlaps a path");
            covered[v] = 1;
        }
    for (int v : split.small)
        if (!covered[v]) fail(errc::recursion_invariant_broken, "small vertex not covered");
    return cover;
}

SmallPathCover small_path_cover(const PlaneGraph& g, const TriColoring& coloring,
                                const BigSmallSplit& split) {
    SmallCover cover = small_cover(g, coloring, split);
    if (!cover.triples.empty())
        fail(errc::all_small_triangle,
             "facial 3-cycle with all vertices small around big triangle " +
                 std::to_string(cover.triples.front().p));
    SmallPathCover out;
    out.paths = std::move(cover.paths);
    return out;
}

int big_neighbour_bound(const PlaneGraph& g, const BigSmallSplit& split) {
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int cnt = 0;
        for (int w : g.neighbors(v)) cnt += split.is_big[w];
        best = std::max(best, cnt);
    }
    return best;
}

}  // namespace barnette
