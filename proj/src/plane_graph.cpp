#include "barnette/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace barnette {

const char* errc_name(errc code) {
    switch (code) {
        case errc::non_simple: return "NonSimple";
        case errc::asymmetric_adjacency: return "AsymmetricAdjacency";
        case errc::non_planar_embedding: return "NonPlanarEmbedding";
        case errc::dual_not_simple: return "DualNotSimple";
        case errc::empty_induced: return "EmptyInduced";
        case errc::not_triangulation: return "NotTriangulation";
        case errc::odd_degree: return "OddDegree";
        case errc::is_three_cycle: return "IsThreeCycle";
        case errc::coloring_conflict: return "ColoringConflict";
        case errc::unclassified_family: return "UnclassifiedFamily";
        case errc::theta_violation: return "ThetaViolation";
        case errc::all_small_triangle: return "AllSmallTriangle";
        case errc::not_independent: return "NotIndependent";
        case errc::not_subset: return "NotSubset";
        case errc::precondition_a1: return "PreconditionA1";
        case errc::precondition_a2: return "PreconditionA2";
        case errc::configuration_not_found: return "ConfigurationNotFound";
        case errc::iteration_cap_exceeded: return "IterationCapExceeded";
        case errc::case_analysis_unreachable: return "CaseAnalysisUnreachable";
        case errc::recursion_invariant_broken: return "RecursionInvariantBroken";
        case errc::not_two_trees: return "NotTwoTrees";
        case errc::disconnected_cycle: return "DisconnectedCycle";
        case errc::hypothesis_failed: return "HypothesisFailed";
        case errc::hypothesis_not_met: return "HypothesisNotMet";
        case errc::min_degree_violation: return "MinDegreeViolation";
        case errc::not_theta: return "NotTheta";
        case errc::cap_exceeded: return "CapExceeded";
        case errc::contract_breach: return "ContractBreach";
        case errc::bad_input: return "BadInput";
    }
    return "Unknown";
}

void fail(errc code, const std::string& what) {
    throw graph_error(code, std::string(errc_name(code)) + ": " + what);
}

PlaneGraph PlaneGraph::from_rotations(std::vector<std::vector<int>> rotations) {
    PlaneGraph g;
    const int n = static_cast<int>(rotations.size());
    for (int v = 0; v < n; ++v) {
        std::set<int> seen;
        for (int w : rotations[v]) {
            if (w < 0 || w >= n)
                fail(errc::bad_input, "neighbour id out of range at vertex " + std::to_string(v));
            if (w == v) fail(errc::non_simple, "loop at vertex " + std::to_string(v));
            if (!seen.insert(w).second)
                fail(errc::non_simple, "parallel edge " + std::to_string(v) + "-" + std::to_string(w));
        }
    }
    for (int v = 0; v < n; ++v)
        for (int w : rotations[v]) {
            bool back = std::find(rotations[w].begin(), rotations[w].end(), v) != rotations[w].end();
            if (!back)
                fail(errc::asymmetric_adjacency,
                     "edge " + std::to_string(v) + "-" + std::to_string(w) + " missing at " + std::to_string(w));
        }
    g.rotations_ = std::move(rotations);
    g.adj_index_.resize(n);
    for (int v = 0; v < n; ++v) {
        g.adj_index_[v] = g.rotations_[v];
        std::sort(g.adj_index_[v].begin(), g.adj_index_[v].end());
    }
    g.compute_edges();
    g.compute_faces();
    long long euler = static_cast<long long>(g.vertex_count()) - g.edge_count() + g.face_count();
    if (n > 0 && euler != 2)
        fail(errc::non_planar_embedding,
             "V-E+F = " + std::to_string(euler) + " (V=" + std::to_string(g.vertex_count()) +
                 " E=" + std::to_string(g.edge_count()) + " F=" + std::to_string(g.face_count()) + ")");
    long long total = 0;
    for (const Face& f : g.faces_) total += f.length();
    if (total != 2LL * g.edge_count())
        fail(errc::non_planar_embedding, "face lengths do not cover all darts twice");
    return g;
}

void PlaneGraph::compute_edges() {
    edges_.clear();
    for (int v = 0; v < vertex_count(); ++v)
        for (int w : rotations_[v])
            if (v < w) edges_.emplace_back(v, w);
    std::sort(edges_.begin(), edges_.end());
}

void PlaneGraph::compute_faces() {
    const int n = vertex_count();
    dart_face_.assign(n, {});
    for (int v = 0; v < n; ++v) dart_face_[v].assign(rotations_[v].size(), -1);

    faces_.clear();
    // Face traversal: the dart after u->v is v->next_in_rotation(v, u).
    for (int v = 0; v < n; ++v) {
        for (int i = 0; i < degree(v); ++i) {
            if (dart_face_[v][i] != -1) continue;
            Face f;
            f.id = static_cast<int>(faces_.size());
            int u = v, idx = i;
            do {
                dart_face_[u][idx] = f.id;
                f.boundary.push_back(u);
                int w = rotations_[u][idx];
                int j = rotation_index(w, u);
                idx = (j + 1) % degree(w);
                u = w;
            } while (!(u == v && idx == i));
            faces_.push_back(std::move(f));
        }
    }
}

bool PlaneGraph::has_edge(int u, int v) const {
    const auto& a = adj_index_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

int PlaneGraph::rotation_index(int u, int v) const {
    const auto& r = rotations_[u];
    for (int i = 0; i < static_cast<int>(r.size()); ++i)
        if (r[i] == v) return i;
    return -1;
}

int PlaneGraph::next_in_rotation(int u, int v) const {
    int i = rotation_index(u, v);
    return rotations_[u][(i + 1) % degree(u)];
}

int PlaneGraph::prev_in_rotation(int u, int v) const {
    int i = rotation_index(u, v);
    return rotations_[u][(i + degree(u) - 1) % degree(u)];
}

int PlaneGraph::face_of_dart(int u, int v) const {
    int i = rotation_index(u, v);
    if (i < 0) return -1;
    return dart_face_[u][i];
}

int PlaneGraph::face_at_corner(int v, int a, int b) const {
    // Corner (a, v, b) with b following a in v's rotation belongs to the face
    // traced through dart v->b whose predecessor dart is a->v.
    if (next_in_rotation(v, a) != b) return -1;
    return face_of_dart(v, b);
}

std::pair<int, int> PlaneGraph::faces_of_edge(int u, int v) const {
    return {face_of_dart(u, v), face_of_dart(v, u)};
}

int PlaneGraph::edge_id(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
    return static_cast<int>(it - edges_.begin());
}

bool PlaneGraph::is_connected() const {
    const int n = vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : rotations_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++cnt;
                stack.push_back(w);
            }
    }
    return cnt == n;
}

std::string PlaneGraph::to_string() const {
    std::ostringstream os;
    os << vertex_count() << " vertices, " << edge_count() << " edges, " << face_count() << " faces\n";
    for (int v = 0; v < vertex_count(); ++v) {
        os << v << ":";
        for (int w : rotations_[v]) os << ' ' << w;
        os << '\n';
    }
    return os.str();
}

DualResult dual(const PlaneGraph& g) {
    if (!g.is_connected()) fail(errc::bad_input, "dual of a disconnected graph");
    const int nf = g.face_count();
    std::vector<std::vector<int>> rot(nf);
    // The dual rotation at face f lists, in boundary order, the face across
    // each boundary dart.
    for (int f = 0; f < nf; ++f) {
        const Face& face = g.face(f);
        const int len = face.length();
        for (int i = 0; i < len; ++i) {
            int u = face.boundary[i];
            int v = face.boundary[(i + 1) % len];
            int other = g.face_of_dart(v, u);
            if (other == f) fail(errc::dual_not_simple, "bridge edge in primal graph");
            rot[f].push_back(other);
        }
    }
    for (int f = 0; f < nf; ++f) {
        std::set<int> uniq(rot[f].begin(), rot[f].end());
        if (uniq.size() != rot[f].size())
            fail(errc::dual_not_simple, "two faces share more than one edge");
    }
    DualResult res;
    res.graph = PlaneGraph::from_rotations(std::move(rot));

    // Edge correspondence: primal {u,v} <-> dual {face(u->v), face(v->u)}.
    res.correspondence.primal_to_dual.assign(g.edge_count(), -1);
    res.correspondence.dual_to_primal.assign(res.graph.edge_count(), -1);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        auto [f1, f2] = g.faces_of_edge(u, v);
        int de = res.graph.edge_id(f1, f2);
        if (de < 0) fail(errc::dual_not_simple, "missing dual edge");
        res.correspondence.primal_to_dual[e] = de;
        res.correspondence.dual_to_primal[de] = e;
    }
    for (int de = 0; de < res.graph.edge_count(); ++de)
        if (res.correspondence.dual_to_primal[de] < 0)
            fail(errc::dual_not_simple, "dual edge without primal partner");
    return res;
}

namespace {

bool connected_after_removal(const PlaneGraph& g, const std::vector<int>& removed) {
    const int n = g.vertex_count();
    std::vector<char> gone(n, 0);
    for (int v : removed) gone[v] = 1;
    int start = -1;
    int alive = 0;
    for (int v = 0; v < n; ++v)
        if (!gone[v]) {
            ++alive;
            if (start < 0) start = v;
        }
    if (alive <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (!gone[w] && !seen[w]) {
                seen[w] = 1;
                ++cnt;
                stack.push_back(w);
            }
    }
    return cnt == alive;
}

}  // namespace

bool is_k_connected(const PlaneGraph& g, int k) {
    const int n = g.vertex_count();
    if (k < 1 || k > 3) fail(errc::bad_input, "k must be 1..3");
    if (n <= k) return false;
    if (!g.is_connected()) return false;
    if (k == 1) return true;
    std::vector<int> removed;
    if (k == 2) {
        for (int v = 0; v < n; ++v)
            if (!connected_after_removal(g, {v})) return false;
        return true;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!connected_after_removal(g, {u, v})) return false;
    return true;
}

PlaneGraph induced_plane_subgraph(const PlaneGraph& g, const std::vector<int>& S,
                                  std::vector<int>* relabel_out) {
    if (S.empty()) fail(errc::empty_induced, "empty vertex set");
    std::vector<int> sel(S);
    std::sort(sel.begin(), sel.end());
    sel.erase(std::unique(sel.begin(), sel.end()), sel.end());
    std::vector<int> newid(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(sel.size()); ++i) newid[sel[i]] = i;
    std::vector<std::vector<int>> rot(sel.size());
    for (int i = 0; i < static_cast<int>(sel.size()); ++i)
        for (int w : g.neighbors(sel[i]))
            if (newid[w] >= 0) rot[i].push_back(newid[w]);
    if (relabel_out) *relabel_out = sel;
    return PlaneGraph::from_rotations(std::move(rot));
}

std::vector<Block> block_decomposition(const PlaneGraph& g) {
    const int n = g.vertex_count();
    std::vector<Block> blocks;
    std::vector<int> num(n, -1), low(n, 0), parent(n, -1);
    std::vector<std::pair<int, int>> edge_stack;
    int counter = 0;

    // Iterative Hopcroft-Tarjan; child iteration state per vertex.
    std::vector<int> it(n, 0);
    for (int root = 0; root < n; ++root) {
        if (num[root] != -1) continue;
        std::vector<int> stack{root};
        num[root] = low[root] = counter++;
        while (!stack.empty()) {
            int v = stack.back();
            if (it[v] < g.degree(v)) {
                int w = g.neighbors(v)[it[v]++];
                if (num[w] == -1) {
                    edge_stack.emplace_back(v, w);
                    parent[w] = v;
                    num[w] = low[w] = counter++;
                    stack.push_back(w);
                } else if (w != parent[v] && num[w] < num[v]) {
                    edge_stack.emplace_back(v, w);
                    low[v] = std::min(low[v], num[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back();
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= num[p]) {
                        Block b;
                        std::set<int> verts;
                        while (true) {
                            auto e = edge_stack.back();
                            edge_stack.pop_back();
                            b.block_edges.push_back(e);
                            verts.insert(e.first);
                            verts.insert(e.second);
                            if (e == std::make_pair(p, v)) break;
                        }
                        b.vertices.assign(verts.begin(), verts.end());
                        blocks.push_back(std::move(b));
                    }
                }
            }
        }
    }
    return blocks;
}

std::optional<std::vector<int>> is_bipartite(const PlaneGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> queue{s};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int w : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

namespace {

// BFS code of the embedding rooted at dart (v0, i0), walking rotations in the
// given direction. Vertices are labelled in discovery order; the code is the
// concatenated rotation lists (relabelled), each started at the discovery
// edge. Standard plane-graph canonical form.
std::vector<int> rooted_code(const PlaneGraph& g, int v0, int i0, bool mirror) {
    const int n = g.vertex_count();
    std::vector<int> label(n, -1);
    std::vector<int> order;
    order.reserve(n);
    label[v0] = 0;
    order.push_back(v0);
    // Each vertex records the neighbour its rotation starts at.
    std::vector<int> anchor(n, -1);
    anchor[v0] = g.neighbors(v0)[i0];

    std::vector<int> code;
    for (size_t qi = 0; qi < order.size(); ++qi) {
        int v = order[qi];
        const auto& rot = g.neighbors(v);
        const int d = static_cast<int>(rot.size());
        int start = g.rotation_index(v, anchor[v]);
        code.push_back(d);
        for (int k = 0; k < d; ++k) {
            int idx = mirror ? (start - k + 2 * d) % d : (start + k) % d;
            int w = rot[idx];
            if (label[w] == -1) {
                label[w] = static_cast<int>(order.size());
                order.push_back(w);
                anchor[w] = v;
            }
            code.push_back(label[w]);
        }
    }
    return code;
}

}  // namespace

std::vector<int> canonical_code(const PlaneGraph& g) {
    std::vector<int> best;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int i = 0; i < g.degree(v); ++i)
            for (bool mirror : {false, true}) {
                auto code = rooted_code(g, v, i, mirror);
                if (best.empty() || code < best) best = std::move(code);
            }
    if (g.vertex_count() == 0) best.clear();
    return best;
}

bool plane_isomorphic(const PlaneGraph& a, const PlaneGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() ||
        a.face_count() != b.face_count())
        return false;
    return canonical_code(a) == canonical_code(b);
}

}  // namespace barnette
