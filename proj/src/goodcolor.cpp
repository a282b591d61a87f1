#include "barnette/goodcolor.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace barnette {

namespace {

// Blocks of the subgraph induced by mask, with original vertex ids.
std::vector<Block> masked_blocks(const PlaneGraph& g, const std::vector<char>& mask) {
    const int n = g.vertex_count();
    std::vector<Block> blocks;
    std::vector<int> num(n, -1), low(n, 0), parent(n, -1), it(n, 0);
    std::vector<std::pair<int, int>> edge_stack;
    int counter = 0;
    for (int root = 0; root < n; ++root) {
        if (!mask[root] || num[root] != -1) continue;
        std::vector<int> stack{root};
        num[root] = low[root] = counter++;
        while (!stack.empty()) {
            int v = stack.back();
            if (it[v] < g.degree(v)) {
                int w = g.neighbors(v)[it[v]++];
                if (!mask[w]) continue;
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

// Orders a pure cycle block as a cyclic vertex sequence.
std::vector<int> order_cycle(const Block& b) {
    std::map<int, std::vector<int>> adj;
    for (auto [u, v] : b.block_edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> seq;
    int start = b.vertices.front();
    int prev = -1, cur = start;
    do {
        seq.push_back(cur);
        int nxt = (adj[cur][0] != prev) ? adj[cur][0] : adj[cur][1];
        prev = cur;
        cur = nxt;
    } while (cur != start);
    return seq;
}

std::vector<char> beta_mask(const WorkColoring& t) {
    std::vector<char> m(t.label_of.size(), 0);
    for (size_t v = 0; v < t.label_of.size(); ++v) m[v] = t.label_of[v] == Label::beta;
    return m;
}

// Exactly two J3 neighbours sitting opposite in the rotation of a degree-4
// vertex (the gamma membership test).
bool two_nonconsecutive_j3(const PlaneGraph& J, const TriColoring& types, int v) {
    if (J.degree(v) != 4) return false;
    const auto& rot = J.neighbors(v);
    std::vector<int> pos;
    for (int i = 0; i < 4; ++i)
        if (types.class_of[rot[i]] == 3) pos.push_back(i);
    return pos.size() == 2 && (pos[1] - pos[0]) == 2;
}

int count_j3_neighbors(const PlaneGraph& J, const TriColoring& types, int v) {
    int c = 0;
    for (int w : J.neighbors(v)) c += types.class_of[w] == 3;
    return c;
}

}  // namespace

EngineInput make_engine_input(const PlaneGraph& J, const TriColoring& types) {
    if (!types.proper_on(J)) fail(errc::not_theta, "types not a proper colouring");
    for (const Face& f : J.faces())
        if (f.length() != 3 && f.length() != 4)
            fail(errc::not_theta, "face of length " + std::to_string(f.length()));
    if (!is_k_connected(J, 3)) fail(errc::not_theta, "engine requires 3-connectivity");

    for (int v = 0; v < J.vertex_count(); ++v)
        if (types.class_of[v] != 3 && J.degree(v) > 4)
            fail(errc::precondition_a1,
                 "vertex " + std::to_string(v) + " of degree " + std::to_string(J.degree(v)));

    // (a2): rotation pattern (j3, j3, j2, j2) around a J1 vertex requires one
    // of the two J3 neighbours to have degree at most 4.
    for (int v = 0; v < J.vertex_count(); ++v) {
        if (types.class_of[v] != 1 || J.degree(v) != 4) continue;
        const auto& rot = J.neighbors(v);
        for (int s = 0; s < 4; ++s) {
            int v1 = rot[s], v2 = rot[(s + 1) % 4], v3 = rot[(s + 2) % 4], v4 = rot[(s + 3) % 4];
            if (types.class_of[v1] == 3 && types.class_of[v2] == 3 && types.class_of[v3] == 2 &&
                types.class_of[v4] == 2) {
                if (J.degree(v1) > 4 && J.degree(v2) > 4)
                    fail(errc::precondition_a2, "vertex " + std::to_string(v));
            }
        }
    }

    EngineInput in;
    in.J = &J;
    in.types = types;
    const int n = J.vertex_count();
    in.in_x1.assign(n, 0);
    in.in_x2.assign(n, 0);
    in.in_x3.assign(n, 0);
    for (int v = 0; v < n; ++v)
        if (types.class_of[v] == 1 && count_j3_neighbors(J, types, v) <= 1) in.in_x1[v] = 1;
    for (int v = 0; v < n; ++v) {
        if (types.class_of[v] != 2 || count_j3_neighbors(J, types, v) > 1) continue;
        bool x1_nbr = false;
        for (int w : J.neighbors(v)) x1_nbr |= in.in_x1[w];
        if (!x1_nbr) in.in_x2[v] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (types.class_of[v] != 3 && two_nonconsecutive_j3(J, types, v)) in.in_x3[v] = 1;

    in.preliminary.label_of.assign(n, Label::beta);
    for (int v = 0; v < n; ++v) {
        if (types.class_of[v] == 3 || in.in_x1[v] || in.in_x2[v])
            in.preliminary.label_of[v] = Label::alpha;
        else if (in.in_x3[v])
            in.preliminary.label_of[v] = Label::gamma;
    }
    return in;
}

BetaCycleReport beta_cycle_report(const EngineInput& in, const WorkColoring& t) {
    const PlaneGraph& J = *in.J;
    BetaCycleReport rep;
    rep.on_cycle.assign(J.vertex_count(), 0);
    auto mask = beta_mask(t);
    auto blocks = masked_blocks(J, mask);
    std::vector<const Block*> cyclic;
    for (const Block& b : blocks) {
        if (b.is_bridge()) continue;
        cyclic.push_back(&b);
        rep.cyclic_edge_count += static_cast<int>(b.block_edges.size());
        ++rep.cycle_block_count;
        for (int v : b.vertices) rep.on_cycle[v] = 1;
        if (b.is_complex()) ++rep.complex_blocks;
    }
    for (const Block* b : cyclic) {
        if (!b->is_cycle()) continue;
        BetaCycleReport::Cycle c;
        c.vertices = order_cycle(*b);
        // Independent iff disjoint from every other cyclic block.
        std::set<int> mine(c.vertices.begin(), c.vertices.end());
        for (const Block* other : cyclic) {
            if (other == b) continue;
            for (int v : other->vertices)
                if (mine.count(v)) c.independent = false;
        }
        if (c.vertices.size() == 4) {
            for (const Face& f : J.faces()) {
                if (f.length() != 4) continue;
                if (std::set<int>(f.boundary.begin(), f.boundary.end()) == mine) c.facial = true;
            }
        }
        rep.cycles.push_back(std::move(c));
    }
    return rep;
}

BadPathReport bad_path_report(const EngineInput& in, const WorkColoring& t,
                              const BetaCycleReport& cycles) {
    const PlaneGraph& J = *in.J;
    const int n = J.vertex_count();
    BadPathReport rep;

    // Terminals: alpha J3 vertices adjacent to a J1 vertex on a beta cycle.
    std::vector<char> terminal(n, 0);
    for (int v = 0; v < n; ++v) {
        if (in.cls(v) != 3 || t.label_of[v] != Label::alpha) continue;
        for (int w : J.neighbors(v))
            if (in.cls(w) == 1 && cycles.on_cycle[w]) terminal[v] = 1;
    }

    // Alpha forest components; paths between same-tree terminals are bad.
    std::vector<char> alpha(n, 0);
    for (int v = 0; v < n; ++v) alpha[v] = t.label_of[v] == Label::alpha;
    std::vector<int> comp(n, -1), parent(n, -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (!alpha[s] || comp[s] != -1) continue;
        comp[s] = ncomp;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : J.neighbors(v))
                if (alpha[w] && comp[w] == -1) {
                    comp[w] = ncomp;
                    parent[w] = v;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }
    std::vector<std::vector<int>> terms(ncomp);
    for (int v = 0; v < n; ++v)
        if (terminal[v]) terms[comp[v]].push_back(v);

    std::set<int> bad;
    for (const auto& ts : terms) {
        for (size_t i = 0; i < ts.size(); ++i)
            for (size_t j = i + 1; j < ts.size(); ++j) {
                // Unique tree path via parent chains.
                std::vector<int> pa, pb;
                for (int x = ts[i]; x != -1; x = parent[x]) pa.push_back(x);
                for (int x = ts[j]; x != -1; x = parent[x]) pb.push_back(x);
                std::reverse(pa.begin(), pa.end());
                std::reverse(pb.begin(), pb.end());
                size_t k = 0;
                while (k + 1 < pa.size() && k + 1 < pb.size() && pa[k + 1] == pb[k + 1]) ++k;
                std::vector<int> path(pa.begin() + k, pa.end());
                std::reverse(path.begin(), path.end());
                for (size_t x = k + 1; x < pb.size(); ++x) path.push_back(pb[x]);
                for (size_t x = 0; x < path.size(); ++x) {
                    int expect = (x % 2 == 0) ? 3 : 1;
                    if (in.cls(path[x]) != expect)
                        fail(errc::contract_breach, "bad path does not alternate J3/J1");
                    if (x % 2 == 1) bad.insert(path[x]);
                }
                rep.bad_paths.push_back(std::move(path));
            }
    }
    rep.bad_vertices.assign(bad.begin(), bad.end());
    return rep;
}

std::string AssociatedReport::first_failure() const {
    for (int i = 0; i < 8; ++i)
        if (!ok[i]) return "condition " + std::to_string(i + 1) + ": " + witness[i];
    return "";
}

AssociatedReport validate_associated(const EngineInput& in, const WorkColoring& t) {
    const PlaneGraph& J = *in.J;
    const int n = J.vertex_count();
    AssociatedReport rep;
    rep.ok.fill(true);

    auto report = beta_cycle_report(in, t);

    // (1) every beta_t-cycle is a beta_p-cycle: the cyclic part must be
    // labelled beta by the preliminary colouring.
    for (int v = 0; v < n; ++v)
        if (report.on_cycle[v] && in.preliminary.label_of[v] != Label::beta) {
            rep.ok[0] = false;
            rep.witness[0] = "vertex " + std::to_string(v) + " cyclic but not preliminary-beta";
        }

    for (int v = 0; v < n; ++v) {
        bool alpha = t.label_of[v] == Label::alpha;
        int j3 = count_j3_neighbors(J, in.types, v);
        if (alpha && in.cls(v) == 1) {
            int cap = J.degree(v) == 3 ? 1 : 2;
            if (J.degree(v) <= 4 && j3 > cap) {
                rep.ok[1] = false;
                rep.witness[1] = "vertex " + std::to_string(v);
            }
            if (j3 >= 2) {
                for (int w : J.neighbors(v))
                    if (t.label_of[w] == Label::beta && report.on_cycle[w]) {
                        rep.ok[2] = false;
                        rep.witness[2] = "vertex " + std::to_string(v) + " beside cyclic " +
                                         std::to_string(w);
                    }
            }
        }
        if (alpha && in.cls(v) == 2 && j3 > 1) {
            rep.ok[3] = false;
            rep.witness[3] = "vertex " + std::to_string(v);
        }
        if (in.cls(v) == 3 && !alpha) {
            rep.ok[4] = false;
            rep.witness[4] = "vertex " + std::to_string(v);
        }
        bool gamma = t.label_of[v] == Label::gamma;
        bool x3 = in.cls(v) != 3 && two_nonconsecutive_j3(J, in.types, v);
        if (gamma != x3) {
            rep.ok[5] = false;
            rep.witness[5] = "vertex " + std::to_string(v);
        }
    }

    for (auto [u, v] : J.edges())
        if (in.cls(u) != 3 && in.cls(v) != 3 && t.label_of[u] == Label::alpha &&
            t.label_of[v] == Label::alpha) {
            rep.ok[6] = false;
            rep.witness[6] = std::to_string(u) + "-" + std::to_string(v);
        }

    std::vector<char> alpha_mask(n, 0);
    for (int v = 0; v < n; ++v) alpha_mask[v] = t.label_of[v] == Label::alpha;
    auto forest = induces_forest(J, alpha_mask);
    if (!forest.is_forest) {
        rep.ok[7] = false;
        std::string cyc;
        for (int v : forest.cycle) cyc += std::to_string(v) + " ";
        rep.witness[7] = "alpha cycle " + cyc;
    }
    return rep;
}

std::string StepTrace::line() const {
    std::ostringstream os;
    os << rule << " v=" << pivot << " measure=" << measure.first << "," << measure.second;
    return os.str();
}

namespace {

void require_associated(const EngineInput& in, const WorkColoring& t, const char* where) {
    auto rep = validate_associated(in, t);
    if (!rep.all())
        fail(errc::contract_breach, std::string(where) + " broke " + rep.first_failure());
}

// Cycle shape facts that hold for every associated colouring: even length of
// at least four, and quadrilateral cycles are faces.
void require_cycle_shapes(const BetaCycleReport& rep, const char* where) {
    for (const auto& cyc : rep.cycles) {
        if (cyc.vertices.size() < 4 || cyc.vertices.size() % 2 != 0)
            fail(errc::contract_breach, std::string(where) + ": beta cycle of length " +
                                            std::to_string(cyc.vertices.size()));
        if (cyc.vertices.size() == 4 && !cyc.facial)
            fail(errc::contract_breach, std::string(where) + ": non-facial beta quadrilateral");
    }
}

}  // namespace

WorkColoring step_eliminate_overlap(const EngineInput& in, const WorkColoring& t,
                                    StepTrace* trace) {
    const PlaneGraph& J = *in.J;
    auto report = beta_cycle_report(in, t);
    require_cycle_shapes(report, "overlap step");
    if (report.all_independent())
        fail(errc::bad_input, "no overlapping beta cycles to eliminate");
    {
        auto bad = bad_path_report(in, t, report);
        if (!bad.bad_vertices.empty())
            fail(errc::bad_input, "overlap step requires a colouring with no bad vertex");
    }

    auto is_beta = [&](int v) { return t.label_of[v] == Label::beta; };

    // Search the configuration: a facial all-beta 4-cycle D, a vertex
    // c in J2 on D, and a path a-b-c of a big beta cycle avoiding D.
    for (const Face& face : J.faces()) {
        if (face.length() != 4) continue;
        bool all_beta = true;
        for (int v : face.boundary) all_beta &= is_beta(v);
        if (!all_beta) continue;
        std::set<int> dset(face.boundary.begin(), face.boundary.end());

        std::vector<int> cs;
        for (int v : face.boundary)
            if (in.cls(v) == 2) cs.push_back(v);
        std::sort(cs.begin(), cs.end());
        for (int c : cs) {
            if (J.degree(c) != 4) continue;
            std::vector<int> bs;
            for (int w : J.neighbors(c))
                if (!dset.count(w) && in.cls(w) == 1 && is_beta(w) && report.on_cycle[w])
                    bs.push_back(w);
            std::sort(bs.begin(), bs.end());
            for (int b : bs) {
                // b carries exactly two non-J3 neighbours: c and a.
                int a = -1;
                bool shape_ok = true;
                for (int w : J.neighbors(b)) {
                    if (in.cls(w) == 3) continue;
                    if (w == c) continue;
                    if (a != -1) shape_ok = false;
                    a = w;
                }
                if (!shape_ok || a < 0) continue;
                if (in.cls(a) != 2 || !is_beta(a) || dset.count(a)) continue;

                // The facial 4-cycle a-b-c-q.
                int fq = J.face_at_corner(b, a, c);
                if (fq < 0) fq = J.face_at_corner(b, c, a);
                if (fq < 0) continue;
                const Face& fabcq = J.face(fq);
                if (fabcq.length() != 4) continue;
                int q = -1;
                for (int v : fabcq.boundary)
                    if (v != a && v != b && v != c) q = v;
                if (q < 0 || t.label_of[q] != Label::alpha || !in.in_x1[q]) continue;

                // Name c's rotation (b, d, f, q): d next to b, f next to q.
                const auto& rot = J.neighbors(c);
                int ib = J.rotation_index(c, b), iq = J.rotation_index(c, q);
                if (ib < 0 || iq < 0) continue;
                int diff = (iq - ib + 4) % 4;
                if (diff != 1 && diff != 3) continue;  // b and q must be rotation-adjacent
                int d, fv;
                if (diff == 3) {  // order b, d, f, q
                    d = rot[(ib + 1) % 4];
                    fv = rot[(ib + 2) % 4];
                } else {  // order q, f, d, b
                    d = rot[(ib + 3) % 4];
                    fv = rot[(ib + 2) % 4];
                }
                if (!dset.count(d) || !dset.count(fv)) continue;

                // g on the facial 4-cycle q-c-f-g.
                int fg = J.face_at_corner(c, fv, q);
                if (fg < 0) fg = J.face_at_corner(c, q, fv);
                if (fg < 0) continue;
                const Face& fqcfg = J.face(fg);
                if (fqcfg.length() != 4) continue;
                int gv = -1;
                for (int v : fqcfg.boundary)
                    if (v != q && v != c && v != fv) gv = v;
                if (gv < 0 || in.cls(gv) != 3) continue;

                // A big cycle through a-b-c exists since b lies on a cycle and
                // has beta degree two; extract one for the record.
                // (Any cycle through b is big: a beta 4-cycle through a-b-c
                // would be the facial cycle a-b-c-q, and q is alpha.)

                int rule_case;
                if (J.degree(q) == 3) {
                    rule_case = 0;
                } else {
                    int h = -1;
                    for (int w : J.neighbors(q))
                        if (w != a && w != c && w != gv) h = w;
                    if (h < 0 || in.cls(h) != 2) continue;
                    if (t.label_of[h] == Label::gamma) {
                        rule_case = 0;
                    } else if (t.label_of[h] == Label::beta) {
                        int fj = J.face_at_corner(q, h, a);
                        if (fj < 0) fj = J.face_at_corner(q, a, h);
                        if (fj < 0) continue;
                        const Face& fqhja = J.face(fj);
                        if (fqhja.length() != 4) continue;
                        int jv = -1;
                        for (int v : fqhja.boundary)
                            if (v != q && v != h && v != a) jv = v;
                        if (jv < 0) continue;
                        if (t.label_of[jv] == Label::beta)
                            rule_case = 1;
                        else if (t.label_of[jv] == Label::alpha)
                            rule_case = 2;
                        else
                            continue;
                    } else {
                        continue;  // h alpha would violate condition (7); skip
                    }
                }

                WorkColoring m = t;
                m.label_of[c] = Label::alpha;
                m.label_of[q] = Label::beta;
                if (rule_case == 1) m.label_of[a] = Label::alpha;

                require_associated(in, m, "overlap step");
                auto mrep = beta_cycle_report(in, m);
                auto mbad = bad_path_report(in, m, mrep);
                if (!mbad.bad_vertices.empty())
                    fail(errc::contract_breach, "overlap step created a bad vertex");
                if (mrep.on_cycle[q])
                    fail(errc::contract_breach, "pivot q still lies on a beta cycle");
                if (mrep.measure() >= report.measure())
                    fail(errc::contract_breach, "overlap step did not reduce the measure");
                if (trace) {
                    trace->rule = rule_case == 0 ? "L43a" : rule_case == 1 ? "L43b" : "L43c";
                    trace->pivot = q;
                    trace->measure = mrep.measure();
                }
                return m;
            }
        }
    }
    fail(errc::configuration_not_found, "no overlap configuration matched");
}

WorkColoring step_remove_independent_cycle(const EngineInput& in, const WorkColoring& t,
                                           StepTrace* trace) {
    const PlaneGraph& J = *in.J;
    auto report = beta_cycle_report(in, t);
    require_cycle_shapes(report, "cycle removal");
    if (report.empty()) fail(errc::bad_input, "no beta cycle to remove");
    if (!report.all_independent()) fail(errc::bad_input, "cycles are not independent");
    auto bad = bad_path_report(in, t, report);
    if (!bad.good()) fail(errc::bad_input, "not a good colouring");

    int w = -1;
    if (!bad.bad_vertices.empty()) {
        int a = bad.bad_vertices.front();
        // A bad vertex has two consecutive J3 neighbours; the flank-degree
        // precondition guarantees one of them has degree at most four.
        std::vector<int> j3;
        for (int x : J.neighbors(a))
            if (in.cls(x) == 3) j3.push_back(x);
        if (j3.size() != 2) fail(errc::contract_breach, "bad vertex without J3 pair");
        std::sort(j3.begin(), j3.end());
        int b = -1;
        for (int x : j3)
            if (J.degree(x) <= 4 && b == -1) b = x;
        if (b == -1) fail(errc::contract_breach, "both flanks of the bad vertex exceed degree 4");

        // The unique cycle carrying a J1 neighbour of b.
        const BetaCycleReport::Cycle* C = nullptr;
        for (const auto& cyc : report.cycles) {
            bool hit = false;
            for (int v : cyc.vertices)
                if (in.cls(v) == 1 && J.has_edge(b, v)) hit = true;
            if (!hit) continue;
            if (C) fail(errc::contract_breach, "two cycles adjacent to the flank");
            C = &cyc;
        }
        if (!C) fail(errc::contract_breach, "no cycle adjacent to the flank of the bad path");
        for (int v : C->vertices)
            if (in.cls(v) == 1 && !J.has_edge(b, v) && (w == -1 || v < w)) w = v;
        if (w == -1)
            fail(errc::configuration_not_found,
                 "cycle has no J1 vertex non-adjacent to the flank");
    } else {
        const BetaCycleReport::Cycle* C0 = nullptr;
        int best = -1;
        for (const auto& cyc : report.cycles) {
            int mn = *std::min_element(cyc.vertices.begin(), cyc.vertices.end());
            if (best == -1 || mn < best) {
                best = mn;
                C0 = &cyc;
            }
        }
        for (int v : C0->vertices)
            if (in.cls(v) == 1 && (w == -1 || v < w)) w = v;
        if (w == -1) fail(errc::contract_breach, "cycle without J1 vertices");
    }

    WorkColoring m = t;
    m.label_of[w] = Label::alpha;
    require_associated(in, m, "cycle removal");
    auto mrep = beta_cycle_report(in, m);
    auto mbad = bad_path_report(in, m, mrep);
    for (int v : mbad.bad_vertices)
        if (v != w) fail(errc::contract_breach, "cycle removal left a foreign bad vertex");
    if (!mbad.good()) fail(errc::contract_breach, "cycle removal lost goodness");
    if (mrep.measure() >= report.measure())
        fail(errc::contract_breach, "cycle removal did not reduce the measure");
    if (trace) {
        trace->rule = "L46";
        trace->pivot = w;
        trace->measure = mrep.measure();
    }
    return m;
}

std::vector<std::vector<std::pair<int, int>>> enumerate_beta_cycles(const PlaneGraph& J,
                                                                    const WorkColoring& t) {
    const int n = J.vertex_count();
    std::vector<char> beta = beta_mask(t);
    std::set<std::vector<std::pair<int, int>>> found;

    // DFS over simple paths anchored at their minimum vertex.
    std::vector<int> path;
    std::vector<char> used(n, 0);
    auto canon = [](std::vector<int> cyc) {
        std::vector<std::pair<int, int>> edges;
        for (size_t i = 0; i < cyc.size(); ++i) {
            int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(edges.begin(), edges.end());
        return edges;
    };
    std::function<void(int, int)> dfs = [&](int start, int v) {
        for (int w : J.neighbors(v)) {
            if (!beta[w]) continue;
            if (w == start && path.size() >= 3) found.insert(canon(path));
            if (w <= start || used[w]) continue;
            used[w] = 1;
            path.push_back(w);
            dfs(start, w);
            path.pop_back();
            used[w] = 0;
        }
    };
    for (int s = 0; s < n; ++s) {
        if (!beta[s]) continue;
        used[s] = 1;
        path = {s};
        dfs(s, s);
        used[s] = 0;
    }
    return {found.begin(), found.end()};
}

EngineRun eliminate_beta_cycles(const EngineInput& in, int exhaustive_cap) {
    const PlaneGraph& J = *in.J;
    EngineRun run;
    run.result = in.preliminary;
    require_associated(in, run.result, "preliminary colouring");
    {
        auto rep = beta_cycle_report(in, run.result);
        auto bad = bad_path_report(in, run.result, rep);
        if (!bad.bad_vertices.empty())
            fail(errc::contract_breach, "preliminary colouring has a bad vertex");
    }

    const bool exhaustive = J.vertex_count() <= exhaustive_cap;
    const int cap = 4 * J.vertex_count();
    int iterations = 0;
    while (true) {
        auto rep = beta_cycle_report(in, run.result);
        require_cycle_shapes(rep, "engine driver");
        if (rep.empty()) break;
        if (++iterations > cap)
            fail(errc::iteration_cap_exceeded, "state: " + std::to_string(rep.cyclic_edge_count) +
                                                   " cyclic edges");
        auto before = exhaustive ? enumerate_beta_cycles(J, run.result)
                                 : std::vector<std::vector<std::pair<int, int>>>{};
        StepTrace trace;
        WorkColoring next = rep.all_independent()
                                ? step_remove_independent_cycle(in, run.result, &trace)
                                : step_eliminate_overlap(in, run.result, &trace);
        if (exhaustive) {
            auto after = enumerate_beta_cycles(J, next);
            std::set<std::vector<std::pair<int, int>>> bset(before.begin(), before.end());
            for (const auto& cyc : after)
                if (!bset.count(cyc))
                    fail(errc::contract_breach, "a new beta cycle appeared");
            if (after.size() >= before.size())
                fail(errc::contract_breach, "cycle set did not shrink");
        }
        run.steps.push_back(trace);
        run.result = std::move(next);
    }
    return run;
}

GammaResolution resolve_gammas(const EngineInput& in, const WorkColoring& t) {
    const PlaneGraph& J = *in.J;
    const int n = J.vertex_count();
    {
        auto rep = beta_cycle_report(in, t);
        if (!rep.empty()) fail(errc::bad_input, "gamma resolution requires an empty cycle set");
    }
    WorkColoring cur = t;
    for (int v = 0; v < n; ++v) {
        if (cur.label_of[v] != Label::gamma) continue;
        // Components of the current beta subgraph.
        std::vector<int> comp(n, -1);
        int ncomp = 0;
        for (int s = 0; s < n; ++s) {
            if (cur.label_of[s] != Label::beta || comp[s] != -1) continue;
            std::vector<int> stack{s};
            comp[s] = ncomp;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int w : J.neighbors(x))
                    if (cur.label_of[w] == Label::beta && comp[w] == -1) {
                        comp[w] = ncomp;
                        stack.push_back(w);
                    }
            }
            ++ncomp;
        }
        // A beta path connecting two neighbours of v exists iff two distinct
        // beta neighbours share a component of the beta subgraph.
        bool joined = false;
        std::map<int, int> per_comp;
        for (int w : J.neighbors(v)) {
            if (cur.label_of[w] != Label::beta) continue;
            if (++per_comp[comp[w]] >= 2) joined = true;
        }
        cur.label_of[v] = joined ? Label::alpha : Label::beta;
    }

    GammaResolution res;
    for (int v = 0; v < n; ++v)
        if (in.cls(v) != 3 && cur.label_of[v] == Label::alpha) res.independent_set.push_back(v);
    for (auto [u, v] : J.edges())
        if (cur.label_of[u] == Label::alpha && cur.label_of[v] == Label::alpha && in.cls(u) != 3 &&
            in.cls(v) != 3)
            fail(errc::contract_breach, "resolved I is not independent");
    res.partition.part_of.assign(n, 0);
    for (int v = 0; v < n; ++v) res.partition.part_of[v] = cur.label_of[v] == Label::alpha ? 1 : 0;
    require_forest_bipartition(J, res.partition);
    return res;
}

ThetaPartitionResult forest_partition_3connected(const PlaneGraph& J, const TriColoring& types) {
    EngineInput in = make_engine_input(J, types);
    EngineRun run = eliminate_beta_cycles(in);
    GammaResolution res = resolve_gammas(in, run.result);
    // The resolved partition must coincide with the independent-shift
    // construction, which is compatible by construction.
    ForestBipartition via_shift = independent_shift_partition(J, types, res.independent_set);
    if (via_shift.part_of != res.partition.part_of)
        fail(errc::contract_breach, "resolved partition differs from the shift construction");
    ThetaPartitionResult out;
    out.partition = std::move(res.partition);
    out.steps = std::move(run.steps);
    return out;
}

namespace {

TriColoring restrict_types(const TriColoring& types, const std::vector<int>& kept) {
    std::vector<int> cls(kept.size());
    for (size_t i = 0; i < kept.size(); ++i) cls[i] = types.class_of[kept[i]];
    return TriColoring::from_assignment(std::move(cls));
}

bool partition_valid(const PlaneGraph& J, const TriColoring& types, const ForestBipartition& K) {
    if (!is_compatible(J, types, K).compatible) return false;
    for (int which = 0; which < 2; ++which) {
        std::vector<char> mask(J.vertex_count(), 0);
        for (int v = 0; v < J.vertex_count(); ++v) mask[v] = K.part_of[v] == which;
        if (!induces_forest(J, mask).is_forest) return false;
    }
    return true;
}

}  // namespace

ForestBipartition extend_over_removed_vertex(const PlaneGraph& J, const TriColoring& types, int u,
                                 const ForestBipartition& sub_part) {
    if (J.degree(u) != 2) fail(errc::bad_input, "reduction vertex must have degree 2");
    std::vector<int> kept;
    for (int v = 0; v < J.vertex_count(); ++v)
        if (v != u) kept.push_back(v);
    {
        PlaneGraph sub = induced_plane_subgraph(J, kept);
        TriColoring sub_types = restrict_types(types, kept);
        if (!partition_valid(sub, sub_types, sub_part))
            fail(errc::bad_input, "sub-partition is not compatible or not a forest pair");
    }

    ForestBipartition K;
    K.part_of.assign(J.vertex_count(), -1);
    for (size_t i = 0; i < kept.size(); ++i) K.part_of[kept[i]] = sub_part.part_of[i];

    int b = J.neighbors(u)[0], d = J.neighbors(u)[1];
    int tb = K.part_of[b], td = K.part_of[d];

    std::vector<int> candidates;
    if (tb == td) {
        candidates = {1 - tb, tb};
    } else {
        // Alternation keyed to the far vertex of the first 4-face at u;
        // both faces are then rechecked.
        int a_ref = -1;
        for (int i = 0; i < 2 && a_ref == -1; ++i) {
            int f = J.face_of_dart(u, J.neighbors(u)[i]);
            const Face& face = J.face(f);
            if (face.length() != 4) continue;
            for (int v : face.boundary)
                if (v != u && v != b && v != d) a_ref = v;
        }
        if (a_ref >= 0) {
            int suggested = types.class_of[u] == types.class_of[a_ref] ? K.part_of[a_ref]
                                                                       : 1 - K.part_of[a_ref];
            candidates = {suggested, 1 - suggested};
        } else {
            candidates = {1 - K.part_of[std::min(b, d)], K.part_of[std::min(b, d)]};
        }
    }
    for (int cand : candidates) {
        K.part_of[u] = cand;
        if (partition_valid(J, types, K)) return K;
    }
    fail(errc::case_analysis_unreachable, "no colour of the degree-2 vertex works");
}

ForestBipartition extend_over_removed_path(const PlaneGraph& J, const TriColoring& types,
                                 const std::vector<int>& path, const ForestBipartition& sub_part) {
    if (path.size() < 2) fail(errc::bad_input, "path must have at least two vertices");
    std::vector<char> on_path(J.vertex_count(), 0);
    for (int v : path) on_path[v] = 1;
    // The two common neighbours of the whole path.
    std::vector<int> flanks;
    for (int w : J.neighbors(path[0])) {
        if (on_path[w]) continue;
        bool all = true;
        for (int v : path) all &= J.has_edge(v, w);
        if (all) flanks.push_back(w);
    }
    if (flanks.size() != 2) fail(errc::bad_input, "path does not have exactly two common neighbours");
    int b = flanks[0], d = flanks[1];
    if (types.class_of[b] != types.class_of[d])
        fail(errc::bad_input, "common neighbours must share a type");

    std::vector<int> kept;
    for (int v = 0; v < J.vertex_count(); ++v)
        if (!on_path[v]) kept.push_back(v);
    {
        PlaneGraph sub = induced_plane_subgraph(J, kept);
        TriColoring sub_types = restrict_types(types, kept);
        if (!partition_valid(sub, sub_types, sub_part))
            fail(errc::bad_input, "sub-partition is not compatible or not a forest pair");
    }
    ForestBipartition K;
    K.part_of.assign(J.vertex_count(), -1);
    for (size_t i = 0; i < kept.size(); ++i) K.part_of[kept[i]] = sub_part.part_of[i];

    int u = path.front();
    if (K.part_of[b] == K.part_of[d]) {
        // Flanks agree: the whole path goes opposite and the flank pair
        // witnesses every new face.
        for (int v : path) K.part_of[v] = 1 - K.part_of[b];
    } else {
        // a = far vertex of the face beside u away from the path.
        int a_ref = -1;
        for (int w : {b, d}) {
            int f1 = J.face_of_dart(u, w);
            int f2 = J.face_of_dart(w, u);
            for (int f : {f1, f2}) {
                const Face& face = J.face(f);
                if (face.length() != 4) continue;
                bool inner = false;
                int far = -1;
                for (int v : face.boundary) {
                    if (on_path[v] && v != u) inner = true;
                    if (v != u && v != b && v != d) far = v;
                }
                std::set<int> fs(face.boundary.begin(), face.boundary.end());
                if (!inner && fs.count(b) && fs.count(d) && far != -1) a_ref = far;
            }
        }
        if (a_ref == -1) fail(errc::case_analysis_unreachable, "end face of the path not found");
        // Normalize so that b matches the colour of a.
        if (K.part_of[b] != K.part_of[a_ref]) std::swap(b, d);
        int first = types.class_of[u] == types.class_of[a_ref] ? K.part_of[a_ref]
                                                               : 1 - K.part_of[a_ref];
        for (size_t i = 0; i < path.size(); ++i)
            K.part_of[path[i]] = (i % 2 == 0) ? first : 1 - first;
    }
    if (!partition_valid(J, types, K))
        fail(errc::case_analysis_unreachable, "path extension failed validation");
    return K;
}

TriColoring assign_engine_roles(const PlaneGraph& J, const TriColoring& coloring) {
    std::array<int, 3> size = coloring.sizes();
    // Degree-five-plus vertices can only live in J3; otherwise J3 is the
    // largest class, ties by smallest member id.
    auto smallest_member = [&](int k) {
        return coloring.classes[k].empty() ? J.vertex_count() : coloring.classes[k].front();
    };
    int forced = -1;
    for (int v = 0; v < J.vertex_count(); ++v) {
        if (J.degree(v) <= 4) continue;
        int k = coloring.class_of[v] - 1;
        if (forced != -1 && forced != k)
            fail(errc::precondition_a1, "high-degree vertices span two classes");
        forced = k;
    }
    int j3 = forced;
    if (j3 < 0) {
        j3 = 0;
        for (int k = 1; k < 3; ++k) {
            if (size[k] > size[j3] ||
                (size[k] == size[j3] && smallest_member(k) < smallest_member(j3)))
                j3 = k;
        }
    }
    std::vector<int> rest;
    for (int k = 0; k < 3; ++k)
        if (k != j3) rest.push_back(k);
    if (smallest_member(rest[1]) < smallest_member(rest[0])) std::swap(rest[0], rest[1]);
    std::vector<int> cls(J.vertex_count());
    for (int v = 0; v < J.vertex_count(); ++v) {
        int k = coloring.class_of[v] - 1;
        cls[v] = k == j3 ? 3 : k == rest[0] ? 1 : 2;
    }
    return TriColoring::from_assignment(std::move(cls));
}

namespace {

void validate_theta_input(const PlaneGraph& J, const TriColoring& types) {
    if (!is_k_connected(J, 2)) fail(errc::not_theta, "not 2-connected");
    for (const Face& f : J.faces())
        if (f.length() != 3 && f.length() != 4)
            fail(errc::not_theta, "face of length " + std::to_string(f.length()));
    if (!types.proper_on(J)) fail(errc::not_theta, "improper colouring");
    for (int v = 0; v < J.vertex_count(); ++v)
        if (J.degree(v) > 4) fail(errc::bad_input, "max degree 4 required");
}

ForestBipartition theta_recurse(const PlaneGraph& J, const TriColoring& types,
                                std::vector<StepTrace>& steps, int depth) {
    if (depth > J.vertex_count() + 4) fail(errc::recursion_invariant_broken, "depth overflow");
    validate_theta_input(J, types);
    const int n = J.vertex_count();

    if (n == 3) {
        ForestBipartition K;
        K.part_of = {1, 0, 0};
        return K;
    }
    bool is_cycle4 = n == 4;
    for (int v = 0; v < n && is_cycle4; ++v) is_cycle4 &= J.degree(v) == 2;
    if (is_cycle4) {
        // Diagonal pairs of the quadrilateral; one same-type diagonal exists.
        const Face& f = J.face(0);
        int a = f.boundary[0], b = f.boundary[1], c = f.boundary[2], d = f.boundary[3];
        ForestBipartition K;
        K.part_of.assign(4, 0);
        if (types.class_of[a] == types.class_of[c]) {
            K.part_of[a] = K.part_of[c] = 1;
        } else if (types.class_of[b] == types.class_of[d]) {
            K.part_of[b] = K.part_of[d] = 1;
        } else {
            fail(errc::recursion_invariant_broken, "4-cycle without monochromatic diagonal");
        }
        return K;
    }

    if (is_k_connected(J, 3)) {
        TriColoring roles = assign_engine_roles(J, types);
        ThetaPartitionResult sub = forest_partition_3connected(J, roles);
        for (auto& s : sub.steps) steps.push_back(s);
        // Compatibility holds for the original classes as well: the predicate
        // only compares types for equality.
        if (!partition_valid(J, types, sub.partition))
            fail(errc::contract_breach, "engine partition invalid for the original classes");
        return sub.partition;
    }

    // Degree-2 reduction.
    for (int u = 0; u < n; ++u) {
        if (J.degree(u) != 2) continue;
        std::vector<int> kept;
        for (int v = 0; v < n; ++v)
            if (v != u) kept.push_back(v);
        PlaneGraph sub = induced_plane_subgraph(J, kept);
        TriColoring sub_types = restrict_types(types, kept);
        ForestBipartition sub_part = theta_recurse(sub, sub_types, steps, depth + 1);
        return extend_over_removed_vertex(J, types, u, sub_part);
    }

    // Minimal separating quadrilateral: diagonal (a1, c1) with all of b1, d1
    // attached on one side and a1, c1 on the other.
    struct Candidate {
        int a, b, c, d;
        std::vector<char> inside;  // faces of the interior side
        int inside_faces;
    };
    std::optional<Candidate> best;
    auto consider = [&](int a, int b, int c, int d) {
        // Split faces along the cycle a-b-c-d.
        std::vector<int> cyc_edges;
        for (auto [u, v] : {std::pair{a, b}, {b, c}, {c, d}, {d, a}}) {
            int e = J.edge_id(u, v);
            if (e < 0) return;
            cyc_edges.push_back(e);
        }
        std::vector<char> is_cyc_edge(J.edge_count(), 0);
        for (int e : cyc_edges) is_cyc_edge[e] = 1;
        std::vector<int> side(J.face_count(), -1);
        for (int which = 0, f0 = 0; f0 < J.face_count(); ++f0) {
            if (side[f0] != -1) continue;
            side[f0] = which;
            std::vector<int> stack{f0};
            while (!stack.empty()) {
                int f = stack.back();
                stack.pop_back();
                const Face& face = J.face(f);
                for (int i = 0; i < face.length(); ++i) {
                    int u = face.boundary[i], v = face.boundary[(i + 1) % face.length()];
                    if (is_cyc_edge[J.edge_id(u, v)]) continue;
                    int g = J.face_of_dart(v, u);
                    if (side[g] == -1) {
                        side[g] = which;
                        stack.push_back(g);
                    }
                }
            }
            ++which;
            if (which > 2) return;  // cycle does not separate into two sides
        }
        int max_side = *std::max_element(side.begin(), side.end());
        if (max_side != 1) return;

        std::vector<int> vside(n, -1);
        for (int f = 0; f < J.face_count(); ++f)
            for (int v : J.face(f).boundary)
                if (v != a && v != b && v != c && v != d) vside[v] = side[f];
        for (int s = 0; s < 2; ++s) {
            // s = interior side: b, d have no neighbour inside, a, c none outside.
            bool ok = true;
            for (int v : J.neighbors(b))
                if (v != a && v != c && vside[v] == s) ok = false;
            for (int v : J.neighbors(d))
                if (v != a && v != c && vside[v] == s) ok = false;
            for (int v : J.neighbors(a))
                if (v != b && v != d && v != c && vside[v] == 1 - s) ok = false;
            for (int v : J.neighbors(c))
                if (v != b && v != d && v != a && vside[v] == 1 - s) ok = false;
            if (!ok) continue;
            Candidate cand;
            cand.a = a;
            cand.b = b;
            cand.c = c;
            cand.d = d;
            cand.inside_faces = 0;
            for (int f = 0; f < J.face_count(); ++f) cand.inside_faces += side[f] == s;
            if (!best || cand.inside_faces < best->inside_faces) best = cand;
        }
    };
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            std::vector<int> common;
            for (int w : J.neighbors(x))
                if (J.has_edge(y, w)) common.push_back(w);
            for (size_t i = 0; i < common.size(); ++i)
                for (size_t j = i + 1; j < common.size(); ++j) {
                    consider(x, common[i], y, common[j]);
                    consider(common[i], x, common[j], y);
                }
        }
    if (!best) fail(errc::recursion_invariant_broken, "no separating quadrilateral found");
    int a1 = best->a, c1 = best->c;
    if (!J.has_edge(a1, c1) || J.degree(a1) != 3 || J.degree(c1) != 3)
        fail(errc::recursion_invariant_broken, "minimal quadrilateral lacks the degree-3 chord");

    std::vector<int> kept;
    for (int v = 0; v < n; ++v)
        if (v != a1 && v != c1) kept.push_back(v);
    PlaneGraph sub = induced_plane_subgraph(J, kept);
    TriColoring sub_types = restrict_types(types, kept);
    ForestBipartition sub_part = theta_recurse(sub, sub_types, steps, depth + 1);
    return extend_over_removed_path(J, types, {a1, c1}, sub_part);
}

}  // namespace

ThetaPartitionResult forest_partition_theta(const PlaneGraph& J, const TriColoring& types) {
    ThetaPartitionResult out;
    out.partition = theta_recurse(J, types, out.steps, 0);
    if (!partition_valid(J, types, out.partition))
        fail(errc::contract_breach, "theta partition failed the final contract");
    return out;
}

}  // namespace barnette
