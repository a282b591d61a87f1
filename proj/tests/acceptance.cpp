// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "barnette/goodcolor.hpp"
#include "barnette/io.hpp"
#include "barnette/oracle.hpp"
#include "barnette/stein.hpp"
#include "barnette/synth.hpp"

using namespace barnette;

namespace {

int failures = 0;

void outcome(int id, const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", id, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

bool oracle_has_cycle(const PlaneGraph& g, const HamiltonCycle& h) {
    DualResult d = dual(g);
    auto cycles = oracle::enumerate_hamilton_cycles(d.graph);
    std::vector<std::pair<int, int>> mine;
    for (int e : h.crossing_edges)
        mine.push_back(d.graph.edges()[d.correspondence.primal_to_dual[e]]);
    std::sort(mine.begin(), mine.end());
    for (const auto& cyc : cycles.cycles)
        if (cyc == mine) return true;
    return false;
}

}  // namespace

int main() {
    auto corpus = synth::corpus();

    // 1. Pipeline soundness sweep.
    {
        auto t0 = std::chrono::steady_clock::now();
        int ran = 0, ok = 0;
        std::string detail;
        for (const auto& inst : corpus) {
            if (inst.family == "three-cycle") continue;
            BigSmallSplit split = big_small_split(inst.graph);
            if (inst.family == "general" && big_neighbour_bound(inst.graph, split) > 4) continue;
            ++ran;
            try {
                HamiltonizeResult res = hamiltonize(inst.graph);
                verify_hamilton_cycle(inst.graph, res.cycle);
                ++ok;
            } catch (const graph_error& e) {
                detail += inst.name + ": " + e.what() + "; ";
            }
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        int wheels = 0, expansions = 0;
        for (const auto& inst : corpus) {
            if (inst.name.rfind("double-wheel-", 0) == 0) ++wheels;
            if (inst.name.rfind("expand-", 0) == 0) ++expansions;
        }
        std::ostringstream os;
        os << ok << "/" << ran << " instances (corpus " << corpus.size() << ", wheels " << wheels
           << ", syntheses " << expansions << ") in " << secs << "s " << detail;
        outcome(1, "pipeline soundness sweep",
                corpus.size() >= 30 && wheels >= 5 && expansions >= 10 && ran >= 20 &&
                    ok == ran && secs < 60.0,
                os.str());
    }

    // 2. Stein equivalence oracle on every instance with at most 14 vertices.
    {
        int checked = 0, agreed = 0;
        for (const auto& inst : corpus) {
            if (inst.graph.vertex_count() > 14) continue;
            ++checked;
            auto rep = oracle::cross_check_stein(inst.graph);
            if (rep.agreement) ++agreed;
        }
        std::ostringstream os;
        os << agreed << "/" << checked << " agreements";
        outcome(2, "stein equivalence oracle", checked > 0 && agreed == checked, os.str());
    }

    // 3. Multiplicity construction on CUBE14.
    {
        bool ok = false;
        std::string detail;
        try {
            PlaneGraph g = synth::cube14().graph;
            TriColoring c = three_coloring(g);
            BigSmallSplit split = big_small_split(g);
            LowerBoundResult res = hamilton_lower_bound(g, c, split);
            std::set<std::vector<std::pair<int, int>>> keys;
            bool distinct = true, verified = true;
            for (const auto& h : res.cycles) {
                try {
                    verify_hamilton_cycle(g, h);
                } catch (...) {
                    verified = false;
                }
                if (!oracle_has_cycle(g, h)) verified = false;
                distinct &= keys.insert(h.edge_set(g)).second;
            }
            long long total = oracle::enumerate_hamilton_cycles(dual(g).graph).count;
            ok = res.k == 2 && static_cast<int>(res.cycles.size()) >= 4 && distinct && verified &&
                 total >= 4;
            std::ostringstream os;
            os << "k=" << res.k << " cycles=" << res.cycles.size() << " oracle_total=" << total;
            detail = os.str();
        } catch (const graph_error& e) {
            detail = e.what();
        }
        outcome(3, "multiplicity bound on CUBE14", ok, detail);
    }

    // 4. Engine invariants across all runs (every step revalidated inside the
    // engine; a contract breach throws). Additionally re-run the two engine
    // phases instrumented here, including the prescribed stress inputs.
    {
        int runs = 0, overlap_steps = 0, removal_steps = 0;
        bool ok = true;
        std::string detail;
        std::vector<std::pair<const PlaneGraph*, TriColoring>> engine_inputs;
        std::vector<std::unique_ptr<PlaneGraph>> owned;
        try {
            // Stress fixtures with prescribed roles.
            owned.push_back(std::make_unique<PlaneGraph>(synth::overlap_theta()));
            engine_inputs.push_back({owned.back().get(), synth::overlap_theta_types()});
            owned.push_back(std::make_unique<PlaneGraph>(synth::overlap_theta_deg4()));
            engine_inputs.push_back({owned.back().get(), synth::overlap_theta_deg4_types()});
            owned.push_back(std::make_unique<PlaneGraph>(synth::cuboctahedron()));
            engine_inputs.push_back({owned.back().get(), synth::cuboctahedron_types()});
            for (const auto& inst : corpus) {
                if (inst.family != "general") continue;
                TriColoring c = three_coloring(inst.graph);
                BigSmallSplit split = big_small_split(inst.graph);
                if (big_neighbour_bound(inst.graph, split) > 4) continue;
                BigSubgraph J = big_subgraph(inst.graph, c, split);
                if (!is_k_connected(J.graph, 3)) continue;
                owned.push_back(std::make_unique<PlaneGraph>(J.graph));
                engine_inputs.push_back(
                    {owned.back().get(), assign_engine_roles(*owned.back(), J.types)});
            }
            for (auto& [graph_ptr, roles] : engine_inputs) {
                const PlaneGraph& Jg = *graph_ptr;
                EngineInput in = make_engine_input(Jg, roles);
                WorkColoring t = in.preliminary;
                auto measure = beta_cycle_report(in, t).measure();
                const bool exhaustive = Jg.vertex_count() <= 24;
                while (true) {
                    auto rep = beta_cycle_report(in, t);
                    if (!validate_associated(in, t).all()) ok = false;
                    auto bad = bad_path_report(in, t, rep);
                    if (!bad.good()) ok = false;
                    if (rep.empty()) break;
                    auto before = exhaustive ? enumerate_beta_cycles(Jg, t)
                                             : std::vector<std::vector<std::pair<int, int>>>{};
                    if (rep.all_independent()) {
                        t = step_remove_independent_cycle(in, t);
                        ++removal_steps;
                    } else {
                        t = step_eliminate_overlap(in, t);
                        ++overlap_steps;
                    }
                    auto now = beta_cycle_report(in, t).measure();
                    if (now >= measure) ok = false;
                    measure = now;
                    if (exhaustive) {
                        auto after = enumerate_beta_cycles(Jg, t);
                        std::set<std::vector<std::pair<int, int>>> prev(before.begin(),
                                                                        before.end());
                        if (after.size() >= before.size()) ok = false;
                        for (const auto& cyc : after)
                            if (!prev.count(cyc)) ok = false;
                    }
                }
                ++runs;
            }
        } catch (const graph_error& e) {
            ok = false;
            detail = e.what();
        }
        std::ostringstream os;
        os << runs << " engine runs, " << overlap_steps << " overlap + " << removal_steps
           << " removal steps " << detail;
        outcome(4, "engine invariants", ok && runs > 0 && overlap_steps > 0 && removal_steps > 0,
                os.str());
    }

    // 5. Forest-partition contract on the seed library.
    {
        int checked = 0, good = 0;
        std::string detail;
        for (const auto& seed : synth::theta_seed_library()) {
            bool deg4 = true;
            for (int v = 0; v < seed.graph.vertex_count(); ++v)
                deg4 &= seed.graph.degree(v) <= 4;
            if (!deg4) continue;
            ++checked;
            try {
                ThetaPartitionResult out = forest_partition_theta(seed.graph, seed.types);
                bool compat = is_compatible(seed.graph, seed.types, out.partition).compatible;
                require_forest_bipartition(seed.graph, out.partition);
                bool independent = true;
                if (is_k_connected(seed.graph, 3)) {
                    // The 3-connected path returns {(J1 u J2) \ I, J3 u I};
                    // I = part one minus J3 must be independent.
                    TriColoring roles = assign_engine_roles(seed.graph, seed.types);
                    ThetaPartitionResult tri = forest_partition_3connected(seed.graph, roles);
                    for (int v = 0; v < seed.graph.vertex_count(); ++v)
                        for (int w : seed.graph.neighbors(v))
                            if (v < w && tri.partition.part_of[v] == 1 &&
                                tri.partition.part_of[w] == 1 && roles.class_of[v] != 3 &&
                                roles.class_of[w] != 3)
                                independent = false;
                }
                if (compat && independent) ++good;
            } catch (const graph_error& e) {
                detail += seed.name + ": " + e.what() + "; ";
            }
        }
        std::ostringstream os;
        os << good << "/" << checked << " seeds " << detail;
        outcome(5, "partition contract on the seed library", checked > 0 && good == checked,
                os.str());
    }

    // 6. Uniqueness of the 3-colouring from ten seed faces.
    {
        bool ok = true;
        for (const auto& inst : corpus) {
            TriColoring base = three_coloring(inst.graph, 0);
            auto canon = [&](const TriColoring& t) {
                // Relabel classes by their smallest member.
                std::array<int, 4> rank{};
                std::vector<std::pair<int, int>> firsts;
                for (int k = 1; k <= 3; ++k) {
                    int first = inst.graph.vertex_count();
                    for (int v = 0; v < inst.graph.vertex_count(); ++v)
                        if (t.class_of[v] == k) {
                            first = v;
                            break;
                        }
                    firsts.push_back({first, k});
                }
                std::sort(firsts.begin(), firsts.end());
                for (int i = 0; i < 3; ++i) rank[firsts[i].second] = i + 1;
                std::vector<int> out(inst.graph.vertex_count());
                for (int v = 0; v < inst.graph.vertex_count(); ++v)
                    out[v] = rank[t.class_of[v]];
                return out;
            };
            auto base_canon = canon(base);
            int step = std::max(1, inst.graph.face_count() / 10);
            for (int s = 0; s < inst.graph.face_count(); s += step)
                if (canon(three_coloring(inst.graph, s)) != base_canon) ok = false;
        }
        outcome(6, "unique 3-colouring from random seed faces", ok);
    }

    // 7. Crossing identity for every two-tree bipartition encountered.
    {
        bool ok = true;
        int seen = 0;
        for (const auto& inst : corpus) {
            if (inst.family == "three-cycle") continue;
            BigSmallSplit split = big_small_split(inst.graph);
            if (inst.family == "general" && big_neighbour_bound(inst.graph, split) > 4) continue;
            HamiltonizeResult res;
            try {
                res = hamiltonize(inst.graph);
            } catch (const graph_error&) {
                continue;
            }
            ++seen;
            int crossing = 0;
            std::vector<int> per_face(inst.graph.face_count(), 0);
            for (int e = 0; e < inst.graph.edge_count(); ++e) {
                auto [u, v] = inst.graph.edges()[e];
                if (res.partition.part_of[u] != res.partition.part_of[v]) {
                    ++crossing;
                    auto fs = inst.graph.faces_of_edge(u, v);
                    ++per_face[fs.first];
                    ++per_face[fs.second];
                }
            }
            if (crossing != 2 * inst.graph.vertex_count() - 4) ok = false;
            for (int f = 0; f < inst.graph.face_count(); ++f)
                if (per_face[f] != 2) ok = false;
        }
        outcome(7, "crossing identity", ok && seen > 0,
                std::to_string(seen) + " partitions checked");
    }

    // 8. Round trips: formats, dual involution, restrict after extend.
    {
        bool ok = true;
        std::string detail;
        try {
            for (const auto& inst : corpus) {
                std::ostringstream pc1;
                io::write_planar_code(pc1, {inst.graph});
                std::istringstream astext(io::write_rotation_text(inst.graph));
                PlaneGraph via = io::read_rotation_text(astext);
                std::ostringstream pc2;
                io::write_planar_code(pc2, {via});
                if (pc1.str() != pc2.str()) {
                    ok = false;
                    detail += inst.name + ": planar_code differs; ";
                }
                DualResult d1 = dual(inst.graph);
                DualResult d2 = dual(d1.graph);
                if (!plane_isomorphic(inst.graph, d2.graph)) {
                    ok = false;
                    detail += inst.name + ": dual involution fails; ";
                }
            }
            // restrict(extend(L)) = L on CUBE14.
            PlaneGraph g = synth::cube14().graph;
            TriColoring c = three_coloring(g);
            BigSmallSplit split = big_small_split(g);
            BigSubgraph J = big_subgraph(g, c, split);
            ForestBipartition L;
            L.part_of = *is_bipartite(J.graph);
            SmallPathCover cover = small_path_cover(g, c, split);
            std::vector<int> base(g.vertex_count(), -1);
            for (int j = 0; j < J.graph.vertex_count(); ++j)
                base[J.big_to_orig[j]] = L.part_of[j];
            ForestBipartition full = extend_to_full(g, c, cover, base);
            ForestBipartition back = restrict_to_big(g, c, split, J, full);
            if (back.part_of != L.part_of) {
                ok = false;
                detail += "restrict-extend identity fails; ";
            }
        } catch (const graph_error& e) {
            ok = false;
            detail = e.what();
        }
        outcome(8, "round trips", ok, detail);
    }

    return failures == 0 ? 0 : 1;
}
