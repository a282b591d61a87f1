#include "barnette/partition.hpp"

#include <algorithm>

namespace barnette {

CompatibilityWitness is_compatible(const PlaneGraph& J, const TriColoring& types,
                                   const ForestBipartition& K) {
    CompatibilityWitness w;
    for (const Face& f : J.faces()) {
        if (f.length() != 4) continue;
        CompatibilityWitness::FaceWitness fw;
        fw.face = f.id;
        for (int i = 0; i < 2 && !fw.ok; ++i) {
            int u = f.boundary[i], v = f.boundary[i + 2];
            bool same_part = K.part_of[u] == K.part_of[v];
            bool same_type = types.class_of[u] == types.class_of[v];
            if (same_part == same_type) {
                fw.ok = true;
                fw.u = u;
                fw.v = v;
            }
        }
        if (!fw.ok) w.compatible = false;
        w.faces.push_back(fw);
    }
    return w;
}

ForestBipartition independent_shift_partition(const PlaneGraph& J, const TriColoring& types,
                                   const std::vector<int>& I) {
    std::vector<char> in_I(J.vertex_count(), 0);
    for (int v : I) {
        if (types.class_of[v] == 3) fail(errc::not_subset, "I must avoid J3, has " + std::to_string(v));
        in_I[v] = 1;
    }
    for (auto [u, v] : J.edges())
        if (in_I[u] && in_I[v])
            fail(errc::not_independent, std::to_string(u) + "-" + std::to_string(v) + " inside I");

    ForestBipartition K;
    K.part_of.assign(J.vertex_count(), 0);
    for (int v = 0; v < J.vertex_count(); ++v)
        K.part_of[v] = (types.class_of[v] == 3 || in_I[v]) ? 1 : 0;

    auto w = is_compatible(J, types, K);
    if (!w.compatible)
        fail(errc::contract_breach,
             "shift construction incompatible at face " + std::to_string(w.first_violation()));
    return K;
}

ForestCheck induces_forest(const PlaneGraph& g, const std::vector<char>& in_set) {
    const int n = g.vertex_count();
    ForestCheck out;
    std::vector<int> parent(n, -2);
    for (int s = 0; s < n; ++s) {
        if (!in_set[s] || parent[s] != -2) continue;
        parent[s] = -1;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v)) {
                if (!in_set[u] || u == parent[v]) continue;
                if (parent[u] != -2) {
                    // Back edge v-u closes a cycle: walk both ancestries.
                    std::vector<int> pv, pu;
                    for (int x = v; x != -1; x = parent[x]) pv.push_back(x);
                    for (int x = u; x != -1; x = parent[x]) pu.push_back(x);
                    std::reverse(pv.begin(), pv.end());
                    std::reverse(pu.begin(), pu.end());
                    size_t k = 0;
                    while (k + 1 < pv.size() && k + 1 < pu.size() && pv[k + 1] == pu[k + 1]) ++k;
                    out.is_forest = false;
                    out.cycle.assign(pv.begin() + k, pv.end());
                    for (size_t i = pu.size(); i-- > k + 1;) out.cycle.push_back(pu[i]);
                    return out;
                }
                parent[u] = v;
                stack.push_back(u);
            }
        }
    }
    return out;
}

ForestCheck induces_forest(const PlaneGraph& g, const std::vector<int>& S) {
    std::vector<char> in_set(g.vertex_count(), 0);
    for (int v : S) in_set[v] = 1;
    return induces_forest(g, in_set);
}

void require_forest_bipartition(const PlaneGraph& g, const ForestBipartition& K) {
    for (int which = 0; which < 2; ++which) {
        std::vector<char> in_set(g.vertex_count(), 0);
        for (int v = 0; v < g.vertex_count(); ++v) in_set[v] = K.part_of[v] == which;
        auto check = induces_forest(g, in_set);
        if (!check.is_forest) {
            std::string cyc;
            for (int v : check.cycle) cyc += std::to_string(v) + " ";
            fail(errc::contract_breach, "part " + std::to_string(which) + " has cycle " + cyc);
        }
    }
}

}  // namespace barnette
