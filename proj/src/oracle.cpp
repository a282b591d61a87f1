#include "barnette/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "barnette/partition.hpp"

namespace barnette::oracle {

HamiltonEnumeration enumerate_hamilton_cycles(const PlaneGraph& g, int cap) {
    const int n = g.vertex_count();
    if (n > cap) fail(errc::cap_exceeded, std::to_string(n) + " vertices over the cap");
    HamiltonEnumeration out;
    if (n < 3) return out;

    // Rooted at vertex 0; direction fixed by second < last vertex.
    std::vector<int> path{0};
    std::vector<char> used(n, 0);
    used[0] = 1;

    auto emit = [&]() {
        if (path[1] > path.back()) return;  // each cycle once per direction
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i) {
            int u = path[i], v = path[(i + 1) % n];
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(edges.begin(), edges.end());
        out.cycles.push_back(std::move(edges));
        ++out.count;
    };

    // Pruning: unvisited region must stay connected through open vertices.
    auto feasible = [&]() {
        int first = -1, remaining = 0;
        for (int v = 0; v < n; ++v)
            if (!used[v]) {
                ++remaining;
                if (first < 0) first = v;
            }
        if (remaining == 0) return true;
        std::vector<char> seen(n, 0);
        std::vector<int> stack{first};
        seen[first] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (!used[w] && !seen[w]) {
                    seen[w] = 1;
                    ++cnt;
                    stack.push_back(w);
                }
        }
        return cnt == remaining;
    };

    std::function<void(int)> dfs = [&](int v) {
        if (static_cast<int>(path.size()) == n) {
            if (g.has_edge(v, 0)) emit();
            return;
        }
        for (int w : g.neighbors(v)) {
            if (used[w]) continue;
            used[w] = 1;
            path.push_back(w);
            if (feasible()) dfs(w);
            used[w] = 0;
            path.pop_back();
        }
    };
    dfs(0);
    std::sort(out.cycles.begin(), out.cycles.end());
    out.cycles.erase(std::unique(out.cycles.begin(), out.cycles.end()), out.cycles.end());
    out.count = static_cast<long long>(out.cycles.size());
    return out;
}

long long enumerate_forest_bipartitions(const PlaneGraph& g, int cap) {
    const int n = g.vertex_count();
    if (n > cap) fail(errc::cap_exceeded, std::to_string(n) + " vertices over the cap");
    if (n == 0) return 1;
    long long count = 0;
    // Vertex 0 pinned to side A makes the pairs unordered.
    std::vector<char> side(n, 0);
    for (uint64_t bits = 0; bits < (uint64_t{1} << (n - 1)); ++bits) {
        for (int v = 1; v < n; ++v) side[v] = (bits >> (v - 1)) & 1;
        std::vector<char> a(n, 0), b(n, 0);
        for (int v = 0; v < n; ++v) (side[v] ? b[v] : a[v]) = 1;
        if (induces_forest(g, a).is_forest && induces_forest(g, b).is_forest) ++count;
    }
    return count;
}

OracleReport cross_check_stein(const PlaneGraph& g, int hamilton_cap, int forest_cap) {
    OracleReport rep;
    DualResult d = dual(g);
    rep.hamilton_count = enumerate_hamilton_cycles(d.graph, hamilton_cap).count;
    rep.forest_bipartition_count = enumerate_forest_bipartitions(g, forest_cap);
    rep.agreement = (rep.hamilton_count > 0) == (rep.forest_bipartition_count > 0);
    return rep;
}

}  // namespace barnette::oracle
