#include "barnette/svg.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <vector>

namespace barnette::svg {

namespace {

// Tutte layout: outer face pinned to a regular polygon, interior vertices at
// the average of their neighbours; solved by Gaussian elimination.
std::vector<std::pair<double, double>> tutte_layout(const PlaneGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<double, double>> pos(n, {0.0, 0.0});
    const Face& outer = g.face(0);
    std::vector<char> fixed(n, 0);
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < outer.length(); ++i) {
        int v = outer.boundary[i];
        double ang = 2 * pi * i / outer.length();
        pos[v] = {std::cos(ang), std::sin(ang)};
        fixed[v] = 1;
    }
    std::vector<int> free_ids;
    std::vector<int> index(n, -1);
    for (int v = 0; v < n; ++v)
        if (!fixed[v]) {
            index[v] = static_cast<int>(free_ids.size());
            free_ids.push_back(v);
        }
    const int m = static_cast<int>(free_ids.size());
    if (m == 0) return pos;
    for (int coord = 0; coord < 2; ++coord) {
        std::vector<std::vector<double>> a(m, std::vector<double>(m + 1, 0.0));
        for (int r = 0; r < m; ++r) {
            int v = free_ids[r];
            a[r][r] = static_cast<double>(g.degree(v));
            for (int w : g.neighbors(v)) {
                if (fixed[w])
                    a[r][m] += coord == 0 ? pos[w].first : pos[w].second;
                else
                    a[r][index[w]] -= 1.0;
            }
        }
        for (int col = 0; col < m; ++col) {
            int piv = col;
            for (int r = col + 1; r < m; ++r)
                if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
            std::swap(a[col], a[piv]);
            for (int r = 0; r < m; ++r) {
                if (r == col || a[r][col] == 0.0) continue;
                double factor = a[r][col] / a[col][col];
                for (int c = col; c <= m; ++c) a[r][c] -= factor * a[col][c];
            }
        }
        for (int r = 0; r < m; ++r) {
            double val = a[r][m] / a[r][r];
            (coord == 0 ? pos[free_ids[r]].first : pos[free_ids[r]].second) = val;
        }
    }
    return pos;
}

}  // namespace

std::string render(const PlaneGraph& g, const ForestBipartition* partition,
                   const HamiltonCycle* cycle) {
    auto pos = tutte_layout(g);
    const double scale = 260.0, off = 300.0;
    auto X = [&](int v) { return off + scale * pos[v].first; };
    auto Y = [&](int v) { return off + scale * pos[v].second; };

    std::set<int> crossing;
    if (partition) {
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edges()[e];
            if (partition->part_of[u] != partition->part_of[v]) crossing.insert(e);
        }
    }

    std::ostringstream os;
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='600' height='600' "
          "viewBox='0 0 600 600'>\n";
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        bool cross = crossing.count(e) > 0;
        os << "<line x1='" << X(u) << "' y1='" << Y(u) << "' x2='" << X(v) << "' y2='" << Y(v)
           << "' stroke='" << (cross ? "#d62728" : "#999") << "' stroke-width='"
           << (cross ? 2.5 : 1.2) << "'/>\n";
    }
    if (cycle) {
        // Dual walk through face centroids.
        auto centroid = [&](int f) {
            double x = 0, y = 0;
            for (int v : g.face(f).boundary) {
                x += X(v);
                y += Y(v);
            }
            int k = g.face(f).length();
            return std::pair<double, double>{x / k, y / k};
        };
        os << "<polyline fill='none' stroke='#1f77b4' stroke-width='2' points='";
        for (size_t i = 0; i <= cycle->dual_vertices.size(); ++i) {
            auto [x, y] = centroid(cycle->dual_vertices[i % cycle->dual_vertices.size()]);
            os << x << ',' << y << ' ';
        }
        os << "'/>\n";
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        const char* fill = "#444";
        if (partition) fill = partition->part_of[v] == 0 ? "#2ca02c" : "#ff7f0e";
        os << "<circle cx='" << X(v) << "' cy='" << Y(v) << "' r='6' fill='" << fill << "'/>\n"
           << "<text x='" << X(v) + 8 << "' y='" << Y(v) - 8 << "' font-size='11'>" << v
           << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace barnette::svg
