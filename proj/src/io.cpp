#include "barnette/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace barnette::io {

namespace {
constexpr const char* kPlanarCodeHeader = ">>planar_code<<";
}

PlaneGraph read_rotation_text(std::istream& in) {
    std::string line;
    int n = -1;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        if (ls >> n) break;
    }
    if (n < 0) fail(errc::bad_input, "missing vertex count");
    std::vector<std::vector<int>> rot(n);
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n;) {
        if (!std::getline(in, line)) fail(errc::bad_input, "truncated rotation list");
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        int v;
        char colon;
        if (!(ls >> v >> colon) || colon != ':')
            fail(errc::bad_input, "expected `v: a b c ...`, got: " + line);
        if (v < 0 || v >= n || seen[v]) fail(errc::bad_input, "bad vertex id in: " + line);
        seen[v] = 1;
        int w;
        while (ls >> w) rot[v].push_back(w);
        ++i;
    }
    return PlaneGraph::from_rotations(std::move(rot));
}

std::string write_rotation_text(const PlaneGraph& g) {
    std::ostringstream os;
    os << g.vertex_count() << '\n';
    for (int v = 0; v < g.vertex_count(); ++v) {
        os << v << ':';
        for (int w : g.neighbors(v)) os << ' ' << w;
        os << '\n';
    }
    return os.str();
}

std::vector<PlaneGraph> read_planar_code(std::istream& in) {
    std::string header(std::string(kPlanarCodeHeader).size(), '\0');
    in.read(header.data(), static_cast<std::streamsize>(header.size()));
    if (in.gcount() != static_cast<std::streamsize>(header.size()) || header != kPlanarCodeHeader)
        fail(errc::bad_input, "missing planar_code header");
    std::vector<PlaneGraph> out;
    while (true) {
        int n = in.get();
        if (n == std::char_traits<char>::eof()) break;
        if (n == 0) fail(errc::bad_input, "zero vertex count in planar_code");
        std::vector<std::vector<int>> rot(n);
        for (int v = 0; v < n; ++v) {
            while (true) {
                int b = in.get();
                if (b == std::char_traits<char>::eof())
                    fail(errc::bad_input, "truncated planar_code record");
                if (b == 0) break;
                rot[v].push_back(b - 1);
            }
        }
        out.push_back(PlaneGraph::from_rotations(std::move(rot)));
    }
    return out;
}

void write_planar_code(std::ostream& out, const std::vector<PlaneGraph>& graphs, bool with_header) {
    if (with_header) out << kPlanarCodeHeader;
    for (const PlaneGraph& g : graphs) {
        if (g.vertex_count() > 255) fail(errc::bad_input, "planar_code limited to 255 vertices");
        out.put(static_cast<char>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v) {
            for (int w : g.neighbors(v)) out.put(static_cast<char>(w + 1));
            out.put(0);
        }
    }
}

std::vector<PlaneGraph> read_auto(std::istream& in) {
    int c = in.peek();
    if (c == '>') return read_planar_code(in);
    return {read_rotation_text(in)};
}

std::string write_partition(const std::vector<int>& part_of) {
    std::ostringstream os;
    for (size_t v = 0; v < part_of.size(); ++v)
        os << v << ':' << (part_of[v] == 0 ? 'A' : 'B') << '\n';
    return os.str();
}

std::vector<int> read_partition(std::istream& in) {
    std::vector<int> part;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) fail(errc::bad_input, "expected `v:part` line");
        int v = std::stoi(line.substr(0, colon));
        char p = line[colon + 1];
        if (static_cast<int>(part.size()) <= v) part.resize(v + 1, -1);
        part[v] = (p == 'A' || p == 'a') ? 0 : 1;
    }
    return part;
}

}  // namespace barnette::io
