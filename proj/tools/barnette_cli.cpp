// Command line surface: validate, hamiltonize, count, generate, convert, check.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "barnette/goodcolor.hpp"
#include "barnette/io.hpp"
#include "barnette/oracle.hpp"
#include "barnette/stein.hpp"
#include "barnette/svg.hpp"
#include "barnette/synth.hpp"
#include "json.hpp"

using namespace barnette;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitHypothesis = 2;

struct Options {
    std::string input = "-";
    std::string format = "auto";  // auto | planar_code | rotation-text
    std::string treat_as = "auto";  // auto | G | P
    bool as_json = false;
    bool trace = false;
    std::string svg_dir;
    int cap_oracle = 32;
    unsigned seed = 0;
    int jobs = 1;
};

std::vector<PlaneGraph> load(const Options& opt) {
    auto parse = [&](std::istream& in) {
        if (opt.format == "planar_code") return io::read_planar_code(in);
        if (opt.format == "rotation-text") return std::vector<PlaneGraph>{io::read_rotation_text(in)};
        return io::read_auto(in);
    };
    if (opt.input == "-") return parse(std::cin);
    std::ifstream f(opt.input, std::ios::binary);
    if (!f) fail(errc::bad_input, "cannot open " + opt.input);
    return parse(f);
}

// Recognize the role of an input graph: a triangulation is processed as G,
// a cubic plane graph is dualized first.
struct Resolved {
    PlaneGraph g;                     // Eulerian triangulation driving the pipeline
    std::optional<PlaneGraph> cubic;  // original graph when the input was cubic
    std::vector<int> cubic_faces;     // vertex of the cubic input -> face id of g
};

Resolved resolve_input(const PlaneGraph& in, const std::string& treat_as) {
    bool cubic = true, triangulated = true;
    for (int v = 0; v < in.vertex_count(); ++v) cubic &= in.degree(v) == 3;
    for (const Face& f : in.faces()) triangulated &= f.length() == 3;
    bool as_cubic;
    if (treat_as == "P")
        as_cubic = true;
    else if (treat_as == "G")
        as_cubic = false;
    else if (cubic && !triangulated)
        as_cubic = true;
    else if (!cubic && triangulated)
        as_cubic = false;
    else if (cubic && triangulated)
        fail(errc::bad_input, "ambiguous input (K4-like); pass --treat-as");
    else
        fail(errc::bad_input, "input is neither cubic nor a triangulation");

    Resolved out;
    if (as_cubic) {
        if (!is_k_connected(in, 3)) fail(errc::bad_input, "cubic input must be 3-connected");
        if (!is_bipartite(in)) fail(errc::bad_input, "cubic input must be bipartite");
        DualResult d = dual(in);
        out.cubic = in;
        out.g = std::move(d.graph);
        out.cubic_faces = primal_vertex_faces(in, out.g);
    } else {
        out.g = in;
    }
    require_eulerian_triangulation(out.g);
    return out;
}

int exit_for(const graph_error& e) {
    switch (e.code()) {
        case errc::hypothesis_not_met:
        case errc::hypothesis_failed:
            return kExitHypothesis;
        default:
            return kExitInvalid;
    }
}

void emit_svg(const Options& opt, const std::string& stem, const PlaneGraph& g,
              const ForestBipartition* part, const HamiltonCycle* cycle) {
    if (opt.svg_dir.empty()) return;
    std::filesystem::create_directories(opt.svg_dir);
    std::ofstream f(opt.svg_dir + "/" + stem + ".svg");
    f << svg::render(g, part, cycle);
}

int cmd_validate(const Options& opt) {
    int worst = kExitOk;
    auto graphs = load(opt);
    for (size_t i = 0; i < graphs.size(); ++i) {
        Diagnostics d = validate_eulerian_triangulation(graphs[i]);
        if (opt.as_json) {
            json j{{"index", i}, {"ok", d.ok}, {"three_cycle", d.three_cycle},
                   {"errors", d.errors}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << d.report();
        }
        if (!d.ok) worst = kExitInvalid;
    }
    return worst;
}

int cmd_hamiltonize(const Options& opt) {
    auto graphs = load(opt);
    int worst = kExitOk;

    auto run_one = [&](const PlaneGraph& input, size_t index) -> std::pair<int, std::string> {
        std::ostringstream out;
        try {
            Resolved res = resolve_input(input, opt.treat_as);
            HamiltonizeResult ham = hamiltonize(res.g);
            verify_hamilton_cycle(res.g, ham.cycle);
            if (opt.as_json) {
                json j{{"index", index},
                       {"family", ham.family},
                       {"dual_cycle", ham.cycle.dual_vertices},
                       {"crossing_edges", ham.cycle.crossing_edges},
                       {"partition", io::write_partition(ham.partition.part_of)}};
                if (res.cubic) {
                    // Express the cycle as vertices of the cubic input.
                    std::vector<int> face_to_vertex(res.g.face_count(), -1);
                    for (size_t v = 0; v < res.cubic_faces.size(); ++v)
                        face_to_vertex[res.cubic_faces[v]] = static_cast<int>(v);
                    std::vector<int> cyc;
                    for (int f : ham.cycle.dual_vertices) cyc.push_back(face_to_vertex[f]);
                    j["cycle"] = cyc;
                }
                if (opt.trace) {
                    std::vector<std::string> lines;
                    for (const auto& s : ham.steps) lines.push_back(s.line());
                    j["trace"] = lines;
                }
                out << j.dump() << "\n";
            } else {
                if (opt.trace)
                    for (const auto& s : ham.steps) out << "# " << s.line() << "\n";
                out << ham.cycle.to_line() << "\n";
            }
            emit_svg(opt, "hamiltonize-" + std::to_string(index), res.g, &ham.partition,
                     &ham.cycle);
            return {kExitOk, out.str()};
        } catch (const graph_error& e) {
            out << (opt.as_json
                        ? json{{"index", index}, {"error", e.what()}}.dump() + "\n"
                        : std::string("ERR ") + e.what() + "\n");
            return {exit_for(e), out.str()};
        }
    };

    // Bounded worker pool; output strictly in input order.
    std::vector<std::future<std::pair<int, std::string>>> futures(graphs.size());
    size_t next = 0, done = 0;
    size_t width = std::max(1, opt.jobs);
    while (done < graphs.size()) {
        while (next < graphs.size() && next - done < width) {
            futures[next] = std::async(std::launch::async, run_one, std::cref(graphs[next]), next);
            ++next;
        }
        auto [code, text] = futures[done].get();
        std::cout << text;
        if (code != kExitOk) worst = std::max(worst, code);
        ++done;
    }
    return worst;
}

int cmd_count(const Options& opt) {
    auto graphs = load(opt);
    int worst = kExitOk;
    for (size_t i = 0; i < graphs.size(); ++i) {
        try {
            Resolved res = resolve_input(graphs[i], opt.treat_as);
            TriColoring c = three_coloring(res.g);
            BigSmallSplit split = big_small_split(res.g);
            LowerBoundResult r = hamilton_lower_bound(res.g, c, split);
            if (opt.as_json) {
                json cycles = json::array();
                for (const auto& h : r.cycles) cycles.push_back(h.dual_vertices);
                std::cout << json{{"index", i}, {"k", r.k}, {"count", r.cycles.size()},
                                  {"cycles", cycles}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << "k=" << r.k << " cycles=" << r.cycles.size() << "\n";
                for (const auto& h : r.cycles) std::cout << h.to_line() << "\n";
            }
        } catch (const graph_error& e) {
            std::cout << (opt.as_json ? json{{"index", i}, {"error", e.what()}}.dump() + "\n"
                                      : std::string("ERR ") + e.what() + "\n");
            worst = std::max(worst, exit_for(e));
        }
    }
    return worst;
}

int cmd_generate(const Options& opt, const std::string& output, const std::string& only) {
    auto instances = synth::corpus(opt.seed);
    std::vector<PlaneGraph> graphs;
    json tags = json::array();
    for (const auto& inst : instances) {
        if (!only.empty() && inst.name != only) continue;
        graphs.push_back(inst.graph);
        tags.push_back({{"name", inst.name},
                        {"family", inst.family},
                        {"big", inst.big_count},
                        {"big_bound", inst.big_bound},
                        {"mixed_faces", inst.mixed_faces},
                        {"vertices", inst.graph.vertex_count()}});
    }
    if (output == "-") {
        io::write_planar_code(std::cout, graphs);
    } else {
        std::ofstream f(output, std::ios::binary);
        io::write_planar_code(f, graphs);
        std::ofstream sidecar(output + ".json");
        sidecar << tags.dump(2) << "\n";
    }
    if (opt.as_json && output != "-") std::cout << tags.dump() << "\n";
    return kExitOk;
}

int cmd_convert(const Options& opt, const std::string& to) {
    auto graphs = load(opt);
    if (to == "planar_code") {
        io::write_planar_code(std::cout, graphs);
    } else if (to == "rotation-text") {
        for (const auto& g : graphs) std::cout << io::write_rotation_text(g);
    } else if (to == "svg") {
        for (const auto& g : graphs) std::cout << svg::render(g);
    } else {
        fail(errc::bad_input, "unknown target format " + to);
    }
    return kExitOk;
}

int cmd_check(const Options& opt) {
    auto graphs = load(opt);
    int worst = kExitOk;
    for (size_t i = 0; i < graphs.size(); ++i) {
        try {
            Resolved res = resolve_input(graphs[i], opt.treat_as);
            auto rep = oracle::cross_check_stein(res.g, opt.cap_oracle,
                                                 std::min(opt.cap_oracle, 20));
            json j{{"index", i},
                   {"hamilton_count", rep.hamilton_count},
                   {"forest_bipartition_count", rep.forest_bipartition_count},
                   {"agreement", rep.agreement}};
            // The constructed cycle must appear in the enumerated list.
            try {
                HamiltonizeResult ham = hamiltonize(res.g);
                DualResult d = dual(res.g);
                auto cycles = oracle::enumerate_hamilton_cycles(d.graph, opt.cap_oracle);
                std::vector<std::pair<int, int>> mine;
                for (int e : ham.cycle.crossing_edges)
                    mine.push_back(d.graph.edges()[d.correspondence.primal_to_dual[e]]);
                std::sort(mine.begin(), mine.end());
                bool member = false;
                for (const auto& cyc : cycles.cycles) member |= cyc == mine;
                j["pipeline_cycle_in_oracle"] = member;
                if (!member) worst = kExitInvalid;
            } catch (const graph_error&) {
                j["pipeline_cycle_in_oracle"] = nullptr;  // outside the hypothesis
            }
            std::cout << j.dump() << "\n";
            if (!rep.agreement) worst = kExitInvalid;
        } catch (const graph_error& e) {
            std::cout << json{{"index", i}, {"error", e.what()}}.dump() << "\n";
            worst = std::max(worst, exit_for(e));
        }
    }
    return worst;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constructive Hamiltonicity for duals of Eulerian plane triangulations"};
    app.require_subcommand(1);

    Options opt;
    if (const char* cap = std::getenv("BARNETTE_CAP")) opt.cap_oracle = std::atoi(cap);

    auto add_common = [&](CLI::App* sub, bool with_input = true) {
        if (with_input) sub->add_option("input", opt.input, "input file or - for stdin");
        sub->add_option("--format", opt.format, "planar_code | rotation-text | auto");
        sub->add_option("--treat-as", opt.treat_as, "G (triangulation) | P (cubic) | auto");
        sub->add_flag("--json", opt.as_json, "machine readable output");
        sub->add_flag("--trace", opt.trace, "emit engine step trace");
        sub->add_option("--emit-svg", opt.svg_dir, "directory for SVG snapshots");
        sub->add_option("--cap-oracle", opt.cap_oracle, "oracle size cap");
        sub->add_option("--seed", opt.seed, "corpus seed");
        sub->add_option("--jobs", opt.jobs, "worker pool width");
    };

    auto* validate = app.add_subcommand("validate", "triangulation diagnostics");
    add_common(validate);
    auto* ham = app.add_subcommand("hamiltonize", "construct a verified Hamilton cycle");
    add_common(ham);
    auto* count = app.add_subcommand("count", "multiplicity lower bound with witnesses");
    add_common(count);
    auto* gen = app.add_subcommand("generate", "emit the deterministic corpus");
    std::string output = "-";
    std::string only;
    gen->add_option("--output", output, "planar_code file (JSON sidecar beside it)");
    gen->add_option("--only", only, "restrict to the named instance");
    add_common(gen, false);
    auto* conv = app.add_subcommand("convert", "convert between formats");
    std::string to = "rotation-text";
    conv->add_option("--to", to, "planar_code | rotation-text | svg");
    add_common(conv);
    auto* check = app.add_subcommand("check", "oracle cross check");
    add_common(check);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(opt);
        if (ham->parsed()) return cmd_hamiltonize(opt);
        if (count->parsed()) return cmd_count(opt);
        if (gen->parsed()) return cmd_generate(opt, output, only);
        if (conv->parsed()) return cmd_convert(opt, to);
        if (check->parsed()) return cmd_check(opt);
    } catch (const graph_error& e) {
        std::cerr << "ERR " << e.what() << "\n";
        return exit_for(e);
    }
    return kExitOk;
}
