#include "barnette/io.hpp"

#include <sstream>

#include "barnette/synth.hpp"
#include "doctest.h"

using namespace barnette;

TEST_CASE("rotation text round trip") {
    PlaneGraph g = synth::octahedron();
    std::string text = io::write_rotation_text(g);
    std::istringstream in(text);
    PlaneGraph back = io::read_rotation_text(in);
    CHECK(back.rotations() == g.rotations());
}

TEST_CASE("planar_code byte-identical round trip") {
    std::vector<PlaneGraph> graphs{synth::octahedron(), synth::cube(), synth::double_wheel(3)};
    std::ostringstream out;
    io::write_planar_code(out, graphs);
    std::string bytes = out.str();

    std::istringstream in(bytes);
    auto back = io::read_planar_code(in);
    REQUIRE(back.size() == graphs.size());
    for (size_t i = 0; i < graphs.size(); ++i) CHECK(back[i].rotations() == graphs[i].rotations());

    std::ostringstream again;
    io::write_planar_code(again, back);
    CHECK(again.str() == bytes);
}

TEST_CASE("planar_code then text then planar_code is byte-identical") {
    PlaneGraph g = synth::cube14().graph;
    std::ostringstream pc1;
    io::write_planar_code(pc1, {g});

    std::istringstream astext(io::write_rotation_text(g));
    PlaneGraph via = io::read_rotation_text(astext);
    std::ostringstream pc2;
    io::write_planar_code(pc2, {via});
    CHECK(pc1.str() == pc2.str());
}

TEST_CASE("auto detection") {
    std::ostringstream out;
    io::write_planar_code(out, {synth::octahedron()});
    std::istringstream bin(out.str());
    CHECK(io::read_auto(bin).size() == 1);

    std::istringstream text(io::write_rotation_text(synth::cube()));
    auto graphs = io::read_auto(text);
    REQUIRE(graphs.size() == 1);
    CHECK(graphs[0].vertex_count() == 8);
}

TEST_CASE("partition lines") {
    std::vector<int> parts{0, 1, 1, 0};
    std::string text = io::write_partition(parts);
    std::istringstream in(text);
    CHECK(io::read_partition(in) == parts);
}

TEST_CASE("bad inputs are flagged") {
    std::istringstream missing("");
    CHECK_THROWS_AS(io::read_rotation_text(missing), graph_error);
    std::istringstream badheader("garbage");
    CHECK_THROWS_AS(io::read_planar_code(badheader), graph_error);
}
