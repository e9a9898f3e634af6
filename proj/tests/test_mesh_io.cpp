#include <doctest.h>

#include "brickplan/errors.hpp"
#include "brickplan/mesh_io.hpp"
#include "support/testutil.hpp"

using brickplan::parse_obj;

TEST_CASE("cube obj parses to 8 vertices and 12 triangles") {
    const auto mesh = parse_obj(testutil::cube_obj());
    CHECK(mesh.vertices.size() == 8);
    CHECK(mesh.triangles.size() == 12);
}

TEST_CASE("quad faces are fan-triangulated") {
    const auto mesh = parse_obj(
        "v 0 0 0\nv 1 0 0\nv 1 1 0\nv 0 1 0\n"
        "f 1 2 3 4\n");
    REQUIRE(mesh.triangles.size() == 2);
    CHECK(mesh.triangles[0] == std::array<std::uint32_t, 3>{0, 1, 2});
    CHECK(mesh.triangles[1] == std::array<std::uint32_t, 3>{0, 2, 3});
}

TEST_CASE("pentagon fans into three triangles") {
    const auto mesh = parse_obj(
        "v 0 0 0\nv 1 0 0\nv 2 1 0\nv 1 2 0\nv 0 1 0\n"
        "f 1 2 3 4 5\n");
    CHECK(mesh.triangles.size() == 3);
}

TEST_CASE("out-of-range face index is a parse error naming the index") {
    const char* text = "v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 9\n";
    CHECK_THROWS_WITH_AS(parse_obj(text), doctest::Contains("9"), brickplan::ParseError);
    try {
        parse_obj(text);
    } catch (const brickplan::ParseError& e) {
        CHECK(e.line() == 4);
    }
}

TEST_CASE("negative indices are rejected") {
    CHECK_THROWS_AS(parse_obj("v 0 0 0\nv 1 0 0\nv 0 1 0\nf -1 -2 -3\n"), brickplan::ParseError);
}

TEST_CASE("malformed vertex coordinate reports its line") {
    try {
        parse_obj("v 0 0 0\nv 1 oops 0\n");
        FAIL("expected ParseError");
    } catch (const brickplan::ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("empty geometry is rejected") {
    CHECK_THROWS_AS(parse_obj(""), brickplan::ValidationError);
    CHECK_THROWS_AS(parse_obj("# just a comment\n"), brickplan::ValidationError);
    CHECK_THROWS_AS(parse_obj("v 0 0 0\nv 1 0 0\nv 0 1 0\n"), brickplan::ValidationError);
}

TEST_CASE("faces with fewer than three vertices are rejected") {
    CHECK_THROWS_AS(parse_obj("v 0 0 0\nv 1 0 0\nf 1 2\n"), brickplan::ParseError);
}

TEST_CASE("unknown records and index/texture/normal forms are tolerated") {
    const auto mesh = parse_obj(
        "mtllib scene.mtl\no thing\n"
        "v 0 0 0\nv 1 0 0\nv 0 1 0\n"
        "vt 0 0\nvn 0 0 1\ns off\n"
        "f 1/1/1 2/1/1 3/1/1\n");
    CHECK(mesh.triangles.size() == 1);
}
