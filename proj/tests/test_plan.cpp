#include <doctest.h>

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "brickplan/coverage.hpp"
#include "brickplan/errors.hpp"
#include "brickplan/heuristic.hpp"
#include "brickplan/plan.hpp"
#include "brickplan/render.hpp"
#include "support/testutil.hpp"

using namespace brickplan;

namespace {

VoxelGrid solid(int nx, int ny, int nz) {
    VoxelGrid g(nx, ny, nz);
    for (int z = 0; z < nz; ++z)
        for (int y = 0; y < ny; ++y)
            for (int x = 0; x < nx; ++x) g.set(x, y, z, true);
    return g;
}

std::size_t count_substr(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size()))
        ++n;
    return n;
}

}  // namespace

TEST_CASE("plan groups placements into one step per layer, bottom-up") {
    const VoxelGrid grid = solid(4, 4, 3);
    const auto res = optimize(grid, Inventory::standard(), CostParams{});
    const BuildPlan plan = make_plan(res.build_list, grid);
    REQUIRE(plan.steps.size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(plan.steps[i].index == i + 1);
        CHECK(plan.steps[i].layer == i);
        for (const Placement& p : plan.steps[i].new_placements) CHECK(p.z == i);
    }
    CHECK(plan.total_bricks() == res.build_list.size());
}

TEST_CASE("single brick plan") {
    VoxelGrid grid(1, 1, 1);
    grid.set(0, 0, 0, true);
    const BuildPlan plan = make_plan({Placement{{1, 1}, 0, 0, 0, Axis::X}}, grid);
    REQUIRE(plan.steps.size() == 1);
    REQUIRE(plan.inventory_counts.size() == 1);
    CHECK(plan.inventory_counts[0].first == BrickKind{1, 1});
    CHECK(plan.inventory_counts[0].second == 1);
}

TEST_CASE("per-kind counts recomputed independently from the build list") {
    const VoxelGrid grid = solid(4, 4, 2);
    const auto res = optimize(grid, Inventory::standard(), CostParams{});
    const BuildPlan plan = make_plan(res.build_list, grid);

    std::map<std::pair<int, int>, int> expected;
    for (const Placement& p : res.build_list) ++expected[{p.kind.width, p.kind.length}];
    int total = 0;
    for (const auto& [kind, count] : plan.inventory_counts) {
        CHECK(expected.at({kind.width, kind.length}) == count);
        total += count;
    }
    CHECK(static_cast<std::size_t>(total) == res.build_list.size());
}

TEST_CASE("plan rejects non-partitions with a report") {
    const VoxelGrid grid = solid(2, 2, 1);
    CHECK_THROWS_WITH_AS(make_plan({Placement{{1, 2}, 0, 0, 0, Axis::X}}, grid),
                         doctest::Contains("uncovered"), ValidationError);
}

TEST_CASE("flattening steps reproduces the build list as a layer-ordered multiset") {
    const VoxelGrid grid = solid(5, 3, 4);
    CostParams params;
    params.seed = 17;
    const auto res = optimize(grid, Inventory::standard(), params);
    const BuildPlan plan = make_plan(res.build_list, grid);

    const auto flat = plan.cumulative_through(static_cast<int>(plan.steps.size()));
    CHECK(flat.size() == res.build_list.size());
    for (std::size_t i = 1; i < flat.size(); ++i) CHECK(flat[i - 1].z <= flat[i].z);

    auto key = [](const Placement& p) {
        return std::tuple(p.x, p.y, p.z, p.kind.width, p.kind.length, int(p.axis));
    };
    std::multiset<std::tuple<int, int, int, int, int, int>> a, b;
    for (const auto& p : flat) a.insert(key(p));
    for (const auto& p : res.build_list) b.insert(key(p));
    CHECK(a == b);
}

TEST_CASE("export/import round trip is byte identical") {
    const VoxelGrid grid = solid(4, 2, 2);
    const auto res = optimize(grid, Inventory::standard(), CostParams{});
    const BuildPlan plan = make_plan(res.build_list, grid);

    const std::string first = export_plan(plan).dump(2);
    const BuildPlan back = import_plan(nlohmann::json::parse(first));
    const std::string second = export_plan(back).dump(2);
    CHECK(first == second);
    CHECK(back.grid_dims == plan.grid_dims);
    CHECK(plan.total_bricks() == back.total_bricks());
}

TEST_CASE("plan JSON matches the pinned golden file") {
    VoxelGrid grid(4, 1, 1);
    for (int x = 0; x < 4; ++x) grid.set(x, 0, 0, true);
    const BuildPlan plan = make_plan(
        {Placement{{1, 2}, 0, 0, 0, Axis::X}, Placement{{1, 2}, 2, 0, 0, Axis::X}}, grid);
    const std::string got = export_plan(plan).dump(2) + "\n";

    std::ifstream in(std::string(BRICKPLAN_TEST_DATA) + "/golden_plan.json", std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    CHECK(got == ss.str());
}

TEST_CASE("import rejects malformed plans") {
    CHECK_THROWS_AS(import_plan(nlohmann::json::parse("{}")), ParseError);
    CHECK_THROWS_AS(import_plan(nlohmann::json::parse("{\"grid_dims\":[1,1],\"inventory\":[],"
                                                      "\"steps\":[]}")),
                    ParseError);
}

TEST_CASE("top view: bold rects are exactly the step's layer coverage") {
    const VoxelGrid grid = solid(4, 3, 2);
    const auto res = optimize(grid, Inventory::standard(), CostParams{});
    const BuildPlan plan = make_plan(res.build_list, grid);

    for (const BuildStep& step : plan.steps) {
        std::set<std::pair<int, int>> bold_cells, layer_cells;
        for (const ViewRect& r : top_view_rects(plan, step.index)) {
            if (!r.bold) continue;
            for (int dy = 0; dy < r.h; ++dy)
                for (int dx = 0; dx < r.w; ++dx) bold_cells.insert({r.x + dx, r.y + dy});
        }
        for (const Placement& p : step.new_placements)
            p.for_each_cell([&](int x, int y, int) { layer_cells.insert({x, y}); });
        CHECK(bold_cells == layer_cells);
    }
}

TEST_CASE("top view of a single 1x4 brick is one bold 4-module rectangle") {
    VoxelGrid grid(4, 1, 1);
    for (int x = 0; x < 4; ++x) grid.set(x, 0, 0, true);
    const BuildPlan plan = make_plan({Placement{{1, 4}, 0, 0, 0, Axis::X}}, grid);
    const std::string svg = render_top_view(plan, 1);
    CHECK(count_substr(svg, "stroke-width=\"2\"") == 1);
    CHECK(svg.find("width=\"80\" height=\"20\"") != std::string::npos);
}

TEST_CASE("top view canvas is stable across steps") {
    const VoxelGrid grid = solid(3, 2, 2);
    const auto res = optimize(grid, Inventory::standard(), CostParams{});
    const BuildPlan plan = make_plan(res.build_list, grid);
    REQUIRE(plan.steps.size() == 2);
    const std::string s1 = render_top_view(plan, 1);
    const std::string s2 = render_top_view(plan, 2);
    const auto header = [](const std::string& s) { return s.substr(0, s.find('>')); };
    CHECK(header(s1) == header(s2));
}

TEST_CASE("render is deterministic") {
    const VoxelGrid grid = solid(4, 4, 2);
    const auto res = optimize(grid, Inventory::standard(), CostParams{});
    const BuildPlan plan = make_plan(res.build_list, grid);
    CHECK(render_top_view(plan, 1) == render_top_view(plan, 1));
    CHECK(render_side_view(plan, 2) == render_side_view(plan, 2));
}

TEST_CASE("side view silhouette follows column heights") {
    // Staircase: columns x=0..2 rise 1, 2, 3 layers.
    VoxelGrid grid(3, 1, 3);
    std::vector<Placement> placements;
    for (int x = 0; x < 3; ++x)
        for (int z = 0; z <= x; ++z) {
            grid.set(x, 0, z, true);
            placements.push_back(Placement{{1, 1}, x, 0, z, Axis::X});
        }
    const BuildPlan plan = make_plan(placements, grid);
    REQUIRE(plan.steps.size() == 3);

    // filled modules per through_step: step1 -> 3 (bottom layer),
    // step2 -> 3+2, step3 -> 3+2+1
    CHECK(count_substr(render_side_view(plan, 1), "stroke=\"#777777\"") == 3);
    CHECK(count_substr(render_side_view(plan, 2), "stroke=\"#777777\"") == 5);
    CHECK(count_substr(render_side_view(plan, 3), "stroke=\"#777777\"") == 6);

    // full cube silhouette for comparison: 4x4x4 -> 16 modules
    const VoxelGrid cube = solid(4, 4, 4);
    const auto res = optimize(cube, Inventory::standard(), CostParams{});
    const BuildPlan cube_plan = make_plan(res.build_list, cube);
    CHECK(count_substr(render_side_view(cube_plan, 4), "stroke=\"#777777\"") == 16);
    CHECK(count_substr(render_side_view(cube_plan, 1), "stroke=\"#777777\"") == 4);
}

TEST_CASE("side view rejects out-of-range steps") {
    const VoxelGrid grid = solid(2, 2, 1);
    const auto res = optimize(grid, Inventory::standard(), CostParams{});
    const BuildPlan plan = make_plan(res.build_list, grid);
    CHECK_THROWS_AS(render_side_view(plan, 0), ValidationError);
    CHECK_THROWS_AS(render_side_view(plan, 2), ValidationError);
    CHECK_THROWS_AS(render_top_view(plan, 5), ValidationError);
}
